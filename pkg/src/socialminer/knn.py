"""k-nearest-neighbor classification of free text against a pre-classified
sample corpus.

A target text is reduced to a count vector over its own highest-frequency
terms; the same projection is applied to every sample document. One Euclidean
distance per sample document forms the distance matrix, and the majority label
among the k nearest samples wins.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Sequence

from .errors import CorpusError, DimensionError, ParameterError, StorageError
from .features import TermCounts, count_vector, select_features, term_counts, term_frequency
from .textprep import DEFAULT_STOPWORDS, prepare


class ClassLabel(str, Enum):
    """Closed set of personality class levels, plus the Unclassifiable
    sentinel for texts that are empty after preprocessing."""

    AGGRESSIVE = "Aggressive"
    HONEST = "Honest"
    ROMANTIC = "Romantic"
    SINCERE = "Sincere"
    DISHONEST = "Dishonest"
    FRIENDLY = "Friendly"
    EAGER_TO_LEARN = "Eager_to_Learn"
    CONSERVATIVE = "Conservative"
    EMOTIONAL = "Emotional"
    LAZY = "Lazy"
    UNCLASSIFIABLE = "Unclassifiable"


PERSONALITY_LABELS: tuple[ClassLabel, ...] = tuple(
    label for label in ClassLabel if label is not ClassLabel.UNCLASSIFIABLE
)


@dataclass
class SampleDocument:
    """A pre-classified known text; tokens and counts are cached once so a
    corpus can be reused across many classifications."""

    doc_id: str
    text: str
    label: ClassLabel
    tokens: list[str] = field(default_factory=list)
    counts: TermCounts = field(default_factory=lambda: TermCounts({}, 0))

    @classmethod
    def from_text(
        cls,
        doc_id: str,
        text: str,
        label: ClassLabel,
        stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    ) -> "SampleDocument":
        tokens = prepare(text, stopwords)
        return cls(doc_id, text, label, tokens, term_counts(tokens))


class DistanceRow(NamedTuple):
    doc_id: str
    label: ClassLabel
    distance: float


DistanceMatrix = list[DistanceRow]


def squared_diff_row(
    target_vec: Sequence[int], sample_vec: Sequence[int]
) -> list[float]:
    """Componentwise squared differences between two equal-length vectors."""
    if len(target_vec) != len(sample_vec):
        raise DimensionError(
            f"vector lengths differ: {len(target_vec)} vs {len(sample_vec)}"
        )
    return [float(t - s) ** 2 for t, s in zip(target_vec, sample_vec)]


def euclidean_distance(a: Sequence[int], b: Sequence[int]) -> float:
    """Length of the line segment between two count vectors: the square root
    of the summed squared differences."""
    if not a or not b:
        raise DimensionError("vectors must have at least one component")
    return math.sqrt(sum(squared_diff_row(a, b)))


def distance_matrix(
    target_vec: Sequence[int],
    samples: Sequence[SampleDocument],
    features: Sequence[str],
) -> DistanceMatrix:
    """One distance per sample document, in corpus order."""
    if not samples:
        raise CorpusError("sample corpus is empty")
    if not features:
        raise DimensionError("feature set is empty")
    rows = []
    for sample in samples:
        sample_vec = count_vector(features, sample.counts)
        rows.append(
            DistanceRow(sample.doc_id, sample.label, euclidean_distance(target_vec, sample_vec))
        )
    return rows


def knn_classify(
    dm: DistanceMatrix, k: int
) -> tuple[ClassLabel, list[DistanceRow]]:
    """Majority vote among the k rows at smallest distance.

    Rows are ordered by (distance, doc_id) so equal distances resolve
    deterministically. Vote ties go to the label with the smaller summed
    distance over its voting rows, then to the smaller label string.
    Returns the winning label and the k rows that voted.
    """
    if not dm:
        raise CorpusError("distance matrix is empty")
    if k < 1 or k > len(dm):
        raise ParameterError(f"k={k} outside [1, {len(dm)}]")
    nearest = sorted(dm, key=lambda r: (r.distance, r.doc_id))[:k]

    votes: dict[ClassLabel, int] = {}
    summed: dict[ClassLabel, float] = {}
    for row in nearest:
        votes[row.label] = votes.get(row.label, 0) + 1
        summed[row.label] = summed.get(row.label, 0.0) + row.distance
    top = max(votes.values())
    tied = [label for label, n in votes.items() if n == top]
    winner = min(tied, key=lambda label: (summed[label], label.value))
    return winner, nearest


def classify_text(
    text: str,
    corpus: Sequence[SampleDocument],
    n_features: int = 50,
    k: int = 5,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
) -> ClassLabel:
    """Full classification of one raw text against the sample corpus."""
    if not corpus:
        raise CorpusError("sample corpus is empty")
    if n_features < 1:
        raise ParameterError(f"n_features={n_features} must be >= 1")
    tokens = prepare(text, stopwords)
    if not tokens:
        return ClassLabel.UNCLASSIFIABLE
    target_counts = term_counts(tokens)
    features = select_features(term_frequency(target_counts), n_features)
    target_vec = count_vector(features, target_counts)
    dm = distance_matrix(target_vec, corpus, features)
    label, _ = knn_classify(dm, k)
    return label


def load_sample_corpus(
    path: str | Path, stopwords: frozenset[str] = DEFAULT_STOPWORDS
) -> list[SampleDocument]:
    """Read a sample corpus file: UTF-8 JSON lines with id, label and text.

    Labels must belong to the closed enumeration (never Unclassifiable),
    texts must be non-empty and ids unique.
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StorageError(f"cannot read sample corpus {path}: {exc}") from exc

    samples: list[SampleDocument] = []
    seen: set[str] = set()
    for line_no, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{path}:{line_no}: not valid JSON ({exc})") from exc
        if not isinstance(record, dict) or set(record) != {"id", "label", "text"}:
            raise CorpusError(f"{path}:{line_no}: expected keys id, label, text")
        doc_id, label_text, text = record["id"], record["label"], record["text"]
        if not isinstance(doc_id, str) or not doc_id:
            raise CorpusError(f"{path}:{line_no}: id must be a non-empty string")
        if doc_id in seen:
            raise CorpusError(f"{path}:{line_no}: duplicate document id {doc_id!r}")
        seen.add(doc_id)
        try:
            label = ClassLabel(label_text)
        except ValueError:
            raise CorpusError(f"{path}:{line_no}: unknown class label {label_text!r}")
        if label is ClassLabel.UNCLASSIFIABLE:
            raise CorpusError(f"{path}:{line_no}: sample documents cannot be Unclassifiable")
        if not isinstance(text, str) or not text.strip():
            raise CorpusError(f"{path}:{line_no}: text must be non-empty")
        samples.append(SampleDocument.from_text(doc_id, text, label, stopwords))
    return samples
