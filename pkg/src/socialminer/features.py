"""Term counting, normalized term frequency and feature selection.

The feature vocabulary is always selected from the *target* document's TF
ranking; occurrence counts are then projected onto that vocabulary for the
target and for every sample document. Distance computations use the raw
occurrence counts, not the normalized frequencies — normalization only ranks
the features.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyDocumentError


@dataclass(frozen=True)
class TermCounts:
    """Multiset of term occurrences. ``total`` is the sum of all counts."""

    counts: Mapping[str, int]
    total: int


def term_counts(tokens: Sequence[str]) -> TermCounts:
    """Exact occurrence counts of a stopword-filtered token list."""
    return TermCounts(dict(Counter(tokens)), len(tokens))


def term_frequency(counts: TermCounts) -> dict[str, float]:
    """Normalized term frequency: count of each term over the total count.

    Raises EmptyDocumentError when the document has no tokens (zero
    denominator); callers treat such documents as unclassifiable.
    """
    if counts.total == 0:
        raise EmptyDocumentError("no terms left after preprocessing")
    return {term: n / counts.total for term, n in counts.counts.items()}


def select_features(tf: Mapping[str, float], n: int) -> list[str]:
    """The min(n, vocabulary) terms with highest frequency, descending.

    Equal frequencies are broken lexicographically ascending so the selection
    is deterministic across runs and platforms.
    """
    if not tf:
        raise EmptyDocumentError("cannot select features from an empty document")
    ranked = sorted(tf.items(), key=lambda kv: (-kv[1], kv[0]))
    return [term for term, _ in ranked[:n]]


def count_vector(features: Sequence[str], counts: TermCounts) -> list[int]:
    """Occurrence count of every feature term, 0 where absent, in feature order."""
    return [counts.counts.get(term, 0) for term in features]
