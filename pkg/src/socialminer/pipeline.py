"""Orchestrate the full flow: ingest, classify, bin, ARFF emission and
reports. Every stage persists its output under the run's output directory so
stages can also be run (and re-run) one at a time; identical inputs and
configuration produce byte-identical output trees."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Optional, Sequence

from .arff import build_dataset, emit_arff
from .binning import (
    GapPolicy,
    age_from_birthday,
    age_range,
    bin_activities_interests,
    bin_music_share,
    bin_wall_count,
)
from .errors import ParameterError
from .ingest import (
    ParseIssue,
    Profile,
    RejectionReport,
    load_profiles,
    parse_birthday,
    persist_corpus,
    validate_and_filter,
)
from .io_utils import atomic_write_text
from .knn import ClassLabel, SampleDocument, classify_text, load_sample_corpus
from .report import aggregate, compare, emit_chart, emit_comparison_chart, emit_table
from .textprep import DEFAULT_STOPWORDS, load_stopwords

ACCEPTED_FILE = "accepted.jsonl"
REJECTIONS_FILE = "rejections.json"
CLASSIFIED_FILE = "classified.jsonl"
BINNED_FILE = "binned.jsonl"
ARFF_FILE = "dataset.arff"
SUMMARY_FILE = "summary.json"
FAILURE_MARKER = "FAILED"

_GENDER_MEASURES = (
    ("about_me_class", "about_me"),
    ("wall_count_class", "wall_count"),
    ("music_share_class", "music_share"),
    ("activity_interest_class", "activity_interest"),
)


@dataclass
class RunConfig:
    input_path: Path
    corpus_path: Path
    reference_date: date
    output_dir: Path
    stopword_path: Optional[Path] = None
    n_features: int = 50
    k: int = 5
    gap_policy: GapPolicy = GapPolicy.FIVE_IS_LOW
    run_id: str = "run"

    def validate(self) -> None:
        if self.n_features < 1:
            raise ParameterError(f"n_features must be >= 1, got {self.n_features}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        for name, value in (("input", self.input_path), ("corpus", self.corpus_path)):
            if not str(value):
                raise ParameterError(f"{name} path must be non-empty")
        if not str(self.output_dir):
            raise ParameterError("output directory must be non-empty")
        if not self.run_id or "/" in self.run_id:
            raise ParameterError(f"bad run id {self.run_id!r}")


@dataclass
class RunSummary:
    ingested: int = 0
    accepted: int = 0
    rejected: int = 0
    malformed: int = 0
    classified: int = 0
    unclassifiable: int = 0
    artifacts: list[str] = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "counts": {
                "ingested": self.ingested,
                "accepted": self.accepted,
                "rejected": self.rejected,
                "malformed": self.malformed,
                "classified": self.classified,
                "unclassifiable": self.unclassifiable,
            },
            "artifacts": self.artifacts,
        }


def stage_ingest(
    input_path: Path, out_dir: Path
) -> tuple[list[Profile], RejectionReport, list[ParseIssue]]:
    """Load, validate and persist the accepted corpus plus the rejection report."""
    raws, issues = load_profiles(input_path)
    profiles, report = validate_and_filter(raws)
    persist_corpus(profiles, out_dir / ACCEPTED_FILE)
    record = report.to_record()
    record["malformed_lines"] = [
        {"line_no": issue.line_no, "message": issue.message} for issue in issues
    ]
    atomic_write_text(out_dir / REJECTIONS_FILE, json.dumps(record, indent=2) + "\n")
    return profiles, report, issues


def stage_classify(
    profiles: list[Profile],
    corpus: Sequence[SampleDocument],
    n_features: int,
    k: int,
    stopwords: frozenset[str],
    out_dir: Path,
) -> tuple[int, int]:
    """Label every profile's about_me text; returns (classified, unclassifiable)."""
    unclassifiable = 0
    for profile in profiles:
        label = classify_text(profile.about_me, corpus, n_features, k, stopwords)
        profile.about_me_class = label
        if label is ClassLabel.UNCLASSIFIABLE:
            unclassifiable += 1
    persist_corpus(profiles, out_dir / CLASSIFIED_FILE)
    return len(profiles) - unclassifiable, unclassifiable


def stage_bin(
    profiles: list[Profile],
    reference_date: date,
    gap_policy: GapPolicy,
    out_dir: Path,
) -> None:
    """Derive age ranges and group classes for every profile."""
    for profile in profiles:
        birthday = parse_birthday(profile.birthday) if profile.birthday else None
        profile.age_range = age_range(age_from_birthday(birthday, reference_date))
        profile.wall_count_class = bin_wall_count(profile.wall_count)
        profile.music_share_class = bin_music_share(profile.music_count, gap_policy)
        profile.activity_interest_class = bin_activities_interests(
            profile.activity_interest_count, gap_policy
        )
    persist_corpus(profiles, out_dir / BINNED_FILE)


def stage_arff(profiles: list[Profile], out_dir: Path) -> None:
    atomic_write_text(out_dir / ARFF_FILE, emit_arff(build_dataset(profiles)))


def stage_report(profiles: list[Profile], out_dir: Path, run_id: str) -> list[dict]:
    """Write distribution tables and charts: pie charts of personality
    classes per age range, per-gender line charts, and male/female
    comparison charts for every binned measure."""
    base = out_dir / "reports" / run_id
    artifacts: list[dict] = []

    def rel(path: Path) -> str:
        return path.relative_to(out_dir).as_posix()

    def add_table(path: Path, text: str, population: str, measure: str) -> None:
        atomic_write_text(path, text)
        artifacts.append(
            {"path": rel(path), "kind": "table", "filter": population, "measure": measure}
        )

    def add_chart(path: Path, text: str, population: str, measure: str, chart: str) -> None:
        atomic_write_text(path, text)
        artifacts.append(
            {
                "path": rel(path),
                "kind": "chart",
                "chart_type": chart,
                "filter": population,
                "measure": measure,
            }
        )

    tables = base / "tables"
    charts = base / "charts"

    for dist in aggregate(profiles, "age_range", "about_me_class"):
        slug = dist.population.split("=", 1)[1].lower()
        add_table(tables / f"about_me_age_{slug}.csv", emit_table(dist), dist.population, dist.dimension)
        if dist.total > 0:
            add_chart(
                charts / f"pie_about_me_age_{slug}.svg",
                emit_chart(dist, "pie"),
                dist.population,
                dist.dimension,
                "pie",
            )

    for measure, slug in _GENDER_MEASURES:
        dists = aggregate(profiles, "gender", measure)
        for dist in dists:
            gender_slug = dist.population.split("=", 1)[1].lower()
            add_table(
                tables / f"{slug}_gender_{gender_slug}.csv",
                emit_table(dist),
                dist.population,
                measure,
            )
        male, female = dists[0], dists[1]
        for dist, gender_slug in ((male, "male"), (female, "female")):
            add_chart(
                charts / f"line_{slug}_{gender_slug}.svg",
                emit_chart(dist, "line"),
                dist.population,
                measure,
                "line",
            )
        comparison = compare(male, female)
        population = f"{male.population} vs {female.population}"
        add_table(
            tables / f"comparison_{slug}_male_female.csv",
            emit_table(comparison),
            population,
            measure,
        )
        add_chart(
            charts / f"cmp_{slug}_male_vs_female.svg",
            emit_comparison_chart(comparison),
            population,
            measure,
            "comparison",
        )

    manifest = {"run_id": run_id, "artifacts": artifacts}
    manifest_path = base / SUMMARY_FILE
    atomic_write_text(manifest_path, json.dumps(manifest, indent=2) + "\n")
    artifacts.append(
        {"path": rel(manifest_path), "kind": "manifest", "filter": "all", "measure": "all"}
    )
    return artifacts


def run_pipeline(config: RunConfig) -> RunSummary:
    """Run every stage in order. On any stage error, partial outputs are kept
    and a failure marker file is written before the error propagates."""
    config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / FAILURE_MARKER).unlink(missing_ok=True)
    try:
        stopwords = (
            load_stopwords(config.stopword_path)
            if config.stopword_path is not None
            else DEFAULT_STOPWORDS
        )
        corpus = load_sample_corpus(config.corpus_path, stopwords)

        profiles, report, issues = stage_ingest(Path(config.input_path), out_dir)
        classified, unclassifiable = stage_classify(
            profiles, corpus, config.n_features, config.k, stopwords, out_dir
        )
        stage_bin(profiles, config.reference_date, config.gap_policy, out_dir)
        stage_arff(profiles, out_dir)
        report_artifacts = stage_report(profiles, out_dir, config.run_id)

        summary = RunSummary(
            ingested=report.accepted_count + report.rejected_count,
            accepted=report.accepted_count,
            rejected=report.rejected_count,
            malformed=len(issues),
            classified=classified,
            unclassifiable=unclassifiable,
            artifacts=[ACCEPTED_FILE, REJECTIONS_FILE, CLASSIFIED_FILE, BINNED_FILE, ARFF_FILE]
            + [entry["path"] for entry in report_artifacts],
        )
        atomic_write_text(
            out_dir / SUMMARY_FILE, json.dumps(summary.to_record(), indent=2) + "\n"
        )
        return summary
    except Exception as exc:
        atomic_write_text(
            out_dir / FAILURE_MARKER, f"{type(exc).__name__}: {exc}\n"
        )
        raise
