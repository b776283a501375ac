"""Aggregate classified, binned profiles into distributions and render them
as CSV tables and static SVG charts (pie charts per age range, line charts
and male/female comparison charts)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .binning import AgeRange, ShareClass, WallCountClass
from .errors import ChartError, ReportError
from .ingest import Gender, Profile
from .knn import ClassLabel

GROUP_FIELDS = {"age_range": AgeRange, "gender": Gender}
MEASURE_FIELDS = {
    "about_me_class": ClassLabel,
    "wall_count_class": WallCountClass,
    "music_share_class": ShareClass,
    "activity_interest_class": ShareClass,
}

_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6",
)


@dataclass
class Distribution:
    """Counts per bucket for one measure over one filtered population."""

    dimension: str
    population: str
    bucket_counts: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.bucket_counts.values())


@dataclass
class Comparison:
    """Two distributions of the same measure over identical bucket sets."""

    left: Distribution
    right: Distribution
    left_name: str
    right_name: str


def aggregate(
    profiles: Sequence[Profile], group_by: str, measure: str
) -> list[Distribution]:
    """One Distribution per group value, in enumeration order; every group
    is listed even when empty and every bucket is zero-filled."""
    if group_by not in GROUP_FIELDS:
        raise ReportError(f"cannot group by {group_by!r}")
    if measure not in MEASURE_FIELDS:
        raise ReportError(f"cannot measure {measure!r}")
    groups = list(GROUP_FIELDS[group_by])
    buckets = [member.value for member in MEASURE_FIELDS[measure]]
    table: dict[str, dict[str, int]] = {
        group.value: {bucket: 0 for bucket in buckets} for group in groups
    }
    for profile in profiles:
        group_value = getattr(profile, group_by)
        measure_value = getattr(profile, measure)
        if group_value is None or measure_value is None:
            raise ReportError(
                f"profile {profile.record_id!r} missing {group_by} or {measure}"
            )
        table[group_value.value][measure_value.value] += 1
    return [
        Distribution(measure, f"{group_by}={group.value}", table[group.value])
        for group in groups
    ]


def compare(left: Distribution, right: Distribution) -> Comparison:
    """Pair two distributions bucket by bucket; raw counts, no renormalization."""
    if list(left.bucket_counts) != list(right.bucket_counts):
        raise ReportError(
            f"bucket sets differ: {list(left.bucket_counts)} vs {list(right.bucket_counts)}"
        )
    return Comparison(left, right, left.population, right.population)


def emit_table(obj: Distribution | Comparison) -> str:
    """Comma-separated table, one row per bucket, LF line endings."""
    if isinstance(obj, Comparison):
        lines = [f"bucket,{obj.left_name},{obj.right_name}"]
        for bucket in obj.left.bucket_counts:
            lines.append(
                f"{bucket},{obj.left.bucket_counts[bucket]},{obj.right.bucket_counts[bucket]}"
            )
        return "\n".join(lines) + "\n"
    total = obj.total
    lines = ["bucket,count,percent"]
    for bucket, count in obj.bucket_counts.items():
        percent = 100.0 * count / total if total else 0.0
        lines.append(f"{bucket},{count},{percent:.2f}")
    return "\n".join(lines) + "\n"


def pie_angles(counts: Sequence[int]) -> list[float]:
    """Slice angles in degrees, proportional to counts; they sum to 360."""
    total = sum(counts)
    if total <= 0:
        raise ChartError("cannot draw a pie chart of an all-zero distribution")
    return [count / total * 360.0 for count in counts]


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _svg_open(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]


def _title(lines: list[str], width: int, text: str) -> None:
    lines.append(
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{_escape(text)}</text>'
    )


def _legend(lines: list[str], x: int, y: int, entries: Sequence[tuple[str, str]]) -> None:
    for i, (color, label) in enumerate(entries):
        ly = y + i * 22
        lines.append(f'<rect x="{x}" y="{ly - 11}" width="13" height="13" fill="{color}"/>')
        lines.append(
            f'<text x="{x + 20}" y="{ly}" font-family="sans-serif" '
            f'font-size="12">{_escape(label)}</text>'
        )


def _pie_svg(dist: Distribution) -> str:
    counts = list(dist.bucket_counts.values())
    angles = pie_angles(counts)
    total = dist.total
    width, height = 780, max(420, 70 + 22 * len(counts))
    cx, cy, r = 210.0, height / 2 + 10, 165.0
    lines = _svg_open(width, height)
    _title(lines, width, f"{dist.dimension} ({dist.population})")

    start = -90.0
    for i, angle in enumerate(angles):
        color = _PALETTE[i % len(_PALETTE)]
        if angle <= 0.0:
            continue
        if angle >= 360.0 - 1e-9:
            lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r:.3f}" fill="{color}"/>')
            start += angle
            continue
        end = start + angle
        x0 = cx + r * math.cos(math.radians(start))
        y0 = cy + r * math.sin(math.radians(start))
        x1 = cx + r * math.cos(math.radians(end))
        y1 = cy + r * math.sin(math.radians(end))
        large = 1 if angle > 180.0 else 0
        lines.append(
            f'<path d="M {cx:.3f} {cy:.3f} L {x0:.3f} {y0:.3f} '
            f'A {r:.3f} {r:.3f} 0 {large} 1 {x1:.3f} {y1:.3f} Z" fill="{color}"/>'
        )
        start = end

    entries = []
    for i, (bucket, count) in enumerate(dist.bucket_counts.items()):
        pct = 100.0 * count / total
        entries.append((_PALETTE[i % len(_PALETTE)], f"{bucket} — {count} ({pct:.1f}%)"))
    _legend(lines, 430, 70, entries)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _axes(lines: list[str], left: float, top: float, right: float, bottom: float, y_max: int) -> None:
    lines.append(
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#000" stroke-width="1"/>'
    )
    lines.append(
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#000" stroke-width="1"/>'
    )
    for i in range(5):
        value = y_max * (i + 1) / 5
        y = bottom - (bottom - top) * (i + 1) / 5
        lines.append(
            f'<line x1="{left}" y1="{y:.2f}" x2="{right}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{left - 6}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{value:g}</text>'
        )


def _series_points(
    counts: Sequence[int], left: float, right: float, bottom: float, top: float, y_max: int
) -> list[tuple[float, float]]:
    n = len(counts)
    points = []
    for i, count in enumerate(counts):
        x = (left + right) / 2 if n == 1 else left + (right - left) * i / (n - 1)
        y = bottom - (bottom - top) * count / y_max
        points.append((x, y))
    return points


def _plot_series(lines: list[str], points, color: str, counts, with_values: bool) -> None:
    path = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    lines.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{path}"/>')
    for (x, y), count in zip(points, counts):
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{color}"/>')
        if with_values:
            lines.append(
                f'<text x="{x:.2f}" y="{y - 7:.2f}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="10">{count}</text>'
            )


def _bucket_labels(lines: list[str], buckets, points, bottom: float) -> None:
    for (x, _), bucket in zip(points, buckets):
        lines.append(
            f'<text x="{x:.2f}" y="{bottom + 14:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10" '
            f'transform="rotate(-30 {x:.2f} {bottom + 14:.2f})">{_escape(bucket)}</text>'
        )


def _line_svg(dist: Distribution) -> str:
    buckets = list(dist.bucket_counts)
    counts = list(dist.bucket_counts.values())
    width, height = 780, 420
    left, right, top, bottom = 60.0, width - 40.0, 50.0, height - 80.0
    y_max = max(max(counts), 1)
    lines = _svg_open(width, height)
    _title(lines, width, f"{dist.dimension} ({dist.population})")
    _axes(lines, left, top, right, bottom, y_max)
    points = _series_points(counts, left, right, bottom, top, y_max)
    _plot_series(lines, points, _PALETTE[0], counts, with_values=True)
    _bucket_labels(lines, buckets, points, bottom)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_chart(dist: Distribution, kind: str) -> str:
    """Self-contained SVG document: 'pie' or 'line'."""
    if kind == "pie":
        return _pie_svg(dist)
    if kind == "line":
        return _line_svg(dist)
    raise ChartError(f"unknown chart kind {kind!r}")


def emit_comparison_chart(comparison: Comparison) -> str:
    """Two-series line chart comparing the left and right populations."""
    buckets = list(comparison.left.bucket_counts)
    left_counts = list(comparison.left.bucket_counts.values())
    right_counts = list(comparison.right.bucket_counts.values())
    width, height = 780, 440
    left, right, top, bottom = 60.0, width - 40.0, 50.0, height - 100.0
    y_max = max(max(left_counts), max(right_counts), 1)
    lines = _svg_open(width, height)
    _title(
        lines,
        width,
        f"{comparison.left.dimension}: {comparison.left_name} vs {comparison.right_name}",
    )
    _axes(lines, left, top, right, bottom, y_max)
    for counts, color in ((left_counts, _PALETTE[0]), (right_counts, _PALETTE[2])):
        points = _series_points(counts, left, right, bottom, top, y_max)
        _plot_series(lines, points, color, counts, with_values=True)
    points = _series_points(left_counts, left, right, bottom, top, y_max)
    _bucket_labels(lines, buckets, points, bottom)
    _legend(
        lines,
        int(left),
        int(height - 28),
        [(_PALETTE[0], comparison.left_name), (_PALETTE[2], comparison.right_name)],
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
