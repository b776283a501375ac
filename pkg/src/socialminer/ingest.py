"""Load raw profile records, validate them, and persist the accepted corpus.

Input is UTF-8 JSON lines, one flat object per line with the keys
id, birthday, about_me, activities, gender, interests, wall_count,
political, music_count. Absent keys (or JSON null) mean the attribute is
missing. The persisted corpus uses the same notation plus the derived
fields, and is written atomically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import date
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Optional, Union

from .binning import AgeRange, ShareClass, WallCountClass
from .errors import DuplicateIdError, StorageError
from .io_utils import atomic_write_text
from .knn import ClassLabel


class Gender(str, Enum):
    MALE = "Male"
    FEMALE = "Female"
    UNSPECIFIED = "Unspecified"


REASON_MISSING_TEXT = "MISSING_TEXT"
REASON_MISSING_NUMERIC = "MISSING_NUMERIC"
REASON_NEGATIVE_NUMERIC = "NEGATIVE_NUMERIC"
REASON_BAD_BIRTHDAY = "BAD_BIRTHDAY"

_TEXT_KEYS = ("birthday", "about_me", "activities", "gender", "interests", "political")
_INT_KEYS = ("wall_count", "music_count")
INPUT_KEYS = (
    "id",
    "birthday",
    "about_me",
    "activities",
    "gender",
    "interests",
    "wall_count",
    "political",
    "music_count",
)

_ISO_DATE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


@dataclass(frozen=True)
class ParseIssue:
    """One malformed input line, kept for reporting instead of being dropped."""

    line_no: int
    message: str


@dataclass
class RawProfile:
    """One input record exactly as parsed; nothing validated beyond types."""

    record_id: str
    birthday: Optional[str] = None
    about_me: Optional[str] = None
    activities: Optional[str] = None
    gender: Optional[str] = None
    interests: Optional[str] = None
    wall_count: Optional[int] = None
    political: Optional[str] = None
    music_count: Optional[int] = None


@dataclass
class Profile:
    """An accepted record plus the fields later stages fill in."""

    record_id: str
    about_me: str
    gender: Gender
    wall_count: int
    music_count: int
    activity_interest_count: int
    birthday: Optional[str] = None
    activities: Optional[str] = None
    interests: Optional[str] = None
    political: Optional[str] = None
    about_me_class: Optional[ClassLabel] = None
    age_range: Optional[AgeRange] = None
    wall_count_class: Optional[WallCountClass] = None
    music_share_class: Optional[ShareClass] = None
    activity_interest_class: Optional[ShareClass] = None

    def to_record(self) -> dict:
        record = {
            "id": self.record_id,
            "birthday": self.birthday,
            "about_me": self.about_me,
            "activities": self.activities,
            "gender": self.gender.value,
            "interests": self.interests,
            "wall_count": self.wall_count,
            "political": self.political,
            "music_count": self.music_count,
            "activity_interest_count": self.activity_interest_count,
        }
        for key, value in (
            ("about_me_class", self.about_me_class),
            ("age_range", self.age_range),
            ("wall_count_class", self.wall_count_class),
            ("music_share_class", self.music_share_class),
            ("activity_interest_class", self.activity_interest_class),
        ):
            if value is not None:
                record[key] = value.value
        return {k: v for k, v in record.items() if v is not None}

    @classmethod
    def from_record(cls, record: dict) -> "Profile":
        def enum_or_none(enum_type, key):
            return enum_type(record[key]) if key in record else None

        return cls(
            record_id=record["id"],
            about_me=record["about_me"],
            gender=Gender(record["gender"]),
            wall_count=record["wall_count"],
            music_count=record["music_count"],
            activity_interest_count=record["activity_interest_count"],
            birthday=record.get("birthday"),
            activities=record.get("activities"),
            interests=record.get("interests"),
            political=record.get("political"),
            about_me_class=enum_or_none(ClassLabel, "about_me_class"),
            age_range=enum_or_none(AgeRange, "age_range"),
            wall_count_class=enum_or_none(WallCountClass, "wall_count_class"),
            music_share_class=enum_or_none(ShareClass, "music_share_class"),
            activity_interest_class=enum_or_none(ShareClass, "activity_interest_class"),
        )


@dataclass
class RejectionReport:
    """Which records were filtered out and why. Totality: accepted plus
    rejected equals the number of input records."""

    rejected: list[tuple[str, str]] = field(default_factory=list)
    accepted_count: int = 0
    rejected_count: int = 0

    def to_record(self) -> dict:
        return {
            "accepted_count": self.accepted_count,
            "rejected_count": self.rejected_count,
            "rejected": [
                {"id": record_id, "reason": reason} for record_id, reason in self.rejected
            ],
        }


def _parse_record_line(line_no: int, line: str) -> RawProfile:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(record, dict):
        raise ValueError("line is not an object")
    unknown = set(record) - set(INPUT_KEYS)
    if unknown:
        raise ValueError(f"unknown keys: {sorted(unknown)}")

    record_id = record.get("id")
    if not isinstance(record_id, str) or not record_id:
        raise ValueError("id must be a non-empty string")

    fields: dict = {"record_id": record_id}
    for key in _TEXT_KEYS:
        value = record.get(key)
        if value is not None and not isinstance(value, str):
            raise ValueError(f"{key} must be a string")
        fields[key] = value
    for key in _INT_KEYS:
        value = record.get(key)
        if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
            raise ValueError(f"{key} must be an integer")
        fields[key] = value
    return RawProfile(**fields)


def load_profiles(
    source: Union[str, Path, IO[str], IO[bytes], Iterable[str]],
) -> tuple[list[RawProfile], list[ParseIssue]]:
    """Parse line-delimited records into RawProfiles, in input order.

    Malformed lines become ParseIssues with their line number. A duplicate
    id raises DuplicateIdError; an unreadable path raises StorageError.
    """
    if isinstance(source, (str, Path)):
        try:
            lines = Path(source).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise StorageError(f"cannot read {source}: {exc}") from exc
    else:
        lines = [
            line.decode("utf-8") if isinstance(line, bytes) else line for line in source
        ]

    profiles: list[RawProfile] = []
    issues: list[ParseIssue] = []
    seen: set[str] = set()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            raw = _parse_record_line(line_no, line)
        except ValueError as exc:
            issues.append(ParseIssue(line_no, str(exc)))
            continue
        if raw.record_id in seen:
            raise DuplicateIdError(f"duplicate record id {raw.record_id!r} at line {line_no}")
        seen.add(raw.record_id)
        profiles.append(raw)
    return profiles, issues


def parse_birthday(text: str) -> Optional[date]:
    """ISO-8601 calendar date, or None when the text is not one."""
    if not _ISO_DATE.match(text):
        return None
    try:
        return date.fromisoformat(text)
    except ValueError:
        return None


def count_items(text: Optional[str]) -> int:
    """Number of comma-separated non-empty items."""
    if not text:
        return 0
    return sum(1 for item in text.split(",") if item.strip())


def _normalize_gender(text: Optional[str]) -> Gender:
    lowered = (text or "").strip().lower()
    if lowered == "male":
        return Gender.MALE
    if lowered == "female":
        return Gender.FEMALE
    return Gender.UNSPECIFIED


def _rejection_reason(raw: RawProfile) -> Optional[str]:
    if raw.about_me is None or not raw.about_me.strip():
        return REASON_MISSING_TEXT
    if raw.wall_count is None or raw.music_count is None:
        return REASON_MISSING_NUMERIC
    if raw.wall_count < 0 or raw.music_count < 0:
        return REASON_NEGATIVE_NUMERIC
    if raw.birthday is not None and parse_birthday(raw.birthday) is None:
        return REASON_BAD_BIRTHDAY
    return None


def validate_and_filter(
    raws: list[RawProfile],
) -> tuple[list[Profile], RejectionReport]:
    """Filter out erroneous and missing records; total over its input.

    A record is accepted when it has a non-blank about_me, both numeric
    counts present and non-negative, and a parseable birthday if one was
    given at all. Gender is normalized case-insensitively; anything that is
    not male or female becomes Unspecified.
    """
    accepted: list[Profile] = []
    report = RejectionReport()
    for raw in raws:
        reason = _rejection_reason(raw)
        if reason is not None:
            report.rejected.append((raw.record_id, reason))
            continue
        accepted.append(
            Profile(
                record_id=raw.record_id,
                about_me=raw.about_me,
                gender=_normalize_gender(raw.gender),
                wall_count=raw.wall_count,
                music_count=raw.music_count,
                activity_interest_count=count_items(raw.activities)
                + count_items(raw.interests),
                birthday=raw.birthday,
                activities=raw.activities,
                interests=raw.interests,
                political=raw.political,
            )
        )
    report.accepted_count = len(accepted)
    report.rejected_count = len(report.rejected)
    return accepted, report


def persist_corpus(profiles: list[Profile], path: str | Path) -> None:
    """Write the accepted corpus as JSON lines, atomically."""
    text = "".join(
        json.dumps(p.to_record(), ensure_ascii=False) + "\n" for p in profiles
    )
    atomic_write_text(path, text)


def load_corpus(path: str | Path) -> list[Profile]:
    """Read back a persisted corpus, reproducing the profiles exactly."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StorageError(f"cannot read corpus {path}: {exc}") from exc
    profiles = []
    for line_no, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            profiles.append(Profile.from_record(json.loads(line)))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise StorageError(f"corrupt corpus {path}:{line_no}: {exc}") from exc
    return profiles
