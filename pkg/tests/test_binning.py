from datetime import date

import pytest
from hypothesis import given, strategies as st

from socialminer.binning import (
    AgeRange,
    GapPolicy,
    ShareClass,
    WallCountClass,
    age_from_birthday,
    age_range,
    bin_activities_interests,
    bin_music_share,
    bin_wall_count,
)
from socialminer.errors import DomainError


class TestWallCount:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, WallCountClass.VERY_LOW),
            (9, WallCountClass.VERY_LOW),
            (10, WallCountClass.LOW),
            (50, WallCountClass.LOW),
            (51, WallCountClass.MEDIUM),
            (100, WallCountClass.MEDIUM),
            (101, WallCountClass.HIGH),
            (200, WallCountClass.HIGH),
            (201, WallCountClass.VERY_HIGH),
            (10_000, WallCountClass.VERY_HIGH),
        ],
    )
    def test_boundaries(self, n, expected):
        assert bin_wall_count(n) is expected

    def test_negative(self):
        with pytest.raises(DomainError):
            bin_wall_count(-1)


class TestShareBins:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, ShareClass.LOW),
            (4, ShareClass.LOW),
            (5, ShareClass.LOW),  # gap value, Low under the default policy
            (6, ShareClass.MEDIUM),
            (15, ShareClass.MEDIUM),
            (16, ShareClass.HIGH),
            (100, ShareClass.HIGH),
        ],
    )
    def test_music_boundaries(self, n, expected):
        assert bin_music_share(n) is expected

    def test_gap_policy_flips_only_five(self):
        assert bin_music_share(5, GapPolicy.FIVE_IS_MEDIUM) is ShareClass.MEDIUM
        for n in (4, 6):
            assert bin_music_share(n, GapPolicy.FIVE_IS_MEDIUM) is bin_music_share(n)

    @pytest.mark.parametrize("n,expected", [(0, ShareClass.LOW), (10, ShareClass.MEDIUM), (100, ShareClass.HIGH)])
    def test_activities_interests_boundaries(self, n, expected):
        assert bin_activities_interests(n) is expected

    def test_negative(self):
        with pytest.raises(DomainError):
            bin_music_share(-3)
        with pytest.raises(DomainError):
            bin_activities_interests(-3)

    @given(st.integers(min_value=0, max_value=10_000))
    def test_music_and_activity_bins_agree(self, n):
        assert bin_activities_interests(n) is bin_music_share(n)


def enum_position(member):
    return list(type(member)).index(member)


class TestTotalityAndMonotonicity:
    def test_exhaustive_scan(self):
        seen_wall, seen_share = set(), set()
        prev_wall = prev_share = None
        for n in range(0, 1001):
            w, s = bin_wall_count(n), bin_music_share(n)
            seen_wall.add(w)
            seen_share.add(s)
            if prev_wall is not None:
                assert enum_position(w) >= enum_position(prev_wall)
                assert enum_position(s) >= enum_position(prev_share)
            prev_wall, prev_share = w, s
        assert seen_wall == set(WallCountClass)
        assert seen_share == set(ShareClass)


class TestAgeFromBirthday:
    def test_birthday_reached(self):
        assert age_from_birthday(date(1990, 6, 15), date(2010, 6, 15)) == 20

    def test_birthday_not_yet_reached(self):
        assert age_from_birthday(date(1990, 6, 16), date(2010, 6, 15)) == 19

    def test_absent(self):
        assert age_from_birthday(None, date(2010, 6, 15)) is None

    def test_future_birthday(self):
        with pytest.raises(DomainError):
            age_from_birthday(date(2020, 1, 1), date(2010, 6, 15))

    def test_leap_day(self):
        # Feb 29 birthday counts as passed on Mar 1 of a non-leap year
        assert age_from_birthday(date(2000, 2, 29), date(2001, 2, 28)) == 0
        assert age_from_birthday(date(2000, 2, 29), date(2001, 3, 1)) == 1

    @given(
        st.dates(min_value=date(1900, 1, 1), max_value=date(2020, 12, 31)),
        st.dates(min_value=date(1900, 1, 1), max_value=date(2020, 12, 31)),
    )
    def test_completed_years(self, birthday, reference):
        if birthday > reference:
            with pytest.raises(DomainError):
                age_from_birthday(birthday, reference)
            return
        age = age_from_birthday(birthday, reference)
        assert 0 <= age <= reference.year - birthday.year


class TestAgeRange:
    @pytest.mark.parametrize(
        "age,expected",
        [
            (0, AgeRange.UP_TO_19),
            (19, AgeRange.UP_TO_19),
            (20, AgeRange.FROM_20_TO_32),
            (32, AgeRange.FROM_20_TO_32),
            (33, AgeRange.FROM_33_TO_45),
            (45, AgeRange.FROM_33_TO_45),
            (46, AgeRange.OVER_45),
            (120, AgeRange.OVER_45),
            (None, AgeRange.HIDDEN),
        ],
    )
    def test_buckets(self, age, expected):
        assert age_range(age) is expected

    def test_negative(self):
        with pytest.raises(DomainError):
            age_range(-1)

    @given(st.one_of(st.none(), st.integers(min_value=0, max_value=150)))
    def test_partition(self, age):
        bucket = age_range(age)
        assert bucket is AgeRange.HIDDEN if age is None else bucket is not AgeRange.HIDDEN
