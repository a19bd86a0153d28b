import datetime

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jawacal.chrono import DomainError, day_number_from_gregorian, pasaran_index, weekday_index
from jawacal.congruence import (
    CivilParts,
    pasaran_congruence,
    printed_example_offset,
    printed_weton_offset,
    roll_civil_parts,
    weton_congruence,
    zeller_weekday,
)

EPOCH = CivilParts(8, 7, 16, 33)
KARTINI_BORN = CivilParts(21, 4, 18, 79)
KARTINI_DIED = CivilParts(17, 9, 19, 4)

dates = st.dates(min_value=datetime.date(1582, 10, 15), max_value=datetime.date(9999, 12, 31))


@pytest.mark.parametrize("date, parts", [
    ("1879-04-21", KARTINI_BORN),
    ("1904-09-17", KARTINI_DIED),
    ("1900-01-15", CivilParts(15, 13, 18, 99)),
    ("2000-02-29", CivilParts(29, 14, 19, 99)),
    ("1633-07-08", EPOCH),
])
def test_roll_civil_parts(date, parts):
    assert roll_civil_parts(date) == parts


def test_roll_rejects_pre_gregorian():
    with pytest.raises(DomainError):
        roll_civil_parts("1582-10-04")


@pytest.mark.parametrize("parts, weekday", [(KARTINI_BORN, 2), (KARTINI_DIED, 0), (EPOCH, 6)])
def test_zeller(parts, weekday):
    assert zeller_weekday(parts) == weekday


def test_zeller_worked_sums():
    # term-by-term sums before reduction
    k, m, C, Y = KARTINI_BORN
    assert k + 13 * (m + 1) // 5 + Y + Y // 4 + C // 4 - 2 * C == 100
    k, m, C, Y = KARTINI_DIED
    assert k + 13 * (m + 1) // 5 + Y + Y // 4 + C // 4 - 2 * C == 14
    k, m, C, Y = EPOCH
    assert k + 13 * (m + 1) // 5 + Y + Y // 4 + C // 4 - 2 * C == 41


@pytest.mark.parametrize("parts, pasaran, total", [
    (EPOCH, 3, 68),
    (KARTINI_BORN, 4, 99),
    (KARTINI_DIED, 4, 84),
])
def test_pasaran_congruence(parts, pasaran, total):
    k, m, C, Y = parts
    assert k + 3 * (m + 1) // 5 + Y // 4 + 4 * C - 4 * (C // 4) == total
    assert pasaran_congruence(parts) == pasaran


@pytest.mark.parametrize("parts, expected", [
    (EPOCH, (1063, 6, 3)),
    (KARTINI_BORN, (1724, 2, 4)),
    (KARTINI_DIED, (749, 0, 4)),
])
def test_weton_congruence(parts, expected):
    assert tuple(weton_congruence(parts)) == expected
    assert expected[1] == zeller_weekday(parts)
    assert expected[2] == pasaran_congruence(parts)


def test_printed_example_is_an_erratum():
    # the worked example reaches 573 and the right weton by dropping 15Y
    assert printed_example_offset(EPOCH) == 573
    assert (573 % 7, 573 % 5) == (6, 3)
    assert 15 * 33 % 35 == 5
    # the printed formula itself misses the epoch weekday
    assert printed_weton_offset(EPOCH) % 7 != 6


def test_printed_formula_disagrees_somewhere():
    start = datetime.date(1633, 7, 8)
    misses = 0
    for i in range(35):
        p = roll_civil_parts(start + datetime.timedelta(days=i))
        w = printed_weton_offset(p)
        misses += (w % 7, w % 5) != (zeller_weekday(p), pasaran_congruence(p))
    assert misses == 35


@given(dates)
def test_congruences_match_day_count(date):
    p = roll_civil_parts(date)
    dn = day_number_from_gregorian(date)
    w, W, P = weton_congruence(p)
    assert zeller_weekday(p) == weekday_index(dn) == W
    assert pasaran_congruence(p) == pasaran_index(dn) == P


@given(dates.filter(lambda d: d.year <= 9599))
def test_400_year_translation(date):
    later = date.replace(year=date.year + 400)
    assert day_number_from_gregorian(later) - day_number_from_gregorian(date) == 146097
    assert zeller_weekday(roll_civil_parts(later)) == zeller_weekday(roll_civil_parts(date))
    # 146097 = 2 (mod 5): pasaran shifts by two
    assert (pasaran_congruence(roll_civil_parts(later)) - pasaran_congruence(roll_civil_parts(date))) % 5 == 2


def test_period_facts():
    assert 146097 % 7 == 0
    assert 146097 % 5 == 2
    assert 365 % 5 == 0 and 366 % 5 == 1
    assert 36524 % 5 == 4
    assert 365 % 35 == 15 and 366 % 35 == 16
    assert 36524 % 35 == 19 and 36525 % 35 == 20


def test_month_term_follows_month_lengths():
    # from March: 31 30 31 30 31 31 30 31 30 31 31
    lengths = [31, 30, 31, 30, 31, 31, 30, 31, 30, 31, 31]
    for m, n in zip(range(3, 14), lengths):
        assert (3 * (m + 2) // 5 - 3 * (m + 1) // 5) % 5 == n % 5
        assert (153 * (m + 2) // 5 - 153 * (m + 1) // 5) % 35 == n % 35


def test_century_terms():
    # from year 100C+50 to 100(C+1)+50 the only possible century leap day
    # is in year 100(C+1)
    for C in range(16, 40):
        days = day_number_from_gregorian(f"{100 * (C + 1) + 50}-03-01") - day_number_from_gregorian(
            f"{100 * C + 50}-03-01")
        assert days == 36524 + ((C + 1) % 4 == 0)
        pas = (4 * (C + 1) - 4 * ((C + 1) // 4)) - (4 * C - 4 * (C // 4))
        assert pas % 5 == days % 5
        wet = (19 * (C + 1) + (C + 1) // 4) - (19 * C + C // 4)
        assert wet % 35 == days % 35
