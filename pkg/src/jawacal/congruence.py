"""Closed-form weekday and pasaran from a Gregorian date.

These formulas never touch the day count in :mod:`jawacal.chrono`, so the
two paths can be checked against each other.

The combined 35-day congruence is often printed as::

    w = k + [153(m+1)/5] + 15Y + [Y/4] + 19C + [C/4] + 5

That constant is wrong: with it, 8 July 1633 comes out as a Rêbo instead of a
Jemuwah. The matching worked example (w = 573) drops the 15Y term as well,
and only lands on the right answer because 15 * 33 = 495 = 5 (mod 35).
:func:`weton_congruence` drops the constant and keeps 15Y, which agrees with
Zeller's weekday and the pasaran congruence on every date. The printed
variants are kept in :func:`printed_weton_offset` and
:func:`printed_example_offset` so the discrepancy can be reproduced.
"""

from __future__ import annotations

from typing import NamedTuple

from .chrono import as_date, check_gregorian


class CivilParts(NamedTuple):
    """Day ``k``, month ``m`` (March=3 ... February=14), zero-based century
    ``C`` and two-digit year ``Y``; January and February belong to the
    previous year."""

    k: int
    m: int
    C: int
    Y: int


class WetonCongruence(NamedTuple):
    w: int
    W: int
    P: int


def roll_civil_parts(date) -> CivilParts:
    date = as_date(date)
    check_gregorian(date)
    year, month = date.year, date.month
    if month < 3:
        month += 12
        year -= 1
    century, yy = divmod(year, 100)
    return CivilParts(date.day, month, century, yy)


def zeller_weekday(p: CivilParts) -> int:
    """Weekday 0 = Saturday ... 6 = Friday."""
    k, m, C, Y = p
    # +7C keeps the sum non-negative without changing it mod 7
    total = k + (13 * (m + 1)) // 5 + Y + Y // 4 + C // 4 - 2 * C + 7 * C
    return total % 7


def pasaran_congruence(p: CivilParts) -> int:
    """Pasaran 0 = Pon ... 4 = Pahing."""
    k, m, C, Y = p
    return (k + (3 * (m + 1)) // 5 + Y // 4 + 4 * C - 4 * (C // 4)) % 5


def weton_offset(p: CivilParts) -> int:
    k, m, C, Y = p
    return k + (153 * (m + 1)) // 5 + 15 * Y + Y // 4 + 19 * C + C // 4


def weton_congruence(p: CivilParts) -> WetonCongruence:
    w = weton_offset(p)
    return WetonCongruence(w, w % 7, w % 5)


def printed_weton_offset(p: CivilParts) -> int:
    """The combined formula with its erroneous +5 constant. Do not use."""
    return weton_offset(p) + 5


def printed_example_offset(p: CivilParts) -> int:
    """The erroneous worked-example evaluation: +5 kept, 15Y omitted."""
    k, m, C, Y = p
    return k + (153 * (m + 1)) // 5 + Y // 4 + 19 * C + C // 4 + 5


def weekday_of_date(date) -> int:
    return zeller_weekday(roll_civil_parts(date))


def pasaran_of_date(date) -> int:
    return pasaran_congruence(roll_civil_parts(date))
