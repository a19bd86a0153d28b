"""Linear day count from the Javanese epoch and the strictly periodic cycles.

Day number 0 is 8 July 1633 CE, the first day of the Javanese calendar
(Jemuwah Lêgi, 1 Sura Alip 1555 AJ). Every periodic cycle is a plain
modulus of that count.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass
from typing import NamedTuple

from .names import DINAPITU, PASARAN, PARINGKELAN, weton_name

EPOCH = datetime.date(1633, 7, 8)
FIRST_GREGORIAN = datetime.date(1582, 10, 15)
_EPOCH_ORDINAL = EPOCH.toordinal()

# The epoch is a Friday (6) and a Lêgi (3).
WEEKDAY_OFFSET = 6
PASARAN_OFFSET = 3

# Puts 2020-09-13, the Sunday opening wuku Galungan, at cycle position 70.
# Wuku weeks therefore run Sunday to Saturday.
DEFAULT_WUKU_ANCHOR = 194


class DomainError(ValueError):
    """A date or day number outside the domain an operation supports."""


class CycleNotConfigured(LookupError):
    """Raised when a cycle needs an anchor that has not been supplied."""


class Weton(NamedTuple):
    dinapitu: int
    pasaran: int

    @property
    def name(self) -> str:
        return weton_name(self.dinapitu, self.pasaran)

    @property
    def day_name(self) -> str:
        return DINAPITU[self.dinapitu]

    @property
    def pasaran_name(self) -> str:
        return PASARAN[self.pasaran]


@dataclass(frozen=True)
class CycleAnchors:
    """Offsets locating the wuku and paringkelan cycles on the day count.

    ``None`` means the cycle is not configured; callers then omit it.
    """

    wuku_anchor: int | None = DEFAULT_WUKU_ANCHOR
    paringkelan_anchor: int | None = None

    def __post_init__(self):
        if self.wuku_anchor is not None and not 0 <= self.wuku_anchor < 210:
            raise ValueError(f"wuku anchor must be in 0..209, got {self.wuku_anchor}")
        if self.paringkelan_anchor is not None and not 0 <= self.paringkelan_anchor < 6:
            raise ValueError(f"paringkelan anchor must be in 0..5, got {self.paringkelan_anchor}")


def as_date(value: datetime.date | str | tuple[int, int, int]) -> datetime.date:
    if isinstance(value, datetime.datetime):
        raise TypeError("expected a date, not a datetime")
    if isinstance(value, datetime.date):
        return value
    try:
        if isinstance(value, str):
            return datetime.date.fromisoformat(value)
        return datetime.date(*value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"invalid Gregorian date {value!r}: {exc}") from None


def check_gregorian(date: datetime.date) -> None:
    if date < FIRST_GREGORIAN:
        raise DomainError(f"{date.isoformat()} is before the first Gregorian day 1582-10-15")


def day_number_from_gregorian(date) -> int:
    date = as_date(date)
    check_gregorian(date)
    return date.toordinal() - _EPOCH_ORDINAL


def gregorian_from_day_number(dn: int) -> datetime.date:
    ordinal = dn + _EPOCH_ORDINAL
    if ordinal < FIRST_GREGORIAN.toordinal():
        raise DomainError(f"day number {dn} falls before the first Gregorian day 1582-10-15")
    try:
        return datetime.date.fromordinal(ordinal)
    except (OverflowError, ValueError):
        raise DomainError(f"day number {dn} is outside the supported date range") from None


def weekday_index(dn: int) -> int:
    """Dinapitu index, 0 = Saturday ... 6 = Friday."""
    return (dn + WEEKDAY_OFFSET) % 7


def pasaran_index(dn: int) -> int:
    """Pasaran index, 0 = Pon ... 4 = Pahing."""
    return (dn + PASARAN_OFFSET) % 5


def weton_of(dn: int) -> Weton:
    return Weton(weekday_index(dn), pasaran_index(dn))


def weton_position(weton: Weton) -> int:
    """Position 0..34 in the wetonan such that ``weton_of(dn)`` equals
    ``weton`` exactly when ``dn % 35`` equals this position."""
    # Chinese remainder over 7 and 5.
    for r in range(35):
        if weton_of(r) == weton:
            return r
    raise ValueError(f"not a weton: {weton!r}")


def wuku_index(dn: int, anchors: CycleAnchors = CycleAnchors()) -> int:
    if anchors.wuku_anchor is None:
        raise CycleNotConfigured("wuku anchor is not configured")
    return ((dn + anchors.wuku_anchor) % 210) // 7


def legacy_cycle_index(dn: int, length: int = 6, anchor: int | None = None) -> int:
    """Position in a legacy cycle. Only the six-day paringkelan is supported."""
    if length != 6:
        raise ValueError(f"only the 6-day paringkelan cycle can be computed, not {length}")
    if anchor is None:
        raise CycleNotConfigured("paringkelan anchor is not configured")
    return (dn + anchor) % 6


def paringkelan_of(dn: int, anchors: CycleAnchors) -> str | None:
    if anchors.paringkelan_anchor is None:
        return None
    return PARINGKELAN[legacy_cycle_index(dn, 6, anchors.paringkelan_anchor)]
