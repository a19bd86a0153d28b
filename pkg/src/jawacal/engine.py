"""Day number <-> Javanese date, per-day records, noble days and recurrences."""

from __future__ import annotations

import datetime
from collections.abc import Iterator
from dataclasses import dataclass, field, replace

from . import names
from .chrono import (
    CycleAnchors,
    DomainError,
    Weton,
    as_date,
    day_number_from_gregorian,
    gregorian_from_day_number,
    paringkelan_of,
    weton_of,
    weton_position,
    wuku_index,
)
from .schedule import (
    Court,
    CourtSchedule,
    CoverageError,
    DinaMulyaRule,
    taun_name_of,
    windu_lambang_of,
)

WUKU_UNSET_WARNING = "wuku anchor not configured, wuku-dependent fields and noble days skipped"


@dataclass(frozen=True)
class JavaneseDate:
    dina: int
    wulan_no: int
    taun_aj: int
    kurup_ordinal: int
    kurup_name: str
    court: Court

    @property
    def wulan_name(self) -> str:
        return names.WULAN[self.wulan_no - 1]

    @property
    def taun_index(self) -> int:
        return taun_name_of(self.taun_aj)

    @property
    def taun_name(self) -> str:
        return names.TAUN[self.taun_index]

    @property
    def windu_name(self) -> str:
        return names.WINDU[windu_lambang_of(self.taun_aj)[0]]

    @property
    def lambang_name(self) -> str:
        return names.LAMBANG[windu_lambang_of(self.taun_aj)[1]]

    def __str__(self) -> str:
        return f"{self.dina} {self.wulan_name} {self.taun_name} {self.taun_aj} AJ"


@dataclass(frozen=True)
class FullDayRecord:
    gregorian: datetime.date
    day_number: int
    weton: Weton
    wuku: int | None
    paringkelan: str | None
    javanese: JavaneseDate | None
    dina_mulya: tuple[str, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def partial(self) -> bool:
        return self.javanese is None

    def headline(self) -> str:
        text = self.weton.name
        if self.javanese is not None:
            text += f", {self.javanese}, kurup {self.javanese.kurup_name}"
        return text


def javanese_from_day_number(dn: int, schedule: CourtSchedule) -> JavaneseDate:
    i = schedule.locate(dn)
    taun_aj, wulan_no = schedule.month_keys[i]
    kurup = schedule.kurup_of_taun(taun_aj)
    return JavaneseDate(
        dina=dn - schedule.month_starts[i] + 1,
        wulan_no=wulan_no,
        taun_aj=taun_aj,
        kurup_ordinal=kurup.ordinal,
        kurup_name=kurup.name,
        court=schedule.court,
    )


def day_number_from_javanese(jdate: JavaneseDate | tuple[int, int, int], schedule: CourtSchedule) -> int:
    """Inverse lookup; ``jdate`` may also be a ``(taun_aj, wulan_no, dina)`` tuple."""
    if isinstance(jdate, JavaneseDate):
        taun_aj, wulan_no, dina = jdate.taun_aj, jdate.wulan_no, jdate.dina
    else:
        taun_aj, wulan_no, dina = jdate
    i = schedule.month_index(taun_aj, wulan_no)
    length = schedule.month_lengths[i]
    if not 1 <= dina <= length:
        raise DomainError(f"{names.WULAN[wulan_no - 1]} {taun_aj} has {length} days")
    return schedule.month_starts[i] + dina - 1


def _rule_matches(rule: DinaMulyaRule, weton: Weton, wuku: int | None, jdate: JavaneseDate | None) -> bool:
    if rule.weton is not None and rule.weton != weton:
        return False
    if rule.wuku is not None and rule.wuku != wuku:
        return False
    if rule.needs_javanese_date:
        if jdate is None:
            return False
        if rule.dina is not None and rule.dina != jdate.dina:
            return False
        if rule.wulan is not None and rule.wulan != jdate.wulan_no:
            return False
        if rule.taun is not None and rule.taun != jdate.taun_index:
            return False
    return True


def dina_mulya_of(record: FullDayRecord, rules) -> list[str]:
    """Names of the noble-day rules the record satisfies.

    Rules that depend on the wuku never match when the wuku is unknown.
    """
    return [
        rule.name for rule in rules
        if not (rule.needs_wuku and record.wuku is None)
        and _rule_matches(rule, record.weton, record.wuku, record.javanese)
    ]


def full_record(date, schedule: CourtSchedule, anchors: CycleAnchors | None = None) -> FullDayRecord:
    date = as_date(date)
    dn = day_number_from_gregorian(date)
    if dn < 0:
        raise DomainError(f"{date.isoformat()} is before the Javanese epoch 1633-07-08")
    return _record(dn, date, schedule, schedule.anchors if anchors is None else anchors)


def record_for_day_number(dn: int, schedule: CourtSchedule, anchors: CycleAnchors | None = None) -> FullDayRecord:
    if dn < 0:
        raise DomainError(f"day number {dn} is before the Javanese epoch")
    return _record(dn, gregorian_from_day_number(dn), schedule,
                   schedule.anchors if anchors is None else anchors)


def _record(dn: int, date: datetime.date, schedule: CourtSchedule, anchors: CycleAnchors) -> FullDayRecord:
    warnings = []
    wuku = wuku_index(dn, anchors) if anchors.wuku_anchor is not None else None
    if wuku is None:
        warnings.append(WUKU_UNSET_WARNING)
    try:
        jdate = javanese_from_day_number(dn, schedule)
    except CoverageError as exc:
        jdate = None
        warnings.append(str(exc))
    record = FullDayRecord(
        gregorian=date,
        day_number=dn,
        weton=weton_of(dn),
        wuku=wuku,
        paringkelan=paringkelan_of(dn, anchors),
        javanese=jdate,
        warnings=tuple(warnings),
    )
    mulya = dina_mulya_of(record, schedule.mulya_rules)
    return replace(record, dina_mulya=tuple(mulya))


def next_weton(from_dn: int, target: Weton, count: int) -> list[int]:
    """The ``count`` first day numbers after ``from_dn`` that fall on ``target``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    position = weton_position(target)
    first = from_dn + 1 + (position - from_dn - 1) % 35
    return [first + 35 * i for i in range(count)]


def iter_weton(target: Weton, start_dn: int, end_dn: int) -> Iterator[int]:
    """Day numbers in ``[start_dn, end_dn]`` that fall on ``target``."""
    dn = start_dn + (weton_position(target) - start_dn) % 35
    while dn <= end_dn:
        yield dn
        dn += 35


def iter_rule(
    rule: DinaMulyaRule,
    start_dn: int,
    end_dn: int,
    schedule: CourtSchedule,
    anchors: CycleAnchors | None = None,
) -> Iterator[int]:
    """Day numbers in ``[start_dn, end_dn]`` matching a noble-day rule."""
    anchors = schedule.anchors if anchors is None else anchors
    if rule.needs_wuku and anchors.wuku_anchor is None:
        raise DomainError(f"{rule.name} needs the wuku, but no wuku anchor is configured")
    candidates = iter_weton(rule.weton, start_dn, end_dn) if rule.weton else range(start_dn, end_dn + 1)
    for dn in candidates:
        wuku = wuku_index(dn, anchors) if rule.needs_wuku else None
        jdate = None
        if rule.needs_javanese_date:
            try:
                jdate = javanese_from_day_number(dn, schedule)
            except CoverageError:
                continue
        if _rule_matches(rule, weton_of(dn), wuku, jdate):
            yield dn


def occurrences_in_taun(
    target: DinaMulyaRule | Weton,
    taun_aj: int,
    schedule: CourtSchedule,
    anchors: CycleAnchors | None = None,
) -> list[int]:
    start = schedule.taun_start(taun_aj)
    end = start + sum(schedule.wulan_lengths(taun_aj)) - 1
    if isinstance(target, DinaMulyaRule):
        return list(iter_rule(target, start, end, schedule, anchors))
    return list(iter_weton(Weton(*target), start, end))


def find_rule(schedule: CourtSchedule, name: str) -> DinaMulyaRule:
    key = names.fold(name)
    for rule in schedule.mulya_rules:
        if names.fold(rule.name) == key:
            return rule
    valid = ", ".join(rule.name for rule in schedule.mulya_rules)
    raise KeyError(f"unknown noble day {name!r}; expected one of {valid}")
