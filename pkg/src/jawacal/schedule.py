"""Kurup schedules: wulan-length tables, court chronologies, month index.

A schedule is read from a line-oriented text file (see ``docs/schedule-format.md``
and the embedded files under ``jawacal/data``). Compiling it lays every wulan
of every kurup end to end from the epoch and keeps the cumulative start
offsets, so converting a day number is a binary search.
"""

from __future__ import annotations

import bisect
import datetime
import enum
import re
import shlex
from dataclasses import dataclass, field
from importlib import resources
from itertools import accumulate
from pathlib import Path

from . import names
from .chrono import DEFAULT_WUKU_ANCHOR, CycleAnchors, DomainError, Weton, weton_of
from .chrono import day_number_from_gregorian

FORMAT_VERSION = 1
FIRST_TAUN = 1555
JIMAKIR = 7
BESAR = 12


class Court(str, enum.Enum):
    SURAKARTA = "surakarta"
    YOGYAKARTA = "yogyakarta"

    @classmethod
    def parse(cls, value: "str | Court") -> "Court":
        try:
            return cls(str(value.value if isinstance(value, Court) else value).lower())
        except ValueError:
            valid = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown court {value!r}; expected one of {valid}") from None


class ScheduleError(Exception):
    """A schedule file is malformed or fails validation."""


class CoverageError(DomainError):
    """A taun or day lies outside the decided kurup chronology."""


@dataclass(frozen=True)
class KurupRecord:
    ordinal: int
    name: str
    short_name: str
    rule: int
    first_taun_aj: int
    last_taun_aj: int
    start: datetime.date
    end: datetime.date | None = None
    # (taun_aj, wulan_no, forced_length), applied after the rule table
    adjustments: tuple[tuple[int, int, int], ...] = ()

    @property
    def taun_count(self) -> int:
        return self.last_taun_aj - self.first_taun_aj + 1

    @property
    def first_taun_name(self) -> str:
        return names.TAUN[taun_name_of(self.first_taun_aj)]

    @property
    def start_day_number(self) -> int:
        return day_number_from_gregorian(self.start)


@dataclass(frozen=True)
class DinaMulyaRule:
    """A noble day: matches when every field that is set matches."""

    name: str
    weton: Weton | None = None
    wuku: int | None = None
    dina: int | None = None
    wulan: int | None = None
    taun: int | None = None

    @property
    def needs_wuku(self) -> bool:
        return self.wuku is not None

    @property
    def needs_javanese_date(self) -> bool:
        return self.dina is not None or self.wulan is not None or self.taun is not None

    @property
    def pure_weton(self) -> bool:
        return self.weton is not None and not self.needs_wuku and not self.needs_javanese_date


@dataclass(frozen=True)
class ScheduleSource:
    """The parsed contents of a schedule file, before compilation."""

    court: Court
    rules: dict[int, tuple[tuple[int, ...], ...]]
    kurups: tuple[KurupRecord, ...]
    mulya: tuple[DinaMulyaRule, ...] = ()
    wuku_anchor: int | None = DEFAULT_WUKU_ANCHOR
    paringkelan_anchor: int | None = None
    version: int = FORMAT_VERSION


@dataclass
class ValidationReport:
    issues: list[str] = field(default_factory=list)
    kurup_spans: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.issues

    def __str__(self) -> str:
        if self.ok:
            return "schedule valid"
        return "schedule invalid:\n" + "\n".join(f"  - {issue}" for issue in self.issues)


def taun_name_of(taun_aj: int) -> int:
    """Taun name index 0 = Alip ... 7 = Jimakir."""
    return (taun_aj - FIRST_TAUN) % 8


def windu_lambang_of(taun_aj: int) -> tuple[int, int]:
    """Windu index (0 = Adi ... 3 = Sancaya) and lambang index (0 = Langkir, 1 = Kulawu).

    The 32-taun windu cycle runs continuously from Adi at 1555 AJ, across
    kurup boundaries.
    """
    windu = ((taun_aj - FIRST_TAUN) // 8) % 4
    return windu, names.LAMBANG.index(names.LAMBANG_OF_WINDU[windu])


# -- parsing -----------------------------------------------------------------

def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ScheduleError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


def _keyvals(tokens: list[str], lineno: int, allowed: set[str], required: set[str]) -> dict[str, str]:
    out = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise ScheduleError(f"line {lineno}: expected key=value, got {token!r}")
        if key not in allowed:
            raise ScheduleError(f"line {lineno}: unknown key {key!r}")
        if key in out:
            raise ScheduleError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    missing = required - out.keys()
    if missing:
        raise ScheduleError(f"line {lineno}: missing {', '.join(sorted(missing))}")
    return out


def _date(value: str, lineno: int) -> datetime.date:
    try:
        return datetime.date.fromisoformat(value)
    except ValueError:
        raise ScheduleError(f"line {lineno}: bad date {value!r}") from None


def _anchor(value: str, lineno: int, modulus: int) -> int | None:
    if value == "none":
        return None
    anchor = _int(value, lineno, "anchor")
    if not 0 <= anchor < modulus:
        raise ScheduleError(f"line {lineno}: anchor must be in 0..{modulus - 1}, got {anchor}")
    return anchor


def _lookup(fn, value: str, lineno: int):
    try:
        return fn(value)
    except (KeyError, ValueError) as exc:
        raise ScheduleError(f"line {lineno}: {exc.args[0]}") from None


def parse_schedule(text: str) -> ScheduleSource:
    header: dict[str, object] = {}
    rules: dict[int, list[tuple[int, ...]]] = {}
    kurups: list[dict] = []
    mulya: list[DinaMulyaRule] = []
    open_rule: int | None = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise ScheduleError(f"line {lineno}: {exc}") from None
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if open_rule is not None:
            if keyword == "end":
                if len(rules[open_rule]) != 8:
                    raise ScheduleError(f"line {lineno}: rule {open_rule} needs 8 rows, has {len(rules[open_rule])}")
                open_rule = None
                continue
            if keyword != "row" or len(args) != 13:
                raise ScheduleError(f"line {lineno}: expected 'row <taun> <12 lengths>' or 'end'")
            taun = _lookup(names.taun_index, args[0], lineno)
            if taun != len(rules[open_rule]):
                raise ScheduleError(
                    f"line {lineno}: rows must run Alip..Jimakir; expected {names.TAUN[len(rules[open_rule])]}"
                )
            rules[open_rule].append(tuple(_int(t, lineno, "wulan length") for t in args[1:]))
            continue

        if keyword in ("format", "court", "wuku-anchor", "paringkelan-anchor"):
            if len(args) != 1:
                raise ScheduleError(f"line {lineno}: {keyword} takes one value")
            if keyword in header:
                raise ScheduleError(f"line {lineno}: duplicate {keyword}")
            value = args[0]
            if keyword == "format":
                header[keyword] = _int(value, lineno, "format")
                if header[keyword] != FORMAT_VERSION:
                    raise ScheduleError(f"line {lineno}: unsupported format version {value}")
            elif keyword == "court":
                header[keyword] = _lookup(Court.parse, value, lineno)
            else:
                header[keyword] = _anchor(value, lineno, 210 if keyword == "wuku-anchor" else 6)
        elif keyword == "rule":
            if len(args) != 1:
                raise ScheduleError(f"line {lineno}: rule takes one number")
            number = _int(args[0], lineno, "rule number")
            if number in rules:
                raise ScheduleError(f"line {lineno}: duplicate rule {number}")
            rules[number] = []
            open_rule = number
        elif keyword == "kurup":
            if len(args) < 3:
                raise ScheduleError(f"line {lineno}: expected 'kurup <n> <name> <short> key=value...'")
            kv = _keyvals(args[3:], lineno, {"rule", "first", "last", "start", "end"},
                          {"rule", "first", "last", "start"})
            kurups.append(dict(
                ordinal=_int(args[0], lineno, "kurup number"),
                name=args[1],
                short_name=args[2],
                rule=_int(kv["rule"], lineno, "rule"),
                first_taun_aj=_int(kv["first"], lineno, "first"),
                last_taun_aj=_int(kv["last"], lineno, "last"),
                start=_date(kv["start"], lineno),
                end=_date(kv["end"], lineno) if "end" in kv else None,
                adjustments=[],
                lineno=lineno,
            ))
        elif keyword == "adjust":
            if not kurups:
                raise ScheduleError(f"line {lineno}: adjust must follow a kurup line")
            if len(args) != 3:
                raise ScheduleError(f"line {lineno}: expected 'adjust <taun_aj> <wulan> <length>'")
            aj, wulan, length = (_int(a, lineno, "adjust field") for a in args)
            kurups[-1]["adjustments"].append((aj, wulan, length))
        elif keyword == "mulya":
            if not args:
                raise ScheduleError(f"line {lineno}: mulya needs a name")
            if ";" in args[0]:
                raise ScheduleError(f"line {lineno}: mulya name may not contain ';'")
            kv = _keyvals(args[1:], lineno, {"weton", "wuku", "dina", "wulan", "taun"}, set())
            if not kv:
                raise ScheduleError(f"line {lineno}: mulya {args[0]!r} has no conditions")
            mulya.append(DinaMulyaRule(
                name=args[0],
                weton=Weton(*_lookup(names.parse_weton, kv["weton"], lineno)) if "weton" in kv else None,
                wuku=_lookup(names.wuku_index_of, kv["wuku"], lineno) if "wuku" in kv else None,
                dina=_int(kv["dina"], lineno, "dina") if "dina" in kv else None,
                wulan=_lookup(names.wulan_number, kv["wulan"], lineno) if "wulan" in kv else None,
                taun=_lookup(names.taun_index, kv["taun"], lineno) if "taun" in kv else None,
            ))
        else:
            raise ScheduleError(f"line {lineno}: unknown keyword {keyword!r}")

    if open_rule is not None:
        raise ScheduleError(f"rule {open_rule} is not closed with 'end'")
    for key in ("format", "court"):
        if key not in header:
            raise ScheduleError(f"missing '{key}' header")
    if not kurups:
        raise ScheduleError("no kurup records")

    records = []
    for k in kurups:
        lineno = k.pop("lineno")
        if k["rule"] not in rules:
            raise ScheduleError(f"line {lineno}: kurup {k['ordinal']} uses undefined rule {k['rule']}")
        k["adjustments"] = tuple(k["adjustments"])
        records.append(KurupRecord(**k))

    return ScheduleSource(
        court=header["court"],
        rules={n: tuple(rows) for n, rows in rules.items()},
        kurups=tuple(records),
        mulya=tuple(mulya),
        wuku_anchor=header.get("wuku-anchor", DEFAULT_WUKU_ANCHOR),
        paringkelan_anchor=header.get("paringkelan-anchor", None),
        version=header["format"],
    )


def _quote(text: str) -> str:
    if re.fullmatch(r"[\w.-]+", text):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dump_schedule(source: ScheduleSource) -> str:
    """Serialise a parsed schedule back to the file grammar."""
    anchor = lambda a: "none" if a is None else str(a)  # noqa: E731
    lines = [
        f"format {source.version}",
        f"court {source.court.value}",
        f"wuku-anchor {anchor(source.wuku_anchor)}",
        f"paringkelan-anchor {anchor(source.paringkelan_anchor)}",
        "",
    ]
    for number in sorted(source.rules):
        lines.append(f"rule {number}")
        for taun, row in enumerate(source.rules[number]):
            lines.append(f"  row {names.TAUN[taun]:<8} " + " ".join(str(n) for n in row))
        lines.append("end")
        lines.append("")
    for k in source.kurups:
        parts = [
            "kurup", str(k.ordinal), _quote(k.name), _quote(k.short_name),
            f"rule={k.rule}", f"first={k.first_taun_aj}", f"last={k.last_taun_aj}",
            f"start={k.start.isoformat()}",
        ]
        if k.end is not None:
            parts.append(f"end={k.end.isoformat()}")
        lines.append(" ".join(parts))
        for aj, wulan, length in k.adjustments:
            lines.append(f"adjust {aj} {wulan} {length}")
    if source.mulya:
        lines.append("")
    for rule in source.mulya:
        parts = ["mulya", _quote(rule.name)]
        if rule.weton is not None:
            parts.append(_quote("weton=" + rule.weton.name))
        if rule.wuku is not None:
            parts.append(f"wuku={names.WUKU[rule.wuku]}")
        if rule.dina is not None:
            parts.append(f"dina={rule.dina}")
        if rule.wulan is not None:
            parts.append(f"wulan={names.WULAN[rule.wulan - 1]}")
        if rule.taun is not None:
            parts.append(_quote("taun=" + names.TAUN[rule.taun]))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# -- compiled schedule -------------------------------------------------------

class CourtSchedule:
    """A compiled, immutable kurup chronology for one court."""

    def __init__(self, source: ScheduleSource):
        self.source = source
        self.court = source.court
        self.kurups = source.kurups
        self.mulya_rules = source.mulya
        self.anchors = CycleAnchors(source.wuku_anchor, source.paringkelan_anchor)
        self.first_taun = self.kurups[0].first_taun_aj
        self.last_taun = self.kurups[-1].last_taun_aj

        self._kurup_of_taun: dict[int, int] = {}
        self._taun_lengths: dict[int, tuple[int, ...]] = {}
        keys: list[tuple[int, int]] = []
        lengths: list[int] = []
        for ki, kurup in enumerate(self.kurups):
            if kurup.rule not in source.rules:
                raise ScheduleError(f"kurup {kurup.ordinal} uses undefined rule {kurup.rule}")
            for aj in range(kurup.first_taun_aj, kurup.last_taun_aj + 1):
                if aj in self._kurup_of_taun:
                    raise ScheduleError(f"taun {aj} is claimed by more than one kurup")
                self._kurup_of_taun[aj] = ki
                row = self._row(kurup, aj)
                self._taun_lengths[aj] = row
                for wulan, length in enumerate(row, 1):
                    keys.append((aj, wulan))
                    lengths.append(length)

        start = self.kurups[0].start_day_number
        # month_starts[i] is the day number of the first dina of wulan i
        self.month_keys = tuple(keys)
        self.month_lengths = tuple(lengths)
        self.month_starts = tuple(accumulate(lengths[:-1], initial=start))
        self.first_day = start
        self.last_day = start + sum(lengths) - 1
        self._month_index = {key: i for i, key in enumerate(keys)}

    def _row(self, kurup: KurupRecord, aj: int) -> tuple[int, ...]:
        row = list(self.source.rules[kurup.rule][taun_name_of(aj)])
        if aj == kurup.last_taun_aj and taun_name_of(aj) == JIMAKIR:
            # a kurup always loses one day in its closing Besar
            row[BESAR - 1] = 29
        for adj_aj, wulan, length in kurup.adjustments:
            if adj_aj == aj:
                row[wulan - 1] = length
        return tuple(row)

    def __repr__(self) -> str:
        return f"<CourtSchedule {self.court.value} {self.first_taun}-{self.last_taun} AJ>"

    # -- queries

    def check_taun(self, taun_aj: int) -> None:
        if taun_aj not in self._kurup_of_taun:
            raise CoverageError(
                f"taun {taun_aj} AJ is outside the decided chronology "
                f"({self.first_taun}-{self.last_taun} AJ)"
            )

    def kurup_of_taun(self, taun_aj: int) -> KurupRecord:
        self.check_taun(taun_aj)
        return self.kurups[self._kurup_of_taun[taun_aj]]

    def wulan_lengths(self, taun_aj: int) -> tuple[int, ...]:
        self.check_taun(taun_aj)
        return self._taun_lengths[taun_aj]

    def month_index(self, taun_aj: int, wulan_no: int) -> int:
        if not 1 <= wulan_no <= 12:
            raise DomainError(f"wulan number must be 1..12, got {wulan_no}")
        self.check_taun(taun_aj)
        return self._month_index[(taun_aj, wulan_no)]

    def taun_start(self, taun_aj: int) -> int:
        return self.month_starts[self.month_index(taun_aj, 1)]

    def locate(self, dn: int) -> int:
        """Index of the wulan containing day number ``dn``."""
        if dn < self.first_day:
            raise DomainError(f"day number {dn} is before the epoch")
        if dn > self.last_day:
            raise CoverageError(
                f"day number {dn} is beyond the end of kurup {self.kurups[-1].name} "
                f"({self.kurups[-1].last_taun_aj} AJ), later kurup rules are undecided"
            )
        return bisect.bisect_right(self.month_starts, dn) - 1

    def kurup_span(self, ordinal: int) -> int:
        """Number of days in kurup ``ordinal`` as compiled."""
        for kurup in self.kurups:
            if kurup.ordinal == ordinal:
                return sum(
                    sum(self._taun_lengths[aj])
                    for aj in range(kurup.first_taun_aj, kurup.last_taun_aj + 1)
                )
        raise KeyError(f"no kurup {ordinal}")


def wulan_length(schedule: CourtSchedule, taun_aj: int, wulan_no: int) -> int:
    if not 1 <= wulan_no <= 12:
        raise DomainError(f"wulan number must be 1..12, got {wulan_no}")
    return schedule.wulan_lengths(taun_aj)[wulan_no - 1]


def taun_length(schedule: CourtSchedule, taun_aj: int) -> int:
    return sum(schedule.wulan_lengths(taun_aj))


def validate_schedule(schedule: CourtSchedule) -> ValidationReport:
    report = ValidationReport()
    issues = report.issues
    source = schedule.source

    for number, rows in source.rules.items():
        for taun, row in enumerate(rows):
            if len(row) != 12:
                issues.append(f"rule {number} {names.TAUN[taun]}: {len(row)} wulan, expected 12")
            bad = [n for n in row if n not in (29, 30)]
            if bad:
                issues.append(f"rule {number} {names.TAUN[taun]}: wulan lengths {bad} not 29/30")

    kurups = schedule.kurups
    if kurups[0].start_day_number != 0:
        issues.append(f"kurup {kurups[0].ordinal} must start on the epoch, not {kurups[0].start}")
    for prev, cur in zip(kurups, kurups[1:]):
        if cur.first_taun_aj != prev.last_taun_aj + 1:
            issues.append(
                f"kurup {cur.ordinal} starts at {cur.first_taun_aj} AJ but kurup "
                f"{prev.ordinal} ends at {prev.last_taun_aj} AJ"
            )
    if kurups[-1].end is None:
        issues.append(f"final kurup {kurups[-1].ordinal} has no end date")

    for ki, kurup in enumerate(kurups):
        if kurup.taun_count <= 0:
            issues.append(f"kurup {kurup.ordinal} has an empty taun range")
            continue
        for aj, wulan, length in kurup.adjustments:
            if not kurup.first_taun_aj <= aj <= kurup.last_taun_aj:
                issues.append(f"kurup {kurup.ordinal}: adjustment for taun {aj} lies outside the kurup")
            if not 1 <= wulan <= 12 or length not in (29, 30):
                issues.append(f"kurup {kurup.ordinal}: bad adjustment {aj} {wulan} {length}")

        taun_range = range(kurup.first_taun_aj, kurup.last_taun_aj + 1)
        for aj in taun_range:
            total = sum(schedule.wulan_lengths(aj))
            if total not in (354, 355):
                issues.append(f"taun {aj} AJ has {total} days")

        span = sum(sum(schedule.wulan_lengths(aj)) for aj in taun_range)
        report.kurup_spans[kurup.ordinal] = span
        expected_end = (
            kurups[ki + 1].start_day_number if ki + 1 < len(kurups)
            else (day_number_from_gregorian(kurup.end) + 1 if kurup.end else None)
        )
        if expected_end is not None and expected_end - kurup.start_day_number != span:
            issues.append(
                f"kurup {kurup.ordinal} spans {span} days but its boundary dates allow "
                f"{expected_end - kurup.start_day_number}"
            )
        if schedule.taun_start(kurup.first_taun_aj) != kurup.start_day_number:
            issues.append(
                f"kurup {kurup.ordinal} compiles to start on day {schedule.taun_start(kurup.first_taun_aj)}, "
                f"not {kurup.start.isoformat()} (day {kurup.start_day_number})"
            )

        # complete windu inside the kurup
        full_windu = [
            aj for aj in taun_range
            if taun_name_of(aj) == 0 and aj + 7 <= kurup.last_taun_aj
        ]
        for aj in full_windu:
            total = sum(sum(schedule.wulan_lengths(a)) for a in range(aj, aj + 8))
            final = aj + 7 == kurup.last_taun_aj
            expected = 2834 if final else 2835
            if total != expected:
                issues.append(f"windu starting {aj} AJ sums to {total}, expected {expected}")
        starts = {weton_of(schedule.taun_start(aj)) for aj in full_windu}
        if len(starts) > 1:
            issues.append(f"kurup {kurup.ordinal}: 1 Sura Alip falls on several weton {sorted(starts)}")

    return report


def compile_schedule(source: ScheduleSource) -> CourtSchedule:
    schedule = CourtSchedule(source)
    report = validate_schedule(schedule)
    if not report.ok:
        raise ScheduleError(str(report))
    return schedule


def embedded_schedule_text(court: Court | str) -> str:
    court = Court.parse(court)
    return resources.files("jawacal.data").joinpath(f"{court.value}.sched").read_text(encoding="utf-8")


def load_schedule(court: Court | str | None = Court.SURAKARTA, path: str | Path | None = None) -> CourtSchedule:
    """Parse, compile and validate a schedule.

    With no ``path`` the embedded file for ``court`` is used. When a path is
    given and ``court`` is not None, the file must declare that court.
    """
    if path is None:
        text = embedded_schedule_text(court or Court.SURAKARTA)
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ScheduleError(f"cannot read schedule file {path}: {exc.strerror}") from None
    source = parse_schedule(text)
    if court is not None and source.court is not Court.parse(court):
        raise ScheduleError(f"schedule file declares court {source.court.value}, not {Court.parse(court).value}")
    return compile_schedule(source)
