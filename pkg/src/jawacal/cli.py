"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 partial record (date
beyond the decided kurup chronology), 3 schedule data-file error.

Every global flag has an environment mirror; the flag wins when both are set:

    --court             JAWACAL_COURT
    --schedule          JAWACAL_SCHEDULE
    --wuku-anchor       JAWACAL_WUKU_ANCHOR
    --paringkelan-anchor JAWACAL_PARINGKELAN_ANCHOR
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import os
import sys
from dataclasses import replace

from . import names
from .chrono import (
    CycleAnchors,
    DomainError,
    Weton,
    day_number_from_gregorian,
    gregorian_from_day_number,
)
from .engine import day_number_from_javanese, find_rule, full_record, next_weton, record_for_day_number
from .ical import mulya_calendar, weton_calendar
from .output import FLAT_FIELDS, flatten, record_to_dict, to_text
from .schedule import (
    Court,
    CourtSchedule,
    ScheduleError,
    dump_schedule,
    embedded_schedule_text,
    load_schedule,
    parse_schedule,
    validate_schedule,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2
EXIT_DATA = 3

ENV_COURT = "JAWACAL_COURT"
ENV_SCHEDULE = "JAWACAL_SCHEDULE"
ENV_WUKU_ANCHOR = "JAWACAL_WUKU_ANCHOR"
ENV_PARINGKELAN_ANCHOR = "JAWACAL_PARINGKELAN_ANCHOR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for partial records
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _iso_date(text: str) -> datetime.date:
    try:
        return datetime.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO-8601 date: {text!r}") from None


def _anchor_value(text: str | None, what: str) -> int | None:
    if text is None or text.lower() == "none":
        return None
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer or 'none', got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--court", help="surakarta (default) or yogyakarta [$%s]" % ENV_COURT)
    common.add_argument("--schedule", metavar="FILE", help="schedule data file [$%s]" % ENV_SCHEDULE)
    common.add_argument("--wuku-anchor", metavar="N|none", help="wuku cycle anchor 0..209 [$%s]" % ENV_WUKU_ANCHOR)
    common.add_argument("--paringkelan-anchor", metavar="N|none",
                        help="paringkelan cycle anchor 0..5 [$%s]" % ENV_PARINGKELAN_ANCHOR)

    parser = _Parser(prog="jawacal", description="Javanese calendar conversions and weton cycles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", parents=[common], help="full record for a Gregorian date")
    p.add_argument("date", type=_iso_date)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(format="text")

    p = sub.add_parser("reverse", parents=[common], help="Gregorian date of a Javanese date")
    p.add_argument("--aj", type=int, required=True, help="taun number (AJ)")
    p.add_argument("--wulan", required=True, help="wulan number 1..12 or name")
    p.add_argument("--dina", type=int, required=True, help="day of the wulan")

    p = sub.add_parser("next", parents=[common], help="next occurrences of a weton")
    p.add_argument("--weton", required=True, help='e.g. "Selasa Wage" or "Anggara Cemeng"')
    p.add_argument("--from", dest="start", type=_iso_date, required=True)
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("ical", parents=[common], help="iCalendar export of a weton or noble day")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--weton")
    target.add_argument("--mulya", help='noble day name, e.g. "Siji Sura"')
    p.add_argument("--from", dest="start", type=_iso_date, required=True)
    p.add_argument("--until", type=_iso_date, required=True)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("range", parents=[common], help="one record per day over a date range")
    p.add_argument("--from", dest="start", type=_iso_date, required=True)
    p.add_argument("--to", dest="end", type=_iso_date, required=True)
    p.add_argument("--format", choices=("csv", "json-lines", "text"), default="csv")

    p = sub.add_parser("validate", parents=[common], help="check a schedule file")
    p.add_argument("--dump", action="store_true", help="print the normalised schedule")
    return parser


def resolve_schedule(args, environ=os.environ) -> CourtSchedule:
    court = args.court or environ.get(ENV_COURT) or None
    path = args.schedule or environ.get(ENV_SCHEDULE) or None
    if court is not None:
        try:
            court = Court.parse(court)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif path is None:
        court = Court.SURAKARTA
    return load_schedule(court, path)


def resolve_anchors(args, schedule: CourtSchedule, environ=os.environ) -> CycleAnchors:
    anchors = schedule.anchors
    for attr, env, field_name in (
        ("wuku_anchor", ENV_WUKU_ANCHOR, "wuku_anchor"),
        ("paringkelan_anchor", ENV_PARINGKELAN_ANCHOR, "paringkelan_anchor"),
    ):
        raw = getattr(args, attr)
        if raw is None:
            raw = environ.get(env)
        if raw is not None:
            anchors = replace(anchors, **{field_name: _anchor_value(raw, attr.replace("_", "-"))})
    return anchors


def _resolve_weton(text: str) -> Weton:
    try:
        return Weton(*names.parse_weton(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_convert(args, schedule, anchors, out) -> int:
    record = full_record(args.date, schedule, anchors)
    if args.format == "json":
        out.write(json.dumps(record_to_dict(record), ensure_ascii=False, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=FLAT_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerow(flatten(record_to_dict(record)))
    else:
        out.write(to_text(record) + "\n")
    for warning in record.warnings:
        print(f"jawacal: warning: {warning}", file=sys.stderr)
    return EXIT_PARTIAL if record.partial else EXIT_OK


def cmd_reverse(args, schedule, anchors, out) -> int:
    try:
        wulan = int(args.wulan)
    except ValueError:
        try:
            wulan = names.wulan_number(args.wulan)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    dn = day_number_from_javanese((args.aj, wulan, args.dina), schedule)
    out.write(gregorian_from_day_number(dn).isoformat() + "\n")
    return EXIT_OK


def cmd_next(args, schedule, anchors, out) -> int:
    target = _resolve_weton(args.weton)
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    for dn in next_weton(day_number_from_gregorian(args.start), target, args.count):
        out.write(gregorian_from_day_number(dn).isoformat() + "\n")
    return EXIT_OK


def _check_range(start: datetime.date, end: datetime.date, end_flag: str) -> None:
    if end < start:
        raise UsageError(f"{end_flag} {end} is before --from {start}")
    if day_number_from_gregorian(start) < 0:
        raise UsageError(f"--from {start} is before the Javanese epoch 1633-07-08")


def cmd_ical(args, schedule, anchors, out) -> int:
    _check_range(args.start, args.until, "--until")
    if args.weton:
        text = weton_calendar(_resolve_weton(args.weton), args.start, args.until)
    else:
        try:
            rule = find_rule(schedule, args.mulya)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if rule.needs_wuku and anchors.wuku_anchor is None:
            raise UsageError(f"{rule.name} depends on the wuku, but no wuku anchor is configured")
        text = mulya_calendar(rule, args.start, args.until, schedule, anchors)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_range(args, schedule, anchors, out) -> int:
    _check_range(args.start, args.end, "--to")
    first, last = day_number_from_gregorian(args.start), day_number_from_gregorian(args.end)
    partial = False
    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=FLAT_FIELDS, lineterminator="\n")
        writer.writeheader()
    for dn in range(first, last + 1):
        record = record_for_day_number(dn, schedule, anchors)
        partial = partial or record.partial
        if writer is not None:
            writer.writerow(flatten(record_to_dict(record)))
        elif args.format == "json-lines":
            out.write(json.dumps(record_to_dict(record), ensure_ascii=False) + "\n")
        else:
            out.write(to_text(record) + "\n\n")
    return EXIT_PARTIAL if partial else EXIT_OK


def cmd_validate(args, environ, out) -> int:
    path = args.schedule or environ.get(ENV_SCHEDULE) or None
    if path is None:
        text = embedded_schedule_text(args.court or environ.get(ENV_COURT) or Court.SURAKARTA)
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    schedule = CourtSchedule(parse_schedule(text))
    report = validate_schedule(schedule)
    out.write(f"{schedule.court.value}: {report}\n")
    for ordinal, span in report.kurup_spans.items():
        out.write(f"  kurup {ordinal}: {span} days\n")
    if args.dump:
        out.write(dump_schedule(schedule.source))
    return EXIT_OK if report.ok else EXIT_DATA


COMMANDS = {
    "convert": cmd_convert,
    "reverse": cmd_reverse,
    "next": cmd_next,
    "ical": cmd_ical,
    "range": cmd_range,
}


def main(argv=None, out=None, environ=None) -> int:
    out = out or sys.stdout
    environ = os.environ if environ is None else environ
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return cmd_validate(args, environ, out)
        schedule = resolve_schedule(args, environ)
        anchors = resolve_anchors(args, schedule, environ)
        return COMMANDS[args.command](args, schedule, anchors, out)
    except ScheduleError as exc:
        print(f"jawacal: schedule error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"jawacal: schedule error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (UsageError, DomainError, ValueError) as exc:
        print(f"jawacal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
