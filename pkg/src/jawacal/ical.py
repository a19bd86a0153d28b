"""iCalendar (RFC 5545) export of weton recurrences and noble days.

Pure weton targets become one all-day event repeating every 35 days.
Noble days that also depend on the wuku or the Javanese date are listed as
individual all-day events.
"""

from __future__ import annotations

import datetime
import uuid

from . import names
from .chrono import CycleAnchors, Weton, day_number_from_gregorian, gregorian_from_day_number
from .engine import iter_rule, iter_weton
from .schedule import CourtSchedule, DinaMulyaRule

PRODID = "-//jawacal//Javanese calendar//EN"

WETON_NOTES = {
    Weton(6, 2): "The eve of Jemuwah Kliwon is popular and held auspicious for spiritual and magical matters.",
}


def escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\").replace(";", "\\;").replace(",", "\\,").replace("\n", "\\n")
    )


def fold(line: str) -> str:
    """Fold a content line to 75 octets per physical line."""
    raw = line.encode("utf-8")
    if len(raw) <= 75:
        return line
    parts = []
    limit = 75
    while raw:
        cut = min(limit, len(raw))
        # never split a UTF-8 sequence
        while cut < len(raw) and (raw[cut] & 0xC0) == 0x80:
            cut -= 1
        parts.append(raw[:cut].decode("utf-8"))
        raw = raw[cut:]
        limit = 74
    return "\r\n ".join(parts)


def _ics_date(date: datetime.date) -> str:
    return date.strftime("%Y%m%d")


def _event(date: datetime.date, summary: str, description: str, stamp: str, rrule: str | None = None) -> list[str]:
    uid = uuid.uuid5(uuid.NAMESPACE_URL, f"jawacal:{summary}:{date.isoformat()}")
    lines = [
        "BEGIN:VEVENT",
        f"UID:{uid}@jawacal",
        f"DTSTAMP:{stamp}",
        f"DTSTART;VALUE=DATE:{_ics_date(date)}",
        f"DTEND;VALUE=DATE:{_ics_date(date + datetime.timedelta(days=1))}",
        f"SUMMARY:{escape(summary)}",
        f"DESCRIPTION:{escape(description)}",
        "TRANSP:TRANSPARENT",
    ]
    if rrule:
        lines.append(f"RRULE:{rrule}")
    lines.append("END:VEVENT")
    return lines


def _calendar(events: list[list[str]], name: str) -> str:
    lines = [
        "BEGIN:VCALENDAR",
        "VERSION:2.0",
        f"PRODID:{PRODID}",
        "CALSCALE:GREGORIAN",
        "METHOD:PUBLISH",
        f"X-WR-CALNAME:{escape(name)}",
    ]
    for event in events:
        lines += event
    lines.append("END:VCALENDAR")
    return "".join(fold(line) + "\r\n" for line in lines)


def _stamp(now: datetime.datetime | None) -> str:
    now = now or datetime.datetime.now(datetime.timezone.utc)
    return now.astimezone(datetime.timezone.utc).strftime("%Y%m%dT%H%M%SZ")


def weton_calendar(
    target: Weton,
    start: datetime.date,
    until: datetime.date,
    summary: str | None = None,
    now: datetime.datetime | None = None,
) -> str:
    """Calendar with one event on the first ``target`` day in ``[start, until]``,
    repeating every 35 days through ``until``."""
    summary = summary or f"Weton {target.name}"
    start_dn, end_dn = day_number_from_gregorian(start), day_number_from_gregorian(until)
    first = next(iter_weton(target, start_dn, end_dn), None)
    events = []
    if first is not None:
        description = f"{target.name} recurs every 35 days."
        if target in WETON_NOTES:
            description += " " + WETON_NOTES[target]
        rrule = f"FREQ=DAILY;INTERVAL=35;UNTIL={_ics_date(until)}"
        events.append(_event(gregorian_from_day_number(first), summary, description, _stamp(now), rrule))
    return _calendar(events, summary)


def mulya_calendar(
    rule: DinaMulyaRule,
    start: datetime.date,
    until: datetime.date,
    schedule: CourtSchedule,
    anchors: CycleAnchors | None = None,
    now: datetime.datetime | None = None,
) -> str:
    if rule.pure_weton:
        return weton_calendar(rule.weton, start, until, summary=rule.name, now=now)
    stamp = _stamp(now)
    start_dn, end_dn = day_number_from_gregorian(start), day_number_from_gregorian(until)
    conditions = []
    if rule.weton is not None:
        conditions.append(f"weton {rule.weton.name}")
    if rule.wuku is not None:
        conditions.append(f"wuku {names.WUKU[rule.wuku]}")
    if rule.dina is not None:
        conditions.append(f"dina {rule.dina}")
    if rule.wulan is not None:
        conditions.append(f"wulan {names.WULAN[rule.wulan - 1]}")
    if rule.taun is not None:
        conditions.append(f"taun {names.TAUN[rule.taun]}")
    description = f"{rule.name}: " + ", ".join(conditions)
    events = [
        _event(gregorian_from_day_number(dn), rule.name, description, stamp)
        for dn in iter_rule(rule, start_dn, end_dn, schedule, anchors)
    ]
    return _calendar(events, rule.name)
