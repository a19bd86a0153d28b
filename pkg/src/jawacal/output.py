"""Serialisation of day records: JSON objects, flat rows for CSV and text."""

from __future__ import annotations

import json
from importlib import resources

from . import names
from .engine import FullDayRecord

SCHEMA_VERSION = "jawacal.day/1"


def record_to_dict(record: FullDayRecord) -> dict:
    weton = record.weton
    jdate = record.javanese
    return {
        "schema": SCHEMA_VERSION,
        "gregorian": record.gregorian.isoformat(),
        "day_number": record.day_number,
        "weekday": {
            "index": weton.dinapitu,
            "name": names.DINAPITU[weton.dinapitu],
            "padinan": names.PADINAN[weton.dinapitu],
        },
        "pasaran": {
            "index": weton.pasaran,
            "ngoko": names.PASARAN[weton.pasaran],
            "krama": names.PASARAN_KRAMA[weton.pasaran],
        },
        "weton_name": weton.name,
        "wuku": None if record.wuku is None else {"index": record.wuku, "name": names.WUKU[record.wuku]},
        "paringkelan": record.paringkelan,
        "javanese": None if jdate is None else {
            "dina": jdate.dina,
            "wulan_no": jdate.wulan_no,
            "wulan_name": jdate.wulan_name,
            "taun_aj": jdate.taun_aj,
            "taun_name": jdate.taun_name,
            "windu": jdate.windu_name,
            "lambang": jdate.lambang_name,
            "kurup_no": jdate.kurup_ordinal,
            "kurup_name": jdate.kurup_name,
            "court": jdate.court.value,
        },
        "dina_mulya": list(record.dina_mulya),
        "warnings": list(record.warnings),
    }


# Flat column order; nested keys joined with '.'.
FLAT_FIELDS = (
    "schema", "gregorian", "day_number",
    "weekday.index", "weekday.name", "weekday.padinan",
    "pasaran.index", "pasaran.ngoko", "pasaran.krama",
    "weton_name", "wuku.index", "wuku.name", "paringkelan",
    "javanese.dina", "javanese.wulan_no", "javanese.wulan_name",
    "javanese.taun_aj", "javanese.taun_name", "javanese.windu", "javanese.lambang",
    "javanese.kurup_no", "javanese.kurup_name", "javanese.court",
    "dina_mulya", "warnings",
)
_NESTED = {"weekday", "pasaran", "wuku", "javanese"}


def flatten(data: dict) -> dict[str, str]:
    """String values keyed by FLAT_FIELDS. Nulls become '', lists join on ';'."""
    out = {}
    for key in FLAT_FIELDS:
        head, _, tail = key.partition(".")
        value = data[head]
        if tail:
            value = None if value is None else value[tail]
        if value is None:
            out[key] = ""
        elif isinstance(value, list):
            if any(";" in item for item in value):
                raise ValueError(f"{key} item contains the list separator ';': {value!r}")
            out[key] = ";".join(value)
        else:
            out[key] = str(value)
    return out


def unflatten(row: dict[str, str]) -> dict:
    """Inverse of :func:`flatten`, restoring types and nulls."""
    ints = {"day_number", "weekday.index", "pasaran.index", "wuku.index", "javanese.dina",
            "javanese.wulan_no", "javanese.taun_aj", "javanese.kurup_no"}
    data: dict = {}
    for key in FLAT_FIELDS:
        raw = row[key]
        if key in ("dina_mulya", "warnings"):
            value = raw.split(";") if raw else []
        elif raw == "":
            value = None
        elif key in ints:
            value = int(raw)
        else:
            value = raw
        head, _, tail = key.partition(".")
        if tail:
            data.setdefault(head, {})[tail] = value
        else:
            data[key] = value
    for head in _NESTED:
        if all(v is None for v in data[head].values()):
            data[head] = None
    return data


def to_json(record: FullDayRecord) -> str:
    return json.dumps(record_to_dict(record), ensure_ascii=False)


def to_text(record: FullDayRecord) -> str:
    flat = flatten(record_to_dict(record))
    lines = [record.headline()]
    lines += [f"{key}: {value}" for key, value in flat.items()]
    return "\n".join(lines)


def parse_text(text: str) -> dict[str, str]:
    """Read the ``key: value`` lines of :func:`to_text` output back."""
    out = {}
    for line in text.splitlines()[1:]:
        key, _, value = line.partition(": ")
        out[key] = value
    return out


def load_json_schema() -> dict:
    return json.loads(resources.files("jawacal.data").joinpath("record.schema.json").read_text(encoding="utf-8"))
