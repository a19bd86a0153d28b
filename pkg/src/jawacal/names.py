"""Name tables for the Javanese calendar cycles.

Index conventions are fixed here and used everywhere else:

* dinapitu (weekday): 0 = Saturday ... 6 = Friday, the Zeller ordering;
* pasaran: 0 = Pon ... 4 = Pahing;
* wuku: 0 = Sinta ... 29 = Watugunung;
* wulan: 1 = Sura ... 12 = Besar (one-based, like Gregorian months);
* taun: 0 = Alip ... 7 = Jimakir.
"""

from __future__ import annotations

import unicodedata

# Zeller order, Saturday first.
DINAPITU = ("Sêtu", "Ngahad", "Sênèn", "Selasa", "Rêbo", "Kêmis", "Jemuwah")
PADINAN = ("Tumpak", "Dite", "Soma", "Anggara", "Buda", "Respati", "Sukra")
WEEKDAY_EN = ("Saturday", "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday")
WEEKDAY_ID = ("Sabtu", "Minggu", "Senin", "Selasa", "Rabu", "Kamis", "Jumat")

PASARAN = ("Pon", "Wage", "Kliwon", "Lêgi", "Pahing")
PASARAN_KRAMA = ("Petak", "Cemeng", "Asih", "Manis", "Pahit")

WUKU = (
    "Sinta", "Landep", "Wukir", "Kurantil", "Tolu", "Gumbreg",
    "Warigalit", "Warigagung", "Julungwangi", "Sungsang", "Galungan", "Kuningan",
    "Langkir", "Mandasiya", "Julungpujut", "Pahang", "Kuruwelut", "Marakeh",
    "Tambir", "Medangkungan", "Maktal", "Wuye", "Manahil", "Prangbakat",
    "Bala", "Wugu", "Wayang", "Kulawu", "Dukut", "Watugunung",
)

WULAN = (
    "Sura", "Sapar", "Mulud", "Bakdamulud", "Jumadilawal", "Jumadilakir",
    "Rejeb", "Ruwah", "Pasa", "Sawal", "Dulkangidah", "Besar",
)

TAUN = ("Alip", "Ehé", "Jimawal", "Jé", "Dal", "Bé", "Wawu", "Jimakir")
TAUN_KRAMA = ("Purwana", "Karyana", "Anama", "Lalana", "Ngawanga", "Pawaka", "Wasana", "Swasana")

WINDU = ("Adi", "Kuntara", "Sêngara", "Sancaya")
# lambang paired with each windu, row by row
LAMBANG_OF_WINDU = ("Langkir", "Kulawu", "Langkir", "Kulawu")
LAMBANG = ("Langkir", "Kulawu")

PARINGKELAN = ("Tungle", "Aryang", "Wurukung", "Paningron", "Uwas", "Mawulu")
# name tables only; these cycles have no known anchor
PADEWAN = ("Sri", "Indra", "Guru", "Yama", "Rudra", "Brama", "Kala", "Uma")
PADANGON = ("Dangu", "Jagur", "Gigis", "Kerangan", "Nohan", "Wogan", "Tulus", "Wurung", "Dadi")


def fold(name: str) -> str:
    """Lower-case and strip diacritics so 'Lêgi', 'LEGI' and 'legi' compare equal."""
    decomposed = unicodedata.normalize("NFKD", name)
    return "".join(c for c in decomposed if not unicodedata.combining(c)).casefold().strip()


_DAY_SPELLINGS = (
    DINAPITU, PADINAN, WEEKDAY_EN, WEEKDAY_ID,
    ("Setu", "Ahad", "Senen", "Slasa", "Rebo", "Kemis", "Jumungah"),
    (None, None, None, None, None, None, "Jumuwah"),
)
_PASARAN_SPELLINGS = (
    PASARAN, PASARAN_KRAMA,
    (None, None, None, "Legi", "Paing"),
)

DAY_ALIASES = {
    fold(name): i for spellings in _DAY_SPELLINGS for i, name in enumerate(spellings) if name
}
PASARAN_ALIASES = {
    fold(name): i for spellings in _PASARAN_SPELLINGS for i, name in enumerate(spellings) if name
}


def _lookup(table: tuple[str, ...], name: str, what: str) -> int:
    key = fold(name)
    for i, candidate in enumerate(table):
        if fold(candidate) == key:
            return i
    raise KeyError(f"unknown {what} {name!r}; expected one of {', '.join(table)}")


def wulan_number(name: str) -> int:
    """1-based wulan number; accepts 'Sela' for Dulkangidah."""
    if fold(name) == "sela":
        return 11
    return _lookup(WULAN, name, "wulan") + 1


def taun_index(name: str) -> int:
    return _lookup(TAUN, name, "taun")


def wuku_index_of(name: str) -> int:
    return _lookup(WUKU, name, "wuku")


def weton_name(dinapitu: int, pasaran: int) -> str:
    return f"{DINAPITU[dinapitu]} {PASARAN[pasaran]}"


def all_weton_names() -> list[str]:
    return [weton_name(d, p) for d in range(7) for p in range(5)]


def parse_weton(text: str) -> tuple[int, int]:
    """Resolve a weton name such as 'Selasa Wage' or 'slasa paing' to (dinapitu, pasaran)."""
    parts = text.split()
    if len(parts) == 2:
        day = DAY_ALIASES.get(fold(parts[0]))
        pasaran = PASARAN_ALIASES.get(fold(parts[1]))
        if day is not None and pasaran is not None:
            return day, pasaran
    raise ValueError(
        f"unknown weton {text!r}; valid names are: {', '.join(all_weton_names())}"
    )
