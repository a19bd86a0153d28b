"""Javanese calendar: weton cycles, wuku, and the wulan/taun/windu/kurup chronology."""

from .chrono import (
    EPOCH,
    CycleAnchors,
    CycleNotConfigured,
    DomainError,
    Weton,
    day_number_from_gregorian,
    gregorian_from_day_number,
    legacy_cycle_index,
    pasaran_index,
    weekday_index,
    weton_of,
    wuku_index,
)
from .congruence import (
    CivilParts,
    pasaran_congruence,
    roll_civil_parts,
    weton_congruence,
    zeller_weekday,
)
from .engine import (
    FullDayRecord,
    JavaneseDate,
    day_number_from_javanese,
    dina_mulya_of,
    full_record,
    javanese_from_day_number,
    next_weton,
    occurrences_in_taun,
)
from .schedule import (
    Court,
    CourtSchedule,
    CoverageError,
    DinaMulyaRule,
    KurupRecord,
    ScheduleError,
    load_schedule,
    taun_length,
    taun_name_of,
    validate_schedule,
    windu_lambang_of,
    wulan_length,
)

__all__ = [
    "EPOCH", "CycleAnchors", "CycleNotConfigured", "DomainError", "Weton",
    "day_number_from_gregorian", "gregorian_from_day_number", "legacy_cycle_index",
    "pasaran_index", "weekday_index", "weton_of", "wuku_index",
    "CivilParts", "pasaran_congruence", "roll_civil_parts", "weton_congruence", "zeller_weekday",
    "FullDayRecord", "JavaneseDate", "day_number_from_javanese", "dina_mulya_of", "full_record",
    "javanese_from_day_number", "next_weton", "occurrences_in_taun",
    "Court", "CourtSchedule", "CoverageError", "DinaMulyaRule", "KurupRecord", "ScheduleError",
    "load_schedule", "taun_length", "taun_name_of", "validate_schedule", "windu_lambang_of",
    "wulan_length",
]
