import datetime

import pytest

from jawacal.chrono import CycleAnchors, DomainError, Weton, day_number_from_gregorian, weton_of, wuku_index
from jawacal.engine import (
    WUKU_UNSET_WARNING,
    JavaneseDate,
    day_number_from_javanese,
    dina_mulya_of,
    find_rule,
    full_record,
    iter_weton,
    javanese_from_day_number,
    next_weton,
    occurrences_in_taun,
    record_for_day_number,
)
from jawacal.names import TAUN, WUKU, parse_weton
from jawacal.schedule import Court, CoverageError, taun_name_of

import oracles

NO_WUKU = CycleAnchors(wuku_anchor=None)


def triple(j):
    return j.taun_aj, j.wulan_no, j.dina


class TestConversion:
    @pytest.mark.parametrize("dn, expected", [
        (0, (1555, 1, 1)),
        (29, (1555, 1, 30)),
        (30, (1555, 2, 1)),
        (45016, (1682, 1, 13)),
        (42523, (1674, 12, 29)),
        (42524, (1675, 1, 1)),
        (153085, (1986, 12, 29)),
    ])
    def test_examples(self, surakarta, dn, expected):
        assert triple(javanese_from_day_number(dn, surakarta)) == expected

    def test_hand_counted_example(self, surakarta):
        dn = day_number_from_gregorian("1756-10-07")
        assert dn == 45016 == oracles.days_since_epoch(1756, 10, 7)
        j = javanese_from_day_number(dn, surakarta)
        assert str(j) == "13 Sura Jimakir 1682 AJ"
        assert j.kurup_name == "Kamsiyah"
        assert weton_of(dn).name == "Kêmis Pahing"

    def test_2020_december(self, surakarta):
        first = javanese_from_day_number(day_number_from_gregorian("2020-12-01"), surakarta)
        last = javanese_from_day_number(day_number_from_gregorian("2020-12-31"), surakarta)
        assert triple(first) == (1954, 4, 15)
        assert triple(last) == (1954, 5, 16)
        assert first.taun_name == last.taun_name == "Jimakir"
        assert first.kurup_name == "Salasiyah"

    def test_javanese_date_names(self):
        j = JavaneseDate(1, 1, 1555, 1, "Jamingiyah", Court.SURAKARTA)
        assert (j.wulan_name, j.taun_name, j.windu_name, j.lambang_name) == ("Sura", "Alip", "Adi", "Langkir")

    @pytest.mark.parametrize("court, walk", [("surakarta", oracles.SURAKARTA), ("yogyakarta", oracles.YOGYAKARTA)])
    def test_every_day_matches_oracle(self, court, walk, request):
        schedule = request.getfixturevalue(court)
        count = 0
        for dn, expected in enumerate(oracles.javanese_walk(walk)):
            j = javanese_from_day_number(dn, schedule)
            assert triple(j) == expected
            assert day_number_from_javanese(expected, schedule) == dn
            count += 1
        assert count == schedule.last_day + 1 == 153086

    def test_reverse_accepts_dataclass(self, surakarta):
        j = javanese_from_day_number(70873, surakarta)
        assert day_number_from_javanese(j, surakarta) == 70873

    def test_reverse_examples(self, surakarta):
        assert day_number_from_javanese((1562, 12, 30), surakarta) == 2834
        assert day_number_from_javanese((1755, 1, 1), surakarta) == 70873

    def test_nonexistent_day(self, surakarta):
        with pytest.raises(DomainError, match="Sapar 1555 has 29 days"):
            day_number_from_javanese((1555, 2, 30), surakarta)
        with pytest.raises(DomainError):
            day_number_from_javanese((1555, 1, 0), surakarta)

    def test_outside_coverage(self, surakarta):
        with pytest.raises(CoverageError):
            javanese_from_day_number(153086, surakarta)
        with pytest.raises(CoverageError):
            day_number_from_javanese((1987, 1, 1), surakarta)
        with pytest.raises(DomainError):
            javanese_from_day_number(-1, surakarta)

    def test_courts_diverge_only_between_1749_and_1794(self, surakarta, yogyakarta):
        differ = [
            dn for dn in range(surakarta.last_day + 1)
            if triple(javanese_from_day_number(dn, surakarta)) != triple(javanese_from_day_number(dn, yogyakarta))
        ]
        assert (differ[0], differ[-1]) == (68747, 85047)
        # inside the window the offset drifts between 0 and 1 day
        assert len(differ) <= 85047 - 68747 + 1
        assert surakarta.taun_start(1795) == yogyakarta.taun_start(1795) == 85048

    def test_surakarta_1755(self, surakarta, yogyakarta):
        assert surakarta.taun_start(1755) == 70873
        assert weton_of(70873).name == "Rêbo Wage"
        assert yogyakarta.taun_start(1755) != 70873


class TestFullRecord:
    def test_epoch(self, surakarta):
        r = full_record("1633-07-08", surakarta)
        assert r.day_number == 0
        assert r.weton.name == "Jemuwah Lêgi"
        assert set(r.dina_mulya) == {"Siji Sura", "Dina Purnama"}
        assert r.headline() == "Jemuwah Lêgi, 1 Sura Alip 1555 AJ, kurup Jamingiyah"
        assert not r.partial and r.warnings == ()

    def test_accepts_date_objects(self, surakarta):
        assert full_record(datetime.date(1756, 10, 7), surakarta) == full_record("1756-10-07", surakarta)
        assert record_for_day_number(45016, surakarta) == full_record("1756-10-07", surakarta)

    def test_before_epoch(self, surakarta):
        with pytest.raises(DomainError, match="before the Javanese epoch"):
            full_record("1633-07-07", surakarta)

    def test_beyond_coverage_is_partial(self, surakarta):
        r = full_record("2052-08-26", surakarta)
        assert r.partial and r.javanese is None
        assert r.weton.name == "Sênèn Pahing"
        assert r.wuku is not None
        assert any("2052" in w or "covers" in w or "beyond" in w for w in r.warnings)

    def test_unset_wuku_anchor(self, surakarta):
        r = full_record("2020-09-16", surakarta, NO_WUKU)
        assert r.wuku is None
        assert WUKU_UNSET_WARNING in r.warnings
        assert "Kuningan" not in r.dina_mulya
        assert not r.partial

    def test_wuku_noble_days(self, surakarta):
        for rule_name in ("Kuningan", "Hanggara Asih", "Dina Mulya"):
            rule = find_rule(surakarta, rule_name)
            start = day_number_from_gregorian("2020-01-01")
            hits = [dn for dn in range(start, start + 420) if rule_name in full_record_dn(surakarta, dn).dina_mulya]
            assert len(hits) == 2 and hits[1] - hits[0] == 210
            assert all(weton_of(dn) == rule.weton and wuku_index(dn) == rule.wuku for dn in hits)

    def test_aboge_only_in_alip(self, surakarta):
        # a Rêbo Wage outside an Alip taun
        dn = next(d for d in iter_weton(Weton(*parse_weton("Rêbo Wage")), 0, 10_000)
                  if javanese_from_day_number(d, surakarta).taun_index != 0)
        assert "Aboge" not in record_for_day_number(dn, surakarta).dina_mulya
        assert "Aboge" in record_for_day_number(70873, surakarta).dina_mulya

    def test_dina_mulya_of_ignores_wuku_rules_without_wuku(self, surakarta):
        r = full_record("2020-09-19", surakarta, NO_WUKU)
        assert dina_mulya_of(r, surakarta.mulya_rules) == list(r.dina_mulya)


def full_record_dn(schedule, dn):
    return record_for_day_number(dn, schedule)


class TestRecurrence:
    def test_next_weton_strictly_after(self):
        target = weton_of(100)
        assert next_weton(100, target, 3) == [135, 170, 205]
        assert next_weton(99, target, 1) == [100]
        assert next_weton(100, target, 0) == []
        with pytest.raises(ValueError):
            next_weton(0, target, -1)

    def test_next_weton_all_targets(self):
        for p in range(35):
            target = weton_of(p)
            (dn,) = next_weton(1000, target, 1)
            assert 1000 < dn <= 1035 and weton_of(dn) == target

    def test_iter_weton_inclusive(self):
        target = weton_of(70)
        assert list(iter_weton(target, 70, 140)) == [70, 105, 140]
        assert list(iter_weton(target, 71, 104)) == []

    def test_occurrences_siji_sura(self, surakarta):
        rule = find_rule(surakarta, "Siji Sura")
        for aj in (1555, 1748, 1953, 1986):
            assert occurrences_in_taun(rule, aj, surakarta) == [surakarta.taun_start(aj)]
        assert occurrences_in_taun(rule, 1953, surakarta) == [141038]

    def test_aboge_1955_by_scan(self, surakarta):
        rule = find_rule(surakarta, "Aboge")
        assert taun_name_of(1955) == 0
        found = occurrences_in_taun(rule, 1955, surakarta)
        start = surakarta.taun_start(1955)
        scanned = [dn for dn in range(start, start + 354) if weton_of(dn).name == "Rêbo Wage"]
        assert found == scanned
        assert len(found) == 11

    def test_aboge_counts_per_kurup(self, surakarta):
        # a 354-day taun holds 10 or 11 of any weton, depending on where it starts
        rule = find_rule(surakarta, "Aboge")
        for kurup in surakarta.kurups:
            counts = {len(occurrences_in_taun(rule, aj, surakarta))
                      for aj in range(kurup.first_taun_aj, kurup.last_taun_aj + 1) if taun_name_of(aj) == 0}
            assert counts == ({10} if kurup.ordinal <= 2 else {11})

    def test_dina_purnama_counts(self, surakarta):
        rule = find_rule(surakarta, "Dina Purnama")
        for aj in range(1555, 1987, 37):
            assert len(occurrences_in_taun(rule, aj, surakarta)) in (10, 11)

    def test_weton_target(self, surakarta):
        hits = occurrences_in_taun(Weton(*parse_weton("Jemuwah Lêgi")), 1555, surakarta)
        assert hits[0] == 0 and len(hits) == 11

    def test_wuku_rule_needs_anchor(self, surakarta):
        with pytest.raises(DomainError, match="wuku"):
            occurrences_in_taun(find_rule(surakarta, "Kuningan"), 1953, surakarta, NO_WUKU)

    def test_find_rule(self, surakarta):
        assert find_rule(surakarta, "siji sura").name == "Siji Sura"
        assert WUKU[find_rule(surakarta, "Kuningan").wuku] == "Kuningan"
        assert TAUN[find_rule(surakarta, "Daltugi").taun] == "Dal"
        with pytest.raises(KeyError, match="Siji Sura"):
            find_rule(surakarta, "Grebeg")
