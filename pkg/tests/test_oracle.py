"""Tests for the brute-force window oracle and the interval cross-check."""

from fractions import Fraction

import pytest

from beatty_stadium import config
from beatty_stadium.data_model import NOT_EVENTUAL, PartitionVerdict, WindowReport
from beatty_stadium.errors import InvalidRange
from beatty_stadium.oracle import (
    disjoint_window,
    first_intersection,
    interval_compare_agrees,
    interval_floor_agrees,
    rational_disjoint_oracle,
    rational_disjoint_witness,
    verify_eventual,
    verify_partition,
    window_report,
)
from beatty_stadium.sampling import random_seq
from beatty_stadium.sequences import BeattySeq, values_in


@pytest.fixture
def golden_pair(phi, phi2):
    return [BeattySeq(phi, 0), BeattySeq(phi2, 0)]


class TestWindowReport:
    def test_golden_window(self, golden_pair):
        report = window_report(golden_pair, -10, 10)
        assert report.missing == [-1]
        assert report.repeated == [(0, 2)]
        assert report.per_seq_counts == [13, 7]
        assert not report.clean

    def test_chunking_does_not_change_report(self, golden_pair):
        whole = window_report(golden_pair, -50, 50)
        for chunk in (1, 3, 7, 100):
            assert window_report(golden_pair, -50, 50, chunk=chunk) == whole

    def test_self_union_repeats(self, make_seq):
        report = window_report([make_seq(2), make_seq(2)], 0, 6)
        assert report.repeated == [(0, 2), (2, 2), (4, 2)]
        assert report.missing == [1, 3, 5]

    def test_dict_round_trip(self, golden_pair):
        report = window_report(golden_pair, -10, 10)
        d = report.to_dict()
        assert d["repeated"] == [["0", "2"]]
        assert WindowReport.from_dict(d) == report

    def test_empty_window(self, golden_pair):
        with pytest.raises(InvalidRange):
            window_report(golden_pair, 5, 5)


class TestVerdicts:
    def test_partitions(self, make_seq):
        assert verify_partition([make_seq(2), make_seq(2, 1)], -10, 10)
        assert verify_partition([make_seq(3), make_seq(3, 1), make_seq(3, 2)], -10, 10)

    def test_golden_is_eventual(self, golden_pair):
        assert verify_eventual(*golden_pair, -10, 10) == PartitionVerdict.eventual(0)

    def test_anomalies_become_witnesses(self, make_seq):
        v = verify_eventual(make_seq(2), make_seq(2), 0, 6)
        assert v.kind == NOT_EVENTUAL
        assert v.repeated == [0, 2, 4]
        assert v.missing == [1, 3, 5]

    def test_exception_outside_window_is_clean(self, golden_pair):
        assert verify_eventual(*golden_pair, 1, 40) == PartitionVerdict.partition()


class TestIntersections:
    def test_common_values(self, make_seq):
        assert disjoint_window(make_seq(2), make_seq(3), 0, 13) == [0, 6, 12]
        assert first_intersection(make_seq(2), make_seq(3), 1, 13) == 6

    def test_disjoint(self, make_seq):
        assert first_intersection(make_seq(2), make_seq(2, 1), -100, 100) is None

    def test_golden_pair_meets_once(self, golden_pair):
        assert disjoint_window(*golden_pair, -300, 300) == [0]

    def test_symmetric_and_equal_to_value_set_intersection(self, rng):
        lo, hi = -200, 200
        for i in range(40):
            d = rng.choice(config.RADICANDS)
            s1 = random_seq(rng, d)
            # every fourth pair shares its modulus
            s2 = BeattySeq(s1.alpha, random_seq(rng, d).beta) if i % 4 == 0 else random_seq(rng, d)
            forward = disjoint_window(s1, s2, lo, hi)
            assert forward == disjoint_window(s2, s1, lo, hi)
            assert forward == sorted(set(values_in(s1, lo, hi)) & set(values_in(s2, lo, hi)))
            assert first_intersection(s2, s1, lo, hi) == (forward[0] if forward else None)


class TestRationalOracle:
    def test_witness(self):
        assert rational_disjoint_witness(2, 2) == (0, 1)
        assert rational_disjoint_witness(2, 3) is None
        assert rational_disjoint_oracle(2, 3)
        assert not rational_disjoint_oracle(Fraction(3, 2), 3)


class TestIntervalCrossCheck:
    def test_floor(self, phi):
        assert interval_floor_agrees(phi) is True
        assert interval_floor_agrees(10**6 * phi) is True
        assert interval_floor_agrees(Fraction(-7, 2)) is True

    def test_compare(self, phi):
        assert interval_compare_agrees(phi, Fraction(8, 5)) is True
        assert interval_compare_agrees(phi, Fraction(13, 8)) is True
        assert interval_compare_agrees(phi, phi) is True
