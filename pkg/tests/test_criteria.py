"""Tests for the complementary, irrational and rational partition criteria."""

from fractions import Fraction

import pytest

from beatty_stadium.criteria import (
    classify_pair,
    common_start,
    complementary,
    complementary_from_w,
    corollary_predicts_partition,
    fraenkel_condition,
    lemma_conditions,
    lemma_positions,
    relocate_common_start,
    skolem_classify,
    skolem_condition,
)
from beatty_stadium.data_model import EVENTUAL, NOT_EVENTUAL, PARTITION
from beatty_stadium.errors import (
    BadModuli,
    CriterionNotSatisfied,
    NonPositive,
    NotComplementary,
    NotCoprime,
    NotIrrational,
    NuOutOfRange,
)
from beatty_stadium.oracle import verify_eventual, verify_partition
from beatty_stadium.sequences import BeattySeq, equal_rational


class TestComplementary:
    def test_golden_pair(self, phi, phi2):
        assert complementary(phi, phi2)

    @pytest.mark.parametrize("a1,a2,expected", [
        (2, 2, True),
        (Fraction(3, 2), 3, True),
        (2, 3, False),
    ])
    def test_rational_pairs(self, a1, a2, expected):
        assert complementary(a1, a2) is expected

    def test_non_positive(self):
        with pytest.raises(NonPositive):
            complementary(0, 2)

    def test_from_w(self, phi):
        assert complementary_from_w(1) == (2, 2)
        assert complementary_from_w(Fraction(1, 2)) == (Fraction(3, 2), 3)
        a1, a2 = complementary_from_w(phi - 1)
        assert a1 == phi
        assert complementary(a1, a2)
        with pytest.raises(NonPositive):
            complementary_from_w(-1)


class TestSkolem:
    def test_golden_pair_has_exception_at_zero(self, phi, phi2):
        s1, s2 = BeattySeq(phi, 0), BeattySeq(phi2, 0)
        assert skolem_condition(s1, s2)
        v = skolem_classify(s1, s2)
        assert v.kind == EVENTUAL
        assert v.n0 == 0
        assert v.repeated == [0]
        assert v.missing == [-1]

    def test_shifted_pair_moves_the_exception(self, phi, phi2):
        v = skolem_classify(BeattySeq(phi, 1), BeattySeq(phi2, 1))
        assert v.kind == EVENTUAL
        assert v.n0 == 1

    def test_meeting_off_the_integers_is_a_partition(self, phi, phi2):
        # beta2 = phi^2 - phi/2 makes the offsets sum to 1 while the athletes
        # only meet at half-integer times
        s1 = BeattySeq(phi, Fraction(1, 2))
        s2 = BeattySeq(phi2, phi2 - phi / 2)
        assert skolem_classify(s1, s2).kind == PARTITION
        assert verify_partition([s1, s2], -60, 60)

    def test_condition_fails(self, phi, phi2):
        s1, s2 = BeattySeq(phi, Fraction(1, 2)), BeattySeq(phi2, 0)
        assert not skolem_condition(s1, s2)
        assert skolem_classify(s1, s2).kind == NOT_EVENTUAL

    def test_agrees_with_window(self, phi, phi2):
        s1, s2 = BeattySeq(phi, 0), BeattySeq(phi2, 0)
        assert verify_eventual(s1, s2, -200, 200) == skolem_classify(s1, s2)

    def test_preconditions(self, phi):
        with pytest.raises(NotIrrational):
            skolem_classify(BeattySeq(2, 0), BeattySeq(2, 1))
        with pytest.raises(NotComplementary):
            skolem_classify(BeattySeq(phi, 0), BeattySeq(phi, 0))


class TestFraenkel:
    @pytest.mark.parametrize("r,s,b1,b2,expected", [
        (2, 1, 0, 1, True),
        (2, 1, 0, 0, False),
        (3, 1, 0, 1, True),
        (3, 1, 0, 0, False),
        (3, 2, 1, 0, True),
    ])
    def test_condition(self, r, s, b1, b2, expected):
        assert fraenkel_condition(r, s, b1, b2) is expected

    def test_condition_matches_window(self):
        for b1 in (Fraction(k, 6) for k in range(6)):
            for b2 in (Fraction(k, 4) for k in range(6)):
                pair = [BeattySeq(Fraction(5, 2), b1), BeattySeq(Fraction(5, 3), b2)]
                assert fraenkel_condition(5, 2, b1, b2) == verify_partition(pair, -30, 30)

    def test_preconditions(self):
        with pytest.raises(BadModuli):
            fraenkel_condition(2, 2, 0, 0)
        with pytest.raises(NotCoprime):
            fraenkel_condition(4, 2, 0, 0)


class TestPositions:
    def test_start_positions(self):
        x, y, j = lemma_positions(3, 1, 0, 1, 0)
        assert x == 0
        assert y == Fraction(1, 3)
        assert j == 0

    def test_positions_stay_in_range(self):
        for k in range(-6, 6):
            x, y, _ = lemma_positions(5, 2, Fraction(1, 3), Fraction(7, 4), k)
            assert 0 <= x < 1
            assert 0 < y <= 1

    def test_conditions_on_partition_and_failure(self):
        assert lemma_conditions(3, 1, 0, 1) == {2: True, 3: True, 4: True}
        assert lemma_conditions(2, 1, 0, 0) == {2: False, 3: False, 4: False}

    def test_conditions_match_criterion(self):
        for r, s in ((3, 1), (3, 2), (5, 2), (7, 3)):
            for i in range(2 * r):
                for j in range(2 * r):
                    b1, b2 = Fraction(i, 2 * s), Fraction(j, 2 * (r - s))
                    expected = fraenkel_condition(r, s, b1, b2)
                    assert lemma_conditions(r, s, b1, b2) == {2: expected, 3: expected, 4: expected}


class TestCommonStart:
    def test_prediction(self):
        assert common_start(3, 1, Fraction(1, 2), Fraction(5, 4))
        assert corollary_predicts_partition(3, 1, Fraction(1, 2), Fraction(5, 4)) is True
        assert corollary_predicts_partition(3, 1, 0, Fraction(3, 2)) is False
        assert corollary_predicts_partition(3, 1, 0, 1) is None

    def test_relocation_keeps_sequences(self):
        b1, b2 = relocate_common_start(3, 1, 0, 1, Fraction(1, 2))
        assert (b1, b2) == (Fraction(1, 2), Fraction(5, 4))
        assert common_start(3, 1, b1, b2)
        assert equal_rational(BeattySeq(3, 0), BeattySeq(3, b1))
        assert equal_rational(BeattySeq(Fraction(3, 2), 1), BeattySeq(Fraction(3, 2), b2))

    def test_relocation_errors(self):
        with pytest.raises(NuOutOfRange):
            relocate_common_start(3, 1, 0, 1, 0)
        with pytest.raises(CriterionNotSatisfied):
            relocate_common_start(3, 1, 0, 0, Fraction(1, 2))


class TestClassifyPair:
    def test_rational_partition_either_order(self):
        assert classify_pair(BeattySeq(3, 0), BeattySeq(Fraction(3, 2), 1)).kind == PARTITION
        assert classify_pair(BeattySeq(Fraction(3, 2), 1), BeattySeq(3, 0)).kind == PARTITION

    def test_rational_failure(self):
        assert classify_pair(BeattySeq(2, 0), BeattySeq(2, 0)).kind == NOT_EVENTUAL

    def test_non_complementary(self):
        assert classify_pair(BeattySeq(2, 0), BeattySeq(3, 0)).kind == NOT_EVENTUAL

    def test_irrational(self, phi, phi2):
        v = classify_pair(BeattySeq(phi, 0), BeattySeq(phi2, 0))
        assert (v.kind, v.n0) == (EVENTUAL, 0)
