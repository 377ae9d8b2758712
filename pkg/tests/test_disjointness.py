"""Tests for coprimality of moduli and disjoint witnesses."""

from fractions import Fraction
from math import gcd

import pytest

from beatty_stadium.data_model import MN_WITNESS, NEITHER, RATIONAL_RATIO, JrtParams
from beatty_stadium.disjointness import (
    coprime_moduli,
    crt_coprime,
    crt_witness,
    gamma_disjoint_exists,
    gamma_offset_scan,
    gamma_witness,
    jrt_coprime,
    lattice_condition,
    remark_holds,
    skolem_necessary,
    solve_mn,
)
from beatty_stadium.errors import NonPositive, NotCoprime, NotIrrational, NotRational, NoWitness
from beatty_stadium.exact import sqrt
from beatty_stadium.oracle import disjoint_window, first_intersection, rational_disjoint_oracle
from beatty_stadium.sequences import BeattySeq


class TestIntegerModuli:
    def test_gcd(self):
        assert crt_coprime(2, 3)
        assert not crt_coprime(4, 6)

    def test_witness(self):
        assert crt_witness(2, 3) is None
        b1, b2 = crt_witness(4, 6)
        assert (b1, b2) == (0, 1)
        assert disjoint_window(BeattySeq(4, b1), BeattySeq(6, b2), -100, 100) == []

    def test_non_positive(self):
        with pytest.raises(NonPositive):
            crt_coprime(0, 1)


class TestRationalModuli:
    @pytest.mark.parametrize("a1,a2,expected", [
        (Fraction(3, 2), Fraction(5, 2), (True, None)),
        (4, 6, (False, (1, 1))),
        (2, 3, (True, None)),
        (Fraction(5, 2), Fraction(5, 2), (False, (1, 2))),
        (Fraction(5, 3), Fraction(5, 3), (True, None)),
    ])
    def test_known_pairs(self, a1, a2, expected):
        assert jrt_coprime(a1, a2) == expected

    def test_params(self):
        params = JrtParams.from_moduli(Fraction(19, 10), Fraction(19, 5))
        assert (params.p, params.q, params.u1, params.u2, params.target) == (19, 5, 2, 1, 3)

    def test_agrees_with_oracle(self):
        moduli = sorted({Fraction(p, q) for p in range(1, 6) for q in range(1, 6)})
        for a1 in moduli:
            for a2 in moduli:
                assert jrt_coprime(a1, a2)[0] == rational_disjoint_oracle(a1, a2), (a1, a2)

    def test_rejects_irrational(self, phi):
        with pytest.raises(NotRational):
            jrt_coprime(phi, 2)

    def test_rational_gamma_below_two(self):
        assert remark_holds(Fraction(3, 2), 1, 3)
        # 19/10 < 2, yet 19/10 and 19/5 admit disjoint offsets
        assert not remark_holds(Fraction(19, 10), 1, 2)
        assert not rational_disjoint_oracle(Fraction(19, 10), Fraction(19, 5))


class TestGammaModuli:
    def test_threshold(self):
        assert gamma_disjoint_exists(sqrt(5), 1, 2)
        assert not gamma_disjoint_exists(sqrt(2), 1, 2)

    def test_witness_above_two(self):
        b1, b2 = gamma_witness(sqrt(5), 1, 2, window=(-2000, 2000))
        assert b1 == 0
        assert b2 == sqrt(5) / 2

    def test_no_witness_below_two(self):
        with pytest.raises(NoWitness):
            gamma_witness(sqrt(2), 1, 2)

    def test_offset_scan_below_two_always_meets(self):
        scan = gamma_offset_scan(sqrt(2), 1, 2, samples=8, window=(-2000, 2000))
        assert len(scan) == 8
        assert all(hit is not None for _, hit in scan)

    def test_preconditions(self):
        with pytest.raises(NotIrrational):
            gamma_disjoint_exists(3, 1, 2)
        with pytest.raises(NotCoprime):
            gamma_disjoint_exists(sqrt(5), 2, 4)

    def test_lattice_condition(self):
        t, alpha2 = Fraction(1, 2), 4
        assert lattice_condition(t, Fraction(1, 2), alpha2)
        assert lattice_condition(t, Fraction(1, 8), alpha2)
        assert not lattice_condition(t, Fraction(1, 10), alpha2)
        assert not lattice_condition(t, Fraction(7, 8), alpha2)


class TestIrrationalRatio:
    def test_solve_mn(self, phi, phi2):
        assert solve_mn(phi, phi2) == (1, 1)
        assert solve_mn(2 * phi, 2 * phi2) == (2, 2)
        assert solve_mn(phi, 2 * phi) is None
        assert solve_mn(phi, sqrt(5)) is None

    def test_necessary_condition(self, phi, phi2):
        f = skolem_necessary(BeattySeq(2 * phi, 0), BeattySeq(2 * phi2, 0))
        assert (f.kind, f.m, f.n) == (MN_WITNESS, 2, 2)

    def test_disjoint_pair_satisfies_condition(self, phi, phi2):
        s1, s2 = BeattySeq(2 * phi, phi), BeattySeq(2 * phi2, 0)
        assert skolem_necessary(s1, s2).kind == MN_WITNESS
        assert disjoint_window(s1, s2, -500, 500) == []

    def test_neither_means_intersection(self, phi, phi2):
        s1, s2 = BeattySeq(2 * phi, Fraction(1, 2)), BeattySeq(2 * phi2, 0)
        assert skolem_necessary(s1, s2).kind == NEITHER
        assert first_intersection(s1, s2, -500, 500) is not None

    def test_rational_ratio(self):
        assert skolem_necessary(BeattySeq(2, 0), BeattySeq(4, 1)).kind == RATIONAL_RATIO


class TestCoprimeModuli:
    def test_integers(self):
        report = coprime_moduli(4, 6)
        assert (report.coprime, report.method) == (False, "crt")
        assert report.detail == {"gcd": "2"}
        assert coprime_moduli(2, 3).witness is None

    def test_rationals(self):
        report = coprime_moduli(Fraction(3, 2), Fraction(5, 2))
        assert (report.coprime, report.method) == (True, "jrt")
        assert report.detail["target"] == "-1"

    def test_rational_witness_is_disjoint(self):
        a1, a2 = Fraction(19, 10), Fraction(19, 5)
        report = coprime_moduli(a1, a2)
        assert not report.coprime
        b1, b2 = report.witness
        assert disjoint_window(BeattySeq(a1, b1), BeattySeq(a2, b2), -400, 400) == []

    def test_gamma(self):
        report = coprime_moduli(sqrt(5), 2 * sqrt(5))
        assert (report.coprime, report.method) == (False, "gamma")
        assert report.detail["r"] == "1"
        assert report.detail["s"] == "2"
        assert coprime_moduli(sqrt(2), 2 * sqrt(2)).coprime

    def test_skolem(self, phi, phi2):
        report = coprime_moduli(2 * phi, 2 * phi2)
        assert (report.coprime, report.method) == (False, "skolem")
        b1, b2 = report.witness
        assert disjoint_window(BeattySeq(2 * phi, b1), BeattySeq(2 * phi2, b2), -500, 500) == []
        assert coprime_moduli(phi, sqrt(5)).coprime

    def test_to_dict(self):
        d = coprime_moduli(4, 6).to_dict()
        assert d["witness"]["beta2"] == {"a": "1", "b": "0", "d": 1}
        assert gcd(4, 6) == int(d["detail"]["gcd"])
