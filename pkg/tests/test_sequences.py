"""Tests for Beatty sequence values, membership and normalization."""

from fractions import Fraction

import pytest

from beatty_stadium.errors import (
    AlphasDiffer,
    AmbiguousIndex,
    InvalidModulus,
    InvalidRange,
    MixedRadicands,
    NotRational,
)
from beatty_stadium.exact import as_exact, sqrt
from beatty_stadium.sampling import random_seq
from beatty_stadium.sequences import (
    BeattySeq,
    contains,
    density_estimate,
    equal_rational,
    generate,
    index_range,
    multiplicities,
    multiplicity,
    normalize,
    term,
    values_in,
)


class TestTerms:
    def test_term_golden(self, make_seq):
        assert term(make_seq("1/2+1/2*sqrt(5)"), 5) == 8

    def test_generate_rational(self, make_seq):
        assert [v for _, v in generate(make_seq("5/2"), 0, 4)] == [0, 2, 5, 7, 10]

    def test_generate_keeps_indices(self, make_seq):
        assert generate(make_seq("5/2", "1/3"), -1, 1) == [(-1, -3), (0, 0), (1, 2)]

    def test_negative_indices_floor_down(self, phi):
        s = BeattySeq(phi, 0)
        assert [s.term(n) for n in (-1, -2, -3)] == [-2, -4, -5]

    def test_generate_empty_range(self, make_seq):
        with pytest.raises(InvalidRange):
            generate(make_seq("5/2"), 3, 2)

    def test_single_index_range(self, make_seq):
        assert generate(make_seq("5/2"), 2, 2) == [(2, 5)]


class TestConstruction:
    @pytest.mark.parametrize("alpha", [0, -1, "1/2-1/2*sqrt(5)"])
    def test_non_positive_modulus(self, make_seq, alpha):
        with pytest.raises(InvalidModulus):
            make_seq(alpha)

    def test_mixed_radicands(self):
        with pytest.raises(MixedRadicands):
            BeattySeq(sqrt(2), sqrt(3))

    def test_dict_round_trip(self, make_seq):
        s = make_seq("1/2+1/2*sqrt(5)", "1/3")
        assert BeattySeq.from_dict(s.to_dict()) == s
        assert str(s) == "S(1/2+1/2*sqrt(5), 1/3)"


class TestMembership:
    def test_contains_returns_index(self, make_seq):
        s = make_seq("1/2+1/2*sqrt(5)")
        assert contains(s, 4) == 3
        assert contains(s, 0) == 0
        assert contains(s, 5) is None

    def test_contains_agrees_with_generate(self, phi):
        s = BeattySeq(phi * phi, Fraction(1, 3))
        listed = dict((v, n) for n, v in generate(s, -30, 30))
        for k in range(-70, 70):
            if listed.get(k) is not None or contains(s, k) is not None:
                assert contains(s, k) == listed.get(k)

    def test_small_modulus_is_ambiguous(self, make_seq):
        s = make_seq("1/2")
        assert multiplicity(s, 3) == 2
        with pytest.raises(AmbiguousIndex) as exc:
            contains(s, 3)
        assert exc.value.smallest == 6
        assert exc.value.count == 2

    def test_values_and_index_range(self, make_seq):
        s = make_seq("1/2+1/2*sqrt(5)")
        assert values_in(s, 0, 9) == [0, 1, 3, 4, 6, 8]
        assert index_range(s, 0, 9) == (0, 6)

    def test_multiplicities_count_indices(self, make_seq):
        s = make_seq("2/3", "1/5")
        counts = multiplicities(s, -10, 10)
        n_lo, n_hi = index_range(s, -10, 10)
        assert sum(counts) == n_hi - n_lo
        assert counts == [multiplicity(s, k) for k in range(-10, 10)]


class TestNormalize:
    def test_index_shift_identity(self, rng):
        for _ in range(40):
            s = random_seq(rng)
            m = rng.randint(-60, 60)
            shifted = BeattySeq(s.alpha, s.beta + m * s.alpha)
            assert all(term(shifted, n) == term(s, n + m) for n in range(-25, 26))

    def test_shift_into_canonical_range(self, phi):
        s, shift = normalize(BeattySeq(phi, 2))
        assert shift == 1
        assert s.beta == 2 - phi
        assert s.is_canonical
        assert values_in(s, -20, 20) == values_in(BeattySeq(phi, 2), -20, 20)

    def test_negative_offset(self, make_seq):
        s, shift = normalize(make_seq("5/2", "-1"))
        assert shift == -1
        assert s.beta == Fraction(3, 2)

    def test_canonical_unchanged(self, make_seq):
        s = make_seq("5/2", "1")
        assert normalize(s) == (s, 0)


class TestEqualRational:
    def test_same_floor_class(self, make_seq):
        assert equal_rational(make_seq("5/2"), make_seq("5/2", "1/3"))
        assert not equal_rational(make_seq("5/2"), make_seq("5/2", "1/2"))

    def test_non_canonical_offsets(self, make_seq):
        # beta and beta + alpha give the same value set
        assert equal_rational(make_seq("5/2", "1/3"), make_seq("5/2", "17/6"))

    def test_requires_rational_equal_moduli(self, make_seq):
        with pytest.raises(NotRational):
            equal_rational(make_seq("1/2+1/2*sqrt(5)"), make_seq("1/2+1/2*sqrt(5)"))
        with pytest.raises(AlphasDiffer):
            equal_rational(make_seq("5/2"), make_seq("7/2"))


class TestDensity:
    def test_rational_density(self, make_seq):
        assert density_estimate(make_seq("5/2"), 0, 10) == Fraction(2, 5)

    def test_golden_density_close_to_reciprocal(self, phi):
        est = density_estimate(BeattySeq(phi, 0), 0, 10**4)
        assert abs(as_exact(est) - phi.reciprocal()) < Fraction(1, 1000)

    def test_density_within_one_term_of_reciprocal(self, rng):
        for _ in range(40):
            s = random_seq(rng)
            lo = rng.randint(-500, 500)
            hi = lo + rng.randint(1, 3000)
            est = as_exact(density_estimate(s, lo, hi))
            assert abs(est - s.alpha.reciprocal()) <= (1 + s.alpha) * Fraction(1, hi - lo)

    def test_invalid_inputs(self, make_seq):
        with pytest.raises(InvalidRange):
            density_estimate(make_seq("5/2"), 5, 5)
        with pytest.raises(InvalidModulus):
            density_estimate(make_seq("1/2"), 0, 10)
