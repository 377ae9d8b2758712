"""Tests for the exact Q(sqrt(d)) kernel."""

from fractions import Fraction

import pytest

from beatty_stadium.errors import (
    BeattyError,
    DivisionByZero,
    MixedRadicands,
    NotRational,
    ParseError,
    RadicandNotSquarefree,
)
from beatty_stadium.exact import (
    AffineSurd,
    ExactReal,
    as_exact,
    ceil_surd,
    compare,
    floor_surd,
    is_squarefree,
    parse_fraction,
    sqrt,
)


class TestConstruction:
    def test_rational_kind_normalizes_radicand(self):
        x = ExactReal(Fraction(5, 2), 0, 7)
        assert x.kind == "Rational"
        assert x.d == 1
        assert x == Fraction(5, 2)

    def test_quadratic_kind(self, phi):
        assert phi.kind == "Quadratic"
        assert phi.is_irrational()
        assert not phi.is_integer()

    @pytest.mark.parametrize("d", [0, 1, 4, 8, 12, -3])
    def test_bad_radicand(self, d):
        with pytest.raises(RadicandNotSquarefree):
            ExactReal(0, 1, d)

    def test_is_squarefree(self):
        assert [n for n in range(1, 20) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]

    def test_sqrt_extracts_square_factor(self):
        assert sqrt(8) == ExactReal(0, 2, 2)
        assert sqrt(9) == 3
        assert sqrt(0) == 0
        assert sqrt(12) == 2 * sqrt(3)

    def test_as_exact_rejects_float(self):
        with pytest.raises(TypeError):
            as_exact(0.5)

    @pytest.mark.parametrize("parts", [(0.1,), (0, 0.5, 2), ("1/2",)])
    def test_constructor_rejects_inexact_parts(self, parts):
        with pytest.raises(TypeError):
            ExactReal(*parts)


class TestArithmetic:
    def test_golden_identities(self, phi):
        assert phi * phi == phi + 1
        assert phi.reciprocal() == phi - 1
        assert 1 / phi == phi - 1
        assert phi ** 2 == phi + 1
        assert phi ** -1 == phi - 1
        assert phi ** 0 == 1

    def test_mixed_with_rationals(self, phi):
        assert (phi - phi) == 0
        assert not (phi - phi)
        assert 2 * phi == phi + phi
        assert phi / 2 == ExactReal(Fraction(1, 4), Fraction(1, 4), 5)
        assert Fraction(1, 2) + phi == ExactReal(1, Fraction(1, 2), 5)

    def test_mixed_radicands_raise(self):
        with pytest.raises(MixedRadicands) as exc:
            sqrt(2) + sqrt(3)
        assert exc.value.radicands == (2, 3)

    def test_division_by_zero(self, phi):
        with pytest.raises(DivisionByZero):
            as_exact(0).reciprocal()
        with pytest.raises(ZeroDivisionError):
            phi / 0

    def test_as_fraction(self, phi):
        assert as_exact(Fraction(3, 4)).as_fraction() == Fraction(3, 4)
        with pytest.raises(NotRational):
            phi.as_fraction()

    def test_errors_share_a_base(self):
        assert issubclass(MixedRadicands, BeattyError)
        assert issubclass(BeattyError, ValueError)


class TestOrdering:
    def test_compare_near_values(self, phi):
        assert sqrt(2) < Fraction(3, 2)
        assert sqrt(2) > Fraction(7, 5)
        assert compare(phi, Fraction(8, 5)) == 1
        assert compare(phi, Fraction(13, 8)) == -1
        assert compare(phi, phi) == 0

    def test_sign_with_opposite_parts(self):
        assert ExactReal(3, -2, 2).sign() == 1    # 3 - 2.828...
        assert ExactReal(-3, 2, 3).sign() == 1    # -3 + 3.464...
        assert ExactReal(1, -1, 2).sign() == -1
        assert (1 - sqrt(2)) < 0

    def test_abs_and_sorting(self, phi):
        values = [phi, as_exact(1), 2 - phi, as_exact(Fraction(3, 2))]
        assert sorted(values) == [2 - phi, as_exact(1), as_exact(Fraction(3, 2)), phi]
        assert abs(1 - phi) == phi - 1

    def test_hash_matches_rationals(self):
        assert hash(as_exact(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert len({as_exact(2), 2, Fraction(4, 2)}) == 1


class TestIntegerParts:
    def test_floor_toward_minus_infinity(self, phi):
        assert phi.floor() == 1
        assert (-phi).floor() == -2
        assert (10 * sqrt(2)).floor() == 14
        assert (-10 * sqrt(2)).floor() == -15
        assert as_exact(Fraction(-7, 2)).floor() == -4
        assert as_exact(-3).floor() == -3

    def test_ceil(self, phi):
        assert (10 * sqrt(2)).ceil() == 15
        assert (-phi).ceil() == -1
        assert as_exact(4).ceil() == 4

    def test_fractional_part(self, phi):
        assert phi.fr() == phi - 1
        assert (-phi).fr() == 2 - phi
        assert as_exact(Fraction(-1, 3)).fr() == Fraction(2, 3)
        assert as_exact(5).fr() == 0

    def test_floor_surd(self):
        assert floor_surd(0, 1, 2, 1) == 1
        assert floor_surd(0, -1, 2, 1) == -2
        assert floor_surd(3, 0, 1, 2) == 1
        assert floor_surd(-3, 0, 1, 2) == -2
        assert floor_surd(1, 1, 5, 2) == 1
        assert ceil_surd(1, 1, 5, 2) == 2

    def test_floor_of_large_multiples(self, phi):
        # 10^6 * phi = 1618033.98...
        assert (10**6 * phi).floor() == 1618033

    def test_affine_surd_matches_floor(self, phi):
        form = AffineSurd.from_reals(phi, 0)
        assert [form.floor_at(k) for k in range(1, 6)] == [1, 3, 4, 6, 8]
        assert form.value_at(3) == 3 * phi
        for k in range(-20, 20):
            assert form.floor_at(k) == (k * phi).floor()
            assert form.ceil_at(k) == (k * phi).ceil()


class TestSerialization:
    def test_to_dict(self, phi):
        assert phi.to_dict() == {"a": "1/2", "b": "1/2", "d": 5}
        assert as_exact(Fraction(5, 2)).to_dict() == {"a": "5/2", "b": "0", "d": 1}

    def test_from_dict(self, phi):
        assert ExactReal.from_dict({"a": "1/2", "b": "1/2", "d": 5}) == phi
        assert ExactReal.from_dict({"a": "-3"}) == -3

    def test_str(self, phi):
        assert str(phi) == "1/2+1/2*sqrt(5)"
        assert str(-sqrt(2)) == "-1*sqrt(2)"
        assert str(2 - sqrt(2)) == "2-1*sqrt(2)"
        assert str(as_exact(Fraction(-7, 3))) == "-7/3"

    @pytest.mark.parametrize("text", ["0.5", "1/0", "1e3", "", "1 / 2"])
    def test_parse_fraction_rejects(self, text):
        with pytest.raises(ParseError):
            parse_fraction(text)
