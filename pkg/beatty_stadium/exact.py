"""
exact.py
========

Exact arithmetic in Q(sqrt(d)) for **beatty-stadium**.

Every modulus, offset, time and track position handled by the package is an
`ExactReal`: either a rational ``a`` or a quadratic irrational ``a + b*sqrt(d)``
with rational ``a, b`` (``b != 0``) and a squarefree radicand ``d >= 2``.
Floor, fractional part and ordering are decided with integer arithmetic only
(``math.isqrt`` plus sign analysis); no floating point is involved.

Contents
--------
- `ExactReal`: immutable value type with field operations and exact ordering.
- `floor_surd` / `ceil_surd`: floor/ceil of ``(p + q*sqrt(d)) / den`` over integers.
- `AffineSurd`: integer-only evaluation of ``floor(k*slope + offset)`` for many k.
- `sqrt`, `golden_ratio`, `as_exact`, `compare`, `is_squarefree`, `parse_fraction`.
- `to_interval`: 200-bit mpmath interval enclosure (cross-check only).

Typical Usage
-------------
>>> from beatty_stadium.exact import golden_ratio, sqrt
>>> phi = golden_ratio()
>>> phi.floor(), str(phi.fr())
(1, '-1/2+1/2*sqrt(5)')
>>> (10 * sqrt(2)).floor()
14
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt, lcm
from typing import Dict, Tuple, Union

from .errors import DivisionByZero, MixedRadicands, NotRational, ParseError, RadicandNotSquarefree

Number = Union[int, Fraction, "ExactReal"]

_FRACTION_RE = re.compile(r"^-?\d+(/\d+)?$")


def is_squarefree(n: int) -> bool:
    """True if no square of a prime divides ``n`` (``n >= 1``)."""
    if n < 1:
        return False
    i = 2
    while i * i <= n:
        if n % (i * i) == 0:
            return False
        i += 1
    return True


def floor_surd(p: int, q: int, d: int, den: int) -> int:
    """
    Exact ``floor((p + q*sqrt(d)) / den)`` for integers p, q, den > 0.

    ``d`` must be a non-square when ``q != 0``, so ``q*sqrt(d)`` is never an
    integer and its floor is ``isqrt(q*q*d)`` (q > 0) or ``-isqrt(q*q*d) - 1``
    (q < 0). Adding a value in (0, 1) to an integer numerator does not change
    the floor of the quotient.
    """
    if q == 0:
        return p // den
    root = isqrt(q * q * d)
    whole = root if q > 0 else -root - 1
    return (p + whole) // den


def ceil_surd(p: int, q: int, d: int, den: int) -> int:
    """Exact ``ceil((p + q*sqrt(d)) / den)``."""
    return -floor_surd(-p, -q, d, den)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True, eq=False, repr=False)
class ExactReal:
    """
    Exact element ``a + b*sqrt(d)`` of a real quadratic field (or of Q).

    Attributes
    ----------
    a : Fraction
        Rational part.
    b : Fraction
        Irrational coefficient; zero for rational values.
    d : int
        Squarefree radicand >= 2; normalized to 1 when ``b == 0``.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        for part in (self.a, self.b):
            if not isinstance(part, (int, Fraction)):
                raise TypeError(f"exact parts must be int or Fraction, got {type(part).__name__}")
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if b == 0:
            d = 1
        elif d < 2 or not is_squarefree(d):
            raise RadicandNotSquarefree(f"radicand must be a squarefree integer >= 2, got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "ExactReal":
        # Trusted constructor for results of field operations.
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d if b else 1)
        return obj

    # ------------------------------------------------------------------
    # Classification
    # ------------------------------------------------------------------
    @property
    def kind(self) -> str:
        return "Quadratic" if self.b else "Rational"

    def is_rational(self) -> bool:
        return not self.b

    def is_irrational(self) -> bool:
        return bool(self.b)

    def is_integer(self) -> bool:
        return not self.b and self.a.denominator == 1

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; raises NotRational for quadratic values."""
        if self.b:
            raise NotRational(f"{self} is irrational")
        return self.a

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------
    def _radicand_with(self, other: "ExactReal") -> int:
        if not self.b:
            return other.d
        if not other.b:
            return self.d
        if self.d != other.d:
            raise MixedRadicands(self.d, other.d)
        return self.d

    def __add__(self, other: Number) -> "ExactReal":
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = as_exact(other)
        d = self._radicand_with(other)
        return ExactReal._raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> "ExactReal":
        return ExactReal._raw(-self.a, -self.b, self.d)

    def __sub__(self, other: Number) -> "ExactReal":
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        return self + (-as_exact(other))

    def __rsub__(self, other: Number) -> "ExactReal":
        return as_exact(other) - self

    def __mul__(self, other: Number) -> "ExactReal":
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = as_exact(other)
        if not other.b:
            return ExactReal._raw(self.a * other.a, self.b * other.a, self.d)
        if not self.b:
            return ExactReal._raw(self.a * other.a, self.a * other.b, other.d)
        d = self._radicand_with(other)
        return ExactReal._raw(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "ExactReal":
        """``1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2*d)``."""
        if not self:
            raise DivisionByZero("reciprocal of zero")
        norm = self.a * self.a - self.b * self.b * self.d
        return ExactReal._raw(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: Number) -> "ExactReal":
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = as_exact(other)
        if not other.b:
            if not other.a:
                raise DivisionByZero("division by zero")
            return ExactReal._raw(self.a / other.a, self.b / other.a, self.d)
        return self * other.reciprocal()

    def __rtruediv__(self, other: Number) -> "ExactReal":
        return as_exact(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> "ExactReal":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.reciprocal()
        result = ExactReal._raw(Fraction(1), Fraction(0), 1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __abs__(self) -> "ExactReal":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    # ------------------------------------------------------------------
    # Ordering
    # ------------------------------------------------------------------
    def sign(self) -> int:
        """Sign of the value (-1, 0, 1), decided by squaring."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs: the larger magnitude wins; a^2 == b^2*d is impossible.
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def cmp(self, other: Number) -> int:
        return (self - as_exact(other)).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        if not isinstance(other, ExactReal):
            return NotImplemented
        return self.a == other.a and self.b == other.b and (not self.b or self.d == other.d)

    def __lt__(self, other: Number) -> bool:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        return self.cmp(other) < 0

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # ------------------------------------------------------------------
    # Integer parts
    # ------------------------------------------------------------------
    def integer_form(self) -> Tuple[int, int, int, int]:
        """Return ``(p, q, d, den)`` with value ``(p + q*sqrt(d)) / den``, den > 0."""
        den = lcm(self.a.denominator, self.b.denominator)
        p = self.a.numerator * (den // self.a.denominator)
        q = self.b.numerator * (den // self.b.denominator)
        return p, q, self.d, den

    def floor(self) -> int:
        return floor_surd(*self.integer_form())

    def ceil(self) -> int:
        return ceil_surd(*self.integer_form())

    def fr(self) -> "ExactReal":
        """Fractional part ``x - floor(x)``, in [0, 1)."""
        return ExactReal._raw(self.a - self.floor(), self.b, self.d)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------
    def to_dict(self) -> Dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    @classmethod
    def from_dict(cls, d: Dict) -> "ExactReal":
        return cls(parse_fraction(d["a"]), parse_fraction(d.get("b", "0")), int(d.get("d", 1)))

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        surd = f"{abs(self.b)}*sqrt({self.d})"
        if not self.a:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a}{'+' if self.b > 0 else '-'}{surd}"

    def __repr__(self) -> str:
        return f"ExactReal('{self}')"


def as_exact(x: Number) -> ExactReal:
    """Coerce an int, Fraction or ExactReal to ExactReal."""
    if isinstance(x, ExactReal):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactReal._raw(Fraction(x), Fraction(0), 1)
    raise TypeError(f"cannot convert {type(x).__name__} to ExactReal")


def compare(x: Number, y: Number) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    return as_exact(x).cmp(y)


def parse_fraction(text: str) -> Fraction:
    """Strict ``p`` / ``p/q`` parser used for JSON payloads (no decimals, no spaces)."""
    text = str(text)
    if not _FRACTION_RE.match(text):
        raise ParseError(f"not an exact rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den or 1))


def sqrt(n: int) -> ExactReal:
    """Exact square root of a positive integer, e.g. ``sqrt(8) == 2*sqrt(2)``."""
    if n < 0:
        raise RadicandNotSquarefree(f"square root of negative integer {n}")
    if n == 0:
        return as_exact(0)
    k, m = 1, n
    i = 2
    while i * i <= m:
        while m % (i * i) == 0:
            m //= i * i
            k *= i
        i += 1
    if m == 1:
        return as_exact(k)
    return ExactReal(0, k, m)


def golden_ratio() -> ExactReal:
    return ExactReal(Fraction(1, 2), Fraction(1, 2), 5)


@dataclass(frozen=True)
class AffineSurd:
    """
    ``k -> k*slope + offset`` in integer form, for repeated floors over k.

    The value at ``k`` is ``((k*p1 + p0) + (k*q1 + q0)*sqrt(d)) / den``.
    """

    p1: int
    p0: int
    q1: int
    q0: int
    d: int
    den: int

    @classmethod
    def from_reals(cls, slope: Number, offset: Number) -> "AffineSurd":
        slope, offset = as_exact(slope), as_exact(offset)
        d = slope._radicand_with(offset)
        den = lcm(slope.a.denominator, slope.b.denominator,
                  offset.a.denominator, offset.b.denominator)
        return cls(int(slope.a * den), int(offset.a * den),
                   int(slope.b * den), int(offset.b * den), d, den)

    def floor_at(self, k: int) -> int:
        return floor_surd(k * self.p1 + self.p0, k * self.q1 + self.q0, self.d, self.den)

    def ceil_at(self, k: int) -> int:
        return -floor_surd(-(k * self.p1 + self.p0), -(k * self.q1 + self.q0), self.d, self.den)

    def value_at(self, k: int) -> ExactReal:
        return ExactReal(Fraction(k * self.p1 + self.p0, self.den),
                         Fraction(k * self.q1 + self.q0, self.den), self.d)


def to_interval(x: Number, prec: int = 200):
    """
    Enclose ``x`` in an mpmath interval computed at ``prec`` bits.

    Used only to cross-check the integer kernel; nothing in the package
    decides a floor or an ordering from it.
    """
    from mpmath import iv

    x = as_exact(x)
    saved = iv.prec
    iv.prec = prec
    try:
        value = iv.mpf(x.a.numerator) / x.a.denominator
        if x.b:
            value += iv.mpf(x.b.numerator) / x.b.denominator * iv.sqrt(x.d)
        return value
    finally:
        iv.prec = saved
