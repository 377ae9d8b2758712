"""
sequences.py
============

Beatty sequences ``S(alpha, beta) = [floor(n*alpha + beta)]`` over all integers n.

Values, index lookups and window counts all go through two cached
`AffineSurd` forms of a sequence:

- the *term form*  ``n -> n*alpha + beta``       (``term``, ``generate``)
- the *index form* ``k -> (k - beta) / alpha``    (``multiplicity``, ``contains``)

The number of indices n with ``floor(n*alpha + beta) = k`` is
``ceil(u(k+1)) - ceil(u(k))`` where ``u`` is the index form, so membership
is O(1) and a window of width W costs W + 1 integer floors.

Contents
--------
- `BeattySeq`: frozen (alpha, beta) pair with term / membership helpers.
- `term`, `generate`, `contains`, `multiplicity`, `values_in`, `index_range`
- `normalize`, `equal_rational`, `density_estimate`

Typical Usage
-------------
>>> from beatty_stadium.exact import golden_ratio
>>> from beatty_stadium.sequences import BeattySeq, generate, contains
>>> s = BeattySeq(golden_ratio(), 0)
>>> [v for _, v in generate(s, 1, 5)]
[1, 3, 4, 6, 8]
>>> contains(s, 4), contains(s, 5)
(3, None)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .errors import AlphasDiffer, AmbiguousIndex, InvalidModulus, InvalidRange, NotRational
from .exact import AffineSurd, ExactReal, Number, as_exact


@dataclass(frozen=True)
class BeattySeq:
    """
    The doubly infinite sequence ``floor(n*alpha + beta)``, n in Z.

    ``alpha`` must be positive; ``beta`` is any exact real (see `normalize`
    for the canonical range ``0 <= beta < alpha``).
    """

    alpha: ExactReal
    beta: ExactReal

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_exact(self.alpha))
        object.__setattr__(self, "beta", as_exact(self.beta))
        if self.alpha.sign() <= 0:
            raise InvalidModulus(f"alpha must be positive, got {self.alpha}")
        # Mixed radicands surface here rather than at the first term.
        self.term_form

    @cached_property
    def term_form(self) -> AffineSurd:
        return AffineSurd.from_reals(self.alpha, self.beta)

    @cached_property
    def index_form(self) -> AffineSurd:
        inv = self.alpha.reciprocal()
        return AffineSurd.from_reals(inv, -self.beta * inv)

    @property
    def is_canonical(self) -> bool:
        return self.beta.sign() >= 0 and self.beta < self.alpha

    def term(self, n: int) -> int:
        return self.term_form.floor_at(n)

    def multiplicity(self, k: int) -> int:
        """Number of indices n with ``term(n) == k``."""
        return self.index_form.ceil_at(k + 1) - self.index_form.ceil_at(k)

    def to_dict(self) -> Dict:
        return {"alpha": self.alpha.to_dict(), "beta": self.beta.to_dict()}

    @classmethod
    def from_dict(cls, d: Dict) -> "BeattySeq":
        return cls(ExactReal.from_dict(d["alpha"]), ExactReal.from_dict(d["beta"]))

    def __str__(self) -> str:
        return f"S({self.alpha}, {self.beta})"


def term(s: BeattySeq, n: int) -> int:
    """``floor(n*alpha + beta)``."""
    return s.term(n)


def generate(s: BeattySeq, n_lo: int, n_hi: int) -> List[Tuple[int, int]]:
    """
    ``[(n, term(s, n)) for n in n_lo..n_hi]`` (both ends inclusive).

    Raises
    ------
    InvalidRange
        If ``n_lo > n_hi``.
    """
    if n_lo > n_hi:
        raise InvalidRange(f"empty index range [{n_lo}, {n_hi}]")
    form = s.term_form
    return [(n, form.floor_at(n)) for n in range(n_lo, n_hi + 1)]


def multiplicity(s: BeattySeq, k: int) -> int:
    return s.multiplicity(k)


def contains(s: BeattySeq, k: int) -> Optional[int]:
    """
    Index n with ``term(s, n) == k``, or None when k is not a value.

    The candidate ``ceil((k - beta) / alpha)`` is computed exactly; for
    ``alpha <= 1`` several indices may share a value, which raises
    `AmbiguousIndex` carrying the smallest one.
    """
    count = s.multiplicity(k)
    if count == 0:
        return None
    first = s.index_form.ceil_at(k)
    if count > 1:
        raise AmbiguousIndex(k, first, count)
    return first


def index_range(s: BeattySeq, lo: int, hi: int) -> Tuple[int, int]:
    """Half-open index range ``[n_lo, n_hi)`` of the values lying in ``[lo, hi)``."""
    return s.index_form.ceil_at(lo), s.index_form.ceil_at(hi)


def values_in(s: BeattySeq, lo: int, hi: int) -> List[int]:
    """Sorted distinct values of ``s`` in ``[lo, hi)``."""
    n_lo, n_hi = index_range(s, lo, hi)
    form = s.term_form
    out: List[int] = []
    for n in range(n_lo, n_hi):
        v = form.floor_at(n)
        if not out or out[-1] != v:
            out.append(v)
    return out


def multiplicities(s: BeattySeq, lo: int, hi: int) -> List[int]:
    """``[multiplicity(s, k) for k in range(lo, hi)]`` with one floor per k."""
    form = s.index_form
    prev = form.ceil_at(lo)
    out = []
    for k in range(lo + 1, hi + 1):
        cur = form.ceil_at(k)
        out.append(cur - prev)
        prev = cur
    return out


def normalize(s: BeattySeq) -> Tuple[BeattySeq, int]:
    """
    Shift beta into ``[0, alpha)``.

    Returns ``(S(alpha, beta - shift*alpha), shift)`` with
    ``shift = floor(beta / alpha)``; the value set is unchanged since
    ``term(S(alpha, beta + m*alpha), n) == term(S(alpha, beta), n + m)``.
    """
    shift = (s.beta / s.alpha).floor()
    if shift == 0:
        return s, 0
    return BeattySeq(s.alpha, s.beta - shift * s.alpha), shift


def _rational_modulus(s: BeattySeq) -> Fraction:
    if s.alpha.is_irrational():
        raise NotRational(f"modulus {s.alpha} is irrational")
    return s.alpha.as_fraction()


def equal_rational(s1: BeattySeq, s2: BeattySeq) -> bool:
    """
    Value-set equality of two sequences with the same rational modulus r/s.

    With canonical offsets the sequences agree exactly when
    ``floor(s*beta1) == floor(s*beta2)``; non-canonical inputs are
    normalized first.
    """
    a1, a2 = _rational_modulus(s1), _rational_modulus(s2)
    if a1 != a2:
        raise AlphasDiffer(f"moduli differ: {a1} vs {a2}")
    den = a1.denominator
    c1, c2 = normalize(s1)[0], normalize(s2)[0]
    return (den * c1.beta).floor() == (den * c2.beta).floor()


def density_estimate(s: BeattySeq, lo: int, hi: int) -> Fraction:
    """
    Fraction of ``[lo, hi)`` covered by the values of ``s`` (requires alpha > 1).

    Raises
    ------
    InvalidRange
        If ``lo >= hi``.
    InvalidModulus
        If ``alpha <= 1`` (values may repeat).
    """
    if lo >= hi:
        raise InvalidRange(f"empty window [{lo}, {hi})")
    if s.alpha <= 1:
        raise InvalidModulus(f"density needs alpha > 1, got {s.alpha}")
    n_lo, n_hi = index_range(s, lo, hi)
    return Fraction(n_hi - n_lo, hi - lo)


def seq(alpha: Number, beta: Number = 0) -> BeattySeq:
    """Shorthand constructor."""
    return BeattySeq(as_exact(alpha), as_exact(beta))
