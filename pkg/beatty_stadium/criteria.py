"""
criteria.py
===========

Partition criteria for pairs of Beatty sequences.

- Complementary moduli: ``1/alpha1 + 1/alpha2 = 1`` (homogeneous partition).
- Irrational moduli: the pair eventually partitions Z iff
  ``beta1/alpha1 + beta2/alpha2`` is an integer; when it is, at most one
  integer ``n0`` is hit twice and ``n0 - 1`` is missed.
- Rational moduli ``r/s`` and ``r/(r-s)``: the pair partitions Z iff
  ``floor(s*beta1) + floor((r-s)*beta2) = r - 1 (mod r)``.

The rational case is also phrased through the stadium positions at integer
times (`lemma_positions`, `lemma_conditions`) and through relocation of the
offsets to a common starting point (`relocate_common_start`).

Contents
--------
- complementary, complementary_from_w
- skolem_condition, skolem_classify
- fraenkel_condition, lemma_positions, lemma_conditions
- common_start, relocate_common_start, corollary_predicts_partition
- classify_pair

Typical Usage
-------------
>>> from beatty_stadium.exact import golden_ratio
>>> from beatty_stadium.sequences import seq
>>> from beatty_stadium.criteria import skolem_classify
>>> phi = golden_ratio()
>>> skolem_classify(seq(phi), seq(phi * phi)).to_dict()["n0"]
'0'
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from .data_model import PartitionVerdict
from .errors import (
    BadModuli,
    CriterionNotSatisfied,
    NonPositive,
    NotComplementary,
    NotCoprime,
    NotIrrational,
    NuOutOfRange,
)
from .exact import ExactReal, Number, as_exact
from .sequences import BeattySeq, normalize


def complementary(alpha1: Number, alpha2: Number) -> bool:
    """True iff ``1/alpha1 + 1/alpha2 == 1`` exactly."""
    alpha1, alpha2 = as_exact(alpha1), as_exact(alpha2)
    if alpha1.sign() <= 0 or alpha2.sign() <= 0:
        raise NonPositive("moduli must be positive")
    return alpha1.reciprocal() + alpha2.reciprocal() == 1


def complementary_from_w(w: Number) -> Tuple[ExactReal, ExactReal]:
    """The complementary moduli ``(1 + w, 1 + 1/w)`` for ``w > 0``."""
    w = as_exact(w)
    if w.sign() <= 0:
        raise NonPositive(f"w must be positive, got {w}")
    return 1 + w, 1 + w.reciprocal()


def _check_skolem_pair(s1: BeattySeq, s2: BeattySeq) -> None:
    if not complementary(s1.alpha, s2.alpha):
        raise NotComplementary(f"{s1.alpha} and {s2.alpha} are not complementary")
    if not (s1.alpha.is_irrational() and s2.alpha.is_irrational()):
        raise NotIrrational("both moduli must be irrational")


def skolem_condition(s1: BeattySeq, s2: BeattySeq) -> bool:
    """True iff ``beta1/alpha1 + beta2/alpha2`` is an integer."""
    _check_skolem_pair(s1, s2)
    return (s1.beta / s1.alpha + s2.beta / s2.alpha).is_integer()


def skolem_classify(s1: BeattySeq, s2: BeattySeq) -> PartitionVerdict:
    """
    Exact verdict for complementary irrational moduli.

    When the condition holds, the athletes meet at O at integer time t iff
    ``t = beta1 + k*alpha1`` for some integer k. Splitting that equation into
    its rational and sqrt(d) coordinates forces ``k = -q/b`` (q, b the
    irrational parts of beta1, alpha1); if k and ``t`` are integers, ``t`` is
    the doubly recorded n0.
    """
    _check_skolem_pair(s1, s2)
    c1, _ = normalize(s1)
    c2, _ = normalize(s2)
    if not skolem_condition(c1, c2):
        return PartitionVerdict.not_eventual()
    k = -c1.beta.b / c1.alpha.b
    if k.denominator != 1:
        return PartitionVerdict.partition()
    t = c1.beta.a + k * c1.alpha.a
    if t.denominator != 1:
        return PartitionVerdict.partition()
    return PartitionVerdict.eventual(int(t))


def _check_rs(r: int, s: int) -> None:
    if not (r > s >= 1):
        raise BadModuli(f"need r > s >= 1, got r={r}, s={s}")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {gcd(r, s)}")


def fraenkel_condition(r: int, s: int, beta1: Number, beta2: Number) -> bool:
    """
    True iff ``S(r/s, beta1)`` and ``S(r/(r-s), beta2)`` partition Z, i.e.
    ``floor(s*beta1) + floor((r-s)*beta2) = r - 1 (mod r)``.
    """
    _check_rs(r, s)
    total = (s * as_exact(beta1)).floor() + ((r - s) * as_exact(beta2)).floor()
    return total % r == r - 1


def lemma_positions(r: int, s: int, beta1: Number, beta2: Number,
                    k: int) -> Tuple[ExactReal, ExactReal, Optional[int]]:
    """
    Positions of the athletes at integer time ``k``, measured from O opposite
    the running direction of X.

    ``x_k = fr(beta1/alpha1 - k*s/r)`` lies in [0, 1) and
    ``y_k = 1 - fr(beta2/alpha2 + k*s/r)`` lies in (0, 1]. ``j_k`` is the j
    with ``x_k`` in ``[j/r, (j+1)/r)`` when ``y_k`` is in ``(j/r, (j+1)/r]``
    as well, else None.
    """
    _check_rs(r, s)
    step = Fraction(k * s, r)
    x = (as_exact(beta1) * Fraction(s, r) - step).fr()
    y = 1 - (as_exact(beta2) * Fraction(r - s, r) + step).fr()
    j = (r * x).floor()
    lower, upper = Fraction(j, r), Fraction(j + 1, r)
    j_k = j if lower < y <= upper else None
    return x, y, j_k


def lemma_conditions(r: int, s: int, beta1: Number, beta2: Number) -> Dict[int, bool]:
    """
    The three position conditions equivalent to partition, keyed 2, 3, 4.

    - 2: for every k, ``x_k in [0, s/r)`` iff ``y_k in (0, s/r]``
    - 3: for every k, ``j_k`` exists
    - 4: ``j_0`` exists

    Positions are periodic in k with period r, so k in ``range(r)`` covers Z.
    """
    bound = Fraction(s, r)
    cond2 = cond3 = True
    j0 = None
    for k in range(r):
        x, y, j = lemma_positions(r, s, beta1, beta2, k)
        if k == 0:
            j0 = j
        if (x < bound) != (y <= bound):
            cond2 = False
        if j is None:
            cond3 = False
    return {2: cond2, 3: cond3, 4: j0 is not None}


def common_start(r: int, s: int, beta1: Number, beta2: Number) -> bool:
    """True iff ``s*beta1 + (r-s)*beta2`` is a multiple of r (common starting point)."""
    _check_rs(r, s)
    return ((s * as_exact(beta1) + (r - s) * as_exact(beta2)) / r).is_integer()


def relocate_common_start(r: int, s: int, beta1: Number, beta2: Number,
                          nu: Number) -> Tuple[ExactReal, ExactReal]:
    """
    Offsets giving the same two sequences with a common starting point.

    ``beta1' = (floor(s*beta1) + nu)/s`` and
    ``beta2' = (floor((r-s)*beta2) + 1 - nu)/(r-s)``.

    Raises
    ------
    CriterionNotSatisfied
        If the pair does not partition Z.
    NuOutOfRange
        Unless ``0 < nu < 1``.
    """
    nu = as_exact(nu)
    if not fraenkel_condition(r, s, beta1, beta2):
        raise CriterionNotSatisfied(f"S({r}/{s}, {beta1}) and S({r}/{r - s}, {beta2}) do not partition Z")
    if not (0 < nu < 1):
        raise NuOutOfRange(f"nu must lie in (0, 1), got {nu}")
    f1 = (s * as_exact(beta1)).floor()
    f2 = ((r - s) * as_exact(beta2)).floor()
    return (f1 + nu) / s, (f2 + 1 - nu) / (r - s)


def corollary_predicts_partition(r: int, s: int, beta1: Number, beta2: Number) -> Optional[bool]:
    """
    Partition prediction from a common starting point.

    Returns None when the athletes do not start together; otherwise True iff
    the common point is off the lattice ``{j/r}`` (``s*beta1`` not an integer).
    """
    if not common_start(r, s, beta1, beta2):
        return None
    return not (s * as_exact(beta1)).is_integer()


def classify_pair(s1: BeattySeq, s2: BeattySeq) -> PartitionVerdict:
    """
    Verdict for any pair: non-complementary moduli never eventually partition
    (densities do not sum to 1); rational pairs go through the Fraenkel test,
    irrational pairs through `skolem_classify`.
    """
    if not complementary(s1.alpha, s2.alpha):
        return PartitionVerdict.not_eventual()
    if s1.alpha.is_irrational():
        return skolem_classify(s1, s2)
    inv = 1 / s1.alpha.as_fraction()
    r, s = inv.denominator, inv.numerator
    ok = fraenkel_condition(r, s, s1.beta, s2.beta)
    return PartitionVerdict.partition() if ok else PartitionVerdict.not_eventual()
