"""
disjointness.py
===============

When can two Beatty sequences be made disjoint?

Moduli are called *coprime* when every choice of offsets gives intersecting
sequences. The question splits by the arithmetic of the moduli:

- integers n, m: coprime iff ``gcd(n, m) == 1``;
- rationals: the linear equation ``k*u1 + l*u2 = p - 2*u1*u2*(q - 1)`` has
  no positive solution (see `JrtParams`);
- irrationals of rational ratio ``r/s`` (``alpha1 = r*gamma``,
  ``alpha2 = s*gamma``): disjoint offsets exist iff ``gamma > 2``;
- irrational ratio: disjoint offsets exist iff positive integers m, n solve
  ``m/alpha1 + n/alpha2 = 1``.

`coprime_moduli` dispatches over the four cases and returns disjoint
offsets whenever they exist.

Typical Usage
-------------
>>> from beatty_stadium.disjointness import jrt_coprime, crt_coprime
>>> from fractions import Fraction
>>> jrt_coprime(Fraction(3, 2), Fraction(5, 2))
(True, None)
>>> crt_coprime(4, 6)
False
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from . import config
from .data_model import (
    MN_WITNESS,
    NEITHER,
    RATIONAL_RATIO,
    CoprimalityReport,
    DisjointnessFinding,
    JrtParams,
)
from .errors import NonPositive, NotCoprime, NotIrrational, NotRational, NoWitness, VerificationFailed
from .exact import ExactReal, Number, as_exact
from .oracle import disjoint_window, first_intersection, rational_disjoint_witness
from .sequences import BeattySeq


def crt_coprime(n: int, m: int) -> bool:
    """True iff every ``S(n, beta1)`` meets every ``S(m, beta2)``, i.e. gcd(n, m) == 1."""
    if n < 1 or m < 1:
        raise NonPositive(f"moduli must be positive integers, got {n}, {m}")
    return gcd(n, m) == 1


def crt_witness(n: int, m: int) -> Optional[Tuple[ExactReal, ExactReal]]:
    """Offsets ``(0, 1)`` when gcd(n, m) > 1 (both sequences then live in distinct classes mod gcd)."""
    if crt_coprime(n, m):
        return None
    return as_exact(0), as_exact(1)


def solve_mn(alpha1: Number, alpha2: Number) -> Optional[Tuple[int, int]]:
    """
    The positive integers m, n with ``m/alpha1 + n/alpha2 = 1``, if any.

    Writing ``1/alpha1 = u_a + u_b*sqrt(d)`` and ``1/alpha2 = v_a + v_b*sqrt(d)``
    the equation splits into ``m*u_a + n*v_a = 1`` and ``m*u_b + n*v_b = 0``;
    for irrational ratio the system is regular, so there is at most one
    rational solution.
    """
    u = as_exact(alpha1).reciprocal()
    v = as_exact(alpha2).reciprocal()
    u._radicand_with(v)
    det = u.a * v.b - v.a * u.b
    if det == 0:
        return None
    m, n = v.b / det, -u.b / det
    if m.denominator != 1 or n.denominator != 1 or m <= 0 or n <= 0:
        return None
    return int(m), int(n)


def skolem_necessary(s1: BeattySeq, s2: BeattySeq) -> DisjointnessFinding:
    """
    Skolem's necessary condition for disjointness.

    Returns RationalRatio when alpha1/alpha2 is rational, MNWitness(m, n) when
    ``m/alpha1 + n/alpha2 = 1`` and ``m*beta1/alpha1 + n*beta2/alpha2`` is an
    integer, Neither otherwise (the sequences then certainly intersect).
    """
    if (s1.alpha / s2.alpha).is_rational():
        return DisjointnessFinding(RATIONAL_RATIO)
    mn = solve_mn(s1.alpha, s2.alpha)
    if mn is None:
        return DisjointnessFinding(NEITHER)
    m, n = mn
    if (m * s1.beta / s1.alpha + n * s2.beta / s2.alpha).is_integer():
        return DisjointnessFinding(MN_WITNESS, m=m, n=n, witness=(s1.beta, s2.beta))
    return DisjointnessFinding(NEITHER, m=m, n=n)


def jrt_coprime(alpha1: Number, alpha2: Number) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """
    Coprimality of two positive rational moduli.

    Scans ``k = 1, 2, ...`` while ``k*u1 < N`` for a positive integer
    ``l = (N - k*u1)/u2``; a negative or small N short-circuits to coprime.

    Returns
    -------
    (bool, tuple or None)
        ``(True, None)`` when coprime, else ``(False, (k, l))``.
    """
    a1, a2 = as_exact(alpha1), as_exact(alpha2)
    if a1.is_irrational() or a2.is_irrational():
        raise NotRational("the rational test needs rational moduli")
    if a1.sign() <= 0 or a2.sign() <= 0:
        raise NonPositive("moduli must be positive")
    params = JrtParams.from_moduli(a1.as_fraction(), a2.as_fraction())
    target, u1, u2 = params.target, params.u1, params.u2
    k = 1
    while k * u1 < target:
        rest = target - k * u1
        if rest % u2 == 0:
            return False, (k, rest // u2)
        k += 1
    return True, None


def remark_holds(gamma: Number, r: int, s: int) -> bool:
    """Whether ``r*gamma`` and ``s*gamma`` are coprime for a rational gamma."""
    gamma = as_exact(gamma)
    return jrt_coprime(r * gamma, s * gamma)[0]


def _check_gamma(gamma: ExactReal, r: int, s: int) -> None:
    if gamma.is_rational():
        raise NotIrrational(f"gamma must be irrational, got {gamma}")
    if r < 1 or s < 1:
        raise NonPositive(f"r, s must be positive, got {r}, {s}")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {gcd(r, s)}")


def gamma_disjoint_exists(gamma: Number, r: int, s: int) -> bool:
    """Disjoint ``S(r*gamma, .)``, ``S(s*gamma, .)`` exist iff ``gamma > 2`` (irrational gamma)."""
    gamma = as_exact(gamma)
    _check_gamma(gamma, r, s)
    return gamma > 2


def gamma_witness(gamma: Number, r: int, s: int,
                  window: Tuple[int, int] = config.WITNESS_CHECK_WINDOW) -> Tuple[ExactReal, ExactReal]:
    """
    Disjoint offsets for ``alpha1 = r*gamma``, ``alpha2 = s*gamma``.

    With ``beta1 = 0`` the first athlete passes O at times ``k*r*gamma``; at
    those times ``beta2 = gamma/2`` puts the second athlete at lap fractions
    ``k*r/s - 1/(2s)`` (mod 1), i.e. at distance at least ``1/(2s)`` from O,
    which exceeds its speed ``1/alpha2`` exactly when ``gamma > 2``. The pair
    is re-checked on ``window`` before being returned.

    Raises
    ------
    NoWitness
        If ``gamma < 2``.
    VerificationFailed
        If the window oracle finds a common value.
    """
    gamma = as_exact(gamma)
    if not gamma_disjoint_exists(gamma, r, s):
        raise NoWitness(f"gamma = {gamma} < 2: r*gamma and s*gamma are coprime")
    beta1, beta2 = as_exact(0), gamma / 2
    hits = disjoint_window(BeattySeq(r * gamma, beta1), BeattySeq(s * gamma, beta2), *window)
    if hits:
        raise VerificationFailed(f"witness for gamma = {gamma} meets at {hits[:5]}")
    return beta1, beta2


def gamma_offset_scan(gamma: Number, r: int, s: int,
                      samples: int = config.GAMMA_SCAN_SAMPLES,
                      window: Tuple[int, int] = config.OFFSET_SCAN_WINDOW) -> List[Tuple[ExactReal, Optional[int]]]:
    """
    Probe offsets ``beta2 = alpha2 * i/samples`` (``beta1 = 0``) for a common value.

    Returns ``(beta2, first intersection or None)`` per sample, in grid order.
    For ``gamma < 2`` every sample is expected to intersect.
    """
    gamma = as_exact(gamma)
    _check_gamma(gamma, r, s)
    a1, a2 = r * gamma, s * gamma
    first = BeattySeq(a1, 0)
    out = []
    for i in range(samples):
        beta2 = a2 * Fraction(i, samples)
        out.append((beta2, first_intersection(first, BeattySeq(a2, beta2), *window)))
    return out


def lattice_condition(t: Number, rho: Number, alpha2: Number) -> bool:
    """
    ``(1 - fr(t))/alpha2 <= rho < 1 - fr(t)/alpha2``: the athlete at distance
    ``rho`` behind O does not pass O during ``[floor(t), floor(t) + 1)``.
    """
    frac = as_exact(t).fr()
    alpha2 = as_exact(alpha2)
    rho = as_exact(rho)
    return (1 - frac) / alpha2 <= rho < 1 - frac / alpha2


def coprime_moduli(alpha1: Number, alpha2: Number) -> CoprimalityReport:
    """
    Decide whether every pair of offsets gives intersecting sequences.

    Returns
    -------
    CoprimalityReport
        ``method`` is one of crt / jrt / gamma / skolem; ``witness`` holds
        disjoint offsets when the moduli are not coprime.
    """
    a1, a2 = as_exact(alpha1), as_exact(alpha2)
    if a1.sign() <= 0 or a2.sign() <= 0:
        raise NonPositive("moduli must be positive")

    if a1.is_integer() and a2.is_integer():
        n, m = int(a1.a), int(a2.a)
        ok = crt_coprime(n, m)
        return CoprimalityReport(ok, "crt", crt_witness(n, m), {"gcd": str(gcd(n, m))})

    if a1.is_rational() and a2.is_rational():
        ok, kl = jrt_coprime(a1, a2)
        params = JrtParams.from_moduli(a1.as_fraction(), a2.as_fraction())
        detail = params.to_dict()
        if kl is not None:
            detail["k"], detail["l"] = str(kl[0]), str(kl[1])
        witness = None if ok else rational_disjoint_witness(a1, a2)
        return CoprimalityReport(ok, "jrt", witness, detail)

    ratio = a1 / a2
    if ratio.is_rational():
        rs = ratio.as_fraction()
        r, s = rs.numerator, rs.denominator
        gamma = a1 / r
        detail = {"r": str(r), "s": str(s), "gamma": str(gamma)}
        if gamma_disjoint_exists(gamma, r, s):
            return CoprimalityReport(False, "gamma", gamma_witness(gamma, r, s), detail)
        return CoprimalityReport(True, "gamma", None, detail)

    mn = solve_mn(a1, a2)
    if mn is None:
        return CoprimalityReport(True, "skolem")
    m, n = mn
    # a1/m and a2/n are complementary; offsets at half a modulus partition Z
    # with no exceptional pair, so the thinned sequences are disjoint.
    return CoprimalityReport(False, "skolem", (a1 / (2 * m), a2 / (2 * n)),
                             {"m": str(m), "n": str(n)})
