"""
sampling.py
===========

Seeded random generators of exact test cases for the verification battery
and the property tests. All functions take a `random.Random` so every case
is reproducible from one seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Tuple

from . import config
from .criteria import complementary_from_w
from .exact import ExactReal, as_exact
from .sequences import BeattySeq, normalize
from .stadium import MultiConfig, StadiumConfig


def random_rational(rng: random.Random, bound: int = 20, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


def random_quadratic(rng: random.Random, d: int = None, bound: int = 20, max_den: int = 12) -> ExactReal:
    """``a + b*sqrt(d)`` with random rationals a, b (b != 0)."""
    d = d or rng.choice(config.RADICANDS)
    b = Fraction(0)
    while b == 0:
        b = random_rational(rng, bound, max_den)
    return ExactReal(random_rational(rng, bound, max_den), b, d)


def random_exact(rng: random.Random) -> ExactReal:
    """Mostly quadratic, sometimes rational; used by the kernel cross-checks."""
    if rng.random() < 0.2:
        return as_exact(random_rational(rng))
    return random_quadratic(rng)


def random_w(rng: random.Random, d: int = None) -> ExactReal:
    """Quadratic irrational w in (1/4, 4)."""
    while True:
        w = random_quadratic(rng, d, bound=3, max_den=6)
        if Fraction(1, 4) < w < 4:
            return w


def random_canonical_beta(rng: random.Random, alpha: ExactReal, d: int = None) -> ExactReal:
    """Offset in ``[0, alpha)``, in Q(sqrt(d)) (default: the field of alpha)."""
    if rng.random() < 0.5:
        return alpha * Fraction(rng.randrange(0, 97), 97)
    beta = random_quadratic(rng, alpha.d if alpha.is_irrational() else d, bound=5)
    return normalize(BeattySeq(alpha, beta))[0].beta


def random_skolem_case(rng: random.Random) -> Tuple[BeattySeq, BeattySeq]:
    """
    Complementary irrational pair with canonical offsets.

    A third of the cases satisfy Skolem's condition with an exceptional pair,
    a third satisfy it without one, the rest violate it with d0 at least
    `config.MIN_SAMPLED_GAP` away from 0 and 1 (so anomalies are frequent
    enough to show up in a finite window).
    """
    a1, a2 = complementary_from_w(random_w(rng))
    mode = rng.randrange(3)
    if mode == 0:
        beta1 = normalize(BeattySeq(a1, rng.randint(-50, 50)))[0].beta
        beta2 = a2 * (1 - beta1 / a1)
    elif mode == 1:
        beta1 = a1 * Fraction(rng.randrange(1, 97), 97)
        beta2 = a2 * (1 - beta1 / a1)
    else:
        while True:
            beta1 = random_canonical_beta(rng, a1)
            beta2 = random_canonical_beta(rng, a2)
            gap = (beta1 / a1 + beta2 / a2).fr()
            if config.MIN_SAMPLED_GAP <= gap <= 1 - config.MIN_SAMPLED_GAP:
                break
    return normalize(BeattySeq(a1, beta1))[0], normalize(BeattySeq(a2, beta2))[0]


def random_stadium(rng: random.Random, complementary: bool = True) -> StadiumConfig:
    """Skolem-case stadium, or two unrelated moduli in (1, 16) from one field."""
    if complementary:
        s1, s2 = random_skolem_case(rng)
        return StadiumConfig(s1.alpha, s2.alpha, s1.beta, s2.beta)
    d = rng.choice(config.RADICANDS)
    a1 = 1 + abs(random_quadratic(rng, d, bound=3, max_den=6))
    a2 = 1 + abs(random_quadratic(rng, d, bound=3, max_den=6))
    return StadiumConfig(a1, a2, random_canonical_beta(rng, a1), random_canonical_beta(rng, a2))


def random_modulus(rng: random.Random, d: int = None) -> ExactReal:
    """Modulus in (1, 8): a decimal rational 30% of the time, else in Q(sqrt(d))."""
    if rng.random() < 0.3:
        return as_exact(Fraction(rng.randint(11, 70), 10))
    d = d or rng.choice(config.RADICANDS)
    while True:
        alpha = random_quadratic(rng, d, bound=4, max_den=5)
        if 1 < alpha < 8:
            return alpha


def random_seq(rng: random.Random, d: int = None) -> BeattySeq:
    """Sequence with a random modulus in (1, 8) and a canonical offset, in Q(sqrt(d))."""
    d = d or rng.choice(config.RADICANDS)
    alpha = random_modulus(rng, d)
    return BeattySeq(alpha, random_canonical_beta(rng, alpha, d))


def random_multi(rng: random.Random, max_athletes: int = 5) -> MultiConfig:
    """2..max_athletes athletes sharing one radicand; moduli in (1, 8)."""
    d = rng.choice(config.RADICANDS)
    athletes: List[Tuple[ExactReal, ExactReal]] = []
    for _ in range(rng.randint(2, max_athletes)):
        s = random_seq(rng, d)
        athletes.append((s.alpha, s.beta))
    return MultiConfig(tuple(athletes), base_speed=as_exact(Fraction(rng.randint(0, 5), 3)))
