"""
oracle.py
=========

Brute-force ground truth over finite windows.

Every criterion in `criteria` and `disjointness` is cross-checked against the
functions here. They never use the theorems being tested: coverage counts
come from `BeattySeq.multiplicity` (exact ceil of the index form) and
intersections from enumerating one sequence and probing the other.

Contents
--------
- window_report, verify_partition, verify_eventual
- iter_intersections, disjoint_window
- rational_disjoint_oracle, rational_disjoint_witness
- interval_floor_agrees, interval_compare_agrees (200-bit cross-check of `exact`)

Typical Usage
-------------
>>> from beatty_stadium.exact import golden_ratio
>>> from beatty_stadium.sequences import seq
>>> from beatty_stadium.oracle import window_report
>>> phi = golden_ratio()
>>> r = window_report([seq(phi), seq(phi * phi)], -5, 5)
>>> r.missing, r.repeated
([-1], [(0, 2)])
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .data_model import PartitionVerdict, WindowReport
from .errors import InvalidRange, NonPositive
from .exact import ExactReal, Number, as_exact, to_interval
from .sequences import BeattySeq, index_range, multiplicities


def _check_window(lo: int, hi: int) -> None:
    if lo >= hi:
        raise InvalidRange(f"empty window [{lo}, {hi})")


def window_report(seqs: Sequence[BeattySeq], lo: int, hi: int,
                  chunk: Optional[int] = None, progress: bool = False) -> WindowReport:
    """
    Count how often each integer of ``[lo, hi)`` is a value of the sequences.

    Parameters
    ----------
    seqs : list of BeattySeq
    lo, hi : int
        Half-open window.
    chunk : int, optional
        Scan in sub-windows of this width; the report does not depend on it.
    progress : bool
        Show a tqdm bar over chunks.

    Returns
    -------
    WindowReport
        Integers covered zero times (``missing``) and at least twice
        (``repeated`` with multiplicities), plus per-sequence value counts.
    """
    _check_window(lo, hi)
    width = chunk or (hi - lo)
    bounds = [(a, min(a + width, hi)) for a in range(lo, hi, width)]
    missing: List[int] = []
    repeated: List[Tuple[int, int]] = []
    per_seq = [0] * len(seqs)
    for a, b in tqdm(bounds, disable=not progress, desc="window", unit="chunk"):
        totals = [0] * (b - a)
        for i, s in enumerate(seqs):
            counts = multiplicities(s, a, b)
            per_seq[i] += sum(counts)
            totals = [t + c for t, c in zip(totals, counts)]
        for offset, total in enumerate(totals):
            if total == 0:
                missing.append(a + offset)
            elif total > 1:
                repeated.append((a + offset, total))
    return WindowReport(lo, hi, missing, repeated, per_seq)


def verify_partition(seqs: Sequence[BeattySeq], lo: int, hi: int) -> bool:
    """True iff every integer of ``[lo, hi)`` is covered exactly once."""
    return window_report(seqs, lo, hi).clean


def verify_eventual(s1: BeattySeq, s2: BeattySeq, lo: int, hi: int) -> PartitionVerdict:
    """
    Window verdict for a pair.

    The pattern is matched strictly: Partition when the window is clean,
    EventualPartitionWithException(n0) when the anomalies are exactly one
    integer n0 covered twice and ``n0 - 1`` missed, NotEventualPartition
    (with the anomalies as witnesses) otherwise.
    """
    report = window_report([s1, s2], lo, hi)
    if report.clean:
        return PartitionVerdict.partition()
    if len(report.repeated) == 1 and len(report.missing) == 1:
        (n0, mult), = report.repeated
        if mult == 2 and report.missing[0] == n0 - 1:
            return PartitionVerdict.eventual(n0)
    return PartitionVerdict.not_eventual(
        repeated=[k for k, _ in report.repeated], missing=report.missing)


def iter_intersections(s1: BeattySeq, s2: BeattySeq, lo: int, hi: int) -> Iterator[int]:
    """Common values of two sequences in ``[lo, hi)``, ascending, lazily."""
    _check_window(lo, hi)
    # Enumerate the sparser sequence, probe the denser one.
    sparse, dense = (s1, s2) if s1.alpha >= s2.alpha else (s2, s1)
    n_lo, n_hi = index_range(sparse, lo, hi)
    form = sparse.term_form
    last = None
    for n in range(n_lo, n_hi):
        v = form.floor_at(n)
        if v != last and dense.multiplicity(v):
            yield v
        last = v


def disjoint_window(s1: BeattySeq, s2: BeattySeq, lo: int, hi: int) -> List[int]:
    """Sorted intersection of the value sets restricted to ``[lo, hi)``."""
    return list(iter_intersections(s1, s2, lo, hi))


def first_intersection(s1: BeattySeq, s2: BeattySeq, lo: int, hi: int) -> Optional[int]:
    return next(iter_intersections(s1, s2, lo, hi), None)


# ---------------------------------------------------------------------------
# Rational disjointness
#
# S(p/q, beta) = {floor((n*p + q*beta)/q)} depends on beta only through
# c = floor(q*beta), and replacing c by c + p shifts the index by one, so the
# offsets beta = c/q with 0 <= c < p represent every sequence exactly once.
# Each such sequence is invariant under translation by p, hence two of them
# meet iff they meet inside any window of length lcm(p1, p2); the window
# [0, 2*p1*p2) over-covers that period.
# ---------------------------------------------------------------------------

def _positive_fraction(alpha: Number) -> Fraction:
    value = as_exact(alpha).as_fraction()
    if value <= 0:
        raise NonPositive(f"modulus must be positive, got {value}")
    return value


@lru_cache(maxsize=4096)
def _class_values(p: int, q: int, c: int, hi: int) -> FrozenSet[int]:
    # floor((n*p + c)/q) for the n whose value lies in [0, hi)
    n_lo = -((c) // p)
    values = set()
    n = n_lo
    while True:
        v = (n * p + c) // q
        if v >= hi:
            break
        if v >= 0:
            values.add(v)
        n += 1
    return frozenset(values)


def rational_disjoint_witness(alpha1: Number, alpha2: Number) -> Optional[Tuple[ExactReal, ExactReal]]:
    """
    First offsets ``(c1/q1, c2/q2)`` (lexicographic in c1, c2) making
    ``S(alpha1, .)`` and ``S(alpha2, .)`` disjoint, or None.
    """
    a1, a2 = _positive_fraction(alpha1), _positive_fraction(alpha2)
    p1, q1, p2, q2 = a1.numerator, a1.denominator, a2.numerator, a2.denominator
    hi = 2 * p1 * p2
    for c1 in range(p1):
        v1 = _class_values(p1, q1, c1, hi)
        for c2 in range(p2):
            if v1.isdisjoint(_class_values(p2, q2, c2, hi)):
                return as_exact(Fraction(c1, q1)), as_exact(Fraction(c2, q2))
    return None


def rational_disjoint_oracle(alpha1: Number, alpha2: Number) -> bool:
    """True iff every pair of offsets gives intersecting sequences (coprime moduli)."""
    return rational_disjoint_witness(alpha1, alpha2) is None


# ---------------------------------------------------------------------------
# Interval cross-check of the exact kernel
# ---------------------------------------------------------------------------

def interval_floor_agrees(x: Number, prec: int = 200) -> Optional[bool]:
    """
    Check ``floor(x)`` against a ``prec``-bit interval enclosure of x.

    Returns True/False when the enclosure decides ``f <= x < f + 1``, None
    when it is too wide to decide.
    """
    x = as_exact(x)
    f = x.floor()
    box = to_interval(x, prec)
    below, above = box < f, box < f + 1
    if below is True or above is False:
        return False
    if below is False and above is True:
        return True
    return None


def interval_compare_agrees(x: Number, y: Number, prec: int = 200) -> Optional[bool]:
    """Check `exact.compare` against the sign of an interval enclosure of ``x - y``."""
    diff = as_exact(x) - as_exact(y)
    expected = diff.sign()
    box = to_interval(diff, prec)
    if expected == 0:
        return (box < 0) is not True and (box > 0) is not True
    if expected < 0:
        verdict = box < 0
    else:
        verdict = box > 0
    if verdict is None:
        return None
    return bool(verdict)
