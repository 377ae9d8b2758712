"""
stadium.py
==========

The running-stadium model of Beatty sequences.

Two athletes X and Y run on a track of length 1 in opposite directions, X
completing a lap every ``alpha1`` time units and Y every ``alpha2``. They
start at distances ``beta1/alpha1`` and ``beta2/alpha2`` behind the point O
(behind = opposite their own running direction). Whenever one of them
passes O at time t, the integer ``floor(t)`` is recorded; X records exactly
``S(alpha1, beta1)`` and Y records ``S(alpha2, beta2)``.

Coordinates: the track is [0, 1) with O at 0 and X running in the positive
direction, so ``X(t) = fr((t - beta1)/alpha1)`` and ``Y(t) = fr((beta2 - t)/alpha2)``.
An athlete passes O at ``t = beta + n*alpha`` and that passage carries
index ``n``: the recorded value is the n-th term.

The n-athlete variant runs ``X_0, ..., X_n`` in one direction; ``X_i``
records whenever it overtakes ``X_{i-1}`` and thereby records
``S(alpha_i, beta_i)``, whatever the base speed of ``X_0``.

Simulation is event driven: every athlete's next passage is solved in
closed form and kept in a heap keyed by exact time, so irrational passage
times are hit exactly.

Typical Usage
-------------
>>> from beatty_stadium.exact import golden_ratio
>>> from beatty_stadium.stadium import StadiumConfig, simulate_two
>>> phi = golden_ratio()
>>> c = StadiumConfig(phi, phi * phi, 0, 0)
>>> sorted(e.recorded for e in simulate_two(c, 0, 5))
[0, 0, 1, 2, 3, 4]
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .criteria import complementary
from .data_model import RecordEvent
from .errors import InvalidModulus, InvalidRange, MixedRadicands, NotComplementary
from .exact import ExactReal, Number, as_exact
from .sequences import BeattySeq, normalize


def _canonical(alpha: ExactReal, beta: ExactReal) -> ExactReal:
    return normalize(BeattySeq(alpha, beta))[0].beta


@dataclass(frozen=True)
class StadiumConfig:
    """
    Two athletes in opposite directions; ``alpha_i > 1``, offsets stored canonical.
    """

    alpha1: ExactReal
    alpha2: ExactReal
    beta1: ExactReal = field(default_factory=lambda: as_exact(0))
    beta2: ExactReal = field(default_factory=lambda: as_exact(0))

    def __post_init__(self):
        a1, a2 = as_exact(self.alpha1), as_exact(self.alpha2)
        if not (a1 > 1 and a2 > 1):
            raise InvalidModulus(f"stadium moduli must exceed 1, got {a1}, {a2}")
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)
        object.__setattr__(self, "beta1", _canonical(a1, as_exact(self.beta1)))
        object.__setattr__(self, "beta2", _canonical(a2, as_exact(self.beta2)))

    @property
    def d0(self) -> ExactReal:
        """Relative position at integer times, ``fr(beta1/alpha1 + beta2/alpha2)``."""
        return (self.beta1 / self.alpha1 + self.beta2 / self.alpha2).fr()

    @property
    def edge_point(self) -> ExactReal:
        """E = 1/alpha2: the edge of domain B missed by both domains."""
        return self.alpha2.reciprocal()

    def is_complementary(self) -> bool:
        return complementary(self.alpha1, self.alpha2)

    def sequences(self) -> Tuple[BeattySeq, BeattySeq]:
        return BeattySeq(self.alpha1, self.beta1), BeattySeq(self.alpha2, self.beta2)


def position_x(c: StadiumConfig, t: Number) -> ExactReal:
    return ((as_exact(t) - c.beta1) / c.alpha1).fr()


def position_y(c: StadiumConfig, t: Number) -> ExactReal:
    return ((c.beta2 - as_exact(t)) / c.alpha2).fr()


def relative_gap(c: StadiumConfig, t: Number) -> ExactReal:
    """Distance from X forward to Y; equals d0 at integer t for complementary moduli."""
    return (position_y(c, t) - position_x(c, t)).fr()


def meeting_point(c: StadiumConfig, k: int) -> Optional[ExactReal]:
    """The common position of X and Y at time k, or None when apart."""
    x = position_x(c, k)
    return x if x == position_y(c, k) else None


def domain_occupancy(c: StadiumConfig, k: int) -> Tuple[bool, bool]:
    """
    Whether X is in A and Y is in B at integer time k.

    ``A = {0} U (1 - 1/alpha1, 1)`` and ``B = [0, 1/alpha2)``: X in A iff X
    passes O during ``[k, k+1)``, and likewise Y in B.

    Raises
    ------
    NotComplementary
        Unless ``1/alpha1 + 1/alpha2 == 1``.
    """
    if not c.is_complementary():
        raise NotComplementary(f"{c.alpha1} and {c.alpha2} are not complementary")
    x, y = position_x(c, k), position_y(c, k)
    in_a = not x or x > 1 - c.alpha1.reciprocal()
    in_b = y < c.alpha2.reciprocal()
    return in_a, in_b


def _first_index(alpha: ExactReal, beta: ExactReal, t_lo: int) -> int:
    # Smallest n with beta + n*alpha >= t_lo.
    return ((t_lo - beta) / alpha).ceil()


def _run(lanes: Sequence[Tuple[str, ExactReal, ExactReal]], t_lo: int, t_hi: int) -> List[RecordEvent]:
    """
    Event loop over passages ``beta + n*alpha`` of every lane in ``[t_lo, t_hi)``.

    Ties at the same exact time are emitted in lane order.
    """
    if t_lo > t_hi:
        raise InvalidRange(f"t_lo {t_lo} > t_hi {t_hi}")
    heap = []
    for order, (name, alpha, beta) in enumerate(lanes):
        n = _first_index(alpha, beta, t_lo)
        heapq.heappush(heap, (beta + n * alpha, order, n))
    events: List[RecordEvent] = []
    while heap:
        time, order, n = heapq.heappop(heap)
        if time >= t_hi:
            continue
        name, alpha, _ = lanes[order]
        events.append(RecordEvent(time, name, time.floor(), n))
        heapq.heappush(heap, (time + alpha, order, n + 1))
    return events


def simulate_two(c: StadiumConfig, t_lo: int, t_hi: int) -> List[RecordEvent]:
    """
    O-passages of X and Y during ``[t_lo, t_hi)``, sorted by time.

    X passes O when ``(t - beta1)/alpha1`` is an integer n; Y passes O when
    ``(beta2 - t)/alpha2`` is an integer, i.e. at ``t = beta2 + n*alpha2``.
    """
    lanes = [("X", c.alpha1, c.beta1), ("Y", c.alpha2, c.beta2)]
    return _run(lanes, t_lo, t_hi)


@dataclass(frozen=True)
class MultiConfig:
    """
    Athletes ``X_0 .. X_n`` in one direction.

    ``athletes[i-1] = (alpha_i, beta_i)``; the relative speed of ``X_j`` over
    ``X_0`` is ``sum(1/alpha_i, i <= j)`` and its initial lead over ``X_0`` is
    ``-sum(beta_i/alpha_i, i <= j)``. ``base_speed`` is the speed of ``X_0``.
    """

    athletes: Tuple[Tuple[ExactReal, ExactReal], ...]
    base_speed: ExactReal = field(default_factory=lambda: as_exact(0))

    def __post_init__(self):
        if not self.athletes:
            raise InvalidRange("at least one athlete besides X_0 is required")
        norm = []
        for alpha, beta in self.athletes:
            alpha = as_exact(alpha)
            if alpha.sign() <= 0:
                raise InvalidModulus(f"alpha must be positive, got {alpha}")
            norm.append((alpha, _canonical(alpha, as_exact(beta))))
        radicands = {x.d for pair in norm for x in pair if x.is_irrational()}
        if len(radicands) > 1:
            raise MixedRadicands(*sorted(radicands)[:2])
        object.__setattr__(self, "athletes", tuple(norm))
        object.__setattr__(self, "base_speed", as_exact(self.base_speed))

    @property
    def names(self) -> List[str]:
        return [f"X{i}" for i in range(1, len(self.athletes) + 1)]

    def speeds(self) -> List[ExactReal]:
        """Absolute speeds of ``X_0 .. X_n``."""
        out = [self.base_speed]
        for alpha, _ in self.athletes:
            out.append(out[-1] + alpha.reciprocal())
        return out

    def lags(self) -> List[ExactReal]:
        """``D_j = sum(beta_i/alpha_i, i <= j)`` for ``j = 0 .. n``."""
        out = [as_exact(0)]
        for alpha, beta in self.athletes:
            out.append(out[-1] + beta / alpha)
        return out

    def initial_gaps(self) -> List[ExactReal]:
        """``d_j = fr(D_j)`` for ``j = 1 .. n``."""
        return [lag.fr() for lag in self.lags()[1:]]

    def sequences(self) -> List[BeattySeq]:
        return [BeattySeq(alpha, beta) for alpha, beta in self.athletes]


def positions_multi(c: MultiConfig, t: Number) -> List[ExactReal]:
    """Track positions ``fr(speed_j * t - D_j)`` of ``X_0 .. X_n``."""
    t = as_exact(t)
    return [(speed * t - lag).fr() for speed, lag in zip(c.speeds(), c.lags())]


def simulate_multi(c: MultiConfig, t_lo: int, t_hi: int) -> List[RecordEvent]:
    """
    Overtaking events during ``[t_lo, t_hi)``: ``X_j`` records ``floor(t)``
    when it passes ``X_{j-1}``.

    The gap ``X_j - X_{j-1}`` grows at ``speed_j - speed_{j-1}`` from
    ``D_{j-1} - D_j``; it crosses an integer n at
    ``t = (n + D_j - D_{j-1}) / (speed_j - speed_{j-1})``, which is
    ``beta_j + n*alpha_j``. The base speed cancels.
    """
    speeds, lags = c.speeds(), c.lags()
    lanes = []
    for j, name in enumerate(c.names, start=1):
        rel_speed = speeds[j] - speeds[j - 1]
        period = rel_speed.reciprocal()
        first = (lags[j] - lags[j - 1]) * period
        lanes.append((name, period, first))
    return _run(lanes, t_lo, t_hi)


def records_by_athlete(events: Iterable[RecordEvent]) -> Dict[str, List[int]]:
    out: Dict[str, List[int]] = {}
    for e in events:
        out.setdefault(e.athlete, []).append(e.recorded)
    return out


def coverage_from_events(events: Iterable[RecordEvent], lo: int, hi: int) -> Dict[int, int]:
    """
    How many passages recorded each integer of ``[lo, hi)``.

    All ones means the athletes' sequences partition the window; zeros and
    values above one locate the uncovered and shared integers.
    """
    counts = Counter(e.recorded for e in events if lo <= e.recorded < hi)
    return {k: counts.get(k, 0) for k in range(lo, hi)}
