"""
data_model.py
=============

Result records for **beatty-stadium**.

Every verdict, report and trace event produced by the library is a
dataclass with a stable ``to_dict()`` / ``from_dict()`` round-trip. The JSON
form is exact: integers are written as decimal strings and exact reals use
the ``{"a": "p/q", "b": "p/q", "d": int}`` form of `ExactReal.to_dict`.

Contents
--------
- `PartitionVerdict`: Partition | EventualPartitionWithException(n0) | NotEventualPartition.
- `WindowReport`: missing / repeated integers of a window scan.
- `DisjointnessFinding`: outcome of Skolem's necessary condition.
- `JrtParams`: the quantities p, q, u1, u2, N of the rational coprimality test.
- `CoprimalityReport`: full answer to "can offsets make these sequences disjoint?".
- `RecordEvent`: one O-passage in the stadium simulation.
- `CheckResult`: one line of the verification battery.

Typical Usage
-------------
>>> from beatty_stadium.data_model import PartitionVerdict
>>> v = PartitionVerdict.eventual(0)
>>> v.to_dict()
{'kind': 'EventualPartitionWithException', 'n0': '0', 'repeated': ['0'], 'missing': ['-1']}
>>> PartitionVerdict.from_dict(v.to_dict()) == v
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .exact import ExactReal

PARTITION = "Partition"
EVENTUAL = "EventualPartitionWithException"
NOT_EVENTUAL = "NotEventualPartition"
VERDICT_KINDS = (PARTITION, EVENTUAL, NOT_EVENTUAL)

RATIONAL_RATIO = "RationalRatio"
MN_WITNESS = "MNWitness"
NEITHER = "Neither"


def _ints(values) -> List[str]:
    return [str(v) for v in values]


def _opt_int(value) -> Optional[str]:
    return None if value is None else str(value)


def _parse_opt_int(value) -> Optional[int]:
    return None if value is None else int(value)


@dataclass
class PartitionVerdict:
    """
    Classification of a pair of Beatty sequences.

    Attributes
    ----------
    kind : str
        One of `VERDICT_KINDS`.
    n0 : int, optional
        The integer recorded twice (only for EventualPartitionWithException);
        the integer ``n0 - 1`` is then the one missed.
    repeated, missing : list of int
        Witness integers; for window-based verdicts these are the anomalies
        found in the window.
    """

    kind: str
    n0: Optional[int] = None
    repeated: List[int] = field(default_factory=list)
    missing: List[int] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in VERDICT_KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if (self.kind == EVENTUAL) != (self.n0 is not None):
            raise ValueError("n0 is carried by EventualPartitionWithException only")

    @classmethod
    def partition(cls) -> "PartitionVerdict":
        return cls(PARTITION)

    @classmethod
    def eventual(cls, n0: int) -> "PartitionVerdict":
        return cls(EVENTUAL, n0=n0, repeated=[n0], missing=[n0 - 1])

    @classmethod
    def not_eventual(cls, repeated=(), missing=()) -> "PartitionVerdict":
        return cls(NOT_EVENTUAL, repeated=list(repeated), missing=list(missing))

    @property
    def is_eventual(self) -> bool:
        """True for Partition and EventualPartitionWithException."""
        return self.kind != NOT_EVENTUAL

    def to_dict(self) -> Dict:
        d = {"kind": self.kind}
        if self.n0 is not None:
            d["n0"] = str(self.n0)
        d["repeated"] = _ints(self.repeated)
        d["missing"] = _ints(self.missing)
        return d

    @classmethod
    def from_dict(cls, d: Dict) -> "PartitionVerdict":
        return cls(
            kind=d["kind"],
            n0=_parse_opt_int(d.get("n0")),
            repeated=[int(v) for v in d.get("repeated", [])],
            missing=[int(v) for v in d.get("missing", [])],
        )


@dataclass
class WindowReport:
    """Coverage anomalies of a list of sequences over ``[lo, hi)``."""

    lo: int
    hi: int
    missing: List[int] = field(default_factory=list)
    repeated: List[Tuple[int, int]] = field(default_factory=list)
    per_seq_counts: List[int] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.missing and not self.repeated

    def to_dict(self) -> Dict:
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "missing": _ints(self.missing),
            "repeated": [[str(k), str(m)] for k, m in self.repeated],
            "per_seq_counts": _ints(self.per_seq_counts),
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "WindowReport":
        return cls(
            lo=int(d["lo"]),
            hi=int(d["hi"]),
            missing=[int(v) for v in d.get("missing", [])],
            repeated=[(int(k), int(m)) for k, m in d.get("repeated", [])],
            per_seq_counts=[int(v) for v in d.get("per_seq_counts", [])],
        )


@dataclass
class DisjointnessFinding:
    """Outcome of Skolem's necessary condition for disjointness."""

    kind: str
    m: Optional[int] = None
    n: Optional[int] = None
    witness: Optional[Tuple[ExactReal, ExactReal]] = None

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "m": _opt_int(self.m),
            "n": _opt_int(self.n),
            "witness": None if self.witness is None else {
                "beta1": self.witness[0].to_dict(),
                "beta2": self.witness[1].to_dict(),
            },
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "DisjointnessFinding":
        w = d.get("witness")
        return cls(
            kind=d["kind"],
            m=_parse_opt_int(d.get("m")),
            n=_parse_opt_int(d.get("n")),
            witness=None if w is None else (
                ExactReal.from_dict(w["beta1"]), ExactReal.from_dict(w["beta2"])),
        )


@dataclass(frozen=True)
class JrtParams:
    """
    Quantities of the rational coprimality test for ``p1/q1`` and ``p2/q2``.

    ``p = gcd(p1, p2)``, ``q = gcd(q1, q2)``, ``u_i = q_i / q`` and the target
    ``target = p - 2*u1*u2*(q - 1)`` of the equation ``k*u1 + l*u2 = target``.
    """

    p1: int
    q1: int
    p2: int
    q2: int

    @classmethod
    def from_moduli(cls, alpha1: Fraction, alpha2: Fraction) -> "JrtParams":
        alpha1, alpha2 = Fraction(alpha1), Fraction(alpha2)
        return cls(alpha1.numerator, alpha1.denominator, alpha2.numerator, alpha2.denominator)

    @property
    def p(self) -> int:
        return gcd(self.p1, self.p2)

    @property
    def q(self) -> int:
        return gcd(self.q1, self.q2)

    @property
    def u1(self) -> int:
        return self.q1 // self.q

    @property
    def u2(self) -> int:
        return self.q2 // self.q

    @property
    def target(self) -> int:
        return self.p - 2 * self.u1 * self.u2 * (self.q - 1)

    def to_dict(self) -> Dict:
        return {k: str(getattr(self, k)) for k in
                ("p1", "q1", "p2", "q2", "p", "q", "u1", "u2", "target")}


@dataclass
class CoprimalityReport:
    """
    Whether every pair of offsets gives intersecting sequences.

    ``method`` names the deciding criterion: ``crt`` (integers), ``jrt``
    (rationals), ``gamma`` (irrationals of rational ratio) or ``skolem``
    (irrational ratio). ``witness`` holds disjoint offsets when not coprime.
    """

    coprime: bool
    method: str
    witness: Optional[Tuple[ExactReal, ExactReal]] = None
    detail: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "coprime": self.coprime,
            "method": self.method,
            "witness": None if self.witness is None else {
                "beta1": self.witness[0].to_dict(),
                "beta2": self.witness[1].to_dict(),
            },
            "detail": self.detail,
        }


@dataclass(frozen=True)
class RecordEvent:
    """
    One O-passage: athlete ``athlete`` passes at exact ``time`` and records
    ``floor(time)``; ``index`` is the n with ``time = beta + n*alpha``.
    """

    time: ExactReal
    athlete: str
    recorded: int
    index: int

    def to_dict(self) -> Dict:
        return {
            "t": self.time.to_dict(),
            "athlete": self.athlete,
            "recorded": str(self.recorded),
            "index": str(self.index),
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "RecordEvent":
        return cls(
            time=ExactReal.from_dict(d["t"]),
            athlete=d["athlete"],
            recorded=int(d["recorded"]),
            index=int(d["index"]),
        )


@dataclass
class CheckResult:
    """Outcome of one battery check."""

    name: str
    passed: bool
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": str(self.cases),
            "failures": list(self.failures),
            "seconds": f"{self.seconds:.3f}",
            "notes": list(self.notes),
        }
