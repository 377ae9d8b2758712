"""
errors.py
=========

Exception hierarchy for **beatty-stadium**.

Every failure raised by the library derives from `BeattyError`, itself a
`ValueError`, so callers can catch the whole family at once. The CLI maps
any `BeattyError` to exit code 2 (usage / precondition) except for the few
that encode a *negative answer* (see `cli.NEGATIVE_ANSWERS`).

Contents
--------
- Arithmetic: MixedRadicands, DivisionByZero, RadicandNotSquarefree, ParseError
- Sequences: InvalidRange, InvalidModulus, AmbiguousIndex, NotRational, AlphasDiffer
- Criteria: NotComplementary, NotIrrational, NotCoprime, BadModuli,
  CriterionNotSatisfied, NuOutOfRange, NonPositive
- Witnesses: NoWitness, VerificationFailed
"""


class BeattyError(ValueError):
    """Base class of every error raised by beatty_stadium."""


class MixedRadicands(BeattyError):
    """Two quadratic values live in different fields Q(sqrt(d))."""

    def __init__(self, d1, d2):
        super().__init__(f"cannot combine sqrt({d1}) and sqrt({d2}) in one expression")
        self.radicands = (d1, d2)


class DivisionByZero(BeattyError, ZeroDivisionError):
    """Reciprocal (or division) of an exact zero."""


class RadicandNotSquarefree(BeattyError):
    """A radicand is not a squarefree integer >= 2."""


class ParseError(BeattyError):
    """An exact-real literal does not match the grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidRange(BeattyError):
    """An interval with lo > hi (or lo >= hi where the interval must be non-empty)."""


class InvalidModulus(BeattyError):
    """A modulus outside the range an operation supports (e.g. alpha <= 0)."""


class AmbiguousIndex(BeattyError):
    """Several indices n give the same value floor(n*alpha + beta) (alpha <= 1)."""

    def __init__(self, value, smallest, count):
        super().__init__(
            f"{count} indices map to {value}; smallest is {smallest}"
        )
        self.value = value
        self.smallest = smallest
        self.count = count


class NotRational(BeattyError):
    """A rational modulus was required."""


class AlphasDiffer(BeattyError):
    """Two sequences were expected to share the same modulus."""


class NotComplementary(BeattyError):
    """Moduli do not satisfy 1/alpha1 + 1/alpha2 = 1."""


class NotIrrational(BeattyError):
    """An irrational value was required."""


class NotCoprime(BeattyError):
    """Integers r, s are required to be coprime."""


class BadModuli(BeattyError):
    """Integers r, s violate r > s >= 1."""


class CriterionNotSatisfied(BeattyError):
    """An operation needs the partition criterion to hold first."""


class NuOutOfRange(BeattyError):
    """The relocation parameter must satisfy 0 < nu < 1."""


class NonPositive(BeattyError):
    """A strictly positive argument was required."""


class NoWitness(BeattyError):
    """No disjoint offsets exist for the requested moduli."""


class VerificationFailed(BeattyError):
    """A constructed witness was refuted by the window oracle."""
