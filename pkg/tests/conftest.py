"""Shared fixtures for the beatty_stadium test suite."""

import random

import pytest

from beatty_stadium.exact import ExactReal, as_exact, golden_ratio
from beatty_stadium.parsing import parse_real
from beatty_stadium.sequences import BeattySeq


def real(value):
    """Literal string, int, Fraction or ExactReal -> ExactReal."""
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, str):
        return parse_real(value)
    return as_exact(value)


@pytest.fixture
def phi():
    return golden_ratio()


@pytest.fixture
def phi2(phi):
    return phi * phi


@pytest.fixture
def make_seq():
    """Factory for BeattySeq from literals: ``make_seq("1/2+1/2*sqrt(5)", "0")``."""

    def _make(alpha, beta=0):
        return BeattySeq(real(alpha), real(beta))

    return _make


@pytest.fixture
def rng():
    return random.Random(20240601)
