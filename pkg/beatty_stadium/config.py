"""
config.py
=========

Central configuration module for **beatty-stadium**.

All windows, sweep bounds, sample counts and seeds used by the verification
battery and the CLI live here, so the library modules stay free of magic
numbers and the quick/full battery scales differ in one place only.

Contents
--------
- Environment variables (default CLI window, log directory)
- Oracle windows for witnesses and offset scans
- Battery scales (``quick`` for CI, ``full`` for the acceptance run)
- Relocation parameters and the gamma lists of the disjointness checks

Typical Usage
-------------
>>> from beatty_stadium import config
>>> config.WITNESS_CHECK_WINDOW
(-10000, 10000)
>>> config.SCALES["full"]["fraenkel_r_max"]
12
"""

import os
from fractions import Fraction

from .errors import InvalidRange

# ---------------------------
# Environment
# ---------------------------

DEFAULT_WINDOW_ENV = "BEATTY_DEFAULT_WINDOW"
"""Env var holding ``lo,hi``; used by window-testable verbs when ``--window`` is omitted."""

LOG_DIR_ENV = "BEATTY_LOG_DIR"
"""Env var naming the directory of ``run_log.json`` / ``errors.log`` (unset = no logs)."""


def default_window():
    """
    Window from ``BEATTY_DEFAULT_WINDOW``, or None when unset.

    Returns
    -------
    tuple of int or None
        ``(lo, hi)`` parsed from ``"lo,hi"``.

    Raises
    ------
    InvalidRange
        If the variable is set but is not two comma-separated integers.
    """
    raw = os.getenv(DEFAULT_WINDOW_ENV)
    if not raw:
        return None
    try:
        lo, hi = (int(part) for part in raw.split(","))
    except ValueError:
        raise InvalidRange(f"{DEFAULT_WINDOW_ENV} must be 'lo,hi' with integers, got {raw!r}") from None
    return lo, hi


def log_dir():
    return os.getenv(LOG_DIR_ENV) or None


# ---------------------------
# Oracle windows
# ---------------------------

WITNESS_CHECK_WINDOW = (-10**4, 10**4)
"""Every emitted gamma witness is re-checked for disjointness on this window."""

OFFSET_SCAN_WINDOW = (-10**4, 10**4)
"""Window searched for an intersection per sampled offset (gamma < 2)."""

GAMMA_SCAN_SAMPLES = 200
"""Offsets beta2 = alpha2 * i / samples probed by `gamma_offset_scan`."""

# ---------------------------
# Sampling
# ---------------------------

RANDOM_SEED = 20240601
"""Seed of the verification battery; every random case is reproducible from it."""

RADICANDS = (2, 3, 5, 6, 7, 10, 11, 13)
"""Squarefree radicands used when sampling quadratic irrationals."""

MIN_SAMPLED_GAP = Fraction(1, 100)
"""Sampled pairs failing Skolem's condition keep d0 at least this far from 0 and 1."""

RELOCATION_NUS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
"""nu values used to relocate Fraenkel pairs to a common start."""

# ---------------------------
# Disjointness gamma lists
# ---------------------------

GAMMAS_ABOVE_TWO = ("1*sqrt(5)", "1*sqrt(7)", "1+1*sqrt(2)", "2+1*sqrt(2)")
GAMMAS_BELOW_TWO = ("1*sqrt(2)", "1*sqrt(3)")
"""Irrational gammas on either side of 2, as exact-real literals."""
GAMMA_PAIRS = ((1, 2), (2, 3), (1, 3))
"""Coprime (r, s) pairs for the gamma criterion checks."""

REMARK_DENOMINATORS = (7, 11, 13, 17)
"""Denominators of the rational gamma < 2 samples (prime to every r, s <= 5)."""

# ---------------------------
# Battery scales
# ---------------------------

SCALES = {
    "quick": {
        "beatty_n": 10**4,
        "complementary_w": 10,
        "skolem_pairs": 12,
        "skolem_window": (-10**3, 10**3),
        "fraenkel_r_max": 7,
        "fraenkel_window": (-500, 500),
        "fraenkel_spot_checks": 0,
        "lemma_grid_r_max": 4,
        "jrt_max": 6,
        "crt_max": 15,
        "crt_window": (-10**3, 10**3),
        "gamma_window": (-2000, 2000),
        "gamma_samples": 40,
        "remark_samples": 20,
        "remark_max": 5,
        "sim_configs": 10,
        "sim_events": 200,
        "multi_configs": 3,
        "occupancy_configs": 5,
        "occupancy_window": (-100, 100),
        "kernel_samples": 500,
    },
    "full": {
        "beatty_n": 10**5,
        "complementary_w": 50,
        "skolem_pairs": 100,
        "skolem_window": (-10**4, 10**4),
        "fraenkel_r_max": 12,
        "fraenkel_window": (-500, 500),
        "fraenkel_spot_checks": 50,
        "lemma_grid_r_max": 6,
        "jrt_max": 10,
        "crt_max": 30,
        "crt_window": (-10**3, 10**3),
        "gamma_window": WITNESS_CHECK_WINDOW,
        "gamma_samples": GAMMA_SCAN_SAMPLES,
        "remark_samples": 20,
        "remark_max": 5,
        "sim_configs": 50,
        "sim_events": 1000,
        "multi_configs": 10,
        "occupancy_configs": 20,
        "occupancy_window": (-10**3, 10**3),
        "kernel_samples": 10**4,
    },
}
"""Battery parameters; ``full`` matches the acceptance thresholds."""
