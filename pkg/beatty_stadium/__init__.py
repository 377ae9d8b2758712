"""
beatty_stadium
==============

A Python package for **Beatty sequences** over exact arithmetic.

This package provides:
- An exact kernel for numbers ``a + b*sqrt(d)`` (`ExactReal`) and a literal
  grammar for them.
- Beatty sequence generation, membership and normalization.
- Partition criteria (Beatty, Skolem, Fraenkel) and disjointness criteria
  (integer, rational, gamma, irrational ratio) with witness construction.
- The running-stadium simulation of two or more athletes.
- Brute-force window oracles and a verification battery.
- A CLI (`beatty_stadium.cli`) emitting exact JSON.

Attributes
----------
__version__ : str
    Current version of the package.
"""

__version__ = "0.1.0"
__license__ = "MIT"
__all__ = ["__version__", "__license__"]
__docformat__ = "restructuredtext"
__package_name__ = "beatty_stadium"
