"""Narayana numbers, their 3-adic valuations, and the Brocard-Ramanujan search."""

from narayana_brocard.core import (
    AlphaInterval,
    GrowthViolation,
    NarayanaWindow,
    alpha,
    check_growth_bounds,
    narayana,
    narayana_fast,
    narayana_mod,
    narayana_window,
)
from narayana_brocard.padic import INFINITY, vp, vp_factorial, vp_factorial_bounds

__version__ = "0.1.0"

__all__ = [
    "AlphaInterval",
    "GrowthViolation",
    "INFINITY",
    "NarayanaWindow",
    "alpha",
    "check_growth_bounds",
    "narayana",
    "narayana_fast",
    "narayana_mod",
    "narayana_window",
    "vp",
    "vp_factorial",
    "vp_factorial_bounds",
]
