"""Infinity-safe scalar helpers for generator arithmetic on [0, +inf]."""

from __future__ import annotations

import math

INF = math.inf


def pow_ext(base: float, exp: float) -> float:
    """x**y on the extended nonnegative reals.

    0**negative = +inf, and overflow saturates to +inf instead of raising.
    """
    if base == 0.0 and exp < 0.0:
        return INF
    try:
        return base**exp
    except OverflowError:
        return INF


def div_ext(a: float, b: float) -> float:
    """a / b with positive/0 = +inf and 0/0 = 0 disallowed (returns nan)."""
    if b == 0.0:
        return INF if a > 0.0 else math.nan
    return a / b


def log_expm1_abs(t: float) -> float:
    """log|e^t - 1|, stable for large positive t."""
    if t > 36.0:  # e^-t below double epsilon
        return t + math.log1p(-math.exp(-t))
    return math.log(abs(math.expm1(t)))
