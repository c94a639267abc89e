"""Floating-point accumulation helpers."""

from __future__ import annotations

from typing import Iterable


def compensated_sum(values: Iterable[float]) -> float:
    """Sum floats with Kahan-Neumaier compensation.

    Accumulation order still matters at the last-ulp level, so callers that
    need reproducible totals must feed values in a fixed (ascending-index)
    order. The compensation keeps the result within one rounding of the exact
    sum regardless of cancellation between terms.
    """
    total = 0.0
    correction = 0.0
    for raw in values:
        value = float(raw)
        partial = total + value
        if abs(total) >= abs(value):
            correction += (total - partial) + value
        else:
            correction += (value - partial) + total
        total = partial
    return total + correction
