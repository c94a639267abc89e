"""Closed-form classical references for the quantum estimator.

Everything here is direct evaluation of exact expressions; no circuit code is
imported, so these functions can arbitrate what the simulator path must
produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite, sqrt

import numpy as np

from .numerics import compensated_sum
from .vectors import NormalizedVector, require_same_dim

DOMAIN_SLACK = 1e-12


def _checked_entry(x: float, name: str) -> float:
    x = float(x)
    if not isfinite(x) or abs(x) > 1.0 + DOMAIN_SLACK:
        raise ValueError(f"{name} {x!r} lies outside [-1, 1]")
    return min(1.0, max(-1.0, x))


def _sin_arccos(x: float) -> float:
    # sqrt(1 - x^2) with the radicand floored at 0; x can pass 1 by one ulp.
    return sqrt(max(0.0, 1.0 - x * x))


def cosine_similarity_classical(v: NormalizedVector, w: NormalizedVector) -> float:
    """Exact inner product of two unit vectors (their cosine similarity)."""
    require_same_dim(v, w)
    return float(np.dot(v.entries, w.entries))


def analytic_overlap(x: float, y: float) -> float:
    """Exact single-element overlap x*y + sqrt(1-x^2)*sqrt(1-y^2).

    Equals cos(arccos(y) - arccos(x)). The circuit's 2*p0 - 1 must match this
    value; it is the ground truth for exact-mode estimation.
    """
    x = _checked_entry(x, "x")
    y = _checked_entry(y, "y")
    return x * y + _sin_arccos(x) * _sin_arccos(y)


def approx_residual(x: float, y: float) -> float:
    """Gap sqrt(1-x^2)*sqrt(1-y^2) - (1 - (x^2 + y^2)/2).

    Measures how far the cross term is from its small-entry quadratic
    surrogate. Identically zero when |x| = |y|, and bounded in magnitude by
    (x^4 + y^4)/8 + x^2*y^2/4 for |x|, |y| <= 0.5.
    """
    x = _checked_entry(x, "x")
    y = _checked_entry(y, "y")
    return _sin_arccos(x) * _sin_arccos(y) - (1.0 - (x * x + y * y) / 2.0)


@dataclass(frozen=True)
class BiasReport:
    """Decomposition of the deterministic estimator error for one pair."""

    bias: float
    per_element_sqrt_products: tuple[float, ...]
    residuals: tuple[float, ...]


def closed_form_bias(v: NormalizedVector, w: NormalizedVector) -> BiasReport:
    """Deterministic estimator error: sum_i sqrt(1-v_i^2)*sqrt(1-w_i^2) - d + 1.

    For unit vectors the sum is at most d - 1 by Cauchy-Schwarz, so the bias
    is never positive; it is zero exactly when |v_i| = |w_i| for every i. The
    extreme is reached by orthogonal axis vectors, e.g. (1, 0) vs (0, 1) has
    bias -1.
    """
    d = require_same_dim(v, w)
    pairs = list(zip(v.entries, w.entries))
    products = tuple(_sin_arccos(float(a)) * _sin_arccos(float(b)) for a, b in pairs)
    residuals = tuple(approx_residual(float(a), float(b)) for a, b in pairs)
    bias = compensated_sum(products) - d + 1
    return BiasReport(bias=bias, per_element_sqrt_products=products, residuals=residuals)
