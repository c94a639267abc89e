"""Angle map between vector entries and single-qubit rotation angles.

An entry x in [-1, 1] becomes the rotation angle theta = 2*arccos(x), so that
Ry(theta)|0> = x|0> + sqrt(1 - x^2)|1>. The principal arccos branch keeps
theta in [0, 2*pi]; decoding is cos(theta / 2).
"""

from __future__ import annotations

import math

# Inputs this far past a boundary are treated as rounding noise and clamped.
DOMAIN_SLACK = 1e-12
TWO_PI = 2.0 * math.pi


def encode_angle(x: float) -> float:
    """Rotation angle 2*arccos(x) for an entry x in [-1, 1]."""
    x = float(x)
    if not math.isfinite(x) or abs(x) > 1.0 + DOMAIN_SLACK:
        raise ValueError(f"entry {x!r} lies outside [-1, 1]")
    x = min(1.0, max(-1.0, x))
    return 2.0 * math.acos(x)


def decode_angle(theta: float) -> float:
    """Inverse of :func:`encode_angle`: cos(theta / 2) for theta in [0, 2*pi]."""
    theta = float(theta)
    if not math.isfinite(theta) or theta < -DOMAIN_SLACK or theta > TWO_PI + DOMAIN_SLACK:
        raise ValueError(f"angle {theta!r} lies outside [0, 2*pi]")
    return math.cos(min(TWO_PI, max(0.0, theta)) / 2.0)
