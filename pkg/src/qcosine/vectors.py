"""Unit-vector domain type and input validation helpers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Norm may deviate from 1 by at most this much before a vector is refused.
NORM_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class NormalizedVector:
    """Real vector with unit L2 norm and entries in [-1, 1].

    Built by :func:`normalize`; the entries array is made read-only so an
    instance cannot drift out of its invariants after construction.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.float64, copy=True)
        if entries.ndim != 1 or entries.size == 0:
            raise ValueError("a vector must be one-dimensional with at least one entry")
        if not np.all(np.isfinite(entries)):
            raise ValueError("vector entries must be finite")
        if float(np.max(np.abs(entries), initial=0.0)) > 1.0:
            raise ValueError("entries of a unit vector must lie in [-1, 1]")
        norm = float(np.linalg.norm(entries))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(
                f"vector norm {norm!r} deviates from 1 by more than {NORM_TOLERANCE}"
            )
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return int(self.entries.size)

    def __len__(self) -> int:
        return self.dim


def normalize(raw, policy: str = "auto") -> NormalizedVector:
    """Validate a raw real vector and return its unit-L2 representative.

    Policy "auto" rescales any nonzero vector to unit norm; "reject" refuses
    input whose norm deviates from 1 by more than NORM_TOLERANCE instead of
    rescaling it. Entries are clamped to [-1, 1] afterwards so that arccos
    calls downstream stay in domain even when division overshoots by one ulp.

    Raises:
        ValueError: zero vector, non-finite entries, unknown policy, or a
            non-unit input under the reject policy.
    """
    if policy not in ("auto", "reject"):
        raise ValueError(f"unknown normalization policy {policy!r}; use 'auto' or 'reject'")
    arr = np.asarray(raw, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a vector must be one-dimensional with at least one entry")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("degenerate vector: all entries are zero")
    if abs(norm - 1.0) <= NORM_TOLERANCE:
        # Already unit. Skipping the division makes normalize exactly
        # idempotent: re-normalizing a normalized vector is the identity.
        scaled = arr
    elif policy == "reject":
        raise ValueError(
            f"reject policy: input norm {norm!r} is not within {NORM_TOLERANCE} of 1"
        )
    else:
        scaled = arr / norm
    return NormalizedVector(np.clip(scaled, -1.0, 1.0))


def require_same_dim(v: NormalizedVector, w: NormalizedVector) -> int:
    """Check both operands are NormalizedVector of equal dimension; return it."""
    if not isinstance(v, NormalizedVector) or not isinstance(w, NormalizedVector):
        raise TypeError("expected NormalizedVector operands; call normalize() on raw input first")
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    return v.dim
