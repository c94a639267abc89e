"""Deterministic per-element seed derivation.

Shot streams for different vector elements must not depend on chunk layout or
evaluation order, so each element gets its own seed computed in O(1) from
(root_seed, element_index). The derivation is the SplitMix64 sequence: element
i uses the i-th output of a SplitMix64 generator seeded with root_seed.
SplitMix64 steps its state by a fixed odd constant and applies a two-round
xor-multiply finalizer, which decorrelates adjacent indices.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> int:
    """SplitMix64 finalizer: mix a 64-bit state into a 64-bit output."""
    z = state & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def stream_seed(root_seed: int, element_index: int) -> int:
    """Seed for the shot stream of one vector element.

    Equals the element_index-th output of SplitMix64 seeded with root_seed.
    root_seed is reduced modulo 2**64; element_index must be non-negative.
    """
    if element_index < 0:
        raise ValueError("element_index must be non-negative")
    return splitmix64((int(root_seed) + (element_index + 1) * _GAMMA) & MASK64)
