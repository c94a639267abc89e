"""Dense two-qubit state-vector simulator for the elementwise Hadamard test.

The register holds an ancilla and a target qubit. Amplitudes are stored as
four complex numbers for |ancilla, target> in the order |00>, |01>, |10>,
|11>, i.e. index = 2*ancilla + target. The one circuit this package runs is

    H(ancilla); C-Ry(+theta_w); C-Ry(-theta_v); H(ancilla)

with the ancilla as control, which realizes the controlled rotation
Ry(-theta_v) Ry(theta_w) on the target. Measuring the ancilla afterwards gives

    p0 = (1 + Re<0| Ry(-theta_v) Ry(theta_w) |0>) / 2

so 2*p0 - 1 is the real overlap of the two encoded entries. Ry uses the
convention Ry(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].

Every gate application re-checks that the squared amplitude norm stays within
1e-12 of 1; a violation means the gate arithmetic itself is broken.

Shot sampling draws Bernoulli trials from numpy's PCG-64 generator
(numpy.random.default_rng), so a (p0, shots, stream_seed) triple reproduces
bit-identically on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, isfinite, sin, sqrt

import numpy as np

from .encoding import DOMAIN_SLACK, TWO_PI
from .seeding import MASK64

NORM_TOLERANCE = 1e-12
_SQRT_HALF = sqrt(0.5)

Amplitudes = tuple[complex, complex, complex, complex]


@dataclass(frozen=True)
class TwoQubitState:
    """Amplitudes (a00, a01, a10, a11) of the ancilla+target register."""

    amps: Amplitudes

    def norm_squared(self) -> float:
        return sum(a.real * a.real + a.imag * a.imag for a in self.amps)

    def ancilla_zero_probability(self) -> float:
        """Probability of measuring the ancilla in |0>, clamped to [0, 1]."""
        a00, a01 = self.amps[0], self.amps[1]
        p0 = a00.real * a00.real + a00.imag * a00.imag
        p0 += a01.real * a01.real + a01.imag * a01.imag
        return min(1.0, max(0.0, p0))

    def as_array(self) -> np.ndarray:
        return np.array(self.amps, dtype=np.complex128)


@dataclass(frozen=True)
class ShotOutcome:
    """Counts from repeated ancilla measurements."""

    zeros: int
    shots: int

    @property
    def zero_fraction(self) -> float:
        return self.zeros / self.shots


def initial_state() -> TwoQubitState:
    """The register reset |00>."""
    return TwoQubitState((1.0 + 0.0j, 0.0 + 0.0j, 0.0 + 0.0j, 0.0 + 0.0j))


def _checked(amps: Amplitudes) -> TwoQubitState:
    state = TwoQubitState(amps)
    if abs(state.norm_squared() - 1.0) > NORM_TOLERANCE:
        raise ArithmeticError("state norm drifted beyond 1e-12 after a gate")
    return state


def apply_hadamard(state: TwoQubitState, qubit: str) -> TwoQubitState:
    """Apply H to "ancilla" or "target"; returns a new state."""
    a00, a01, a10, a11 = state.amps
    if qubit == "ancilla":
        return _checked((
            (a00 + a10) * _SQRT_HALF,
            (a01 + a11) * _SQRT_HALF,
            (a00 - a10) * _SQRT_HALF,
            (a01 - a11) * _SQRT_HALF,
        ))
    if qubit == "target":
        return _checked((
            (a00 + a01) * _SQRT_HALF,
            (a00 - a01) * _SQRT_HALF,
            (a10 + a11) * _SQRT_HALF,
            (a10 - a11) * _SQRT_HALF,
        ))
    raise ValueError(f"unknown qubit {qubit!r}; expected 'ancilla' or 'target'")


def apply_controlled_ry(state: TwoQubitState, theta: float, sign: int = 1) -> TwoQubitState:
    """Rotate the target by Ry(sign*theta) where the ancilla is |1>."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    half = 0.5 * sign * float(theta)
    c, s = cos(half), sin(half)
    a00, a01, a10, a11 = state.amps
    return _checked((a00, a01, c * a10 - s * a11, s * a10 + c * a11))


def _require_angle(theta: float, name: str) -> float:
    theta = float(theta)
    if not isfinite(theta) or theta < -DOMAIN_SLACK or theta > TWO_PI + DOMAIN_SLACK:
        raise ValueError(f"{name} {theta!r} lies outside [0, 2*pi]")
    return theta


def run_hadamard_test_circuit(theta_v: float, theta_w: float) -> float:
    """Ancilla-0 probability of the elementwise Hadamard test.

    Both angles must lie in [0, 2*pi]. Exactly equal angles cancel, giving
    p0 = 1 up to rounding.
    """
    theta_v = _require_angle(theta_v, "theta_v")
    theta_w = _require_angle(theta_w, "theta_w")
    state = initial_state()
    state = apply_hadamard(state, "ancilla")
    state = apply_controlled_ry(state, theta_w, sign=1)
    state = apply_controlled_ry(state, theta_v, sign=-1)
    state = apply_hadamard(state, "ancilla")
    return state.ancilla_zero_probability()


def circuit_trace(theta_v: float, theta_w: float) -> list[str]:
    """Gate lines for the standard circuit in application order.

    Each line is "GATE qubit" for Hadamards and "GATE qubit angle" for the
    controlled rotations, with the signed effective angle printed to 17
    significant digits. The layout is fixed, so traces are byte-stable.
    """
    theta_v = _require_angle(theta_v, "theta_v")
    theta_w = _require_angle(theta_w, "theta_w")
    return [
        "H ancilla",
        f"CRY target {format(theta_w + 0.0, '.17g')}",
        f"CRY target {format(-theta_v + 0.0, '.17g')}",  # +0.0 avoids printing -0
        "H ancilla",
    ]


def sample_shots(p0: float, shots: int, stream_seed: int) -> ShotOutcome:
    """Measure the ancilla `shots` times as Bernoulli(p0) trials.

    The generator is numpy's PCG-64 seeded with stream_seed (reduced modulo
    2**64), so the outcome is a pure function of (p0, shots, stream_seed).
    p0 may overshoot [0, 1] by at most 1e-12 of simulator rounding.
    """
    shots = int(shots)
    if shots < 1:
        raise ValueError("shots must be >= 1")
    p0 = float(p0)
    if not isfinite(p0) or p0 < -NORM_TOLERANCE or p0 > 1.0 + NORM_TOLERANCE:
        raise ValueError(f"p0 {p0!r} lies outside [0, 1]")
    p0 = min(1.0, max(0.0, p0))
    rng = np.random.default_rng(int(stream_seed) & MASK64)
    zeros = int(np.count_nonzero(rng.random(shots) < p0))
    return ShotOutcome(zeros=zeros, shots=shots)
