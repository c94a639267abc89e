"""Cosine-similarity estimation from per-element Hadamard tests.

A d-dimensional pair needs d independent two-qubit circuits. With a budget of
q simultaneously available qubits, q/2 elements fit into one simulator run,
so the element indices are split into ceil(d / (q/2)) contiguous chunks, one
run per chunk. Chunk layout never changes the numbers: elements are evaluated
and summed in ascending index order with compensated summation, and shot
seeds depend only on (root_seed, element_index), never on the chunk shape.

The estimate itself is defined as

    value = compensated_sum(overlaps) - d + 1

which for exact overlaps equals the true inner product plus the closed-form
bias reported alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encoding import encode_angle
from .numerics import compensated_sum
from .oracle import closed_form_bias
from .seeding import stream_seed
from .simulator import run_hadamard_test_circuit, sample_shots
from .vectors import NormalizedVector, require_same_dim


@dataclass(frozen=True)
class EstimatorConfig:
    """Estimation settings.

    mode: "exact" (state-vector probabilities) or "shots" (sampled p0).
    shots: Bernoulli trials per element; required in shot mode, None otherwise.
    qubit_budget: even number >= 2 of simultaneously available qubits.
    root_seed: root of the per-element shot streams (reduced modulo 2**64).
    """

    mode: str = "exact"
    shots: int | None = None
    qubit_budget: int = 8
    root_seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "shots"):
            raise ValueError(f"unknown mode {self.mode!r}; use 'exact' or 'shots'")
        if self.mode == "shots":
            if self.shots is None or int(self.shots) < 1:
                raise ValueError("shot mode requires shots >= 1")
        elif self.shots is not None:
            raise ValueError("exact mode takes no shot count; leave shots=None")
        if self.qubit_budget < 2 or self.qubit_budget % 2 != 0:
            raise ValueError("qubit_budget must be an even number >= 2")


@dataclass(frozen=True)
class ChunkPlan:
    """Contiguous element index ranges, one simulator run each."""

    d: int
    qubit_budget: int
    chunks: tuple[range, ...]


def chunk_plan(d: int, qubit_budget: int) -> ChunkPlan:
    """Split element indices 0..d-1 into runs of qubit_budget/2 elements.

    Every chunk except possibly the last holds exactly qubit_budget/2
    indices; together they cover 0..d-1 disjointly in ascending order.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if qubit_budget < 2 or qubit_budget % 2 != 0:
        raise ValueError("qubit_budget must be an even number >= 2")
    per_chunk = qubit_budget // 2
    chunks = tuple(
        range(start, min(start + per_chunk, d)) for start in range(0, d, per_chunk)
    )
    return ChunkPlan(d=d, qubit_budget=qubit_budget, chunks=chunks)


def elementwise_real_overlap(
    v_i: float, w_i: float, config: EstimatorConfig, element_index: int
) -> float:
    """Overlap of one entry pair from the two-qubit circuit.

    Exact mode returns 2*p0 - 1 from the state vector. Shot mode replaces p0
    with the zero fraction of config.shots Bernoulli trials whose stream is
    seeded by (config.root_seed, element_index).
    """
    p0 = run_hadamard_test_circuit(encode_angle(v_i), encode_angle(w_i))
    if config.mode == "exact":
        return 2.0 * p0 - 1.0
    outcome = sample_shots(p0, config.shots, stream_seed(config.root_seed, element_index))
    return 2.0 * outcome.zero_fraction - 1.0


@dataclass(frozen=True)
class SimilarityEstimate:
    """Result of one pair estimate."""

    value: float
    overlaps: tuple[float, ...]
    bias_closed_form: float
    config_used: EstimatorConfig
    chunk_count: int


def estimate_similarity(
    v: NormalizedVector, w: NormalizedVector, config: EstimatorConfig | None = None
) -> SimilarityEstimate:
    """Estimate <v, w> from d elementwise Hadamard tests.

    value is compensated_sum(overlaps) - d + 1 by definition. In exact mode it
    equals cosine_similarity_classical(v, w) + bias_closed_form up to circuit
    rounding; bias_closed_form is always the analytic (non-positive) bias,
    independent of the sampling mode.
    """
    cfg = config if config is not None else EstimatorConfig()
    d = require_same_dim(v, w)
    plan = chunk_plan(d, cfg.qubit_budget)
    overlaps = [0.0] * d
    for chunk in plan.chunks:
        for index in chunk:
            overlaps[index] = elementwise_real_overlap(
                float(v.entries[index]), float(w.entries[index]), cfg, index
            )
    value = compensated_sum(overlaps) - d + 1
    return SimilarityEstimate(
        value=value,
        overlaps=tuple(overlaps),
        bias_closed_form=closed_form_bias(v, w).bias,
        config_used=cfg,
        chunk_count=len(plan.chunks),
    )


@dataclass(frozen=True)
class ResourceReport:
    """Width and depth budget of a fully parallel d-element estimate."""

    qubits: int
    depth_class: str
    circuits: int
    post_processing: str


def resource_report(d: int) -> ResourceReport:
    """Resources for estimating one d-dimensional pair with all elements at once.

    Two qubits per element (ancilla + target), d independent circuits of
    constant depth, and a required classical post-processing step (sum the
    overlaps, subtract d - 1).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    return ResourceReport(
        qubits=2 * d,
        depth_class="constant",
        circuits=d,
        post_processing="required",
    )
