"""Approximate cosine similarity from elementwise two-qubit Hadamard tests.

Each entry pair (v_i, w_i) of two unit vectors is angle-encoded on a single
qubit (theta = 2*arccos(x)) and a constant-depth Hadamard test measures the
real overlap v_i*w_i + sqrt(1-v_i^2)*sqrt(1-w_i^2). Summing the d overlaps
and subtracting d - 1 approximates the inner product <v, w> with a known,
non-positive closed-form bias. The package provides the simulator, exact
classical oracles, a chunked estimator with deterministic shot sampling,
sweep and attention-matrix harnesses, and a CLI.
"""

from .attention import (
    QuantumCosineSimilarity,
    SimilarityMatrixReport,
    matrix_diff,
    similarity_report,
    write_diff_json,
    write_matrix_csv,
)
from .encoding import decode_angle, encode_angle
from .estimator import (
    ChunkPlan,
    EstimatorConfig,
    ResourceReport,
    SimilarityEstimate,
    chunk_plan,
    elementwise_real_overlap,
    estimate_similarity,
    resource_report,
)
from .experiments import (
    ExperimentRecord,
    SweepSummary,
    export_scatter,
    export_table,
    generate_pair,
    pearson,
    rmse,
    run_sweep,
)
from .numerics import compensated_sum
from .oracle import (
    BiasReport,
    analytic_overlap,
    approx_residual,
    closed_form_bias,
    cosine_similarity_classical,
)
from .seeding import splitmix64, stream_seed
from .simulator import (
    ShotOutcome,
    TwoQubitState,
    apply_controlled_ry,
    apply_hadamard,
    circuit_trace,
    initial_state,
    run_hadamard_test_circuit,
    sample_shots,
)
from .vectors import NormalizedVector, normalize

__version__ = "0.1.0"

__all__ = [
    "BiasReport",
    "ChunkPlan",
    "EstimatorConfig",
    "ExperimentRecord",
    "NormalizedVector",
    "QuantumCosineSimilarity",
    "ResourceReport",
    "ShotOutcome",
    "SimilarityEstimate",
    "SimilarityMatrixReport",
    "SweepSummary",
    "TwoQubitState",
    "analytic_overlap",
    "apply_controlled_ry",
    "apply_hadamard",
    "approx_residual",
    "chunk_plan",
    "circuit_trace",
    "closed_form_bias",
    "compensated_sum",
    "cosine_similarity_classical",
    "decode_angle",
    "elementwise_real_overlap",
    "encode_angle",
    "estimate_similarity",
    "export_scatter",
    "export_table",
    "generate_pair",
    "initial_state",
    "matrix_diff",
    "normalize",
    "pearson",
    "resource_report",
    "rmse",
    "run_hadamard_test_circuit",
    "run_sweep",
    "sample_shots",
    "similarity_report",
    "splitmix64",
    "stream_seed",
    "write_diff_json",
    "write_matrix_csv",
]
