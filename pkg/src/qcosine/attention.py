"""Cosine-similarity attention scores from the quantum estimator.

`similarity_report` scores every query row against every key row with the
quantum estimator and with exact classical cosine similarity, and summarizes
how far apart the two matrices are. `QuantumCosineSimilarity` exposes the
same computation as a scikit-learn transformer: fit stores the key rows,
transform returns the quantum score matrix for query rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .estimator import EstimatorConfig, chunk_plan, estimate_similarity
from .oracle import cosine_similarity_classical
from .serialize import dumps_canonical, float17, write_text
from .vectors import NormalizedVector, normalize


@dataclass(frozen=True)
class SimilarityMatrixReport:
    """Quantum vs classical score matrices for one query/key set."""

    quantum: np.ndarray
    classical: np.ndarray
    max_abs_diff: float
    frobenius_diff: float
    chunk_runs_per_pair: int


def _row_matrix(matrix, name: str) -> np.ndarray:
    arr = np.asarray(matrix, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must be a non-empty 2D array of row vectors")
    return arr


def _normalized_rows(arr: np.ndarray, name: str) -> list[NormalizedVector]:
    rows = []
    for index, row in enumerate(arr):
        try:
            rows.append(normalize(row))
        except ValueError as exc:
            raise ValueError(f"{name} row {index}: {exc}") from None
    return rows


def matrix_diff(quantum, classical) -> tuple[float, float]:
    """Max-abs and Frobenius distance between two equal-shape matrices."""
    q = np.asarray(quantum, dtype=np.float64)
    c = np.asarray(classical, dtype=np.float64)
    if q.shape != c.shape:
        raise ValueError(f"matrix shape mismatch: {q.shape} vs {c.shape}")
    delta = q - c
    return float(np.max(np.abs(delta))), float(np.linalg.norm(delta))


def similarity_report(
    queries, keys, config: EstimatorConfig | None = None
) -> SimilarityMatrixReport:
    """Score rows of `queries` against rows of `keys`.

    Rows are L2-normalized internally; a zero row is an error naming its
    index. Entry (i, j) of each matrix is the similarity of query row i with
    key row j. In exact mode quantum[i, j] - classical[i, j] equals the
    closed-form bias of that pair, so the diff summary measures the total
    approximation error.
    """
    cfg = config if config is not None else EstimatorConfig()
    q_arr = _row_matrix(queries, "queries")
    k_arr = _row_matrix(keys, "keys")
    if q_arr.shape[1] != k_arr.shape[1]:
        raise ValueError(
            f"feature dimension mismatch: queries have {q_arr.shape[1]}, keys have {k_arr.shape[1]}"
        )
    q_rows = _normalized_rows(q_arr, "queries")
    k_rows = _normalized_rows(k_arr, "keys")
    quantum = np.empty((len(q_rows), len(k_rows)), dtype=np.float64)
    classical = np.empty_like(quantum)
    for i, q_row in enumerate(q_rows):
        for j, k_row in enumerate(k_rows):
            quantum[i, j] = estimate_similarity(q_row, k_row, cfg).value
            classical[i, j] = cosine_similarity_classical(q_row, k_row)
    max_abs, frobenius = matrix_diff(quantum, classical)
    runs = len(chunk_plan(q_arr.shape[1], cfg.qubit_budget).chunks)
    quantum.flags.writeable = False
    classical.flags.writeable = False
    return SimilarityMatrixReport(
        quantum=quantum,
        classical=classical,
        max_abs_diff=max_abs,
        frobenius_diff=frobenius,
        chunk_runs_per_pair=runs,
    )


def write_matrix_csv(matrix, path) -> None:
    """Row-major CSV of a score matrix, 17-digit floats, LF newlines."""
    arr = np.asarray(matrix, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("matrix export needs a 2D array")
    lines = [",".join(float17(value) for value in row) for row in arr]
    write_text(path, "\n".join(lines) + "\n")


def write_diff_json(report: SimilarityMatrixReport, path) -> None:
    """JSON diff summary {chunk_runs_per_pair, frobenius_diff, max_abs_diff}."""
    write_text(path, diff_json(report) + "\n")


def diff_json(report: SimilarityMatrixReport) -> str:
    return dumps_canonical(
        {
            "chunk_runs_per_pair": report.chunk_runs_per_pair,
            "frobenius_diff": report.frobenius_diff,
            "max_abs_diff": report.max_abs_diff,
        }
    )


class QuantumCosineSimilarity(TransformerMixin, BaseEstimator):
    """Scikit-learn transformer scoring query rows against fitted key rows.

    Parameters
    ----------
    mode : {"exact", "shots"}, default="exact"
        Whether overlaps come from state-vector probabilities or sampling.
    shots : int or None, default=None
        Bernoulli trials per element; required when mode is "shots".
    qubit_budget : int, default=8
        Even number of simultaneously available qubits per run.
    root_seed : int, default=0
        Root of the per-element shot streams.

    fit(K) stores the L2-normalized rows of K; transform(Q) returns the
    (n_queries, n_keys) quantum similarity matrix. Rows of both inputs are
    normalized internally, so any nonzero real rows are accepted.
    """

    def __init__(
        self,
        mode: str = "exact",
        shots: int | None = None,
        qubit_budget: int = 8,
        root_seed: int = 0,
    ) -> None:
        self.mode = mode
        self.shots = shots
        self.qubit_budget = qubit_budget
        self.root_seed = root_seed

    def _config(self) -> EstimatorConfig:
        return EstimatorConfig(
            mode=self.mode,
            shots=self.shots,
            qubit_budget=self.qubit_budget,
            root_seed=self.root_seed,
        )

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64)
        self._config()  # surface bad parameters at fit time
        self.keys_ = _normalized_rows(X, "keys")
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "keys_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but fit saw {self.n_features_in_}"
            )
        cfg = self._config()
        queries = _normalized_rows(X, "queries")
        scores = np.empty((len(queries), len(self.keys_)), dtype=np.float64)
        for i, q_row in enumerate(queries):
            for j, k_row in enumerate(self.keys_):
                scores[i, j] = estimate_similarity(q_row, k_row, cfg).value
        return scores
