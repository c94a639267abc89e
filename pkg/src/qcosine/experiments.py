"""Randomized sweeps comparing the estimator against classical similarity.

Pair generation is reproducible: seed s feeds PCG-64 (numpy default_rng),
which draws 2d uniform entries in [-1, 1], the first d for v and the next d
for w; a vector whose raw norm falls below 1e-6 is redrawn from the same
stream before normalization. Summaries report RMSE of the estimation error
and the sample Pearson correlation (n-1 convention) between true and
estimated similarities.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .estimator import EstimatorConfig, estimate_similarity
from .oracle import cosine_similarity_classical
from .serialize import float17, write_text
from .vectors import NormalizedVector, normalize

REDRAW_NORM_FLOOR = 1e-6


@dataclass(frozen=True)
class ExperimentRecord:
    """One estimated pair of a sweep."""

    seed: int
    d: int
    true_similarity: float
    estimate: float
    error: float


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate statistics for one dimension of a sweep."""

    d: int
    qubits: int
    rmse: float
    pearson: float | None
    sample_count: int


def generate_pair(d: int, seed: int) -> tuple[NormalizedVector, NormalizedVector]:
    """Reproducible random unit pair for dimension d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    rng = np.random.default_rng(seed)
    draws = rng.uniform(-1.0, 1.0, size=2 * d)
    raw_v, raw_w = draws[:d], draws[d:]
    while float(np.linalg.norm(raw_v)) < REDRAW_NORM_FLOOR:
        raw_v = rng.uniform(-1.0, 1.0, size=d)
    while float(np.linalg.norm(raw_w)) < REDRAW_NORM_FLOOR:
        raw_w = rng.uniform(-1.0, 1.0, size=d)
    return normalize(raw_v), normalize(raw_w)


def rmse(errors) -> float:
    """Root mean squared error of a non-empty error sequence."""
    arr = np.asarray(list(errors), dtype=np.float64)
    if arr.size == 0:
        raise ValueError("rmse needs at least one error value")
    return float(sqrt(float(np.mean(np.square(arr)))))


def pearson(xs, ys) -> float | None:
    """Sample Pearson correlation with the n-1 convention.

    Returns None (undefined) when either series has zero variance instead of
    forcing a 0.
    """
    x = np.asarray(list(xs), dtype=np.float64)
    y = np.asarray(list(ys), dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1 or x.size < 2:
        raise ValueError("pearson needs two equal-length 1D series with >= 2 points")
    sx = float(x.std(ddof=1))
    sy = float(y.std(ddof=1))
    if sx == 0.0 or sy == 0.0:
        return None
    cov = float(np.dot(x - x.mean(), y - y.mean())) / (x.size - 1)
    return cov / (sx * sy)


def run_sweep(
    dims,
    samples: int,
    config: EstimatorConfig | None = None,
    base_seed: int = 0,
) -> tuple[list[SweepSummary], list[ExperimentRecord]]:
    """Estimate `samples` seeded pairs for every dimension in `dims`.

    Pair seeds run base_seed .. base_seed + samples - 1 for each dimension.
    In shot mode each pair additionally offsets the config root_seed by its
    pair seed so different pairs draw independent shot streams. Returns one
    SweepSummary per dimension plus the flat list of per-pair records.
    """
    cfg = config if config is not None else EstimatorConfig()
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise ValueError("dims must be a non-empty list of positive integers")
    samples = int(samples)
    if samples < 2:
        raise ValueError("samples must be >= 2 to define a correlation")
    summaries: list[SweepSummary] = []
    records: list[ExperimentRecord] = []
    for d in dims:
        trues: list[float] = []
        estimates: list[float] = []
        for offset in range(samples):
            seed = base_seed + offset
            v, w = generate_pair(d, seed)
            pair_cfg = cfg
            if cfg.mode == "shots":
                pair_cfg = dataclasses.replace(cfg, root_seed=cfg.root_seed + seed)
            true = cosine_similarity_classical(v, w)
            estimate = estimate_similarity(v, w, pair_cfg).value
            records.append(
                ExperimentRecord(
                    seed=seed,
                    d=d,
                    true_similarity=true,
                    estimate=estimate,
                    error=estimate - true,
                )
            )
            trues.append(true)
            estimates.append(estimate)
        errors = [e - t for e, t in zip(estimates, trues)]
        summaries.append(
            SweepSummary(
                d=d,
                qubits=2 * d,
                rmse=rmse(errors),
                pearson=pearson(trues, estimates),
                sample_count=samples,
            )
        )
    return summaries, records


def export_scatter(records, path) -> None:
    """CSV `seed,d,true_similarity,estimate,error` with 17-digit floats."""
    rows = list(records)
    if not rows:
        raise ValueError("no records to export")
    lines = ["seed,d,true_similarity,estimate,error"]
    for r in rows:
        lines.append(
            f"{r.seed},{r.d},{float17(r.true_similarity)},{float17(r.estimate)},{float17(r.error)}"
        )
    write_text(path, "\n".join(lines) + "\n")


def export_table(summaries, path) -> None:
    """CSV `d,qubits,rmse,pearson,samples`; an undefined pearson renders as nan."""
    rows = list(summaries)
    if not rows:
        raise ValueError("no summaries to export")
    lines = ["d,qubits,rmse,pearson,samples"]
    for s in rows:
        pearson_text = "nan" if s.pearson is None else float17(s.pearson)
        lines.append(
            f"{s.d},{s.qubits},{float17(s.rmse)},{pearson_text},{s.sample_count}"
        )
    write_text(path, "\n".join(lines) + "\n")
