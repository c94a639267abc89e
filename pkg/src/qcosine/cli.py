"""Command line interface.

Subcommands: estimate (one pair), sweep (random-pair statistics per
dimension), cottention (query/key score matrices), resources (width and depth
budget). Output is deterministic for fixed flags and seeds: JSON uses sorted
keys, floats print with 17 significant digits, and files are UTF-8 with LF
newlines. Exit codes: 0 success, 2 usage or validation error, 1 runtime
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .attention import diff_json, similarity_report, write_diff_json, write_matrix_csv
from .estimator import EstimatorConfig, estimate_similarity, resource_report
from .experiments import export_scatter, export_table, run_sweep
from .oracle import cosine_similarity_classical
from .serialize import dumps_canonical, float17, write_text
from .vectors import normalize


def _add_mode_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--exact", action="store_true", help="use state-vector probabilities (default)"
    )
    group.add_argument(
        "--shots", type=int, metavar="N", help="sample N Bernoulli trials per element"
    )
    parser.add_argument(
        "--budget", type=int, default=8, metavar="B",
        help="even qubit budget per simulator run (default 8)",
    )
    parser.add_argument(
        "--seed", type=int, default=0, metavar="S", help="root seed (default 0)"
    )


def _config_from(args: argparse.Namespace) -> EstimatorConfig:
    if args.shots is not None:
        return EstimatorConfig(
            mode="shots", shots=args.shots, qubit_budget=args.budget, root_seed=args.seed
        )
    return EstimatorConfig(mode="exact", qubit_budget=args.budget, root_seed=args.seed)


def _parse_inline_vector(text: str, flag: str) -> list[float]:
    entries = []
    for position, token in enumerate(text.split(","), start=1):
        token = token.strip()
        try:
            entries.append(float(token))
        except ValueError:
            raise ValueError(
                f"entry {position} of {flag}: could not parse {token!r} as a float"
            ) from None
    return entries


def _parse_vector_file(path: str) -> list[float]:
    entries = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            token = line.strip()
            if not token:
                continue
            try:
                entries.append(float(token))
            except ValueError:
                raise ValueError(
                    f"{path}, line {line_number}: could not parse {token!r} as a float"
                ) from None
    if not entries:
        raise ValueError(f"{path}: no vector entries found")
    return entries


def _parse_matrix_file(path: str) -> np.ndarray:
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            row = []
            for column, token in enumerate(stripped.split(","), start=1):
                token = token.strip()
                try:
                    row.append(float(token))
                except ValueError:
                    raise ValueError(
                        f"{path}, line {line_number}, column {column}: "
                        f"could not parse {token!r} as a float"
                    ) from None
            if rows and len(row) != len(rows[0]):
                raise ValueError(
                    f"{path}, line {line_number}: expected {len(rows[0])} values, got {len(row)}"
                )
            rows.append(row)
    if not rows:
        raise ValueError(f"{path}: no matrix rows found")
    return np.asarray(rows, dtype=np.float64)


def _load_vector(args: argparse.Namespace, name: str) -> list[float]:
    inline = getattr(args, name)
    file_path = getattr(args, f"{name}_file")
    if inline is not None:
        return _parse_inline_vector(inline, f"--{name}")
    return _parse_vector_file(file_path)


def cmd_estimate(args: argparse.Namespace) -> int:
    config = _config_from(args)
    v = normalize(_load_vector(args, "v"), policy=args.normalize)
    w = normalize(_load_vector(args, "w"), policy=args.normalize)
    result = estimate_similarity(v, w, config)
    payload = {
        "bias_closed_form": result.bias_closed_form,
        "chunk_count": result.chunk_count,
        "estimate": result.value,
        "mode": config.mode,
        "overlaps": [float(overlap) for overlap in result.overlaps],
        "qubit_budget": config.qubit_budget,
        "shots": config.shots,
        "true_similarity": cosine_similarity_classical(v, w),
    }
    text = dumps_canonical(payload) + "\n"
    sys.stdout.write(text)
    if args.out is not None:
        write_text(args.out, text)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _config_from(args)
    dims = _parse_dims(args.dims)
    summaries, records = run_sweep(dims, args.samples, config, base_seed=args.seed)
    export_table(summaries, args.out)
    if args.scatter_dir is not None:
        scatter_dir = Path(args.scatter_dir)
        scatter_dir.mkdir(parents=True, exist_ok=True)
        for d in dims:
            export_scatter(
                [r for r in records if r.d == d], scatter_dir / f"scatter_d{d}.csv"
            )
    for s in summaries:
        pearson_text = "nan" if s.pearson is None else float17(s.pearson)
        sys.stdout.write(
            f"d={s.d} qubits={s.qubits} rmse={float17(s.rmse)} "
            f"pearson={pearson_text} samples={s.sample_count}\n"
        )
    return 0


def _parse_dims(text: str) -> list[int]:
    dims = []
    for position, token in enumerate(text.split(","), start=1):
        token = token.strip()
        try:
            dims.append(int(token))
        except ValueError:
            raise ValueError(
                f"entry {position} of --dims: could not parse {token!r} as an integer"
            ) from None
    return dims


def cmd_cottention(args: argparse.Namespace) -> int:
    config = _config_from(args)
    if (args.q_file is None) != (args.k_file is None):
        raise ValueError("--q-file and --k-file must be given together")
    if args.q_file is not None:
        queries = _parse_matrix_file(args.q_file)
        keys = _parse_matrix_file(args.k_file)
    else:
        rng = np.random.default_rng(args.seed)
        queries = rng.uniform(-1.0, 1.0, size=(args.seq, args.dmodel))
        keys = rng.uniform(-1.0, 1.0, size=(args.seq, args.dmodel))
    report = similarity_report(queries, keys, config)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_matrix_csv(report.quantum, out_dir / "quantum.csv")
    write_matrix_csv(report.classical, out_dir / "classical.csv")
    write_diff_json(report, out_dir / "diff.json")
    sys.stdout.write(diff_json(report) + "\n")
    return 0


def cmd_resources(args: argparse.Namespace) -> int:
    report = resource_report(args.dim)
    payload = {
        "circuits": report.circuits,
        "depth_class": report.depth_class,
        "post_processing": report.post_processing,
        "qubits": report.qubits,
    }
    text = dumps_canonical(payload) + "\n"
    sys.stdout.write(text)
    if args.out is not None:
        write_text(args.out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcosine",
        description="Approximate cosine similarity from elementwise Hadamard tests.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    estimate = subparsers.add_parser("estimate", help="estimate one vector pair")
    v_group = estimate.add_mutually_exclusive_group(required=True)
    v_group.add_argument("--v", metavar="LIST", help="comma-separated entries of v")
    v_group.add_argument("--v-file", metavar="PATH", help="file with one entry of v per line")
    w_group = estimate.add_mutually_exclusive_group(required=True)
    w_group.add_argument("--w", metavar="LIST", help="comma-separated entries of w")
    w_group.add_argument("--w-file", metavar="PATH", help="file with one entry of w per line")
    estimate.add_argument(
        "--normalize", choices=("auto", "reject"), default="auto",
        help="rescale input to unit norm (auto) or refuse non-unit input (reject)",
    )
    _add_mode_flags(estimate)
    estimate.add_argument("--out", metavar="PATH", help="also write the JSON result here")
    estimate.set_defaults(func=cmd_estimate)

    sweep = subparsers.add_parser("sweep", help="random-pair sweep over dimensions")
    sweep.add_argument("--dims", default="2,4,8,12", metavar="LIST",
                       help="comma-separated dimensions (default 2,4,8,12)")
    sweep.add_argument("--samples", type=int, default=100, metavar="N",
                       help="pairs per dimension (default 100)")
    _add_mode_flags(sweep)
    sweep.add_argument("--out", default="table.csv", metavar="PATH",
                       help="summary table CSV path (default table.csv)")
    sweep.add_argument("--scatter-dir", metavar="DIR",
                       help="if set, write scatter_d<d>.csv per dimension here")
    sweep.set_defaults(func=cmd_sweep)

    cottention = subparsers.add_parser(
        "cottention", help="quantum vs classical attention score matrices"
    )
    cottention.add_argument("--dmodel", type=int, default=16, metavar="D",
                            help="model width for generated inputs (default 16)")
    cottention.add_argument("--seq", type=int, default=8, metavar="L",
                            help="sequence length for generated inputs (default 8)")
    cottention.add_argument("--q-file", metavar="PATH",
                            help="CSV of query rows (overrides generated inputs)")
    cottention.add_argument("--k-file", metavar="PATH",
                            help="CSV of key rows (overrides generated inputs)")
    _add_mode_flags(cottention)
    cottention.add_argument("--out-dir", default=".", metavar="DIR",
                            help="directory for quantum.csv, classical.csv, diff.json")
    cottention.set_defaults(func=cmd_cottention)

    resources = subparsers.add_parser("resources", help="resource budget for one estimate")
    resources.add_argument("--dim", type=int, required=True, metavar="D",
                           help="vector dimension")
    resources.add_argument("--out", metavar="PATH", help="also write the JSON report here")
    resources.set_defaults(func=cmd_resources)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal failures
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
