import json

import numpy as np
import pytest

from qcosine.cli import main
from qcosine.serialize import dumps_canonical


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_estimate_json_payload(capsys):
    code, out, err = run_cli(capsys, "estimate", "--v", "1,0", "--w", "0,1")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert set(payload) == {
        "bias_closed_form",
        "chunk_count",
        "estimate",
        "mode",
        "overlaps",
        "qubit_budget",
        "shots",
        "true_similarity",
    }
    assert payload["mode"] == "exact"
    assert payload["shots"] is None
    assert payload["chunk_count"] == 1
    assert payload["qubit_budget"] == 8
    assert payload["true_similarity"] == pytest.approx(0.0, abs=1e-12)
    assert payload["estimate"] == pytest.approx(-1.0, abs=1e-12)
    assert payload["bias_closed_form"] == pytest.approx(-1.0, abs=1e-12)
    assert payload["overlaps"] == pytest.approx([0.0, 0.0], abs=1e-12)


def test_estimate_stdout_is_canonical_json(capsys):
    _, out, _ = run_cli(capsys, "estimate", "--v", "0.3,0.4,0.5", "--w", "0.1,-0.2,0.9")
    assert out.endswith("\n")
    assert dumps_canonical(json.loads(out)) == out.rstrip("\n")


def test_estimate_out_file_matches_stdout(capsys, tmp_path):
    path = tmp_path / "result.json"
    code, out, _ = run_cli(
        capsys, "estimate", "--v", "1,0", "--w", "0,1", "--out", str(path)
    )
    assert code == 0
    assert path.read_text(encoding="utf-8") == out


def test_estimate_accepts_vector_files(capsys, tmp_path):
    v_path = tmp_path / "v.txt"
    v_path.write_text("0.6\n\n0.8\n", encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "estimate", "--v-file", str(v_path), "--w", "0.6,0.8"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["true_similarity"] == pytest.approx(1.0, abs=1e-12)
    assert payload["estimate"] == pytest.approx(1.0, abs=1e-12)
    assert payload["bias_closed_form"] == pytest.approx(0.0, abs=1e-12)


def test_estimate_normalizes_by_default(capsys):
    code, out, _ = run_cli(capsys, "estimate", "--v", "2,0", "--w", "0,3")
    assert code == 0
    assert json.loads(out)["estimate"] == pytest.approx(-1.0, abs=1e-12)


def test_estimate_reject_policy_refuses_non_unit_input(capsys):
    code, _, err = run_cli(
        capsys, "estimate", "--v", "2,0", "--w", "1,0", "--normalize", "reject"
    )
    assert code == 2
    assert err.startswith("error:")


def test_estimate_parse_error_names_the_entry(capsys):
    code, _, err = run_cli(capsys, "estimate", "--v", "1,foo", "--w", "1,0")
    assert code == 2
    assert "entry 2 of --v" in err


def test_estimate_conflicting_vector_flags(capsys, tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("1\n", encoding="utf-8")
    code, _, err = run_cli(
        capsys, "estimate", "--v", "1,0", "--v-file", str(path), "--w", "0,1"
    )
    assert code == 2
    assert "not allowed with" in err


def test_estimate_missing_w_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "estimate", "--v", "1,0")
    assert code == 2
    assert "usage" in err


def test_estimate_dimension_mismatch(capsys):
    code, _, err = run_cli(capsys, "estimate", "--v", "1,0", "--w", "1,0,0")
    assert code == 2
    assert err.startswith("error:")


def test_estimate_rejects_odd_budget(capsys):
    code, _, err = run_cli(
        capsys, "estimate", "--v", "1,0", "--w", "0,1", "--budget", "3"
    )
    assert code == 2
    assert "qubit_budget" in err


def test_estimate_rejects_exact_with_shots(capsys):
    code, _, err = run_cli(
        capsys, "estimate", "--v", "1,0", "--w", "0,1", "--exact", "--shots", "10"
    )
    assert code == 2
    assert "not allowed with" in err


def test_estimate_rejects_zero_shots(capsys):
    code, _, err = run_cli(
        capsys, "estimate", "--v", "1,0", "--w", "0,1", "--shots", "0"
    )
    assert code == 2
    assert "shots" in err


def test_estimate_missing_vector_file_is_runtime_error(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "estimate", "--v-file", str(tmp_path / "nope.txt"), "--w", "1,0"
    )
    assert code == 1
    assert err.startswith("error:")


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "usage" in out
    code, out, _ = run_cli(capsys, "estimate", "--help")
    assert code == 0
    assert "--normalize" in out


def test_shot_mode_estimate_is_seed_deterministic(capsys):
    args = ("estimate", "--v", "1,0", "--w", "0,1", "--shots", "200", "--seed", "3")
    code, first, _ = run_cli(capsys, *args)
    assert code == 0
    _, second, _ = run_cli(capsys, *args)
    assert second == first
    _, other_seed, _ = run_cli(
        capsys, "estimate", "--v", "1,0", "--w", "0,1", "--shots", "200", "--seed", "4"
    )
    assert other_seed != first


def test_sweep_writes_table_and_scatter(capsys, tmp_path):
    table = tmp_path / "table.csv"
    scatter_dir = tmp_path / "scatter"
    code, out, err = run_cli(
        capsys,
        "sweep",
        "--dims", "2,3",
        "--samples", "3",
        "--out", str(table),
        "--scatter-dir", str(scatter_dir),
    )
    assert code == 0 and err == ""
    lines = table.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "d,qubits,rmse,pearson,samples"
    assert len(lines) == 3
    assert lines[1].startswith("2,4,") and lines[1].endswith(",3")
    assert lines[2].startswith("3,6,")
    for d in (2, 3):
        scatter_lines = (
            (scatter_dir / f"scatter_d{d}.csv").read_text(encoding="utf-8").splitlines()
        )
        assert scatter_lines[0] == "seed,d,true_similarity,estimate,error"
        assert len(scatter_lines) == 4
        assert all(line.split(",")[1] == str(d) for line in scatter_lines[1:])
    stdout_lines = out.splitlines()
    assert len(stdout_lines) == 2
    assert stdout_lines[0].startswith("d=2 qubits=4 rmse=")
    assert stdout_lines[0].endswith("samples=3")


def test_sweep_is_deterministic(capsys, tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        _, out, _ = run_cli(
            capsys, "sweep", "--dims", "2", "--samples", "4", "--out", str(path)
        )
        outputs.append((out, path.read_bytes()))
    assert outputs[0] == outputs[1]


def test_sweep_dims_parse_error(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "sweep", "--dims", "2,x", "--out", str(tmp_path / "t.csv")
    )
    assert code == 2
    assert "entry 2 of --dims" in err


def test_sweep_rejects_single_sample(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "sweep", "--dims", "2", "--samples", "1", "--out", str(tmp_path / "t.csv")
    )
    assert code == 2
    assert "samples" in err


def test_cottention_toy_matrices(capsys, tmp_path):
    q_path = tmp_path / "q.csv"
    k_path = tmp_path / "k.csv"
    q_path.write_text("1,0\n0,1\n", encoding="utf-8")
    k_path.write_text("1,0\n0,1\n", encoding="utf-8")
    out_dir = tmp_path / "run"
    code, out, err = run_cli(
        capsys,
        "cottention",
        "--q-file", str(q_path),
        "--k-file", str(k_path),
        "--out-dir", str(out_dir),
    )
    assert code == 0 and err == ""
    quantum = np.loadtxt(out_dir / "quantum.csv", delimiter=",")
    classical = np.loadtxt(out_dir / "classical.csv", delimiter=",")
    np.testing.assert_allclose(quantum, [[1.0, -1.0], [-1.0, 1.0]], atol=1e-12)
    np.testing.assert_allclose(classical, np.eye(2), atol=0)
    diff_text = (out_dir / "diff.json").read_text(encoding="utf-8")
    assert diff_text == out
    payload = json.loads(diff_text)
    assert set(payload) == {"chunk_runs_per_pair", "frobenius_diff", "max_abs_diff"}
    assert payload["chunk_runs_per_pair"] == 1
    assert payload["max_abs_diff"] == pytest.approx(1.0, abs=1e-12)


def test_cottention_requires_both_files(capsys, tmp_path):
    q_path = tmp_path / "q.csv"
    q_path.write_text("1,0\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "cottention", "--q-file", str(q_path))
    assert code == 2
    assert "together" in err


def test_cottention_generated_inputs_repeatable(capsys, tmp_path):
    runs = []
    for name in ("first", "second"):
        out_dir = tmp_path / name
        code, out, _ = run_cli(
            capsys,
            "cottention",
            "--dmodel", "4",
            "--seq", "3",
            "--out-dir", str(out_dir),
        )
        assert code == 0
        files = tuple(
            (out_dir / artifact).read_bytes()
            for artifact in ("quantum.csv", "classical.csv", "diff.json")
        )
        runs.append((out, files))
    assert runs[0] == runs[1]
    quantum = np.loadtxt(tmp_path / "first" / "quantum.csv", delimiter=",")
    assert quantum.shape == (3, 3)


def test_cottention_matrix_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,0\n1,zz\n", encoding="utf-8")
    good = tmp_path / "good.csv"
    good.write_text("1,0\n0,1\n", encoding="utf-8")
    code, _, err = run_cli(
        capsys, "cottention", "--q-file", str(bad), "--k-file", str(good),
        "--out-dir", str(tmp_path / "x"),
    )
    assert code == 2
    assert "line 2, column 2" in err

    ragged = tmp_path / "ragged.csv"
    ragged.write_text("1,0\n1\n", encoding="utf-8")
    code, _, err = run_cli(
        capsys, "cottention", "--q-file", str(ragged), "--k-file", str(good),
        "--out-dir", str(tmp_path / "y"),
    )
    assert code == 2
    assert "expected 2 values, got 1" in err


def test_resources_payload(capsys, tmp_path):
    path = tmp_path / "resources.json"
    code, out, err = run_cli(capsys, "resources", "--dim", "5", "--out", str(path))
    assert code == 0 and err == ""
    assert out == (
        '{"circuits":5,"depth_class":"constant",'
        '"post_processing":"required","qubits":10}\n'
    )
    assert path.read_text(encoding="utf-8") == out


def test_resources_rejects_bad_dimension(capsys):
    code, _, err = run_cli(capsys, "resources", "--dim", "0")
    assert code == 2
    assert "d must be >= 1" in err


def test_out_path_into_missing_directory_is_runtime_error(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "resources", "--dim", "2",
        "--out", str(tmp_path / "missing" / "out.json"),
    )
    assert code == 1
    assert err.startswith("error:")
