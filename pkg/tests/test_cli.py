"""Command line contract: exit codes, determinism, formats, file output."""

import json
import subprocess
import sys

import pytest

from weakcomm.cli import main

FAST_VERIFY = [
    "verify",
    "--classes",
    "comm_l,none",
    "--dims",
    "2,3",
    "--samples",
    "4",
    "--seed",
    "3",
]


def _run_inproc(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_verify_clean_exits_zero(capsys):
    status, out, err = _run_inproc(FAST_VERIFY, capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["command"] == "verify"
    assert payload["schema_version"] == 1
    assert payload["totals"]["fail"] == 0
    assert payload["config"]["seed"] == 3


def test_verify_byte_deterministic(capsys):
    _, out1, _ = _run_inproc(FAST_VERIFY, capsys)
    _, out2, _ = _run_inproc(FAST_VERIFY, capsys)
    assert out1 == out2


def test_verify_injected_fault_exits_one(capsys):
    status, out, _ = _run_inproc(FAST_VERIFY + ["--inject-fault", "L1.I.i"], capsys)
    assert status == 1
    payload = json.loads(out)
    assert payload["totals"]["fail"] > 0
    assert payload["identities"]["L1.I.i"]["first_failure"] is not None


def test_verify_bad_class_exits_two(capsys):
    status, out, err = _run_inproc(
        ["verify", "--seed", "1", "--classes", "sideways", "--samples", "1"], capsys
    )
    assert status == 2
    assert out == ""
    assert "error" in err


def test_verify_bad_samples_exits_two(capsys):
    status, _, err = _run_inproc(["verify", "--seed", "1", "--samples", "0"], capsys)
    assert status == 2
    assert "samples" in err


def test_missing_seed_is_config_error():
    # argparse handles required flags; exit code must be 2
    proc = subprocess.run(
        [sys.executable, "-m", "weakcomm", "verify", "--samples", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_bad_dims_rejected():
    proc = subprocess.run(
        [sys.executable, "-m", "weakcomm", "verify", "--seed", "1", "--dims", "1,9"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_example_pair_payload(capsys):
    status, out, _ = _run_inproc(["example", "SEX_V_PQ"], capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["command"] == "example"
    assert payload["all_ok"] is True
    assert payload["kind"] == "pair"
    assert payload["relation"]["comm_w"] is True
    assert payload["relation"]["comm"] is False
    assert all(c["ok"] for c in payload["checks"])


def test_example_spec_payload(capsys):
    status, out, _ = _run_inproc(["example", "EXNILP_Q"], capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["kind"] == "op_spec"
    assert "weights_odd" in payload["spec"]


def test_example_bad_dim_exits_two(capsys):
    status, _, err = _run_inproc(["example", "SEX_I_PQ", "--dim", "5"], capsys)
    assert status == 2
    assert "error" in err


def test_search_found_exits_zero(capsys):
    status, out, _ = _run_inproc(
        ["search", "--predicate", "not_c3", "--dim", "2", "--budget", "10000", "--seed", "1"],
        capsys,
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["found"] is True
    assert payload["witness"]["samples_tried"] >= 1
    assert payload["relation"]["c3_pair"] is False


def test_search_empty_exits_one(capsys):
    status, out, _ = _run_inproc(
        ["search", "--predicate", "comm_not_comm", "--dim", "2", "--budget", "20", "--seed", "1"],
        capsys,
    )
    assert status == 1
    payload = json.loads(out)
    assert payload["found"] is False
    assert payload["witness"] is None


def test_search_bad_dim_exits_two(capsys):
    status, _, _ = _run_inproc(
        ["search", "--predicate", "not_c1", "--dim", "11", "--budget", "5", "--seed", "1"],
        capsys,
    )
    assert status == 2


def test_truncate_payload(capsys):
    status, out, _ = _run_inproc(["truncate", "EXNILP_T", "--sizes", "4,6"], capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["command"] == "truncate"
    assert [r["n"] for r in payload["rows"]] == [4, 6]
    assert payload["rows"][0]["charpoly"] == "x^4"
    assert payload["rows"][0]["nilpotency_degree"] == 4
    assert payload["rows"][0]["certified_kernel_dim"] == 0


def test_truncate_bad_sizes():
    proc = subprocess.run(
        [sys.executable, "-m", "weakcomm", "truncate", "EXNILP_T", "--sizes", "6,4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_markdown_rendering(capsys):
    status, out, _ = _run_inproc(FAST_VERIFY + ["--format", "markdown"], capsys)
    assert status == 0
    assert out.startswith("# weakcomm verify report")
    assert "| identity |" in out
    status2, out2, _ = _run_inproc(
        ["example", "SEX_I_PQ", "--format", "markdown"], capsys
    )
    assert status2 == 0
    assert "| flag | value |" in out2
    status3, out3, _ = _run_inproc(
        ["truncate", "EXNILP_N", "--sizes", "4,6", "--format", "markdown"], capsys
    )
    assert status3 == 0
    assert "| n | charpoly |" in out3


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    status, out, _ = _run_inproc(["example", "REMARK_TN", "--out", str(target)], capsys)
    assert status == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["id"] == "REMARK_TN"


def test_version_mentions_backend():
    proc = subprocess.run(
        [sys.executable, "-m", "weakcomm", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "weakcomm" in proc.stdout
    assert ("compiled" in proc.stdout) or ("pure" in proc.stdout)


def test_cross_process_byte_determinism(tmp_path):
    outs = []
    for name in ("r1.json", "r2.json"):
        target = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "weakcomm"]
            + FAST_VERIFY
            + ["--out", str(target)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
