"""Command-line interface, exercised end to end through subprocesses."""

import json
import subprocess

import pytest

from family import LD_PB2, ZERO_IDEALS
from twoexact.formats import serialize, two_ideal_to_document


def run(*argv, cwd=None):
    return subprocess.run(["twoexact", *argv], capture_output=True,
                          text=True, cwd=cwd)


def last_json(proc):
    return json.loads(proc.stdout.strip().splitlines()[-1])


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    """Generate the working documents once through the CLI itself."""
    d = tmp_path_factory.mktemp("cli")
    paths = {
        "pb2": d / "pb2.2cat.json",
        "ps2": d / "ps2.2cat.json",
        "ct22": d / "ct22.2cat.json",
        "ch_pb1": d / "ch_pb1.2cat.json",
        "pb1": d / "pb1.2cat.json",
        "pb2_1cat": d / "pb2.1cat.json",
        "ps2_1cat": d / "ps2.1cat.json",
    }
    specs = {
        "pb2": ["locally-discrete", "partial-bijections", "2"],
        "ps2": ["locally-discrete", "pointed-sets", "2"],
        "ct22": ["locally-discrete", "cyclic-tower", "2", "2"],
        "ch_pb1": ["chaotic", "partial-bijections", "1"],
        "pb1": ["locally-discrete", "partial-bijections", "1"],
        "pb2_1cat": ["partial-bijections", "2"],
        "ps2_1cat": ["pointed-sets", "2"],
    }
    for name, spec in specs.items():
        proc = run("gen", *spec, "--out", str(paths[name]))
        assert proc.returncode == 0, proc.stderr
    paths["dir"] = d
    return paths


def test_generated_documents_validate(files):
    for name in ("pb2", "ps2", "ct22", "ch_pb1", "pb2_1cat"):
        proc = run("validate", str(files[name]))
        assert proc.returncode == 0, proc.stderr
        assert all(json.loads(line) for line in proc.stdout.splitlines())


def test_check_exact_puppe_passes_on_partial_bijections(files):
    proc = run("check-exact", "--mode", "puppe", str(files["pb2"]))
    assert proc.returncode == 0, proc.stdout
    assert last_json(proc) == {"mode": "puppe", "status": "pass"}


def test_check_exact_puppe_fails_on_pointed_sets(files):
    proc = run("check-exact", "--mode", "puppe", str(files["ps2"]))
    assert proc.returncode == 1
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert lines[-1] == {"mode": "puppe", "status": "fail"}
    failing = [ln for ln in lines if ln.get("status") == "fail"
               and ln.get("check") == "factorization"]
    assert failing, lines
    assert failing[0]["counterexample"] == {
        "cells": {"one_cell": "m13_2to1_11"},
        "clause": "no-cokernel-kernel-factorization"}


@pytest.mark.parametrize("mode", ["grandis", "weak-grandis", "weak-puppe"])
def test_other_exactness_modes_run(files, mode):
    assert run("check-exact", "--mode", mode, str(files["pb2"])).returncode == 0
    assert run("check-exact", "--mode", mode, str(files["ps2"])).returncode == 1


def test_output_is_byte_identical_across_runs(files):
    a = run("check-exact", "--mode", "grandis", str(files["pb2"]))
    b = run("check-exact", "--mode", "grandis", str(files["pb2"]))
    assert a.stdout == b.stdout and a.stdout
    c = run("gen", "locally-discrete", "cyclic-tower", "2", "2")
    d = run("gen", "locally-discrete", "cyclic-tower", "2", "2")
    assert c.stdout == d.stdout and c.stdout


def test_validate_reports_dangling_references(files, tmp_path):
    body = json.loads(files["pb2"].read_text())
    body["comp1"][0]["gf"] = "m99_missing"
    broken = tmp_path / "broken.2cat.json"
    broken.write_text(json.dumps(body))
    proc = run("validate", str(broken))
    assert proc.returncode == 2
    assert "error: dangling references" in proc.stderr
    assert "m99_missing" in proc.stderr


def test_unreadable_file_is_an_input_error():
    proc = run("validate", "/nonexistent/nowhere.json")
    assert proc.returncode == 2
    assert proc.stderr.startswith("error: cannot read")


def test_unknown_flag_exits_with_usage_error(files):
    proc = run("validate", "--frobnicate", str(files["pb2"]))
    assert proc.returncode == 2
    assert "usage" in proc.stderr


def test_unknown_generator_is_an_input_error():
    proc = run("gen", "octonion-tower", "3")
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_mutants_fail_validation(files, tmp_path):
    mut = tmp_path / "mut.2cat.json"
    proc = run("mutate", str(files["pb2"]), "retarget-vcomp", "--seed", "1",
               "--out", str(mut))
    assert proc.returncode == 0, proc.stderr
    proc = run("validate", str(mut))
    assert proc.returncode == 1
    verdicts = [json.loads(line) for line in proc.stdout.splitlines()]
    assert any(v.get("status") == "fail" for v in verdicts)


def test_mutate_is_deterministic(files):
    a = run("mutate", str(files["pb2"]), "retarget-vcomp", "--seed", "7")
    b = run("mutate", str(files["pb2"]), "retarget-vcomp", "--seed", "7")
    c = run("mutate", str(files["pb2"]), "retarget-vcomp", "--seed", "8")
    assert a.stdout == b.stdout and a.stdout
    assert a.stdout != c.stdout


def test_kernel_and_cokernel_queries(files):
    proc = run("kernel", str(files["pb2"]), "m05_1to1_11")
    assert proc.returncode == 0
    out = last_json(proc)
    assert out["arrow"] == "m05_1to1_11"
    assert set(out["kernels"][0]) == {
        "apex", "arrow", "leg", "null_cell", "structure"}
    proc = run("cokernel", str(files["pb2"]), "m05_1to1_11")
    assert proc.returncode == 0
    assert last_json(proc)["cokernels"]


def test_biisoinserter_query(files):
    proc = run("biisoinserter", str(files["pb1"]), "m4_1to1_11",
               "m3_1to1_e")
    assert proc.returncode == 0
    assert last_json(proc)["inserters"]


def test_three_pieces_query(files):
    proc = run("three-pieces", str(files["ct22"]), "m10_2to1x1")
    assert proc.returncode == 0
    out = last_json(proc)
    assert {"arrow", "first", "middle", "last", "connecting"} <= set(out)
    assert out["arrow"] == "m10_2to1x1"


def test_check_ideal_and_check_closed(files):
    assert run("check-ideal", str(files["pb2"])).returncode == 0
    proc = run("check-closed", str(files["pb2"]))
    assert proc.returncode == 0
    assert last_json(proc)["status"] == "pass"


def test_oracle_1cat_agrees_with_the_two_dimensional_verdict(files):
    assert run("oracle-1cat", str(files["pb2_1cat"])).returncode == 0
    proc = run("oracle-1cat", str(files["ps2_1cat"]))
    assert proc.returncode == 1
    assert last_json(proc)["status"] == "fail"
    assert run("oracle-1cat", "--mode", "puppe",
               str(files["pb2_1cat"])).returncode == 0


def test_factorization_pipeline_round_trips(files):
    d = files["dir"]
    bundle = d / "bundle.json"
    proc = run("fs-from-ideal", str(files["pb2"]), "--out", str(bundle))
    assert proc.returncode == 0, proc.stderr
    assert run("validate", str(bundle)).returncode == 0

    proc = run("check-fs", str(bundle))
    assert proc.returncode == 0
    assert last_json(proc)["status"] == "pass"

    recovered = d / "ideal2.json"
    proc = run("ideal-from-fs", str(bundle), "--out", str(recovered))
    assert proc.returncode == 0, proc.stderr

    canonical = d / "ideal1.json"
    canonical.write_text(serialize(
        two_ideal_to_document(LD_PB2, ZERO_IDEALS["ld_pb2"])))
    proc = run("equiv-ideals", str(canonical), str(recovered))
    assert proc.returncode == 0
    assert last_json(proc)["status"] == "pass"


def test_fibration_and_rofs_checks(files):
    bundle = files["dir"] / "bundle.json"
    if not bundle.exists():
        run("fs-from-ideal", str(files["pb2"]), "--out", str(bundle))
    for direction in ("dom", "cod"):
        proc = run("check-fibration", str(files["pb2"]), "--fs", str(bundle),
                   "--direction", direction)
        assert proc.returncode == 0, proc.stdout
    proc = run("check-rofs", str(files["pb2"]), "--fs", str(bundle))
    assert proc.returncode == 0, proc.stdout


def test_small_cap_is_reported_as_inconclusive(files):
    proc = run("kernel", str(files["pb2"]), "m05_1to1_11", "--cap", "2")
    assert proc.returncode == 3
    out = last_json(proc)
    assert out["status"] == "inconclusive"
    assert "cap 2 exceeded" in out["detail"]


def test_header_line_names_command_cap_and_inputs(files):
    proc = run("check-closed", str(files["pb2"]), "--cap", "100000")
    first = json.loads(proc.stdout.splitlines()[0])
    assert first == {"command": "check-closed", "cap": 100000,
                     "inputs": [str(files["pb2"])]}
