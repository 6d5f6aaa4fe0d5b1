"""Tests for the command-line layer: report shape, exit codes, guards,
determinism, and the file round-trips."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from apolarium.cli import run

REPORT_KEYS = {"command", "inputs", "outputs", "provenance", "seed"}


def report(capsys, argv, expect=0):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == expect, out
    doc = json.loads(out)
    assert set(doc) == REPORT_KEYS
    assert isinstance(doc["provenance"], list) and doc["provenance"]
    return doc


# -- polynomial commands ---------------------------------------------------------


def test_apolar_dim(capsys):
    doc = report(capsys, ["apolar-dim",
                          "x1*x2*x3*x4*x5*x6*x7*x8*x9"])
    assert doc["outputs"]["dim"] == 512
    assert doc["seed"] == 0


def test_hilbert(capsys):
    doc = report(capsys, ["hilbert", "(x1^2 + x2)^2"])
    assert doc["outputs"]["hilbert_function"] == [1, 2, 1, 1, 1]
    assert doc["outputs"]["dim"] == 6


def test_annihilator(capsys):
    doc = report(capsys, ["annihilator", "x1*x2", "--degree", "2"])
    assert doc["outputs"]["generators"] == ["x1^2", "x2^2"]


def test_cat_rank_single_and_max(capsys):
    doc = report(capsys, ["cat-rank", "--k", "3", "(x0^3 + x1^3)^2"])
    assert doc["outputs"]["rank"] == 4
    doc = report(capsys, ["cat-rank", "--max", "(x0^3 + x1^3)^2"])
    assert doc["outputs"] == {"at_k": 3, "border_rank_lower_bound": 4,
                              "max_rank": 4}


def test_cat_rank_needs_k_or_max(capsys):
    assert run(["cat-rank", "x1^2"]) == 2


def test_twist(capsys):
    doc = report(capsys, ["twist", "x0^2*x1 + x0*x2^2", "--var", "x0"])
    assert doc["outputs"]["twisted"] == "1/2*x0^2*x1 + x0*x2^2"


def test_encompass_check(capsys):
    doc = report(capsys, ["encompass-check", "x1^2 + x2^2"])
    assert doc["outputs"] == {"almost_encompassing": True,
                              "encompassing": False,
                              "gradient_generic_rank": 2,
                              "partials_dim": 4}


def test_growth(capsys):
    doc = report(capsys, ["growth", "--dmax", "3", "x1^2 + x2"])
    assert doc["outputs"]["dims"] == [3, 6, 10]
    assert doc["outputs"]["maximal_throughout"] is True


def test_extend(capsys):
    doc = report(capsys, ["extend", "x1^3 + x2^3"])
    assert doc["outputs"]["g"] == "y3 + x1*y1 + x2*y2 + x1^3 + x2^3"
    assert doc["outputs"]["G"] == ("x0^2*y3 + x0*x1*y1 + x0*x2*y2 "
                                   "+ x1^3 + x2^3")
    assert doc["outputs"]["encompassing"] is True


def test_extend_with_sigma_override(capsys):
    doc = report(capsys, ["extend", "x1^3 + x2^3",
                          "--sigma", "x1^2 + x2^2",
                          "--sigma", "x1*x2 + x2^2",
                          "--sigma", "x1^3"])
    assert doc["outputs"]["encompassing"] is True
    assert doc["outputs"]["sigmas"] == [
        "1/6*x1^2 + 1/6*x2^2", "1/6*x1*x2 + 1/6*x2^2", "1/6*x1^3"]


# -- verification commands and their exit codes ---------------------------------------


def test_verify_taut_passes(capsys):
    doc = report(capsys, ["verify-taut", "x0*x1^2 + x0^2*x2"])
    assert doc["outputs"]["all_pass"] is True


def test_verify_taut_untwisted_control_exits_one(capsys):
    doc = report(capsys, ["verify-taut", "--untwisted",
                          "x0*x1^2 + x0^2*x2"], expect=1)
    assert doc["outputs"]["all_pass"] is False
    assert doc["outputs"]["kills"][0] is False


def test_verify_main_thm_passes(capsys):
    doc = report(capsys, ["verify-main-thm", "--d", "2", "x0*x1*x2"])
    assert doc["outputs"]["rank"] == doc["outputs"]["expected"] == 6
    assert doc["outputs"]["equal"] is True
    assert doc["outputs"]["out_of_scope"]


def test_verify_main_thm_failure_exits_one(capsys):
    # a non-concise form misses the saturated value
    doc = report(capsys, ["verify-main-thm", "--d", "2",
                          "x0^2 + x1^2 + 0*x2"], expect=1)
    assert doc["outputs"]["rank"] == 3
    assert doc["outputs"]["expected"] == 6
    assert doc["outputs"]["assumptions"]["concise"] is False


# -- tensors ---------------------------------------------------------------------


def test_tensor_make_cw(capsys):
    doc = report(capsys, ["tensor", "make", "cw", "--n", "4"])
    assert doc["outputs"]["dims"] == [4, 4, 4]
    assert doc["outputs"]["nnz"] == 9


def test_tensor_make_group(capsys):
    doc = report(capsys, ["tensor", "make", "group", "--orders", "2x2"])
    assert doc["outputs"]["dims"] == [4, 4, 4]
    assert doc["outputs"]["nnz"] == 16


def test_tensor_make_algebra(capsys):
    doc = report(capsys, ["tensor", "make", "algebra", "--form",
                          "x1^2 + x2^2"])
    assert doc["outputs"]["basis"] == ["1", "x1", "x2", "x1^2"]
    assert doc["outputs"]["nnz"] == 9


def test_tensor_make_onegen(capsys):
    doc = report(capsys, ["tensor", "make", "onegen", "--tensor", "cw:3",
                          "--k", "1"])
    assert doc["outputs"]["dims"] == [4, 4, 4]
    assert doc["outputs"]["nnz"] == 10


def test_tensor_kron(capsys):
    doc = report(capsys, ["tensor", "kron", "--tensor", "tb",
                          "--power", "2"])
    assert doc["outputs"]["dims"] == [4, 4, 4]
    assert doc["outputs"]["nnz"] == 9


def test_tensor_file_round_trip(tmp_path, capsys):
    out = tmp_path / "t.json"
    report(capsys, ["tensor", "make", "cw", "--n", "3",
                    "--out", str(out)])
    doc = report(capsys, ["sweet", "tight", "--tensor", f"@{out}",
                          "--blocking", "cw"])
    assert doc["outputs"]["tight"] is True


# -- sweet commands -----------------------------------------------------------------


def test_sweet_support(capsys):
    doc = report(capsys, ["sweet", "support", "--tensor", "cw:4",
                          "--blocking", "cw"])
    assert doc["outputs"]["count"] == 6
    fmts = [b["format"] for b in doc["outputs"]["blocks"]
            if b["format"] != [1, 1, 1]]
    assert fmts == [[1, 2, 2], [2, 1, 2], [2, 2, 1]]


def test_sweet_tight_group_is_false(capsys):
    doc = report(capsys, ["sweet", "tight", "--tensor", "group:3",
                          "--blocking", "cw"])
    assert doc["outputs"]["tight"] is False


def test_sweet_extract(capsys):
    doc = report(capsys, ["sweet", "extract", "--tensor", "tb",
                          "--blocking", "weights:0,1", "--dist", "uniform",
                          "--power", "3"])
    assert doc["outputs"]["dims"] == [3, 3, 3]
    assert doc["outputs"]["nnz"] == 6
    assert doc["outputs"]["p_T"] == 3
    assert doc["outputs"]["validation"]["marginals_uniform"] is True


def test_sweet_extract_nontight_needs_flag(capsys):
    argv = ["sweet", "extract", "--tensor", "group:3", "--blocking", "cw",
            "--dist", "large", "--power", "3"]
    assert run(argv) == 2
    capsys.readouterr()
    doc = report(capsys, argv + ["--allow-nontight"])
    assert doc["inputs"]["tightness_check_skipped"] is True
    assert doc["outputs"]["dims"] == [3, 3, 3]


def test_sweet_chimney(capsys):
    doc = report(capsys, ["sweet", "chimney", "--tensor", "cw:3",
                          "--blocking", "cw", "--dist", "large",
                          "--power", "3"])
    assert doc["outputs"]["dims"] == [3, 3, 27]
    assert doc["outputs"]["zero_layers"] == 21
    assert doc["outputs"]["free_axis"] == 3  # 1-based in reports


def test_sweet_degenerate(capsys):
    doc = report(capsys, ["sweet", "degenerate", "--tensor", "group:3",
                          "--blocking", "cw", "--weights", "cwdeg"])
    assert doc["outputs"]["nnz"] == 6
    assert doc["outputs"]["tight_after"] is True


def test_sweet_zero_layers(capsys):
    doc = report(capsys, ["sweet", "zero-layers", "--tensor", "cw:4",
                          "--axis", "3"])
    assert doc["outputs"]["zero_layers"] == 0


def test_sweet_bound_requires_family(capsys):
    assert run(["sweet", "bound", "--ambient-dim", "8",
                "--zero-layers", "4"]) == 2
    capsys.readouterr()
    doc = report(capsys, ["sweet", "bound", "--ambient-dim", "8",
                          "--zero-layers", "4", "--family", "binary-power"])
    assert doc["outputs"]["rank_bound"] == 4
    doc = report(capsys, ["sweet", "bound", "--ambient-dim", "8",
                          "--zero-layers", "4", "--assert-minimal-rank"])
    assert doc["inputs"]["minimal_rank_asserted_by_caller"] is True


def test_sweet_pratt(capsys):
    doc = report(capsys, ["sweet", "pratt", "--k", "2"])
    assert doc["outputs"]["bound"] == 31
    assert doc["outputs"]["even_symdiff_count"] == 31
    assert doc["outputs"]["agree"] is True


def test_sweet_omega(capsys):
    doc = report(capsys, ["sweet", "omega", "--a", "2", "--r", "8",
                          "--p", "1"])
    assert doc["outputs"]["omega_bound"] == 3.0


def test_sweet_veronese(capsys):
    doc = report(capsys, ["sweet", "veronese", "--dims",
                          "1,9,36,84,126,126,84,36,9,1", "--k", "3"])
    assert doc["outputs"]["veronese_dims"] == [1, 84, 84, 1]


# -- the reference suite ----------------------------------------------------------


def test_paper_suite_filtered(capsys):
    doc = report(capsys, ["paper-suite", "--only", "cw-support-size"])
    assert doc["outputs"]["summary"]["failed"] == 0
    assert doc["outputs"]["summary"]["total"] == 1
    assert doc["provenance"] == ["*"]


def test_paper_suite_unknown_id(capsys):
    assert run(["paper-suite", "--only", "not-a-real-entry"]) == 2


# -- exit codes, guards, determinism --------------------------------------------------


def test_parse_error_exits_two(capsys):
    assert run(["apolar-dim", "x1 +"]) == 2
    assert run(["twist", "x1^2 + x2", "--var", "zz"]) == 2
    assert run(["tensor", "make", "cw"]) == 2  # missing --n


def test_unknown_tensor_spec_exits_two(capsys):
    assert run(["sweet", "tight", "--tensor", "wat:9",
                "--blocking", "cw"]) == 2


def test_entry_guard_exits_three(capsys):
    code = run(["tensor", "kron", "--tensor", "cw:4", "--power", "9",
                "--max-entries", "1000"])
    assert code == 3
    err = capsys.readouterr().err
    assert "exceeds" in err


def test_degree_guard_exits_three(capsys):
    assert run(["apolar-dim", "(x1 + x2)^40", "--max-degree", "10"]) == 3


def test_entry_guard_env_var(capsys, monkeypatch):
    monkeypatch.setenv("APOLARIUM_MAX_ENTRIES", "100")
    assert run(["tensor", "kron", "--tensor", "cw:4", "--power", "9"]) == 3
    # the explicit flag wins over the environment
    monkeypatch.setenv("APOLARIUM_MAX_ENTRIES", "1")
    assert run(["tensor", "kron", "--tensor", "cw:3", "--power", "2",
                "--max-entries", "100000"]) == 0


def test_reports_are_deterministic(capsys):
    argv = ["sweet", "extract", "--tensor", "tb", "--blocking",
            "weights:0,1", "--dist", "uniform", "--power", "3"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_human_mode(capsys):
    assert run(["apolar-dim", "--human", "x1^2 + x2^2"]) == 0
    out = capsys.readouterr().out
    assert "dim" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_seed_recorded(capsys):
    doc = report(capsys, ["encompass-check", "--seed", "7", "x1^2 + x2"])
    assert doc["seed"] == 7


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "apolarium", "sweet", "pratt", "--k", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["bound"] == 4
