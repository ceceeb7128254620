from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from braid3.cli import CliConfig, main, run

SMALL = [
    "--max-letters", "6", "--max-letters-positive", "8", "--n-max", "5", "--p-max", "2",
    "--max-letters-random", "6", "--samples", "20",
]


def call(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_torus(capsys):
    code, out, _ = call(["invariants", "a1 a2 a1 a2 a1 a2 a1 a2"], capsys)
    assert code == 0
    assert "casson: 5" in out
    assert "surgery casson n*C: -5: -25" in out


def test_invariants_unknot(capsys):
    code, out, _ = call(["invariants", "a1 a2"], capsys)
    assert code == 0
    assert "unknot-like: Δ = 1, Casson 0" in out


def test_invariants_json_keys(capsys):
    code, out, _ = call(["invariants", "a1 a2^-1 a1 a2^-1", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert {"word", "delta", "nabla", "casson", "genus", "components", "classes"} <= set(rep)
    assert rep["delta"] == "-t^-1 + 3 - t" and rep["casson"] == -1


def test_invariants_csv_for_link(capsys):
    code, out, _ = call(["invariants", "a1^2 a2", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "word,components,delta,nabla,casson,genus"


@pytest.mark.parametrize("argv", [["invariants", "a1 a4"], ["invariants", "a1^0"], ["enumerate", "--max-len", "-1"]])
def test_bad_input_exits_2(argv, capsys):
    code, out, err = call(argv, capsys)
    assert code == 2
    assert out == "" and "error" in err


def test_unknown_flag_exits_2(capsys):
    code, _, _ = call(["enumerate", "--class", "Q"], capsys)
    assert code == 2


def test_env_override(monkeypatch, capsys):
    monkeypatch.setenv("BRAID3_MAX_LETTERS", "2")
    code, out, _ = call(["enumerate", "--class", "P"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 1 + 9
    monkeypatch.setenv("BRAID3_MAX_LETTERS", "two")
    code, _, err = call(["enumerate", "--class", "P"], capsys)
    assert code == 2 and "BRAID3_MAX_LETTERS" in err


def test_enumerate_check_passes(capsys):
    code, out, err = call(["enumerate", "--class", "Pa4", "--max-len", "7", "--check", "lk-nonpositive"], capsys)
    assert code == 0
    assert "0 failed" in err
    assert all(line.endswith("True") for line in out.splitlines()[1:])


def test_enumerate_check_forced_failure(capsys):
    # the figure-eight word is among all words of 4 letters and has Casson -1
    code, out, _ = call(["enumerate", "--class", "all", "--max-len", "4", "--check", "casson-positive",
                         "--format", "json"], capsys)
    assert code == 1
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"word": "a1 a2^-1 a1 a2^-1", "letters": 4, "components": 1, "value": -1, "ok": False} in rows


def test_skein_check_deterministic(capsys):
    argv = ["skein-check", "--samples", "30", "--seed", "11", "--format", "json"]
    code1, out1, _ = call(argv, capsys)
    code2, out2, _ = call(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["instances_checked"] == 30


def test_verify_paper_reports_strict_lk_failure(capsys):
    code, out, err = call(["verify-paper", *SMALL, "--format", "json"], capsys)
    results = [json.loads(line) for line in out.splitlines()]
    failing = [r["claim_id"] for r in results if not r["passed"]]
    assert failing == ["lk-pa-strict"]
    assert code == 1
    assert "FAIL lk-pa-strict:" in err
    assert all("elapsed" not in r for r in results)
    code2, out2, _ = call(["verify-paper", *SMALL, "--format", "json"], capsys)
    assert out2 == out


def test_verify_paper_text_and_timings(capsys):
    code, out, _ = call(["verify-paper", *SMALL, "--format", "text"], capsys)
    assert code == 1
    assert out.count("PASS") == 11 and out.count("FAIL") == 1
    code, out, _ = call(["verify-paper", *SMALL, "--format", "json", "--timings"], capsys)
    assert all("elapsed" in json.loads(line) for line in out.splitlines())


def test_excluded_set(capsys):
    code, out, _ = call(["excluded-set"], capsys)
    assert code == 0
    assert json.loads(out)["count"] == 12


def test_run_validates_config():
    err = io.StringIO()
    assert run(CliConfig("invariants"), io.StringIO(), err) == 2
    assert "needs a word" in err.getvalue()
    assert run(CliConfig("skein-check", samples=0), io.StringIO(), io.StringIO()) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braid3", "invariants", "a1 a2 a1 a2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "casson: 1" in proc.stdout
