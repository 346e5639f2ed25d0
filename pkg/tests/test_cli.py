import json
import os
import subprocess
import sys

import jsonschema
import pytest

from potalg.cli import SCHEMAS, load_schema, main

JSON_CASES = {
    "derive": ["--potential", "cyc(x^2*y^2)"],
    "gb": ["--potential", "cyc(x^2*y^2)", "--bound", "8"],
    "hilbert": ["--potential", "cyc(x^2*y^2)", "--depth", "8", "--rational"],
    "dim": ["--relations", "x*y + y*x + y^2; x*y + y*x + x^2 + y^3"],
    "truncdim": ["--potential", "x^3", "--degree", "5"],
    "complete-dim": ["--potential", "cyc(x^2*y) + y^3 + y^4", "--max-n", "10", "--window", "3"],
    "gs": ["--relations", "4:1,5:1", "--depth", "30", "--eval", "654/1000"],
    "complex": ["--potential", "cyc(x^2*y^2)", "--max-k", "2"],
    "classify3": ["--potential", "x^3 + y^3"],
    "abelian": ["--potential", "cyc(x^2*y) + cyc(x*y^2) + y^4"],
    "gap": ["--coeffs", "0,1"],
    "corpus": ["--count", "3"],
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_every_verb_has_a_case():
    assert set(JSON_CASES) == set(SCHEMAS)


@pytest.mark.parametrize("verb", sorted(JSON_CASES))
def test_json_output_matches_schema(verb, capsys):
    code, out, _ = run([verb, *JSON_CASES[verb], "--format", "json"], capsys)
    assert code == 0
    jsonschema.validate(json.loads(out), load_schema(verb))


@pytest.mark.parametrize("verb", sorted(JSON_CASES))
def test_text_output(verb, capsys):
    code, out, _ = run([verb, *JSON_CASES[verb]], capsys)
    assert code == 0 and out.strip()


def test_hilbert_text(capsys):
    _, out, _ = run(["hilbert", "--potential", "cyc(x^2*y^2)", "--depth", "8"], capsys)
    assert "1, 2, 4, 6, 9, 12, 16, 20, 25" in out


def test_truncdim_verdict(capsys):
    _, out, _ = run(["complete-dim", "--potential", "cyc(x^2*y) + y^3 + y^4"], capsys)
    assert "Stabilized(8)" in out


def test_gap_json_values(capsys):
    _, out, _ = run(["gap", "--coeffs", "0,1", "--format", "json"], capsys)
    d = json.loads(out)
    assert (d["dim_a"], d["dim_b"], d["gap"]) == (9, 5, 4)


@pytest.mark.parametrize(
    "argv, code",
    [
        (["derive", "--potential", "x*y +"], 2),
        (["derive", "--potential", "x^2*y"], 1),
        (["gb", "--potential", "x^3", "--field", "GF(4)"], 2),
        (["classify3", "--potential", "x^4"], 1),
        (["gap", "--coeffs", "0,0"], 1),
        (["gs", "--relations", "4"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    got, out, err = run(argv, capsys)
    assert got == code and err.startswith("error:") and not out


def test_field_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("POTALG_FIELD", "GF(7)")
    _, out, _ = run(["derive", "--potential", "1/2*x^3", "--format", "json"], capsys)
    monkeypatch.delenv("POTALG_FIELD")
    _, out_qq, _ = run(["derive", "--potential", "1/2*x^3", "--format", "json"], capsys)
    assert out != out_qq


def test_subprocess_output_is_byte_identical():
    argv = [sys.executable, "-m", "potalg", "corpus", "--count", "5", "--format", "json"]
    env = {k: v for k, v in os.environ.items() if k != "POTALG_FIELD"}
    runs = [subprocess.run(argv, capture_output=True, check=True, env=env).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
    argv = [sys.executable, "-m", "potalg", "gb", "--potential", "cyc(x^3*y^2)", "--bound", "10"]
    runs = [subprocess.run(argv, capture_output=True, check=True, env=env).stdout for _ in range(2)]
    assert runs[0] == runs[1]
