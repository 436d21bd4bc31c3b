import json
import subprocess
import sys

import pytest

from mohlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_factor(capsys):
    code, data = run_json(capsys, "factor", "--gens", "3,4,5", "--value", "12")
    assert code == 0 and data["factorizations"] == [[0, 3, 0], [1, 1, 1], [4, 0, 0]]


def test_wbasis(capsys):
    code, out, _ = run(capsys, "wbasis", "--value", "12")
    assert out.strip() == "W_12: y^3, x*y*z, x^4"


def test_vr_and_lowerbound(capsys):
    code, data = run_json(capsys, "vr", "--char", "2", "--value", "10")
    assert data["upper_polys"] == ["z^2 + x^2*y"] and data["dim_certified"] == 1
    code, data = run_json(capsys, "lowerbound", "--char", "3")
    assert (data["s"], data["bound"]) == (9, 1)


def test_tail(capsys):
    code, data = run_json(capsys, "tail", "--poly", "3y^3-4xyz+x^4", "--max-sord", "40")
    assert code == 0 and data["tail"]
    code, _, _ = run(capsys, "tail", "--poly", "x", "--max-sord", "60")
    assert code == 1


def test_eval(capsys):
    code, data = run_json(capsys, "eval", "--poly", "3y^3-4xyz+x^4")
    assert data["image"] == "6*t^74 + 4*t^99 + t^124" and data["ord_t"] == 74
    code, data = run_json(capsys, "eval", "--char", "3", "--poly", "h1")
    assert data["image"] == "0"


def test_nf_against_fixture_names(capsys):
    _, s, _ = run(capsys, "spoly", "--char", "0", "--against", "f1,f2")
    code, data = run_json(capsys, "nf", "--char", "0", "--poly", s.strip(), "--against", "f1,f2,f3,f4")
    assert code == 0
    assert data["remainder"] == "0" and data["identity_ok"]
    assert data["steps"] and data["quotients"]


def test_nf_char2_transcript(capsys):
    _, s, _ = run(capsys, "spoly", "--char", "2", "--poly", "g1", "--against", "g2")
    code, data = run_json(capsys, "nf", "--char", "2", "--poly", s.strip(), "--against", "g1,g2")
    assert data["u"] == "1 + y^5*z + x^2*y*z^3"


def test_std_and_stdcheck(capsys):
    code, data = run_json(capsys, "std", "--char", "0")
    assert data["leading_ideal"] == ["y^3", "y^2*z", "y*z^2", "z^3"] and data["added"] == 0
    code, data = run_json(capsys, "stdcheck", "--char", "3")
    assert code == 0 and data["standard_basis"]
    assert len(data["pairs"]) == 3


def test_length(capsys):
    code, out, _ = run(capsys, "length", "--against", "x^4,x*z^2,x^3*z,z^3")
    assert out.strip() == "8"
    code, out, _ = run(capsys, "length", "--against", "z^2,x^4", "--vars", "x,z")
    assert out.strip() == "8"
    code, _, err = run(capsys, "length", "--against", "x*z")
    assert code == 2 and "pure power" in err


def test_verify_json(capsys):
    code, data = run_json(capsys, "verify", "--char", "2")
    assert code == 0
    assert data["result"]["mu"] == 2 and data["result"]["verdict"] == "pass"


def test_verify_all(capsys):
    code, data = run_json(capsys, "verify", "--all")
    assert code == 0
    assert [r["characteristic"] for r in data["results"]] == [0, 2, 3, 5, 7]
    assert [r["mu"] for r in data["results"]] == [4, 2, 3, 4, 4]


def test_sally(capsys):
    code, data = run_json(capsys, "sally", "--char", "2")
    assert code == 0 and "f1 = g2" in data["verified"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["factor", "--gens", "3,4,5"],
        ["verify", "--char", "4"],
        ["eval", "--poly", "x +"],
        ["spoly", "--against", "f1"],
        ["sally", "--char", "5"],
        ["verify", "--n", "5"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "mohlab.cli", "verify", "--all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
