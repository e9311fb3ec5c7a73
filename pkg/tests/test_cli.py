import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rrcsys.cli import run

SYSTEMS = Path(__file__).resolve().parent.parent / "demos" / "systems"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    text = out.getvalue()
    assert text.count("\n") == 1, "exactly one JSON document"
    return code, json.loads(text)


def test_verify_ramanujan():
    code, doc = call("verify", "ramanujan", "--order", "200")
    assert code == 0
    assert doc["ok"] is True and doc["residual_max_order"] == 200


def test_keys_are_sorted():
    out, err = io.StringIO(), io.StringIO()
    run(["verify", "ramanujan", "--order", "10"], out, err)
    doc = json.loads(out.getvalue())
    assert out.getvalue().strip() == json.dumps(doc, sort_keys=True)


@pytest.mark.parametrize("what", ["triangle", "inversion", "ohyama"])
def test_verify_triangle_bundles(what):
    code, doc = call("verify", what, "--n", "2", "--m", "5", "--k", "1", "--r", "2",
                     "--order", "15")
    assert code == 0 and doc["ok"]


def test_verify_d33():
    code, doc = call("verify", "d33", "--order", "20")
    assert code == 0 and doc["ok"] and doc["hat_system"]["ok"]


def test_solve_z_and_q():
    code, doc = call("solve", "--n", "2", "--m", "3", "--order", "5", "--coord", "z")
    assert code == 0 and doc["coordinate"] == "z" and doc["N"] == 1
    code, doc = call("solve", "--n", "2", "--m", "3", "--order", "5", "--coord", "q")
    assert doc["Q"]["terms"][:2] == [[0, "1"], [1, "5/36"]]


def test_bracket_expression():
    code, doc = call("bracket", "--f", "E4", "--g", "E6", "--n", "1", "--order", "6")
    assert code == 0 and doc["weight"] == "12"
    assert doc["series"]["terms"][0] == [1, "-3456"]
    code, doc = call("bracket", "--f", "(E4^3 - E6^2)/1728", "--g", "DELTA", "--n", "0",
                     "--order", "4")
    assert doc["series"]["terms"][0] == [2, "1"]


def test_bracket_with_sqrt_literal():
    code, doc = call("bracket", "--f", "sqrt(-3)*THETA3^4", "--g", "THETA2^4", "--n", "1",
                     "--order", "4")
    assert code == 0 and doc["weight"] == "6"


def test_dims_and_hypergeom():
    code, doc = call("dims", "--n", "2", "--m", "3", "--wmax", "24")
    assert [r["dim"] for r in doc["table"] if int(r["w"]) % 2 == 0][:7] == [1, 0, 1, 1, 1, 1, 2]
    code, doc = call("hypergeom", "--alpha", "1/12", "--beta", "5/12", "--order", "3")
    assert doc["nome"]["terms"][1] == [2, "31/72"]


def test_catalog():
    code, doc = call("catalog", "--name", "E4", "--order", "3")
    assert doc["series"]["terms"] == [[0, "1"], [1, "240"], [2, "2160"]]


def test_sl2check_files():
    code, doc = call("sl2check", "--file", str(SYSTEMS / "classical.txt"))
    assert code == 0 and doc["ok"]
    code, doc = call("sl2check", "--file", str(SYSTEMS / "level_two.txt"))
    assert code == 0 and doc["ok"]
    code, doc = call("sl2check", "--file", str(SYSTEMS / "broken.txt"))
    assert code == 1 and not doc["ok"] and doc["shape"]["generator"] == "Q"


@pytest.mark.parametrize("argv", [
    ["solve", "--n", "3", "--m", "2"],
    ["solve", "--n", "2", "--m", "4", "--r", "2"],
    ["solve", "--n", "2", "--m", "5", "--r", "2", "--coord", "q"],
    ["dims", "--n", "2", "--m", "3", "--wmax", "1/0"],
    ["dims", "--n", "2", "--m", "3", "--wmax", "x"],
    ["bracket", "--f", "E4 + E6", "--g", "E4", "--n", "1"],
    ["bracket", "--f", "E8", "--g", "E4", "--n", "1"],
    ["bracket", "--f", "__import__('os')", "--g", "E4", "--n", "1"],
    ["hypergeom", "--alpha", "1", "--beta", "1", "--gamma", "-2"],
    ["catalog", "--name", "nope"],
    ["sl2check", "--file", "/nonexistent/system.txt"],
    ["verify", "triangle"],
    ["frobnicate"],
    [],
])
def test_invalid_input_exits_2(argv):
    code, doc = call(*argv)
    assert code == 2
    assert set(doc) == {"error", "type"}


def test_sl2check_bigraded_file():
    code, doc = call("sl2check", "--file", str(SYSTEMS / "pentagonal_bigraded.txt"))
    assert code == 0 and doc["ok"] and doc["bigraded"]["generators"]["B"]["ok"]


def test_sl2check_bigraded_perturbed(tmp_path):
    text = (SYSTEMS / "pentagonal_bigraded.txt").read_text()
    bad = tmp_path / "bad.txt"
    bad.write_text(text.replace("= (P1 - 3*P2*B^2*Q2)*B", "= (P1 - 3*P2*B^2*Q2)*B + Q2"))
    code, doc = call("sl2check", "--file", str(bad))
    assert code == 1 and doc["bigraded"]["generators"]["B"]["offending"] == ["Q2"]


def test_sl2check_unparseable(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("P 2 = P^2\n")
    code, doc = call("sl2check", "--file", str(bad))
    assert code == 2


def test_console_script_exit_code():
    proc = subprocess.run([sys.executable, "-m", "rrcsys.cli", "verify", "ramanujan",
                           "--order", "20"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"nonzero": [], "ok": True, "residual_max_order": 20}
