import json
import subprocess
import sys

import pytest

from seminormal.cli import main, parse_shape, ShapeError
from seminormal.tableaux import DLabel, Shape


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "seminormal", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args)
    assert code == 0, err
    return json.loads(out)


# -- shape grammar ------------------------------------------------------------------

def test_parse_shapes():
    assert parse_shape("A", "3,2") == Shape((3, 2))
    assert parse_shape("B", "(2,1)|(1)") == Shape((2, 1), (1,))
    assert parse_shape("B", "()|(1)") == Shape((), (1,))
    assert parse_shape("D", "(2)|(2)+") == DLabel(Shape((2,), (2,)), "+")
    assert parse_shape("G2", "phi_2_1") == "phi_2_1"


@pytest.mark.parametrize("t, spec", [("A", "1,2"), ("A", "x"), ("B", "3"), ("D", "(1)|(1)"), ("G2", "phi_9")])
def test_bad_shapes(t, spec):
    with pytest.raises(ShapeError):
        parse_shape(t, spec)


# -- commands -------------------------------------------------------------------------

def test_tableaux_listing():
    data = run_json("tableaux", "--type", "A", "--shape", "2,1")
    assert len(data["tableaux"]) == 2
    data = run_json("tableaux", "--type", "B", "--shape", "(1)|(1)")
    assert len(data["tableaux"]) == 2
    assert sorted(t["signs"][1] for t in data["tableaux"]) == [-1, 1]


def test_g2_rep_is_printed_matrices():
    data = run_json("rep", "--type", "G2", "--shape", "phi_2_1")
    mats = {g["name"]: g["matrix"] for g in data["generators"]}
    assert mats["s1"] == [["1", "0"], ["0", "-1"]]
    assert mats["s2"] == [["1/2", "1/2"], ["3/2", "-1/2"]]


def test_hecke_rep_entries_are_ratfunc_text():
    data = run_json("hecke-rep", "--type", "A", "--n", "3", "--shape", "2,1")
    assert [g["name"] for g in data["generators"]] == ["T2", "T3"]
    for g in data["generators"]:
        assert len(g["matrix"]) == 2 and all(len(r) == 2 for r in g["matrix"])
    assert data["generators"][0]["matrix"][0][0] == "q"


def test_type_d_split_rep_has_half_dimension():
    data = run_json("rep", "--type", "D", "--n", "4", "--shape", "(2)|(2)+")
    assert len(data["basis"]) == 3
    assert data["shape"]["split"] == "+"


def test_rep_all_sweeps_every_shape():
    code, out, _ = run("rep", "--type", "A", "--n", "3", "--all")
    assert code == 0
    assert out.count('"group"') == 3


def test_characters_g2():
    data = run_json("characters", "--type", "G2")
    assert [c["representative"] for c in data["classes"]] == ["1", "s1", "s2", "s1s2", "s1s2s1s2", "s1s2s1s2s1s2"]
    assert data["characters"][4]["values"] == ["2", "0", "0", "1", "-1", "-2"]


def test_murphy_command():
    data = run_json("murphy", "--type", "A", "--shape", "2,1")
    text = json.dumps(data)
    assert "q^2" in text


def test_verify_exit_codes():
    code, out, _ = run("verify", "--type", "G2")
    assert code == 0
    reports = json.loads(out)
    assert all(r["status"] == "pass" for r in reports)
    assert run("verify", "--type", "B", "--n", "3")[0] == 0
    assert run("verify", "--type", "A", "--n", "20")[0] == 4


def test_verify_text_format():
    code, out, _ = run("verify", "--type", "A", "--n", "2", "--checks", "relations", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS")


def test_specialize():
    data = run_json("specialize", "--type", "A", "--shape", "3", "--q", "1")
    assert all(g["matrix"] == [["1"]] for g in data["generators"])
    weyl = run_json("rep", "--type", "B", "--shape", "(1)|(1)")
    spec = run_json("specialize", "--type", "B", "--shape", "(1)|(1)", "--p", "1", "--q", "1")
    assert [g["matrix"] for g in spec["generators"]] == [g["matrix"] for g in weyl["generators"]]


def test_exit_codes():
    assert run("tableaux", "--type", "A", "--shape", "1,2")[0] == 3
    assert run("tableaux", "--type", "Z", "--shape", "1")[0] == 2
    assert run("specialize", "--type", "A", "--shape", "2,1", "--q", "0")[0] == 5


def test_output_is_deterministic():
    a = run("hecke-rep", "--type", "B", "--shape", "(2)|(1)")
    b = run("hecke-rep", "--type", "B", "--shape", "(2)|(1)")
    assert a == b and a[0] == 0


def test_main_in_process(capsys):
    assert main(["tableaux", "--type", "A", "--shape", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["tableaux"][0]["rows_alpha"] == [[1, 2, 3]]
    assert main(["rep", "--type", "A", "--n", "20", "--shape", "20"]) == 4
