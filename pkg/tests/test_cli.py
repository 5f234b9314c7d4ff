import json

import pytest

from cmsha.cli import main

from conftest import DATA

H17 = str(DATA / "h17.gpoly")
H14 = str(DATA / "h-14.gpoly")


def test_table(capsys):
    assert main(["table", "-D", "17", "--h", H17, "--min", "5", "--max", "60"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t")[:2] == ["p", "residue"]
    assert lines[1].startswith("5\t2\t2\tsha_trivial")
    assert lines[3].startswith("17\t*")


def test_single_star_row(capsys):
    assert main(["table", "-D", "17", "--h", H17, "--min", "17", "--max", "17"]) == 0
    assert capsys.readouterr().out.splitlines()[1:] == ["17\t*\t*\t*\t-"]


def test_table_json_to_file(tmp_path):
    out = tmp_path / "t.json"
    assert main(["table", "-D", "-14", "--h", H14, "--min", "20", "--max", "40",
                 "--format", "json", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())["rows"]
    assert [(r["p"], r["residue"]) for r in rows] == [(29, 0), (37, 36)]


def test_residue_and_bad_prime(capsys):
    assert main(["residue", "-D", "-14", "-p", "13", "--h", H14]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("13\t3\t")
    assert main(["residue", "-D", "-14", "-p", "13", "--h", H14, "--sign", "certify"]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("13\t10\t")
    assert main(["residue", "-D", "17", "-p", "19", "--h", H17]) == 2


def test_build_h(tmp_path, capsys):
    out = tmp_path / "h.gpoly"
    assert main(["build-h", "-D", "17", "--out", str(out)]) == 0
    assert "degree=128" in capsys.readouterr().out
    assert out.read_text().startswith("D 17")
    assert main(["build-h", "-D", "82"]) == 3


def test_oracle_and_psi(capsys):
    assert main(["oracle", "-D", "17", "-p", "5", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["residue"] == 2
    assert main(["validate-psi", "-D", "-34", "--q-max", "200"]) == 0
    assert "failures=[]" in capsys.readouterr().out


def test_katz_and_p_product(capsys):
    assert main(["katz", "-D", "17", "--h", H17, "--n-max", "41", "--q-max", "13"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["violations"] == [] and rep["checked"] == 60
    assert main(["p-product", "-D", "17", "-p", "7"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_input_errors():
    assert main(["oracle", "-D", "0", "-p", "5"]) == 2
    assert main(["table", "-D", "17", "--h", "/nonexistent.gpoly"]) == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])
