import json
import subprocess
import sys

import pytest

from virtspan import generators as gen
from virtspan.cli import main
from virtspan.codec import read_vlk, write_vlk


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, D in {
        "unknot": gen.unknot(),
        "hopf": gen.hopf(),
        "trefoil": gen.trefoil(),
        "trefoil_v": gen.virtualized(gen.trefoil(), 0),
        "h3": gen.necklace_Hn(3),
        "h4": gen.necklace_Hn(4),
        "hp3": gen.necklace_Hprime_n(3),
        "kink": gen.kink(1),
    }.items():
        p = tmp_path / f"{name}.vlk"
        write_vlk(D, p, header=name)
        paths[name] = str(p)
    bad = tmp_path / "bad.vlk"
    bad.write_text("X 0 0 1 1\nX 2 2 3\n")
    paths["bad"] = str(bad)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", files["h3"])
    assert code == 0 and "3 real, 3 virtual" in out


def test_invariants_json(capsys, files):
    code, out, _ = run(capsys, "invariants", files["h3"], "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["span"] == 6 and rep["pseudo_adequate"] and rep["classicality"] == "NotClassical"
    code, out, _ = run(capsys, "invariants", files["trefoil"], "--json")
    rep = json.loads(out)
    assert rep["span"] == 12 and rep["adequate"] and rep["classicality"] == "Inconclusive"


def test_invariants_text(capsys, files):
    code, out, _ = run(capsys, "invariants", files["hopf"], "--text")
    assert code == 0
    assert "-A^4 - A^-4" in out


def test_malformed_input(capsys, files):
    code, _, err = run(capsys, "invariants", files["bad"])
    assert code == 1 and "line 2" in err
    code, _, err = run(capsys, "invariants", files["bad"] + ".missing")
    assert code == 1 and "cannot read" in err


def test_crossing_limit_exit(capsys, files):
    code, _, err = run(capsys, "--max-crossings", "2", "invariants", files["trefoil"])
    assert code == 2 and "limit of 2" in err


def test_check_classical(capsys, files):
    assert run(capsys, "check-classical", files["trefoil_v"])[0] == 10
    assert run(capsys, "check-classical", files["unknot"])[0] == 0
    code, out, _ = run(capsys, "check-classical", files["h4"], "--json")
    assert code == 0 and json.loads(out) == {"span": 8, "verdict": "Inconclusive"}


def test_check_thm43(capsys, files):
    code, out, _ = run(capsys, "check-thm43", files["hp3"], "--crossing", str(gen.HPRIME_DESIGNATED))
    cert = json.loads(out)
    assert code == 0 and cert["valid"]
    assert cert["virtualized_crossing"] == gen.HPRIME_DESIGNATED
    code, out, _ = run(capsys, "check-thm43", files["trefoil"], "--crossing", "0")
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(capsys, "check-thm43", files["kink"], "--crossing", "0")
    cert = json.loads(out)
    assert code == 3 and not cert["valid"] and not cert["pseudo_adequate_source"]
    code, _, err = run(capsys, "check-thm43", files["h3"], "--crossing", "1")
    assert code == 1 and "not a real crossing" in err


def test_adequacy_cmd(capsys, files):
    code, out, _ = run(capsys, "adequacy", files["h3"], "--json")
    rep = json.loads(out)
    assert code == 0 and rep["pseudo_adequate"] and not rep["adequate"]


def test_gen(capsys, tmp_path):
    out = tmp_path / "h5.vlk"
    assert run(capsys, "gen", "hn", "5", "--out", str(out))[0] == 0
    assert read_vlk(out) == gen.necklace_Hn(5)
    code, text, _ = run(capsys, "invariants", str(out), "--json")
    assert json.loads(text)["span"] == 10
    code, _, err = run(capsys, "gen", "hn", "0")
    assert code == 1 and "n >= 2" in err
    code, text, _ = run(capsys, "gen", "trefoil", "--virtualize", "0")
    assert code == 0 and text.count("V") == 1
    code, text, _ = run(capsys, "gen", "kink", "-1")
    assert code == 0 and text.strip() == "X 0 1 1 0"
    code, text, _ = run(capsys, "gen", "random", "5", "--seed", "3", "--virtual", "2")
    assert code == 0 and text.count("X") == 5 and text.count("V") == 2


def test_batch(capsys, tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    for name, D in {"unknot": gen.unknot(), "hopf": gen.hopf(), "trefoil": gen.trefoil()}.items():
        write_vlk(D, d / f"{name}.vlk")
    (d / "notes.txt").write_text("ignored")
    csv1, csv2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "batch", str(d), "--csv", str(csv1))[0] == 0
    assert run(capsys, "batch", str(d), "--csv", str(csv2))[0] == 0
    assert csv1.read_bytes() == csv2.read_bytes()
    lines = csv1.read_text().splitlines()
    header = lines[0].split(",")
    assert header[:3] == ["file", "c", "virtual_count"]
    rows = [dict(zip(header, l.split(","))) for l in lines[1:]]
    assert [r["file"] for r in rows] == ["hopf.vlk", "trefoil.vlk", "unknot.vlk"]
    assert [r["span"] for r in rows] == ["8", "12", "0"]


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "virtspan", "check-classical", files["h3"]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 10
    assert "NotClassical" in proc.stdout
