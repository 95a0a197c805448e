import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rhocalc.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", ["A", "Abar", "C", "xi1"])
def test_build_goldens(name):
    code, text = run("build", name)
    assert code == 0
    assert text == (GOLDEN / f"{name}.txt").read_text()


def test_build_counts():
    _, text = run("build", "A")
    lines = text.splitlines()
    assert sum(l.startswith("gen ") for l in lines) == 9
    assert sum(l.startswith("rel ") for l in lines) == 20
    _, text = run("build", "xi1")
    assert sum(l.startswith("rel ") for l in text.splitlines()) == 4


def test_build_json():
    code, text = run("build", "A", "--json")
    assert code == 0
    d = json.loads(text)
    assert len(d["gens"]) == 9 and len(d["rels"]) == 20


def test_build_unknown(capsys):
    code, _ = run("build", "Z")
    assert code == 2
    assert "UnknownName" in capsys.readouterr().err


def test_unknown_verb_and_flag():
    assert run("frobnicate")[0] == 2
    assert run("build", "A", "--bogus")[0] == 2


def test_rho_free_instance(tmp_path):
    code, text = run("rho", "--lx", str(DATA / "free_lx.txt"), "--out-dir", str(tmp_path))
    assert code == 0
    assert "got 24, 164" in text
    names = {p.name for p in tmp_path.iterdir()}
    assert {"KP.txt", "KQ.txt", "KQ1.txt", "KrhoX.txt", "LrhoX.txt", "report.json"} <= names
    assert (tmp_path / "KrhoX.txt").read_text() == (GOLDEN / "KrhoX_free.txt").read_text()
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["ok"] and report["total"]["actual"] == [24, 164]
    assert {"block_name", "expected", "actual"} == set(report["relations"][0])


def test_rho_is_deterministic(tmp_path):
    one, two = tmp_path / "one", tmp_path / "two"
    for d in (one, two):
        run("rho", "--kx", str(DATA / "free_kx.txt"), "--lx", str(DATA / "free_lx.txt"), "--out-dir", str(d))
    for p in one.iterdir():
        assert p.read_bytes() == (two / p.name).read_bytes()


def test_rho_json(tmp_path):
    code, text = run("rho", "--lx", str(DATA / "free_lx.txt"), "--out-dir", str(tmp_path), "--json")
    assert code == 0
    assert json.loads(text)["total"]["expected"] == [24, 164]


def test_rho_parse_error(tmp_path, capsys):
    kx = tmp_path / "k.txt"
    kx.write_text("gen a\ngen b\ngen c\nrel a^ = b\n")
    lx = tmp_path / "l.txt"
    lx.write_text("over k.txt\nsub a\n")
    code, _ = run("rho", "--lx", str(lx), "--out-dir", str(tmp_path / "o"))
    assert code == 2
    assert "line 4" in capsys.readouterr().err


def test_rho_missing_abc(tmp_path):
    kx = tmp_path / "k.txt"
    kx.write_text("gen p\ngen q\ngen r\n")
    lx = tmp_path / "l.txt"
    lx.write_text("over k.txt\nsub p q\n")
    assert run("rho", "--lx", str(lx), "--out-dir", str(tmp_path / "o"))[0] == 2
    code, text = run("rho", "--lx", str(lx), "--abc", "p", "q", "r p", "--out-dir", str(tmp_path / "o"))
    assert code == 0
    assert "m=6 n=3 k=1" in text
    assert "got 27, 194" in text


def test_verify_lemma35():
    code, text = run("verify", "lemma35", "--f", "2,5,3", "--j", "1")
    assert code == 0
    assert text.startswith("PASS lemma35: 1/1")
    assert "a_{0:2, 1:6, 2:3} = " in text


def test_verify_commute():
    code, text = run("verify", "commute", "--f", "2,5,3", "--j", "1,2")
    assert code == 0
    assert "a_{0:2, 1:6, 2:4}" in text
    assert run("verify", "commute", "--f", "2,5,3", "--j", "1")[0] == 2


def test_verify_rho_chain_sweep():
    code, text = run("verify", "rho-chain", "--sweep", "2")
    assert code == 0
    assert text.strip() == "PASS rho-chain: 3125/3125 checks"


def test_verify_json():
    code, text = run("verify", "lemma35", "--f", "2,5,3", "--j", "0,1,2", "--json")
    assert code == 0
    assert json.loads(text) == {"kind": "lemma35", "checked": 3, "failed": 0, "ok": True, "failures": []}


def test_verify_flag_conflicts():
    assert run("verify", "lemma35", "--f", "1", "--sweep", "1")[0] == 2
    assert run("verify", "rho-chain", "--f", "1", "--j", "1")[0] == 2


def test_reduce_and_fn():
    assert run("reduce", "a a^-1") == (0, "1\n")
    assert run("reduce", "b^2 c^-1 c b^3") == (0, "b^5\n")
    assert run("reduce", "a^")[0] == 2
    assert run("fn", "rho", "(2,5,3)") == (0, "{-2:3, -1:5, 0:2}\n")
    assert run("fn", "rho", "{-1:3,0:2,1:9,2:8}") == (0, "{-2:8, -1:9, 0:2, 1:3}\n")
    assert run("fn", "show", "2,5,3,0") == (0, "{0:2, 1:5, 2:3}\n")
    assert run("fn", "rhoset", "[2,5,3; {-1:1}]") == (0, "[{-2:3, -1:5, 0:2}; {1:1}]\n")
    assert run("fn", "rho", "{x}")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rhocalc", "reduce", "c^3 c^-3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
    proc = subprocess.run([sys.executable, "-m", "rhocalc", "build", "Z"], capture_output=True, text=True)
    assert proc.returncode == 2
