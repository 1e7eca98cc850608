import json
import subprocess
import sys

import pytest

from monomialx.cli import main, run


def jrun(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_ideal_betti(capsys):
    code, rep = jrun(capsys, "ideal", "betti", "--n", "3", "--gens", "x1^2,x1*x2*x3,x3^3")
    assert code == 0
    assert rep["exit_code"] == 0 and rep["timing"] is None
    assert rep["result"]["betti"]["method"]


def test_ideal_quotients_and_failure(capsys):
    gens = "x1*x2*x3,x1*x3^2,x2^3,x2^2*x3,x2*x3^2"
    code, rep = jrun(capsys, "ideal", "quotients", "--n", "3", "--gens", gens)
    assert code == 0 and rep["result"]["status"] == "found"
    code, rep = jrun(capsys, "ideal", "quotients", "--n", "3", "--gens", gens, "--order", gens)
    assert code == 2 and rep["result"]["failure"]["colon"] == ["x1*x3"]


def test_ideal_misc(capsys, tmp_path):
    code, rep = jrun(capsys, "ideal", "stable", "--n", "2", "--gens", "x1^2,x1*x2")
    assert code == 0 and rep["result"]["stable"]
    code, rep = jrun(capsys, "ideal", "stable", "--n", "2", "--gens", "x2^2")
    assert code == 2
    f = write(tmp_path, "j.json", {"n": 2, "gens": ["x2"]})
    code, rep = jrun(capsys, "ideal", "intersect", "--n", "2", "--gens", "x1", "--in2", f)
    assert rep["result"]["intersection"]["gens"] == ["x1*x2"]
    code, rep = jrun(capsys, "ideal", "colon", "--n", "2", "--gens", "x1^2,x2", "--u", "x1")
    assert rep["result"]["colon"]["gens"] == ["x1", "x2"]
    code, rep = jrun(capsys, "ideal", "dim-depth", "--n", "3", "--gens", "x1*x2,x2*x3")
    assert rep["result"]["dim"] == 2 and not rep["result"]["cohen_macaulay"]
    code, rep = jrun(capsys, "ideal", "dim-depth", "--n", "3", "--gens", "x1*x2")
    assert rep["result"]["dim"] == 2 and rep["result"]["cohen_macaulay"]


def test_lexsegment(capsys):
    args = ["--n", "3", "--d", "3", "--u", "x1*x2*x3", "--v", "x2*x3^2"]
    code, rep = jrun(capsys, "lexsegment", "classify", *args)
    c = rep["result"]["classification"]
    assert code == 0 and c["completely"] and c["linear_resolution"]
    code, rep = jrun(capsys, "lexsegment", "order", *args)
    assert code == 0 and len(rep["result"]["certificate"]["order"]) == 5
    code, rep = jrun(capsys, "lexsegment", "resolution", *args)
    assert code == 0


def test_resolution(capsys):
    code, rep = jrun(capsys, "resolution", "koszul", "--n", "3", "--seq", "x1^2,x1*x2*x3,x3^3")
    assert code == 0
    code, rep = jrun(capsys, "resolution", "ek", "--n", "3", "--gens", "x1^2,x1*x2^2,x1*x2*x3,x2^3")
    assert code == 0
    code, rep = jrun(capsys, "resolution", "cone", "--n", "4", "--gens", "x1*x2,x2*x3*x4,x2*x3^2")
    assert code == 0
    code, rep = jrun(capsys, "resolution", "verify", "--n", "4", "--gens", "x1*x2,x2*x3*x4,x2*x3^2")
    assert code == 0 and rep["result"]["betti_match"]
    code, rep = jrun(capsys, "resolution", "cone", "--n", "4", "--gens", "x1*x2,x3*x4")
    assert code == 2


def test_complex(capsys, tmp_path):
    f = write(tmp_path, "c.json", {"n": 4, "facets": [[1, 2], [3, 4]]})
    code, rep = jrun(capsys, "complex", "analyze", "--in", f)
    assert code == 0 and rep["result"]["cohen_macaulay"]["cohen_macaulay"] is False
    code, _ = jrun(capsys, "complex", "shelling", "--in", f)
    assert code == 2
    code, _ = jrun(capsys, "complex", "cm", "--in", f)
    assert code == 2
    code, rep = jrun(capsys, "complex", "dual", "--in", f)
    assert code == 0
    code, rep = jrun(capsys, "complex", "cm", "--named", "rp2", "--char", "2")
    assert code == 2
    code, rep = jrun(capsys, "complex", "cm", "--named", "rp2")
    assert code == 0


def test_constructible(capsys, tmp_path):
    code, rep = jrun(capsys, "constructible", "search", "--named", "nonsqfree")
    assert code == 0 and rep["result"]["status"] == "found"
    code, rep = jrun(capsys, "constructible", "polarize", "--n", "2", "--gens", "x1^2,x1*x2")
    assert code == 0
    bad = write(tmp_path, "cert.json", "{not json")
    code, rep = jrun(capsys, "constructible", "verify", "--named", "nonsqfree", "--cert", bad)
    assert code == 4 and rep["result"]["error"]["field"] == "$"


def test_subword(capsys):
    base = ["--m", "4", "--pi", "(1,2,4)"]
    code, rep = jrun(capsys, "subword", "analyze", *base, "--word", "1,2,1,3,1,2,3,1")
    assert code == 0 and rep["result"]["sphere_or_ball"] == "ball"
    code, rep = jrun(capsys, "subword", "sphere", "--m", "4", "--pi", "(14)(23)",
                     "--word", "2,3,2,3,1,3,2,3,2")
    assert code == 0 and rep["result"]["verdict"] == "sphere"
    code, rep = jrun(capsys, "subword", "kpoly", "--m", "4", "--pi", "(14)(23)",
                     "--word", "2,3,2,3,1,3,2,3,2")
    assert rep["result"]["kpoly"] == {"6": 4, "7": -6, "8": 4, "9": -1}
    code, rep = jrun(capsys, "subword", "sphere", *base, "--word", "1,1")
    assert code == 2


def test_sweeps(capsys):
    code, rep = jrun(capsys, "sweep", "lexsegment", "--max-n", "3", "--max-d", "2")
    assert code == 0 and rep["result"]["failures"] == 0
    code, rep = jrun(capsys, "sweep", "hierarchy", "--count", "15", "--max-n", "5")
    assert code == 0
    code, rep = jrun(capsys, "sweep", "eagon-reiner", "--count", "10", "--max-n", "5", "--threads", "2")
    assert code == 0 and rep["result"]["checked"] == 10


@pytest.mark.parametrize("argv,fld", [
    (["ideal", "betti", "--n", "3", "--gens", ""], "gens"),
    (["ideal", "betti", "--n", "2", "--gens", "x3"], None),
    (["ideal", "colon", "--n", "2", "--gens", "x1", "--u", "y"], "u"),
    (["lexsegment", "classify", "--n", "3", "--d", "3", "--u", "x1*x2*x3"], "v"),
    (["subword", "analyze", "--m", "4", "--pi", "(1,5)", "--word", "1"], None),
    (["complex", "analyze", "--named", "nope"], None),
])
def test_input_errors(capsys, argv, fld):
    code, rep = jrun(capsys, *argv)
    assert code == 4
    assert rep["result"]["error"]["type"]
    if fld:
        assert rep["result"]["error"]["field"] == fld


def test_malformed_json_pointer(capsys, tmp_path):
    f = write(tmp_path, "i.json", '{"n": 2, "gens": [')
    code, rep = jrun(capsys, "ideal", "betti", "--in", f)
    assert code == 4 and rep["result"]["error"]["field"] == "$"
    f = write(tmp_path, "i2.json", {"n": 2, "gens": ["x1", 7]})
    code, rep = jrun(capsys, "ideal", "betti", "--in", f)
    assert code == 4 and rep["result"]["error"]["field"].startswith("$.gens")


def test_bad_usage_exit_code():
    code, rep, _ = run(["ideal", "frobnicate"])
    assert code == 4 and rep is None


def test_budget_exit(capsys):
    code, rep = jrun(capsys, "constructible", "search", "--named", "nonsqfree", "--budget", "1")
    assert code == 3


def test_verify_violation(capsys, monkeypatch):
    import monomialx.resolution as R
    real = R.verify_complex

    def broken(res):
        rep = real(res)
        rep.dd_zero = False
        return rep
    monkeypatch.setattr(R, "verify_complex", broken)
    code, _ = jrun(capsys, "resolution", "verify", "--n", "2", "--gens", "x1,x2")
    assert code == 5


def test_deterministic_bytes(tmp_path):
    argv = [sys.executable, "-m", "monomialx.cli", "subword", "analyze", "--m", "4",
            "--pi", "(1,2,4)", "--word", "1,2,1,3,1,2,3,1", "--json"]
    a = subprocess.run(argv, capture_output=True)
    b = subprocess.run(argv, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_timing_flag(capsys):
    code, rep = jrun(capsys, "ideal", "betti", "--n", "2", "--gens", "x1,x2", "--timing")
    assert isinstance(rep["timing"], float)


def test_pretty_output(capsys):
    code = main(["lexsegment", "classify", "--n", "3", "--d", "3", "--u", "x1*x2*x3", "--v", "x2*x3^2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "completely lexsegment: true" in out and "linear resolution: true" in out


def test_console_script():
    r = subprocess.run(["monomialx", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()
