import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from stable_resolve.cli import run

IDEALS = Path(__file__).resolve().parent.parent / "ideals"
M2 = str(IDEALS / "m2.ideal")
PRINCIPAL = str(IDEALS / "principal.ideal")
NONSTABLE = str(IDEALS / "nonstable.ideal")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check():
    assert call("check", PRINCIPAL) == (0, "stable\n", "")
    code, out, _ = call("check", NONSTABLE)
    assert code == 2
    assert "a^2" in out


def test_check_json():
    code, out, _ = call("check", M2, "--json")
    data = json.loads(out)
    assert code == 0 and data["stable"] and data["format"] == 1


def test_resolve_json():
    code, out, _ = call("resolve", M2, "--json")
    assert code == 0
    assert json.loads(out)["ranks"] == [1, 6, 8, 3]


def test_resolve_text():
    code, out, _ = call("resolve", M2)
    assert code == 0
    assert out.startswith("ranks: 1 6 8 3\n")
    assert "f({1},b*c) -> -a * f({},b*c)" in out


def test_resolve_nonstable_names_monomial():
    code, out, err = call("resolve", NONSTABLE)
    assert code == 1
    assert out == ""
    assert "not stable" in err and "a^2" in err


def test_parse_error_names_line(tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: a b\na^2\na*q\n")
    code, _, err = call("resolve", str(bad))
    assert code == 1
    assert "line 3" in err


def test_missing_file():
    code, _, err = call("check", "/nonexistent/file.ideal")
    assert code == 1 and err.startswith("error:")


def test_usage_errors():
    assert call()[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("verify", M2, "--depth", "deep")[0] == 1
    assert call("resolve", M2, "--prime", "12")[0] == 1
    assert call("--help")[0] == 0


def test_betti():
    code, out, _ = call("betti", M2)
    assert code == 0
    assert "total: 1 6 8 3" in out
    data = json.loads(call("betti", M2, "--json")[1])
    assert data["ranks"] == [1, 6, 8, 3]


def test_hasse():
    code, out, _ = call("hasse", M2)
    assert code == 0 and out.startswith("digraph")
    data = json.loads(call("hasse", M2, "--format", "json")[1])
    assert len(data["nodes"]) == 18


def test_cw():
    data = json.loads(call("cw", M2)[1])
    assert len(data["cells"]) == 18
    assert call("cw", M2, "--format", "dot")[1].startswith("digraph")


def test_verify():
    code, out, _ = call("verify", M2, "--depth", "full")
    assert code == 0
    assert out.endswith("all checks passed\n")
    data = json.loads(call("verify", M2, "--json")[1])
    names = [r["name"] for r in data["reports"]]
    for name in ["stability", "el_shelling", "diamond", "cycles", "cone_coefficients",
                 "complex", "minimal", "exact", "oracle", "cellular", "subcomplex_acyclicity"]:
        assert name in names
    assert all(r["passed"] for r in data["reports"])


def test_verify_nonstable_fails():
    code, out, _ = call("verify", NONSTABLE)
    assert code == 2
    assert "FAIL stability" in out


def test_oracle():
    code, out, _ = call("oracle", M2, "--degree", "1,1,1")
    assert code == 0
    assert "koszul [0, 0, 2, 0]" in out
    assert call("oracle", M2)[0] == 0
    assert call("oracle", M2, "--degree", "1,1")[0] == 1


def test_corpus_is_byte_identical():
    args = ("corpus", "--count", "4", "-d", "3", "--max-degree", "3", "--seed", "5",
            "--depth", "quick", "--json")
    first, second = call(*args), call(*args)
    assert first[0] == 0
    assert first[1] == second[1]
    assert len(json.loads(first[1])["ideals"]) == 4
    other = call(*args[:-3], "6", "--depth", "quick", "--json")
    assert other[1] != first[1]


def test_json_runs_are_byte_identical():
    assert call("resolve", M2, "--json") == call("resolve", M2, "--json")
    assert call("verify", M2, "--json", "--depth", "exhaustive", "--seed", "3") == \
        call("verify", M2, "--json", "--depth", "exhaustive", "--seed", "3")


def test_prime_from_environment(monkeypatch):
    monkeypatch.setenv("STABLE_RESOLVE_PRIME", "7")
    assert json.loads(call("resolve", M2, "--json")[1])["prime"] == 7
    assert json.loads(call("resolve", M2, "--json", "-p", "11")[1])["prime"] == 11
    monkeypatch.setenv("STABLE_RESOLVE_PRIME", "8")
    assert call("resolve", M2)[0] == 1


def test_json_input():
    code, out, _ = call("verify", str(IDEALS / "wxyz.json"), "--depth", "quick")
    assert code == 0


@pytest.mark.parametrize("entry", [["-m", "stable_resolve"], None])
def test_entry_points(entry):
    if entry is None:
        import shutil
        exe = shutil.which("stable-resolve")
        if exe is None:
            pytest.skip("console script not on PATH")
        cmd = [exe]
    else:
        cmd = [sys.executable, *entry]
    done = subprocess.run(cmd + ["check", PRINCIPAL], capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout == "stable\n"
