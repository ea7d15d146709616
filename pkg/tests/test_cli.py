import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from quatroots.cli import main

GOLDEN = Path(__file__).parent / "golden"
WORKED = {
    "running": "t^2 - (i+j)*t - k",
    "spherical": "t^3 - k*t^2 + t - k",
    "quadratic": "t^2 - (1+2i+j)*t + (i-1-k)",
}


def run(*argv):
    return subprocess.run([sys.executable, "-m", "quatroots", *argv],
                          capture_output=True, text=True, check=False)


@pytest.mark.parametrize("name", sorted(WORKED))
def test_golden_json(name):
    proc = run("classify", WORKED[name], "--json")
    assert proc.returncode == 0, proc.stderr
    path = GOLDEN / f"classify_{name}.json"
    if os.environ.get("QUATROOTS_REGEN_GOLDEN"):
        path.write_text(proc.stdout, encoding="utf-8")
    assert proc.stdout.encode() == path.read_bytes()
    # a second run is byte-identical
    assert run("classify", WORKED[name], "--json").stdout == proc.stdout


def test_golden_contents():
    d = json.loads((GOLDEN / "classify_running.json").read_text())
    assert d["E"]["text"] == "t - i" and d["D"]["text"] == "1"
    assert [z["exact"] for z in d["isolated_complex_roots"]] == [
        {"re": {"num": "0", "den": "1"}, "im": {"num": "1", "den": "1"}}]
    d = json.loads((GOLDEN / "classify_spherical.json").read_text())
    assert d["spherical_classes"] == [{"re": {"num": "0", "den": "1"},
                                       "imag_norm_sq": {"num": "1", "den": "1"}, "exact": True}]
    assert d["isolated_complex_roots"] == []
    d = json.loads((GOLDEN / "classify_quadratic.json").read_text())
    assert d["heights"]["H_Q_squared"] == {"num": "6", "den": "1"}
    assert d["heights"]["H1_squared"] == {"num": "1", "den": "1"}
    for doc in (GOLDEN.glob("classify_*.json")):
        d = json.loads(doc.read_text())
        assert all(f["status"] != "fail" for f in d["consistency_flags"])


def test_parse_error_exit_code():
    proc = run("classify", "t^2 + * t")
    assert proc.returncode == 2
    assert "position 6" in proc.stderr and "^" in proc.stderr


def test_domain_error_exit_code(capsys):
    assert main(["classify", "3 + i"]) == 1
    assert "error" in capsys.readouterr().err


def test_quadratic_condition_fails(capsys):
    assert main(["quadratic", "t^2 + 1 + k"]) == 0
    assert "no complex root" in capsys.readouterr().out


def test_quadratic_solution(capsys):
    assert main(["quadratic", WORKED["quadratic"], "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["sigma"]["text"] == "1 + 4/3*i + 1/3*j + 1/3*k"
    assert d["q"] == {"re": {"num": "0", "den": "1"}, "im": {"num": "1", "den": "1"}}


def test_bounds(capsys):
    assert main(["bounds", "t - (1+i+j+k)", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["bounds"]["general"]["radius"]["value"] == "3"


def test_integer_roots(capsys):
    assert main(["integer-roots", "t^2 - (i+j)*t - k"]) == 0
    assert capsys.readouterr().out == "i\n"


def test_bezout(capsys):
    assert main(["bezout", "t^3 - k*t^2 + t - k", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["rank_bez_fg"] == 1 and d["rank_barnett"] == 1
    assert (d["barnett_stack"]["rows"], d["barnett_stack"]["cols"]) == (9, 3)


def test_no_numeric(capsys):
    assert main(["classify", "t^3 - k*t^2 + t - k", "--json", "--no-numeric"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["spherical_classes"] is None and d["has_spherical_root"] is True


def test_batch_and_out(tmp_path):
    batch = tmp_path / "in.txt"
    batch.write_text("# worked examples\n" + "\n".join(WORKED.values()) + "\n\n")
    out = tmp_path / "out.json"
    assert main(["classify", "--batch", str(batch), "--json", "--out", str(out)]) == 0
    docs = json.loads(out.read_text())
    assert [d["expression"] for d in docs] == list(WORKED.values())
    single = json.loads((GOLDEN / "classify_running.json").read_text())
    assert docs[0]["result"] == single


def test_batch_stops_on_parse_error(tmp_path):
    batch = tmp_path / "in.txt"
    batch.write_text("t - k\nt +\n")
    assert main(["classify", "--batch", str(batch)]) == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["classify"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["classify", "t", "--tol", "0"])
