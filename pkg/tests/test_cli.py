import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from pathforge import cli
from pathforge.enumeration import WeightPolynomial

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, fixture",
    [
        (["map", "UUDDDU"], "map_UUDDDU.txt"),
        (["--format", "json", "map", "UUDDDU"], "map_UUDDDU.json"),
        (["map", "UDUDDU", "--inverse", "--format", "json"], "map_UDUDDU_inverse.json"),
        (["poly", "3", "dyck", "bibanded"], "poly_3_dyck_bibanded.txt"),
        (["poly", "3", "dyck", "peaks"], "poly_3_dyck_peaks.txt"),
        (["poly", "3", "bilateral", "peaks"], "poly_3_bilateral_peaks.txt"),
        (["--format", "json", "poly", "3", "dyck", "bibanded"], "poly_3_dyck_bibanded.json"),
        (["--format", "json", "poly", "--n", "3", "--lattice", "dyck", "--scheme", "peaks"],
         "poly_3_dyck_peaks.json"),
        (["render", "UUDDDU"], "render_UUDDDU.txt"),
        (["render", "UUDDDU", "--bands", "--peaks", "--checkmarks"], "render_UUDDDU_full.txt"),
        (["render", "UUDDDU", "--svg", "--bands", "--peaks"], "render_UUDDDU.svg"),
        (["render", "UDUDDU", "--svg", "--checkmarks", "--peaks"], "render_UDUDDU_checkmarks.svg"),
        (["render", "UD", "--svg", "--bands"], "render_UD_bands.svg"),
    ],
)
def test_golden(argv, fixture):
    code, out = run(*argv)
    assert code == 0
    assert out == (GOLDEN / fixture).read_text(encoding="utf-8")


def test_golden_all_dyck3_mappings():
    lines = []
    for w in ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]:
        code, out = run("--format", "json", "map", w)
        assert code == 0
        lines.append(out)
    assert "".join(lines) == (GOLDEN / "map_dyck3_all.jsonl").read_text(encoding="utf-8")


def test_map_round_trip():
    _, out = run("--format", "json", "map", "UUDDDU")
    image = json.loads(out)["image"]
    _, back = run("--format", "json", "map", image, "--inverse")
    assert json.loads(back)["image"] == "UUDDDU"


def test_map_smallest_path():
    _, out = run("--format", "json", "map", "UD")
    rec = json.loads(out)
    assert rec["image"] == "UD"
    assert rec["bibanded"] == {"exp_a": 2, "exp_b": 0}
    assert rec["peaks"] == {"exp_m": 1}


def test_parse_error_exit_code(capsys):
    code, _ = run("map", "UDXD")
    assert code == 2
    assert "position 3" in capsys.readouterr().err
    assert run("map", "UUD")[0] == 2
    assert run("map", "UUDU")[0] == 2


def test_verify(capsys):
    code, out = run("--format", "json", "verify", "3", "dyck", "--scheme", "bibanded")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[2]["n"] == 3 and rows[2]["path_count"] == 5 and rows[2]["match"]
    assert rows[-1]["summary"]["mismatch"] == 0

    code, out = run("verify", "8", "both")
    assert code == 0
    assert out.splitlines()[-1].startswith("summary: reports=32 match=32")


def test_verify_zero_is_usage_error(capsys):
    assert run("verify", "0")[0] == 2


def test_verify_mismatch_exit_code(monkeypatch):
    def broken(n, lattice, scheme, stated_range=False):
        return WeightPolynomial(scheme, lattice, n, {0: 42})

    monkeypatch.setattr("pathforge.enumeration.closed_form_polynomial", broken)
    code, out = run("verify", "2", "dyck")
    assert code == 1
    assert "MISMATCH" in out


def test_limit_exit_code(capsys, monkeypatch):
    assert run("poly", "15", "dyck")[0] == 3
    assert run("enumerate", "15")[0] == 3
    monkeypatch.setenv("PATHFORGE_MAX_N", "2")
    code, out = run("verify", "3", "dyck")
    assert code == 3
    assert run("poly", "3", "dyck")[0] == 3


def test_io_error_exit_code(tmp_path, capsys):
    code, _ = run("render", "UD", "--out", str(tmp_path / "missing" / "x.svg"))
    assert code == 4


def test_render_to_file(tmp_path):
    target = tmp_path / "udud_du.svg"
    code, out = run("render", "UDUDDU", "--svg", "--checkmarks", "--peaks", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "render_UDUDDU_checkmarks.svg").read_text()


def test_checkmarks_command():
    code, out = run("checkmarks", "UDUDDU")
    assert code == 0 and out == "UDUDDU  NW=.^^;SW=^.\n"
    code, out = run("--format", "json", "checkmarks", "--pair", "NW=.^^;SW=^.")
    assert json.loads(out) == {"n": 3, "nw": [2, 3], "sw": [1], "word": "UDUDDU",
                               "text": "NW=.^^;SW=^.", "dyck": False}
    assert run("checkmarks", "--pair", "NW=...;SW=^^")[0] == 2
    assert run("checkmarks")[0] == 2


def test_enumerate_command():
    code, out = run("enumerate", "3")
    assert out.split() == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
    code, out = run("--format", "json", "enumerate", "1", "bilateral", "--weights")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["word"] for r in rows] == ["UD", "DU"]
    assert rows[1]["bibanded"] == {"exp_a": 0, "exp_b": 2}
    assert rows[1]["peaks"] == {"exp_m": 2}


def test_poly_closed_form_source():
    code, out = run("poly", "3", "bilateral", "bibanded", "--source", "closed-form")
    assert out == "a^6 + 9a^4b^2 + 9a^2b^4 + b^6\n"


def test_conflicting_arguments():
    assert run("poly", "3", "--n", "4")[0] == 2


def test_commands_are_deterministic():
    for argv in (["--format", "json", "map", "UUDDDU"], ["render", "UDUDDU", "--svg"]):
        assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pathforge", "poly", "3", "dyck", "peaks"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "m^3 + 3m^2 + m\n"
