import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from segre_series import RationalGF
from segre_series.cli import main
from segre_series.fileformat import ParseError, module_from_obj, series_from_obj, series_to_obj

FIX = Path(__file__).parent / "fixtures"
SCHEMA = json.loads((Path(__file__).parents[1] / "src/segre_series/series.schema.json").read_text())


def f(name):
    return str(FIX / name)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# every command with arguments that succeed
COMMANDS = {
    "normalize": ["normalize", f("uncanceled.json")],
    "expand": ["expand", f("e1.json"), "--from", "0", "--to", "6"],
    "hvector": ["hvector", "--coeffs", f("coeffs_squares.json"), "--pole-order", "3"],
    "segre": ["segre", f("p1.json"), f("p1.json"), "--method", "both"],
    "segre-multi": ["segre-multi", f("p1.json"), f("p1.json"), f("p1.json")],
    "monomial": ["monomial", "--d1", "1", "--i", "0", "--d2", "1", "--j", "5"],
    "veronese": ["veronese", f("squares.json"), "--n", "3"],
    "postulation": ["postulation", f("e1.json")],
    "hilbert-poly": ["hilbert-poly", f("squares.json")],
    "bounds": ["bounds", f("e1.json"), f("geom.json")],
    "bounds-multi": ["bounds", f("p1.json"), f("p1.json"), f("p1.json")],
    "regularity": ["regularity", f("module_p2.json"), f("module_p1.json")],
    "regularity-veronese": ["regularity", f("module_p1.json"), f("module_p1.json"),
                            "--veronese", "2,2"],
    "regularity-zero-dim": ["regularity", f("module_zero_dim.json"), f("module_p1.json")],
    "newcomb": ["newcomb", "--b", "1,1,1"],
    "newcomb-k": ["newcomb", "--b", "2,1", "--k", "1"],
}

SERIES_COMMANDS = {"normalize", "hvector", "segre", "segre-multi", "monomial", "veronese"}


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_every_command_succeeds_and_verifies(capsys, name):
    code, out, _ = run(capsys, *COMMANDS[name], "--verify")
    assert code == 0, out
    assert "verification: passed" in out


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_json_output_reparses(capsys, name):
    code, out, _ = run(capsys, *COMMANDS[name], "--format", "json")
    assert code == 0
    doc = json.loads(out)
    # --method both always cross-checks
    assert doc["verification"]["status"] == ("passed" if name == "segre" else "skipped")
    assert isinstance(doc["elapsed_us"], int)
    if name in SERIES_COMMANDS:
        jsonschema.validate(doc["result"], SCHEMA)
        series, _ = series_from_obj(doc["result"])
        assert series_to_obj(series) == doc["result"]


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_text_output_is_deterministic(capsys, name):
    first = run(capsys, *COMMANDS[name])[1]
    second = run(capsys, *COMMANDS[name])[1]
    assert first == second


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_verify_does_not_change_result(capsys, name):
    plain = json.loads(run(capsys, *COMMANDS[name], "--format", "json")[1])
    checked = json.loads(run(capsys, *COMMANDS[name], "--format", "json", "--verify")[1])
    assert plain["result"] == checked["result"]


@pytest.mark.parametrize("argv, expected", [
    (COMMANDS["segre"], "result: (1 + t) / (1-t)^3"),
    (COMMANDS["postulation"], "result: 1"),
    (COMMANDS["normalize"], "result: (1 + t) / (1-t)^2"),
    (COMMANDS["hvector"], "result: (1 + t) / (1-t)^3"),
    (COMMANDS["veronese"], "result: (1 + 13*t + 4*t^2) / (1-t)^3"),
    (COMMANDS["newcomb"], "0: 1\n1: 4\n2: 1"),
    (COMMANDS["regularity-veronese"], "result: 2"),
    (COMMANDS["hilbert-poly"], "result: 1 + 2*n + n^2"),
    (COMMANDS["expand"], "result: 0, 0, 3, 4, 5, 6, 7"),
])
def test_text_results(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and expected in out


def test_segre_text_layout(capsys):
    _, out, _ = run(capsys, *COMMANDS["segre"])
    assert out == "command: segre\nresult: (1 + t) / (1-t)^3\nverification: passed\n"


def test_bounds_text(capsys):
    _, out, _ = run(capsys, *COMMANDS["bounds"])
    assert "upper_max: 3" in out and "actual_degree: 3" in out and "star_star_holds: false" in out


@pytest.mark.parametrize("name", sorted(p.name for p in (FIX / "malformed").iterdir()))
def test_malformed_file_exits_2(capsys, name):
    code, _, err = run(capsys, "normalize", FIX / "malformed" / name)
    if name == "dim_mismatch.json":
        code, _, err = run(capsys, "regularity", FIX / "malformed" / name)
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_and_bad_flags_exit_2(capsys):
    assert run(capsys, "normalize", FIX / "nope.json")[0] == 2
    assert run(capsys, "newcomb", "--b", "1,x")[0] == 2
    assert run(capsys, "regularity", f("module_p1.json"), "--veronese", "2,2")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["segre", f("p1.json")])
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["regularity", f("module_reg_ge_dim.json"), f("module_p1.json")],
    ["regularity", f("module_undeclared.json"), f("module_p1.json")],
    ["regularity", f("module_p1.json"), f("module_reg_ge_dim.json"), "--veronese", "1,2"],
    ["segre-multi", f("e1.json"), f("p1.json")],
    ["hvector", "--coeffs", f("coeffs_short.json"), "--pole-order", "3"],
])
def test_hypothesis_violation_exits_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert err.startswith("error:")


def test_offending_module_is_named(capsys):
    _, _, err = run(capsys, "regularity", f("module_p1.json"), f("module_reg_ge_dim.json"))
    assert "input #1" in err


def test_injected_fault_exits_4(capsys, monkeypatch):
    import segre_series.cli as cli
    wrong = RationalGF.of([1, 2], 3)
    monkeypatch.setattr(cli, "segre_closed", lambda a, b: wrong)
    code, out, _ = run(capsys, "segre", f("p1.json"), f("p1.json"), "--method", "both")
    assert code == 4
    assert "verification: FAILED" in out
    assert "(1 + t) / (1-t)^3" in out and "(1 + 2*t) / (1-t)^3" in out
    code, out, _ = run(capsys, "segre", f("p1.json"), f("p1.json"), "--verify", "--format", "json")
    assert code == 4
    assert json.loads(out)["verification"]["status"] == "FAILED"


def test_injected_fault_in_newcomb_exits_4(capsys, monkeypatch):
    import segre_series.cli as cli
    monkeypatch.setattr(cli, "newcomb_row", lambda b: [1, 5, 1])
    assert run(capsys, "newcomb", "--b", "1,1,1", "--verify")[0] == 4
    # without --verify the fault goes unnoticed by design
    assert run(capsys, "newcomb", "--b", "1,1,1")[0] == 0


def test_module_round_trip():
    obj = json.loads((FIX / "module_p1.json").read_text())
    m = module_from_obj(obj)
    assert (m.dim, m.cm_declared, m.reg) == (2, True, 0)
    with pytest.raises(ParseError):
        module_from_obj({"numerator": [], "pole_order": 0})


def test_fixtures_match_schema():
    for path in FIX.glob("*.json"):
        obj = json.loads(path.read_text())
        if isinstance(obj, dict):
            jsonschema.validate(obj, SCHEMA)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "segre_series", "newcomb", "--b", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "command: newcomb\n0: 1\n1: 1\nverification: skipped\n"
