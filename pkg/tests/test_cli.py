"""Tests for the command-line front end: scenario validation, subcommand
behavior, exit codes, and report determinism."""

import json
import os
import subprocess
import sys

import pytest

from qdweight.cli import (
    SCENARIO_SCHEMA,
    CliError,
    grid_scenarios,
    load_scenario,
    main,
    run_suite,
)

F9_FIELD = {"kind": "EXT_FIELD", "p": 3, "f": [1, 0, 1], "q": "2"}
F3_FIELD = {"kind": "PRIME_FIELD", "p": 3, "q": "2"}
QQ_FIELD = {"kind": "RATIONAL", "q": "2"}


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def scenario(field, name, params, window=None):
    out = {
        "schema": "1",
        "action": "construct",
        "field": field,
        "family": {"name": name, "params": params},
    }
    if window is not None:
        out["window"] = list(window)
    return out


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def build_module_file(tmp_path, stem, sc, capsys):
    scenario_path = write_json(tmp_path / f"{stem}_scenario.json", sc)
    module_path = str(tmp_path / f"{stem}.json")
    code, _, err = run_cli(["construct", "--scenario", scenario_path, "--out", module_path], capsys)
    assert code == 0, err
    return module_path


@pytest.fixture
def twisted_file(tmp_path, capsys):
    sc = scenario(F9_FIELD, "VQ_F_B_A", {"f": "2", "b": "[0,1]", "a": "[0,1]"})
    return build_module_file(tmp_path, "twisted", sc, capsys)


@pytest.fixture
def remark_file(tmp_path, capsys):
    return build_module_file(tmp_path, "remark", scenario(F3_FIELD, "REMARK_136", {}), capsys)


# construct


def test_construct_writes_canonical_module(tmp_path, capsys, twisted_file):
    raw = json.loads(open(twisted_file).read())
    assert raw["kind"] == "CIRCULAR"
    # q is stored in the field's canonical encoding: [2] as a degree-0 polynomial
    assert raw["field"] == dict(F9_FIELD, q="[2]")
    assert [s["dim"] for s in raw["spaces"]] == [1] * 6
    # canonical: reserializing with sorted keys reproduces the bytes
    text = open(twisted_file).read().strip()
    assert text == json.dumps(raw, sort_keys=True, separators=(",", ":"))


def test_construct_to_stdout_is_loadable(tmp_path, capsys):
    sc = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    path = write_json(tmp_path / "s.json", sc)
    code, out, _ = run_cli(["construct", "--scenario", path], capsys)
    assert code == 0
    from qdweight.wmod import make_module

    V = make_module(json.loads(out))
    assert V.total_dim() == 5


def test_construct_rejects_invalid_scenarios(tmp_path, capsys):
    bad_schema = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    bad_schema["schema"] = "2"
    path = write_json(tmp_path / "bad1.json", bad_schema)
    code, _, err = run_cli(["construct", "--scenario", path], capsys)
    assert code == 2 and "invalid" in err

    wrong_action = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    wrong_action["action"] = "verify"
    path = write_json(tmp_path / "bad2.json", wrong_action)
    code, _, err = run_cli(["construct", "--scenario", path], capsys)
    assert code == 2 and "construct" in err

    unknown_key = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    unknown_key["extra"] = 1
    path = write_json(tmp_path / "bad3.json", unknown_key)
    code, _, err = run_cli(["construct", "--scenario", path], capsys)
    assert code == 2

    bad_params = scenario(QQ_FIELD, "VQ_B_A", {"b": "2", "a": "1/2"}, (-2, 2))
    path = write_json(tmp_path / "bad4.json", bad_params)
    code, _, err = run_cli(["construct", "--scenario", path], capsys)
    assert code == 2 and "q-power" in err

    code, _, err = run_cli(["construct", "--scenario", str(tmp_path / "missing.json")], capsys)
    assert code == 2


def test_scenario_top_level_q_must_agree(tmp_path, capsys):
    sc = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    sc["q"] = "3"
    path = write_json(tmp_path / "s.json", sc)
    code, _, err = run_cli(["construct", "--scenario", path], capsys)
    assert code == 2 and "disagrees" in err

    sc["q"] = "2"
    path = write_json(tmp_path / "s2.json", sc)
    code, _, _ = run_cli(["construct", "--scenario", path], capsys)
    assert code == 0


# verify


def test_verify_pass_and_fail_exit_codes(capsys, twisted_file, remark_file):
    code, out, _ = run_cli(["verify", twisted_file, "--algebra", "D"], capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True

    code, out, _ = run_cli(["verify", remark_file], capsys)
    assert code == 1
    report = json.loads(out)
    (violation,) = report["violations"]
    assert violation["relation"] == "Y1X=qsigma-1"
    assert violation["offset"] == 2
    assert violation["label"] == "v3"


def test_verify_flavor_restriction(capsys, remark_file):
    # the defect lives on the sigma side; the tau-side relations pass
    code, out, _ = run_cli(["verify", remark_file, "--algebra", "A1"], capsys)
    assert code == 0 and json.loads(out)["passed"] is True
    code, _, _ = run_cli(["verify", remark_file, "--algebra", "AQ"], capsys)
    assert code == 1


def test_verify_bad_module_file(tmp_path, capsys):
    path = write_json(tmp_path / "m.json", {"field": QQ_FIELD})
    code, _, err = run_cli(["verify", path], capsys)
    assert code == 2 and "invalid" in err


# analyze


def test_analyze_affirmative(capsys, twisted_file):
    code, out, _ = run_cli(
        ["analyze", twisted_file, "--checks", "dims,equidim,irreducible,indecomposable,decompose,end", "--seed", "7"],
        capsys,
    )
    assert code == 0
    checks = json.loads(out)["checks"]
    assert checks["dims"]["dims"] == [[k, 1] for k in range(6)]
    assert checks["equidim"]["verdict"] == "YES"
    assert checks["irreducible"]["verdict"] == "YES"
    assert checks["indecomposable"]["verdict"] == "YES"
    assert checks["decompose"]["count"] == 1
    assert checks["end"]["dim"] == 1


def test_analyze_negative_verdict_exits_1(capsys, remark_file):
    code, out, _ = run_cli(["analyze", remark_file, "--checks", "equidim"], capsys)
    assert code == 1
    raw = json.loads(out)["checks"]["equidim"]
    assert raw["verdict"] == "NO"
    assert raw["witness"]["offsets"] == [0, 3]


def test_analyze_undecided_exits_3(tmp_path, capsys):
    sc = scenario(QQ_FIELD, "VQ_B_A", {"b": "3", "a": "1/2"}, (-2, 2))
    path = build_module_file(tmp_path, "line", sc, capsys)
    code, out, _ = run_cli(["analyze", path, "--checks", "equidim,indecomposable"], capsys)
    assert code == 3
    checks = json.loads(out)["checks"]
    assert checks["equidim"]["verdict"] == "NOT_APPLICABLE"
    assert checks["indecomposable"]["verdict"] == "NOT_APPLICABLE"


def test_analyze_rejects_unknown_check(capsys, twisted_file):
    code, _, err = run_cli(["analyze", twisted_file, "--checks", "spectra"], capsys)
    assert code == 2 and "spectra" in err


# extend


def test_extend_subcommand_roundtrip(tmp_path, capsys, twisted_file):
    from qdweight.wmod import make_module, restrict

    V = restrict(make_module(json.loads(open(twisted_file).read())), "AQ")
    path = write_json(tmp_path / "aq.json", V.to_json())
    code, out, _ = run_cli(["extend", path], capsys)
    assert code == 0
    raw = json.loads(out)
    assert raw["kind"] == "UNIQUE" and raw["missing"] == "Y"


def test_extend_impossible_exits_1(tmp_path, capsys):
    from qdweight.wmod import construct_gwa, with_breaks
    from qdweight.basering import WeightPoint
    from qdweight.fields import FieldSpec, make_field

    QQ = make_field(FieldSpec(kind="RATIONAL", q="2"))
    base = WeightPoint(QQ.one, QQ.parse("1/2"))
    V = construct_gwa("AQ", with_breaks([0, 1], []), base, (-3, 3), QQ)
    path = write_json(tmp_path / "broken.json", V.to_json())
    code, out, _ = run_cli(["extend", path], capsys)
    assert code == 1
    raw = json.loads(out)
    assert raw["kind"] == "IMPOSSIBLE"
    assert raw["conflict"] == {"relation": "YX=tau", "offset": 0, "equation": {"lhs": "0", "rhs": "1"}}


def test_extend_precondition_exits_2(capsys, twisted_file):
    code, _, err = run_cli(["extend", twisted_file], capsys)
    assert code == 2 and "both" in err


# iso


def test_iso_yes_no_unknown_exit_codes(tmp_path, capsys, twisted_file):
    partner = build_module_file(
        tmp_path, "partner", scenario(F9_FIELD, "V1_F_A_B", {"f": "2", "a": "[0,1]", "b": "[0,1]"}), capsys
    )
    code, out, _ = run_cli(["iso", twisted_file, partner, "--algebra", "D"], capsys)
    assert code == 0
    assert json.loads(out)["witness"]["kind"] == "intertwiner"

    other = build_module_file(
        tmp_path, "other", scenario(F9_FIELD, "VQ_F_B_A", {"f": "[0,1]", "b": "[0,1]", "a": "[0,1]"}), capsys
    )
    code, out, _ = run_cli(["iso", twisted_file, other], capsys)
    assert code == 1
    assert json.loads(out)["witness"]["kind"] == "no_invertible_intertwiner"


def test_iso_usage_error_on_mismatched_orbits(tmp_path, capsys, twisted_file, remark_file):
    code, _, err = run_cli(["iso", twisted_file, remark_file], capsys)
    assert code == 2 and "field" in err


# realize


def test_realize_function_field_report(capsys):
    code, out, _ = run_cli(["realize", "--field", "FUNCTION_FIELD", "--N", "8"], capsys)
    assert code == 0
    raw = json.loads(out)
    assert raw["passed"] is True
    assert raw["degree_bound"] == 8
    # the q-derivative of x^2 is (t+1)x; the plain derivative of x^3 is 3x^2
    assert raw["matrices"]["d1"][1][2] == "[1,1]|[1]"
    assert raw["matrices"]["d"][2][3] == "[3]|[1]"


def test_realize_rejects_q_one(capsys):
    code, _, err = run_cli(["realize", "--field", "RATIONAL", "--q", "1", "--N", "4"], capsys)
    assert code == 2 and "q = 1" in err


# suite


def test_grid_covers_every_family_and_field_kind():
    rows = grid_scenarios()
    assert len(rows) >= 20
    names = {r["family"]["name"] for r in rows}
    from qdweight.families import FAMILY_NAMES

    assert names == set(FAMILY_NAMES) - {"REMARK_136"}
    kinds = {r["field"]["kind"] for r in rows}
    assert kinds == {"RATIONAL", "FUNCTION_FIELD", "CYCLOTOMIC", "EXT_FIELD"}
    # every scenario validates against the published schema
    import jsonschema

    for r in rows:
        jsonschema.validate(r, SCENARIO_SCHEMA)


def test_suite_report_passes_and_is_deterministic(capsys):
    report = run_suite(42)
    assert report["passed"] is True
    assert report["summary"]["total"] == len(report["rows"])
    again = run_suite(42)
    assert json.dumps(report, sort_keys=True) == json.dumps(again, sort_keys=True)


def test_suite_subprocess_byte_identical_under_fixed_seed(tmp_path):
    env = dict(os.environ, GWA_SEED="42")
    one = subprocess.run(
        [sys.executable, "-m", "qdweight", "suite"], capture_output=True, env=env, check=True
    )
    two = subprocess.run(
        [sys.executable, "-m", "qdweight", "suite"], capture_output=True, env=env, check=True
    )
    assert one.stdout == two.stdout
    report = json.loads(one.stdout)
    assert report["seed"] == 42 and report["passed"] is True


def test_seed_flag_overrides_environment(capsys, monkeypatch):
    monkeypatch.setenv("GWA_SEED", "11")
    assert run_suite(42)["seed"] == 42
    code, out, _ = run_cli(["suite"], capsys)
    assert code == 0 and json.loads(out)["seed"] == 11


def test_bad_gwa_seed_is_a_usage_error(capsys, monkeypatch, twisted_file):
    monkeypatch.setenv("GWA_SEED", "many")
    code, _, err = run_cli(["analyze", twisted_file, "--checks", "decompose"], capsys)
    assert code == 2 and "GWA_SEED" in err


# pretty rendering


def test_pretty_verify_renders_weight_line(capsys, remark_file):
    code, out, _ = run_cli(["--pretty", "verify", remark_file], capsys)
    assert code == 1
    assert "circular weight line of length 6" in out
    assert "tau=" in out and "sigma=" in out
    # arrows carry the operator scalars
    assert 'Y1 <- [  1]: [["0"]]' in out


def test_pretty_suite_table(capsys):
    code, out, _ = run_cli(["--pretty", "suite", "--seed", "0"], capsys)
    assert code == 0
    assert "grid/VQ_B_A/RATIONAL(q=2)" in out
    assert "PASS" in out
