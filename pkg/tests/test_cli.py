import json
from pathlib import Path

import pytest

from gcodes.checks import build_report, emit_report, run_check
from gcodes.cli import main
from gcodes.corpus import corpus_generate
from gcodes.errors import AssumptionViolated, ParseError, UnknownCheck
from gcodes.scenario import parse_scenario, scenario_from_dict

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def load(name):
    return json.loads((SCENARIOS / name).read_text())


def test_loader_echo():
    s = parse_scenario(SCENARIOS / "s1.json")
    assert (s.R.modulus, s.G.n, s.G.order, s.ambient.t) == (2, 3, 3, 1)
    assert s.conductor == 8


def test_loader_rejects_non_unit_group():
    with pytest.raises(AssumptionViolated, match="not a unit"):
        parse_scenario(SCENARIOS / "z2_s3_not_unit.json")


@pytest.mark.parametrize("patch,where", [
    ({"forms": [{"gram": [["1/0"]]}]}, "forms[0].gram[0][0]"),
    ({"ring": {"modulus": "two"}}, "ring.modulus"),
    ({"codes": [{"generators": [[1, 1]]}]}, "codes[0].generators[0]"),
    ({"quadratic": [{"table": ["0"]}]}, "quadratic[0]"),
    ({"group": {"degree": 3, "generators": [[1, 1, 2]]}}, None),
])
def test_parse_errors_carry_a_location(patch, where):
    data = {**load("s1.json"), **patch}
    with pytest.raises(Exception) as exc:
        scenario_from_dict(data, "x.json")
    if where:
        assert isinstance(exc.value, ParseError) and where in str(exc.value)


def test_run_check_examples():
    s = parse_scenario(SCENARIOS / "s1.json")
    assert [r["status"] for r in run_check(s, "macwilliams-hwe")] == ["ok"]
    with pytest.raises(UnknownCheck):
        run_check(s, "no-such")
    s4 = parse_scenario(SCENARIOS / "s4_type1.json")
    (r,) = run_check(s4, "conjecture")
    assert r["status"] == "ok" and (r["payload"]["dim_fwe_span"], r["payload"]["dim_fixed"]) == (1, 1)


def test_corpus_generate_examples():
    names = [d["name"] for d in corpus_generate([2], 2)]
    assert all(n.startswith(("m2-n1-g0", "m2-n2-g0")) for n in names)
    groups3 = {(d["group"]["degree"], len(d["group"]["generators"])) for d in corpus_generate([3], 2)}
    assert (2, 1) in groups3
    assert corpus_generate([], 4) == []


def test_verify_exit_codes(capsys):
    assert main(["verify", "--scenario", str(SCENARIOS / "s1.json")]) == 0
    assert main(["verify", "--scenario", str(SCENARIOS / "z6_degenerate.json")]) == 1
    assert main(["verify", "--scenario", str(SCENARIOS / "z2_s3_not_unit.json")]) == 2
    assert main(["verify", "--scenario", str(SCENARIOS / "s1.json"), "--check", "no-such"]) == 2
    assert main(["verify", "--scenario", str(SCENARIOS / "s4_type1.json"), "--check", "parainv",
                 "--cap-ambient", "2"]) == 3
    assert main(["verify"]) == 2
    capsys.readouterr()


def test_verify_all_and_text(capsys):
    assert main(["verify", "--scenario", str(SCENARIOS / "s1.json"), "--check", "all", "--emit", "text",
                 "--timings"]) == 0
    out = capsys.readouterr().out
    assert "scenario S1" in out and "timings:" in out
    assert "macwilliams-fwe" in out


def test_json_has_no_timings_and_is_sorted(capsys):
    main(["verify", "--scenario", str(SCENARIOS / "s1.json")])
    out = capsys.readouterr().out
    report = json.loads(out)
    assert "timings" not in out
    assert out == json.dumps(report, sort_keys=True, indent=2) + "\n"


def test_findings_do_not_fail_the_run(capsys):
    assert main(["verify", "--scenario", str(SCENARIOS / "z4_ru.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"][0]["status"] == "finding"


def test_mismatch_sets_exit_status(monkeypatch):
    import gcodes.checks as checks
    from gcodes.results import CheckResult

    monkeypatch.setitem(checks.SCENARIO_CHECKS, "ru-lemma", lambda s: CheckResult("ru-lemma", "mismatch", {}))
    s = parse_scenario(SCENARIOS / "z4_ru.json")
    assert build_report(s)["summary"]["exit_status"] == 1


def test_idempotents_command(capsys):
    assert main(["idempotents", "--modulus", "6"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {(a["iota"], a["mu"], a["nu"]) for a in out["accepted"]} == {(0, 0, 0), (1, 1, 1), (3, 3, 3), (4, 2, 2)}
    assert main(["idempotents", "--modulus", "4", "--involution", "0,2,1,3"]) == 2


def test_corpus_command(capsys, tmp_path):
    assert main(["corpus", "--modulus-list", "2,3", "--max-n", "2", "--run", "--write-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "mismatch" not in out
    files = sorted(p.name for p in tmp_path.iterdir())
    assert "m3-n2-g1-phi0.json" in files
    s = parse_scenario(tmp_path / "m3-n2-g1-phi0.json")
    assert s.G.order == 2


@pytest.mark.parametrize("name", sorted(p.name for p in SCENARIOS.glob("*.json") if p.name != "z2_s3_not_unit.json"))
def test_reports_are_byte_identical(name):
    a = emit_report(build_report(parse_scenario(SCENARIOS / name)))
    b = emit_report(build_report(parse_scenario(SCENARIOS / name)))
    assert a == b


def test_malformed_json_reports_line_and_column(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "ring": {"modulus": 2},\n  "group": oops\n}\n')
    with pytest.raises(ParseError, match=r"bad\.json:3:12"):
        parse_scenario(bad)
    assert main(["verify", "--scenario", str(bad)]) == 2
    assert "ParseError" in capsys.readouterr().err
