import json
from pathlib import Path

import jsonschema

from binforms.cli import main

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schemas" / "cli-output.schema.json"
SCHEMA = json.loads(SCHEMA_PATH.read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def validate(payload, section):
    jsonschema.validate(payload, {**SCHEMA, "oneOf": [{"$ref": f"#/$defs/{section}"}]})


class TestAnalyze:
    def test_sextic_pair(self, capsys):
        code, out, _ = run(capsys, "analyze", "6*x^5*y + 6*x*y^5")
        assert code == 0
        assert "(2,3) proven" in out and "(3,2) proven" in out
        assert "achieved 5" in out

    def test_diagonal_quartic(self, capsys):
        code, out, _ = run(capsys, "analyze", "x^4 + y^4")
        assert code == 0
        assert "(2,0) proven" in out and "achieved 2" in out

    def test_split_quartic(self, capsys):
        code, out, _ = run(capsys, "analyze", "x^2*y^2")
        assert code == 0
        assert "(2,2) proven" in out and "splits: yes" in out

    def test_parse_error_exit1(self, capsys):
        code, _, err = run(capsys, "analyze", "x^2 + ")
        assert code == 1 and "error" in err

    def test_odd_degree_exit2(self, capsys):
        code, _, err = run(capsys, "analyze", "x^3")
        assert code == 2

    def test_zero_form_exit2(self, capsys):
        code, _, err = run(capsys, "analyze", "x^2 - x^2")
        assert code == 2

    def test_json_schema_and_determinism(self, capsys):
        code, out1, _ = run(capsys, "analyze", "6*x^5*y + 6*x*y^5", "--output", "json")
        assert code == 0
        payload = json.loads(out1)
        validate(payload, "analyze")
        _, out2, _ = run(capsys, "analyze", "6*x^5*y + 6*x*y^5", "--output", "json")
        assert out1 == out2

    def test_env_output_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BINFORMS_OUTPUT", "json")
        code, out, _ = run(capsys, "analyze", "x^4 + y^4")
        assert code == 0
        json.loads(out)


class TestDecompose:
    def test_split_family(self, capsys):
        code, out, _ = run(capsys, "decompose", "6*x^5*y + 20*x^3*y^3 + 6*x*y^5")
        assert code == 0
        assert "badge: (1,1)" in out
        assert "coeff 1/2" in out and "coeff -1/2" in out

    def test_monomial(self, capsys):
        code, out, _ = run(capsys, "decompose", "24*y^4")
        assert code == 0
        assert "badge: (1,0)" in out

    def test_algebraic_intervals(self, capsys):
        code, out, _ = run(capsys, "decompose", "6*x^5*y + 40*x^3*y^3 + 6*x*y^5")
        assert code == 0
        assert "certified-intervals" in out and "badge: (2,2)" in out

    def test_json_valid(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "6*x^5*y + 40*x^3*y^3 + 6*x*y^5", "-o", "json"
        )
        assert code == 0
        validate(json.loads(out), "decompose")


REP_JSON = {
    "degree": 4,
    "terms": [
        {"coeff": "1", "form": ["1", "2"]},
        {"coeff": "-4", "form": ["1", "1"]},
        {"coeff": "6", "form": ["1", "0"]},
        {"coeff": "-4", "form": ["1", "-1"]},
        {"coeff": "1", "form": ["1", "-2"]},
    ],
}

SEXTIC_REP_JSON = {
    "degree": 6,
    "terms": [
        {"coeff": "1296", "form": ["1", "1"]},
        {"coeff": "-567", "form": ["1", "2"]},
        {"coeff": "112", "form": ["1", "3"]},
        {"coeff": "-1", "form": ["1", "-6"]},
        {"coeff": "-840", "form": ["1", "0"]},
    ],
}


class TestVerify:
    def test_quartic_identity(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(REP_JSON))
        code, out, _ = run(capsys, "verify", str(path), "24*y^4")
        assert code == 0
        assert "tau=4 sigma=4" in out

    def test_sextic_identity(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(SEXTIC_REP_JSON))
        code, out, _ = run(
            capsys, "verify", str(path), "3024*x^5*y + 108864*x*y^5"
        )
        assert code == 0

    def test_corrupted_coefficient_fails(self, capsys, tmp_path):
        bad = json.loads(json.dumps(SEXTIC_REP_JSON))
        bad["terms"][2]["coeff"] = "113"
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run(
            capsys, "verify", str(path), "3024*x^5*y + 108864*x*y^5"
        )
        assert code == 1
        assert "first differing" in out

    def test_json_output(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(REP_JSON))
        code, out, _ = run(capsys, "verify", str(path), "24*y^4", "-o", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "verify")
        assert payload["certificate"] == {"tau": 4, "sigma": 4, "ok": True}


class TestSweep:
    def test_family_matches_oracle(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep",
            "--family",
            "6*x^5*y + 20*t*x^3*y^3 + 6*x*y^5",
            "--grid=-1,-3/10,1/2,1,2",
            "--limit",
            "0",
        )
        assert code == 0
        assert "t=-1: {(3,3)}" in out
        assert "t=-3/10: {(2,3), (3,2)}" in out
        assert "t=1: {(1,1)}" in out
        assert "limit t=0: {(2,3), (3,2)}" in out

    def test_quartic_jump_flags(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep",
            "--family",
            "t*x^4 + 6*x^2*y^2 + t*y^4",
            "--grid",
            "1/2,1/4,1/8",
            "--limit",
            "0",
        )
        assert code == 0
        assert out.count("jump=up") == 3

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep",
            "--family",
            "t*x^4 + 6*x^2*y^2 + t*y^4",
            "--grid",
            "1/2,1/4",
            "--limit",
            "0",
            "-o",
            "json",
        )
        assert code == 0
        validate(json.loads(out), "sweep")

    def test_parallel_rows_match_serial(self, capsys):
        argv = [
            "sweep",
            "--family",
            "6*x^5*y + 20*t*x^3*y^3 + 6*x*y^5",
            "--grid",
            "1/2,1,2",
            "--limit",
            "0",
            "-o",
            "json",
        ]
        code1, serial, _ = run(capsys, *argv)
        code2, parallel, _ = run(capsys, *argv, "--jobs", "2")
        assert code1 == code2 == 0
        assert serial == parallel

    def test_row_error_embedded(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep",
            "--family",
            "t*x^4 + 6*x^2*y^2 + y^3*y^1",
            "--grid",
            "0,1",
        )
        # family itself parses (homogeneous); all rows run
        assert code in (0, 3)


class TestFixtures:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == 0
        assert "FAIL" not in out
        lines = [l for l in out.splitlines() if l.startswith("PASS")]
        assert len(lines) >= 25

    def test_filter(self, capsys):
        code, out, _ = run(capsys, "fixtures", "--filter", "thm-4.4")
        assert code == 0
        body = [l for l in out.splitlines() if l.startswith("PASS")]
        assert 0 < len(body) < 30

    def test_bad_filter_exit1(self, capsys):
        code, _, err = run(capsys, "fixtures", "--filter", "no-such-fixture")
        assert code == 1

    def test_corrupted_fixture_exit1(self, capsys, monkeypatch):
        import binforms.fixtures as fx

        broken = fx.Fixture(
            fx.FIXTURES[0].id,
            fx.FIXTURES[0].anchor,
            fx.FIXTURES[0].kind,
            lambda cfg: (False, "deliberately corrupted"),
        )
        monkeypatch.setattr(fx, "FIXTURES", [broken] + fx.FIXTURES[1:])
        code, out, _ = run(capsys, "fixtures")
        assert code == 1
        assert "FAIL" in out


class TestInconclusive:
    def test_budget_zero_exit3(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "6*x^5*y + 6*x*y^5", "--search-budget", "0"
        )
        assert code == 3
        assert "observed" in out or "no" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "fixtures", "-o", "json", "--filter", "eq-1.2")
        assert code == 0
        validate(json.loads(out), "fixtures")
