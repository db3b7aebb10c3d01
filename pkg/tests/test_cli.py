import json

import pytest

jsonschema = pytest.importorskip("jsonschema")

from qesolver.cli import main
from qesolver.tables import load_reference


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema():
    from importlib import resources

    with resources.files("qesolver.data").joinpath("output.schema.json").open() as fh:
        return json.load(fh)


class TestSolve:
    def test_clh_text(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--family", "clh", "--a", "8", "--b", "1", "--c", "1/32",
            "--D", "3", "--ell", "1",
        )
        assert code == 0
        assert "E=-7.375" in out

    def test_clh_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--family", "clh", "--a", "4", "--b", "1", "--c", "1/32",
            "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, load_schema())
        assert doc["command"] == "solve"
        assert doc["results"][0]["E"] == -7.625
        assert doc["inputs"]["c"] == 1.0 / 32

    def test_sextic_two_records(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--family", "sextic", "--mu", "0.5",
            "--lambda", "3.1622776601683795", "--eta", "0.5", "--k", "3", "--p", "1",
            "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert len(doc["results"]) == 2
        energies = [rec["E"] for rec in doc["results"]]
        assert energies == sorted(energies)

    def test_harmonic_and_coulomb(self, capsys):
        code, out, _ = run(capsys, "solve", "--family", "harmonic", "--mu", "0.5", "--n", "1")
        assert code == 0
        assert "E=3.5" in out
        code, out, _ = run(capsys, "solve", "--family", "coulomb", "--Z", "1", "--n", "0")
        assert code == 0
        assert "E=-0.5" in out

    def test_constraint_violation_exit_2(self, capsys):
        code, _, err = run(
            capsys, "solve", "--family", "clh", "--a", "5", "--b", "1", "--c", "1/32",
        )
        assert code == 2
        assert "constraint" in err

    def test_solver_failure_exit_3(self, capsys):
        code, _, err = run(capsys, "solve", "--family", "harmonic", "--mu", "0")
        assert code == 3

    def test_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--family", "bogus"])
        assert exc.value.code == 1


class TestTransform:
    def test_reference_row(self, capsys):
        code, out, _ = run(
            capsys, "transform", "--family", "clh", "--a", "8", "--b", "1", "--c", "1/32",
            "--D", "3", "--ell", "1", "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        rec = doc["results"][0]
        assert rec["mu"] == 1
        assert rec["D_prime"] == 2
        assert rec["L"] == 3
        assert rec["k_prime"] == 8
        assert rec["E_hat"] == pytest.approx(5.8916775545493, rel=1e-12)

    def test_wrong_family(self, capsys):
        code, _, err = run(capsys, "transform", "--family", "coulomb", "--Z", "1")
        assert code == 3


class TestVerify:
    def test_clh_row_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--family", "clh", "--a", "4", "--b", "1", "--c", "1/32",
            "--assert-energy", "-7.625",
        )
        assert code == 0
        assert "[PASS] oracle" in out
        assert "[PASS] duality" in out
        assert "[FAIL]" not in out

    def test_wrong_assertion_exit_4(self, capsys):
        code, out, err = run(
            capsys, "verify", "--family", "clh", "--a", "4", "--b", "1", "--c", "1/32",
            "--assert-energy", "-7.0",
        )
        assert code == 4
        assert "[FAIL] assert_energy" in out

    def test_json_checks_validate(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--family", "harmonic", "--mu", "0.5", "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, load_schema())
        assert all(chk["passed"] for chk in doc["checks"].values())


class TestTable:
    def test_csv_byte_stable(self, capsys):
        outs = []
        for _ in range(2):
            code, out, _ = run(capsys, "table", "2", "--output", "csv")
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]
        header = outs[0].splitlines()[0]
        assert header == "potential,ell,present,exact"
        assert outs[0].splitlines()[-1].startswith("max_abs_deviation")

    def test_table1_headers(self, capsys):
        _, out, _ = run(capsys, "table", "1", "--output", "csv")
        assert out.splitlines()[0] == "a,b,c,ell,D,present,exact"

    def test_table3_has_hill_column(self, capsys):
        _, out, _ = run(capsys, "table", "3", "--output", "csv")
        assert out.splitlines()[0] == "potential,ell,present,hill,exact"

    def test_longdouble_mode(self, capsys):
        code, out, _ = run(capsys, "table", "2", "--output", "csv", "--precision", "longdouble")
        assert code == 0

    def test_json_matches_golden(self, capsys):
        _, out, _ = run(capsys, "table", "2", "--output", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, load_schema())
        golden = load_reference()["table2"]["rows"]
        for rec, g in zip(doc["results"], golden):
            assert rec["present"] == pytest.approx(g["present"], abs=1e-10)


class TestConfig:
    def test_config_file_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "qes.cfg"
        cfg.write_text("b = 1\nc = 1/32  # rationals allowed\n")
        code, out, _ = run(
            capsys, "solve", "--family", "clh", "--a", "4", "--config", str(cfg),
        )
        assert code == 0
        assert "E=-7.625" in out

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "qes.cfg"
        cfg.write_text("a = 999\nb = 1\nc = 1/32\n")
        code, out, _ = run(
            capsys, "solve", "--family", "clh", "--a", "4", "--config", str(cfg),
        )
        assert code == 0
        assert "E=-7.625" in out

    def test_env_var_config(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "qes.cfg"
        cfg.write_text("b = 1\nc = 1/32\n")
        monkeypatch.setenv("QES_CONFIG", str(cfg))
        code, out, _ = run(capsys, "solve", "--family", "clh", "--a", "4")
        assert code == 0
        assert "E=-7.625" in out

    def test_missing_config_usage_error(self, capsys):
        code, _, err = run(
            capsys, "solve", "--family", "clh", "--a", "4", "--config", "/nonexistent/qes.cfg",
        )
        assert code == 1


def test_float_formatting_deterministic(capsys):
    """JSON floats are emitted at 17 significant digits, round-trip exact."""
    _, out, _ = run(capsys, "table", "3", "--output", "json")
    doc = json.loads(out)
    recomputed = json.loads(out)
    assert doc == recomputed
    value = doc["results"][0]["present"]
    assert value == pytest.approx(4.3817804600412, rel=1e-12)
