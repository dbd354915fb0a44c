"""The command-line surface: exit codes, byte-identical reports,
output formats, and the stored-graph product pipeline."""

import json
from pathlib import Path

import pytest

from ringgraph import cli

SESSIONS = Path(__file__).resolve().parent.parent / "sessions"
NODAL = str(SESSIONS / "nodal_curve.rg")
PLANES = str(SESSIONS / "two_disjoint_planes.rg")
FOUR_CYCLE = str(SESSIONS / "four_cycle_of_planes.rg")
SURFACE = str(SESSIONS / "surface_with_two_planes_over_a_line.rg")


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestExitCodes:
    def test_computed_is_zero(self, capsys):
        code, out, _ = run(capsys, "dim", "--session", NODAL, "I")
        assert code == 0
        assert json.loads(out)["verdicts"]["dimension"] == 1

    def test_missing_session_file_is_refused(self, capsys):
        code, _, err = run(capsys, "dim", "--session", "/no/such/file.rg", "I")
        assert code == 2
        assert "refused" in err

    def test_session_syntax_error_is_refused(self, tmp_path, capsys):
        bad = tmp_path / "bad.rg"
        bad.write_text("field Q;\nring R = [x, y];\nideal I = (x+*y);\n")
        code, _, err = run(capsys, "dim", "--session", str(bad), "I")
        assert code == 2
        assert "refused" in err
        assert "3:" in err

    def test_unknown_name_is_refused(self, capsys):
        code, _, err = run(capsys, "dim", "--session", NODAL, "NOPE")
        assert code == 2
        assert "refused" in err

    def test_zerodivisor_denominator_is_refused(self, capsys):
        code, _, err = run(capsys, "s2member", "--session", NODAL, "R", "x / (x - y)")
        assert code == 2
        assert "refused" in err

    def test_internal_error_is_one(self, capsys, monkeypatch):
        def boom(args):
            raise RuntimeError("wires crossed")

        monkeypatch.setattr(cli, "_dispatch", boom)
        code, _, err = run(capsys, "dim", "--session", NODAL, "I")
        assert code == 1
        assert "internal error" in err
        assert "RuntimeError" in err

    def test_missing_required_argument_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["dim", "I"])
        assert exc.value.code == 2


class TestDeterminism:
    def test_byte_identical_reports(self, capsys):
        _, first, _ = run(capsys, "gamma", "--session", PLANES, "R")
        _, second, _ = run(capsys, "gamma", "--session", PLANES, "R")
        assert first == second
        assert first.endswith("\n")

    def test_timing_flag_only_touches_timing(self, capsys):
        plain = run_json(capsys, "connected", "--session", NODAL, "R")
        timed = run_json(capsys, "connected", "--session", NODAL, "R", "--timing")
        assert plain["timing_ms"] is None
        assert isinstance(timed["timing_ms"], (int, float))
        timed["timing_ms"] = None
        assert plain == timed


class TestFormats:
    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "connected", "--session", NODAL, "R", "--format", "text"
        )
        assert code == 0
        assert out.startswith("command: connected\n")
        assert "connected: true" in out

    def test_dot_format_for_graph_commands(self, capsys):
        code, out, _ = run(
            capsys, "gamma", "--session", FOUR_CYCLE, "R", "--format", "dot"
        )
        assert code == 0
        assert out.startswith("graph gamma {")

    def test_dot_refused_elsewhere(self, capsys):
        code, _, err = run(
            capsys, "connected", "--session", NODAL, "R", "--format", "dot"
        )
        assert code == 2
        assert "graph commands" in err


class TestCommands:
    def test_gb_needs_known_order(self, capsys):
        code, _, err = run(capsys, "gb", "--session", NODAL, "I", "degrevlexx")
        assert code == 2
        assert "order" in err

    def test_gb_with_elimination_block(self, capsys):
        doc = run_json(capsys, "gb", "--session", NODAL, "I", "elim:1")
        assert doc["verdicts"]["basis"] == ["x^2 - y^2"]
        assert doc["verdicts"]["is_unit"] is False

    def test_minprimes_prefers_session_assertion(self, capsys):
        doc = run_json(capsys, "minprimes", "--session", NODAL, "I")
        assert doc["verdicts"]["count"] == 2
        assert doc["provenance"]["primes"] == "asserted"

    def test_minprimes_forced_computation(self, capsys):
        doc = run_json(
            capsys, "minprimes", "--session", NODAL, "I", "--strategy", "split"
        )
        assert doc["provenance"]["primes"] == "computed-split"
        assert {tuple(p) for p in doc["verdicts"]["primes"]} == {
            ("x - y",),
            ("x + y",),
        }

    def test_minprimes_asserted_strategy_needs_assertion(self, capsys):
        doc = run_json(
            capsys, "minprimes", "--session", FOUR_CYCLE, "I", "--strategy", "monomial"
        )
        assert doc["verdicts"]["count"] == 4
        code, _, err = run(
            capsys, "minprimes", "--session", FOUR_CYCLE, "I", "--strategy", "asserted"
        )
        assert code == 2
        assert "asserted" in err

    def test_kernel_command(self, tmp_path, capsys):
        session = tmp_path / "cusp.rg"
        session.write_text(
            "field Q;\nring A = [a, b];\nring S = [t];\n"
            "map phi : A -> S { a -> t^2, b -> t^3 };\n"
        )
        doc = run_json(capsys, "kernel", "--session", str(session), "phi")
        assert doc["verdicts"]["kernel"] == ["a^3 - b^2"]

    def test_contract_command(self, capsys):
        doc = run_json(capsys, "contract", "--session", SURFACE, "Q1", "phi")
        assert doc["verdicts"]["contraction"] == ["b", "c", "d", "e"]

    def test_disconnection_command(self, capsys):
        doc = run_json(capsys, "disconnection", "--session", PLANES, "R")
        assert doc["verdicts"]["disconnection_exists"] is True
        assert doc["provenance"]["disconnection_exists"] == "asserted"
        sides = {
            frozenset(doc["witnesses"]["side_a_intersection"]),
            frozenset(doc["witnesses"]["side_b_intersection"]),
        }
        assert sides == {frozenset({"x", "y"}), frozenset({"z", "w"})}

    def test_punctured_command(self, capsys):
        doc = run_json(capsys, "punctured", "--session", FOUR_CYCLE, "R", "I")
        assert doc["verdicts"]["connected"] is True
        assert len(doc["witnesses"]["vertices"]) == 4

    def test_hl_command(self, tmp_path, capsys):
        session = tmp_path / "poly.rg"
        session.write_text(
            "field Q;\nring A = [x, y, z];\nideal Z = (0);\nring R = A / Z;\n"
            "ideal M = (x, y, z);\nideal L = (x, y);\n"
        )
        full = run_json(capsys, "hl", "--session", str(session), "R", "M")
        assert full["verdicts"]["nonvanishing"] is True
        partial = run_json(capsys, "hl", "--session", str(session), "R", "L")
        assert partial["verdicts"]["nonvanishing"] is False

    def test_s2member_command(self, capsys):
        doc = run_json(capsys, "s2member", "--session", PLANES, "R", "x / (x + z)")
        assert doc["verdicts"]["member"] is True
        assert doc["verdicts"]["height"] == "2"

    def test_s2local_command(self, capsys):
        doc = run_json(capsys, "s2local", "--session", PLANES, "R")
        assert doc["verdicts"]["connected"] is False
        assert doc["verdicts"]["status"] == "disconnected"
        doc = run_json(capsys, "s2local", "--session", FOUR_CYCLE, "R")
        assert doc["verdicts"]["connected"] is True

    def test_faltings_smoke(self, capsys):
        doc = run_json(capsys, "faltings", "--trials", "2", "--seed", "11")
        assert doc["verdicts"]["ok"] is True
        assert doc["verdicts"]["passed"] == 2
        assert doc["inputs"]["seed"] == 11

    def test_faltings_rejects_nonpositive_trials(self, capsys):
        code, _, err = run(capsys, "faltings", "--trials", "0", "--seed", "1")
        assert code == 2
        assert "positive" in err


class TestStoredGraphs:
    def write_gamma(self, capsys, tmp_path, session, name, fmt):
        code, out, _ = run(
            capsys, "gamma", "--session", session, "R", "--format", fmt
        )
        assert code == 0
        target = tmp_path / name
        target.write_text(out)
        return str(target)

    def test_product_of_json_reports(self, tmp_path, capsys):
        g1 = self.write_gamma(capsys, tmp_path, FOUR_CYCLE, "c4.json", "json")
        g2 = self.write_gamma(capsys, tmp_path, NODAL, "k2.json", "json")
        doc = run_json(capsys, "product-gamma", g1, g2)
        assert doc["verdicts"]["vertex_count"] == 8
        assert doc["verdicts"]["edge_count"] == 12
        assert doc["verdicts"]["connected"] is True

    def test_product_of_dot_files(self, tmp_path, capsys):
        g1 = self.write_gamma(capsys, tmp_path, FOUR_CYCLE, "c4.dot", "dot")
        g2 = self.write_gamma(capsys, tmp_path, NODAL, "k2.dot", "dot")
        doc = run_json(capsys, "product-gamma", g1, g2)
        assert doc["verdicts"]["vertex_count"] == 8
        assert doc["verdicts"]["edge_count"] == 12

    def test_disconnected_product(self, tmp_path, capsys):
        g1 = self.write_gamma(capsys, tmp_path, PLANES, "pl.json", "json")
        g2 = self.write_gamma(capsys, tmp_path, NODAL, "k2.json", "json")
        doc = run_json(capsys, "product-gamma", g1, g2)
        assert doc["verdicts"]["connected"] is False

    def test_missing_graph_file_refused(self, tmp_path, capsys):
        g1 = self.write_gamma(capsys, tmp_path, NODAL, "k2.json", "json")
        code, _, err = run(capsys, "product-gamma", g1, str(tmp_path / "gone.json"))
        assert code == 2
        assert "refused" in err
