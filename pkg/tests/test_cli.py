"""
명령행 테스트: main(argv) 종료 코드와 출력 형식
"""
import io
import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from cli import figures, tables
from cli.main import main
from cli.presets import TableId, get_preset
from solvers.linear import linear_potential_table
from utils.file_utils import read_dataframe_csv
from variational.models import AnsatzParams, QuantumState

PROJECT_ROOT = Path(__file__).parent.parent


def _json_lines(text: str):
    return [json.loads(line) for line in text.strip().splitlines()]


class TestEigen:
    def test_linear_fitted(self, capsys):
        assert main(["eigen", "--potential", "power", "--A", "1", "--nu", "1", "--n", "0", "--l", "0",
                     "--d-mode", "fit"]) == 0
        record, = _json_lines(capsys.readouterr().out)
        assert record["E"] == pytest.approx(2.33825, abs=5e-5)
        assert set(record) == {"E", "epsilon", "x", "d", "method", "convention"}
        assert record["method"] == "variational"

    def test_harmonic_minimized(self, capsys):
        assert main(["eigen", "--nu", "2", "--d-mode", "minimize"]) == 0
        record, = _json_lines(capsys.readouterr().out)
        assert record["E"] == pytest.approx(3.0, abs=1e-8)
        assert record["d"] == pytest.approx(2.0, abs=1e-5)

    def test_log_both_methods(self, capsys):
        assert main(["eigen", "--potential", "log", "--n", "0", "--l", "0", "--method", "both"]) == 0
        variational, numerov = _json_lines(capsys.readouterr().out)
        assert variational["method"] == "variational"
        assert variational["E"] == pytest.approx(1.0445, abs=5e-4)
        assert numerov["method"] == "numerov"
        assert numerov["E"] == pytest.approx(1.0443, abs=1e-3)
        assert numerov["x"] is None

    def test_ref11_numerov(self, capsys):
        assert main(["eigen", "--A", str(2 ** 1.7), "--nu", "-0.2", "--sign", "-1",
                     "--convention", "ref11", "--method", "numerov"]) == 0
        record, = _json_lines(capsys.readouterr().out)
        assert record["convention"] == "ref11"
        assert record["E"] == pytest.approx(-2.686, abs=2e-3)

    @pytest.mark.parametrize("argv", [
        ["eigen", "--nu", "1", "--d-mode", "best"],
        ["eigen", "--nu", "1", "--d-mode", "fixed=-2"],
        ["eigen", "--nu", "-3"],
        ["eigen", "--nu", "0.5", "--sign", "-1"],
        ["eigen", "--potential", "power"],
        ["eigen", "--nu", "1", "--n", "-1"],
        ["eigen", "--nu", "1", "--convention", "other"],
        ["unknown"],
    ])
    def test_invalid_flags(self, argv, capsys):
        assert main(argv) == 2

    def test_solver_error(self, capsys):
        assert main(["eigen", "--nu", "0"]) == 3
        assert "DegenerateExponentError" in capsys.readouterr().err

    def test_no_stationary_point(self, capsys):
        assert main(["eigen", "--nu", "-0.5", "--sign", "1"]) == 3
        assert "NoStationaryPointError" in capsys.readouterr().err


class TestTable:
    def test_linear_check_passes(self, capsys):
        assert main(["table", "TABLE3", "--check"]) == 0
        df = read_dataframe_csv(io.StringIO(capsys.readouterr().out))
        assert len(df) == 6
        assert list(df.columns) == tables.TABLE_COLUMNS
        assert df["value_oracle"].tolist() == pytest.approx([2.33811, 4.08795, 5.52056, 6.78671, 7.94413, 9.02265],
                                                             abs=1e-5)

    def test_json_format(self, capsys):
        assert main(["table", "table3", "--format", "json", "--no-oracle"]) == 0
        records = _json_lines(capsys.readouterr().out)
        assert len(records) == 6
        assert records[0]["value_oracle"] is None
        assert records[0]["value_paper"] == 2.33825

    def test_output_file(self, tmp_path):
        out = tmp_path / "table3.csv"
        assert main(["table", "TABLE3", "--out", str(out)]) == 0
        text = out.read_bytes().decode("utf-8")
        assert "\r" not in text
        assert text.splitlines()[0] == ",".join(tables.TABLE_COLUMNS)

    def test_deterministic(self, capsys):
        main(["table", "TABLE3"])
        first = capsys.readouterr().out
        main(["table", "TABLE3"])
        assert capsys.readouterr().out == first

    def test_check_failure_names_cell(self, monkeypatch, capsys):
        monkeypatch.setattr(tables, "variational_value", lambda table_id, cell, convention: cell.this_work + 1.0)
        assert main(["table", "TABLE3", "--check", "--no-oracle", "--workers", "1"]) == 1
        assert "TABLE3 (n=0)" in capsys.readouterr().err

    def test_unknown_table(self, capsys):
        assert main(["table", "TABLE9"]) == 2

    def test_linear_rows_come_from_linear_table(self):
        preset = get_preset(TableId.TABLE3)
        rows = linear_potential_table(5)
        for cell, row in zip(preset.expected, rows):
            assert tables.variational_value(TableId.TABLE3, cell, preset.convention) == row.epsilon_variational
            assert tables.oracle_value(TableId.TABLE3, cell, preset.convention, 0.0) == row.epsilon_exact

    def test_csv_uses_printed_precision(self, capsys):
        assert main(["table", "TABLE3"]) == 0
        header, first = capsys.readouterr().out.splitlines()[:2]
        record = dict(zip(header.split(","), first.split(",")))
        assert record["value_paper"] == "2.33825"
        assert record["value_oracle"] == "2.33811"
        assert len(record["value_this_work"].split(".")[1]) == 5
        assert record["value_literature"] == ""

    def test_printed_erratum_tolerance(self, monkeypatch, capsys):
        computed = {(10, 0): 3.63955}
        monkeypatch.setattr(tables, "variational_value",
                            lambda table_id, cell, convention: computed.get((cell.n, cell.l), cell.this_work))
        assert main(["table", "TABLE5", "--check", "--no-oracle", "--workers", "1"]) == 0
        header, first = capsys.readouterr().out.splitlines()[:2]
        record = dict(zip(header.split(","), first.split(",")))
        assert len(record["value_paper"].split(".")[1]) == 4

        computed[(10, 0)] = 3.6411 + 3e-3
        assert main(["table", "TABLE5", "--check", "--no-oracle", "--workers", "1"]) == 1
        assert "(n=10" in capsys.readouterr().err


class TestWavefunction:
    def test_kinetic_check_flags_short_grid(self, monkeypatch):
        messages = []
        monkeypatch.setattr(figures.logger, "warning", messages.append)
        params = AnsatzParams(x=0.8, d=1.43, state=QuantumState(1, 0), nu=1.0)
        figures._check_kinetic(params, np.linspace(0.005, 20.0, 4000))
        assert messages == []
        figures._check_kinetic(params, np.linspace(0.5, 2.0, 100))
        assert len(messages) == 1

    def test_figure_two(self, tmp_path):
        out = tmp_path / "fig2.csv"
        assert main(["wavefunction", "--figure", "2", "--out", str(out)]) == 0
        df = read_dataframe_csv(out)
        assert list(df.columns) == ["rho", "g_variational", "g_exact_or_numerov"]
        assert len(df) == 500

    def test_explicit_points(self, capsys):
        assert main(["wavefunction", "--potential", "power", "--nu", "1", "--n", "1",
                     "--rmax", "10", "--points", "120"]) == 0
        df = read_dataframe_csv(io.StringIO(capsys.readouterr().out))
        assert len(df) == 120

    @pytest.mark.parametrize("argv", [
        ["wavefunction"],
        ["wavefunction", "--potential", "power", "--rmax", "10"],
        ["wavefunction", "--figure", "6"],
        ["wavefunction", "--potential", "log", "--rmax", "-1"],
    ])
    def test_invalid(self, argv, capsys):
        assert main(argv) == 2


class TestFit:
    def test_too_few_points_is_solver_error(self, capsys):
        assert main(["fit", "--grid-points", "5"]) == 3
        assert "DomainError" in capsys.readouterr().err

    @pytest.mark.slow
    def test_default_grid(self, tmp_path, capsys):
        curve = tmp_path / "d_curve.csv"
        assert main(["fit", "--curve-out", str(curve)]) == 0
        summary, = _json_lines(capsys.readouterr().out)
        assert summary["fitted"]["h"] == pytest.approx(0.0942, rel=0.03)
        assert summary["fitted"]["a3"] == summary["published"]["a3"]
        assert summary["max_residual"] <= 1e-3
        assert summary["warnings"] == []
        df = read_dataframe_csv(curve)
        assert list(df.columns) == ["nu", "d_min", "d_fitted_paper", "d_fitted_refit"]
        assert len(df) == 24


def test_run_script():
    cp = subprocess.run(
        [sys.executable, str(PROJECT_ROOT / "run.py"), "eigen", "--nu", "1"],
        capture_output=True, text=True, cwd=PROJECT_ROOT,
    )
    assert cp.returncode == 0, cp.stderr
    assert json.loads(cp.stdout)["E"] == pytest.approx(2.33825, abs=5e-5)
