"""Tests for the command-line interface and its exit codes."""

import numpy as np
import pytest

from puinterp import cli, experiment
from puinterp.partition import AssembleError

FAST = ["--eval-per-axis", "20", "--threads", "1"]


def test_run_success(capsys, tmp_path):
    out = tmp_path / "rec.csv"
    code = cli.main(["run", "--domain", "disk", "--dim", "2", "--k-level", "1",
                     "--out", str(out)] + FAST)
    assert code == 0
    printed = capsys.readouterr().out
    assert "domain=disk" in printed and "n=80" in printed
    recs = experiment.read_records(str(out))
    assert len(recs) == 1 and recs[0].n == 80


def test_run_explicit_n(capsys):
    code = cli.main(["run", "--domain", "cube", "--dim", "2", "--n", "256"] + FAST)
    assert code == 0
    assert "n=256" in capsys.readouterr().out


def test_table_with_outputs(capsys, tmp_path):
    out, fig = tmp_path / "t.csv", tmp_path / "t.png"
    code = cli.main(["table", "--domain", "triangle", "--dim", "2",
                     "--max-n", "500", "--out", str(out), "--fig", str(fig)] + FAST)
    assert code == 0
    printed = capsys.readouterr().out
    assert "RMSE" in printed
    assert len(experiment.read_records(str(out))) == 3
    assert fig.stat().st_size > 1000


def test_sweep_with_outputs(capsys, tmp_path):
    out, fig = tmp_path / "s.csv", tmp_path / "s.png"
    code = cli.main(["sweep", "--domain", "disk", "--dim", "2", "--k-level", "1",
                     "--samples", "4", "--shape-min", "0.2", "--shape-max", "2",
                     "--out", str(out), "--fig", str(fig)] + FAST)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "kernel_shape,rmse" and len(lines) == 5
    assert fig.stat().st_size > 1000
    assert "best RMSE" in capsys.readouterr().out


def test_field_with_figure(tmp_path):
    out, fig = tmp_path / "f.csv", tmp_path / "f.png"
    code = cli.main(["field", "--domain", "hexagon", "--dim", "2", "--k-level", "1",
                     "--out", str(out), "--fig", str(fig)] + FAST)
    assert code == 0
    assert out.read_text().startswith("x1,x2,f,interp,abserr")
    assert fig.stat().st_size > 1000


def test_field_3d_figure(tmp_path):
    out, fig = tmp_path / "f3.csv", tmp_path / "f3.png"
    code = cli.main(["field", "--domain", "pyramid", "--dim", "3", "--k-level", "1",
                     "--out", str(out), "--fig", str(fig)] + FAST)
    assert code == 0
    assert out.read_text().startswith("x1,x2,x3,f,interp,abserr")
    assert fig.stat().st_size > 1000


def test_hull_domain(tmp_path, capsys):
    hull = tmp_path / "tri.hull"
    hull.write_text("2 3\n0 -1 0\n-2 1 0\n2 1 2\n")
    code = cli.main(["run", "--domain", f"hull:{hull}", "--dim", "2",
                     "--k-level", "1"] + FAST)
    assert code == 0
    assert "n=51" in capsys.readouterr().out


def test_config_errors_exit_1(capsys):
    assert cli.main(["run", "--domain", "nosuch", "--dim", "2", "--k-level", "1"]) == 1
    assert "unknown shape" in capsys.readouterr().err
    assert cli.main(["run", "--domain", "disk", "--dim", "2", "--k-level", "0"]) == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["run", "--domain", "disk", "--dim", "2"])  # missing density
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["run", "--domain", "disk", "--dim", "5", "--k-level", "1"])
    assert exc.value.code == 1


def test_numeric_failure_exit_2(monkeypatch, capsys):
    def boom(config):
        raise AssembleError(3, "synthetic failure")

    monkeypatch.setattr(experiment, "run_experiment", boom)
    code = cli.main(["run", "--domain", "disk", "--dim", "2", "--k-level", "1"] + FAST)
    assert code == 2
    assert "subdomain 3" in capsys.readouterr().err


def test_io_failure_exit_3(capsys):
    code = cli.main(["field", "--domain", "disk", "--dim", "2", "--k-level", "1",
                     "--out", "/nonexistent-dir/x.csv"] + FAST)
    assert code == 3


def test_stage_error_maps_to_cause(tmp_path, capsys):
    thin = tmp_path / "thin.hull"
    thin.write_text("2 2\n1 0 0.5000002\n-1 0 -0.5000001\n")
    code = cli.main(["run", "--domain", f"hull:{thin}", "--dim", "2",
                     "--k-level", "1"] + FAST)
    assert code == 1
    assert "generate" in capsys.readouterr().err
