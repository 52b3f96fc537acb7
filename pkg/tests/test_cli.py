"""
Tests for the command-line entry point.
"""
import logging

import pytest

from main_offload import main

SMALL_EXPERIMENT = """\
[network]
n_users = 4
n_files = 10
cache_capacity = 2

[simulation]
trials = 300
placement_draws = 2
"""


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def experiment(tmp_path):
    path = tmp_path / "small.ini"
    path.write_text(SMALL_EXPERIMENT, encoding="utf-8")
    return path


def test_analytic(experiment, capsys):
    assert main(["analytic", "--config", str(experiment)]) == 0
    out = capsys.readouterr().out
    assert "Network offload ratio" in out
    assert "user   3" in out


def test_simulate(experiment, capsys):
    assert main(["simulate", "--config", str(experiment), "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert "Analytic offload ratio" in out
    assert "Simulated offload ratio" in out
    assert "300 trials, seed 4" in out


def test_simulate_needs_seed(experiment):
    with pytest.raises(SystemExit) as info:
        main(["simulate", "--config", str(experiment)])
    assert info.value.code == 2


def test_sweep_speed_writes_csv(experiment, tmp_path, capsys):
    out_path = tmp_path / "out" / "speed.csv"
    code = main(
        ["sweep-speed", "--config", str(experiment), "--seed", "5", "--speed-factors", "1,2", "--out", str(out_path)]
    )
    assert code == 0
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("sweep_name,sweep_value")
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "2"]
    assert (tmp_path / "out" / "speed.csv.meta.json").exists()


def test_bare_output_name_uses_output_dir(experiment, tmp_path, monkeypatch):
    monkeypatch.setenv("D2D_OUTPUT_DIR", str(tmp_path / "results"))
    code = main(
        ["sweep-users", "--config", str(experiment), "--seed", "5", "--user-counts", "3,4", "--out", "users.csv"]
    )
    assert code == 0
    assert (tmp_path / "results" / "users.csv").exists()


def test_trials_override_is_validated(experiment, capsys):
    assert main(["simulate", "--config", str(experiment), "--seed", "1", "--trials", "0"]) == 2
    assert "error[validation]" in capsys.readouterr().err


def test_invalid_experiment(tmp_path, capsys):
    path = tmp_path / "bad.ini"
    path.write_text("[system]\ndeadline_s = 10\n", encoding="utf-8")
    assert main(["analytic", "--config", str(path)]) == 2
    assert "error[validation]" in capsys.readouterr().err


def test_missing_experiment(tmp_path, capsys):
    assert main(["analytic", "--config", str(tmp_path / "absent.ini")]) == 2
    assert "error[parse]" in capsys.readouterr().err


def test_bad_list_argument(experiment):
    with pytest.raises(SystemExit) as info:
        main(["sweep-speed", "--config", str(experiment), "--seed", "1", "--speed-factors", "fast"])
    assert info.value.code == 2


def test_domain_error_exit_code(experiment, capsys):
    code = main(["sweep-speed", "--config", str(experiment), "--seed", "1", "--speed-factors", "1,-1"])
    assert code == 3
    assert "error[domain]" in capsys.readouterr().err
