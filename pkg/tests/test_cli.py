"""Command-line behaviour: parsing, exit codes, CSV round-trips."""

import json
import shutil
import subprocess
import sys

import numpy as np
import pytest

from marswpt.cli import CSV_COLUMNS, main, read_sweep_csv, rows_to_csv
from marswpt.harvester import HARVESTER_C, efficiency_percent
from marswpt.link import LinkScenario, MonteCarloSettings, estimate_harvest, median_received_dbm
from marswpt.harvester import harvester_preset, read_model_file
from marswpt.sweep import SweepSpec, run_sweep


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# link


def test_link_reports_median_budget(capsys):
    code, out, _ = run_cli(capsys, "link", "--n-samples", "200", "--harvester", "C")
    assert code == 0
    assert "median received power: -10.663 dBm" in out
    assert "path_loss_db" in out
    assert "harvester C:" in out


def test_link_json_matches_api(capsys):
    code, out, _ = run_cli(
        capsys, "link", "--json", "--n-samples", "500", "--seed", "9", "--harvester", "A"
    )
    assert code == 0
    report = json.loads(out)
    assert report["median_p_rx_dbm"] == median_received_dbm(LinkScenario())
    assert set(report["harvesters"]) == {"A"}

    expected = estimate_harvest(
        LinkScenario(), harvester_preset("A"), MonteCarloSettings(n_samples=500, seed=9)
    )
    mc_part = report["harvesters"]["A"]["monte_carlo"]
    assert mc_part["mean_uw"] == expected.mean_uw
    assert mc_part["median_uw"] == expected.median_uw
    assert mc_part["clamp_count"] == expected.clamp_count
    assert mc_part["seed"] == 9

    total = sum(report["budget_terms_db"].values())
    assert total == pytest.approx(report["median_p_rx_dbm"], abs=1e-9)


def test_link_flag_overrides(capsys):
    code, out, _ = run_cli(
        capsys, "link", "--json", "--p-tx-w", "20", "--harvester", "none", "--n-samples", "10"
    )
    assert code == 0
    report = json.loads(out)
    assert report["median_p_rx_dbm"] == pytest.approx(-7.652835339008263, abs=1e-9)
    assert report["harvesters"] == {}

    code, out, _ = run_cli(
        capsys, "link", "--json", "--area", "area2", "--harvester", "none", "--n-samples", "10"
    )
    assert code == 0
    assert json.loads(out)["median_p_rx_dbm"] == pytest.approx(-19.93944842013488, abs=1e-9)


def test_link_requested_quantiles(capsys):
    code, out, _ = run_cli(
        capsys, "link", "--json", "--quantiles", "0.1,0.9",
        "--n-samples", "400", "--harvester", "C",
    )
    assert code == 0
    quantiles = json.loads(out)["harvesters"]["C"]["monte_carlo"]["quantiles_uw"]
    assert set(quantiles) == {"0.1", "0.9"}


def test_link_rejects_bad_values(capsys):
    code, _, err = run_cli(capsys, "link", "--distance-m", "-5")
    assert code == 2
    assert "distance_m" in err

    code, _, err = run_cli(capsys, "link", "--area", "area9")
    assert code == 2
    assert "area1" in err and "area2" in err

    code, _, err = run_cli(capsys, "link", "--sigma-s-m", "0.5")
    assert code == 2
    assert "beta_m" in err

    code, _, err = run_cli(capsys, "link", "--small-scale", "rician")
    assert code == 2
    assert "small_scale" in err


def test_link_lists_every_violation_at_once(capsys):
    code, _, err = run_cli(
        capsys, "link", "--distance-m", "-5", "--p-tx-w", "0", "--area", "areaX"
    )
    assert code == 2
    assert "distance_m" in err
    assert "p_tx_w" in err
    assert "areaX" in err


def test_link_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# single point\np_tx_w = 20\nn_samples = 400\nseed = 7\nharvester = C\n",
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "link", "--config", str(cfg), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["median_p_rx_dbm"] == pytest.approx(-7.652835339008263, abs=1e-9)
    mc_part = report["harvesters"]["C"]["monte_carlo"]
    assert mc_part["n_samples"] == 400 and mc_part["seed"] == 7

    # Flags override the file.
    code, out, _ = run_cli(capsys, "link", "--config", str(cfg), "--json", "--p-tx-w", "30")
    assert code == 0
    assert json.loads(out)["median_p_rx_dbm"] == pytest.approx(
        median_received_dbm(LinkScenario(p_tx_w=30.0)), abs=1e-12
    )


def test_link_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("p_tx_w = 20\nbogus_key = 1\nanother = 2\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "link", "--config", str(cfg))
    assert code == 2
    assert "bogus_key" in err and "another" in err


def test_config_parse_errors_carry_line_numbers(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("p_tx_w = 20\njust words\np_tx_w = 30\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "link", "--config", str(cfg))
    assert code == 2
    assert "line 2" in err
    assert "line 3" in err and "duplicate" in err


# ---------------------------------------------------------------------------
# sweep


def test_sweep_rejects_unknown_preset(capsys):
    code, _, err = run_cli(capsys, "sweep", "--preset", "fig9x")
    assert code == 2
    for name in ("fig3a", "fig3b", "fig5a", "fig5b", "fig6a", "fig6b", "fig7a", "fig7b"):
        assert name in err


def test_sweep_preset_writes_deterministic_csv(tmp_path, capsys):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    threaded = tmp_path / "c.csv"
    base = ["sweep", "--preset", "fig6a", "--n-samples", "300"]
    assert run_cli(capsys, *base, "-o", str(first))[0] == 0
    assert run_cli(capsys, *base, "-o", str(second))[0] == 0
    assert run_cli(capsys, *base, "--n-workers", "3", "-o", str(threaded))[0] == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_bytes() == threaded.read_bytes()

    lines = first.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 25 * 3

    reseeded = tmp_path / "d.csv"
    assert run_cli(capsys, *base, "--seed", "42", "-o", str(reseeded))[0] == 0
    assert reseeded.read_bytes() != first.read_bytes()


def test_sweep_config_round_trip(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "axis = p_tx\naxis_points = 1,5,10\nharvesters = A,C\n"
        "n_samples = 250\nseed = 11\n",
        encoding="utf-8",
    )
    out_path = tmp_path / "table.csv"
    code, _, _ = run_cli(capsys, "sweep", "--config", str(cfg), "-o", str(out_path))
    assert code == 0

    records = read_sweep_csv(out_path)
    assert len(records) == 3 * 2
    assert [r["axis_value"] for r in records] == [1.0, 1.0, 5.0, 5.0, 10.0, 10.0]
    assert [r["harvester"] for r in records] == ["A", "C"] * 3

    spec = SweepSpec(
        base=LinkScenario(), harvesters=("A", "C"), axis="p_tx",
        points=(1.0, 5.0, 10.0), mc=MonteCarloSettings(n_samples=250, seed=11),
    )
    rows = run_sweep(spec)
    for record, row in zip(records, rows):
        assert record["p_h_mean_uw"] == row.stats.mean_uw
        assert record["p_h_median_uw"] == row.stats.median_uw
        assert record["p_h_p05_uw"] == row.stats.quantiles_uw[0.05]
        assert record["p_h_p95_uw"] == row.stats.quantiles_uw[0.95]
        assert record["p_rx_median_dbm"] == row.p_rx_median_dbm
        assert record["seed"] == row.stats.seed
        assert record["n_samples"] == 250
        assert record["secondary"] is None and record["secondary_value"] is None
        assert record["area"] == "area1"
        assert record["clamp_count"] == row.stats.clamp_count
        assert record["extrapolated_count"] == row.stats.extrapolated_count


def test_sweep_writes_to_stdout_without_out_flag(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "axis = distance\naxis_min = 20\naxis_max = 60\naxis_count = 3\n"
        "harvesters = C\nn_samples = 100\n",
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "sweep", "--config", str(cfg))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 3


def test_sweep_config_lists_every_violation(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "axis = speed\nharvesters = A,Z\naxis_points = 3,2\nn_samples = 0\n",
        encoding="utf-8",
    )
    code, _, err = run_cli(capsys, "sweep", "--config", str(cfg))
    assert code == 2
    assert "axis must be one of" in err
    assert "n_samples" in err


def test_sweep_unwritable_output_is_runtime_error(capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--preset", "fig6a", "--n-samples", "10",
        "-o", "/nonexistent-dir/out.csv",
    )
    assert code == 1
    assert "error" in err


def test_read_sweep_csv_rejects_foreign_header(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b,c\n1,2,3\n", encoding="utf-8")
    with pytest.raises(ValueError, match="line 1"):
        read_sweep_csv(path)


def test_rows_to_csv_is_stable(tmp_path):
    spec = SweepSpec(
        base=LinkScenario(), harvesters=("C",), axis="distance",
        points=(25.0, 75.0), mc=MonteCarloSettings(n_samples=150, seed=3),
    )
    text_one = rows_to_csv(run_sweep(spec))
    text_two = rows_to_csv(run_sweep(spec, n_workers=2))
    assert text_one == text_two


# ---------------------------------------------------------------------------
# fit


def write_samples_csv(path, n_points=30):
    lo, hi = HARVESTER_C.valid_range_mw
    powers = np.geomspace(lo, hi, n_points)
    lines = ["input_power_mw,efficiency_percent"]
    lines += [
        f"{p:.17g},{efficiency_percent(HARVESTER_C, float(p)):.17g}" for p in powers
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def test_fit_command_round_trip(tmp_path, capsys):
    samples = tmp_path / "samples.csv"
    model_path = tmp_path / "bench.model"
    write_samples_csv(samples)
    code, out, _ = run_cli(
        capsys, "fit", str(samples), "--name", "bench", "--out", str(model_path)
    )
    assert code == 0
    assert "fitted model 'bench'" in out
    assert "residual RMS" in out

    fitted = read_model_file(model_path)
    grid = np.geomspace(*HARVESTER_C.valid_range_mw, 300)
    deviation = np.abs(
        efficiency_percent(fitted, grid) - efficiency_percent(HARVESTER_C, grid)
    ).max()
    assert deviation < 0.1


def test_fit_without_refinement(tmp_path, capsys):
    samples = tmp_path / "samples.csv"
    write_samples_csv(samples)
    code, out, _ = run_cli(capsys, "fit", str(samples), "--no-refine")
    assert code == 0
    assert "fitted model" in out


def test_fit_rejects_underdetermined_input(tmp_path, capsys):
    samples = tmp_path / "samples.csv"
    write_samples_csv(samples, n_points=4)
    code, _, err = run_cli(capsys, "fit", str(samples))
    assert code == 2
    assert "6 distinct" in err


def test_fit_reports_malformed_line(tmp_path, capsys):
    samples = tmp_path / "samples.csv"
    samples.write_text(
        "input_power_mw,efficiency_percent\n1.0,50\nbroken,row\n", encoding="utf-8"
    )
    code, _, err = run_cli(capsys, "fit", str(samples))
    assert code == 2
    assert "line 3" in err


def test_fit_degenerate_curve_is_runtime_error(tmp_path, capsys):
    samples = tmp_path / "samples.csv"
    powers = np.geomspace(0.1, 10.0, 10)
    lines = ["input_power_mw,efficiency_percent"]
    lines += [f"{p:.17g},55.0" for p in powers]
    samples.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "fit", str(samples))
    assert code == 1
    assert "error" in err


# ---------------------------------------------------------------------------
# presets listing and entry point


def test_presets_listing(capsys):
    code, out, _ = run_cli(capsys, "presets")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert any(line.startswith("fig5a:") and "150 rows" in line for line in lines)
    assert any(line.startswith("fig3a:") and "75 rows" in line for line in lines)


def test_console_script_is_installed():
    assert shutil.which("marswpt") is not None
    result = subprocess.run(
        [sys.executable, "-m", "marswpt.cli", "presets"],
        capture_output=True, text=True, timeout=120,
    )
    assert result.returncode == 0
    assert "fig7b" in result.stdout
