"""Command-line interface: single-point link reports, sweep tables, model fitting.

Subcommands: ``link`` (budget breakdown plus Monte Carlo stats for one
scenario), ``sweep`` (preset or configured parameter sweep to CSV), ``fit``
(rational efficiency model from a measurement CSV), ``presets`` (list the
built-in sweep tables). Exit codes: 0 success, 1 runtime failure, 2 usage or
configuration error.

Configuration is flat ``key = value`` text with units embedded in key names
(p_tx_w, distance_m, sigma_s_m, n_t_per_m3, ...). Flags override config file
values; unknown keys are rejected with every violation listed. A run is fully
determined by (flags, config, seed): nothing in the numeric path reads clocks
or ambient entropy.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from .harvester import (
    BUILTIN_HARVESTERS,
    FitError,
    HarvesterModel,
    fit_model,
    harvested_mw,
    is_extrapolated,
    raw_efficiency_percent,
    read_model_file,
    read_samples_csv,
    write_model_file,
)
from .link import (
    SMALL_SCALE_MODES,
    HarvestStats,
    LinkScenario,
    MonteCarloSettings,
    budget_terms,
    estimate_harvest,
    median_received_dbm,
)
from .pointing import PointingGeometry, default_beam_waist
from .propagation import DustStorm, TERRAIN_PRESETS, TerrainProfile, terrain_preset
from .quantities import RfCarrier, dbm_to_mw
from .sweep import (
    AXES,
    SECONDARY_KINDS,
    ConfigError,
    SweepRow,
    SweepSpec,
    axis_points,
    builtin_presets,
    run_sweep,
)

CSV_COLUMNS = (
    "axis", "axis_value", "secondary", "secondary_value", "area", "harvester",
    "p_tx_w", "distance_m", "n_samples", "seed", "p_rx_median_dbm",
    "p_h_mean_uw", "p_h_median_uw", "p_h_p05_uw", "p_h_p95_uw",
    "clamp_count", "extrapolated_count",
)

_SCENARIO_KEYS = (
    "p_tx_w", "distance_m", "frequency_hz", "g_t_db", "g_r_db", "area",
    "alpha", "sigma_db", "n_t_per_m3", "rho_p_m", "eps_re", "eps_im",
    "beta_m", "sigma_s_m", "r_d_m", "small_scale",
)
_MC_KEYS = ("n_samples", "seed", "quantiles", "n_workers")
_SWEEP_KEYS = (
    "axis", "axis_min", "axis_max", "axis_count", "axis_spacing",
    "axis_points", "secondary", "secondary_values", "harvesters",
)
_LINK_KEYS = _SCENARIO_KEYS + _MC_KEYS + ("harvester", "harvester_file")
_SWEEP_CONFIG_KEYS = _SCENARIO_KEYS + _MC_KEYS + _SWEEP_KEYS


# ---------------------------------------------------------------------------
# configuration ingestion

def read_config_file(path) -> dict[str, str]:
    """Parse flat key = value text; blank lines and # comments are skipped."""
    entries: dict[str, str] = {}
    problems: list[str] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw_line in enumerate(handle, start=1):
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                problems.append(f"line {lineno}: expected key = value, got {line!r}")
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key in entries:
                problems.append(f"line {lineno}: duplicate key {key!r}")
                continue
            entries[key] = value.strip()
    if problems:
        raise ConfigError("; ".join(problems))
    return entries


def _merge_config(args: argparse.Namespace, allowed: tuple[str, ...]) -> dict[str, str]:
    cfg: dict[str, str] = {}
    if getattr(args, "config", None):
        cfg.update(read_config_file(args.config))
        unknown = sorted(key for key in cfg if key not in allowed)
        if unknown:
            raise ConfigError(
                "; ".join(f"unknown config key {key!r}" for key in unknown)
            )
    for key in allowed:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _parse_float(cfg: dict[str, str], key: str, problems: list[str]) -> float | None:
    if key not in cfg:
        return None
    try:
        return float(cfg[key])
    except ValueError:
        problems.append(f"{key}: could not parse {cfg[key]!r} as a number")
        return None


def _parse_int(cfg: dict[str, str], key: str, problems: list[str]) -> int | None:
    if key not in cfg:
        return None
    try:
        return int(cfg[key])
    except ValueError:
        problems.append(f"{key}: could not parse {cfg[key]!r} as an integer")
        return None


def _parse_float_list(cfg: dict[str, str], key: str, problems: list[str]) -> tuple[float, ...] | None:
    if key not in cfg:
        return None
    try:
        return tuple(float(cell) for cell in cfg[key].split(","))
    except ValueError:
        problems.append(f"{key}: could not parse {cfg[key]!r} as comma-separated numbers")
        return None


def _check(condition: bool, problems: list[str], message: str) -> None:
    if not condition:
        problems.append(message)


def build_scenario(cfg: dict[str, str], problems: list[str]) -> LinkScenario | None:
    """Assemble a LinkScenario from flat config, appending every violation found."""
    before = len(problems)
    values = {key: _parse_float(cfg, key, problems) for key in (
        "p_tx_w", "distance_m", "frequency_hz", "g_t_db", "g_r_db", "alpha",
        "sigma_db", "n_t_per_m3", "rho_p_m", "eps_re", "eps_im",
        "beta_m", "sigma_s_m", "r_d_m",
    )}

    def got(key: str) -> bool:
        return values.get(key) is not None

    for key, minimum in (("p_tx_w", "positive"), ("distance_m", "positive"),
                         ("frequency_hz", "positive"), ("alpha", "positive"),
                         ("rho_p_m", "positive"), ("eps_im", "positive"),
                         ("beta_m", "positive"), ("r_d_m", "positive")):
        if got(key):
            _check(values[key] > 0.0, problems, f"{key} must be {minimum}, got {values[key]}")
    for key in ("sigma_db", "n_t_per_m3", "sigma_s_m"):
        if got(key):
            _check(values[key] >= 0.0, problems, f"{key} must be non-negative, got {values[key]}")

    area = cfg.get("area", "area1")
    if area not in TERRAIN_PRESETS:
        problems.append(f"area: unknown name {area!r}; valid names: {', '.join(sorted(TERRAIN_PRESETS))}")
    small_scale = cfg.get("small_scale", "off")
    if small_scale not in SMALL_SCALE_MODES:
        problems.append(f"small_scale must be one of {SMALL_SCALE_MODES}, got {small_scale!r}")
    for key in ("sigma_s_m", "r_d_m"):
        if got(key) and not got("beta_m"):
            problems.append(f"{key} was given but beta_m is missing; pointing needs an aperture radius")
    if len(problems) > before:
        return None

    carrier = RfCarrier(values["frequency_hz"]) if got("frequency_hz") else RfCarrier()
    terrain = terrain_preset(area)
    if got("alpha") or got("sigma_db"):
        terrain = TerrainProfile(
            "custom",
            alpha=values["alpha"] if got("alpha") else terrain.alpha,
            sigma_db=values["sigma_db"] if got("sigma_db") else terrain.sigma_db,
        )
    dust = None
    if any(got(key) for key in ("n_t_per_m3", "rho_p_m", "eps_re", "eps_im")):
        dust = DustStorm(
            n_t_per_m3=values["n_t_per_m3"] if got("n_t_per_m3") else 0.0,
            rho_p_m=values["rho_p_m"] if got("rho_p_m") else 1e-4,
            eps_re=values["eps_re"] if got("eps_re") else 4.56,
            eps_im=values["eps_im"] if got("eps_im") else 0.251,
        )
    pointing = None
    if got("beta_m"):
        pointing = PointingGeometry(
            beta_m=values["beta_m"],
            sigma_s_m=values["sigma_s_m"] if got("sigma_s_m") else 0.0,
            r_d_m=values["r_d_m"] if got("r_d_m") else default_beam_waist(carrier),
        )
    return LinkScenario(
        p_tx_w=values["p_tx_w"] if got("p_tx_w") else 10.0,
        distance_m=values["distance_m"] if got("distance_m") else 50.0,
        g_t_db=values["g_t_db"] if got("g_t_db") else 28.0,
        g_r_db=values["g_r_db"] if got("g_r_db") else 0.0,
        carrier=carrier,
        terrain=terrain,
        dust=dust,
        pointing=pointing,
        small_scale=small_scale,
    )


def build_mc(cfg: dict[str, str], problems: list[str]) -> MonteCarloSettings | None:
    before = len(problems)
    n_samples = _parse_int(cfg, "n_samples", problems)
    seed = _parse_int(cfg, "seed", problems)
    quantiles = _parse_float_list(cfg, "quantiles", problems)
    if n_samples is not None:
        _check(n_samples >= 1, problems, f"n_samples must be at least 1, got {n_samples}")
    if seed is not None:
        _check(0 <= seed < 2**64, problems, f"seed must be a 64-bit unsigned integer, got {seed}")
    if quantiles is not None:
        _check(all(0.0 < q < 1.0 for q in quantiles), problems,
               f"quantiles must lie strictly inside (0, 1), got {cfg['quantiles']!r}")
    if len(problems) > before:
        return None
    defaults = MonteCarloSettings()
    return MonteCarloSettings(
        n_samples=n_samples if n_samples is not None else defaults.n_samples,
        seed=seed if seed is not None else defaults.seed,
        quantiles=quantiles if quantiles is not None else defaults.quantiles,
    )


def _parse_workers(cfg: dict[str, str], problems: list[str]) -> int:
    n_workers = _parse_int(cfg, "n_workers", problems)
    if n_workers is None:
        return 1
    _check(n_workers >= 1, problems, f"n_workers must be at least 1, got {n_workers}")
    return max(n_workers, 1)


def build_sweep_spec(cfg: dict[str, str], problems: list[str]) -> SweepSpec | None:
    """Assemble a SweepSpec from flat config keys."""
    base = build_scenario(cfg, problems)
    mc = build_mc(cfg, problems)

    axis = cfg.get("axis")
    if axis is None:
        problems.append("axis is required for a configured sweep")
    elif axis not in AXES:
        problems.append(f"axis must be one of {AXES}, got {axis!r}")

    points: tuple[float, ...] | None = _parse_float_list(cfg, "axis_points", problems)
    if points is None and axis is not None and axis in AXES:
        lo = _parse_float(cfg, "axis_min", problems)
        hi = _parse_float(cfg, "axis_max", problems)
        count = _parse_int(cfg, "axis_count", problems)
        spacing = cfg.get("axis_spacing", "linear")
        if lo is None or hi is None or count is None:
            missing = [key for key, v in (("axis_min", lo), ("axis_max", hi), ("axis_count", count)) if v is None]
            problems.append(
                "either axis_points or all of axis_min/axis_max/axis_count are required"
                f" (missing: {', '.join(missing)})"
            )
        else:
            try:
                points = axis_points(lo, hi, count, spacing)
            except ConfigError as exc:
                problems.append(str(exc))

    secondary = cfg.get("secondary")
    secondary_values: tuple = ()
    if secondary is not None:
        if secondary == "area":
            secondary_values = tuple(cell.strip() for cell in cfg.get("secondary_values", "").split(",") if cell.strip())
        else:
            parsed = _parse_float_list(cfg, "secondary_values", problems)
            secondary_values = parsed if parsed is not None else ()

    harvesters = tuple(cell.strip() for cell in cfg.get("harvesters", "A,B,C").split(",") if cell.strip())

    if problems or base is None or mc is None or points is None:
        return None
    try:
        return SweepSpec(
            base=base, harvesters=harvesters, axis=axis, points=points,
            secondary=secondary, secondary_values=secondary_values, mc=mc,
        )
    except ConfigError as exc:
        problems.append(str(exc))
        return None


# ---------------------------------------------------------------------------
# CSV serialization

def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def rows_to_csv(rows: list[SweepRow]) -> str:
    """Serialize sweep rows with the pinned header, 17 significant digits."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        stats = row.stats
        if row.secondary_value is None:
            secondary_value = ""
        elif isinstance(row.secondary_value, str):
            secondary_value = row.secondary_value
        else:
            secondary_value = _fmt(row.secondary_value)
        lines.append(",".join([
            row.axis,
            _fmt(row.axis_value),
            row.secondary or "",
            secondary_value,
            row.area,
            row.harvester,
            _fmt(row.p_tx_w),
            _fmt(row.distance_m),
            str(stats.n_samples),
            str(stats.seed),
            _fmt(row.p_rx_median_dbm),
            _fmt(stats.mean_uw),
            _fmt(stats.median_uw),
            _fmt(stats.quantiles_uw[0.05]),
            _fmt(stats.quantiles_uw[0.95]),
            str(stats.clamp_count),
            str(stats.extrapolated_count),
        ]))
    return "\n".join(lines) + "\n"


def read_sweep_csv(path) -> list[dict]:
    """Parse a sweep CSV back into typed per-row dicts keyed by column name."""
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or lines[0] != ",".join(CSV_COLUMNS):
        raise ValueError("line 1: header does not match the sweep CSV schema")
    out: list[dict] = []
    int_columns = {"n_samples", "seed", "clamp_count", "extrapolated_count"}
    float_columns = {
        "axis_value", "p_tx_w", "distance_m", "p_rx_median_dbm",
        "p_h_mean_uw", "p_h_median_uw", "p_h_p05_uw", "p_h_p95_uw",
    }
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != len(CSV_COLUMNS):
            raise ValueError(f"line {lineno}: expected {len(CSV_COLUMNS)} columns, got {len(cells)}")
        record: dict = {}
        for column, cell in zip(CSV_COLUMNS, cells):
            if column in int_columns:
                record[column] = int(cell)
            elif column in float_columns:
                record[column] = float(cell)
            elif column == "secondary":
                record[column] = cell or None
            elif column == "secondary_value":
                if not cell:
                    record[column] = None
                else:
                    try:
                        record[column] = float(cell)
                    except ValueError:
                        record[column] = cell
            else:
                record[column] = cell
        out.append(record)
    return out


def _with_csv_quantiles(mc: MonteCarloSettings) -> MonteCarloSettings:
    needed = {0.05, 0.95}
    if needed.issubset(mc.quantiles):
        return mc
    return replace(mc, quantiles=tuple(sorted(set(mc.quantiles) | needed)))


# ---------------------------------------------------------------------------
# subcommands

def _select_harvesters(cfg: dict[str, str], problems: list[str]) -> list[HarvesterModel]:
    choice = cfg.get("harvester", "all")
    models: list[HarvesterModel] = []
    if choice == "all":
        models = [BUILTIN_HARVESTERS[name] for name in sorted(BUILTIN_HARVESTERS)]
    elif choice == "none":
        models = []
    elif choice in BUILTIN_HARVESTERS:
        models = [BUILTIN_HARVESTERS[choice]]
    else:
        problems.append(
            f"harvester must be one of {', '.join(sorted(BUILTIN_HARVESTERS))}, all, or none; got {choice!r}"
        )
    if "harvester_file" in cfg:
        models.append(read_model_file(cfg["harvester_file"]))
    return models


def cmd_link(args: argparse.Namespace) -> int:
    cfg = _merge_config(args, _LINK_KEYS)
    problems: list[str] = []
    scenario = build_scenario(cfg, problems)
    mc = build_mc(cfg, problems)
    n_workers = _parse_workers(cfg, problems)
    models = _select_harvesters(cfg, problems)
    if problems or scenario is None or mc is None:
        raise ConfigError("; ".join(problems))

    terms = budget_terms(scenario)
    median_dbm = median_received_dbm(scenario)
    median_mw = dbm_to_mw(median_dbm)

    report: dict = {
        "median_p_rx_dbm": median_dbm,
        "median_p_rx_mw": median_mw,
        "budget_terms_db": terms,
        "harvesters": {},
    }
    for model in models:
        raw = raw_efficiency_percent(model, median_mw)
        eta = min(max(raw, 0.0), 100.0)
        harvested_uw = harvested_mw(model, median_mw) * 1000.0
        stats = estimate_harvest(scenario, model, mc, n_workers=n_workers)
        report["harvesters"][model.name] = {
            "deterministic": {
                "p_rx_mw": median_mw,
                "efficiency_percent": eta,
                "harvested_uw": harvested_uw,
                "extrapolated": bool(is_extrapolated(model, median_mw)),
            },
            "monte_carlo": {
                "mean_uw": stats.mean_uw,
                "median_uw": stats.median_uw,
                "quantiles_uw": {str(q): v for q, v in stats.quantiles_uw.items()},
                "mean_p_rx_dbm": stats.mean_p_rx_dbm,
                "clamp_count": stats.clamp_count,
                "extrapolated_count": stats.extrapolated_count,
                "n_samples": stats.n_samples,
                "seed": stats.seed,
            },
        }

    if args.json:
        print(json.dumps(report, indent=2))
        return 0

    print(f"median received power: {median_dbm:.3f} dBm ({median_mw:.6g} mW)")
    print("budget terms (dB):")
    for name, value in terms.items():
        print(f"  {name:<14s} {value:+10.3f}")
    for model in models:
        entry = report["harvesters"][model.name]
        det = entry["deterministic"]
        mc_part = entry["monte_carlo"]
        flag = "yes" if det["extrapolated"] else "no"
        print(f"harvester {model.name}:")
        print(
            f"  median channel: efficiency {det['efficiency_percent']:.3f} %, "
            f"harvest {det['harvested_uw']:.4g} uW, extrapolated {flag}"
        )
        quantile_text = ", ".join(
            f"p{int(round(float(q) * 100)):02d} {v:.4g} uW" for q, v in mc_part["quantiles_uw"].items()
        )
        print(
            f"  monte carlo (n={mc_part['n_samples']}, seed={mc_part['seed']}): "
            f"mean {mc_part['mean_uw']:.4g} uW, median {mc_part['median_uw']:.4g} uW, "
            f"{quantile_text}, clamped {mc_part['clamp_count']}, "
            f"extrapolated {mc_part['extrapolated_count']}"
        )
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.preset is not None:
        presets = builtin_presets()
        if args.preset not in presets:
            raise ConfigError(
                f"unknown preset {args.preset!r}; valid presets: {', '.join(sorted(presets))}"
            )
        spec = presets[args.preset]
        problems: list[str] = []
        workers_cfg = {"n_workers": args.n_workers} if args.n_workers is not None else {}
        n_workers = _parse_workers(workers_cfg, problems)
        overrides: dict[str, str] = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.n_samples is not None:
            overrides["n_samples"] = args.n_samples
        if overrides:
            mc = build_mc({**overrides}, problems)
            if problems or mc is None:
                raise ConfigError("; ".join(problems))
            spec = replace(
                spec,
                mc=replace(
                    spec.mc,
                    seed=mc.seed if "seed" in overrides else spec.mc.seed,
                    n_samples=mc.n_samples if "n_samples" in overrides else spec.mc.n_samples,
                ),
            )
        if problems:
            raise ConfigError("; ".join(problems))
    else:
        cfg = _merge_config(args, _SWEEP_CONFIG_KEYS)
        if not cfg:
            raise ConfigError("sweep needs --preset or --config")
        problems = []
        n_workers = _parse_workers(cfg, problems)
        spec = build_sweep_spec(cfg, problems)
        if problems or spec is None:
            raise ConfigError("; ".join(problems))

    spec = replace(spec, mc=_with_csv_quantiles(spec.mc))
    rows = run_sweep(spec, n_workers=n_workers)
    text = rows_to_csv(rows)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return 0


def cmd_fit(args: argparse.Namespace) -> int:
    samples = read_samples_csv(args.samples)
    model = fit_model(samples, name=args.name, refine=not args.no_refine)
    powers = np.array([s.input_power_mw for s in samples])
    measured = np.array([s.efficiency_percent for s in samples])
    residual = raw_efficiency_percent(model, powers) - measured
    rms = float(np.sqrt(np.mean(residual**2)))
    lo, hi = model.valid_range_mw
    print(f"fitted model {model.name!r} over [{lo:.17g}, {hi:.17g}] mW")
    for key in ("a2", "a1", "a0", "b2", "b1", "b0"):
        print(f"  {key} = {getattr(model, key):.17g}")
    print(f"residual RMS: {rms:.6g} % (over {len(samples)} samples)")
    if args.out is not None:
        write_model_file(model, args.out)
        print(f"wrote model file: {args.out}")
    return 0


def cmd_presets(args: argparse.Namespace) -> int:
    presets = builtin_presets()
    for name in sorted(presets):
        spec = presets[name]
        n_secondary = len(spec.secondary_values) if spec.secondary else 1
        n_rows = len(spec.points) * n_secondary * len(spec.harvesters)
        secondary = ""
        if spec.secondary:
            secondary = f", secondary {spec.secondary} in {{{', '.join(f'{v:g}' for v in spec.secondary_values)}}}"
        print(
            f"{name}: axis {spec.axis} [{spec.points[0]:g}, {spec.points[-1]:g}] "
            f"({len(spec.points)} points){secondary}; {spec.base.terrain.name}; "
            f"harvesters {','.join(spec.harvesters)}; {n_rows} rows"
        )
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    for key in _SCENARIO_KEYS:
        parser.add_argument(f"--{key.replace('_', '-')}", dest=key, default=None, metavar="V")


def _add_mc_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-samples", dest="n_samples", default=None, metavar="N")
    parser.add_argument("--seed", dest="seed", default=None, metavar="N")
    parser.add_argument("--quantiles", dest="quantiles", default=None, metavar="Q1,Q2,...")
    parser.add_argument("--n-workers", dest="n_workers", default=None, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marswpt",
        description="RF wireless power transfer simulator for the Martian surface",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    link = sub.add_parser("link", help="single-point budget report and Monte Carlo stats")
    link.add_argument("--config", default=None, metavar="PATH")
    _add_scenario_flags(link)
    _add_mc_flags(link)
    link.add_argument("--harvester", default=None, metavar="NAME",
                      help="A, B, C, all, or none (default all)")
    link.add_argument("--harvester-file", dest="harvester_file", default=None, metavar="PATH")
    link.add_argument("--json", action="store_true")
    link.set_defaults(func=cmd_link)

    sweep = sub.add_parser("sweep", help="run a parameter sweep and emit CSV")
    group = sweep.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", default=None, metavar="NAME")
    group.add_argument("--config", default=None, metavar="PATH")
    sweep.add_argument("-o", "--out", default=None, metavar="PATH")
    sweep.add_argument("--seed", default=None, metavar="N")
    sweep.add_argument("--n-samples", dest="n_samples", default=None, metavar="N")
    sweep.add_argument("--n-workers", dest="n_workers", default=None, metavar="N")
    sweep.set_defaults(func=cmd_sweep)

    fit = sub.add_parser("fit", help="fit a rational efficiency model to sample CSV")
    fit.add_argument("samples", metavar="SAMPLES.csv")
    fit.add_argument("--name", default="fitted", metavar="NAME")
    fit.add_argument("--out", default=None, metavar="PATH")
    fit.add_argument("--no-refine", dest="no_refine", action="store_true")
    fit.set_defaults(func=cmd_fit)

    presets = sub.add_parser("presets", help="list built-in sweep presets")
    presets.set_defaults(func=cmd_presets)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
