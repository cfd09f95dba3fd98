"""Command-line front end: analytic curves, Monte Carlo validation, sweeps.

Three subcommands share one YAML config (all keys optional, defaults built
in) and write plot-ready CSV with fixed units (meters, seconds, sensors/m^2)
declared in the header row:

- analyze:  per model, detection probability and mean detector count over a
  time grid, plus a summary line with t_cr, p_f, lambda_cr.
- simulate: analytic curve next to the Monte Carlo estimate with binomial
  standard errors; exits 1 when a convex-kind grid point leaves the 3-sigma
  band (piriform deviations are informational: its closed form is an upper
  bound, not an identity).
- sweep:    critical time, critical density, and detection probability per
  model over a wind, density, or tau range.

Exit codes: 0 success, 1 simulate band violation, 2 config or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, replace

import numpy as np
import yaml

from . import coverage_analytics as analytics
from .fire_geometry import FireGrowthParams, FireModelKind
from .monte_carlo import estimate_sensing_probability
from .radius_model import HybridRadiusModel

__all__ = [
    "ScenarioConfig",
    "ConfigError",
    "load_config",
    "parse_config",
    "dump_config",
    "build_scenario",
    "cmd_analyze",
    "cmd_simulate",
    "cmd_sweep",
    "main",
]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2

MODEL_CHOICES = ("circular", "elliptical", "piriform", "all")
SWEEP_AXES = ("wind", "density", "tau")

_AXIS_COLUMNS = {"wind": "v_x[m/s]", "density": "density[1/m^2]", "tau": "tau[-]"}


class ConfigError(Exception):
    """Raised for unreadable, malformed, or mistyped configuration input."""


@dataclass(frozen=True)
class ScenarioConfig:
    """Flat view of the YAML config; defaults reproduce the reference setup."""

    # scenario
    density: float = 0.05
    r_in: float = 2.0
    r_out: float = 4.0
    alpha: float = 0.33
    v_x: float = 3.0
    V: float = 10.0
    critical_area: float = 20.0
    tau: float = 0.9
    model: str = "all"
    # run controls
    t_start: float = 0.0
    t_stop: float | None = None  # None: stop at the model's critical time
    t_steps: int = 20
    n_realizations: int = 10000
    seed: int = 1
    threads: int = 1
    # sweep controls
    sweep_axis: str = "wind"
    sweep_start: float = 0.0
    sweep_stop: float = 10.0
    sweep_steps: int = 21
    sweep_values: tuple[float, ...] | None = None
    # output
    out: str | None = None


# YAML section/key -> dataclass field. dump_config emits in this order.
_SCHEMA: dict[str, dict[str, str]] = {
    "scenario": {
        "density": "density",
        "r_in": "r_in",
        "r_out": "r_out",
        "alpha": "alpha",
        "v_x": "v_x",
        "V": "V",
        "critical_area": "critical_area",
        "tau": "tau",
        "model": "model",
    },
    "run": {
        "t_start": "t_start",
        "t_stop": "t_stop",
        "t_steps": "t_steps",
        "n_realizations": "n_realizations",
        "seed": "seed",
        "threads": "threads",
    },
    "sweep": {
        "axis": "sweep_axis",
        "start": "sweep_start",
        "stop": "sweep_stop",
        "steps": "sweep_steps",
        "values": "sweep_values",
    },
    "output": {"path": "out"},
}

_FLOAT_FIELDS = {
    "density", "r_in", "r_out", "alpha", "v_x", "V", "critical_area", "tau",
    "t_start", "sweep_start", "sweep_stop",
}
_OPTIONAL_FLOAT_FIELDS = {"t_stop"}
_INT_FIELDS = {"t_steps", "n_realizations", "seed", "threads", "sweep_steps"}
_STR_FIELDS = {"model", "sweep_axis"}
_OPTIONAL_STR_FIELDS = {"out"}
_FLOAT_LIST_FIELDS = {"sweep_values"}


def _coerce(field: str, value, where: str):
    if field in _OPTIONAL_FLOAT_FIELDS and value is None:
        return None
    if field in _OPTIONAL_STR_FIELDS and value is None:
        return None
    if field in _FLOAT_LIST_FIELDS:
        if value is None:
            return None
        if not isinstance(value, (list, tuple)) or not value:
            raise ConfigError(f"{where}: expected a non-empty list of numbers")
        return tuple(float(_require_number(v, where)) for v in value)
    if field in _FLOAT_FIELDS or field in _OPTIONAL_FLOAT_FIELDS:
        return float(_require_number(value, where))
    if field in _INT_FIELDS:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{where}: expected an integer, got {value!r}")
        return value
    if isinstance(value, str):
        return value
    raise ConfigError(f"{where}: expected a string, got {value!r}")


def _require_number(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    return value


def parse_config(text: str, source: str = "<config>") -> ScenarioConfig:
    """Parse YAML config text; unknown keys and type mismatches are errors."""
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        location = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigError(f"{source}: YAML parse error{location}: {exc}") from exc
    if document is None:
        return ScenarioConfig()
    if not isinstance(document, dict):
        raise ConfigError(f"{source}: top level must be a mapping of sections")

    values: dict[str, object] = {}
    for section, body in document.items():
        if section not in _SCHEMA:
            raise ConfigError(
                f"{source}: unknown section {section!r}; expected one of {sorted(_SCHEMA)}"
            )
        if body is None:
            continue
        if not isinstance(body, dict):
            raise ConfigError(f"{source}: section {section!r} must be a mapping")
        for key, value in body.items():
            field = _SCHEMA[section].get(key)
            if field is None:
                raise ConfigError(
                    f"{source}: unknown key {key!r} in section {section!r}; "
                    f"expected one of {sorted(_SCHEMA[section])}"
                )
            values[field] = _coerce(field, value, f"{source}: {section}.{key}")
    return ScenarioConfig(**values)


def load_config(path: str) -> ScenarioConfig:
    """Read and parse a YAML config file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    return parse_config(text, source=path)


def dump_config(config: ScenarioConfig) -> str:
    """Serialize a config to YAML; parse_config(dump_config(c)) == c."""
    document = {}
    for section, keys in _SCHEMA.items():
        body = {}
        for key, field in keys.items():
            value = getattr(config, field)
            if isinstance(value, tuple):
                value = list(value)
            body[key] = value
        document[section] = body
    return yaml.safe_dump(document, sort_keys=False)


def validate_config(config: ScenarioConfig) -> None:
    """Structural checks; physical ranges are enforced by the library types."""
    if config.model not in MODEL_CHOICES:
        raise ConfigError(f"model must be one of {MODEL_CHOICES}, got {config.model!r}")
    if config.sweep_axis not in SWEEP_AXES:
        raise ConfigError(f"sweep axis must be one of {SWEEP_AXES}, got {config.sweep_axis!r}")
    if config.t_steps < 1:
        raise ConfigError(f"t_steps must be at least 1, got {config.t_steps}")
    if config.n_realizations < 1:
        raise ConfigError(f"n_realizations must be at least 1, got {config.n_realizations}")
    if config.threads < 1:
        raise ConfigError(f"threads must be at least 1, got {config.threads}")
    if config.seed < 0:
        raise ConfigError(f"seed must be non-negative, got {config.seed}")
    if config.sweep_values is None and config.sweep_steps < 1:
        raise ConfigError(f"sweep steps must be at least 1, got {config.sweep_steps}")
    if not (math.isfinite(config.t_start) and config.t_start >= 0.0):
        raise ConfigError(f"t_start must be non-negative, got {config.t_start}")
    if config.t_stop is not None and config.t_stop < config.t_start:
        raise ConfigError(
            f"t_stop must be at least t_start, got {config.t_stop} < {config.t_start}"
        )


def selected_kinds(config: ScenarioConfig) -> list[FireModelKind]:
    if config.model == "all":
        return [FireModelKind.CIRCULAR, FireModelKind.ELLIPTICAL, FireModelKind.PIRIFORM]
    return [FireModelKind(config.model)]


def build_scenario(config: ScenarioConfig, kind: FireModelKind) -> analytics.FireScenario:
    """Physical scenario for one model kind; raises ValueError on bad values."""
    return analytics.FireScenario(
        density=config.density,
        radius_model=HybridRadiusModel(config.r_in, config.r_out),
        growth=FireGrowthParams(alpha=config.alpha, kind=kind, v_x=config.v_x, V=config.V),
        critical_area=config.critical_area,
        tau=config.tau,
    )


def time_grid(config: ScenarioConfig, scenario: analytics.FireScenario) -> np.ndarray:
    stop = config.t_stop if config.t_stop is not None else analytics.critical_time(scenario)
    return np.linspace(config.t_start, stop, config.t_steps)


def _fmt(value) -> str:
    """CSV/summary number format: 9 significant digits."""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".9g")


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(value) for value in row])


def cmd_analyze(config: ScenarioConfig) -> int:
    """Analytic curves per model; summary prints t_cr, p_f, lambda_cr."""
    rows = []
    for kind in selected_kinds(config):
        scenario = build_scenario(config, kind)
        for t in time_grid(config, scenario):
            rows.append(
                (
                    kind.value,
                    t,
                    analytics.sensing_probability(scenario, float(t)),
                    analytics.mean_detectors(scenario, float(t)),
                )
            )
        print(
            f"model={kind.value}"
            f" t_cr[s]={_fmt(analytics.critical_time(scenario))}"
            f" p_f[-]={_fmt(analytics.detection_probability(scenario))}"
            f" lambda_cr[1/m^2]={_fmt(analytics.critical_density(scenario))}"
        )
    out = config.out or "analyze.csv"
    _write_csv(out, ("model[-]", "t[s]", "p_analytic[-]", "n_mean_detectors[-]"), rows)
    print(f"wrote {out}")
    return EXIT_OK


def cmd_simulate(config: ScenarioConfig) -> int:
    """Monte Carlo validation of the analytic curve, per model.

    A grid point violates the band when |p_hat - p| exceeds three binomial
    standard deviations computed under the analytic p. Violations on the
    convex kinds set exit code 1; the piriform band is informational.
    """
    rows = []
    failed = False
    for kind in selected_kinds(config):
        scenario = build_scenario(config, kind)
        grid = time_grid(config, scenario)
        curve = estimate_sensing_probability(
            scenario,
            grid,
            config.n_realizations,
            config.seed,
            n_threads=config.threads,
        )
        worst = 0.0
        violated = False
        for t, p_hat, stderr in zip(curve.times, curve.probabilities, curve.stderrs):
            p = analytics.sensing_probability(scenario, t)
            rows.append((kind.value, t, p, p_hat, stderr, config.n_realizations))
            band = 3.0 * math.sqrt(p * (1.0 - p) / config.n_realizations)
            gap = abs(p_hat - p)
            violated |= gap > band
            if band > 0.0:
                worst = max(worst, gap / (band / 3.0))
        informational = kind is FireModelKind.PIRIFORM
        if violated and not informational:
            failed = True
        status = "violated" if violated else "ok"
        note = " (informational: non-convex closed form is an upper bound)" if informational else ""
        print(
            f"model={kind.value} n={config.n_realizations}"
            f" max_abs_z={worst:.3f} band_3sigma={status}{note}"
        )
    out = config.out or "simulate.csv"
    _write_csv(
        out,
        ("model[-]", "t[s]", "p_analytic[-]", "p_empirical[-]", "stderr[-]", "n[-]"),
        rows,
    )
    print(f"wrote {out}")
    return EXIT_VALIDATION if failed else EXIT_OK


def cmd_sweep(config: ScenarioConfig) -> int:
    """One row per sweep value per model: t_cr, lambda_cr(tau), p_f."""
    axis = config.sweep_axis
    if config.sweep_values is not None:
        values = [float(v) for v in config.sweep_values]
    else:
        values = [float(v) for v in np.linspace(config.sweep_start, config.sweep_stop, config.sweep_steps)]
    rows = []
    for kind in selected_kinds(config):
        for value in values:
            if axis == "wind":
                swept = replace(config, v_x=value)
            elif axis == "density":
                swept = replace(config, density=value)
            else:
                swept = replace(config, tau=value)
            scenario = build_scenario(swept, kind)
            rows.append(
                (
                    kind.value,
                    value,
                    analytics.critical_time(scenario),
                    analytics.critical_density(scenario),
                    analytics.detection_probability(scenario),
                )
            )
    out = config.out or "sweep.csv"
    _write_csv(
        out,
        ("model[-]", _AXIS_COLUMNS[axis], "t_cr[s]", "lambda_cr[1/m^2]", "p_f[-]"),
        rows,
    )
    print(f"wrote {out}")
    return EXIT_OK


_COMMANDS = {"analyze": cmd_analyze, "simulate": cmd_simulate, "sweep": cmd_sweep}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="firesense",
        description="Detection analytics for randomly deployed fire-sensor networks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, handler in _COMMANDS.items():
        sub = commands.add_parser(name, help=handler.__doc__.splitlines()[0].lower())
        sub.add_argument("--config", default=None, help="YAML config path (defaults built in)")
        sub.add_argument("--model", default=None, choices=MODEL_CHOICES, help="restrict the model kind")
        sub.add_argument("--seed", default=None, type=int, help="master seed override")
        sub.add_argument("--out", default=None, help="CSV output path override")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = load_config(args.config) if args.config else ScenarioConfig()
        overrides = {
            name: value
            for name, value in (("model", args.model), ("seed", args.seed), ("out", args.out))
            if value is not None
        }
        if overrides:
            config = replace(config, **overrides)
        validate_config(config)
        return _COMMANDS[args.command](config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"invalid parameter: {exc}", file=sys.stderr)
        return EXIT_CONFIG
