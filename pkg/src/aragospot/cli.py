"""Command-line interface and the file formats it owns.

Subcommands: ``profile`` (intensity CSV), ``fwhm`` (width from a CSV),
``scenario`` (estimation-pipeline JSON), ``sweep`` (parameter sweep CSV)
and ``constants`` (active constants profile as JSON).

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O
failure -- nothing else.  All file writes are atomic (temp file in the
target directory, then rename), and identical configurations produce
byte-identical output regardless of the worker-thread count.

Profile CSV format: header exactly ``r_m,intensity_rel``, rows in
scientific notation with 9 significant digits, ``\\n`` newlines, one
trailing newline.  The JSON report is a flat object with snake_case keys
carrying unit suffixes.

Configuration is taken from flags, or from a ``key=value`` config file
mirroring the flag names (flags override the file).  No environment
variables are consulted; every input lives in flags or the config file so
runs are reproducible from their command line alone.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constants import PROFILE_NAMES, constants_profile
from .fresnel import (
    DiffractionScenario,
    HalfMaxNotFoundError,
    IntensityProfile,
    NonCentralPeakError,
    QuadratureConvergenceError,
    QuadratureSettings,
    arago_width,
    fwhm,
    intensity_profile,
)
from .pipeline import PipelineError, PipelineReport, run_paper_pipeline

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

CSV_HEADER = "r_m,intensity_rel"
SWEEP_HEADER = "param,value,fwhm_m,arago_width_m"
SWEEP_PARAMS = ("lambda_m", "radius_m", "r1_m", "eta_per_m2")

REPORT_KEYS = (
    "lambda_db_m",
    "delta_spot_m",
    "alpha",
    "f_pass_per_s",
    "f_diffract_per_s",
    "contrast",
    "t_obs_s",
    "n_events",
    "delta_p_kgms",
    "delta_p_random_walk_kgms",
    "delta_p_coherent_kgms",
    "delta_v_ms",
    "sector_probability",
    "aligned_log10_probability",
)
_REPORT_FIELD_FOR_KEY = {
    "lambda_db_m": "lambda_db",
    "delta_spot_m": "delta_spot",
    "alpha": "alpha",
    "f_pass_per_s": "f_pass",
    "f_diffract_per_s": "f_diffract",
    "contrast": "contrast",
    "t_obs_s": "t_obs",
    "n_events": "n_events",
    "delta_p_kgms": "delta_p",
    "delta_p_random_walk_kgms": "delta_p_random_walk",
    "delta_p_coherent_kgms": "delta_p_coherent",
    "delta_v_ms": "delta_v",
    "sector_probability": "sector_probability",
    "aligned_log10_probability": "aligned_log10_probability",
}


@dataclass
class RunConfig:
    """Scenario, grid, quadrature and execution settings for one run."""

    lambda_m: float = 1e-12
    r0_m: float = 4e8
    r1_m: float = 4e8
    radius_m: float = 0.04
    eta_per_m2: float = 2e-3
    r_max_m: float | None = None  # defaults to lambda*r1/R when unset
    points: int = 401
    rel_tol: float = 1e-8
    max_panels: int = 20000
    nodes_per_panel: int = 12
    acceleration: str = "alternating_series_extrapolation"
    threads: int = 0  # 0 -> available parallelism
    output: str | None = None
    format: str = "csv"

    def scenario(self) -> DiffractionScenario:
        return DiffractionScenario(
            wavelength=self.lambda_m,
            source_distance=self.r0_m,
            screen_distance=self.r1_m,
            disc_radius=self.radius_m,
            eta=self.eta_per_m2,
        )

    def quadrature(self) -> QuadratureSettings:
        return QuadratureSettings(
            rel_tol=self.rel_tol,
            max_panels=self.max_panels,
            nodes_per_panel=self.nodes_per_panel,
            acceleration=self.acceleration,
        )

    def effective_r_max(self) -> float:
        if self.r_max_m is not None:
            return self.r_max_m
        return arago_width(self.lambda_m, self.r1_m, self.radius_m)

    def effective_threads(self) -> int:
        if self.threads and self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


_CONFIG_FIELD_TYPES = {
    "lambda_m": float,
    "r0_m": float,
    "r1_m": float,
    "radius_m": float,
    "eta_per_m2": float,
    "r_max_m": float,
    "points": int,
    "rel_tol": float,
    "max_panels": int,
    "nodes_per_panel": int,
    "acceleration": str,
    "threads": int,
    "output": str,
    "format": str,
    "profile": str,
}


def load_config_file(path: str) -> dict:
    """Parse a key=value config file mirroring the flag names."""
    values: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValueError(f"cannot read config file {path!r}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        text = text.strip()
        if key not in _CONFIG_FIELD_TYPES:
            raise ValueError(f"{path}:{lineno}: unknown configuration key {key!r}")
        caster = _CONFIG_FIELD_TYPES[key]
        try:
            values[key] = caster(text)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad value for {key}: {text!r}") from exc
    return values


def _merged_config(args: argparse.Namespace) -> RunConfig:
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    cfg = RunConfig()
    for name in _CONFIG_FIELD_TYPES:
        if name == "profile":
            continue
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            setattr(cfg, name, flag_value)
        elif name in file_values:
            setattr(cfg, name, file_values[name])
    if cfg.points < 3 or cfg.points % 2 == 0:
        raise ValueError(f"points must be odd and >= 3, got {cfg.points}")
    if cfg.threads < 0:
        raise ValueError(f"threads must be >= 1 (or 0 for auto), got {cfg.threads}")
    return cfg


# ---------------------------------------------------------------------------
# File formats


def _atomic_write_text(path: str, text: str) -> None:
    """Write text to path via a temp file + rename; no partial file survives."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".arago-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def format_profile_csv(profile: IntensityProfile) -> str:
    rows = [CSV_HEADER]
    for r, value in zip(profile.radii, profile.intensity_rel):
        rows.append(f"{r:.8e},{value:.8e}")
    return "\n".join(rows) + "\n"


def parse_profile_csv(text: str, source: str = "<csv>") -> IntensityProfile:
    """Parse the profile CSV format; ValueError messages carry line numbers."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(
            f"{source}:1: expected header {CSV_HEADER!r}, "
            f"got {(lines[0] if lines else '')!r}"
        )
    radii = []
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise ValueError(f"{source}:{lineno}: expected two comma-separated fields")
        try:
            r = float(parts[0])
            v = float(parts[1])
        except ValueError:
            raise ValueError(f"{source}:{lineno}: non-numeric row {line!r}") from None
        if not (math.isfinite(r) and math.isfinite(v)):
            raise ValueError(f"{source}:{lineno}: non-finite row {line!r}")
        radii.append(r)
        values.append(v)
    if len(radii) < 3:
        raise ValueError(f"{source}: profile needs at least 3 rows, got {len(radii)}")
    try:
        return IntensityProfile(
            radii=np.array(radii), intensity_rel=np.array(values), scenario=None
        )
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from exc


def serialize_report(report: PipelineReport) -> dict:
    """Flatten a pipeline report into the stable JSON schema."""
    out: dict = {}
    for key in REPORT_KEYS:
        out[key] = report.entries[_REPORT_FIELD_FOR_KEY[key]].value
    out["profile"] = report.profile
    return out


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Subcommands


def cmd_profile(args: argparse.Namespace) -> int:
    cfg = _merged_config(args)
    if cfg.output is None:
        raise ValueError("profile requires --output PATH for the CSV")
    scenario = cfg.scenario()
    started = time.perf_counter()
    prof = intensity_profile(
        scenario,
        cfg.effective_r_max(),
        cfg.points,
        cfg.quadrature(),
        threads=cfg.effective_threads(),
    )
    elapsed = time.perf_counter() - started
    _atomic_write_text(cfg.output, format_profile_csv(prof))
    centre = prof.intensity_rel[prof.radii.size // 2]
    print(
        f"profile: {cfg.points} points over [-{cfg.effective_r_max():.6e}, "
        f"{cfg.effective_r_max():.6e}] m; centre intensity {centre:.6f}; "
        f"{elapsed:.2f} s -> {cfg.output}"
    )
    return EXIT_OK


def cmd_fwhm(args: argparse.Namespace) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {args.input!r}: {exc}") from exc
    prof = parse_profile_csv(text, source=args.input)
    width = fwhm(prof)
    if args.format == "json":
        print(json.dumps({"fwhm_m": width}))
    else:
        print(f"{width:.5e}")
    return EXIT_OK


def cmd_scenario(args: argparse.Namespace) -> int:
    profile_name = args.profile or "paper"
    report = run_paper_pipeline(profile_name)
    text = _dump_json(serialize_report(report))
    if args.output:
        _atomic_write_text(args.output, text)
        print(f"scenario report ({profile_name}) -> {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    profile_name = args.profile or "paper"
    constants = constants_profile(profile_name)
    payload = {"profile": constants.profile}
    payload.update(constants.numeric_fields())
    text = _dump_json(payload)
    if args.output:
        _atomic_write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _sweep_values(args: argparse.Namespace) -> np.ndarray:
    if args.sweep_count < 1:
        raise ValueError("sweep count must be >= 1")
    if args.sweep_min <= 0 or args.sweep_max <= 0:
        raise ValueError("sweep range must be positive")
    if args.sweep_count == 1:
        return np.array([args.sweep_min])
    if args.sweep_scale == "log":
        return np.geomspace(args.sweep_min, args.sweep_max, args.sweep_count)
    return np.linspace(args.sweep_min, args.sweep_max, args.sweep_count)


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _merged_config(args)
    if cfg.output is None:
        raise ValueError("sweep requires --output PATH for the CSV")
    if args.sweep_param not in SWEEP_PARAMS:
        raise ValueError(
            f"sweep parameter must be one of {SWEEP_PARAMS}, got {args.sweep_param!r}"
        )
    values = _sweep_values(args)
    quadrature = cfg.quadrature()

    def _point(value: float) -> tuple[float, float]:
        point_cfg = RunConfig(**{**cfg.__dict__, args.sweep_param: float(value)})
        scenario = point_cfg.scenario()
        prof = intensity_profile(
            scenario,
            point_cfg.effective_r_max(),
            point_cfg.points,
            quadrature,
            threads=1,  # parallelism is across sweep points here
        )
        width = fwhm(prof)
        analytic = arago_width(
            point_cfg.lambda_m, point_cfg.r1_m, point_cfg.radius_m
        )
        return width, analytic

    threads = cfg.effective_threads()
    if threads == 1 or values.size == 1:
        results = [_point(v) for v in values]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_point, values))

    rows = [SWEEP_HEADER]
    for value, (width, analytic) in zip(values, results):
        rows.append(f"{args.sweep_param},{value:.8e},{width:.8e},{analytic:.8e}")
    _atomic_write_text(cfg.output, "\n".join(rows) + "\n")
    print(f"sweep: {values.size} points of {args.sweep_param} -> {cfg.output}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda-m", dest="lambda_m", type=float, default=None,
                        help="wavelength [m]")
    parser.add_argument("--r0-m", dest="r0_m", type=float, default=None,
                        help="source distance [m] (cancels in relative intensity)")
    parser.add_argument("--r1-m", dest="r1_m", type=float, default=None,
                        help="screen distance [m]")
    parser.add_argument("--radius-m", dest="radius_m", type=float, default=None,
                        help="disc radius [m]")
    parser.add_argument("--eta", dest="eta_per_m2", type=float, default=None,
                        help="regularization [1/m^2]")
    parser.add_argument("--r-max-m", dest="r_max_m", type=float, default=None,
                        help="grid half-width [m]; default lambda*r1/R")
    parser.add_argument("--points", dest="points", type=int, default=None,
                        help="grid points (odd, >= 3)")
    parser.add_argument("--rel-tol", dest="rel_tol", type=float, default=None,
                        help="quadrature relative tolerance")
    parser.add_argument("--max-panels", dest="max_panels", type=int, default=None)
    parser.add_argument("--nodes-per-panel", dest="nodes_per_panel", type=int,
                        default=None)
    parser.add_argument("--acceleration", dest="acceleration", default=None,
                        choices=("none", "alternating_series_extrapolation"))
    parser.add_argument("--threads", dest="threads", type=int, default=None,
                        help="worker threads; default: available parallelism")
    parser.add_argument("--output", "-o", dest="output", default=None)
    parser.add_argument("--format", dest="format", default=None,
                        choices=("csv", "json"))
    parser.add_argument("--config", dest="config", default=None,
                        help="key=value config file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arago",
        description="Opaque-disc diffraction profiles and the chained "
                    "solar-neutrino estimation report.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_profile = sub.add_parser("profile", help="compute an intensity profile CSV")
    _add_scenario_flags(p_profile)
    p_profile.set_defaults(func=cmd_profile)

    p_fwhm = sub.add_parser("fwhm", help="extract the FWHM from a profile CSV")
    p_fwhm.add_argument("input", help="profile CSV path")
    p_fwhm.add_argument("--format", default="text", choices=("text", "json"))
    p_fwhm.set_defaults(func=cmd_fwhm)

    p_scenario = sub.add_parser("scenario",
                                help="run the estimation pipeline, emit JSON")
    p_scenario.add_argument("--profile", choices=PROFILE_NAMES, default=None)
    p_scenario.add_argument("--output", "-o", default=None)
    p_scenario.set_defaults(func=cmd_scenario)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter, emit FWHM CSV")
    _add_scenario_flags(p_sweep)
    p_sweep.add_argument("--sweep-param", required=True, choices=SWEEP_PARAMS)
    p_sweep.add_argument("--sweep-min", type=float, required=True)
    p_sweep.add_argument("--sweep-max", type=float, required=True)
    p_sweep.add_argument("--sweep-count", type=int, required=True)
    p_sweep.add_argument("--sweep-scale", choices=("log", "linear"), default="log")
    p_sweep.set_defaults(func=cmd_sweep)

    p_constants = sub.add_parser("constants",
                                 help="dump the active constants profile as JSON")
    p_constants.add_argument("--profile", choices=PROFILE_NAMES, default=None)
    p_constants.add_argument("--output", "-o", default=None)
    p_constants.set_defaults(func=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QuadratureConvergenceError, HalfMaxNotFoundError, NonCentralPeakError,
            PipelineError) as exc:
        print(f"arago: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"arago: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"arago: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
