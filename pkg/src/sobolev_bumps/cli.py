"""Command-line front end emitting profile tables, norm curves and reports.

Subcommands write CSV (with '#'-prefixed metadata) or JSON to a file or
stdout; floats carry 17 significant digits so downstream plots and
regression diffs are lossless.  Identical configurations produce
byte-identical output.  With --plot a matplotlib rendering of the emitted
table is saved next to the data.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .analysis import (
    beta_curve,
    run_validation,
    sobolev_norm_1d,
    wendland_norm_compare,
)
from .bump_core import (
    BumpProblem,
    NonPositiveG0,
    SingularSystem,
    solve_bump,
    translate_1d,
)
from .kernels import KernelSpec, wendland_phi31
from .quadrature import NonConvergence, QuadratureConfig

__all__ = ["RunConfig", "build_parser", "main", "entrypoint"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_COMMANDS = ("profile", "beta", "scaling", "compare-wendland", "translates", "validate")
_DEFAULT_CENTERS = (-0.66, -0.33, 0.0, 0.33, 0.66)


@dataclass
class RunConfig:
    """Everything a run depends on; round-trips through the JSON output."""

    command: str
    d: int = 1
    m: float = 1.0
    r: float = 1.0
    r_min: float | None = None
    r_max: float | None = None
    r_count: int = 13
    r_spacing: str = "log"
    samples: int = 201
    tol: float = 1e-10
    seed: int = 0
    format: str = "csv"
    output: str = "-"
    plot: str | None = None
    centers: tuple[float, ...] = _DEFAULT_CENTERS

    def __post_init__(self) -> None:
        if self.command not in _COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")
        if self.r_spacing not in ("lin", "log"):
            raise ValueError("r-spacing must be 'lin' or 'log'")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be 'csv' or 'json'")
        self.centers = tuple(float(c) for c in self.centers)

    def to_dict(self) -> dict:
        """Semantic fields only; output destinations are not part of the run."""
        data = asdict(self)
        data.pop("output")
        data.pop("plot")
        data["centers"] = list(self.centers)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        kwargs = dict(data)
        kwargs["centers"] = tuple(kwargs.get("centers", _DEFAULT_CENTERS))
        return cls(**kwargs)

    def spec(self) -> KernelSpec:
        return KernelSpec(self.d, self.m)

    def quad(self) -> QuadratureConfig:
        return QuadratureConfig(tol=self.tol)

    def r_grid(self) -> np.ndarray:
        if self.r_min is None or self.r_max is None:
            raise ValueError("this command needs --r-min and --r-max")
        if not 0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r-min < r-max")
        if self.r_count < 2:
            raise ValueError("need at least 2 grid points")
        if self.r_spacing == "log":
            return np.geomspace(self.r_min, self.r_max, self.r_count)
        return np.linspace(self.r_min, self.r_max, self.r_count)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def render_csv(command: str, metadata: dict, columns, rows, summary: dict | None = None) -> str:
    lines = [f"# sobolev-bumps {command}", f"# version: {__version__}"]
    lines.extend(f"# {key}: {_fmt(val)}" for key, val in metadata.items())
    lines.append(",".join(columns))
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    if summary is not None:
        lines.append("# summary: " + json.dumps(summary, sort_keys=True))
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.generic):
        return value.item()
    return value


def render_json(
    command: str,
    cfg: RunConfig,
    metadata: dict,
    columns,
    rows,
    summary: dict | None = None,
) -> str:
    doc = {
        "command": command,
        "version": __version__,
        "config": cfg.to_dict(),
        "metadata": {k: _jsonable(v) for k, v in metadata.items()},
        "columns": list(columns),
        "rows": [[_jsonable(v) for v in row] for row in rows],
    }
    if summary is not None:
        doc["summary"] = summary
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _render(cfg: RunConfig, metadata: dict, columns, rows, summary=None) -> str:
    if cfg.format == "json":
        return render_json(cfg.command, cfg, metadata, columns, rows, summary)
    return render_csv(cfg.command, metadata, columns, rows, summary)


def cmd_profile(cfg: RunConfig) -> tuple[int, str, dict]:
    """Bump profile table over [0, 1.05 r], zeros past r showing the support."""
    bump = solve_bump(BumpProblem(cfg.spec(), cfg.r, cfg.quad()))
    ts = np.linspace(0.0, 1.05 * cfg.r, cfg.samples)
    values = bump.evaluate(ts)
    inside = values[ts <= cfg.r]
    metadata = {
        "d": cfg.d,
        "m": cfg.m,
        "r": cfg.r,
        "beta": bump.beta,
        "tol": cfg.tol,
        "observed_nonnegative": bool(np.all(inside >= -1e-12)),
        "observed_nonincreasing": bool(np.all(np.diff(inside) <= 1e-10)),
    }
    rows = [(float(t), float(v)) for t, v in zip(ts, values)]
    payload = {"ts": ts, "values": values, "metadata": metadata}
    return EXIT_OK, _render(cfg, metadata, ("t", "b_r_star"), rows), payload


def _beta_table(cfg: RunConfig) -> tuple[int, str, dict]:
    spec = cfg.spec()
    curve = beta_curve(spec, cfg.r_grid(), cfg.quad())
    rows = []
    prev = None
    for r, beta in zip(curve.rs, curve.betas):
        ok = bool(np.isfinite(beta))
        lower_ok = bool(ok and beta**2 >= 1.0 - 1e-12)
        monotone_ok = bool(ok and (prev is None or beta < prev))
        rows.append((float(r), float(beta), float(beta**2), lower_ok, monotone_ok))
        if ok:
            prev = beta
    expected = spec.d / 2 - spec.m
    summary = {
        "slope": None if not np.isfinite(curve.slope) else curve.slope,
        "expected": expected,
        "pass": bool(np.isfinite(curve.slope) and abs(curve.slope - expected) <= 0.05),
        "n_failed": len(curve.failures),
    }
    metadata = {"d": cfg.d, "m": cfg.m, "tol": cfg.tol, "r_spacing": cfg.r_spacing}
    text = _render(cfg, metadata, ("r", "beta", "beta_sq", "lower_bound_ok", "monotone_ok"), rows, summary)
    code = EXIT_NUMERICAL if curve.failures else EXIT_OK
    payload = {"curve": curve, "summary": summary}
    return code, text, payload


def cmd_beta(cfg: RunConfig) -> tuple[int, str, dict]:
    """Norm curve over the requested r-grid."""
    return _beta_table(cfg)


def cmd_scaling(cfg: RunConfig) -> tuple[int, str, dict]:
    """Norm curve plus enforcement of the small-radius slope law."""
    code, text, payload = _beta_table(cfg)
    if code == EXIT_OK and not payload["summary"]["pass"]:
        code = EXIT_VALIDATION
    return code, text, payload


def cmd_compare_wendland(cfg: RunConfig) -> tuple[int, str, dict]:
    """Optimal bump against the Wendland comparator of the same radius (d=1, m=1)."""
    if cfg.d != 1 or cfg.m != 1.0:
        raise ValueError("compare-wendland supports d=1, m=1 only")
    bump = solve_bump(BumpProblem(cfg.spec(), cfg.r, cfg.quad()))
    wnorm, beta = wendland_norm_compare(cfg.r, cfg.quad())
    ts = np.linspace(0.0, 1.05 * cfg.r, cfg.samples)
    bvals = bump.evaluate(ts)
    wvals = wendland_phi31(ts, cfg.r)
    metadata = {
        "d": cfg.d,
        "m": cfg.m,
        "r": cfg.r,
        "beta": beta,
        "wendland_norm": wnorm,
        "tol": cfg.tol,
    }
    rows = [(float(t), float(b), float(w)) for t, b, w in zip(ts, bvals, wvals)]
    payload = {"ts": ts, "bump": bvals, "wendland": wvals, "metadata": metadata}
    return EXIT_OK, _render(cfg, metadata, ("t", "b_r_star", "wendland"), rows), payload


def cmd_translates(cfg: RunConfig) -> tuple[int, str, dict]:
    """Zero-trace kernel translates for a list of centers (d=1, m=1)."""
    if cfg.d != 1 or cfg.m != 1.0:
        raise ValueError("translates supports d=1, m=1 only")
    for x in cfg.centers:
        if not abs(x) < cfg.r:
            raise ValueError(f"center {x} does not lie strictly inside (-{cfg.r}, {cfg.r})")
    reps = [translate_1d(cfg.r, x) for x in cfg.centers]
    ys = np.linspace(-1.05 * cfg.r, 1.05 * cfg.r, cfg.samples)
    curves = [rep.evaluate(ys) for rep in reps]
    columns = ["y"] + [f"g_r_at_{x:g}" for x in cfg.centers]
    rows = [
        (float(y), *[float(c[i]) for c in curves]) for i, y in enumerate(ys)
    ]
    metadata = {
        "d": cfg.d,
        "m": cfg.m,
        "r": cfg.r,
        "centers": ",".join(f"{x:g}" for x in cfg.centers),
        "norms": ",".join(_fmt(rep.norm) for rep in reps),
        "tol": cfg.tol,
    }
    payload = {"ys": ys, "curves": curves, "centers": cfg.centers, "metadata": metadata}
    return EXIT_OK, _render(cfg, metadata, columns, rows), payload


def _cli_self_checks(seed: int) -> list[dict]:
    """Determinism and JSON round-trip checks over a small reference run."""
    probe = RunConfig(command="profile", d=1, m=1.0, r=1.0, samples=5, format="json", seed=seed)
    _, first, _ = cmd_profile(probe)
    _, second, _ = cmd_profile(probe)
    deterministic = first == second
    parsed = json.loads(first)
    roundtrip = RunConfig.from_dict(parsed["config"]).to_dict() == probe.to_dict()
    return [
        {"name": "cli_output_deterministic", "value": float(deterministic), "threshold": 1.0, "op": ">=", "pass": deterministic},
        {"name": "cli_json_config_roundtrip", "value": float(roundtrip), "threshold": 1.0, "op": ">=", "pass": roundtrip},
    ]


def cmd_validate(cfg: RunConfig) -> tuple[int, str, dict]:
    """Full invariant suite; always a JSON report (the point is the structure)."""
    report = run_validation(seed=cfg.seed, quad=cfg.quad())
    report["checks"].extend(_cli_self_checks(cfg.seed))
    report["pass"] = bool(all(c["pass"] for c in report["checks"]))
    doc = {
        "command": "validate",
        "version": __version__,
        "config": cfg.to_dict(),
        **report,
    }
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    code = EXIT_OK if report["pass"] else EXIT_VALIDATION
    return code, text, {"report": report}


_DISPATCH = {
    "profile": cmd_profile,
    "beta": cmd_beta,
    "scaling": cmd_scaling,
    "compare-wendland": cmd_compare_wendland,
    "translates": cmd_translates,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sobolev-bumps",
        description="Norm-minimal compactly supported functions in Sobolev spaces",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, default=1, help="spatial dimension (1 or 2)")
    common.add_argument("--m", type=float, default=1.0, help="Sobolev smoothness (multiple of 1/2)")
    common.add_argument("--r", type=float, default=1.0, help="support radius")
    common.add_argument("--r-min", type=float, default=None, help="range start for curve commands")
    common.add_argument("--r-max", type=float, default=None, help="range end for curve commands")
    common.add_argument("--r-count", type=int, default=13, help="number of radii in the range")
    common.add_argument("--r-spacing", choices=("lin", "log"), default="log")
    common.add_argument("--samples", type=int, default=201, help="profile sample count")
    common.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for validation")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default="-", help="output path, '-' for stdout")
    common.add_argument("--plot", default=None, help="also render a figure to this path")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("profile", parents=[common], help="bump profile table")
    sub.add_parser("beta", parents=[common], help="norm curve over an r-range")
    sub.add_parser("scaling", parents=[common], help="norm curve plus slope-law check")
    sub.add_parser("compare-wendland", parents=[common], help="bump vs Wendland comparator")
    tr = sub.add_parser("translates", parents=[common], help="zero-trace kernel translates")
    tr.add_argument(
        "--centers",
        default=",".join(f"{x:g}" for x in _DEFAULT_CENTERS),
        help="comma-separated translate centers inside (-r, r)",
    )
    sub.add_parser("validate", parents=[common], help="run the invariant suite (JSON report)")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    centers = _DEFAULT_CENTERS
    if getattr(args, "centers", None) is not None:
        centers = tuple(float(tok) for tok in str(args.centers).split(",") if tok.strip())
    return RunConfig(
        command=args.command,
        d=args.d,
        m=args.m,
        r=args.r,
        r_min=args.r_min,
        r_max=args.r_max,
        r_count=args.r_count,
        r_spacing=args.r_spacing,
        samples=args.samples,
        tol=args.tol,
        seed=args.seed,
        format=args.format,
        output=args.output,
        plot=args.plot,
        centers=centers,
    )


def _write_output(text: str, destination: str) -> None:
    if destination == "-":
        sys.stdout.write(text)
    else:
        with open(destination, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        code, text, payload = _DISPATCH[cfg.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergence, SingularSystem, NonPositiveG0, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _write_output(text, cfg.output)
    if cfg.plot is not None:
        from . import figures

        figures.save_figure(cfg.command, payload, cfg.plot)
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
