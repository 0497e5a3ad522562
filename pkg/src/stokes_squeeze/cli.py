"""Command-line front end: sweeps, single-state reports, Husimi grids, NOON
metrics, and the self-verification suite.

Output files are byte-identical across runs for identical invocations; CSV
renders real numbers with 12 significant digits and an unbounded zeta^2 as an
empty field.  STOKES_SQUEEZE_THREADS (positive integer) caps the internal
worker count used for sweep evaluation.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .elements import vpp_success_probability
from .husimi import SphereGrid, q_grid
from .squeezing import SqueezingReport, decibels, squeezing_report
from .states import noon_state, triphoton_amplitudes, triphoton_seed, triphoton_state
from .verify import run_checks

SWEEP_FIELDS = (
    "T",
    "c2",
    "c3",
    "mean_s1",
    "mean_s2",
    "mean_s3",
    "v_minus",
    "v_plus",
    "xi2",
    "chi2",
    "zeta2",
    "zeta2_unbounded",
    "xi2_db",
    "chi2_db",
    "vpp_success_probability",
)

#: exact samples guaranteed to appear in every sweep that covers them
SWEEP_LANDMARKS = (1.0, math.sqrt(3.0))


@dataclass(frozen=True)
class SweepRecord:
    """One row of a transmissivity sweep."""

    T: float
    c2: float
    c3: float
    mean_s1: float
    mean_s2: float
    mean_s3: float
    v_minus: float
    v_plus: float
    xi2: float
    chi2: float
    zeta2: float | None
    zeta2_unbounded: bool
    xi2_db: float | None
    chi2_db: float | None
    vpp_success_probability: float

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in SWEEP_FIELDS}


def _fmt(value) -> str:
    """Render a scalar for CSV: 12 significant digits, empty for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return format(float(value), ".12g")


def _max_workers() -> int:
    raw = os.environ.get("STOKES_SQUEEZE_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise ValueError(f"STOKES_SQUEEZE_THREADS must be a positive integer, got {raw!r}")
    return workers


def _map_ordered(func, items):
    """Map preserving order, optionally on a capped thread pool."""
    workers = _max_workers()
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def sweep_samples(t_min: float, t_max: float, steps: int) -> list[float]:
    """Uniform inclusive grid plus the exact landmark values inside the range."""
    if steps < 2:
        raise ValueError(f"sweep needs at least 2 steps, got {steps}")
    if t_min < 0 or not t_min < t_max:
        raise ValueError(f"invalid sweep range [{t_min}, {t_max}]")
    samples = list(np.linspace(t_min, t_max, steps))
    for landmark in SWEEP_LANDMARKS:
        if t_min <= landmark <= t_max and landmark not in samples:
            samples.append(landmark)
    return sorted(samples)


def sweep_record(t_ratio: float) -> SweepRecord:
    """Evaluate the full triphoton report at one transmissivity ratio."""
    c2, c3 = triphoton_amplitudes(t_ratio)
    report = squeezing_report(triphoton_state(t_ratio))
    return SweepRecord(
        T=t_ratio,
        c2=c2,
        c3=c3,
        mean_s1=report.mean.components[0],
        mean_s2=report.mean.components[1],
        mean_s3=report.mean.components[2],
        v_minus=report.v_minus,
        v_plus=report.v_plus,
        xi2=report.xi2,
        chi2=report.chi2,
        zeta2=report.zeta2,
        zeta2_unbounded=report.zeta2_unbounded,
        xi2_db=decibels(report.xi2),
        chi2_db=decibels(report.chi2),
        vpp_success_probability=vpp_success_probability(triphoton_seed(), t_ratio),
    )


def report_to_dict(report: SqueezingReport) -> dict:
    return {
        "mean": [float(x) for x in report.mean.components],
        "mean_length": report.mean.length,
        "transverse_radius": report.mean.transverse_radius,
        "frame": {
            "theta": report.frame.theta,
            "phi": report.frame.phi,
            "degenerate": report.frame.degenerate,
            "n1": [float(x) for x in report.frame.n1],
            "n2": [float(x) for x in report.frame.n2],
            "n3": [float(x) for x in report.frame.n3],
        },
        "ellipse": {
            "A": report.ellipse.A,
            "B": report.ellipse.B,
            "C": report.ellipse.C,
            "gamma_opt": report.ellipse.gamma_opt,
            "isotropic": report.ellipse.isotropic,
        },
        "v_minus": report.v_minus,
        "v_plus": report.v_plus,
        "xi2": report.xi2,
        "xi2_db": decibels(report.xi2),
        "zeta2": report.zeta2,
        "zeta2_unbounded": report.zeta2_unbounded,
        "chi2": report.chi2,
        "chi2_db": decibels(report.chi2),
        "qfi": report.qfi,
        "snl": report.snl,
    }


def _report_lines(report: SqueezingReport) -> list[str]:
    zeta = "unbounded" if report.zeta2_unbounded else _fmt(report.zeta2)
    xi_db = decibels(report.xi2)
    chi_db = decibels(report.chi2)
    return [
        f"mean <S>   = ({_fmt(report.mean.components[0])}, "
        f"{_fmt(report.mean.components[1])}, {_fmt(report.mean.components[2])})"
        f"   |<S>| = {_fmt(report.mean.length)}",
        f"frame      theta = {_fmt(report.frame.theta)}, phi = {_fmt(report.frame.phi)}, "
        f"degenerate = {_fmt(report.frame.degenerate)}",
        f"ellipse    A = {_fmt(report.ellipse.A)}, B = {_fmt(report.ellipse.B)}, "
        f"C = {_fmt(report.ellipse.C)}, gamma_opt = {_fmt(report.ellipse.gamma_opt)}, "
        f"isotropic = {_fmt(report.ellipse.isotropic)}",
        f"v_minus    = {_fmt(report.v_minus)}",
        f"v_plus     = {_fmt(report.v_plus)}",
        f"xi2        = {_fmt(report.xi2)}"
        + (f" ({_fmt(xi_db)} dB)" if xi_db is not None else ""),
        f"zeta2      = {zeta}",
        f"chi2       = {_fmt(report.chi2)}"
        + (f" ({_fmt(chi_db)} dB)" if chi_db is not None else ""),
        f"qfi        = {_fmt(report.qfi)}",
        f"snl        = {_fmt(report.snl)}",
    ]


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def cmd_sweep(args) -> int:
    samples = sweep_samples(args.t_min, args.t_max, args.steps)
    records = _map_ordered(sweep_record, samples)
    if args.format == "csv":
        lines = [",".join(SWEEP_FIELDS)]
        for record in records:
            lines.append(",".join(_fmt(value) for value in record.as_dict().values()))
        _write_text(args.output, "\n".join(lines) + "\n")
    else:
        payload = {
            "meta": {
                "command": "sweep",
                "parameters": {
                    "t_min": args.t_min,
                    "t_max": args.t_max,
                    "steps": args.steps,
                },
                "spin": 1.5,
                "dimension": 4,
            },
            "records": [record.as_dict() for record in records],
        }
        _write_text(args.output, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_state(args) -> int:
    if args.T < 0:
        raise ValueError(f"transmissivity ratio must be >= 0, got {args.T}")
    state = triphoton_state(args.T)
    space = state.space
    c2, c3 = triphoton_amplitudes(args.T)
    report = squeezing_report(state)
    if args.format == "json":
        payload = {
            "meta": {
                "command": "state",
                "parameters": {"T": args.T},
                "spin": space.spin,
                "dimension": space.dimension,
            },
            "amplitudes": [
                {
                    "label": space.basis_label(k),
                    "n": float(space.n_values[k]),
                    "re": float(state.amplitudes[k].real),
                    "im": float(state.amplitudes[k].imag),
                }
                for k in range(space.dimension)
            ],
            "c2": c2,
            "c3": c3,
            "report": report_to_dict(report),
        }
        print(json.dumps(payload, indent=2))
        return 0
    lines = [
        f"triphoton state at T = {_fmt(args.T)}",
        f"spin s = {_fmt(space.spin)}, dimension {space.dimension}",
        "amplitudes:",
    ]
    for k in range(space.dimension):
        amp = state.amplitudes[k]
        sign = "+" if amp.imag >= 0 else "-"
        lines.append(
            f"  {space.basis_label(k)}  (n = {_fmt(space.n_values[k])}): "
            f"{_fmt(amp.real)} {sign} {_fmt(abs(amp.imag))}i"
        )
    lines.append(f"c2 = {_fmt(c2)}")
    lines.append(f"c3 = {_fmt(c3)}")
    lines.extend(_report_lines(report))
    print("\n".join(lines))
    return 0


def cmd_noon(args) -> int:
    state = noon_state(args.N, args.noon_phase)
    report = squeezing_report(state)
    if args.format == "json":
        payload = {
            "meta": {
                "command": "noon",
                "parameters": {"N": args.N, "noon_phase": args.noon_phase},
                "spin": state.space.spin,
                "dimension": state.space.dimension,
            },
            "report": report_to_dict(report),
        }
        print(json.dumps(payload, indent=2))
        return 0
    lines = [
        f"NOON state with N = {args.N}, phase = {_fmt(args.noon_phase)}",
        f"spin s = {_fmt(state.space.spin)}, dimension {state.space.dimension}",
    ]
    lines.extend(_report_lines(report))
    print("\n".join(lines))
    return 0


def _husimi_state(args):
    if (args.T is None) == (args.N is None):
        raise ValueError("choose a state with either --T (triphoton) or --N (NOON)")
    if args.T is not None:
        return triphoton_state(args.T)
    return noon_state(args.N, args.noon_phase)


def cmd_husimi(args) -> int:
    state = _husimi_state(args)
    grid = SphereGrid(args.n_theta, args.n_phi, scheme=args.scheme)
    result = q_grid(state, grid)
    if args.format == "csv":
        lines = ["theta,phi,p,Q"]
        for i, theta in enumerate(grid.thetas):
            p = math.cos(theta)
            for j, phi in enumerate(grid.phis):
                lines.append(
                    f"{_fmt(theta)},{_fmt(phi)},{_fmt(p)},{_fmt(result.values[i, j])}"
                )
        _write_text(args.output, "\n".join(lines) + "\n")
    else:
        peak = result.values.max()
        scaled = result.values / peak if peak > 0 else result.values
        pixels = np.rint(scaled * 255.0).astype(np.uint8)
        header = f"P5\n{grid.n_phi} {grid.n_theta}\n255\n".encode("ascii")
        with open(args.output, "wb") as handle:
            handle.write(header)
            handle.write(pixels.tobytes())
    return 0


def cmd_verify(args) -> int:
    results = run_checks(ladder_perturbation=args.perturb_ladder)
    width = max(len(result.name) for result in results)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name.ljust(width)}  {result.detail}")
    failed = sum(1 for result in results if not result.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stokes-squeeze",
        description="Polarization squeezing, entanglement metrics, and Husimi "
        "maps of N-photon two-mode states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="sweep the triphoton family over T")
    sweep.add_argument("--t-min", type=float, default=0.0)
    sweep.add_argument("--t-max", type=float, default=1.8)
    sweep.add_argument("--steps", type=int, default=181)
    sweep.add_argument("--output", required=True)
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.set_defaults(func=cmd_sweep)

    state = sub.add_parser("state", help="report one triphoton state")
    state.add_argument("--T", type=float, required=True)
    state.add_argument("--format", choices=("text", "json"), default="text")
    state.set_defaults(func=cmd_state)

    husimi = sub.add_parser("husimi", help="evaluate the Husimi Q distribution")
    husimi.add_argument("--T", type=float, default=None)
    husimi.add_argument("--N", type=int, default=None)
    husimi.add_argument("--noon-phase", type=float, default=0.0)
    husimi.add_argument("--n-theta", type=int, default=181)
    husimi.add_argument("--n-phi", type=int, default=360)
    husimi.add_argument("--scheme", choices=("endpoint", "midpoint"), default="endpoint")
    husimi.add_argument("--output", required=True)
    husimi.add_argument("--format", choices=("csv", "pgm"), default="csv")
    husimi.set_defaults(func=cmd_husimi)

    noon = sub.add_parser("noon", help="report an N-photon NOON state")
    noon.add_argument("--N", type=int, required=True)
    noon.add_argument("--noon-phase", type=float, default=0.0)
    noon.add_argument("--format", choices=("text", "json"), default="text")
    noon.set_defaults(func=cmd_noon)

    verify = sub.add_parser("verify", help="run the self-verification suite")
    verify.add_argument("--perturb-ladder", type=float, default=0.0, help=argparse.SUPPRESS)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
