"""Command-line front end: grid sweeps, boundary extraction, verification
suites, landmark reproduction, and point queries.

Exit codes: 0 on success, 1 when a verification or landmark check fails,
2 on usage errors.  Output files are byte-identical for identical
configurations regardless of worker count.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .entanglement import (closed_form_grid_deviation, gghz_grid_deviation,
                           gghz_negativity_closed, monogamy_chain,
                           monogamy_grid_audit, negativity,
                           negativity_from_spectrum,
                           closed_form_pt_eigenvalues)
from .esd import (esb_grid_deviation, esd_threshold_probability, esd_time,
                  equal_entanglement_range, gghz_esd_time,
                  min_esd_point, min_initial_negativity, region_grid_audit,
                  sample_boundary, swap_grid_deviation)
from .states import gghz_output_state, global_output_state, reduce

CSV_HEADER = "param,kt,negativity"

CONVENTIONS = {
    "amplitudes": "xi = exp(-kt/2), chi = sqrt(1 - exp(-kt))",
    "mixture_weights": "p * |GHZ><GHZ| + (1 - p) * |W><W|",
    "qubit_order": "big-endian, global layout (c1, r1, c2, r2, c3, r3, z)",
    "negativity_zero_threshold": 1e-10,
    "negativity_noise_clamp": 1e-12,
}

# reference landmark values with their acceptance tolerances
LANDMARKS = {
    "esd_onset_probability": (0.25, 0.005),
    "min_esd_point_p": (0.385, 0.005),
    "min_esd_point_kt": (1.091, 0.005),
    "min_initial_negativity_p": (0.465, 0.005),
    "min_initial_negativity_n": (0.643, 0.002),
    "equal_entanglement_a_low": (0.319, 0.003),
    "equal_entanglement_a_high": (0.363, 0.003),
    "max_gghz_esd_kt": (0.763, 0.005),
}

DEFAULT_TOLERANCES = {
    "closedform": 1e-10,
    "monogamy": 1e-10,
    "swap": 1e-12,
    "esb": 1e-3,
    "regions": 1e-10,
}


@dataclass(frozen=True)
class SweepConfig:
    """Validated settings for one negativity-surface sweep."""

    family: str
    param_min: float
    param_max: float
    param_steps: int
    kt_min: float
    kt_max: float
    kt_steps: int
    format: str
    output_path: str

    def __post_init__(self):
        if self.family not in ("mixed", "gghz"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if not (self.param_min < self.param_max and self.kt_min < self.kt_max):
            raise ValueError("min must be strictly below max")
        if self.param_steps < 2 or self.kt_steps < 2:
            raise ValueError("steps must be at least 2")
        if not (0.0 <= self.param_min and self.param_max <= 1.0):
            raise ValueError("parameter range must lie inside [0, 1]")
        if self.kt_min < 0.0:
            raise ValueError("kt range must be nonnegative")


def _fmt(x):
    return format(float(x), ".12g")


def _surface_chunk(task):
    """Rows for a single parameter value; runs inside worker processes."""
    family, param, kts, oracle = task
    rows = []
    worst = (0.0, None)
    for kt in kts:
        if family == "mixed":
            n = negativity_from_spectrum(closed_form_pt_eigenvalues(param, kt))
        else:
            n = gghz_negativity_closed(param, kt)
        if oracle:
            if family == "mixed":
                cav = reduce(global_output_state(param, kt), ["c1", "c2", "c3"])
            else:
                cav = reduce(gghz_output_state(param, kt), ["c1", "c2", "c3"])
            dev = abs(negativity(cav, ["c1"]) - n)
            if dev > worst[0]:
                worst = (dev, kt)
        rows.append((param, kt, n))
    return rows, worst


def _write_rows(config, rows):
    lines = []
    if config.format == "csv":
        lines.append(CSV_HEADER)
        for param, kt, n in rows:
            lines.append(f"{_fmt(param)},{_fmt(kt)},{_fmt(n)}")
        payload = "\n".join(lines) + "\n"
    else:
        doc = {
            "meta": {
                "family": config.family,
                "param_range": [config.param_min, config.param_max, config.param_steps],
                "kt_range": [config.kt_min, config.kt_max, config.kt_steps],
                "conventions": CONVENTIONS,
            },
            "rows": [[p, kt, n] for p, kt, n in rows],
        }
        payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    with open(config.output_path, "w", newline="") as fh:
        fh.write(payload)


def cmd_surface(args):
    try:
        config = SweepConfig(family=args.family, param_min=args.param_min,
                             param_max=args.param_max, param_steps=args.param_steps,
                             kt_min=args.kt_min, kt_max=args.kt_max,
                             kt_steps=args.kt_steps, format=args.format,
                             output_path=args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    params = np.linspace(config.param_min, config.param_max, config.param_steps)
    kts = np.linspace(config.kt_min, config.kt_max, config.kt_steps)
    tasks = [(config.family, float(p), [float(kt) for kt in kts], args.oracle)
             for p in params]
    workers = args.workers or os.cpu_count() or 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_surface_chunk, tasks))
    else:
        chunks = [_surface_chunk(t) for t in tasks]
    rows = [row for chunk, _ in chunks for row in chunk]
    _write_rows(config, rows)
    print(f"wrote {len(rows)} rows to {config.output_path}")
    if args.oracle:
        tolerance = args.tolerance if args.tolerance is not None else 1e-10
        dev, at = 0.0, (float(params[0]), float(kts[0]))
        for task, (_, (chunk_dev, chunk_kt)) in zip(tasks, chunks):
            if chunk_dev > dev:
                dev, at = chunk_dev, (task[1], chunk_kt)
        print(f"oracle check: max |closed form - numeric| = {dev:.3e} "
              f"at (param={at[0]:.6g}, kt={at[1]:.6g})")
        if dev > tolerance:
            print(f"oracle mismatch beyond tolerance {tolerance:.3e}", file=sys.stderr)
            return 1
    return 0


def cmd_boundary(args):
    if args.kt_min <= 0.0 or args.kt_min >= args.kt_max or args.kt_steps < 2:
        print("error: boundary needs 0 < kt-min < kt-max and steps >= 2",
              file=sys.stderr)
        return 2
    kts = np.linspace(args.kt_min, args.kt_max, args.kt_steps)
    curve = sample_boundary(args.kind, kts)
    lines = ["kt,param"]
    for kt, value in curve.samples:
        lines.append(f"{_fmt(kt)},{_fmt(value)}")
    payload = "\n".join(lines) + "\n"
    if args.format == "json":
        doc = {"meta": {"kind": args.kind, "conventions": CONVENTIONS},
               "samples": [[kt, v] for kt, v in curve.samples]}
        payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    with open(args.out, "w", newline="") as fh:
        fh.write(payload)
    print(f"wrote {len(curve.samples)} samples to {args.out}")
    return 0


def _run_suite(suite, tolerance):
    """Returns (description, deviation, threshold, ok)."""
    if suite == "closedform":
        dev, at = closed_form_grid_deviation()
        return [(f"spectrum vs eigensolver, worst at (p={at[0]:.4g}, kt={at[1]:.4g})",
                 dev, tolerance, dev <= tolerance)]
    if suite == "monogamy":
        audit = monogamy_grid_audit()
        eq, at_eq = audit["max_equality_deviation"]
        pair, at_pair = audit["min_pair_slack"]
        tail, at_tail = audit["min_tail_slack"]
        return [
            (f"pair-equality deviation, worst at (p={at_eq[0]:.4g}, kt={at_eq[1]:.4g})",
             eq, tolerance, eq <= tolerance),
            (f"pair bound slack, worst at (p={at_pair[0]:.4g}, kt={at_pair[1]:.4g})",
             pair, -tolerance, pair >= -tolerance),
            (f"negativity tail slack, worst at (p={at_tail[0]:.4g}, kt={at_tail[1]:.4g})",
             tail, -tolerance, tail >= -tolerance),
        ]
    if suite == "swap":
        dev, at = swap_grid_deviation()
        return [(f"cavity/reservoir swap, worst at (p={at[0]:.4g}, kt={at[1]:.4g})",
                 dev, tolerance, dev <= tolerance)]
    if suite == "esb":
        dev, at_p = esb_grid_deviation()
        return [(f"birth-time formula vs bisection, worst at p={at_p:.4g}",
                 dev, tolerance, dev <= tolerance)]
    if suite == "regions":
        violations, min_ent, max_sep = region_grid_audit()
        ok = not violations
        desc = (f"region soundness: min N outside IV = {min_ent:.3e}, "
                f"max N inside IV = {max_sep:.3e}, violations = {len(violations)}")
        for p, kt, region, n in violations[:5]:
            desc += f"\n  violated at (p={p:.4g}, kt={kt:.4g}) region {region} N={n:.3e}"
        return [(desc, max_sep, tolerance, ok)]
    raise ValueError(f"unknown suite {suite!r}")


def cmd_verify(args):
    tolerance = args.tolerance if args.tolerance is not None else DEFAULT_TOLERANCES[args.suite]
    checks = _run_suite(args.suite, tolerance)
    failed = False
    for desc, value, threshold, ok in checks:
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {args.suite}: {desc}: value {value:.3e} vs {threshold:.3e}")
        failed = failed or not ok
    return 1 if failed else 0


def cmd_landmarks(_args):
    p_min, kt_min = min_esd_point()
    p_n, n_min = min_initial_negativity()
    a_low, a_high, max_kt = equal_entanglement_range()
    computed = {
        "esd_onset_probability": esd_threshold_probability(),
        "min_esd_point_p": p_min,
        "min_esd_point_kt": kt_min,
        "min_initial_negativity_p": p_n,
        "min_initial_negativity_n": n_min,
        "equal_entanglement_a_low": a_low,
        "equal_entanglement_a_high": a_high,
        "max_gghz_esd_kt": max_kt,
    }
    failed = False
    for name, value in computed.items():
        ref, tol = LANDMARKS[name]
        ok = abs(value - ref) <= tol
        failed = failed or not ok
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {name}: computed {value:.6f}, reference {ref} +/- {tol}")
    if failed:
        print("conventions in effect:", file=sys.stderr)
        for key, val in CONVENTIONS.items():
            print(f"  {key}: {val}", file=sys.stderr)
    return 1 if failed else 0


def cmd_esd_time(args):
    if (args.p is None) == (args.a is None):
        print("error: give exactly one of --p or --a", file=sys.stderr)
        return 2
    if args.p is not None:
        t = esd_time(args.p)
        label = f"mixed family, p = {_fmt(args.p)}"
    else:
        t = gghz_esd_time(args.a)
        label = f"generalized-GHZ family, a = {_fmt(args.a)}"
    if t is None:
        print(f"{label}: no finite death time (asymptotic decay)")
    else:
        print(f"{label}: death at kt = {_fmt(t)}")
    return 0


def cmd_monogamy(args):
    rec = monogamy_chain(args.p, args.kt)
    print(f"monogamy chain at p = {_fmt(args.p)}, kt = {_fmt(args.kt)}")
    for field in ("c_init_sq", "c_pair_sq", "c_c1_sq", "c_r1_sq",
                  "n_cav_sq", "n_res_sq"):
        print(f"  {field:10s} = {_fmt(getattr(rec, field))}")
    print(f"  equality deviation = {rec.equality_deviation:.3e}")
    print(f"  pair slack         = {rec.pair_slack:+.3e}")
    print(f"  tail slack         = {rec.tail_slack:+.3e}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cavres",
        description="Entanglement dynamics of three dissipating cavity qubits",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    surface = sub.add_parser("surface", help="negativity over a (param, kt) grid")
    surface.add_argument("--family", choices=("mixed", "gghz"), required=True)
    surface.add_argument("--param-min", type=float, default=0.0)
    surface.add_argument("--param-max", type=float, default=1.0)
    surface.add_argument("--param-steps", type=int, default=11)
    surface.add_argument("--kt-min", type=float, default=0.0)
    surface.add_argument("--kt-max", type=float, default=3.0)
    surface.add_argument("--kt-steps", type=int, default=31)
    surface.add_argument("--format", choices=("csv", "json"), default="csv")
    surface.add_argument("--out", required=True)
    surface.add_argument("--oracle", action="store_true",
                         help="recompute every cell numerically and compare")
    surface.add_argument("--tolerance", type=float, default=None)
    surface.add_argument("--workers", type=int, default=None)
    surface.set_defaults(func=cmd_surface)

    boundary = sub.add_parser("boundary", help="sample one boundary curve")
    boundary.add_argument("kind", choices=("lambda5", "lambda7", "gghz"))
    boundary.add_argument("--kt-min", type=float, default=0.05)
    boundary.add_argument("--kt-max", type=float, default=4.0)
    boundary.add_argument("--kt-steps", type=int, default=40)
    boundary.add_argument("--format", choices=("csv", "json"), default="csv")
    boundary.add_argument("--out", required=True)
    boundary.set_defaults(func=cmd_boundary)

    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument("suite", choices=tuple(DEFAULT_TOLERANCES))
    verify.add_argument("--tolerance", type=float, default=None)
    verify.set_defaults(func=cmd_verify)

    landmarks = sub.add_parser("landmarks",
                               help="reproduce the reference landmark values")
    landmarks.set_defaults(func=cmd_landmarks)

    esd = sub.add_parser("esd-time", help="death time for one family member")
    esd.add_argument("--p", type=float, default=None, help="mixture probability")
    esd.add_argument("--a", type=float, default=None, help="generalized-GHZ amplitude")
    esd.set_defaults(func=cmd_esd_time)

    mono = sub.add_parser("monogamy", help="monogamy chain at one (p, kt) point")
    mono.add_argument("--p", type=float, required=True)
    mono.add_argument("--kt", type=float, required=True)
    mono.set_defaults(func=cmd_monogamy)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
