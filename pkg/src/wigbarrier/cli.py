"""Command-line frontend: deterministic CSV/text emitters for every surface.

Exit codes: 0 success, 1 computation failure (accuracy check), 2 malformed
flags, 3 validation suite found a failing check. All floating-point output
uses 17 significant digits so repeated identical invocations are
byte-identical and values round-trip to the exact doubles.
"""

import argparse
import math
import os
import sys
import tempfile

import numpy as np

from .coefficients import (
    partial_weight,
    suggest_window,
    transmission_closed,
    transmission_integral,
    windowed_mean,
)
from .phasespace import Side, evaluate_grid
from .profile import AccuracyError, QuadratureConfig, profile_batch
from .validation import DEFAULT_TOLERANCES, SUITE_NAMES, run_suite

__all__ = ["main", "build_parser"]


def _fmt(x):
    return format(float(x), ".17g")


def _write_rows(out_path, header, rows):
    """Emit CSV to stdout or atomically to ``out_path`` (temp file + rename)."""
    text = "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(prefix=".wigbarrier-", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        os.unlink(tmp)
        raise


def _add_quadrature_flags(parser):
    group = parser.add_argument_group("quadrature overrides")
    group.add_argument("--xi-max", type=float, default=None, help="truncation half-width")
    group.add_argument("--xi-step", type=float, default=None, help="trapezoid spacing")
    group.add_argument("--tolerance", type=float, default=None, help="target absolute accuracy")


def _check_quadrature_flags(parser, args):
    for name in ("xi_max", "xi_step", "tolerance"):
        value = getattr(args, name)
        if value is not None and not (math.isfinite(value) and value > 0):
            parser.error(f"--{name.replace('_', '-')} must be positive and finite")
    if args.xi_max is not None and args.xi_step is not None and args.xi_step >= args.xi_max:
        parser.error("--xi-step must be smaller than --xi-max")


def _cfg_factory(args):
    """Point-dependent config resolution honoring any explicit overrides."""
    if args.xi_max is None and args.xi_step is None and args.tolerance is None:
        return lambda eps, eta_scale: None

    def factory(eps, eta_scale):
        tolerance = args.tolerance if args.tolerance is not None else 1e-10
        base = QuadratureConfig.for_point(eps=eps, eta=eta_scale, tolerance=tolerance)
        return QuadratureConfig(
            xi_max=args.xi_max if args.xi_max is not None else base.xi_max,
            step=args.xi_step if args.xi_step is not None else base.step,
            tolerance=tolerance,
        )

    return factory


def _require_finite_flag(parser, args, names):
    for name in names:
        value = getattr(args, name)
        if value is not None and not math.isfinite(value):
            parser.error(f"--{name.replace('_', '-')} must be finite")


def _cmd_transmit(parser, args):
    cfg_for = _cfg_factory(args)
    if args.eps is not None:
        explicit_sweep = (
            args.eps_min is not None or args.eps_max is not None or args.steps is not None
        )
        if explicit_sweep:
            parser.error("--eps conflicts with --eps-min/--eps-max/--steps")
        eps_values = np.array([args.eps])
    else:
        lo = args.eps_min if args.eps_min is not None else -3.0
        hi = args.eps_max if args.eps_max is not None else 3.0
        steps = args.steps if args.steps is not None else 601
        if steps < 1:
            parser.error("--steps must be at least 1")
        if not lo < hi:
            parser.error("--eps-min must be below --eps-max")
        eps_values = np.linspace(lo, hi, steps)

    header = ["epsilon", "T", "R"]
    if args.method == "both":
        header += ["T_integral", "abs_diff"]
    rows = []
    for eps in eps_values:
        if args.method == "integral":
            t = transmission_integral(eps, cfg=cfg_for(eps, 0.0))
            rows.append([_fmt(eps), _fmt(t), _fmt(1.0 - t)])
        elif args.method == "both":
            t = transmission_closed(eps)
            ti = transmission_integral(eps, cfg=cfg_for(eps, 0.0))
            rows.append([_fmt(eps), _fmt(t), _fmt(1.0 - t), _fmt(ti), _fmt(abs(t - ti))])
        else:
            t = transmission_closed(eps)
            rows.append([_fmt(eps), _fmt(t), _fmt(1.0 - t)])
    _write_rows(args.out, header, rows)
    return 0


def _cmd_profile(parser, args):
    if not args.eta_min < args.eta_max:
        parser.error("--eta-min must be below --eta-max")
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    cfg_for = _cfg_factory(args)
    etas = np.linspace(args.eta_min, args.eta_max, args.samples)
    eta_scale = float(np.abs(etas).max())
    nderiv = 2 if args.derivatives else 0
    cols = profile_batch(args.eps, etas, cfg=cfg_for(args.eps, eta_scale), nderiv=nderiv)
    header = ["eta", "W"] + (["dW", "d2W"] if args.derivatives else [])
    rows = []
    for i, eta in enumerate(etas):
        row = [_fmt(eta), _fmt(cols[i, 0])]
        if args.derivatives:
            row += [_fmt(cols[i, 1]), _fmt(cols[i, 2])]
        rows.append(row)
    _write_rows(args.out, header, rows)
    return 0


def _cmd_grid(parser, args):
    if not args.x_min < args.x_max:
        parser.error("--x-min must be below --x-max")
    if not args.p_min < args.p_max:
        parser.error("--p-min must be below --p-max")
    if args.nx < 1 or args.np < 1:
        parser.error("--nx and --np must be at least 1")
    cfg_for = _cfg_factory(args)
    eta_scale = 0.5 * max(args.x_max**2, args.x_min**2, args.p_max**2, args.p_min**2)
    grid = evaluate_grid(
        args.eps,
        (args.x_min, args.x_max),
        (args.p_min, args.p_max),
        args.nx,
        args.np,
        side=Side(args.side),
        cfg=cfg_for(args.eps, eta_scale),
    )
    xs, ps = grid.axes()
    rows = []
    for i in range(grid.np):  # P ascending, X varying fastest
        for j in range(grid.nx):
            rows.append([_fmt(xs[j]), _fmt(ps[i]), _fmt(grid.values[i, j])])
    _write_rows(args.out, ["X", "P", "W"], rows)
    return 0


def _cmd_weight(parser, args):
    if args.lambda_max <= 0:
        parser.error("--lambda-max must be positive")
    if args.samples is not None and args.samples < 2:
        parser.error("--samples must be at least 2")
    if args.window is not None and args.window < 1:
        parser.error("--window must be a positive integer")
    cfg_for = _cfg_factory(args)
    trace = partial_weight(
        args.eps,
        args.lambda_max,
        cfg=cfg_for(args.eps, args.lambda_max),
        window=args.window if args.window is not None else 1,
        samples=args.samples,
    )
    if args.window is None:
        averaged = windowed_mean(trace.cumulative, suggest_window(trace))
    else:
        averaged = trace.averaged
    rows = [
        [_fmt(lam), _fmt(c), _fmt(a)]
        for lam, c, a in zip(trace.lambda_grid, trace.cumulative, averaged)
    ]
    _write_rows(args.out, ["lambda", "cumulative", "averaged"], rows)
    return 0


def _cmd_validate(parser, args):
    cfg_for = _cfg_factory(args)
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    tolerances = {}
    if args.tol_profile is not None:
        tolerances["ode"] = args.tol_profile
    if args.tol_kernel is not None:
        tolerances["kernel"] = args.tol_kernel
    if args.tol_symmetry is not None:
        tolerances["symmetry"] = args.tol_symmetry
    if args.tol_normalization is not None:
        tolerances["normalization"] = args.tol_normalization
    if args.tol_liouville is not None:
        tolerances["liouville"] = args.tol_liouville
    reports = run_suite(names, cfg=cfg_for(0.0, 6.0), tolerances=tolerances)

    widths = (14, 8, 24, 24, 6)
    line = "{:<{w0}} {:>{w1}} {:>{w2}} {:>{w3}} {:<{w4}}"
    print(line.format("check", "points", "max_residual", "tolerance", "result",
                      w0=widths[0], w1=widths[1], w2=widths[2], w3=widths[3], w4=widths[4]))
    for rep in reports:
        print(line.format(
            rep.label, len(rep.points), _fmt(rep.max_abs), _fmt(rep.tolerance),
            "PASS" if rep.passed else "FAIL",
            w0=widths[0], w1=widths[1], w2=widths[2], w3=widths[3], w4=widths[4],
        ))

    if args.out is not None:
        rows = []
        for rep in reports:
            for point, residual in zip(rep.points, rep.residuals):
                ok = abs(residual) <= rep.tolerance
                rows.append([rep.label, point, _fmt(abs(residual)), _fmt(rep.tolerance),
                             "true" if ok else "false"])
        _write_rows(args.out, ["check", "point", "residual", "tolerance", "passed"], rows)

    return 0 if all(rep.passed for rep in reports) else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wigbarrier",
        description="Parabolic-barrier tunneling from phase-space trajectory weights",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transmit", help="transmission/reflection sweep or single point")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--eps-min", type=float, default=None)
    p.add_argument("--eps-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--method", choices=("closed", "integral", "both"), default="closed")
    p.add_argument("--out", default=None)
    _add_quadrature_flags(p)
    p.set_defaults(func=_cmd_transmit)

    p = sub.add_parser("profile", help="Wigner profile on an eta grid")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--eta-min", type=float, required=True)
    p.add_argument("--eta-max", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--derivatives", action="store_true")
    p.add_argument("--out", default=None)
    _add_quadrature_flags(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("grid", help="masked Wigner values over a phase-space rectangle")
    p.add_argument("--eps", type=float, default=-0.4)
    p.add_argument("--side", choices=("left", "right", "full"), default="left")
    p.add_argument("--x-min", type=float, default=-3.5)
    p.add_argument("--x-max", type=float, default=3.5)
    p.add_argument("--p-min", type=float, default=-3.5)
    p.add_argument("--p-max", type=float, default=3.5)
    p.add_argument("--nx", type=int, default=201)
    p.add_argument("--np", type=int, default=201)
    p.add_argument("--out", default=None)
    _add_quadrature_flags(p)
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("weight", help="cumulative trajectory weight over [0, Lambda]")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--lambda-max", type=float, default=50.0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--window", type=int, default=None,
                   help="trailing-mean window in samples (default: one estimated period)")
    p.add_argument("--out", default=None)
    _add_quadrature_flags(p)
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("validate", help="run the identity checks")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--tol-profile", type=float, default=None,
                   help=f"profile ODE tolerance (default {DEFAULT_TOLERANCES['ode']:g})")
    p.add_argument("--tol-kernel", type=float, default=None)
    p.add_argument("--tol-symmetry", type=float, default=None)
    p.add_argument("--tol-normalization", type=float, default=None)
    p.add_argument("--tol-liouville", type=float, default=None)
    p.add_argument("--out", default=None)
    _add_quadrature_flags(p)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_quadrature_flags(parser, args)
    for name in ("eps", "eps_min", "eps_max", "eta_min", "eta_max",
                 "x_min", "x_max", "p_min", "p_max", "lambda_max"):
        if hasattr(args, name):
            _require_finite_flag(parser, args, (name,))
    try:
        return args.func(parser, args)
    except AccuracyError as exc:
        print(f"wigbarrier: computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
