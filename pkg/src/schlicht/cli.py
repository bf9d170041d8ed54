"""Command-line interface.

Subcommands
    verify    run verification suites, write a report, exit 0 iff green
    table     emit legendre / lambda / coefficient tables (CSV or JSON)
    loewner   trace trajectories of the radial Loewner equation to CSV
    weinstein kernel-coefficient tables with oracle cross-checks, and the
              end-to-end decomposition report

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numeric error.
Reports are deterministic: same flags and seed give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import functionals as fn
from . import legendre as lg
from . import loewner as lw
from . import suites
from . import univalent as uv
from . import weinstein as ws
from .config import load_config
from .errors import IoFailure, SchlichtError, UnknownSuite
from .report import BoundReport


def _write_text(path, text, out_dir="."):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        full = path if os.path.isabs(path) else os.path.join(out_dir, path)
        with open(full, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def _json_dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(rows, header=None):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- verify -----------------------------------------------------------------

def _focus_report(args, cfg):
    """Single-case report for a specific function/index, when requested."""
    order = args.order or cfg.order
    n = args.n
    rep = BoundReport(f"{args.suite}:{args.function}", cfg.tolerance)
    f = uv.from_registry(args.function, order)
    if args.suite == "milin":
        rep.add(f"M_{n}({args.function})", fn.milin_functional(f, n), 0.0)
    elif args.suite == "robertson":
        rep.add(f"S_{n}({args.function})", float(fn.robertson_sums(f, n)[n - 1]), float(n))
    elif args.suite == "area":
        rep.add(f"area({args.function})", fn.area_sum(uv.to_sigma(f), order - 2), 1.0)
    elif args.suite == "lebedev-milin":
        logc = fn.log_coefficients(f, n)
        lhs, rhs = fn.lebedev_milin_check(list(logc.gamma), n)
        rep.add(f"lebedev-milin_{n}({args.function})", lhs, rhs)
    elif args.suite == "weinstein":
        worst, min_summand = ws.oracle_triangle([args.t], n)
        rep.add("oracle-discrepancy", worst, 1e-8)
        rep.add("min-lambda", -1e-12, float(ws.lambda_table(args.t, n).values.min()))
        rep.add("min-summand", 0.0, min_summand)
    else:
        return None
    return rep


def cmd_verify(args):
    cfg = load_config(
        args.config, seed=args.seed, quad=args.quad, tolerance=args.tol,
        r_ladder=args.radius,
    )
    if args.n is not None and args.suite in (
        "milin", "robertson", "area", "lebedev-milin", "weinstein",
    ):
        reports = [_focus_report(args, cfg)]
    else:
        reports = suites.run_suite(
            args.suite, seed=cfg.seed, quick=args.quick,
            r_ladder=args.radius,
        )
    payload = {
        "seed": cfg.seed,
        "suites": [r.to_dict() for r in reports],
        "pass": all(r.all_pass for r in reports),
    }
    if args.format == "csv":
        rows = [
            [r.name, c.id, repr(c.lhs), repr(c.rhs), str(c.passed).lower()]
            for r in reports
            for c in sorted(r.cases, key=lambda c: c.id)
        ]
        text = _csv_text(rows, header=["suite", "id", "lhs", "rhs", "pass"])
    else:
        text = _json_dumps(payload)
    _write_text(args.out, text, cfg.out_dir)
    for r in reports:
        n_bad = len(r.failures)
        sys.stderr.write(
            f"{r.name}: {'PASS' if r.all_pass else 'FAIL'} "
            f"({len(r.cases) - n_bad}/{len(r.cases)} cases)\n"
        )
    return 0 if payload["pass"] else 1


# -- table ------------------------------------------------------------------

def cmd_table(args):
    cfg = load_config(args.config, seed=args.seed)
    if args.kind == "legendre":
        rows = [[n] + row for n, row in enumerate(lg.coefficient_table(args.n))]
        header = ["degree"] + [f"x^{j}" for j in range(args.n + 1)]
        rows = [r + [""] * (len(header) - len(r)) for r in rows]
        data = {"kind": "legendre", "rows": rows}
    elif args.kind == "lambda":
        tab = ws.lambda_table(args.t, args.n, args.k)
        header = ["k"] + [f"n={n}" for n in range(tab.max_n + 1)]
        rows = [[k] + [repr(float(v)) for v in tab.values[k]] for k in range(tab.max_k + 1)]
        data = {"kind": "lambda", "t": args.t, "rows": rows}
    elif args.kind == "coefficients":
        f = uv.from_registry(args.function, args.n)
        header = ["n", "re", "im"]
        rows = [[n, repr(float(c.real)), repr(float(c.imag))] for n, c in enumerate(f.coeffs)]
        data = {"kind": "coefficients", "function": args.function, "rows": rows}
    else:
        raise UnknownSuite(f"unknown table kind {args.kind!r}")
    if args.format == "csv":
        _write_text(args.out, _csv_text(data["rows"], header), cfg.out_dir)
    else:
        _write_text(args.out, _json_dumps(data), cfg.out_dir)
    return 0


# -- loewner trace ------------------------------------------------------------

def _parse_grid(desc):
    if desc.startswith("polar:"):
        nr, na = desc.split(":", 1)[1].split("x")
        nr, na = int(nr), int(na)
        radii = np.linspace(0.1, 0.8, nr)
        angles = 2 * np.pi * np.arange(na) / na
        return np.array([r * np.exp(1j * a) for r in radii for a in angles])
    if desc.startswith("points:"):
        pts = json.loads(desc.split(":", 1)[1])
        return np.array([complex(p[0], p[1]) for p in pts])
    raise UnknownSuite(f"unknown grid format {desc!r}")


def _parse_kappa(desc):
    if desc.startswith("const:"):
        return lw.DrivingFunction.constant(complex(desc.split(":", 1)[1]))
    if desc.startswith("steps:"):
        data = json.loads(desc.split(":", 1)[1])
        times = [d[0] for d in data]
        values = [complex(d[1][0], d[1][1]) for d in data]
        return lw.DrivingFunction.sampled(times, values)
    raise UnknownSuite(f"unknown driving format {desc!r}")


def cmd_loewner_trace(args):
    cfg = load_config(args.config)
    kappa = _parse_kappa(args.kappa)
    grid = _parse_grid(args.grid)
    nsteps = int(round(args.T / args.step))
    stride = max(nsteps // max(args.samples, 1), 1)
    while nsteps % stride:
        stride -= 1
    ev = lw.loewner_solve(kappa, grid, args.T, args.step, store_stride=stride)
    rows = []
    scaled = ev.scaled
    for it, t in enumerate(ev.times):
        for iz, z in enumerate(ev.z_grid):
            f = complex(ev.states[it, iz])
            ef = complex(scaled[it, iz])
            z = complex(z)
            rows.append(
                [repr(float(t)), repr(z.real), repr(z.imag), repr(f.real),
                 repr(f.imag), repr(ef.real), repr(ef.imag)]
            )
    text = _csv_text(rows, header=["t", "z_re", "z_im", "f_re", "f_im", "etf_re", "etf_im"])
    _write_text(args.out, text, cfg.out_dir)
    return 0


# -- weinstein ----------------------------------------------------------------

def cmd_weinstein_lambda(args):
    cfg = load_config(args.config)
    vals = ws.lambda_series(args.t, args.k, args.N)
    payload = {
        "t": args.t,
        "k": args.k,
        "values": [float(v) for v in vals],
    }
    if args.oracle in ("fourier", "all"):
        four = [ws.lambda_fourier(args.t, args.k, n) for n in range(min(args.N, 20) + 1)]
        payload["fourier"] = [float(v) for v in four]
        payload["fourier_max_gap"] = float(
            max(abs(a - b) for a, b in zip(vals, four))
        )
    if args.oracle == "all":
        leg = [
            ws.lambda_legendre_route(args.t, n, args.k)[0]
            for n in range(min(args.N, 12) + 1)
        ]
        payload["legendre"] = [float(v) for v in leg]
        payload["legendre_max_gap"] = float(
            max(abs(a - b) for a, b in zip(vals, leg))
        )
    text = _json_dumps(payload)
    _write_text(args.out, text, cfg.out_dir)
    gaps = [payload.get("fourier_max_gap", 0.0), payload.get("legendre_max_gap", 0.0)]
    return 0 if max(gaps) < 1e-8 else 1


def cmd_weinstein_decompose(args):
    cfg = load_config(args.config)
    f = uv.from_registry(args.function, max(4 * args.n, 32))
    chain = lw.make_chain(args.function)
    res = ws.milin_decomposition_check(f, chain, n=args.n, T=args.T)
    payload = res.to_dict()
    scale = max(abs(res.lhs), 1.0)
    payload["pass"] = bool(
        res.residual_extrapolated <= 1e-2 * scale and res.min_g >= -1e-8
    )
    text = _json_dumps(payload)
    _write_text(args.out, text, cfg.out_dir)
    return 0 if payload["pass"] else 1


# -- parser -------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="schlicht", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True)
    pv.add_argument("--function", default="koebe")
    pv.add_argument("--n", type=int, default=None)
    pv.add_argument("--order", type=int, default=None)
    pv.add_argument("--tol", type=float, default=None)
    pv.add_argument("--radius", type=float, action="append", default=None)
    pv.add_argument("--quad", type=int, default=None)
    pv.add_argument("--t", type=float, default=0.5)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--out", default="-")
    pv.add_argument("--format", choices=["json", "csv"], default="json")
    pv.add_argument("--config", default=None)
    pv.add_argument("--quick", action="store_true", help="smaller grids, same checks")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", help="emit a data table")
    pt.add_argument("--kind", choices=["legendre", "lambda", "coefficients"], required=True)
    pt.add_argument("--n", type=int, default=8)
    pt.add_argument("--k", type=int, default=None)
    pt.add_argument("--t", type=float, default=0.0)
    pt.add_argument("--function", default="koebe")
    pt.add_argument("--seed", type=int, default=0)
    pt.add_argument("--out", default="-")
    pt.add_argument("--format", choices=["json", "csv"], default="csv")
    pt.add_argument("--config", default=None)
    pt.set_defaults(func=cmd_table)

    pl = sub.add_parser("loewner", help="loewner evolution tools")
    subl = pl.add_subparsers(dest="subcommand", required=True)
    plt = subl.add_parser("trace", help="trace trajectories to CSV")
    plt.add_argument("--kappa", default="const:-1")
    plt.add_argument("--T", type=float, default=8.0)
    plt.add_argument("--step", type=float, default=1e-3)
    plt.add_argument("--grid", default="polar:8x8")
    plt.add_argument("--samples", type=int, default=16, help="stored time samples")
    plt.add_argument("--out", default="trace.csv")
    plt.add_argument("--config", default=None)
    plt.set_defaults(func=cmd_loewner_trace)

    pw = sub.add_parser("weinstein", help="kernel coefficients and decomposition")
    subw = pw.add_subparsers(dest="subcommand", required=True)
    pwl = subw.add_parser("lambda", help="kernel coefficient row with oracles")
    pwl.add_argument("--t", type=float, required=True)
    pwl.add_argument("--k", type=int, required=True)
    pwl.add_argument("--N", type=int, default=20)
    pwl.add_argument("--oracle", choices=["none", "fourier", "all"], default="all")
    pwl.add_argument("--out", default="-")
    pwl.add_argument("--config", default=None)
    pwl.set_defaults(func=cmd_weinstein_lambda)
    pwd = subw.add_parser("decompose", help="end-to-end decomposition check")
    pwd.add_argument("--function", default="koebe")
    pwd.add_argument("--n", type=int, default=6)
    pwd.add_argument("--T", type=float, default=8.0)
    pwd.add_argument("--out", default="-")
    pwd.add_argument("--config", default=None)
    pwd.set_defaults(func=cmd_weinstein_decompose)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownSuite as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except SchlichtError as exc:
        sys.stderr.write(f"numeric error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
