"""Command-line front end.

    taumax critical --x 2
    taumax limit --format json
    taumax sequence --n-max 1000 --format csv --out seq.csv
    taumax figure 2 --out fig2.dat
    taumax verify-cm --beta-from-limit --orders 12

Exit codes: 0 success, 2 usage, 3 solver failure, 4 a claim or check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .cm.verifier import DEFAULT_GRID, MAX_ORDER, STRICT_FLOOR, check_cm
from .errors import DomainError, SolverError, TaumaxError, UsageError
from .limits import eval_eta, solve_x0
from .maximizer import solve_t_star
from .roots import SolverConfig
from .sequence import compute_sequence, verify_claims
from .tau import eval_tau

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_CLAIM = 4

CRITICAL_FIELDS = ("x", "t_star", "alpha", "residual", "bracket_lo", "bracket_hi", "iterations")
LIMIT_FIELDS = ("a0", "x0", "ell", "alpha_star", "eta_residual")
SEQUENCE_FIELDS = ("n", "t_n", "alpha_n", "ratio", "gap")
CM_FIELDS = (
    "x",
    "beta",
    "orders_checked",
    "all_alternating",
    "min_margin",
    "min_scaled_margin",
    "first_violation",
)


class _Fail(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code = code
        self.kind = kind


# --- formatting --------------------------------------------------------------


def _fmt(v, digits):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    return str(v)


def _jsonable(v, digits):
    if isinstance(v, float):
        return float(f"{v:.{digits}g}") if math.isfinite(v) else None
    if isinstance(v, dict):
        return {k: _jsonable(x, digits) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x, digits) for x in v]
    return v


def _csv_text(fields, rows, digits):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_fmt(r[f], digits) for f in fields])
    return buf.getvalue()


def _table_text(fields, rows, digits):
    cells = [[_fmt(r[f], digits) for f in fields] for r in rows]
    widths = [max(len(f), *(len(c[i]) for c in cells)) if cells else len(f) for i, f in enumerate(fields)]
    lines = ["  ".join(f.rjust(w) for f, w in zip(fields, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _kv_text(record, digits):
    width = max(len(k) for k in record)
    return "".join(f"{k.ljust(width)}  {_fmt(v, digits)}\n" for k, v in record.items())


def _json_text(command, payload, digits):
    obj = {"schema_version": SCHEMA_VERSION, "command": command}
    obj.update(_jsonable(payload, digits))
    return json.dumps(obj, indent=2) + "\n"


# --- commands ----------------------------------------------------------------


def _config(args) -> SolverConfig:
    try:
        return SolverConfig(rel_tol=args.rel_tol, abs_tol=args.abs_tol, max_iter=args.max_iter)
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, "usage", str(exc)) from None


def cmd_critical(args):
    if not math.isfinite(args.x) or args.x < 1.0:
        raise _Fail(EXIT_USAGE, "usage", "x must be ≥ 1")
    cp = solve_t_star(args.x, _config(args))
    rec = {f: getattr(cp, f) for f in CRITICAL_FIELDS}
    fmt, d = args.format, args.digits
    if fmt == "json":
        return _json_text("critical", rec, d), EXIT_OK
    if fmt == "csv":
        return _csv_text(CRITICAL_FIELDS, [rec], d), EXIT_OK
    return _kv_text(rec, d), EXIT_OK


def cmd_limit(args):
    lc = solve_x0(_config(args))
    rec = {f: getattr(lc, f) for f in LIMIT_FIELDS}
    fmt, d = args.format, args.digits
    if fmt == "json":
        return _json_text("limit", rec, d), EXIT_OK
    if fmt == "csv":
        return _csv_text(LIMIT_FIELDS, [rec], d), EXIT_OK
    return _kv_text(rec, d), EXIT_OK


def cmd_sequence(args):
    if args.n_max < 1:
        raise _Fail(EXIT_USAGE, "usage", "n-max must be ≥ 1")
    cfg = _config(args)
    limits = solve_x0(cfg)
    rows = compute_sequence(args.n_max, args.sampling, cfg, limits)
    report = verify_claims(rows, limits)
    code = EXIT_OK if report.all_passed else EXIT_CLAIM
    recs = [{f: getattr(r, f) for f in SEQUENCE_FIELDS} for r in rows]
    claims = [
        {"key": c.key, "description": c.description, "passed": c.passed, "detail": c.detail}
        for c in report.claims
    ]
    fmt, d = args.format, args.digits
    if fmt == "json":
        payload = {"rows": recs, "claims": claims, "all_passed": report.all_passed, "notes": report.notes}
        return _json_text("sequence", payload, d), code
    claim_lines = "".join(
        f"# {'PASS' if c['passed'] else 'FAIL'} {c['key']}: {c['description']}"
        + (f" ({c['detail']})" if c["detail"] else "")
        + "\n"
        for c in claims
    )
    if fmt == "csv":
        # Keep the CSV stream pure; the report goes to stderr.
        sys.stderr.write(claim_lines)
        return _csv_text(SEQUENCE_FIELDS, recs, d), code
    return _table_text(SEQUENCE_FIELDS, recs, d) + "\n" + claim_lines, code


def _figure1(args):
    a = np.linspace(args.a_min, args.a_max, args.points)
    eta = [eval_eta(float(v)) for v in a]
    x0 = solve_x0(_config(args)).x0
    blocks = [
        ("eta(a) = exp(a) - a^2 - a - 1", ("a", "eta"), list(zip(a.tolist(), eta))),
        ("marker: root x0 of eta", ("a", "eta"), [(x0, 0.0)]),
    ]
    return blocks


def _figure2(args):
    cfg = _config(args)
    t = np.linspace(0.0, args.t_max, args.points + 1)
    blocks = []
    markers = []
    for n in (1, 2, 3):
        vals = [eval_tau(float(n), float(v)) for v in t]
        blocks.append((f"tau(n, t), n = {n}", ("t", "tau"), list(zip(t.tolist(), vals))))
        cp = solve_t_star(float(n), cfg)
        markers.append((cp.t_star, cp.alpha))
    blocks.append(("markers: argmax (t_n, alpha_n), n = 1, 2, 3", ("t", "tau"), markers))
    return blocks


def cmd_figure(args):
    if args.points < 2:
        raise _Fail(EXIT_USAGE, "usage", "points must be ≥ 2")
    blocks = _figure1(args) if args.id == 1 else _figure2(args)
    fmt, d = args.format, args.digits
    if fmt == "json":
        payload = {
            "figure": args.id,
            "blocks": [{"title": ti, "columns": list(cols), "data": [list(p) for p in pts]} for ti, cols, pts in blocks],
        }
        return _json_text("figure", payload, d), EXIT_OK
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("block",) + tuple(blocks[0][1]))
        for i, (_, _, pts) in enumerate(blocks):
            for p in pts:
                w.writerow([str(i)] + [_fmt(float(v), d) for v in p])
        return buf.getvalue(), EXIT_OK
    # Plot data: whitespace columns, '#' headers, blank line between blocks.
    out = [f"# figure {args.id}\n"]
    for i, (title, cols, pts) in enumerate(blocks):
        if i:
            out.append("\n")
        out.append(f"# {title}\n# {' '.join(cols)}\n")
        out.extend(" ".join(_fmt(float(v), d) for v in p) + "\n" for p in pts)
    return "".join(out), EXIT_OK


def _parse_grid(tokens):
    if tokens is None:
        return list(DEFAULT_GRID)
    grid = []
    for tok in tokens:
        for part in tok.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                grid.append(float(part))
            except ValueError:
                raise _Fail(EXIT_USAGE, "usage", f"bad grid value {part!r}") from None
    if not grid:
        raise _Fail(EXIT_USAGE, "usage", "empty grid")
    bad = [g for g in grid if not (math.isfinite(g) and g > -1.0)]
    if bad:
        raise _Fail(EXIT_USAGE, "usage", f"grid points must be > -1, got {bad}")
    return grid


def cmd_verify_cm(args):
    if not 0 <= args.orders <= MAX_ORDER:
        raise _Fail(EXIT_USAGE, "usage", f"orders must be in [0, {MAX_ORDER}]")
    grid = _parse_grid(args.grid)
    if args.beta_from_limit:
        beta = 1.0 / (1.0 + solve_x0(_config(args)).alpha_star)
    elif args.beta is not None:
        beta = args.beta
    else:
        raise _Fail(EXIT_USAGE, "usage", "give --beta or --beta-from-limit")
    reports = check_cm(grid, beta, args.orders, strict_floor=args.strict_floor)
    code = EXIT_OK if all(r.all_alternating for r in reports) else EXIT_CLAIM
    recs = [{f: getattr(r, f) for f in CM_FIELDS} for r in reports]
    fmt, d = args.format, args.digits
    if fmt == "json":
        payload = {
            "beta": beta,
            "orders": args.orders,
            "strict_floor": args.strict_floor,
            "all_passed": code == EXIT_OK,
            "reports": recs,
        }
        return _json_text("verify-cm", payload, d), code
    if fmt == "csv":
        return _csv_text(CM_FIELDS, recs, d), code
    return _table_text(CM_FIELDS, recs, d), code


# --- parser ------------------------------------------------------------------


def _common(p, default_format=None):
    p.add_argument("--format", choices=("table", "csv", "json"), default=default_format)
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--digits", type=int, default=12, help="significant digits (default 12)")
    p.add_argument("--rel-tol", type=float, default=SolverConfig.rel_tol)
    p.add_argument("--abs-tol", type=float, default=SolverConfig.abs_tol)
    p.add_argument("--max-iter", type=int, default=SolverConfig.max_iter)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taumax", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critical", help="maximiser t*(x) and maximum alpha(x)")
    p.add_argument("--x", type=float, required=True)
    _common(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("limit", help="limit constants a0, x0, ell, alpha_star")
    _common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("sequence", help="table of t_n, alpha_n with claim report")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sampling", choices=("dense", "log"), default="dense")
    _common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("figure", help="plot data for figure 1 (eta) or 2 (tau curves)")
    p.add_argument("id", type=int, choices=(1, 2))
    p.add_argument("--points", type=int, default=None, help="samples per curve (500 / 600)")
    p.add_argument("--a-min", type=float, default=0.0)
    p.add_argument("--a-max", type=float, default=2.5)
    p.add_argument("--t-max", type=float, default=6.0)
    _common(p, default_format="table")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify-cm", help="derivative sign alternation of f_beta")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--beta", type=float)
    g.add_argument("--beta-from-limit", action="store_true", help="beta = 1/(1 + alpha_star)")
    p.add_argument("--orders", type=int, default=12)
    p.add_argument(
        "--grid",
        nargs="+",
        help="x values > -1, space or comma separated (use --grid=-0.5,0,1 for a leading minus)",
    )
    p.add_argument("--strict-floor", type=float, default=STRICT_FLOOR)
    _common(p)
    p.set_defaults(func=cmd_verify_cm)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        to_tty = args.out is None and sys.stdout.isatty()
        args.format = "table" if to_tty else "csv"
    if args.command == "figure" and args.points is None:
        args.points = 500 if args.id == 1 else 600
    if args.digits < 1 or args.digits > 17:
        parser.error("--digits must be in [1, 17]")

    try:
        text, code = args.func(args)
    except _Fail as exc:
        return _report_error(args, exc.code, exc.kind, str(exc))
    except (DomainError, UsageError) as exc:
        return _report_error(args, EXIT_USAGE, "usage", str(exc))
    except SolverError as exc:
        return _report_error(args, EXIT_SOLVER, "solver", str(exc))
    except TaumaxError as exc:
        return _report_error(args, EXIT_SOLVER, "error", str(exc))

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _report_error(args, code, kind, message):
    if args.format == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "error": {"type": kind, "exit_code": code, "message": message},
        }
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    print(f"taumax {args.command}: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
