"""Command line interface.

Subcommands: find-poly, verify-table, pattern, metrics, simulate. Every
command is deterministic given its inputs (all randomness comes from seed
fields in configs). Exit codes: 0 success, 1 validation failure, 2 internal
assertion.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import configio, metrics, sim
from .gf import (FpPoly, check_prime, factorize, find_condition_g_poly, format_poly,
                 minimal_r, parse_poly, poly_pow_mod, satisfies_condition_g)
from .patterns import coords
from .table import BUILTIN_TABLE, TableRow, parse_table_file


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; usage errors are 1
        self.print_usage(sys.stderr)
        raise SystemExit_(1, f"{self.prog}: error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


def _order_transcript(f: FpPoly, out) -> None:
    p, r = f.p, f.degree
    group = p**r - 1
    x = FpPoly.x(p)
    one = FpPoly.one(p)
    factors = factorize(group)
    print(f"group order p^r-1 = {group} = "
          + " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in factors), file=out)
    assert poly_pow_mod(x, group, f) == one, "x^(p^r-1) != 1"
    print(f"x^{group} = 1 mod f", file=out)
    for q, _ in factors:
        witness = poly_pow_mod(x, group // q, f)
        assert witness != one, f"x^({group}//{q}) == 1"
        print(f"x^{group // q} = {format_poly(witness)} != 1  (factor {q} ok)", file=out)


def cmd_find_poly(args, out) -> int:
    check_prime(args.p)
    if args.r < 1:
        raise ValueError("r must be >= 1")
    f = find_condition_g_poly(args.p, args.r)
    print(f"f = {format_poly(f)}", file=out)
    _order_transcript(f, out)
    return 0


def _verify_row(row: TableRow, out) -> bool:
    try:
        check_prime(row.p)
        f = parse_poly(row.poly_text, row.p)
        ok = (f.is_monic and f.degree == row.r and satisfies_condition_g(f)
              and row.m_lo <= row.m_hi
              and minimal_r(row.p, row.m_lo) == row.r
              and minimal_r(row.p, row.m_hi) == row.r)
    except ValueError as exc:
        print(f"FAIL p={row.p} r={row.r} {row.poly_text}: {exc}", file=out)
        return False
    status = "PASS" if ok else "FAIL"
    print(f"{status} p={row.p} r={row.r} m={row.m_lo}..{row.m_hi} {row.poly_text}", file=out)
    return ok


def cmd_verify_table(args, out) -> int:
    rows = BUILTIN_TABLE
    if args.path:
        rows = parse_table_file(Path(args.path).read_text(encoding="utf-8"))
    results = [_verify_row(row, out) for row in rows]
    print(f"{sum(results)}/{len(results)} rows verified", file=out)
    return 0 if all(results) else 1


def cmd_pattern(args, out) -> int:
    spec = configio.load_pattern_spec(args.config)
    if args.frames < 0:
        raise ValueError("frames must be >= 0")
    rows = []
    for s in range(spec.frame.resources):
        for t in range(args.frames):
            c = coords(spec, s, t)
            rows.append((s, t, c.i, c.j))
    configio.write_pattern_csv(args.out, rows)
    print(f"wrote {len(rows)} rows to {args.out}", file=out)
    return 0


def cmd_metrics(args, out) -> int:
    spec = configio.load_pattern_spec(args.config)
    report = metrics.compute_report(spec, t_cap=args.t_cap, t_b=args.t_b)
    text = configio.format_report(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote report to {args.out}", file=out)
    else:
        out.write(text)
    return 0


def cmd_simulate(args, out) -> int:
    config = configio.load_sim_config(args.config)
    result = sim.run(config)
    frames_path = f"{args.out}.frames.csv"
    dist_path = f"{args.out}.dist.csv"
    configio.write_sim_frames_csv(frames_path, result)
    configio.write_sim_dist_csv(dist_path, result)
    print(f"{result.cum_pairs[-1]} ordered pairs discovered over {config.frames} frames",
          file=out)
    print(f"wrote {frames_path} and {dist_path}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="d2dhop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find-poly", help="search for a full-order polynomial")
    p.add_argument("--p", type=int, required=True, help="prime subframe count")
    p.add_argument("--r", type=int, required=True, help="polynomial degree")
    p.set_defaults(fn=cmd_find_poly)

    p = sub.add_parser("verify-table", help="check the built-in polynomial table")
    p.add_argument("--path", help="verify an external table file instead")
    p.set_defaults(fn=cmd_verify_table)

    p = sub.add_parser("pattern", help="emit pattern coordinates as CSV")
    p.add_argument("--config", required=True, help="pattern config file")
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(fn=cmd_pattern)

    p = sub.add_parser("metrics", help="evaluate the three pattern metrics")
    p.add_argument("--config", required=True, help="pattern config file")
    p.add_argument("--t-cap", type=int, default=200, dest="t_cap",
                   help="search budget for period and run scans")
    p.add_argument("--t-b", type=int, default=10000, dest="t_b",
                   help="empirical horizon for the random pattern")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("simulate", help="run the discovery simulation")
    p.add_argument("--config", required=True, help="simulation config file")
    p.add_argument("--out", required=True,
                   help="output prefix; writes <out>.frames.csv and <out>.dist.csv")
    p.set_defaults(fn=cmd_simulate)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args, out)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
