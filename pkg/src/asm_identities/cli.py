"""Command-line harness.

Exit status: 0 when every requested identity holds, 1 when one is
violated (the report is still printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import asm, ik, lambda_det, tournaments
from .errors import InvalidAsm
from .report import CheckReport, combine

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

MAX_ENUMERATE_N = 7

# identity -> (min n, max n, max n with --long, runner(n, trials, seed))
CHECKS = {
    "prop1": (1, 7, 7, lambda n, t, s: lambda_det.check_prop1(n, t, s)),
    "prop2": (1, 6, 6, lambda n, t, s: lambda_det.check_prop2(n, t, s)),
    "problem1": (3, 6, 6, lambda n, t, s: lambda_det.check_problem1(n, t, s)),
    "prop3": (1, 6, 7, lambda n, t, s: _with_seed(asm.check_prop3_suite(n), s)),
    "eq6": (1, 5, 6, lambda n, t, s: _with_seed(tournaments.check_eq6(n), s)),
    "cauchy": (1, 8, 8, lambda n, t, s: ik.check_cauchy(n, t, s)),
    "borchardt": (1, 7, 7, lambda n, t, s: ik.check_borchardt(n, t, s)),
    "ik": (1, 5, 5, lambda n, t, s: ik.check_ik(n, t, s)),
    "ik-symmetry": (1, 5, 5, lambda n, t, s: ik.check_ik_symmetry(n, t, s)),
    "ik-degree": (1, 5, 5, lambda n, t, s: ik.check_ik_degree(n, s)),
    "eq11": (1, 4, 5, lambda n, t, s: ik.check_eq11(n, min(t, 3), s)),
    "count": (1, 7, 7, lambda n, t, s: _with_seed(ik.check_count(n), s)),
}


def _with_seed(report: CheckReport, seed: int) -> CheckReport:
    report.seed = seed
    return report


class UsageError(Exception):
    pass


def _guard_help() -> str:
    lines = ["identities and their order guards (min..max, max with --long):"]
    for name, (lo, hi, hi_long, _) in CHECKS.items():
        lines.append(f"  {name:<12} {lo}..{hi}" + (f" ({hi_long} with --long)" if hi_long != hi else ""))
    lines.append("  all          every identity whose guard admits n")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="asm-identities", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help=f"list ASMs of order n (1 <= n <= {MAX_ENUMERATE_N})")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", choices=("json", "csv"), default="json")

    sub.add_parser("stats", help="read one ASM as JSON on stdin, print its statistics")

    c = sub.add_parser("check", help="verify an identity", epilog=_guard_help(),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    c.add_argument("identity", choices=list(CHECKS) + ["all"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--trials", type=int, default=10)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--long", action="store_true", help="raise the order guards of the exact-polynomial checks")

    a = sub.add_parser("audit", help=f"coefficient table of the tournament identity (n <= {tournaments.MAX_AUDIT_N})")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--format", choices=("json", "csv"), default="csv")

    k = sub.add_parser("count", help="number of ASMs of order n from the product formula")
    k.add_argument("n", type=int)
    k.add_argument("--verify", action="store_true", help=f"also enumerate (n <= {MAX_ENUMERATE_N})")
    return p


def cmd_enumerate(n: int, fmt: str, out) -> int:
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise UsageError(f"enumerate guard: need 1 <= n <= {MAX_ENUMERATE_N}, got {n}")
    count = 0
    if fmt == "json":
        for A in asm.enumerate_asms(n):
            out.write(A.to_json() + "\n")
            count += 1
        out.write(json.dumps({"count": count}) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("index", "n", "entries"))
        for A in asm.enumerate_asms(n):
            w.writerow((count, n, ";".join(str(a) for row in A.rows for a in row)))
            count += 1
        w.writerow(("count", count, ""))
    return EXIT_OK


def cmd_stats(inp, out) -> int:
    try:
        raw = json.load(inp)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not JSON: {exc}") from exc
    try:
        A = asm.validate(raw)
    except InvalidAsm as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc
    out.write(asm.stats(A).to_json() + "\n")
    return EXIT_OK


def _run_check(name: str, n: int, trials: int, seed: int, long: bool) -> CheckReport:
    lo, hi, hi_long, runner = CHECKS[name]
    limit = hi_long if long else hi
    if not lo <= n <= limit:
        hint = f" ({hi_long} with --long)" if hi_long > limit else ""
        raise UsageError(f"{name} guard: need {lo} <= n <= {limit}{hint}, got {n}")
    return runner(n, trials, seed)


def cmd_check(name: str, n: int, trials: int, seed: int, fmt: str, long: bool, out) -> int:
    if trials < 1:
        raise UsageError("--trials must be positive")
    if name == "all":
        names = [k for k, (lo, hi, hi_long, _) in CHECKS.items() if lo <= n <= (hi_long if long else hi)]
        if not names:
            raise UsageError(f"no identity admits n = {n}")
        reports = [_run_check(k, n, trials, seed, long) for k in names]
        skipped = [k for k in CHECKS if k not in names]
        agg = combine("all", n, reports, notes=f"skipped (outside guard): {', '.join(skipped) or 'none'}")
        agg.details = {"identities": names}
        reports.append(agg)
    else:
        reports = [_run_check(name, n, trials, seed, long)]
    if fmt == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    else:
        out.write(reports[0].to_csv(header=True))
        for r in reports[1:]:
            out.write(r.to_csv(header=False))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


def cmd_audit(n: int, fmt: str, out) -> int:
    if not 1 <= n <= tournaments.MAX_AUDIT_N:
        raise UsageError(f"audit guard: need 1 <= n <= {tournaments.MAX_AUDIT_N}, got {n}")
    rows = tournaments.audit_eq6(n)
    if fmt == "csv":
        out.write(tournaments.audit_to_csv(rows))
    else:
        for r in rows:
            out.write(json.dumps({
                "lambda_power": r.lambda_power, "x_exponents": list(r.x_exponents),
                "tournament_count": r.tournament_count, "decorated_asm_count": r.decorated_asm_count,
            }) + "\n")
        out.write(json.dumps({
            "total_tournaments": sum(r.tournament_count for r in rows),
            "total_decorated_asms": sum(r.decorated_asm_count for r in rows),
        }) + "\n")
    return EXIT_OK if all(r.balanced for r in rows) else EXIT_VIOLATION


def cmd_count(n: int, verify: bool, out) -> int:
    if n < 1:
        raise UsageError(f"count needs n >= 1, got {n}")
    if verify and n > MAX_ENUMERATE_N:
        raise UsageError(f"--verify enumerates and is limited to n <= {MAX_ENUMERATE_N}")
    value = ik.asm_count_formula(n)
    out.write(f"{value}\n")
    if verify:
        counted = sum(1 for _ in asm.enumerate_asms(n))
        if counted != value:
            sys.stderr.write(f"verify failed: enumeration found {counted}\n")
            return EXIT_VIOLATION
    return EXIT_OK


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args.n, args.format, stdout)
        if args.command == "stats":
            return cmd_stats(stdin, stdout)
        if args.command == "check":
            return cmd_check(args.identity, args.n, args.trials, args.seed, args.format, args.long, stdout)
        if args.command == "audit":
            return cmd_audit(args.n, args.format, stdout)
        if args.command == "count":
            return cmd_count(args.n, args.verify, stdout)
    except UsageError as exc:
        sys.stderr.write(f"asm-identities: error: {exc}\n")
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


def run():
    sys.exit(main())
