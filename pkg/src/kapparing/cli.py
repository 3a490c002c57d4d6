"""``kappa`` command line interface.

Exit codes: 0 success, 1 a verification case failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import intersection
from .combinatorics import (
    format_partition,
    format_profile,
    parse_partition,
    parse_profile,
    profiles,
    profiles_all,
    shape,
)
from .pairing import exact_rank, format_rational, lambda_norm, pair, pairing_matrix
from .verify import SUITES, CheckReport, run_suite, table2

log = logging.getLogger("kapparing")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"malformed exponent list {text!r}; expected a1,a2,...")
    if not vals:
        raise UsageError("empty exponent list")
    return vals


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads (output is identical)")
    common.add_argument(
        "--cache",
        default=os.environ.get(intersection.CACHE_ENV),
        help=f"memo cache file, loaded before and saved after the run (default ${intersection.CACHE_ENV})",
    )
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")

    parser = argparse.ArgumentParser(prog="kappa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[common], help="intersection number <tau_a1 ... tau_an>_g")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--exps", required=True, help="comma-separated exponents")

    p = sub.add_parser("pair", parents=[common], help="pairing <psi(p), q>")
    p.add_argument("--partition", required=True, help="a1+a2+...")
    p.add_argument("--profile", required=True, help="(g1,m1)(g2,m2)...")
    p.add_argument("--normalized", action="store_true", help="divide by Lambda(q)")

    def dgn(sp):
        sp.add_argument("--degree", type=int, required=True)
        sp.add_argument("--genus", type=int, required=True)
        sp.add_argument("--points", type=int, required=True)

    p = sub.add_parser("profiles", parents=[common], help="list Q(d; g, n) or Q(p; g, n)")
    dgn(p)
    p.add_argument("--partition", help="restrict to one partition of the degree")

    p = sub.add_parser("rank", parents=[common], help="rank of R(d; g, n)")
    dgn(p)
    p.add_argument("--dump", action="store_true", help="also emit the matrix")

    p = sub.add_parser("dump", parents=[common], help="emit R(d; g, n)")
    dgn(p)

    p = sub.add_parser("table", parents=[common], help="rank grid in fixed codimension")
    p.add_argument("--codim", type=int, action="append", required=True)
    p.add_argument("--genus-min", type=int, default=0)
    p.add_argument("--genus-max", type=int, default=2)
    p.add_argument("--points-max", type=int, default=10)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITES + ["all"], required=True)
    p.add_argument("--n-max", type=int, default=8, help="largest n for the divisor suite")
    p.add_argument("--g-max", type=int, default=5, help="largest g for the determinant suite")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds (output no longer reproducible)")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_psi(args) -> int:
    exps = _int_list(args.exps)
    try:
        value = intersection.psi_integral(args.genus, exps)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        _emit(json.dumps({"genus": args.genus, "exps": exps, "value": format_rational(value)}))
    else:
        _emit(format_rational(value))
    return 0


def _parse_pq(args):
    try:
        return parse_partition(args.partition), parse_profile(args.profile)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_pair(args) -> int:
    p, q = _parse_pq(args)
    value = pair(p, q)
    if args.normalized:
        value /= lambda_norm(q)
    if args.format == "json":
        _emit(json.dumps({"partition": format_partition(p), "profile": format_profile(q),
                          "value": format_rational(value)}))
    else:
        _emit(format_rational(value))
    return 0


def _check_dgn(args):
    if args.points < 1 or args.genus < 0:
        raise UsageError("need --genus >= 0 and --points >= 1")
    if not 1 <= args.degree <= 3 * args.genus - 3 + args.points:
        raise UsageError(f"--degree must lie in [1, {3 * args.genus - 3 + args.points}]")


def _cmd_profiles(args) -> int:
    _check_dgn(args)
    if args.partition:
        try:
            p = parse_partition(args.partition)
        except ValueError as exc:
            raise UsageError(str(exc))
        if sum(p) != args.degree:
            raise UsageError("partition does not sum to --degree")
        rows = profiles(p, args.genus, args.points)
    else:
        rows = profiles_all(args.degree, args.genus, args.points)[0]
    if args.format == "json":
        _emit(json.dumps([{"profile": format_profile(q), "shape": format_partition(shape(q))} for q in rows]))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["profile", "shape"])
        for q in rows:
            w.writerow([format_profile(q), format_partition(shape(q))])
        _emit(buf.getvalue())
    else:
        _emit("\n".join(f"{format_profile(q)}\t{format_partition(shape(q))}" for q in rows))
    return 0


def _cmd_rank(args, dump_only=False) -> int:
    _check_dgn(args)
    M = pairing_matrix(args.degree, args.genus, args.points, threads=args.threads)
    if dump_only or args.dump:
        sys.stdout.write(M.dump())
    if not dump_only:
        r = exact_rank(M)
        if args.format == "json":
            _emit(json.dumps({"degree": args.degree, "genus": args.genus, "points": args.points, "rank": r}))
        else:
            _emit(str(r))
    return 0


def _cmd_table(args) -> int:
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(lambda e: table2(e, args.genus_max, args.points_max, args.genus_min), args.codim))
    else:
        results = [table2(e, args.genus_max, args.points_max, args.genus_min) for e in args.codim]
    rows = [row for r, _ in results for row in r]
    report = CheckReport("table2")
    for _, rep in results:
        report.extend(rep)
    if args.format == "json":
        _emit(json.dumps(rows))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["codim", "genus", "points", "degree", "rank"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue())
    else:
        for e in args.codim:
            _emit(f"codim {e}: points 1..{args.points_max}")
            for g in range(args.genus_min, args.genus_max + 1):
                ranks = [r["rank"] for r in rows if r["codim"] == e and r["genus"] == g]
                _emit(f"  g={g}: " + " ".join(f"{x:>3}" for x in ranks))
    if not report.passed:
        for c in report.cases:
            if not c.passed:
                log.warning("published value differs at %s: expected %s, got %s", c.case_id, c.expected, c.actual)
    return 0


def _cmd_verify(args) -> int:
    names = SUITES if "all" in args.suite else list(dict.fromkeys(args.suite))

    def run(name):
        return run_suite(name, n_max=args.n_max, g_max=args.g_max)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(run, names))
    else:
        reports = [run(n) for n in names]
    if args.format == "json":
        _emit(json.dumps({"passed": all(r.passed for r in reports), "suites": [r.to_dict(args.timing) for r in reports]}, indent=1))
    else:
        for r in reports:
            _emit(r.to_text(args.timing))
    return 0 if all(r.passed for r in reports) else 1


def run(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="kappa: %(message)s", stream=sys.stderr)
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    if args.cache:
        intersection.load_cache(args.cache)
    handlers = {
        "psi": _cmd_psi,
        "pair": _cmd_pair,
        "profiles": _cmd_profiles,
        "rank": _cmd_rank,
        "dump": lambda a: _cmd_rank(a, dump_only=True),
        "table": _cmd_table,
        "verify": _cmd_verify,
    }
    try:
        code = handlers[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"kappa {args.command}: {exc}\n")
        parser.print_usage(sys.stderr)
        return 2
    if args.cache:
        intersection.save_cache(args.cache)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
