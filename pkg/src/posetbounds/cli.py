"""Command-line front end.

Every command writes one JSON document (or CSV for ``ratio-scan``) to
standard output. Exit codes: 0 success, 1 input or configuration error,
2 a bound or check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import log

from . import bounds, gkf, linext, verify
from .errors import PosetError
from .poset import Poset, load_poset, random_poset

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


def _emit(doc, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _read_poset(args) -> Poset:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return load_poset(text, args.format)


def _int_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    lo_i = int(lo)
    return lo_i, int(hi) if hi else lo_i


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(","))


def cmd_analyze(args) -> int:
    P = _read_poset(args)
    report = bounds.check_bounds(P)
    _emit(report.to_json(), args.pretty)
    return EXIT_OK if report.holds else EXIT_FAILED


def cmd_count(args) -> int:
    P = _read_poset(args)
    _emit({"n": P.n, "e": linext.count_extensions(P)}, args.pretty)
    return EXIT_OK


def cmd_gkf(args) -> int:
    P = _read_poset(args)
    ordering = gkf.order_maximal_antichain(P) if P.n else []
    doc = {
        "a": list(gkf.antichain_params(P)),
        "c": list(gkf.chain_params(P)),
        "ordering": ordering,
        "ordering_verified": gkf.verify_ordering(P, ordering) if P.n else True,
    }
    _emit(doc, args.pretty)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(mode=args.mode, jobs=args.jobs)
    if args.input is not None:
        cfg.poset = _read_poset(args)
    if args.n is not None:
        cfg.n_lo, cfg.n_hi = _int_range(args.n)
        if args.mode == "exhaustive" and "-" not in args.n:
            cfg.n_lo = 1
    if args.count is not None:
        cfg.count = args.count
    if args.density is not None:
        cfg.densities = _floats(args.density)
    cfg.seed = args.seed
    if args.checks not in (None, "all"):
        cfg.checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    summary = verify.run_verify(cfg, timing=args.timing)
    _emit(summary, args.pretty)
    return EXIT_OK if summary["passed"] else EXIT_FAILED


CSV_HEADER = ["n", "log_lower", "log_e", "log_upper", "log_ratio"]


def ratio_row(P: Poset) -> list[str]:
    a, c = gkf.antichain_params(P), gkf.chain_params(P)
    lo, hi = bounds.lower_bound(a), bounds.upper_bound(P.n, c)
    e = f"{log(linext.count_extensions(P)):.12g}" if P.n <= linext.COUNT_MAX_N else ""
    return [
        str(P.n),
        f"{log(lo):.12g}",
        e,
        f"{log(hi):.12g}",
        f"{log(hi) - log(lo):.12g}",
    ]


def cmd_ratio_scan(args) -> int:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    if args.input is not None:
        w.writerow(ratio_row(_read_poset(args)))
    else:
        lo, hi = _int_range(args.n or "6-12")
        density = args.density_value
        seed = 0 if args.seed is None else args.seed
        count = 1 if args.count is None else args.count
        if not 0 <= density <= 1 or count < 1 or lo < 1 or hi < lo:
            raise PosetError("ratio-scan needs 1 <= n_lo <= n_hi, count >= 1, density in [0, 1]")
        idx = 0
        for n in range(lo, hi + 1):
            for _ in range(count):
                w.writerow(ratio_row(random_poset(n, density, seed + idx)))
                idx += 1
    sys.stdout.write(out.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        p.add_argument("--input", default=None if not needs_input else "-",
                       help="poset file (default: standard input)" if needs_input else "optional poset file")
        p.add_argument("--format", choices=["auto", "json", "text"], default="auto")
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    for name, fn, hlp in [
        ("analyze", cmd_analyze, "bounds report for one poset"),
        ("gkf", cmd_gkf, "chain/antichain parameters and maximal-antichain ordering"),
        ("count", cmd_count, "number of linear extensions"),
    ]:
        p = sub.add_parser(name, help=hlp)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run verification sweeps")
    common(p, needs_input=False)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--n", help="N or LO-HI; in exhaustive mode N means 1-N")
    p.add_argument("--count", type=int)
    p.add_argument("--density", help="comma-separated densities, cycled across instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(verify.ALL_CHECKS)} or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reruns)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio-scan", help="CSV of log bounds over random posets")
    common(p, needs_input=False)
    p.add_argument("--n", help="N or LO-HI (default 6-12)")
    p.add_argument("--count", type=int, help="samples per n (default 1)")
    p.add_argument("--density", dest="density_value", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_ratio_scan)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PosetError, OSError, ValueError) as exc:
        print(f"posetbounds: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
