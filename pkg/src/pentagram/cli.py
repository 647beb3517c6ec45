"""Command-line verification harness.

Exit codes: 0 when every check passes, 1 on a check failure, 2 on usage,
parse or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import cluster
from .combinat import F_asm, F_ideals
from .errors import DegeneratePolygon, GenerationFailed, ParseError, PentagramError
from .exact import rat, rat_str
from .laurent import LaurentRing, LPoly
from .polygon import iterate, random_polygon, x_coords, y_params
from .report import VerificationReport
from .serialize import dumps_polygon, loads_polygon, polygon_to_dict
from .verify import verify_cluster, verify_collapse, verify_fpoly, verify_iterates

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit_report(rep: VerificationReport, args, started: float) -> int:
    if args.timing:
        rep.timing_ms = int((time.perf_counter() - started) * 1000)
    _write(rep.to_json() if args.format == "json" else rep.to_text(), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify_tk(args) -> VerificationReport:
    return verify_iterates(args.n, args.k, args.trials, args.seed, with_x=False)


def cmd_verify_tkx(args) -> VerificationReport:
    return verify_iterates(args.n, args.k, args.trials, args.seed, with_x=True)


def cmd_verify_fpoly(args) -> VerificationReport:
    return verify_fpoly(args.n, args.k)


def cmd_verify_collapse(args) -> VerificationReport:
    return verify_collapse(args.mode, args.n, args.trials, args.seed)


def cmd_verify_cluster(args) -> VerificationReport:
    return verify_cluster(args.n, args.trials, args.seed)


def cmd_gen(args) -> int:
    A = random_polygon(args.n, args.seed, closed=args.closed, coord_bound=args.bound,
                       offset=rat(args.offset), k=args.k)
    _write(dumps_polygon(A), args.out)
    return EXIT_OK


def cmd_map(args) -> int:
    A = loads_polygon(_read(args.input))
    B = iterate(A, args.k)
    ys, xs = y_params(B), x_coords(B)
    if args.format == "json":
        data = {"k": args.k, "polygon": polygon_to_dict(B), "y": [rat_str(v) for v in ys],
                "x": [rat_str(v) for v in xs]}
        text = json.dumps(data, indent=2)
    else:
        lines = [dumps_polygon(B), f"{'j':>4}  {'y_j':>24}  {'x_j':>24}"]
        lines += [f"{j:>4}  {rat_str(y):>24}  {rat_str(x):>24}" for j, (y, x) in enumerate(zip(ys, xs), 1)]
        text = "\n".join(lines)
    _write(text, args.out)
    return EXIT_OK


def default_fpoly_n(j: int, k: int) -> int:
    """Smallest n for which every index ``j - 3k .. j + 3k`` prints as itself."""
    return max(4, abs(j) + 3 * k + 1)


def cmd_fpoly(args) -> int:
    if args.k < -1:
        raise UsageError("--k must be >= -1")
    n = args.n if args.n is not None else default_fpoly_n(args.j, args.k)
    if n < 4:
        raise UsageError("--n must be >= 4")
    if args.k <= 0:
        p = LaurentRing.for_polygon(n).one()
    elif args.route == "recurrence":
        p = cluster.F(args.j, args.k, n)
    elif args.route == "ideals":
        p = F_ideals(args.j, args.k, n)
    else:
        p = F_asm(args.k, n, j=args.j)
    shown = LPoly(LaurentRing.for_polygon(n, centered=True), p.terms)
    if args.format == "json":
        text = json.dumps({"j": args.j, "k": args.k, "n": n, "terms": len(shown), "F": str(shown)}, indent=2)
    else:
        text = str(shown)
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentagram", description="Exact checks for pentagram map iterates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default, k_default=None, many_n=False, trials=None):
        if many_n:
            p.add_argument("--n", type=int, nargs="+", default=n_default)
        else:
            p.add_argument("--n", type=int, default=n_default)
        if k_default is not None:
            p.add_argument("--k", type=_positive, default=k_default)
        if trials is not None:
            p.add_argument("--trials", type=_positive, default=trials)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--timing", action="store_true", help="include wall-clock time in reports")

    p = sub.add_parser("verify-tk", help="y-parameters of T^k against the closed form")
    common(p, [5, 6, 7, 8, 9], 5, many_n=True, trials=25)
    p.set_defaults(func=cmd_verify_tk, report=True)

    p = sub.add_parser("verify-tkx", help="x-coordinates of T^k against the closed form")
    common(p, [5, 6, 7, 8, 9], 5, many_n=True, trials=25)
    p.set_defaults(func=cmd_verify_tkx, report=True)

    p = sub.add_parser("verify-fpoly", help="recurrence, ideal and ASM routes to F agree")
    common(p, 8, 4)
    p.set_defaults(func=cmd_verify_fpoly, report=True)

    p = sub.add_parser("verify-collapse", help="axis-aligned polygons collapse onto two lines")
    common(p, [3, 4, 5], many_n=True, trials=10)
    p.add_argument("--mode", choices=("closed", "twisted"), default="closed")
    p.set_defaults(func=cmd_verify_collapse, report=True)

    p = sub.add_parser("verify-cluster", help="exchange matrix, mutations and the seed chain")
    common(p, 8, trials=10)
    p.set_defaults(func=cmd_verify_cluster, report=True)

    p = sub.add_parser("gen", help="write a random generic polygon as JSON")
    common(p, 7, 1)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--offset", choices=("0", "1/2"), default="0")
    p.add_argument("--bound", type=_positive, default=10, help="coordinate bound")
    p.set_defaults(func=cmd_gen, report=False)

    p = sub.add_parser("map", help="apply T^k to a polygon JSON file")
    p.add_argument("input", help="polygon JSON path, or - for stdin")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_map, report=False)

    p = sub.add_parser("fpoly", help="print F_{j,k}")
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=None, help="half the number of variables (default: large enough to avoid wrap-around)")
    p.add_argument("--route", choices=("recurrence", "ideals", "asm"), default="ideals")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_fpoly, report=False)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    started = time.perf_counter()
    try:
        if args.report:
            return _emit_report(args.func(args), args, started)
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegeneratePolygon, GenerationFailed) as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (PentagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
