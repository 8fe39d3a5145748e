"""Command-line front end.

Exit status: 0 on success, 1 on usage or parse errors, 2 when an internal
invariant fails (an inexact division inside a PRS, or two algorithms that
disagree).
"""

from __future__ import annotations

import argparse
import random
import sys

from . import bench
from .parse import ParseError, format_poly, format_scalar, parse_pairs, parse_poly
from .poly import full_reduce, normalize_poly
from .prs import (
    Algorithm,
    classic_resultant,
    resultant_any,
    run_traced,
)
from .randpoly import growth_fixture
from .ring import ZY, ZZ, NotDivisible, SizeMeasure, normalize
from .subres import build_sk, det_poly, gcd_degree_detect

EXIT_USAGE = 1
EXIT_INVARIANT = 2


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(parser):
    parser.add_argument("--ring", choices=["z", "zy"], default="z")
    parser.add_argument("--algorithm", choices=["classic", "generalized", "both"],
                        default="generalized")
    parser.add_argument("--size-measure", choices=[m.value for m in SizeMeasure],
                        help="coefficient size used to pick lead or trail division "
                             "(default: bits over z, degree over zy)")
    parser.add_argument("--trace", metavar="PATH", help="write the per-step CSV trace here")


def build_parser():
    parser = _Parser(prog="gensubres",
                     description="Polynomial gcd and resultants by lead/trail subresultant PRS.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, text in [("gcd", "gcd of two polynomials"),
                       ("resultant", "resultant of two polynomials")]:
        p = sub.add_parser(name, help=text)
        _common(p)
        p.add_argument("f")
        p.add_argument("g")

    p = sub.add_parser("subres", help="split-column determinant polynomial of S_k")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, help="left fixed columns (default: nrows-1)")
    p.add_argument("f")
    p.add_argument("g")

    p = sub.add_parser("detect", help="gcd degree from subresultant coefficients")
    _common(p)
    p.add_argument("--a", type=int, help="fixed split for every S_k (default: classical)")
    p.add_argument("f")
    p.add_argument("g")

    p = sub.add_parser("bench", help="coefficient-growth comparison, CSV output")
    _common(p)
    p.set_defaults(algorithm="both")
    p.add_argument("--in", dest="infile", metavar="PATH",
                   help="file of 'f ; g' lines (default: generated Z[y] fixture)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _ring(args):
    return ZY if args.ring == "zy" else ZZ


def _measure(args):
    if args.size_measure:
        return SizeMeasure(args.size_measure)
    return SizeMeasure.DEGREE if args.ring == "zy" else SizeMeasure.BITS


def _algorithms(args):
    if args.algorithm == "both":
        return [Algorithm.CLASSIC, Algorithm.GENERALIZED]
    return [Algorithm(args.algorithm)]


def _operands(args):
    ring = _ring(args)
    return parse_poly(args.f, ring), parse_poly(args.g, ring)


def _write_trace(path, rows):
    with open(path, "w", newline="") as fh:
        bench.write_csv(rows, fh)


def cmd_gcd(args, out):
    f, g = _operands(args)
    measure = _measure(args)
    results = []
    rows = []
    for algorithm in _algorithms(args):
        result, trace = run_traced(f, g, algorithm, measure)
        results.append(normalize_poly(result))
        if f and g:
            rows.extend(bench.trace_rows(0, trace, f, g))
    if any(r != results[0] and r != -results[0] for r in results):
        raise Disagreement("classic and generalized gcd disagree: "
                           + ", ".join(map(format_poly, results)))
    if args.trace:
        _write_trace(args.trace, rows)
    print(format_poly(results[0]), file=out)


def cmd_resultant(args, out):
    f, g = _operands(args)
    if not f or not g:
        raise UsageError("resultant needs nonzero operands")
    measure = _measure(args)
    values = []
    for algorithm in _algorithms(args):
        if algorithm is Algorithm.CLASSIC:
            values.append(classic_resultant(f, g))
        else:
            values.append(resultant_any(f, g, measure))
    if any(normalize(v) != normalize(values[0]) for v in values):
        raise Disagreement("classic and generalized resultants disagree")
    print(format_scalar(values[-1]), file=out)


def cmd_subres(args, out):
    f, g = _operands(args)
    if not f or not g:
        raise UsageError("subres needs nonzero operands")
    if f.degree < g.degree:
        f, g = g, f
    m = build_sk(f, g, args.k)
    a = m.nrows - 1 if args.a is None else args.a
    sp = det_poly(m, a)
    print(format_poly(sp.poly), file=out)
    print(f"flc: {format_scalar(sp.flc)}", file=out)
    print(f"ftc: {format_scalar(sp.ftc)}", file=out)


def cmd_detect(args, out):
    f, g = _operands(args)
    if not f or not g:
        raise UsageError("detect needs nonzero operands")
    f1, a = full_reduce(f)
    g1, b = full_reduce(g)
    split = None if args.a is None else (lambda nrows: min(args.a, nrows - 1))
    kwargs = {} if split is None else {"split": split}
    print(gcd_degree_detect(f1, g1, **kwargs) + min(a, b), file=out)


def cmd_bench(args, out):
    ring = _ring(args)
    if args.infile:
        with open(args.infile) as fh:
            pairs = parse_pairs(fh.read(), ring)
    else:
        if ring is not ZY:
            raise UsageError("the generated fixture is over zy; pass --ring zy or --in")
        pairs = growth_fixture(random.Random(args.seed), args.cases)
    algorithms = _algorithms(args)
    rows, summary = bench.run_bench(pairs, algorithms, _measure(args), args.jobs)
    if args.trace:
        _write_trace(args.trace, rows)
    else:
        bench.write_csv(rows, out)
    if len(algorithms) == 2:
        better = sum(1 for s in summary.values()
                     if s[Algorithm.GENERALIZED] <= s[Algorithm.CLASSIC])
        print(f"generalized max_coeff_size <= classic in {better}/{len(summary)} cases",
              file=sys.stderr)
        if not all(s["agree"] for s in summary.values()):
            raise Disagreement("classic and generalized gcd disagree on some case")


COMMANDS = {
    "gcd": cmd_gcd,
    "resultant": cmd_resultant,
    "subres": cmd_subres,
    "detect": cmd_detect,
    "bench": cmd_bench,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except (NotDivisible, Disagreement) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ParseError, UsageError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
