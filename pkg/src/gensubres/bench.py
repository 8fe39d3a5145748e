"""Coefficient-growth comparison of the classical and lead/trail PRS engines."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor

from .poly import equal_up_to_sign
from .prs import Algorithm, run_traced

HEADER = ["case", "algorithm", "step", "deg_u", "deg_v", "delta", "lambda",
          "kind", "max_coeff_size", "elapsed_ns"]


def trace_rows(case, trace, f, g):
    """One row per PRS step and a closing ``total`` row."""
    name = trace.algorithm.value
    rows = [
        [case, name, s.step, s.deg_u, s.deg_v, s.delta, s.lam, s.kind.value,
         s.max_coeff_size, s.elapsed_ns]
        for s in trace.steps
    ]
    rows.append([case, name, "total", f.degree, g.degree, "", "", "",
                 trace.max_coeff_size, trace.elapsed_ns])
    return rows


def run_case(args):
    case, f, g, algorithms, measure = args
    results = []
    for algorithm in algorithms:
        result, trace = run_traced(f, g, algorithm, measure)
        results.append((algorithm, result, trace_rows(case, trace, f, g),
                        trace.max_coeff_size))
    return case, results


def run_bench(pairs, algorithms=(Algorithm.CLASSIC, Algorithm.GENERALIZED),
              measure=None, jobs: int = 1):
    """Run every pair; returns ``(rows, summary)`` in case order.

    ``summary`` maps case index to ``{algorithm: max_coeff_size}`` plus an
    ``"agree"`` flag telling whether all algorithms returned the same gcd up
    to sign.
    """
    tasks = [(i, f, g, tuple(algorithms), measure) for i, (f, g) in enumerate(pairs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_case, tasks))
    else:
        outcomes = [run_case(t) for t in tasks]
    rows = []
    summary = {}
    for case, results in outcomes:
        first = results[0][1]
        entry = {"agree": all(equal_up_to_sign(first, r) for _, r, _, _ in results)}
        for algorithm, _, case_rows, size in results:
            rows.extend(case_rows)
            entry[algorithm] = size
        summary[case] = entry
    return rows, summary


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(rows)
