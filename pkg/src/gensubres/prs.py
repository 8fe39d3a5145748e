"""Subresultant remainder sequences: the classical one and the lead/trail variant.

Both engines are fraction-free; every division below goes through
:func:`exact_div`, so an inexact step raises :class:`NotDivisible` instead of
silently producing a wrong answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from time import perf_counter_ns

from .poly import Poly, content_primitive, full_reduce, normalize_poly
from .pseudo import DivisionKind, gen_prem, prem
from .ring import NotFull, SizeMeasure, exact_div, ring_gcd, relative_size


class Algorithm(enum.Enum):
    CLASSIC = "classic"
    GENERALIZED = "generalized"


@dataclass
class TraceStep:
    step: int
    deg_u: int
    deg_v: int
    delta: int
    lam: int
    kind: DivisionKind
    g: object
    gbar: object
    h: object  # None when the run ends without a closing h update
    max_coeff_size: int
    elapsed_ns: int
    terminal: bool = False


@dataclass
class PrsTrace:
    algorithm: Algorithm
    measure: SizeMeasure
    steps: list = field(default_factory=list)
    remainders: list = field(default_factory=list)

    @property
    def deltas(self):
        return [s.delta for s in self.steps]

    @property
    def lambdas(self):
        return [s.lam for s in self.steps]

    def delta_sum(self, m: int, n: int) -> int:
        """Sum of deltas over 1-based steps ``m..n`` inclusive."""
        return sum(self.deltas[m - 1 : n])

    @property
    def max_coeff_size(self) -> int:
        return max((s.max_coeff_size for s in self.steps), default=0)

    @property
    def elapsed_ns(self) -> int:
        return sum(s.elapsed_ns for s in self.steps)

    def h_law_failures(self):
        """Steps whose ``h`` disagrees with the step-to-step transformation law.

        The law is re-derived from the recorded ``g``, ``gbar``, ``lam`` and
        ``delta`` of consecutive steps, independently of the running ``G``
        and ``Gbar`` accumulators used by the engine::

            h_k * g_{k-1}^lam_{k-1} * h_{k-1}^(delta_k - 1)
                == gbar_{k-1}^lam_{k-1} * g_k^delta_k
        """
        bad = []
        prev_g = prev_gbar = prev_h = None
        prev_lam = 0
        for s in self.steps:
            if s.h is None:
                continue
            one = s.h**0
            pg = one if prev_g is None else prev_g
            pgb = one if prev_gbar is None else prev_gbar
            ph = one if prev_h is None else prev_h
            lhs = s.h * pg**prev_lam * ph ** max(s.delta - 1, 0)
            rhs = pgb**prev_lam * s.g**s.delta * ph ** max(1 - s.delta, 0)
            if lhs != rhs:
                bad.append(s.step)
            prev_g, prev_gbar, prev_h, prev_lam = s.g, s.gbar, s.h, s.lam
        return bad


def _next_h(gbar_pow, g, delta, g_pow, h):
    # h := Gbar * g^delta / (G * h^(delta-1)); delta == 0 moves h to the numerator
    num = gbar_pow * g**delta * h ** max(0, 1 - delta)
    den = g_pow * h ** max(0, delta - 1)
    return exact_div(num, den)


def _max_size(p: Poly, measure: SizeMeasure) -> int:
    return max((relative_size(c, measure) for c in p.coeffs if c), default=0)


def _classic_loop(u: Poly, v: Poly, measure, trace):
    """Run the classical subresultant PRS; returns ``(last_nonzero, final_h)``."""
    one = u.ring.one
    g = h = one
    step = 0
    while True:
        step += 1
        t0 = perf_counter_ns()
        r = prem(u, v)
        delta = u.degree - v.degree
        if not r:
            final_h = _next_h(one, v.lc, delta, one, h) if v.degree == 0 else None
            if trace is not None:
                trace.steps.append(TraceStep(
                    step, u.degree, v.degree, delta, 0, DivisionKind.LEAD,
                    v.lc, v.coeffs[0], final_h, _max_size(v, measure),
                    perf_counter_ns() - t0, terminal=True))
            return v, final_h
        deg_u, deg_v = u.degree, v.degree
        u = v
        v = r.div_scalar(g * h**delta)
        g = u.lc
        h = _next_h(one, g, delta, one, h)
        if trace is not None:
            trace.remainders.append(v)
            trace.steps.append(TraceStep(
                step, deg_u, deg_v, delta, 0, DivisionKind.LEAD, g, u.coeffs[0],
                h, _max_size(v, measure), perf_counter_ns() - t0))


def _generalized_loop(u: Poly, v: Poly, measure, trace):
    """Lead/trail remainder loop on full primitive ``u``, ``v``; returns ``(last_nonzero, final_h)``."""
    one = u.ring.one
    g = gbar = h = big_g = big_gbar = one
    step = 0
    while True:
        step += 1
        t0 = perf_counter_ns()
        res = gen_prem(u, v, measure)
        delta = res.delta
        if not res.r:
            final_h = None
            if v.degree == 0:
                final_h = _next_h(big_gbar, res.g, delta, big_g, h)
            if trace is not None:
                trace.steps.append(TraceStep(
                    step, u.degree, v.degree, delta, res.lam, res.kind,
                    res.g, res.gbar, final_h, _max_size(v, measure),
                    perf_counter_ns() - t0, terminal=True))
            return v, final_h
        deg_u, deg_v = u.degree, v.degree
        u = v
        v = res.r.scale(big_gbar).div_scalar(big_g * g * h**delta)
        g, gbar = res.g, res.gbar
        h = _next_h(big_gbar, g, delta, big_g, h)
        big_g, big_gbar = g**res.lam, gbar**res.lam
        if trace is not None:
            trace.remainders.append(v)
            trace.steps.append(TraceStep(
                step, deg_u, deg_v, delta, res.lam, res.kind, g, gbar, h,
                _max_size(v, measure), perf_counter_ns() - t0))


def _zero_shortcut(f: Poly, g: Poly):
    f._check(g)
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    if not f:
        return normalize_poly(g)
    if not g:
        return normalize_poly(f)
    return None


def _gcd(f: Poly, g: Poly, algorithm: Algorithm, measure: SizeMeasure, trace):
    done = _zero_shortcut(f, g)
    if done is not None:
        return done
    cf, u = content_primitive(f)
    cg, v = content_primitive(g)
    d = ring_gcd(cf, cg)
    if algorithm is Algorithm.CLASSIC:
        if u.degree < v.degree:
            u, v = v, u
        last, _ = _classic_loop(u, v, measure, trace)
        return content_primitive(last)[1].scale(d)
    u, tu = full_reduce(u)
    v, tv = full_reduce(v)
    e = min(tu, tv)
    if u.degree < v.degree:
        u, v = v, u
    last, _ = _generalized_loop(u, v, measure, trace)
    return content_primitive(last)[1].scale(d).shift(e)


def classic_gcd(f: Poly, g: Poly) -> Poly:
    """Gcd by the classical subresultant algorithm, leading coefficient normalized."""
    return _gcd(f, g, Algorithm.CLASSIC, SizeMeasure.BITS, None)


def gen_gcd(f: Poly, g: Poly, measure: SizeMeasure = SizeMeasure.BITS) -> Poly:
    """Gcd by the lead/trail subresultant algorithm.

    Both operands are made primitive and stripped of their powers of ``x``;
    the common power of ``x`` and the gcd of the contents are put back at the
    end.
    """
    return _gcd(f, g, Algorithm.GENERALIZED, measure, None)


def run_traced(f: Poly, g: Poly, algorithm: Algorithm = Algorithm.GENERALIZED,
               measure: SizeMeasure = SizeMeasure.BITS):
    trace = PrsTrace(algorithm, measure)
    return _gcd(f, g, algorithm, measure, trace), trace


def _resultant(f: Poly, g: Poly, loop, measure, trace):
    f._check(g)
    if not f or not g:
        return f.ring.zero
    if f.degree < g.degree:
        f, g = g, f
    cf, u = content_primitive(f)
    cg, v = content_primitive(g)
    _, h = loop(u, v, measure, trace)
    if h is None:
        return f.ring.zero
    return cf**g.degree * cg**f.degree * h


def classic_resultant(f: Poly, g: Poly):
    """Resultant (up to sign) from the classical subresultant PRS."""
    return _resultant(f, g, _classic_loop, SizeMeasure.BITS, None)


def gen_resultant(f: Poly, g: Poly, measure: SizeMeasure = SizeMeasure.BITS, trace=None):
    """Resultant (up to sign) of two full polynomials: the last ``h`` of the lead/trail PRS.

    A constant operand ``c`` gives ``c**deg(other)``.
    """
    if not f.is_full() or not g.is_full():
        raise NotFull("gen_resultant needs full operands; use resultant_any")
    return _resultant(f, g, _generalized_loop, measure, trace)


def resultant_any(f: Poly, g: Poly, measure: SizeMeasure = SizeMeasure.BITS):
    """Resultant (up to sign) of arbitrary nonzero polynomials.

    Powers of ``x`` are peeled off with ``res(x*u, v) = tc(v) * res(u, v)``.
    """
    f._check(g)
    if not f or not g:
        raise ValueError("resultant_any needs nonzero operands")
    f1, a = full_reduce(f)
    g1, b = full_reduce(g)
    if a and b:
        return f.ring.zero
    res = gen_resultant(f1, g1, measure)
    if a:
        res = res * g1.coeffs[0] ** a
    if b:
        res = res * f1.coeffs[0] ** b
    return res
