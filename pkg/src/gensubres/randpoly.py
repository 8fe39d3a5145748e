"""Seeded random polynomials for property tests and bench fixtures."""

from __future__ import annotations

import random

from .poly import Poly, content_primitive
from .ring import ZY, ZZ, YPoly


def _nonzero_int(rng: random.Random, bits: int) -> int:
    bound = (1 << bits) - 1 if bits > 0 else 1
    while True:
        c = rng.randint(-bound, bound)
        if c:
            return c


def random_int(rng: random.Random, bits: int, nonzero: bool = False) -> int:
    if nonzero:
        return _nonzero_int(rng, bits)
    bound = (1 << bits) - 1 if bits > 0 else 1
    return rng.randint(-bound, bound)


def random_ypoly(rng: random.Random, ydeg: int, bits: int, nonzero: bool = False,
                 exact_degree: bool = False) -> YPoly:
    while True:
        cs = [random_int(rng, bits) for _ in range(ydeg + 1)]
        if exact_degree:
            cs[-1] = _nonzero_int(rng, bits)
        p = YPoly(cs)
        if p or not nonzero:
            return p


def random_poly(rng: random.Random, degree: int, ring=ZZ, bits: int = 8,
                ydeg: int = 2, full: bool = True) -> Poly:
    """Polynomial of exact x-degree ``degree``; ``full`` forces a nonzero constant term."""

    def coef(nonzero=False):
        if ring is ZY:
            return random_ypoly(rng, rng.randint(0, ydeg), bits, nonzero)
        return random_int(rng, bits, nonzero)

    cs = [coef() for _ in range(degree + 1)]
    cs[-1] = coef(nonzero=True)
    if full:
        cs[0] = coef(nonzero=True)
    return Poly(cs, ring)


def random_primitive_full(rng: random.Random, degree: int, ring=ZZ, bits: int = 8,
                          ydeg: int = 2) -> Poly:
    return content_primitive(random_poly(rng, degree, ring, bits, ydeg))[1]


def random_pair(rng: random.Random, max_degree: int, ring=ZZ, bits: int = 8,
                ydeg: int = 2, full: bool = True):
    f = random_poly(rng, rng.randint(1, max_degree), ring, bits, ydeg, full)
    g = random_poly(rng, rng.randint(1, max_degree), ring, bits, ydeg, full)
    return f, g


def growth_fixture(rng: random.Random, cases: int = 30, degree: int = 6,
                   bits: int = 4, low_ydeg: int = 1, high_ydeg: int = 4):
    """Dense Z[y] pairs whose trailing coefficients have smaller y-degree than their leading ones."""
    pairs = []
    for _ in range(cases):
        pair = []
        for deg in (degree, degree - 1):
            cs = [random_ypoly(rng, high_ydeg, bits, nonzero=True) for _ in range(deg + 1)]
            cs[0] = random_ypoly(rng, low_ydeg, bits, nonzero=True, exact_degree=True)
            cs[-1] = random_ypoly(rng, high_ydeg, bits, nonzero=True, exact_degree=True)
            pair.append(Poly(cs, ZY))
        pairs.append(tuple(pair))
    return pairs
