"""Leading, trailing and adaptive ("generalized") pseudo-remainders."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .poly import Poly, full_reduce
from .ring import NotFull, SizeMeasure, relative_size


class DivisionKind(enum.Enum):
    LEAD = "lead"
    TRAIL = "trail"


@dataclass(frozen=True)
class GenPRemResult:
    r: Poly
    delta: int
    lam: int
    g: object
    gbar: object
    kind: DivisionKind

    def __iter__(self):
        return iter((self.r, self.delta, self.lam, self.g, self.gbar, self.kind))


def _check_operands(u: Poly, v: Poly):
    u._check(v)
    if not v:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if not u or u.degree < v.degree:
        raise ValueError("pseudo-division needs deg(u) >= deg(v)")


def prem(u: Poly, v: Poly) -> Poly:
    """Classical pseudo-remainder: ``lc(v)**(delta+1) * u = Q*v + R``, ``deg R < deg v``."""
    _check_operands(u, v)
    n = v.degree
    lv = v.lc
    vc = v.coeffs
    rem = list(u.coeffs)
    for k in range(u.degree - n, -1, -1):
        top = rem[n + k]
        for j in range(n + k - 1, -1, -1):
            if j >= k:
                rem[j] = lv * rem[j] - top * vc[j - k]
            else:
                rem[j] = lv * rem[j]
        rem.pop()
    return Poly(rem, u.ring)


def tprem(u: Poly, v: Poly) -> Poly:
    """Trail pseudo-remainder by bottom-up elimination.

    The result ``W`` satisfies ``v | tc(v)**(delta+1) * u - W`` and vanishes
    in its ``delta + 1`` lowest coefficients.  No power of ``x`` is removed.
    """
    _check_operands(u, v)
    if not u.is_full() or not v.is_full():
        raise NotFull("tprem needs full operands")
    delta = u.degree - v.degree
    tv = v.coeffs[0]
    vc = v.coeffs
    rem = list(u.coeffs)
    for s in range(delta + 1):
        low = rem[s]
        for j in range(len(rem)):
            if s <= j <= s + v.degree:
                rem[j] = tv * rem[j] - low * vc[j - s]
            else:
                rem[j] = tv * rem[j]
    return Poly(rem, u.ring)


def gen_prem(u: Poly, v: Poly, measure: SizeMeasure = SizeMeasure.BITS) -> GenPRemResult:
    """Pseudo-divide from whichever end of ``v`` has the smaller coefficient.

    Ties go to the leading end.  The remainder is returned with its power of
    ``x`` stripped; ``lam`` records how many were removed.
    """
    if not u.is_full() or not v.is_full():
        raise NotFull("gen_prem needs full operands")
    delta = u.degree - v.degree
    lv, tv = v.lc, v.coeffs[0]
    if relative_size(lv, measure) <= relative_size(tv, measure):
        w = prem(u, v)
        if not w:
            return GenPRemResult(w, delta, 0, lv, tv, DivisionKind.LEAD)
        r, lam = full_reduce(w)
        return GenPRemResult(r, delta, lam, lv, tv, DivisionKind.LEAD)
    w = prem(u.reverse(), v.reverse())
    if not w:
        return GenPRemResult(w, delta, 0, tv, lv, DivisionKind.TRAIL)
    r, lam = full_reduce(w)
    return GenPRemResult(r.reverse(), delta, lam, tv, lv, DivisionKind.TRAIL)
