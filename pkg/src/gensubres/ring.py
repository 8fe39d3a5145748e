"""Exact coefficient rings: Python integers and dense polynomials in ``y``.

Integers are represented by plain ``int``.  Elements of Z[y] are
:class:`YPoly` instances.  The two never mix: arithmetic between an ``int``
and a ``YPoly`` raises ``TypeError``; use :meth:`Ring.coerce` to lift an
integer into Z[y].
"""

from __future__ import annotations

import enum
from math import gcd


class NotDivisible(ArithmeticError):
    """An exact division had a nonzero remainder."""


class NotFull(ValueError):
    """A polynomial with zero trailing coefficient was given where a full one is required."""


class SizeMeasure(enum.Enum):
    BITS = "bits"
    DEGREE = "degree"
    TERMS = "terms"


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class YPoly:
    """Dense polynomial in ``y`` with integer coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def from_int(cls, n: int) -> "YPoly":
        return cls((n,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, YPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("YPoly", self.coeffs))

    def __repr__(self):
        return f"YPoly({list(self.coeffs)})"

    def __neg__(self):
        return YPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly(out)

    def __sub__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return YPoly()
        if len(a) == 1:
            return YPoly(a[0] * c for c in b)
        if len(b) == 1:
            return YPoly(c * b[0] for c in a)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return YPoly(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = YPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


class Ring:
    name = "?"

    def coerce(self, n: int):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    def coerce(self, n):
        if isinstance(n, YPoly):
            raise TypeError("cannot coerce a Z[y] element into ZZ")
        return int(n)

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)


class YPolyRing(Ring):
    name = "ZZ[y]"

    def coerce(self, n):
        if isinstance(n, YPoly):
            return n
        return YPoly.from_int(n)

    def contains(self, a):
        return isinstance(a, YPoly)


ZZ = IntegerRing()
ZY = YPolyRing()


def ring_of(a) -> Ring:
    if isinstance(a, YPoly):
        return ZY
    if isinstance(a, int):
        return ZZ
    raise TypeError(f"not a ring element: {a!r}")


def _check_same(a, b):
    if type(a) is not type(b) and not (isinstance(a, int) and isinstance(b, int)):
        raise TypeError(f"mixed-ring operands: {a!r}, {b!r}")


def _ydivmod(a: YPoly, b: YPoly):
    # long division over Z; fails as soon as a quotient coefficient is not integral
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    if len(rem) - 1 < db:
        return None, a
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            return None, None
        quo[i] = q
        for j, bc in enumerate(b.coeffs):
            rem[i + j] -= q * bc
    return YPoly(quo), YPoly(rem)


def exact_div(a, b):
    """Return ``q`` with ``q * b == a``, or raise :class:`NotDivisible`."""
    _check_same(a, b)
    if not b:
        raise ZeroDivisionError("exact_div by zero")
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        return q
    if not a:
        return YPoly()
    if b.is_constant():
        c = b.coeffs[0]
        out = []
        for x in a.coeffs:
            q, r = divmod(x, c)
            if r:
                raise NotDivisible(f"{a!r} is not divisible by {b!r}")
            out.append(q)
        return YPoly(out)
    q, r = _ydivmod(a, b)
    if q is None or r:
        raise NotDivisible(f"{a!r} is not divisible by {b!r}")
    return q


def divides(b, a) -> bool:
    try:
        exact_div(a, b)
    except NotDivisible:
        return False
    return True


def unit_sign(a) -> int:
    """+1 or -1 such that ``unit_sign(a) * a`` is normalized."""
    if isinstance(a, YPoly):
        return -1 if a.leading < 0 else 1
    return -1 if a < 0 else 1


def normalize(a):
    return -a if unit_sign(a) < 0 else a


def ring_gcd(a, b):
    """Normalized gcd.  Z[y] goes through the classical subresultant gcd over Z."""
    _check_same(a, b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if isinstance(a, int):
        return gcd(a, b)
    if not a:
        return normalize(b)
    if not b:
        return normalize(a)
    ca, cb = gcd(*a.coeffs), gcd(*b.coeffs)
    c = gcd(ca, cb)
    if a.is_constant() or b.is_constant():
        return YPoly.from_int(c)
    from .poly import Poly
    from .prs import classic_gcd

    pa = Poly([x // ca for x in a.coeffs], ZZ)
    pb = Poly([x // cb for x in b.coeffs], ZZ)
    g = classic_gcd(pa, pb)
    return normalize(YPoly(c * x for x in g.coeffs))


def gcd_many(elements):
    """Fold :func:`ring_gcd` over nonzero ``elements``, stopping early at a unit."""
    acc = None
    for x in elements:
        if not x:
            continue
        acc = normalize(x) if acc is None else ring_gcd(acc, x)
        if acc == 1 or (isinstance(acc, YPoly) and acc.coeffs == (1,)):
            break
    if acc is None:
        raise ValueError("gcd of no nonzero elements")
    return acc


def relative_size(a, m: SizeMeasure = SizeMeasure.BITS) -> int:
    """Integer measure of how big a nonzero coefficient is."""
    if not a:
        raise ValueError("relative_size of zero")
    if isinstance(a, YPoly):
        if m is SizeMeasure.DEGREE:
            return a.degree
        if m is SizeMeasure.TERMS:
            return sum(1 for c in a.coeffs if c)
        return max(abs(c).bit_length() for c in a.coeffs) + a.degree
    if m is SizeMeasure.BITS:
        return abs(a).bit_length()
    if m is SizeMeasure.DEGREE:
        return 0
    return 1

