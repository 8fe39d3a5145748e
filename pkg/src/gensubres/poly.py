"""Dense univariate polynomials in ``x`` over ZZ or ZZ[y]."""

from __future__ import annotations

from .ring import (
    ZZ,
    NotDivisible,
    NotFull,
    Ring,
    exact_div,
    gcd_many,
    unit_sign,
)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The zero polynomial has no coefficients and its ``degree`` is ``None``.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs=(), ring: Ring = ZZ):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: tuple, ring: Ring) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.ring = ring
        return p

    @classmethod
    def monomial(cls, c, n: int, ring: Ring = ZZ) -> "Poly":
        return cls([0] * n + [c], ring)

    @classmethod
    def x(cls, ring: Ring = ZZ) -> "Poly":
        return cls([0, 1], ring)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def trail_degree(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    @property
    def tc(self):
        """Lowest nonzero coefficient (zero for the zero polynomial)."""
        t = self.trail_degree
        return self.ring.zero if t is None else self.coeffs[t]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_full(self) -> bool:
        return bool(self.coeffs) and bool(self.coeffs[0])

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        from .parse import format_poly

        return f"Poly({format_poly(self)!r}, {self.ring!r})"

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise TypeError(f"mixed-ring operands: {self.ring} and {other.ring}")

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.ring)

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.ring)

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.ring)
        zero = self.ring.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out, self.ring)

    def __pow__(self, n: int):
        result = Poly([1], self.ring)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "Poly":
        c = self.ring.coerce(c)
        if not c:
            return Poly((), self.ring)
        return Poly._raw(tuple(x * c for x in self.coeffs), self.ring)

    def div_scalar(self, c) -> "Poly":
        """Exact division of every coefficient by ``c``."""
        c = self.ring.coerce(c)
        return Poly._raw(tuple(exact_div(x, c) for x in self.coeffs), self.ring)

    def shift(self, n: int) -> "Poly":
        """Multiply by ``x**n`` (``n < 0`` drops low coefficients, which must be zero)."""
        if not self.coeffs or n == 0:
            return self
        if n > 0:
            return Poly._raw((self.ring.zero,) * n + self.coeffs, self.ring)
        if any(self.coeffs[:-n]):
            raise NotDivisible(f"not divisible by x^{-n}")
        return Poly._raw(self.coeffs[-n:], self.ring)

    def reverse(self) -> "Poly":
        if not self.is_full():
            raise NotFull("reverse() needs a nonzero full polynomial")
        return Poly._raw(self.coeffs[::-1], self.ring)

    def evaluate(self, point):
        point = self.ring.coerce(point)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc


def full_reduce(p: Poly):
    """Split off the largest power of ``x``: returns ``(p / x**t, t)``."""
    if not p:
        raise ValueError("full_reduce of the zero polynomial")
    t = p.trail_degree
    return Poly._raw(p.coeffs[t:], p.ring), t


def content(p: Poly):
    if not p:
        raise ValueError("content of the zero polynomial")
    return gcd_many(p.coeffs)


def content_primitive(p: Poly):
    """``(cont, prim)`` with ``cont`` normalized and ``prim`` having a positive leading unit.

    ``cont * prim`` equals ``p`` up to sign.
    """
    c = content(p)
    prim = p.div_scalar(c)
    if unit_sign(prim.lc) < 0:
        prim = -prim
    return c, prim


def primitive_part(p: Poly) -> Poly:
    return content_primitive(p)[1]


def normalize_poly(p: Poly) -> Poly:
    """Fix the sign so that the leading coefficient is normalized."""
    if p and unit_sign(p.lc) < 0:
        return -p
    return p


def poly_divmod_exact(q: Poly, p: Poly):
    """Quotient of ``q`` by ``p`` over the coefficient ring, or ``None`` if ``p`` does not divide ``q``."""
    p._check(q)
    if not p:
        raise ZeroDivisionError("division by the zero polynomial")
    if not q:
        return Poly((), q.ring)
    if q.degree < p.degree:
        return None
    rem = list(q.coeffs)
    dp, lp = p.degree, p.lc
    quo = [q.ring.zero] * (len(rem) - dp)
    for i in range(len(rem) - 1 - dp, -1, -1):
        c = rem[i + dp]
        if not c:
            continue
        try:
            qc = exact_div(c, lp)
        except NotDivisible:
            return None
        quo[i] = qc
        for j, pc in enumerate(p.coeffs):
            rem[i + j] = rem[i + j] - qc * pc
    if any(rem):
        return None
    return Poly(quo, q.ring)


def poly_divides(p: Poly, q: Poly) -> bool:
    """True iff ``p`` divides ``q`` exactly over the coefficient ring."""
    return poly_divmod_exact(q, p) is not None


def equal_up_to_sign(p: Poly, q: Poly) -> bool:
    return p == q or p == -q


def proportional(p: Poly, q: Poly) -> bool:
    """Both nonzero and ``p * a == q * b`` for some nonzero scalars ``a``, ``b``."""
    if not p or not q or p.ring is not q.ring or p.degree != q.degree:
        return False
    if p.trail_degree != q.trail_degree:
        return False
    lp, lq = p.lc, q.lc
    return all(a * lq == b * lp for a, b in zip(p.coeffs, q.coeffs))

