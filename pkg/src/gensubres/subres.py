"""Determinant side: Sylvester and subresultant matrices, split-column
determinant polynomials and the gcd-degree detector built on them.

Matrix rows hold coefficients with the highest power of ``x`` in column 0;
column ``j`` of a matrix with ``ncols`` columns stands for ``x**(ncols-1-j)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, content_primitive
from .prs import Algorithm, run_traced
from .ring import NotFull, SizeMeasure, exact_div


@dataclass(frozen=True)
class DetMatrix:
    rows: tuple
    ring: object
    k: int | None = None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def columns(self, cols) -> "DetMatrix":
        return DetMatrix(tuple(tuple(r[j] for j in cols) for r in self.rows), self.ring)

    def tolist(self):
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SubresPoly:
    poly: Poly
    flc: object
    ftc: object
    k: int | None
    a: int


def bareiss_det(m: DetMatrix):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError(f"determinant of a non-square {n}x{m.ncols} matrix")
    one, zero = m.ring.one, m.ring.zero
    if n == 0:
        return one
    a = [list(r) for r in m.rows]
    negate = False
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - lead * row_k[j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if negate else det


def _shifted_rows(p: Poly, count: int, ncols: int):
    # row i is x^(count-1-i) * p, leading coefficient in column i
    zero = p.ring.zero
    high_first = p.coeffs[::-1]
    return [
        (zero,) * i + high_first + (zero,) * (ncols - len(high_first) - i)
        for i in range(count)
    ]


def sylvester_matrix(f: Poly, g: Poly) -> DetMatrix:
    f._check(g)
    if not f or not g:
        raise ValueError("Sylvester matrix of a zero polynomial")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        raise ValueError("Sylvester matrix of two constants is empty")
    size = m + n
    rows = _shifted_rows(f, n, size) + _shifted_rows(g, m, size)
    return DetMatrix(tuple(rows), f.ring)


def sylvester_resultant(f: Poly, g: Poly):
    return bareiss_det(sylvester_matrix(f, g))


def build_mk(f: Poly, g: Poly, k: int) -> DetMatrix:
    """Rows ``x^k f, ..., f, x^(k+d) g, ..., g`` with ``d = deg f - deg g``."""
    f._check(g)
    if not f.is_full() or not g.is_full():
        raise NotFull("build_mk needs full operands")
    m, n = f.degree, g.degree
    if not m >= n >= 1:
        raise ValueError("build_mk needs deg f >= deg g >= 1")
    if not 0 <= k < n:
        raise ValueError(f"k={k} outside [0, {n - 1}]")
    ncols = m + k + 1
    rows = _shifted_rows(f, k + 1, ncols) + _shifted_rows(g, k + m - n + 1, ncols)
    return DetMatrix(tuple(rows), f.ring, k)


def build_sk(f: Poly, g: Poly, k: int) -> DetMatrix:
    """Matrix of the classical ``k``-th subresultant: ``n-k`` rows of ``f``, ``m-k`` of ``g``."""
    f._check(g)
    m, n = f.degree, g.degree
    if not f or not g or not m >= n >= 1:
        raise ValueError("build_sk needs deg f >= deg g >= 1")
    if not 0 <= k < n:
        raise ValueError(f"k={k} outside [0, {n - 1}]")
    ncols = m + n - k
    rows = _shifted_rows(f, n - k, ncols) + _shifted_rows(g, m - k, ncols)
    return DetMatrix(tuple(rows), f.ring, k)


def _check_split(m: DetMatrix, a: int) -> int:
    if m.ncols < m.nrows:
        raise ValueError("split determinants need ncols >= nrows")
    if not 0 <= a < m.nrows:
        raise ValueError(f"split a={a} outside [0, {m.nrows - 1}]")
    return m.nrows - 1 - a


def free_column_det(m: DetMatrix, a: int, c: int):
    """Determinant of the ``a`` left columns, column ``c`` and the right fixed block."""
    right = _check_split(m, a)
    cols = list(range(a)) + [c] + list(range(m.ncols - right, m.ncols))
    return bareiss_det(m.columns(cols))


def free_columns(m: DetMatrix, a: int) -> range:
    right = _check_split(m, a)
    return range(a, m.ncols - right)


def det_poly(m: DetMatrix, a: int) -> SubresPoly:
    """Polynomial whose coefficient at each free column is the split determinant there."""
    cols = free_columns(m, a)
    zero = m.ring.zero
    coeffs = [zero] * m.ncols
    values = {}
    for c in cols:
        values[c] = free_column_det(m, a, c)
        coeffs[m.ncols - 1 - c] = values[c]
    return SubresPoly(Poly(coeffs, m.ring), values[cols[0]], values[cols[-1]], m.k, a)


def extreme_coefficients(m: DetMatrix, a: int):
    """``(flc, ftc)`` without building the whole polynomial."""
    cols = free_columns(m, a)
    flc = free_column_det(m, a, cols[0])
    ftc = flc if len(cols) == 1 else free_column_det(m, a, cols[-1])
    return flc, ftc


def classical_split(nrows: int) -> int:
    return nrows - 1


def _ordered_full(f: Poly, g: Poly):
    f._check(g)
    if not f.is_full() or not g.is_full():
        raise NotFull("gcd-degree detection needs full operands")
    return (f, g) if f.degree >= g.degree else (g, f)


def gcd_degree_profile(f: Poly, g: Poly, split=classical_split):
    """``[(k, flc, ftc), ...]`` for the subresultant matrices ``S_0 .. S_{n-1}``."""
    f, g = _ordered_full(f, g)
    out = []
    for k in range(g.degree):
        m = build_sk(f, g, k)
        flc, ftc = extreme_coefficients(m, split(m.nrows))
        out.append((k, flc, ftc))
    return out


def gcd_degree_detect(f: Poly, g: Poly, split=classical_split, strict: bool = False) -> int:
    """Degree of ``gcd(f, g)`` read off the extreme coefficients of the subresultants.

    The first ``k`` whose ``flc`` and ``ftc`` are both nonzero is returned.
    With ``strict`` every earlier index must also have *both* coefficients
    zero; otherwise one vanishing coefficient is enough.  A violation of the
    strict condition returns -1.
    """
    f, g = _ordered_full(f, g)
    if g.degree == 0:
        return 0
    for k, flc, ftc in gcd_degree_profile(f, g, split):
        if flc and ftc:
            return k
        if strict and (flc or ftc):
            return -1
    return g.degree


def match_split(m: DetMatrix, r: Poly):
    """Smallest split ``a`` whose determinant polynomial is proportional to the full ``r``.

    Columns are evaluated lowest power first and the search abandons a split
    at the first coefficient that breaks proportionality.
    """
    if not r.is_full():
        raise NotFull("match_split needs a full target")
    for a in range(m.nrows):
        cols = list(free_columns(m, a))
        if r.degree > len(cols) - 1:
            continue
        base = None
        ok = True
        for j, c in enumerate(reversed(cols)):
            d = free_column_det(m, a, c)
            if base is None:
                if not d:
                    ok = False
                    break
                base = d
            elif d * r.coeffs[0] != r[j] * base:
                ok = False
                break
        if ok:
            return a
    return None


def verify_prs_det_correspondence(f: Poly, g: Poly,
                                  measure: SizeMeasure = SizeMeasure.BITS) -> bool:
    """Check every lead/trail PRS remainder against a split determinant of ``M_k``.

    The remainder produced while dividing by a polynomial of degree ``t`` is
    looked up in ``M_k`` with ``k = deg g - t``, over all splits.
    """
    f, g = _ordered_full(f, g)
    if g.degree < 1:
        raise ValueError("need deg g >= 1")
    _, u0 = content_primitive(f)
    _, v0 = content_primitive(g)
    _, trace = run_traced(u0, v0, Algorithm.GENERALIZED, measure)
    live = [s for s in trace.steps if not s.terminal]
    for step, r in zip(live, trace.remainders):
        k = v0.degree - step.deg_v
        if match_split(build_mk(u0, v0, k), r) is None:
            return False
    return True
