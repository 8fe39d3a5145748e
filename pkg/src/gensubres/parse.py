"""Text form of polynomials.

Grammar (whitespace is ignored)::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coef ['*' xpart] | xpart
    xpart  := VAR ['^' nat]
    coef   := int | '(' ypoly ')' | 'y' ['^' nat]

``VAR`` is ``x`` at the top level and ``y`` inside parentheses, where only
integer coefficients are allowed.  A bare power of ``y`` is accepted as a
coefficient over Z[y], so ``(y+1)*x - y`` parses.
"""

from __future__ import annotations

import re

from .poly import Poly
from .ring import ZY, ZZ, Ring, YPoly, unit_sign

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|([-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            what = repr(tok) if tok else "end of input"
            raise ParseError(f"expected {expected!r}, found {what}", pos)
        self.i += 1
        return tok

    def poly(self, var: str):
        terms = {}
        zero = YPoly() if var == "x" and self.ring is ZY else 0
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        while True:
            coef, power = self.term(var)
            terms[power] = terms.get(power, zero) + (coef if sign > 0 else -coef)
            if self.peek() == "+":
                sign = 1
            elif self.peek() == "-":
                sign = -1
            else:
                return terms
            self.take()

    def term(self, var: str):
        tok = self.peek()
        if tok == var:
            return self._one(var), self.xpart(var)
        coef = self.coef(var)
        if self.peek() == "*":
            self.take()
            if self.peek() != var:
                raise ParseError(f"expected {var!r} after '*'", self.pos())
            return coef, self.xpart(var)
        return coef, 0

    def _one(self, var):
        return YPoly.from_int(1) if var == "x" and self.ring is ZY else 1

    def xpart(self, var: str) -> int:
        self.take(var)
        if self.peek() == "^":
            self.take()
            tok = self.peek()
            if not tok.isdigit():
                raise ParseError("expected exponent", self.pos())
            self.take()
            return int(tok)
        return 1

    def coef(self, var: str):
        tok = self.peek()
        if tok.isdigit():
            self.take()
            n = int(tok)
            return YPoly.from_int(n) if var == "x" and self.ring is ZY else n
        if tok == "(":
            if var != "x":
                raise ParseError("nested parentheses are not allowed", self.pos())
            if self.ring is not ZY:
                raise ParseError("y-polynomial coefficient in ring Z", self.pos())
            self.take()
            terms = self.poly("y")
            self.take(")")
            return _ypoly_from_terms(terms)
        if tok == "y" and var == "x":
            if self.ring is not ZY:
                raise ParseError("y in ring Z", self.pos())
            return YPoly([0] * self.xpart("y") + [1])
        what = repr(tok) if tok else "end of input"
        raise ParseError(f"expected a term, found {what}", self.pos())


def _ypoly_from_terms(terms) -> YPoly:
    out = [0] * (max(terms) + 1)
    for p, c in terms.items():
        out[p] += c
    return YPoly(out)


def parse_poly(text: str, ring: Ring = ZZ) -> Poly:
    parser = _Parser(text, ring)
    terms = parser.poly("x")
    if parser.peek() != "":
        raise ParseError(f"unexpected {parser.peek()!r}", parser.pos())
    coeffs = [ring.zero] * (max(terms) + 1)
    for p, c in terms.items():
        coeffs[p] = coeffs[p] + c
    return Poly(coeffs, ring)


def _format_terms(pairs, var: str, fmt_coef) -> str:
    # pairs: (power, coefficient) with nonzero coefficients, highest power first
    out = []
    for power, c in pairs:
        negative, body = fmt_coef(c)
        xs = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        if not xs:
            text = body or "1"
        elif body:
            text = f"{body}*{xs}"
        else:
            text = xs
        if negative:
            out.append("-" + text)
        else:
            out.append(("+" if out else "") + text)
    return "".join(out) or "0"


def _fmt_int(c: int):
    return c < 0, ("" if abs(c) == 1 else str(abs(c)))


def format_ypoly(c: YPoly) -> str:
    pairs = [(i, x) for i, x in reversed(list(enumerate(c.coeffs))) if x]
    return _format_terms(pairs, "y", _fmt_int)


def _fmt_ycoef(c: YPoly):
    negative = unit_sign(c) < 0
    if negative:
        c = -c
    if c.is_constant():
        n = c.coeffs[0]
        return negative, ("" if n == 1 else str(n))
    return negative, f"({format_ypoly(c)})"


def format_scalar(c) -> str:
    if isinstance(c, YPoly):
        return format_ypoly(c)
    return str(c)


def format_poly(p: Poly) -> str:
    pairs = [(i, c) for i, c in reversed(list(enumerate(p.coeffs))) if c]
    fmt = _fmt_ycoef if p.ring is ZY else _fmt_int
    return _format_terms(pairs, "x", fmt)


def parse_pairs(text: str, ring: Ring = ZZ):
    """Parse ``f ; g`` lines; blank lines and ``#`` comments are skipped."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(";")
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'f ; g'", 0)
        try:
            pairs.append((parse_poly(parts[0], ring), parse_poly(parts[1], ring)))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", exc.pos) from None
    return pairs


def format_pair(f: Poly, g: Poly) -> str:
    return f"{format_poly(f)} ; {format_poly(g)}"
