"""Text form of FracPoly and RationalExpr.

Rendering produces sums like ``1 + 2*(uv)^(1/2) - u^2*v``; fractional or
negative exponents are always parenthesised. The parser accepts that
output plus general expressions built from integers, ``u``, ``v``,
``uv``, ``+ - * ^``, parentheses, and a division whose divisor is a
product of ``((uv)^a - 1)`` factors::

    (uv - 1)*(uv)^(1/3) / ((uv)^(1/3) - 1)
"""
import re
from fractions import Fraction

from . import kernels
from .errors import ParseError
from .qalg import FracPoly, RationalExpr

_TOKEN = re.compile(r"\s*(?:(\d+)|(uv|u|v)|(\S))")


def _fmt_exp(e):
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({e})"


def _monomial(p, q):
    if p == q:
        if p == 0:
            return ""
        return "uv" if p == 1 else f"(uv)^{_fmt_exp(p)}"
    parts = []
    for name, e in (("u", p), ("v", q)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{_fmt_exp(e)}")
    return "*".join(parts)


def render_poly(poly):
    out = []
    for (p, q), c in poly.terms():
        mono = _monomial(p, q)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


def _render_factor(a):
    return "(uv - 1)" if a == 1 else f"((uv)^{_fmt_exp(a)} - 1)"


def render_expr(expr):
    num = render_poly(expr.numerator)
    if not expr.factors:
        return num
    den = "*".join(_render_factor(a) for a in expr.factors)
    if len(expr.numerator) > 1:
        num = f"({num})"
    if len(expr.factors) > 1:
        den = f"({den})"
    return f"{num} / {den}"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        for m in _TOKEN.finditer(text):
            if m.start() != pos and text[pos:m.start()].strip():
                raise ParseError("unexpected character", text, pos)
            start = m.start(m.lastindex)
            self.tokens.append((m.group(m.lastindex), start))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError("unexpected character", text, pos)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = f"'{expected}'" if expected else "a token"
            raise ParseError(f"expected {want}, found {tok!r}", self.text, self.pos())
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}", self.text, self.pos())
        return value

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        # bare u/v powers are collected separately so that u^(1/2)*v^(-1/2)
        # is legal even though u^(1/2) alone is not
        value_ref, mono = [RationalExpr(1)], [Fraction(0), Fraction(0)]
        at = self.pos()
        self._factor_into(value_ref, mono)
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                self._factor_into(value_ref, mono)
            elif tok == "/":
                where = self.pos()
                self.take()
                divisor = self.power()
                value_ref[0] = value_ref[0] * self._reciprocal(divisor, where)
            elif tok in ("u", "v", "uv", "("):
                self._factor_into(value_ref, mono)
            else:
                break
        try:
            monomial = FracPoly.monomial(mono[0], mono[1])
        except ValueError as exc:
            raise ParseError(str(exc), self.text, at) from None
        return value_ref[0] * monomial

    def _factor_into(self, value_ref, mono):
        tok = self.peek()
        if tok in ("u", "v"):
            self.take()
            e = Fraction(1)
            if self.peek() == "^":
                self.take()
                e = self.exponent()
            mono[0 if tok == "u" else 1] += e
        else:
            value_ref[0] = value_ref[0] * self.power()

    def power(self):
        at = self.pos()
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        e = self.exponent()
        if e.denominator == 1 and e >= 0:
            return base ** e.numerator
        poly = base.numerator if not base.factors else None
        if poly is None or len(poly) != 1 or next(iter(poly.items()))[1] != 1:
            raise ParseError("fractional/negative powers need a monic monomial", self.text, at)
        (p, q), _ = next(iter(poly.items()))
        try:
            return RationalExpr(FracPoly.monomial(p * e, q * e))
        except ValueError as exc:
            raise ParseError(str(exc), self.text, at) from None

    def exponent(self):
        if self.peek() == "(":
            self.take()
            neg = self.peek() == "-" and self.take() == "-"
            num = int(self.take_int())
            den = 1
            if self.peek() == "/":
                self.take()
                den = int(self.take_int())
                if den == 0:
                    raise ParseError("zero denominator", self.text, self.pos())
            self.take(")")
            e = Fraction(num, den)
            return -e if neg else e
        neg = self.peek() == "-" and self.take() == "-"
        e = Fraction(int(self.take_int()))
        return -e if neg else e

    def take_int(self):
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ParseError(f"expected an integer, found {tok!r}", self.text, self.pos())
        return self.take()

    def atom(self):
        at = self.pos()
        tok = self.take()
        if tok.isdigit():
            return RationalExpr(int(tok))
        if tok == "u":
            return RationalExpr(FracPoly.monomial(1, 0))
        if tok == "v":
            return RationalExpr(FracPoly.monomial(0, 1))
        if tok == "uv":
            return RationalExpr(FracPoly.uv(1))
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected {tok!r}", self.text, at)

    def _reciprocal(self, divisor, at):
        split = _binomial_factors(divisor)
        if split is None:
            raise ParseError("divisor must be a product of ((uv)^a - 1) factors", self.text, at)
        sign, exps = split
        return RationalExpr(sign, exps)


def _binomial_factors(value):
    """Split a polynomial ``+-prod((uv)^a - 1)`` into ``(sign, [a, ...])``."""
    if value.factors:
        return None
    poly = value.numerator
    if not poly or not poly.is_diagonal():
        return None
    exps = []
    while True:
        terms = poly.terms()
        if len(terms) == 1 and terms[0][0] == (0, 0) and abs(terms[0][1]) == 1:
            # (uv)^a - 1 = -(1 - (uv)^a): overall sign comes out here
            return terms[0][1], exps
        positive = [(p, c) for (p, _), c in terms if p > 0]
        if not positive or terms[0][0][0] != 0:
            return None
        a = min(p for p, _ in positive)
        N = poly.exponent_lcm()
        dense = poly.to_dense(N)
        if set(dense) != {0}:
            return None
        lo, coeffs = dense[0]
        q = kernels.divide_binomial(coeffs, (a * N).numerator)
        if q is None:
            return None
        poly = FracPoly.from_dense(N, {0: (lo, q)})
        exps.append(a)


def parse_expr(text):
    return _Parser(text).parse()


def parse_poly(text):
    value = parse_expr(text)
    if value.factors:
        raise ParseError("expected a polynomial, found a rational expression", text, 0)
    return value.numerator
