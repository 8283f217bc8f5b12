"""Text syntax for scalars and states.

Scalars: rationals, ``i``, ``sqrt2``, ``sqrt3``, ``z`` (= zeta_24) combined
with ``+ - * /``, integer powers ``^`` and parentheses.

States: ``term (('+'|'-') term)*`` with
``term := [scalar ['*']] ('b'IDX'(-'N')')* ['e[' c1,...,c_rank ']']``.
Indices are 1-based.  A term with no factors and no ``e[...]`` is a multiple
of the vacuum; a missing ``e[...]`` means e^0.

Printing is canonical, so ``format_state(parse_state(s))`` is a fixed point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .fock import FockState, Monomial
from .scalars import I, ONE, SQRT2, SQRT3, ZETA, Scalar

__all__ = ["ParseError", "parse_scalar", "parse_state", "format_scalar", "format_state"]


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.column = col
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt2|sqrt3|i|z)(?![A-Za-z0-9])|(b\d+)|(e\[)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("sym", m.group(2), start))
        elif m.group(3) is not None:
            toks.append(("b", int(m.group(3)[1:]), start))
        elif m.group(4) is not None:
            toks.append(("e[", None, start))
        elif m.group(5) is not None:
            ch = m.group(5)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            toks.append((ch, None, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


_SYMBOLS = {"i": I, "sqrt2": SQRT2, "sqrt3": SQRT3, "z": ZETA}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def next(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            self.fail(f"expected {kind!r}", t)
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    # scalar grammar ----------------------------------------------------
    def starts_atom(self):
        return self.peek()[0] in ("num", "sym", "(")

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self, in_state=False):
        val = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.peek()[0]
            if in_state and op == "*" and self.toks[self.k + 1][0] in ("b", "e["):
                break
            self.next()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    self.fail("division by zero", self.toks[self.k - 1])
                val = val / rhs
        return val

    def unary(self):
        if self.peek()[0] == "-":
            self.next()
            return -self.unary()
        if self.peek()[0] == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            neg = False
            if self.peek()[0] == "-":
                self.next()
                neg = True
            tok = self.expect("num")
            e = tok[1]
            if e > 7:
                self.fail("exponent larger than 7", tok)
            if neg and not base:
                self.fail("zero to a negative power")
            base = base ** (-e if neg else e)
        return base

    def atom(self):
        t = self.next()
        if t[0] == "num":
            return Scalar.from_rational(t[1])
        if t[0] == "sym":
            return _SYMBOLS[t[1]]
        if t[0] == "(":
            v = self.expr()
            self.expect(")")
            return v
        self.fail("expected a number, i, sqrt2, sqrt3, z or '('", t)

    # state grammar -------------------------------------------------------
    def state(self, voa):
        out = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        while True:
            coeff, mono = self.state_term(voa)
            c = coeff * sign
            out[mono] = out[mono] + c if mono in out else c
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] not in ("+", "-"):
                self.fail("expected '+', '-' or end of input", t)
            sign = -1 if self.next()[0] == "-" else 1
        return FockState(voa, out, clean=True)

    def state_term(self, voa):
        coeff = ONE
        if self.peek()[0] not in ("b", "e[") and not self.starts_atom():
            self.fail("expected a term")
        if self.starts_atom():
            coeff = self.term(in_state=True)
            if self.peek()[0] == "*":
                self.next()
                if self.peek()[0] not in ("b", "e["):
                    self.fail("expected b<k>(-n) or e[...] after '*'")
        factors = []
        rank = voa.rank
        while self.peek()[0] == "b":
            t = self.next()
            idx = t[1]
            if not 1 <= idx <= rank:
                self.fail(f"Heisenberg index {idx} out of range 1..{rank}", t)
            self.expect("(")
            self.expect("-")
            n = self.expect("num")
            if n[1] < 1:
                self.fail("Heisenberg level must be >= 1", n)
            self.expect(")")
            factors.append((-n[1], idx - 1))
        point = (0,) * rank
        if self.peek()[0] == "e[":
            t = self.next()
            coords = []
            while True:
                neg = False
                if self.peek()[0] in ("-", "+"):
                    neg = self.next()[0] == "-"
                v = self.expect("num")[1]
                coords.append(-v if neg else v)
                if self.peek()[0] == ",":
                    self.next()
                    continue
                self.expect("]")
                break
            if len(coords) != rank:
                self.fail(f"lattice vector has {len(coords)} coordinates, rank is {rank}", t)
            point = tuple(coords)
        return coeff, Monomial(tuple(sorted(factors)), point)


def parse_scalar(text: str) -> Scalar:
    p = _Parser(text)
    if p.peek()[0] == "end":
        p.fail("empty scalar expression")
    v = p.expr()
    if p.peek()[0] != "end":
        p.fail("unexpected trailing input")
    return v


def parse_state(text: str, voa) -> FockState:
    p = _Parser(text)
    if p.peek()[0] == "end":
        p.fail("empty state expression")
    return p.state(voa)


# -- printing -------------------------------------------------------------

_BASIS_NAMES = ("", "i", "sqrt2", "i*sqrt2", "sqrt3", "i*sqrt3", "sqrt2*sqrt3", "i*sqrt2*sqrt3")


@lru_cache(maxsize=None)
def _basis_change():
    """Matrix taking z-power coordinates to coordinates on 1, i, sqrt2, ..."""
    basis = [ONE, I, SQRT2, I * SQRT2, SQRT3, I * SQRT3, SQRT2 * SQRT3, I * SQRT2 * SQRT3]
    n = 8
    # columns are basis elements; solve M x = v by inverting M
    m = [[basis[c].coeffs[r] for c in range(n)] + [Fraction(int(r == k)) for k in range(n)]
         for r in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def _field_coords(s: Scalar):
    v = s.coeffs
    inv = _basis_change()
    return [sum(inv[r][k] * v[k] for k in range(8)) for r in range(8)]


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _scalar_terms(s: Scalar):
    """(sign, body) pairs with body printed for the absolute value."""
    out = []
    for q, name in zip(_field_coords(s), _BASIS_NAMES):
        if not q:
            continue
        a = abs(q)
        if not name:
            body = _fmt_q(a)
        elif a == 1:
            body = name
        else:
            body = f"{_fmt_q(a)}*{name}"
        out.append((-1 if q < 0 else 1, body))
    return out


def format_scalar(s: Scalar) -> str:
    terms = _scalar_terms(s)
    if not terms:
        return "0"
    parts = []
    for k, (sg, body) in enumerate(terms):
        if k == 0:
            parts.append(("-" if sg < 0 else "") + body)
        else:
            parts.append((" - " if sg < 0 else " + ") + body)
    return "".join(parts)


def _format_monomial(m: Monomial) -> str:
    fs = "".join(f"b{i + 1}(-{-negn})" for negn, i in m.factors)
    return fs + "e[" + ",".join(str(x) for x in m.point) + "]"


def format_state(u: FockState) -> str:
    if u.is_zero():
        return "0"
    pieces = []
    for k, (mono, c) in enumerate(u.sorted_terms()):
        vac = not mono.factors and not any(mono.point)
        body = "" if vac else _format_monomial(mono)
        terms = _scalar_terms(c)
        if len(terms) == 1:
            sg, cb = terms[0]
            if vac:
                text = cb
            elif cb == "1":
                text = body
            else:
                text = f"{cb}*{body}"
        else:
            sg = 1
            inner = format_scalar(c)
            text = f"({inner})" + (f"*{body}" if body else "")
        if k == 0:
            pieces.append(("-" if sg < 0 else "") + text)
        else:
            pieces.append((" - " if sg < 0 else " + ") + text)
    return "".join(pieces)
