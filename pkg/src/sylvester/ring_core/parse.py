"""Text grammars for ring specs and element expressions.

Ring specs::

    GF(4)   GF(9,a^2+1)   Q   Z   Q(x)   Z/(8)   GF(2)[t]/(t^3)
    GF(4)[t;frob]   GF(4)[t^;frob^1]   Q(x)[t^;shift]   GF(2)[t^]
    Mat(2, GF(3))   Mat(2, GF(2))[t]   GF(2)[t]/(t^2) x Z/(9)

Element expressions use ``+ - * / ^``, parentheses, integer literals and
the ring's variable names.  Multiplication may be implicit (``2x``).
Negative powers are allowed for units (``t^-1``).  Product elements are
written as pairs ``(1, t)`` and matrix-ring elements as ``[[1,0],[0,a]]``.
"""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .base import Element, NotAUnit, ParseError, Ring, UnsupportedRing
from .composite import MatrixRing, Product
from .fields import (Integers, IntegerQuotient, PrimeField, RationalFunctions,
                     Rationals, finite_field)
from .polyrings import PolyQuotient, PolyRing
from .skew import IDENTITY, Automorphism, SkewLaurent, SkewPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex) if m.lastindex else pos
        if num is not None:
            out.append(("num", num, start))
        elif name is not None:
            out.append(("name", name, start))
        elif op is not None:
            if op.strip():
                if op not in "+-*/^()[],":
                    raise ParseError(f"unexpected character {op!r}", text, start)
                out.append(("op", op, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def split_top(text: str, sep: str) -> List[str]:
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            parts.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts


def _lookup(R: Ring, name: str) -> Optional[Element]:
    gens = R.generators()
    if name in gens:
        return Element(R, gens[name])
    base = getattr(R, "base", None)
    if isinstance(base, Ring):
        inner = _lookup(base, name)
        if inner is not None:
            return R.coerce(inner)
    return None


def _literal_ring(R: Ring, kind: type) -> Optional[Ring]:
    while R is not None:
        if isinstance(R, kind):
            return R
        R = getattr(R, "base", None)
        if not isinstance(R, Ring):
            return None
    return None


class _ElementParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}",
                             self.text, tok[2])
        self.i += 1
        return tok

    def error(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def parse(self, R: Ring) -> Element:
        e = self.expr(R)
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self, R):
        tok = self.peek()
        if tok[1] in "+-" and tok[0] == "op":
            self.take()
            first = self.term(R)
            acc = -first if tok[1] == "-" else first
        else:
            acc = self.term(R)
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term(R)
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _starts_primary(self):
        kind, val, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and val in "([")

    def term(self, R):
        acc = self.unary(R)
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary(R)
                if val == "*":
                    acc = acc * rhs
                else:
                    try:
                        acc = acc * rhs.inverse()
                    except NotAUnit as exc:
                        raise NotAUnit(f"division by non-unit {rhs} in {R}") from exc
            elif self._starts_primary():
                acc = acc * self.unary(R)
            else:
                return acc

    def unary(self, R):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary(R)
        return self.power(R)

    def exponent(self) -> int:
        sign = 1
        paren = False
        if self.peek()[1] == "(":
            self.take()
            paren = True
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, val, pos = self.take()
        if kind != "num":
            raise ParseError("exponent must be an integer", self.text, pos)
        if paren:
            self.take(")")
        return sign * int(val)

    def power(self, R):
        base = self.primary(R)
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            e = self.exponent()
            try:
                return base ** e
            except NotAUnit as exc:
                raise NotAUnit(f"negative power of non-unit {base}") from exc
        return base

    def primary(self, R):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return R(int(val))
        if kind == "name":
            self.take()
            e = _lookup(R, val)
            if e is None:
                raise ParseError(f"unknown name {val!r} in {R}", self.text, pos)
            return e
        if kind == "op" and val == "(":
            P = _literal_ring(R, Product)
            if P is not None:
                save = self.i
                self.take()
                try:
                    left = self.expr(P.left)
                    if self.peek()[1] == ",":
                        self.take()
                        right = self.expr(P.right)
                        self.take(")")
                        pair = Element(P, (left.value, right.value))
                        return pair if P is R else R.coerce(pair)
                except ParseError:
                    pass
                self.i = save
            self.take("(")
            e = self.expr(R)
            self.take(")")
            return e
        if kind == "op" and val == "[":
            M = _literal_ring(R, MatrixRing)
            if M is None:
                self.error(f"matrix literal outside a matrix ring ({R})")
            rows = []
            self.take("[")
            while True:
                self.take("[")
                row = [self.expr(M.base)]
                while self.peek()[1] == ",":
                    self.take()
                    row.append(self.expr(M.base))
                self.take("]")
                rows.append(tuple(x.value for x in row))
                if self.peek()[1] == ",":
                    self.take()
                    continue
                break
            self.take("]")
            if len(rows) != M.n or any(len(r) != M.n for r in rows):
                raise ParseError(f"matrix literal must be {M.n}x{M.n}", self.text, pos)
            e = Element(M, tuple(rows))
            return e if M is R else R.coerce(e)
        self.error(f"unexpected {val or 'end of input'!r}")


def parse_element(R: Ring, text: str) -> Element:
    text = text.strip()
    if not text:
        raise ParseError("empty element expression", text, 0)
    return _ElementParser(text).parse(R)


# -- ring specs -------------------------------------------------------------

def _match_paren(text: str, start: int) -> int:
    """Index of the bracket closing the one at ``start``."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] in "([":
            depth += 1
        elif text[i] in ")]":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError("unbalanced brackets", text, start)


def _parse_auto(text: str, full: str, pos: int) -> Automorphism:
    t = text.strip()
    m = re.fullmatch(r"(frob|shift)(?:\^(\d+))?|id", t)
    if not m:
        raise ParseError(f"unknown automorphism {t!r}", full, pos)
    if t == "id":
        return IDENTITY
    kind = "frobenius" if m.group(1) == "frob" else "shift"
    return Automorphism(kind, int(m.group(2) or 1))


def parse_ring(text: str) -> Ring:
    full = text
    text = text.strip()
    if not text:
        raise ParseError("empty ring spec", full, 0)
    parts = split_top(text, " x ")
    if len(parts) > 1:
        rings = [parse_ring(p) for p in parts]
        acc = rings[0]
        for r in rings[1:]:
            acc = Product(acc, r)
        return acc
    return _RingParser(text).parse()


class _RingParser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def err(self, msg):
        raise ParseError(msg, self.text, self.i)

    def rest(self):
        return self.text[self.i:]

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def parse(self) -> Ring:
        R = self.atom()
        while True:
            self.skip_ws()
            if self.i >= len(self.text):
                return R
            R = self.suffix(R)

    def atom(self) -> Ring:
        self.skip_ws()
        rest = self.rest()
        m = re.match(r"GF\(\s*(\d+)\s*(?:,([^)]*))?\)", rest)
        if m:
            self.i += m.end()
            q = int(m.group(1))
            try:
                if m.group(2) is None:
                    return finite_field(q)
                from .fields import prime_power
                pp = prime_power(q)
                if pp is None:
                    raise ValueError(f"{q} is not a prime power")
                Fp = PrimeField(pp[0])
                var_m = re.search(r"[A-Za-z_]\w*", m.group(2))
                var = var_m.group(0) if var_m else "a"
                from .polyrings import PolyRing as _PR
                f = parse_element(_PR(Fp, var), m.group(2)).value
                if len(f) - 1 != pp[1]:
                    raise ValueError(f"modulus degree must be {pp[1]}")
                return finite_field(q, tuple(f), var) if pp[1] > 1 else Fp
            except ValueError as exc:
                raise ParseError(str(exc), self.text, self.i) from None
        m = re.match(r"Q\(\s*([A-Za-z_]\w*)\s*\)", rest)
        if m:
            self.i += m.end()
            return RationalFunctions(m.group(1))
        m = re.match(r"Mat\(\s*(\d+)\s*,", rest)
        if m:
            open_at = self.i + rest.index("(")
            close = _match_paren(self.text, open_at)
            n = int(m.group(1))
            inner = self.text[self.i + m.end():close]
            self.i = close + 1
            if n < 1:
                raise ParseError("matrix size must be positive", self.text, self.i)
            return MatrixRing(parse_ring(inner), n)
        if rest.startswith("("):
            close = _match_paren(self.text, self.i)
            inner = self.text[self.i + 1:close]
            self.i = close + 1
            return parse_ring(inner)
        if rest.startswith("Q") and not rest[1:2].isalnum():
            self.i += 1
            return Rationals()
        if rest.startswith("Z") and not rest[1:2].isalnum():
            self.i += 1
            return Integers()
        self.err("expected a ring")

    def suffix(self, R: Ring) -> Ring:
        rest = self.rest()
        if rest.startswith("["):
            close = _match_paren(self.text, self.i)
            body = self.text[self.i + 1:close]
            pos = self.i
            self.i = close + 1
            head, _, auto = body.partition(";")
            head = head.strip()
            laurent = head.endswith("^")
            var = head[:-1].strip() if laurent else head
            if not re.fullmatch(r"[A-Za-z_]\w*", var):
                raise ParseError(f"bad variable name {var!r}", self.text, pos)
            try:
                if not auto:
                    if laurent:
                        return SkewLaurent(R, IDENTITY, var)
                    return PolyRing(R, var)
                tau = _parse_auto(auto, self.text, pos)
                return (SkewLaurent if laurent else SkewPoly)(R, tau, var)
            except UnsupportedRing as exc:
                raise ParseError(str(exc), self.text, pos) from None
        if rest.startswith("/"):
            pos = self.i
            self.i += 1
            self.skip_ws()
            if self.rest().startswith("("):
                close = _match_paren(self.text, self.i)
                body = self.text[self.i + 1:close]
                self.i = close + 1
            else:
                m = re.match(r"\d+", self.rest())
                if not m:
                    self.err("expected '(' after '/'")
                body = m.group(0)
                self.i += m.end()
            return quotient_ring(R, body, self.text, pos)
        self.err(f"unexpected {rest[:10]!r}")


def quotient_ring(R: Ring, body: str, full: str = "", pos: int = 0) -> Ring:
    if isinstance(R, Integers):
        try:
            n = abs(parse_element(R, body).value)
        except ParseError:
            raise
        if n < 1:
            raise ParseError("Z/(0) is not supported", full, pos)
        return IntegerQuotient(n)
    if isinstance(R, PolyRing):
        if not R.base.is_field:
            raise ParseError(f"quotients of {R} need a field base", full, pos)
        f = parse_element(R, body).value
        if len(f) < 2:
            raise ParseError("quotient by a constant", full, pos)
        return PolyQuotient(R.base, f, R.var)
    if isinstance(R, (SkewLaurent, SkewPoly)):
        from ..ideal_structure.quotients import skew_quotient_from_element
        try:
            return skew_quotient_from_element(parse_element(R, body))
        except (UnsupportedRing, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), full, pos) from None
    raise ParseError(f"quotients of {R} are not supported", full, pos)
