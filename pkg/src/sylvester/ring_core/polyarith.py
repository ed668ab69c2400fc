"""Dense univariate polynomial arithmetic on payload tuples.

Polynomials are tuples of coefficient payloads, lowest degree first,
with no trailing zeros (the zero polynomial is ``()``).  ``K`` is the
coefficient ring; division routines require ``K`` to be a field.
"""
from __future__ import annotations

from typing import Tuple

Poly = Tuple


def trim(K, f) -> Poly:
    f = list(f)
    z = K.zero_value
    while f and f[-1] == z:
        f.pop()
    return tuple(f)


def deg(f) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def add(K, f, g) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return trim(K, out)


def neg(K, f) -> Poly:
    return tuple(K.neg(c) for c in f)


def sub(K, f, g) -> Poly:
    return add(K, f, neg(K, g))


def scale(K, c, f) -> Poly:
    """c*f with c on the left."""
    if c == K.zero_value:
        return ()
    return trim(K, [K.mul(c, a) for a in f])


def mul(K, f, g) -> Poly:
    if not f or not g:
        return ()
    out = [K.zero_value] * (len(f) + len(g) - 1)
    zero = K.zero_value
    for i, a in enumerate(f):
        if a == zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(K, out)


def shift(K, f, n: int) -> Poly:
    if not f:
        return ()
    return (K.zero_value,) * n + tuple(f)


def monomial(K, c, n: int) -> Poly:
    return trim(K, (K.zero_value,) * n + (c,))


def power(K, f, e: int) -> Poly:
    result = (K.one_value,)
    while e:
        if e & 1:
            result = mul(K, result, f)
        e >>= 1
        if e:
            f = mul(K, f, f)
    return result


def divmod_(K, f, g) -> Tuple[Poly, Poly]:
    """Quotient and remainder of f by g over a field."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return (), tuple(f)
    inv = K.inverse_value(g[-1])
    r = list(f)
    dg = len(g) - 1
    q = [K.zero_value] * (len(f) - dg)
    zero = K.zero_value
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i]
        if c == zero:
            continue
        c = K.mul(c, inv)
        q[i - dg] = c
        for j, b in enumerate(g):
            r[i - dg + j] = K.sub(r[i - dg + j], K.mul(c, b))
    return trim(K, q), trim(K, r[:dg])


def mod(K, f, g) -> Poly:
    return divmod_(K, f, g)[1]


def monic(K, f) -> Poly:
    if not f:
        return ()
    inv = K.inverse_value(f[-1])
    return tuple(K.mul(inv, c) for c in f[:-1]) + (K.one_value,)


def gcd(K, f, g) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while g:
        f, g = g, mod(K, f, g)
    return monic(K, f)


def xgcd(K, f, g):
    """(d, u, v) with u f + v g = d and d monic."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = (K.one_value,), ()
    t0, t1 = (), (K.one_value,)
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return (), (), ()
    inv = K.inverse_value(r0[-1])
    return scale(K, inv, r0), scale(K, inv, s0), scale(K, inv, t0)


def derivative(K, f) -> Poly:
    return trim(K, [K.mul(K.from_int(i), c) for i, c in enumerate(f)][1:])


def evaluate(K, f, x):
    acc = K.zero_value
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def multiplicity(K, f, g) -> Tuple[int, Poly]:
    """Largest m with g^m | f (f nonzero), and the cofactor f / g^m."""
    m = 0
    while True:
        q, r = divmod_(K, f, g)
        if r:
            return m, f
        f, m = q, m + 1


def _needs_parens(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


def format_term(coeff: str, mono: str) -> str:
    """Join a printed coefficient with a printed monomial ('' for 1)."""
    if not mono:
        return coeff
    if coeff == "1":
        return mono
    if coeff == "-1":
        return "-" + mono
    if _needs_parens(coeff):
        coeff = "(" + coeff + ")"
    return coeff + "*" + mono


def join_terms(terms) -> str:
    out = ""
    for t in terms:
        if not out:
            out = t
        elif t.startswith("-"):
            out += t
        else:
            out += "+" + t
    return out or "0"


def monomial_text(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def format_poly(K, f, var: str) -> str:
    terms = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if c == K.zero_value:
            continue
        terms.append(format_term(K.format_value(c), monomial_text(var, e)))
    return join_terms(terms)
