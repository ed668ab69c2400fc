"""Euclidean diagonalization: skew polynomial rings and Smith form over Z, K[x]."""
from __future__ import annotations

from typing import Callable, List, Optional, Tuple

from ..ring_core import polyarith as pa
from ..ring_core.base import Element, UnsupportedRing
from ..ring_core.fields import Integers
from ..ring_core.polyrings import PolyRing
from ..ring_core.skew import SkewLaurent, SkewPoly
from .certificate import DiagonalCertificate, ElementaryOp
from .matrix import RingMatrix


class _Domain:
    """Payload-level Euclidean structure used by the elimination loop."""

    def __init__(self, ring, degree, rdiv, ldiv):
        self.ring = ring
        self.degree = degree
        self.rdiv = rdiv   # f = q*g + r
        self.ldiv = ldiv   # f = g*q + r


def skew_domain(P: SkewPoly) -> _Domain:
    return _Domain(P, lambda v: len(v) - 1, P.right_divide_value, P.left_divide_value)


def integer_domain(Z: Integers) -> _Domain:
    def div(f, g):
        q, r = divmod(f, g)
        return q, r
    return _Domain(Z, abs, div, div)


def poly_domain(R: PolyRing) -> _Domain:
    div = R.divmod_value
    return _Domain(R, lambda v: len(v) - 1, div, div)


def euclid_diagonalize(dom: _Domain, grid, smith: bool = False):
    """Reduce ``grid`` to diagonal form.

    Returns (diagonal payloads, row ops, col ops) with ops as tuples
    (kind, i, j, coeff) on payloads of ``dom.ring``.
    """
    R = dom.ring
    zero = R.zero_value
    M = [list(r) for r in grid]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    p_ops: List[tuple] = []
    q_ops: List[tuple] = []
    deg = dom.degree

    def swap_rows(a, b):
        if a != b:
            M[a], M[b] = M[b], M[a]
            p_ops.append(("swap", a, b, None))

    def swap_cols(a, b):
        if a != b:
            for r in M:
                r[a], r[b] = r[b], r[a]
            q_ops.append(("swap", a, b, None))

    diag = []
    for s in range(min(rows, cols)):
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if M[i][j] != zero:
                    d = deg(M[i][j])
                    if best is None or d < best[0]:
                        best = (d, i, j)
        if best is None:
            diag.extend([zero] * (min(rows, cols) - s))
            break
        swap_rows(s, best[1])
        swap_cols(s, best[2])
        while True:
            piv = M[s][s]
            for i in range(s + 1, rows):
                x = M[i][s]
                if x != zero:
                    q, _ = dom.rdiv(x, piv)
                    if q != zero:
                        f = R.neg(q)
                        M[i] = [R.add(a, R.mul(f, b)) for a, b in zip(M[i], M[s])]
                        p_ops.append(("add", i, s, f))
            below = [(deg(M[i][s]), i) for i in range(s + 1, rows) if M[i][s] != zero]
            if below:
                swap_rows(s, min(below)[1])
                continue
            for j in range(s + 1, cols):
                x = M[s][j]
                if x != zero:
                    q, _ = dom.ldiv(x, piv)
                    if q != zero:
                        f = R.neg(q)
                        for r in M:
                            r[j] = R.add(r[j], R.mul(r[s], f))
                        q_ops.append(("add", j, s, f))
            right = [(deg(M[s][j]), j) for j in range(s + 1, cols) if M[s][j] != zero]
            if right:
                swap_cols(s, min(right)[1])
                continue
            if smith:
                bad = _find_nondivisible(dom, M, s, rows, cols)
                if bad is not None:
                    M[s] = [R.add(a, b) for a, b in zip(M[s], M[bad])]
                    p_ops.append(("add", s, bad, R.one_value))
                    continue
            break
        diag.append(M[s][s])
    return diag, p_ops, q_ops


def _find_nondivisible(dom, M, s, rows, cols) -> Optional[int]:
    zero = dom.ring.zero_value
    piv = M[s][s]
    for i in range(s + 1, rows):
        for j in range(s + 1, cols):
            if M[i][j] != zero and dom.rdiv(M[i][j], piv)[1] != zero:
                return i
    return None


def _wrap_ops(ops, R, convert: Callable, twist: Callable = None):
    out = []
    for kind, i, j, c in ops:
        if kind == "swap":
            out.append(ElementaryOp("swap", i, j))
        elif kind == "add":
            v = convert(c)
            if twist is not None:
                v = twist(v)
            out.append(ElementaryOp("add", i, j, Element(R, v)))
        else:
            u, u_inv = c
            u, u_inv = convert(u), convert(u_inv)
            if twist is not None:
                u, u_inv = twist(u), twist(u_inv)
            out.append(ElementaryOp("scale", i, -1, Element(R, u), Element(R, u_inv)))
    return tuple(out)


def skew_right_divide(f: Element, g: Element) -> Tuple[Element, Element]:
    """(q, r) with f = q*g + r, deg r < deg g, in D[t; tau]."""
    R = f.ring
    if not isinstance(R, SkewPoly):
        raise UnsupportedRing(f"skew_right_divide needs a skew polynomial ring, got {R}")
    if g.is_zero():
        raise ZeroDivisionError("division by zero")
    q, r = R.right_divide_value(f.value, g.value)
    return Element(R, q), Element(R, r)


def skew_left_divide(f: Element, g: Element) -> Tuple[Element, Element]:
    """(q, r) with f = g*q + r, deg r < deg g."""
    R = f.ring
    if g.is_zero():
        raise ZeroDivisionError("division by zero")
    q, r = R.left_divide_value(f.value, g.value)
    return Element(R, q), Element(R, r)


def laurent_shift(A: RingMatrix) -> int:
    """Smallest k making A * t^k polynomial (0 for the zero matrix)."""
    lows = [v[0] for r in A.data for v in r if v[1]]
    return -min(lows) if lows else 0


def diagonalize_skew(A: RingMatrix) -> DiagonalCertificate:
    R = A.ring
    if isinstance(R, SkewPoly):
        diag, p, q = euclid_diagonalize(skew_domain(R), A.data)
        return DiagonalCertificate(A, _wrap_ops(p, R, lambda v: v), _wrap_ops(q, R, lambda v: v),
                                   tuple(Element(R, d) for d in diag), 0)
    if not isinstance(R, SkewLaurent):
        raise UnsupportedRing(f"diagonalize_skew needs a skew (Laurent) polynomial ring, got {R}")
    k = laurent_shift(A)
    P = R.poly_ring()
    grid = [[R.to_poly(R.normalize(v[0] + k, v[1])) if v[1] else () for v in r] for r in A.data]
    diag, p, q = euclid_diagonalize(skew_domain(P), grid)
    tw = R.twist

    def conj(v):
        # t^k v t^-k: twist every coefficient by tau^k
        low, coeffs = v
        return (low, tuple(tw(c, k) for c in coeffs)) if k else v

    return DiagonalCertificate(A, _wrap_ops(p, R, R.from_poly), _wrap_ops(q, R, R.from_poly, conj),
                               tuple(Element(R, R.from_poly(d)) for d in diag), k)


def smith_form(A: RingMatrix) -> DiagonalCertificate:
    """Diagonal d_1 | d_2 | ... with positive (Z) or monic (K[x]) invariant factors."""
    R = A.ring
    if isinstance(R, Integers):
        dom = integer_domain(R)
    elif isinstance(R, PolyRing) and R.base.is_field:
        dom = poly_domain(R)
    else:
        raise UnsupportedRing(f"smith_form needs Z or K[x], got {R}")
    diag, p, q = euclid_diagonalize(dom, A.data, smith=True)
    for i, d in enumerate(diag):
        if d == R.zero_value:
            continue
        if isinstance(R, Integers):
            if d < 0:
                p.append(("scale", i, -1, (-1, -1)))
                diag[i] = -d
        else:
            lead = d[-1]
            if lead != R.base.one_value:
                inv = R.base.inverse_value(lead)
                p.append(("scale", i, -1, ((inv,), (lead,))))
                diag[i] = pa.scale(R.base, inv, d)
    ident = lambda v: v  # noqa: E731
    return DiagonalCertificate(A, _wrap_ops(p, R, ident), _wrap_ops(q, R, ident),
                               tuple(Element(R, d) for d in diag), 0)


def right_gcd_degree(P: SkewPoly, f, g) -> int:
    """Degree of the greatest common right divisor of f and g."""
    while g:
        f, g = g, P.right_divide_value(f, g)[1]
    return len(f) - 1
