"""Diagonal form over local artinian rings with principal radical (c).

Every nonzero entry is c^m * unit.  Pick an entry of minimal valuation,
swap it to the pivot, rescale so the pivot is exactly c^m, then clear its
row and column with transvections and recurse on the complement.
"""
from __future__ import annotations

import math

from ..ring_core.base import Element, UnsupportedRing
from .certificate import DiagonalCertificate, ElementaryOp
from .matrix import RingMatrix

INF = math.inf


def local_ring_data(R):
    """(radical generator payload, nilpotency) or UnsupportedRing."""
    if not getattr(R, "is_local", False) or not hasattr(R, "valuation_value"):
        raise UnsupportedRing(f"{R} is not a supported local artinian ring")
    if not R.is_commutative:
        raise UnsupportedRing(f"{R} is not commutative")
    return R.radical_generator_value(), R.nilpotency


def diagonalize_local_artinian(A: RingMatrix) -> DiagonalCertificate:
    R = A.ring
    c, n = local_ring_data(R)
    zero, one = R.zero_value, R.one_value
    M = [list(r) for r in A.data]
    rows, cols = A.rows, A.cols
    p_ops, q_ops = [], []
    val = R.valuation_value
    c_pows = [one]
    for _ in range(n):
        c_pows.append(R.mul(c_pows[-1], c))
    diag = []
    for s in range(min(rows, cols)):
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if M[i][j] != zero:
                    v = val(M[i][j])[0]
                    if best is None or v < best[0]:
                        best = (v, i, j)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            diag.extend([zero] * (min(rows, cols) - s))
            break
        m, i, j = best
        if i != s:
            M[s], M[i] = M[i], M[s]
            p_ops.append(ElementaryOp("swap", s, i))
        if j != s:
            for r in M:
                r[s], r[j] = r[j], r[s]
            q_ops.append(ElementaryOp("swap", s, j))
        _, u = val(M[s][s])
        if u != one:
            u_inv = R.inverse_value(u)
            M[s] = [R.mul(u_inv, x) for x in M[s]]
            p_ops.append(ElementaryOp("scale", s, -1, Element(R, u_inv), Element(R, u)))
        for i in range(s + 1, rows):
            x = M[i][s]
            if x != zero:
                v, ui = val(x)
                f = R.neg(R.mul(c_pows[v - m], ui))
                M[i] = [R.add(a, R.mul(f, b)) for a, b in zip(M[i], M[s])]
                p_ops.append(ElementaryOp("add", i, s, Element(R, f)))
        for j in range(s + 1, cols):
            x = M[s][j]
            if x != zero:
                v, uj = val(x)
                f = R.neg(R.mul(c_pows[v - m], uj))
                for r in M:
                    r[j] = R.add(r[j], R.mul(r[s], f))
                q_ops.append(ElementaryOp("add", j, s, Element(R, f)))
        diag.append(M[s][s])
    return DiagonalCertificate(A, tuple(p_ops), tuple(q_ops),
                               tuple(Element(R, d) for d in diag), 0)


def local_valuations(R, data, cols: int) -> list:
    """Valuations of a diagonal form of ``data`` over R, without a certificate.

    Row operations alone reach an echelon form whose pivots have the same
    valuations as the full diagonal form, since clearing a pivot row never
    touches the rows below it.  Zero pivots are reported as math.inf.
    """
    c, n = local_ring_data(R)
    zero = R.zero_value
    val = R.valuation_value
    M = [list(r) for r in data]
    rows = len(M)
    c_pows = [R.one_value]
    for _ in range(n):
        c_pows.append(R.mul(c_pows[-1], c))
    out = []
    for s in range(min(rows, cols)):
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if M[i][j] != zero:
                    v = val(M[i][j])[0]
                    if best is None or v < best[0]:
                        best = (v, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            out.extend([INF] * (min(rows, cols) - s))
            break
        m, i, j = best
        M[s], M[i] = M[i], M[s]
        if j != s:
            for r in M:
                r[s], r[j] = r[j], r[s]
        u_inv = R.inverse_value(val(M[s][s])[1])
        piv = [R.mul(u_inv, x) for x in M[s]]
        for i in range(s + 1, rows):
            x = M[i][s]
            if x != zero:
                v, ui = val(x)
                f = R.neg(R.mul(c_pows[v - m], ui))
                M[i] = [R.add(a, R.mul(f, b)) for a, b in zip(M[i], piv)]
        out.append(m)
    return out


def diagonal_valuations(cert: DiagonalCertificate):
    """Valuations of the diagonal entries (math.inf for zeros)."""
    R = cert.input.ring
    return [R.valuation_value(d.value)[0] for d in cert.diagonal]

