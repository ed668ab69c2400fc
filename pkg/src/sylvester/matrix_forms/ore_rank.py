"""Rank over the division ring of fractions of Q(x)[t;tau], rank only.

Full Euclidean diagonalization over Q(x) swells coefficients quickly.  Here
rows are scaled by units of Q(x) (and powers of t) to have coefficients in
Z[x], reduced with fraction-free left operations

    row_i <- tau^k(lc a) * row_i - lc(b) * t^k * row_p

and divided by their content after every step.  Every operation is an
invertible left operation over the division ring, so the number of nonzero
rows left in echelon form is the rank.
"""
from __future__ import annotations

import math
from typing import List

from sympy.polys.densearith import dup_mul, dup_quo, dup_sub
from sympy.polys.densetools import dup_shift
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd, dup_lcm

from ..ring_core.base import UnsupportedRing
from ..ring_core.fields import RationalFunctions, _integer_coeffs
from ..ring_core.skew import SkewLaurent, SkewPoly
from .matrix import RingMatrix

Dup = list          # Z[x] polynomial, highest degree first (sympy dense form)
Entry = List[Dup]   # index = power of t


def _shift_step(R) -> int:
    tau = R.tau
    if tau.kind == "identity":
        return 0
    if tau.kind == "shift":
        return tau.power
    raise UnsupportedRing(f"{tau} is not an automorphism of Q(x)")


def _polynomial_rows(A: RingMatrix):
    """Rows as lists of t-polynomials with Q(x) payload coefficients."""
    R = A.ring
    K = R.base
    rows = []
    for r in A.data:
        if isinstance(R, SkewPoly):
            rows.append([list(e) for e in r])
            continue
        lows = [e[0] for e in r if e[1]]
        if not lows:
            rows.append([[] for _ in r])
            continue
        j = min(lows)
        # t^-j * c t^i = tau^-j(c) t^(i-j)
        out = []
        for low, cs in r:
            if not cs:
                out.append([])
                continue
            tw = [R.twist(c, -j) for c in cs]
            out.append([K.zero_value] * (low - j) + tw)
        rows.append(out)
    return rows


def _clear_row(row) -> List[Entry]:
    """Multiply a row of Q(x)-coefficient entries by a unit so coefficients lie in Z[x]."""
    items = []
    for e in row:
        for num, den in e:
            if num:
                items.append(_integer_coeffs(num) + _integer_coeffs(den))
    L = [ZZ(1)]
    M = 1
    for nz, ln, dz, ld in items:
        L = dup_lcm(L, [ZZ(c) for c in reversed(dz)], ZZ)
        M = M * ln // math.gcd(M, ln)
    out = []
    for e in row:
        ent = []
        for num, den in e:
            if not num:
                ent.append([])
                continue
            nz, ln, dz, ld = _integer_coeffs(num) + _integer_coeffs(den)
            # c * L * M = nz * ld * (L / dz) * (M / ln)
            q = dup_quo(L, [ZZ(c) for c in reversed(dz)], ZZ)
            f = dup_mul([ZZ(c * ld * (M // ln)) for c in reversed(nz)], q, ZZ)
            ent.append(f)
        out.append(_trim(ent))
    return _primitive(out)


def _trim(e: Entry) -> Entry:
    while e and not e[-1]:
        e.pop()
    return e


def _primitive(row: List[Entry]) -> List[Entry]:
    g = None
    for e in row:
        for c in e:
            if not c:
                continue
            g = c if g is None else dup_gcd(g, c, ZZ)
            if len(g) == 1 and abs(g[0]) == 1:
                return row
    if g is None:
        return row
    if g[0] < 0:
        g = [-c for c in g]
    return [[dup_quo(c, g, ZZ) if c else [] for c in e] for e in row]


def _twist(c: Dup, n: int, step: int) -> Dup:
    if not c or n == 0 or step == 0:
        return c
    return dup_shift(c, ZZ(step * n), ZZ)


def _combine(row_i, row_p, alpha, beta, k, step) -> List[Entry]:
    """alpha * row_i - beta * t^k * row_p (alpha, beta scalars in Z[x])."""
    out = []
    for ei, ep in zip(row_i, row_p):
        n = max(len(ei), len(ep) + k if ep else 0)
        ent: Entry = []
        for d in range(n):
            a = dup_mul(alpha, ei[d], ZZ) if d < len(ei) and ei[d] else []
            pd = d - k
            if ep and 0 <= pd < len(ep) and ep[pd]:
                b = dup_mul(beta, _twist(ep[pd], k, step), ZZ)
                a = dup_sub(a, b, ZZ) if a else [-c for c in b]
            ent.append(a)
        out.append(_trim(ent))
    return _primitive(out)


def _size(e: Entry) -> int:
    return sum(len(c) + sum(int(x).bit_length() for x in c) for c in e)


def ore_rank_rational(A: RingMatrix) -> int:
    """Rank of A over the skew field of fractions, for Q(x)[t;tau] and Q(x)[t^;tau]."""
    R = A.ring
    if not isinstance(R, (SkewLaurent, SkewPoly)) or not isinstance(R.base, RationalFunctions):
        raise UnsupportedRing(f"{R} is not a skew polynomial ring over Q(x)")
    step = _shift_step(R)
    rows = [_clear_row(r) for r in _polynomial_rows(A)]
    n, m = A.rows, A.cols
    rank = 0
    for col in range(m):
        while rank < n:
            live = [i for i in range(rank, n) if rows[i][col]]
            if not live:
                break
            p = min(live, key=lambda i: (len(rows[i][col]), _size(rows[i][col])))
            if len(live) == 1:
                rows[rank], rows[p] = rows[p], rows[rank]
                rank += 1
                break
            a = rows[p][col]
            for i in live:
                if i == p:
                    continue
                while rows[i][col] and len(rows[i][col]) >= len(a):
                    b = rows[i][col]
                    k = len(b) - len(a)
                    alpha = _twist(a[-1], k, step)
                    rows[i] = _combine(rows[i], rows[p], alpha, b[-1], k, step)
        if rank == n:
            break
    return rank
