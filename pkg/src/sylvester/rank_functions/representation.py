"""Regular / psi representations and the ranks they induce.

For a quotient Q = P(t)/(M) with M monic and central, right multiplication
by q on the coefficient-space basis {1, t, ..., t^(N-1)} is a left linear
map over the coefficient field.  Its matrix has row i equal to the
coordinates of t^i * q.  Applying this entrywise turns a matrix over Q into
a matrix over the field, whose rank measures the length of the image.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Optional

from ..ideal_structure.quotients import SkewQuotient
from ..matrix_forms.elimination import field_rank_values, rank_gf2
from ..matrix_forms.euclid import diagonalize_skew, right_gcd_degree, smith_form
from ..matrix_forms.local import local_valuations
from ..matrix_forms.matrix import RingMatrix
from ..ring_core import polyarith as pa
from ..ring_core.base import UnsupportedRing
from ..ring_core.fields import GaloisField, Integers, IntegerQuotient, PrimeField
from ..ring_core.polyrings import PolyQuotient


def right_mult_rows(K, twist: Optional[Callable], modulus, q) -> List[list]:
    """Rows t^i * q mod modulus, i < deg(modulus), as coefficient lists."""
    N = len(modulus) - 1
    zero = K.zero_value
    row = list(q) + [zero] * (N - len(q))
    rows = [row]
    low = modulus[:N]
    for _ in range(N - 1):
        prev = rows[-1]
        top = prev[N - 1]
        if twist is None:
            new = [zero] + prev[:N - 1]
        else:
            new = [zero] + [twist(c, 1) if c != zero else zero for c in prev[:N - 1]]
        if top != zero:
            c = top if twist is None else twist(top, 1)
            for j, pj in enumerate(low):
                if pj != zero:
                    new[j] = K.sub(new[j], K.mul(c, pj))
        rows.append(new)
    return rows


def layer_data(Q, j: int):
    """(coefficient field, twist or None, modulus of the j-th layer, generator degree)."""
    if isinstance(Q, PolyQuotient):
        g, n = Q.local_data()
        if not 1 <= j <= n:
            raise ValueError(f"k={j} outside 1..{n}")
        return Q.base, None, pa.power(Q.base, g, j), len(g) - 1
    if isinstance(Q, SkewQuotient):
        L = Q.layer(j)
        tw = None if Q.is_commutative else Q.ambient.twist
        return Q.base, tw, L.modulus, Q.generator_degree
    raise UnsupportedRing(f"no regular representation for {Q}")


# entry -> right multiplication block, per (quotient, layer); entries recur
# across the block and product matrices of a single verification trial
_ROW_CACHE: dict = {}
_ROW_CACHE_LIMIT = 1 << 15


def representation_grid(Q, j: int, data):
    """Field matrix of the right-multiplication representation on Q/(c^j)."""
    K, tw, mod, _ = layer_data(Q, j)
    N = len(mod) - 1
    reduce = _reducer(K, mod)
    cache = _ROW_CACHE.get((Q, j))
    if cache is None or len(cache) > _ROW_CACHE_LIMIT:
        cache = _ROW_CACHE[(Q, j)] = {}
    grid = []
    for r in data:
        blocks = []
        for q in r:
            b = cache.get(q)
            if b is None:
                b = right_mult_rows(K, tw, mod, reduce(q))
                cache[q] = b
            blocks.append(b)
        for i in range(N):
            grid.append([c for b in blocks for c in b[i]])
    return K, grid


def _reducer(K, mod):
    N = len(mod) - 1

    def reduce(f):
        if len(f) <= N:
            return f
        r = list(f)
        for n in range(len(r) - 1, N - 1, -1):
            c = r[n]
            if c != K.zero_value:
                for jj, pj in enumerate(mod):
                    if pj != K.zero_value:
                        r[n - N + jj] = K.sub(r[n - N + jj], K.mul(c, pj))
        return pa.trim(K, r[:N])
    return reduce


def _gf2_blocks(K):
    """For GF(2^d): bit rows of multiplication by x, per basis element."""
    d = K.degree
    basis = [K.from_prime_vector([1 if i == j else 0 for j in range(d)]) for i in range(d)]
    table = {}
    for x in K.all_values():
        rows = []
        for e in basis:
            v = K.to_prime_vector(K.mul(e, x))
            bits = 0
            for i, b in enumerate(v):
                if b:
                    bits |= 1 << i
            rows.append(bits)
        table[x] = rows
    return table


_BLOCK_CACHE = {}


def grid_rank(K, grid) -> int:
    """Rank over K of a payload grid; bit-packed fast path over GF(2^d)."""
    if not grid or not grid[0]:
        return 0
    if isinstance(K, GaloisField) and K.p == 2:
        tab = _BLOCK_CACHE.get(K)
        if tab is None:
            tab = _BLOCK_CACHE[K] = _gf2_blocks(K)
        d = K.degree
        packed = []
        for r in grid:
            acc = [0] * d
            shift = 0
            for x in r:
                if x:
                    b = tab[x]
                    for h in range(d):
                        acc[h] |= b[h] << shift
                shift += d
            packed.extend(acc)
        return rank_gf2(packed) // d
    if isinstance(K, PrimeField) and K.p == 2:
        packed = []
        for r in grid:
            v = 0
            for i, x in enumerate(r):
                if x:
                    v |= 1 << i
            packed.append(v)
        return rank_gf2(packed)
    return field_rank_values(K, grid)


def representation_rank(Q, j: int, A: RingMatrix) -> Fraction:
    """rk_j(A) = rank of the representation on Q/(c^j) over (j * deg c)."""
    K, grid = representation_grid(Q, j, A.data)
    _, _, _, ell = layer_data(Q, j)
    return Fraction(grid_rank(K, grid), j * ell)


def lattice_rank(Q: IntegerQuotient, j: int, A: RingMatrix) -> Fraction:
    """rk_j over Z/p^n from the index of the lattice Z^n A + p^j Z^m."""
    p, n = Q.local_data()
    if not 1 <= j <= n:
        raise ValueError(f"k={j} outside 1..{n}")
    m = A.cols
    if m == 0:
        return Fraction(0)
    Z = Integers()
    pj = p ** j
    rows = [list(r) for r in A.data] + [[pj if a == b else 0 for b in range(m)] for a in range(m)]
    cert = smith_form(RingMatrix.from_values(Z, rows, m))
    lost = 0
    for d in cert.diagonal:
        v, x = 0, d.value
        while x % p == 0:
            x //= p
            v += 1
        lost += v
    return Fraction(j * m - lost, j)


def valuation_rank(vals, j: int) -> Fraction:
    """sum over diagonal valuations v < j of (j - v)/j."""
    return sum((Fraction(j - v, j) for v in vals if v < j), Fraction(0))


def diagonal_rank(Q, j: int, A: RingMatrix) -> Fraction:
    """rk_j via a diagonal form: local valuations, or right gcds with p^j."""
    if getattr(Q, "is_local", False):
        return valuation_rank(local_valuations(Q, A.data, A.cols), j)
    if isinstance(Q, SkewQuotient):
        p, n = Q.primary_data()
        if not 1 <= j <= n:
            raise ValueError(f"k={j} outside 1..{n}")
        P = Q.poly
        pj = P.one_value
        for _ in range(j):
            pj = P.mul(pj, p)
        lifted = RingMatrix(P, A.rows, A.cols, A.data)
        cert = diagonalize_skew(lifted)
        ell = Q.generator_degree
        total = Fraction(0)
        for d in cert.diagonal:
            g = right_gcd_degree(P, pj, d.value) if d.value else len(pj) - 1
            total += 1 - Fraction(g, j * ell)
        return total
    raise UnsupportedRing(f"no diagonal route for {Q}")


def psi_matrix(Q: SkewQuotient, q, j: int):
    """psi_j(q) over the coefficient field in the basis {t^i p^s}, (s, i) order.

    Returned as a list of rows of coefficient-field payloads.
    """
    from ..matrix_forms.elimination import inverse_over_field
    K, tw, mod, ell = layer_data(Q, j)
    N = len(mod) - 1
    p, _ = Q.primary_data()
    P = Q.poly
    reduce = _reducer(K, mod)
    # change of basis: row (s, i) = coordinates of t^i p^s
    C = []
    ps = P.one_value
    for _ in range(j):
        for i in range(ell):
            v = reduce(P.mul((K.zero_value,) * i + (K.one_value,), ps))
            C.append(list(v) + [K.zero_value] * (N - len(v)))
        ps = P.mul(ps, p)
    Cm = RingMatrix.from_values(K, C, N)
    Cinv = inverse_over_field(Cm)
    M = RingMatrix.from_values(K, right_mult_rows(K, tw, mod, reduce(q)), N)
    # left coordinates: b_r * q = C_r M, re-expressed through C^-1
    return [list(r) for r in (Cm @ M @ Cinv).data]
