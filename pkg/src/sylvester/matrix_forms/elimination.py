"""Gaussian elimination over fields, with fast paths over F_p."""
from __future__ import annotations

from typing import List, Sequence

import numpy as np

from ..ring_core.base import NotAUnit, Ring, UnsupportedRing
from ..ring_core.fields import GaloisField, IntegerQuotient, PrimeField
from .matrix import RingMatrix


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank of F_2 row vectors packed as integers."""
    pivots = {}
    r = 0
    for v in rows:
        while v:
            h = v.bit_length() - 1
            pv = pivots.get(h)
            if pv is None:
                pivots[h] = v
                r += 1
                break
            v ^= pv
    return r


def _rank_mod_p_small(rows: List[List[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[c], -1, p)
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f * inv % p
                ri = rows[i]
                for j in range(c, ncols):
                    if pr[j]:
                        ri[j] = (ri[j] - f * pr[j]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_mod_p_numpy(M: np.ndarray, p: int) -> int:
    M = np.array(M, dtype=np.int64) % p
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        below = M[r + 1:, c]
        idx = np.flatnonzero(below)
        if idx.size:
            idx = idx + r + 1
            M[idx] = (M[idx] - np.outer(M[idx, c], M[r])) % p
        r += 1
    return r


def rank_mod_p(rows, p: int) -> int:
    """Rank over F_p of an integer matrix (list of rows or ndarray)."""
    if isinstance(rows, np.ndarray):
        if rows.size == 0:
            return 0
        if p == 2:
            return rank_gf2(pack_gf2(rows))
        return _rank_mod_p_numpy(rows, p)
    if not rows or not rows[0]:
        return 0
    if p == 2:
        return rank_gf2(pack_gf2(rows))
    if len(rows) * len(rows[0]) > 400:
        return _rank_mod_p_numpy(np.array(rows, dtype=np.int64), p)
    return _rank_mod_p_small(rows, p)


def pack_gf2(rows) -> List[int]:
    if isinstance(rows, np.ndarray):
        arr = (rows & 1).astype(np.uint8)
        if arr.shape[1] == 0:
            return []
        packed = np.packbits(arr, axis=1, bitorder="little")
        return [int.from_bytes(r.tobytes(), "little") for r in packed]
    out = []
    for r in rows:
        v = 0
        for j, x in enumerate(r):
            if x & 1:
                v |= 1 << j
        out.append(v)
    return out


def _generic_rank(K: Ring, data) -> int:
    rows = [list(r) for r in data]
    zero = K.zero_value
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = K.inverse_value(pr[c])
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f != zero:
                f = K.mul(f, inv)
                ri = rows[i]
                for j in range(c, ncols):
                    if pr[j] != zero:
                        ri[j] = K.sub(ri[j], K.mul(f, pr[j]))
        rank += 1
        if rank == len(rows):
            break
    return rank


def gf_to_prime_rows(K: GaloisField, data) -> List[List[int]]:
    """Replace each F_q entry by its d x d multiplication block over F_p."""
    d = K.degree
    basis = [K.from_prime_vector([1 if i == j else 0 for j in range(d)]) for i in range(d)]
    cache = {}

    def block(x):
        b = cache.get(x)
        if b is None:
            b = [K.to_prime_vector(K.mul(e, x)) for e in basis]
            cache[x] = b
        return b

    out = []
    for r in data:
        blocks = [block(x) for x in r]
        for i in range(d):
            out.append([v for b in blocks for v in b[i]])
    return out


def field_rank_values(K: Ring, data) -> int:
    """Rank of a payload grid over the field K."""
    if not data or not data[0]:
        return 0
    if isinstance(K, PrimeField):
        return rank_mod_p([list(r) for r in data], K.p)
    if isinstance(K, IntegerQuotient) and K.is_field:
        return rank_mod_p([list(r) for r in data], K.n)
    if isinstance(K, GaloisField) and len(data) * len(data[0]) > 16:
        return rank_mod_p(gf_to_prime_rows(K, data), K.p) // K.degree
    if not K.is_field:
        raise UnsupportedRing(f"{K} is not a field")
    return _generic_rank(K, data)


def rank_over_field(A: RingMatrix) -> int:
    """Row rank of A over a (commutative) field."""
    if not A.ring.is_field:
        raise UnsupportedRing(f"rank_over_field needs a field, got {A.ring}")
    return field_rank_values(A.ring, A.data)


def inverse_over_field(A: RingMatrix) -> RingMatrix:
    """Inverse of a square matrix over a field (NotAUnit when singular)."""
    K = A.ring
    n = A.rows
    if A.cols != n:
        raise NotAUnit("non-square matrix")
    zero, one = K.zero_value, K.one_value
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(A.data)]
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != zero), None)
        if piv is None:
            raise NotAUnit("singular matrix")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = K.inverse_value(rows[c][c])
        rows[c] = [K.mul(inv, x) for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return RingMatrix.from_values(K, [r[n:] for r in rows], n)


def left_kernel_mod_p(rows: List[List[int]], p: int) -> List[List[int]]:
    """Basis of {v : v * M = 0} over F_p."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    aug = [[x % p for x in r] + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    rank = 0
    for c in range(m):
        piv = next((i for i in range(rank, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][c], -1, p)
        aug[rank] = [x * inv % p for x in aug[rank]]
        for i in range(n):
            if i != rank and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[rank])]
        rank += 1
    return [r[m:] for r in aug[rank:]]
