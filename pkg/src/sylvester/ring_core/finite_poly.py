"""Irreducibility testing and factorization of polynomials over finite fields.

``K`` is any finite field ring (PrimeField or GaloisField) exposing
``order`` and ``characteristic()``.  All routines are deterministic: the
equal-degree splitting step draws its random polynomials from a seeded
generator.
"""
from __future__ import annotations

import random
from typing import Dict, List, Tuple

from . import polyarith as pa


def _prime_factors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def powmod(K, base, e: int, f):
    result = (K.one_value,)
    base = pa.mod(K, base, f)
    while e:
        if e & 1:
            result = pa.mod(K, pa.mul(K, result, base), f)
        e >>= 1
        if e:
            base = pa.mod(K, pa.mul(K, base, base), f)
    return result


def _x(K):
    return (K.zero_value, K.one_value)


def is_irreducible(K, f) -> bool:
    """Rabin's test."""
    n = pa.deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = K.order
    f = pa.monic(K, f)
    x = _x(K)
    if pa.sub(K, powmod(K, x, q ** n, f), x):
        return False
    for r in _prime_factors(n):
        h = pa.sub(K, powmod(K, x, q ** (n // r), f), x)
        if pa.deg(pa.gcd(K, h, f)) > 0:
            return False
    return True


def smallest_irreducible(K, d: int):
    """The monic irreducible of degree d with the smallest coefficient encoding."""
    q = K.order
    elems = K.all_values()
    for code in range(q ** d):
        coeffs, c = [], code
        for _ in range(d):
            coeffs.append(elems[c % q])
            c //= q
        f = tuple(coeffs) + (K.one_value,)
        if is_irreducible(K, f):
            return f
    raise ValueError(f"no irreducible of degree {d}")  # unreachable


def _pth_root(K, f):
    """g with g^p = f, for f with only exponents divisible by p."""
    p = K.characteristic()
    coeffs = [K.pth_root_value(f[i]) for i in range(0, len(f), p)]
    return pa.trim(K, coeffs)


def squarefree_decomposition(K, f) -> List[Tuple[Tuple, int]]:
    """Monic f as a product of squarefree parts: [(g_i, i)]."""
    p = K.characteristic()
    f = pa.monic(K, f)
    out: Dict[int, Tuple] = {}

    def rec(f, mult):
        if pa.deg(f) < 1:
            return
        df = pa.derivative(K, f)
        if not df:
            rec(_pth_root(K, f), mult * p)
            return
        c = pa.gcd(K, f, df)
        w = pa.divmod_(K, f, c)[0]
        i = 1
        while pa.deg(w) > 0:
            y = pa.gcd(K, w, c)
            z = pa.divmod_(K, w, y)[0]
            if pa.deg(z) > 0:
                key = i * mult
                out[key] = pa.mul(K, out.get(key, (K.one_value,)), z)
            i += 1
            w = y
            c = pa.divmod_(K, c, y)[0]
        if pa.deg(c) > 0:
            rec(_pth_root(K, c), mult * p)

    rec(f, 1)
    return sorted(((g, i) for i, g in out.items()), key=lambda gi: gi[1])


def distinct_degree(K, f) -> List[Tuple[Tuple, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    q = K.order
    x = _x(K)
    out = []
    h = x
    d = 0
    while pa.deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(K, h, q, f)
        g = pa.gcd(K, pa.sub(K, h, x), f)
        if pa.deg(g) > 0:
            out.append((g, d))
            f = pa.divmod_(K, f, g)[0]
            h = pa.mod(K, h, f)
    if pa.deg(f) > 0:
        out.append((f, pa.deg(f)))
    return out


def equal_degree(K, f, d: int, rng: random.Random) -> List[Tuple]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = pa.deg(f)
    if n == d:
        return [pa.monic(K, f)]
    q = K.order
    p = K.characteristic()
    elems = K.all_values()
    while True:
        a = pa.trim(K, [rng.choice(elems) for _ in range(n)])
        if pa.deg(a) < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(kd-1)) with q = 2^k
            k = q.bit_length() - 1
            t, b = a, a
            for _ in range(k * d - 1):
                b = pa.mod(K, pa.mul(K, b, b), f)
                t = pa.add(K, t, b)
            g = pa.gcd(K, t, f)
        else:
            b = powmod(K, a, (q ** d - 1) // 2, f)
            g = pa.gcd(K, pa.sub(K, b, (K.one_value,)), f)
        if 0 < pa.deg(g) < n:
            return equal_degree(K, g, d, rng) + equal_degree(K, pa.divmod_(K, f, g)[0], d, rng)


def factor(K, f) -> Tuple[object, List[Tuple[Tuple, int]]]:
    """(leading coefficient, [(monic irreducible, multiplicity)]) sorted."""
    if not f:
        raise ValueError("cannot factor zero")
    lead = f[-1]
    rng = random.Random(0)
    found: Dict[Tuple, int] = {}
    for g, mult in squarefree_decomposition(K, f):
        for h, d in distinct_degree(K, g):
            for irr in equal_degree(K, h, d, rng):
                found[irr] = found.get(irr, 0) + mult
    return lead, sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
