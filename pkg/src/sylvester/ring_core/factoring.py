"""Univariate factorization dispatch by coefficient field."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from . import finite_poly
from . import polyarith as pa
from .base import UnsupportedRing
from .fields import GaloisField, PrimeField, Rationals


def factor_poly(K, f) -> Tuple[object, List[Tuple[tuple, int]]]:
    """(leading coefficient, sorted [(monic irreducible, multiplicity)])."""
    if not f:
        raise ValueError("cannot factor zero")
    if isinstance(K, (PrimeField, GaloisField)):
        return finite_poly.factor(K, f)
    if isinstance(K, Rationals):
        return _factor_rational(f)
    raise UnsupportedRing(f"no factorization over {K}")


def is_irreducible_poly(K, f) -> bool:
    if pa.deg(f) < 1:
        return False
    if isinstance(K, (PrimeField, GaloisField)):
        return finite_poly.is_irreducible(K, f)
    _, facs = factor_poly(K, f)
    return len(facs) == 1 and facs[0][1] == 1


def _factor_rational(f):
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(f))
    _, facs = sympy.Poly(expr, x, domain="QQ").factor_list()
    K = Rationals()
    out = []
    for poly, mult in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        out.append((pa.monic(K, pa.trim(K, coeffs)), int(mult)))
    out.sort(key=lambda kv: (len(kv[0]), kv[0]))
    return f[-1], out
