"""Exact arithmetic for the supported rings."""
from __future__ import annotations

from typing import Optional, Tuple

from .base import (AlgebraError, Element, NotAUnit, ParseError, Ring, RingMismatch,
                   UnsupportedRing)
from .composite import MatrixRing, Product
from .fields import (INFINITY, GaloisField, Integers, IntegerQuotient, PrimeField,
                     RationalFunctions, Rationals, finite_field, is_prime, prime_power)
from .parse import parse_element, parse_ring
from .polyrings import PolyQuotient, PolyRing
from .skew import IDENTITY, Automorphism, Center, SkewLaurent, SkewPoly, center, fixed_field

__all__ = [
    "AlgebraError", "Automorphism", "Center", "Element", "GaloisField", "IDENTITY", "INFINITY",
    "IntegerQuotient", "Integers", "MatrixRing", "NotAUnit", "ParseError", "PolyQuotient",
    "PolyRing", "PrimeField", "Product", "RationalFunctions", "Rationals", "Ring",
    "RingMismatch", "SkewLaurent", "SkewPoly", "UnsupportedRing", "arith", "center",
    "finite_field", "fixed_field", "inner_order", "is_prime", "parse_element", "parse_ring",
    "prime_power", "try_invert", "valuation",
]


def arith(op: str, x: Element, y: Optional[Element] = None) -> Element:
    """Apply ``op`` in {add, sub, mul, neg} to elements of one ring."""
    if op == "neg":
        return -x
    if y is None:
        raise TypeError(f"{op} needs two operands")
    if not (x.ring is y.ring or x.ring == y.ring):
        raise RingMismatch(f"{x.ring} vs {y.ring}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def try_invert(x: Element) -> Element:
    """Two-sided inverse; raises NotAUnit."""
    y = x.inverse()
    one = x.ring.one()
    if x * y != one or y * x != one:
        raise NotAUnit(f"{x} has no two-sided inverse")
    return y


def valuation(x: Element) -> Tuple[float, Optional[Element]]:
    """(m, u) with x = c^m u for the radical generator c; (inf, None) for zero."""
    ring = x.ring
    if not hasattr(ring, "valuation_value"):
        raise UnsupportedRing(f"{ring} has no valuation")
    m, u = ring.valuation_value(x.value)
    return m, (None if u is None else Element(ring, u))


def inner_order(R_or_tau, base: Optional[Ring] = None) -> Optional[int]:
    """Order of tau; ``None`` means infinite.

    Accepts a skew ring, or an automorphism together with its base field.
    """
    if isinstance(R_or_tau, Automorphism):
        if base is None:
            raise TypeError("an automorphism needs its base field")
        return R_or_tau.order(base)
    return R_or_tau.tau.order(R_or_tau.base)
