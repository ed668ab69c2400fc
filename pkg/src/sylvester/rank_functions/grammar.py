"""Text forms of rank functions.

    field | art(k) | ded0 | ded(<ideal>,k=K) | lau0 | lau(<ideal>,k=K)
    convex(c1*<rank>, c2*<rank>, ...) | morita(n=N, <rank>)
    product(lam, <rank on left>, <rank on right>) | proj1(<rank>) | proj2(<rank>)
    extend(<rank on K[t]>)

Each form is read relative to the ring it lives on; ``text()`` of every
parsed rank prints back to an equivalent string.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..ideal_structure.ideals import parse_descriptor
from ..ring_core.base import AlgebraError, ParseError, Ring
from ..ring_core.composite import MatrixRing, Product
from ..ring_core.parse import split_top
from ..ring_core.homs import ProductProjection
from ..ring_core.polyrings import PolyRing
from .operations import ProductCombine, extend_center_rank
from .ranks import (ArtinianExtreme, Convex, DedekindExtreme, DedekindGeneric, FieldRank,
                    LaurentExtreme, LaurentGeneric, MatrixScaled, Pullback, RankFunction)

_CALL = re.compile(r"^\s*([a-z][a-z0-9]*)\s*\((.*)\)\s*$", re.S)
_KEQ = re.compile(r"^\s*k\s*=\s*(\d+)\s*$")
_NEQ = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")


def _fraction(s: str, full: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s.strip()!r}", full, max(full.find(s.strip()), 0))


def parse_rank(text: str, ring: Ring, _full: str = None) -> RankFunction:
    full = text if _full is None else _full
    pos = max(full.find(text.strip()), 0)
    s = text.strip()
    try:
        return _parse(s, ring, full, pos)
    except ParseError:
        raise
    except (AlgebraError, ValueError, TypeError) as exc:
        raise ParseError(f"invalid rank {s!r}: {exc}", full, pos) from exc


def _parse(s: str, ring: Ring, full: str, pos: int) -> RankFunction:
    if s == "field":
        return FieldRank(ring)
    if s == "ded0":
        return DedekindGeneric(ring)
    if s == "lau0":
        return LaurentGeneric(ring)
    m = _CALL.match(s)
    if not m:
        raise ParseError(f"unknown rank form {s!r}", full, pos)
    name, body = m.group(1), m.group(2)
    args = split_top(body, ",")
    if name == "art":
        if len(args) != 1 or not args[0].strip().isdigit():
            raise ParseError("art(k) takes one integer", full, pos)
        return ArtinianExtreme(ring, int(args[0]))
    if name in ("ded", "lau"):
        if len(args) != 2:
            raise ParseError(f"{name}(<ideal>,k=K) takes two arguments", full, pos)
        km = _KEQ.match(args[1])
        if not km:
            raise ParseError("expected k=<integer>", full, pos + s.find(args[1]))
        d = parse_descriptor(args[0], ring)
        cls = DedekindExtreme if name == "ded" else LaurentExtreme
        return cls(ring, d, int(km.group(1)))
    if name == "convex":
        terms = []
        for a in args:
            coef, star, inner = a.partition("*")
            if not star:
                raise ParseError("convex terms look like c*<rank>", full, pos + s.find(a))
            terms.append((_fraction(coef, full), parse_rank(inner, ring, full)))
        return Convex(tuple(terms))
    if name == "morita":
        if len(args) != 2:
            raise ParseError("morita(n=N, <rank>) takes two arguments", full, pos)
        nm = _NEQ.match(args[0])
        if not nm:
            raise ParseError("expected n=<integer>", full, pos)
        n = int(nm.group(1))
        if not isinstance(ring, MatrixRing) or ring.n != n:
            raise ParseError(f"morita(n={n}, ...) needs Mat({n}, R), got {ring}", full, pos)
        return MatrixScaled(parse_rank(args[1], ring.base, full), n)
    if name == "product":
        if len(args) != 3 or not isinstance(ring, Product):
            raise ParseError("product(lam, <rank>, <rank>) needs a product ring", full, pos)
        lam = _fraction(args[0], full)
        return ProductCombine(parse_rank(args[1], ring.left, full),
                              parse_rank(args[2], ring.right, full), lam)
    if name in ("proj1", "proj2"):
        if len(args) != 1 or not isinstance(ring, Product):
            raise ParseError(f"{name}(<rank>) needs a product ring", full, pos)
        i = int(name[-1]) - 1
        return Pullback(parse_rank(args[0], ring.component(i), full), ProductProjection(ring, i))
    if name == "extend":
        if len(args) != 1 or not (isinstance(ring, PolyRing) and isinstance(ring.base, MatrixRing)):
            raise ParseError("extend(<rank>) needs Mat(n, GF(q))[t]", full, pos)
        M = ring.base
        inner = parse_rank(args[0], PolyRing(M.base, ring.var), full)
        return extend_center_rank(inner, M.n, ring.var)
    raise ParseError(f"unknown rank form {name!r}", full, pos)


def rank_text(rk: RankFunction) -> str:
    """Canonical text (the same as ``rk.text()``)."""
    return rk.text()
