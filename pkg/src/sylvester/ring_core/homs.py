"""The closed set of registered ring maps used for pullbacks.

Each map is a frozen dataclass so rank functions built from it stay
hashable and printable.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import polyarith as pa
from .base import Element, Ring, RingMismatch, UnsupportedRing
from .composite import MatrixRing, Product
from .fields import Integers, IntegerQuotient
from .polyrings import PolyQuotient, PolyRing
from .skew import Center, SkewLaurent, SkewPoly


class RingHom:
    domain: Ring
    codomain: Ring

    def map_value(self, v):
        raise NotImplementedError

    def __call__(self, x: Element) -> Element:
        if not (x.ring is self.domain or x.ring == self.domain):
            raise RingMismatch(f"{self.name()} expects {self.domain}, got {x.ring}")
        return Element(self.codomain, self.map_value(x.value))

    def map_matrix(self, A):
        from ..matrix_forms.matrix import RingMatrix
        if not (A.ring is self.domain or A.ring == self.domain):
            raise RingMismatch(f"{self.name()} expects {self.domain}, got {A.ring}")
        f = self.map_value
        return RingMatrix(self.codomain, A.rows, A.cols, tuple(tuple(f(v) for v in r) for r in A.data))

    def name(self) -> str:
        return type(self).__name__

    def text(self) -> str:
        return f"{self.name()}({self.domain} -> {self.codomain})"


@dataclass(frozen=True)
class Identity(RingHom):
    domain: Ring

    @property
    def codomain(self):
        return self.domain

    def map_value(self, v):
        return v


@dataclass(frozen=True)
class QuotientMap(RingHom):
    """Canonical projection onto a quotient ring."""

    domain: Ring
    codomain: Ring

    def __post_init__(self):
        ok = (
            (isinstance(self.domain, Integers) and isinstance(self.codomain, IntegerQuotient))
            or (isinstance(self.domain, IntegerQuotient) and isinstance(self.codomain, IntegerQuotient)
                and self.domain.n % self.codomain.n == 0)
            or (isinstance(self.domain, (PolyRing, PolyQuotient)) and isinstance(self.codomain, PolyQuotient)
                and self.domain.base == self.codomain.base)
            or _is_skew_quotient_pair(self.domain, self.codomain)
        )
        if not ok:
            raise UnsupportedRing(f"no projection {self.domain} -> {self.codomain}")
        if isinstance(self.domain, PolyQuotient):
            if pa.mod(self.domain.base, self.domain.modulus, self.codomain.modulus):
                raise UnsupportedRing("target modulus must divide the source modulus")

    def map_value(self, v):
        C = self.codomain
        if isinstance(C, IntegerQuotient):
            return v % C.n
        if isinstance(C, PolyQuotient):
            return C.reduce(v)
        return C.project_value(v, self.domain)


def _is_skew_quotient_pair(D, C) -> bool:
    from ..ideal_structure.quotients import SkewQuotient
    if not isinstance(C, SkewQuotient):
        return False
    if isinstance(D, (SkewLaurent, SkewPoly)):
        return D == C.ambient or D == C.poly
    if isinstance(D, SkewQuotient):
        return D.ambient == C.ambient and not C.poly.right_divide_value(D.modulus, C.modulus)[1]
    return False


@dataclass(frozen=True)
class CenterInclusion(RingHom):
    """Z(R) -> R, s -> t^m."""

    center: Center

    @property
    def domain(self):
        return self.center.ring

    @property
    def codomain(self):
        return self.center.ambient

    def map_value(self, v):
        return self.center.include(Element(self.center.ring, v)).value


@dataclass(frozen=True)
class DiagonalEmbedding(RingHom):
    """R -> Mat_n(R), r -> r*I."""

    domain: Ring
    n: int

    @property
    def codomain(self):
        return MatrixRing(self.domain, self.n)

    def map_value(self, v):
        return MatrixRing(self.domain, self.n).scalar(v)


@dataclass(frozen=True)
class ProductProjection(RingHom):
    domain: Product
    index: int

    @property
    def codomain(self):
        return self.domain.component(self.index)

    def map_value(self, v):
        return v[self.index]


@dataclass(frozen=True)
class ProductInjection(RingHom):
    """Additive (non-unital) map R_i -> R_1 x R_2 filling the other slot with 0."""

    codomain: Product
    index: int

    @property
    def domain(self):
        return self.codomain.component(self.index)

    def map_value(self, v):
        other = self.codomain.component(1 - self.index).zero_value
        return (v, other) if self.index == 0 else (other, v)


@dataclass(frozen=True)
class VariableRename(RingHom):
    """K[x] -> K[t] (same coefficients, new variable name)."""

    domain: PolyRing
    var: str

    @property
    def codomain(self):
        return PolyRing(self.domain.base, self.var)

    def map_value(self, v):
        return v


@dataclass(frozen=True)
class MatrixPolyIso(RingHom):
    """Mat_n(K)[t] -> Mat_n(K[t]), sum M_i t^i -> (sum (M_i)_rc t^i)_rc."""

    domain: PolyRing

    def __post_init__(self):
        if not isinstance(self.domain.base, MatrixRing):
            raise UnsupportedRing("MatrixPolyIso needs Mat_n(K)[t]")

    @property
    def codomain(self):
        M = self.domain.base
        return MatrixRing(PolyRing(M.base, self.domain.var), M.n)

    def map_value(self, v):
        M = self.domain.base
        K = M.base
        n = M.n
        return tuple(tuple(pa.trim(K, [c[r][s] for c in v]) for s in range(n)) for r in range(n))


@dataclass(frozen=True)
class MatrixPolyIsoInverse(RingHom):
    """Mat_n(K[t]) -> Mat_n(K)[t]."""

    domain: MatrixRing

    @property
    def codomain(self):
        P = self.domain.base
        return PolyRing(MatrixRing(P.base, self.domain.n), P.var)

    def map_value(self, v):
        P = self.domain.base
        K = P.base
        n = self.domain.n
        top = max((len(e) for r in v for e in r), default=0)
        out = []
        for i in range(top):
            out.append(tuple(tuple(v[r][s][i] if i < len(v[r][s]) else K.zero_value
                                   for s in range(n)) for r in range(n)))
        return pa.trim(MatrixRing(K, n), out)


@dataclass(frozen=True)
class ScalarPolyEmbedding(RingHom):
    """K[t] -> Mat_n(K)[t], f -> f*I (onto the center)."""

    domain: PolyRing
    n: int

    @property
    def codomain(self):
        return PolyRing(MatrixRing(self.domain.base, self.n), self.domain.var)

    def map_value(self, v):
        M = MatrixRing(self.domain.base, self.n)
        return tuple(M.scalar(c) for c in v)


@dataclass(frozen=True)
class Composite(RingHom):
    """x -> second(first(x))."""

    first: RingHom
    second: RingHom

    def __post_init__(self):
        if self.first.codomain != self.second.domain:
            raise RingMismatch(f"cannot compose {self.first.text()} with {self.second.text()}")

    @property
    def domain(self):
        return self.first.domain

    @property
    def codomain(self):
        return self.second.codomain

    def map_value(self, v):
        return self.second.map_value(self.first.map_value(v))

    def text(self):
        return f"{self.second.text()} o {self.first.text()}"


def compose(*homs: RingHom) -> RingHom:
    """compose(f, g, h) = h o g o f (applied left to right)."""
    acc = homs[0]
    for h in homs[1:]:
        acc = Composite(acc, h)
    return acc


REGISTERED = (Identity, QuotientMap, CenterInclusion, DiagonalEmbedding, ProductProjection,
              ProductInjection, VariableRename, MatrixPolyIso, MatrixPolyIsoInverse,
              ScalarPolyEmbedding, Composite)


def check_registered(h) -> None:
    if not isinstance(h, REGISTERED):
        raise UnsupportedRing(f"{h!r} is not a registered homomorphism shape")
    if isinstance(h, Composite):
        check_registered(h.first)
        check_registered(h.second)
