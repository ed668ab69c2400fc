"""Maximal ideal descriptors, factorization of generators, quotients and CRT."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from ..ring_core import polyarith as pa
from ..ring_core.base import AlgebraError, Element, Ring, UnsupportedRing
from ..ring_core.factoring import factor_poly, is_irreducible_poly
from ..ring_core.fields import Integers, IntegerQuotient, is_prime
from ..ring_core.homs import QuotientMap
from ..ring_core.parse import parse_element
from ..ring_core.polyrings import PolyQuotient, PolyRing
from ..ring_core.skew import SkewLaurent, SkewPoly, center
from .quotients import skew_quotient


class NotCentral(AlgebraError, ValueError):
    """Element does not lie in the center of a skew ring."""


class InvalidGenerator(AlgebraError, ValueError):
    """Generator is zero, a unit, or otherwise not a proper ideal generator."""


# -- descriptors ----------------------------------------------------------
@dataclass(frozen=True)
class PrimeInt:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidGenerator(f"{self.p} is not prime")

    @property
    def ring(self) -> Ring:
        return Integers()

    @property
    def degree(self) -> int:
        return 1

    def element_in(self, ring: Ring) -> Element:
        return Element(ring, ring.from_int(self.p))

    def text(self) -> str:
        return f"prime:{self.p}"


@dataclass(frozen=True)
class IrreduciblePoly:
    """Monic irreducible f in K[x]."""

    f: Element

    def __post_init__(self):
        R = self.f.ring
        if not isinstance(R, PolyRing) or not R.base.is_field:
            raise InvalidGenerator(f"irr: needs K[x], got {R}")
        if self.f.value[-1:] != (R.base.one_value,):
            raise InvalidGenerator(f"{self.f} is not monic")
        if not is_irreducible_poly(R.base, self.f.value):
            raise InvalidGenerator(f"{self.f} is not irreducible")

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @property
    def degree(self) -> int:
        return len(self.f.value) - 1

    def element_in(self, ring: Ring) -> Element:
        return self.f if ring == self.f.ring else ring.coerce(self.f)

    def text(self) -> str:
        return f"irr:{self.f}"


@dataclass(frozen=True)
class CentralSkewGenerator:
    """Canonical central p with nonzero constant term, irreducible in the center."""

    p: Element

    def __post_init__(self):
        R = self.p.ring
        if central_generator_check(self.p, R) != self.p:
            raise InvalidGenerator(f"{self.p} is not in canonical form")
        fac = factor_generator(self.p, R)
        if len(fac.factors) != 1 or fac.factors[0][1] != 1:
            raise InvalidGenerator(f"{self.p} is not irreducible in the center")

    @property
    def ring(self) -> Ring:
        return self.p.ring

    @property
    def degree(self) -> int:
        """Degree in t."""
        R = self.p.ring
        return R.degree(self.p.value)

    def poly_value(self):
        R = self.p.ring
        return R.to_poly(self.p.value) if isinstance(R, SkewLaurent) else self.p.value

    def element_in(self, ring: Ring) -> Element:
        return self.p if ring == self.p.ring else ring.coerce(self.p)

    def text(self) -> str:
        return f"central:{self.p}"


Descriptor = Union[PrimeInt, IrreduciblePoly, CentralSkewGenerator]


def parse_descriptor(text: str, ring: Ring) -> Descriptor:
    """Parse ``prime:p``, ``irr:f`` or ``central:p`` relative to ``ring``."""
    kind, _, body = text.strip().partition(":")
    kind = kind.strip()
    if kind == "prime":
        try:
            return PrimeInt(int(body))
        except ValueError as exc:
            raise InvalidGenerator(f"bad prime {body!r}") from exc
    if kind == "irr":
        if not isinstance(ring, PolyRing):
            raise InvalidGenerator(f"irr: descriptors need K[x], got {ring}")
        f = parse_element(ring, body)
        if not f.value:
            raise InvalidGenerator("zero polynomial")
        return IrreduciblePoly(Element(ring, pa.monic(ring.base, f.value)))
    if kind == "central":
        if not isinstance(ring, (SkewLaurent, SkewPoly)):
            raise InvalidGenerator(f"central: descriptors need a skew ring, got {ring}")
        return CentralSkewGenerator(central_generator_check(parse_element(ring, body), ring))
    raise InvalidGenerator(f"unknown descriptor kind {kind!r}")


# -- central generators ---------------------------------------------------
def _strip_t(R, value):
    """(j, polynomial payload) with value = poly * t^j and poly(0) != 0."""
    if isinstance(R, SkewLaurent):
        low, coeffs = value
        return low, coeffs
    return 0, value


def central_generator_check(p: Element, R: Optional[Ring] = None) -> Element:
    """Canonical associate of a central element: t-powers stripped, monic."""
    R = R or p.ring
    if not isinstance(R, (SkewLaurent, SkewPoly)):
        raise UnsupportedRing(f"central generators live in skew rings, got {R}")
    if p.ring != R:
        raise UnsupportedRing(f"{p} is not in {R}")
    if p.is_zero():
        raise InvalidGenerator("zero generates the zero ideal")
    K = R.base
    _, f = _strip_t(R, p.value)
    if f[0] == K.zero_value:
        raise InvalidGenerator(f"{p} has zero constant term")
    m = R.inner_order
    if m is None:
        if len(f) > 1:
            raise NotCentral(f"{p} is not central: {R} has center the constant field")
        raise InvalidGenerator(f"{p} is a unit")
    for i, c in enumerate(f):
        if c == K.zero_value:
            continue
        if i % m:
            raise NotCentral(f"{p} is not central: exponent {i} not divisible by {m}")
        if R.twist(c, 1) != c:
            raise NotCentral(f"{p} is not central: coefficient {K.format_value(c)} is not tau-fixed")
    if len(f) == 1:
        raise InvalidGenerator(f"{p} is a unit")
    g = pa.monic(K, f)
    return Element(R, R.normalize(0, g) if isinstance(R, SkewLaurent) else g)


def is_central(x: Element) -> bool:
    """Commutes with t and with every coefficient field generator."""
    R = x.ring
    gens = [Element(R, v) for v in R.generators().values()]
    gens += [R.coerce(Element(R.base, v)) for v in R.base.generators().values()]
    return all(x * g == g * x for g in gens)


def _to_center_poly(R, f):
    """Coefficients of f = sum c_i s^i (s = t^m) in K^tau."""
    Z = center(R)
    m = Z.period
    fx = Z.fixed
    if fx.field == R.base:
        return Z, tuple(f[::m])
    back = {fx.embed(c): c for c in fx.field.all_values()}
    return Z, tuple(back[c] for c in f[::m])


def _from_center_poly(R, Z, g):
    """Canonical element of R for a polynomial g in the central variable."""
    sval = Z.ring.normalize(0, g) if isinstance(Z.ring, SkewLaurent) else g
    return Z.include(Element(Z.ring, sval))


# -- factorization --------------------------------------------------------
@dataclass(frozen=True)
class IdealFactorization:
    factors: Tuple[Tuple[Descriptor, int], ...]
    unit: Element

    def product(self) -> Element:
        """unit * prod generator^k, reassembled in the ambient ring."""
        acc = self.unit
        for d, k in self.factors:
            acc = acc * d.element_in(self.unit.ring) ** k
        return acc

    @property
    def degree_sum(self) -> int:
        return sum(d.degree * k for d, k in self.factors)

    def text(self) -> str:
        return " * ".join(f"({d.text()})^{k}" for d, k in self.factors) or "1"


def factor_generator(g: Element, ring: Optional[Ring] = None) -> IdealFactorization:
    R = ring or g.ring
    if g.is_zero():
        raise InvalidGenerator("cannot factor zero")
    if isinstance(R, Integers):
        n = g.value
        if abs(n) == 1:
            raise InvalidGenerator(f"{n} is a unit")
        facs = sorted(sympy.factorint(abs(n)).items())
        return IdealFactorization(tuple((PrimeInt(int(p)), int(k)) for p, k in facs),
                                  Element(R, 1 if n > 0 else -1))
    if isinstance(R, PolyRing):
        K = R.base
        if len(g.value) < 2:
            raise InvalidGenerator(f"{g} is a unit")
        lead, facs = factor_poly(K, g.value)
        return IdealFactorization(
            tuple((IrreduciblePoly(Element(R, f)), k) for f, k in facs), Element(R, (lead,)))
    if isinstance(R, (SkewLaurent, SkewPoly)):
        canon = central_generator_check(g, R)
        j, f = _strip_t(R, g.value)
        K = R.base
        lead = f[-1]
        unit = Element(R, R.normalize(j, (lead,)) if isinstance(R, SkewLaurent) else (lead,))
        Z, sp = _to_center_poly(R, canon.value[1] if isinstance(R, SkewLaurent) else canon.value)
        _, facs = factor_poly(Z.ring.base, sp)
        out = []
        for h, k in facs:
            p = _from_center_poly(R, Z, h)
            out.append((_raw_central(p), k))
        return IdealFactorization(tuple(out), unit)
    raise UnsupportedRing(f"factor_generator does not support {R}")


def _raw_central(p: Element) -> CentralSkewGenerator:
    # skip the irreducibility re-check; the factor came from factor_poly
    d = object.__new__(CentralSkewGenerator)
    object.__setattr__(d, "p", p)
    return d


# -- ideals from several generators ---------------------------------------
def _central_multiple(R, f):
    """A nonzero central polynomial (in s, over F_p) that f right-divides."""
    P = R.poly_ring() if isinstance(R, SkewLaurent) else R
    K = R.base
    m = R.inner_order
    from ..matrix_forms.elimination import left_kernel_mod_p
    p = K.characteristic()
    n = len(f) - 1
    s = (K.zero_value,) * m + (K.one_value,)
    rem = P.one_value
    vecs = []
    while True:
        r = P.right_divide_value(rem, f)[1]
        v = []
        for c in list(r) + [K.zero_value] * (n - len(r)):
            v.extend(K.to_prime_vector(c))
        vecs.append(v)
        ker = left_kernel_mod_p(vecs, p)
        if ker:
            return ker[0]
        rem = P.mul(rem, s)


def principal_part(x: Element) -> Element:
    """Central c with RxR = Rc; 1 when x generates R.

    For Z and K[x] this is just the normalized generator |x| or monic(x).
    """
    R = x.ring
    if x.is_zero():
        raise InvalidGenerator("zero generates the zero ideal")
    if isinstance(R, (Integers, PolyRing)):
        return ideal_generator([x])
    if not isinstance(R, (SkewLaurent, SkewPoly)):
        raise UnsupportedRing(f"principal_part does not support {R}")
    if R.inner_order is None:
        return R.one()
    K = R.base
    j, f = _strip_t(R, x.value)
    if isinstance(R, SkewPoly) and f[0] == K.zero_value:
        raise UnsupportedRing("ideals containing t-torsion generators are only handled in Laurent rings")
    P = R.poly_ring() if isinstance(R, SkewLaurent) else R
    if len(f) == 1:
        return R.one()
    coeffs = _central_multiple(R, f)
    Z = center(R)
    # embed F_p coefficients into K^tau, then factor there
    sp = pa.trim(Z.ring.base, [Z.ring.base.from_int(c) for c in coeffs])
    _, facs = factor_poly(Z.ring.base, sp)
    acc = P.one_value
    for h, _ in facs:
        q = _from_center_poly(R, Z, h)
        qv = R.to_poly(q.value) if isinstance(R, SkewLaurent) else q.value
        cur = P.one_value
        while True:
            nxt = P.mul(cur, qv)
            if len(nxt) > len(f) or P.right_divide_value(f, nxt)[1]:
                break
            cur = nxt
        acc = P.mul(acc, cur)
    return Element(R, R.from_poly(acc) if isinstance(R, SkewLaurent) else acc)


def ideal_generator(gens: Sequence[Element]) -> Element:
    """Single generator of the two-sided ideal generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise InvalidGenerator("the zero ideal has no proper generator")
    R = gens[0].ring
    if isinstance(R, Integers):
        from math import gcd
        acc = 0
        for g in gens:
            acc = gcd(acc, g.value)
        return Element(R, acc)
    if isinstance(R, PolyRing):
        acc = ()
        for g in gens:
            acc = pa.gcd(R.base, acc, g.value) if acc else pa.monic(R.base, g.value)
        return Element(R, acc)
    if isinstance(R, (SkewLaurent, SkewPoly)):
        Z = center(R)
        if Z.period is None:
            return R.one()
        acc = None
        for g in gens:
            c = principal_part(g)
            if c == R.one():
                return c
            _, sp = _to_center_poly(R, R.to_poly(c.value) if isinstance(R, SkewLaurent) else c.value)
            acc = sp if acc is None else pa.gcd(Z.ring.base, acc, sp)
        if len(acc) == 1:
            return R.one()
        return _from_center_poly(R, Z, pa.monic(Z.ring.base, acc))
    raise UnsupportedRing(f"ideal_generator does not support {R}")


# -- quotients ------------------------------------------------------------
@dataclass(frozen=True)
class Quotient:
    """R/m^k with its projection, radical generator and nilpotency order."""

    ring: Ring
    projection: QuotientMap
    radical_generator: Element
    nilpotency: int
    descriptor: Descriptor

    @property
    def ambient(self) -> Ring:
        return self.projection.domain


def build_quotient(m: Descriptor, k: int, ambient: Optional[Ring] = None) -> Quotient:
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(m, PrimeInt):
        A = ambient or Integers()
        Q = IntegerQuotient(m.p ** k)
        return Quotient(Q, QuotientMap(A, Q), Element(Q, m.p % Q.n), k, m)
    if isinstance(m, IrreduciblePoly):
        A = m.f.ring
        K = A.base
        Q = PolyQuotient(K, pa.power(K, m.f.value, k), A.var, local_hint=(m.f.value, k))
        return Quotient(Q, QuotientMap(A, Q), Element(Q, Q.reduce(m.f.value)), k, m)
    if isinstance(m, CentralSkewGenerator):
        A = m.p.ring
        Q = skew_quotient(A, m.p, k)
        return Quotient(Q, QuotientMap(A, Q), Element(Q, Q.reduce(m.poly_value())), k, m)
    raise UnsupportedRing(f"unknown descriptor {m!r}")


def crt_split(fac: IdealFactorization, ring: Optional[Ring] = None) -> List[Quotient]:
    """Components R/m_i^k_i of R/I for I = prod m_i^k_i."""
    seen = set()
    for d, _ in fac.factors:
        if d in seen:
            raise InvalidGenerator(f"associate factors {d.text()} in factorization")
        seen.add(d)
    return [build_quotient(d, k, ring) for d, k in fac.factors]
