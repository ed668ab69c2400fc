"""Commutative polynomial rings K[x] and their quotients K[x]/(f)."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

from . import polyarith as pa
from .base import Element, NotAUnit, Ring, UnsupportedRing
from .fields import INFINITY


def _coerce_into_base(ring, x: Element):
    """Payload of x viewed in ring.base, or raise."""
    base = ring.base
    if x.ring == base:
        return x.value
    return base.coerce(x).value


@dataclass(frozen=True)
class PolyRing(Ring):
    """base[var].  The base may be any ring; division needs a field."""

    base: Ring
    var: str = "x"

    @property
    def is_commutative(self):
        return self.base.is_commutative

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return pa.trim(self.base, (self.base.one_value,))

    def characteristic(self):
        return self.base.characteristic()

    def add(self, a, b):
        return pa.add(self.base, a, b)

    def neg(self, a):
        return pa.neg(self.base, a)

    def sub(self, a, b):
        return pa.sub(self.base, a, b)

    def mul(self, a, b):
        return pa.mul(self.base, a, b)

    def from_int(self, n):
        return pa.trim(self.base, (self.base.from_int(n),))

    def inverse_value(self, a):
        if len(a) == 1:
            return (self.base.inverse_value(a[0]),)
        raise NotAUnit(f"{self.format_value(a)} is not a unit")

    def degree(self, a) -> int:
        return len(a) - 1

    def divmod_value(self, a, b):
        return pa.divmod_(self.base, a, b)

    def random_value(self, rng, size=3):
        d = rng.randint(0, size)
        return pa.trim(self.base, [self.base.random_value(rng) for _ in range(d + 1)])

    def generators(self):
        return {self.var: pa.trim(self.base, (self.base.zero_value, self.base.one_value))}

    def base_ring(self):
        return self.base

    def coerce(self, x):
        if isinstance(x.ring, PolyRing) and x.ring.var == self.var:
            return self.element(tuple(self.base.coerce(Element(x.ring.base, c)).value
                                      for c in x.value))
        return self.element(pa.trim(self.base, (_coerce_into_base(self, x),)))

    def format_value(self, a):
        return pa.format_poly(self.base, a, self.var)

    def __str__(self):
        return f"{_wrap(self.base)}[{self.var}]"


def _wrap(ring) -> str:
    s = str(ring)
    return f"({s})" if " x " in s or "/" in s else s


@dataclass(frozen=True)
class PolyQuotient(Ring):
    """K[var]/(modulus) with K a field; payloads are reduced remainders."""

    base: Ring
    modulus: Tuple
    var: str = "x"
    local_hint: Optional[Tuple] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not self.base.is_field:
            raise UnsupportedRing("PolyQuotient needs a field base")
        m = pa.monic(self.base, pa.trim(self.base, self.modulus))
        if len(m) < 2:
            raise ValueError("modulus must be nonconstant")
        object.__setattr__(self, "modulus", m)

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return (self.base.one_value,)

    @property
    def dimension(self) -> int:
        return len(self.modulus) - 1

    @property
    def is_field(self):
        return self.local_data_or_none() is not None and self.local_data_or_none()[1] == 1

    def characteristic(self):
        return self.base.characteristic()

    def reduce(self, f):
        if len(f) < len(self.modulus):
            return pa.trim(self.base, f)
        return pa.mod(self.base, f, self.modulus)

    def add(self, a, b):
        return pa.add(self.base, a, b)

    def neg(self, a):
        return pa.neg(self.base, a)

    def sub(self, a, b):
        return pa.sub(self.base, a, b)

    def mul(self, a, b):
        return self.reduce(pa.mul(self.base, a, b))

    def from_int(self, n):
        return pa.trim(self.base, (self.base.from_int(n),))

    def inverse_value(self, a):
        d, u, _ = pa.xgcd(self.base, a, self.modulus)
        if d != (self.base.one_value,):
            raise NotAUnit(f"{self.format_value(a)} is not a unit in {self}")
        return self.reduce(u)

    def random_value(self, rng, size=3):
        n = self.dimension
        return pa.trim(self.base, [self.base.random_value(rng) for _ in range(n)])

    def generators(self):
        return {self.var: self.reduce((self.base.zero_value, self.base.one_value))}

    def coerce(self, x):
        if isinstance(x.ring, PolyRing) and x.ring.base == self.base:
            return self.element(self.reduce(x.value))
        if isinstance(x.ring, PolyQuotient) and x.ring.base == self.base:
            return self.element(self.reduce(x.value))
        return self.element(pa.trim(self.base, (_coerce_into_base(self, x),)))

    def ambient(self) -> PolyRing:
        return PolyRing(self.base, self.var)

    def to_vector(self, a):
        return list(a) + [self.base.zero_value] * (self.dimension - len(a))

    # -- local structure -----------------------------------------------
    @cached_property
    def _local(self):
        if self.local_hint is not None:
            return self.local_hint
        from .factoring import factor_poly
        _, facs = factor_poly(self.base, self.modulus)
        if len(facs) == 1:
            return facs[0]
        return None

    def local_data_or_none(self):
        return self._local

    @property
    def is_local(self) -> bool:
        return self._local is not None

    def local_data(self):
        """(irreducible g, a) with modulus = g^a."""
        if self._local is None:
            raise UnsupportedRing(f"{self} is not local")
        return self._local

    def radical_generator_value(self):
        return self.reduce(self.local_data()[0])

    @property
    def nilpotency(self) -> int:
        return self.local_data()[1]

    def valuation_value(self, a):
        g, e = self.local_data()
        if not a:
            return INFINITY, None
        m, u = pa.multiplicity(self.base, a, g)
        return m, self.reduce(u)

    def format_value(self, a):
        return pa.format_poly(self.base, a, self.var)

    def __str__(self):
        return f"{_wrap(self.base)}[{self.var}]/({pa.format_poly(self.base, self.modulus, self.var)})"
