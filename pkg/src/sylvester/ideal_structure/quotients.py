"""Quotients R/(P) of skew (Laurent) polynomial rings by a central P.

P has coefficients in K^tau, only exponents divisible by the inner order,
a nonzero constant term and leading coefficient 1.  Elements are stored as
remainders of degree < deg P; since P is central the left and right
remainders coincide.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

from ..ring_core import polyarith as pa
from ..ring_core.base import Element, NotAUnit, Ring, UnsupportedRing
from ..ring_core.fields import INFINITY, GaloisField, PrimeField
from ..ring_core.skew import SkewLaurent, SkewPoly


def _poly_power(P: SkewPoly, f, k: int):
    out = P.one_value
    for _ in range(k):
        out = P.mul(out, f)
    return out


@dataclass(frozen=True)
class SkewQuotient(Ring):
    """ambient / (modulus) with modulus central, monic, nonzero constant term."""

    ambient: Ring
    modulus: Tuple
    local_hint: Optional[Tuple] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.ambient, (SkewLaurent, SkewPoly)):
            raise UnsupportedRing(f"SkewQuotient needs a skew ring, got {self.ambient}")
        K = self.ambient.base
        m = pa.trim(K, self.modulus)
        if len(m) < 2:
            raise ValueError("modulus must be nonconstant")
        if m[0] == K.zero_value:
            raise ValueError("modulus must have a nonzero constant term")
        if m[-1] != K.one_value:
            raise ValueError("modulus must be monic")
        object.__setattr__(self, "modulus", m)

    # -- structure -------------------------------------------------------
    @property
    def base(self):
        return self.ambient.base

    @property
    def var(self):
        return self.ambient.var

    @property
    def tau(self):
        return self.ambient.tau

    @property
    def degree_n(self) -> int:
        return len(self.modulus) - 1

    @cached_property
    def poly(self) -> SkewPoly:
        A = self.ambient
        return A.poly_ring() if isinstance(A, SkewLaurent) else A

    @property
    def is_commutative(self):
        return self.ambient.is_commutative

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return (self.base.one_value,)

    def characteristic(self):
        return self.base.characteristic()

    # -- arithmetic ------------------------------------------------------
    def reduce(self, f):
        """Remainder of a polynomial payload modulo the central modulus."""
        K = self.base
        N = self.degree_n
        if len(f) <= N:
            return pa.trim(K, f)
        r = list(f)
        mod = self.modulus
        zero = K.zero_value
        for n in range(len(r) - 1, N - 1, -1):
            c = r[n]
            if c == zero:
                continue
            off = n - N
            # modulus coefficients are tau-fixed, so c*t^off*P has plain coefficients
            for j in range(N + 1):
                if mod[j] != zero:
                    r[off + j] = K.sub(r[off + j], K.mul(c, mod[j]))
        return pa.trim(K, r[:N])

    def add(self, a, b):
        return pa.add(self.base, a, b)

    def neg(self, a):
        return pa.neg(self.base, a)

    def sub(self, a, b):
        return pa.sub(self.base, a, b)

    def mul(self, a, b):
        return self.reduce(self.poly.mul(a, b))

    def from_int(self, n):
        return pa.trim(self.base, (self.base.from_int(n),))

    @cached_property
    def t_inverse(self):
        """t^-1 = -P_0^-1 (P_1 + P_2 t + ... + t^(N-1))."""
        K = self.base
        c = K.neg(K.inverse_value(self.modulus[0]))
        return pa.trim(K, [K.mul(c, x) for x in self.modulus[1:]])

    def inverse_value(self, a):
        """Left Bezout u*a + v*P = 1 by the right Euclidean algorithm."""
        P = self.poly
        if not a:
            raise NotAUnit("0 is not a unit")
        r0, r1 = self.modulus, a
        u0, u1 = (), P.one_value
        while r1:
            q, r = P.right_divide_value(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, P.sub(u0, P.mul(q, u1))
        if len(r0) != 1:
            raise NotAUnit(f"{self.format_value(a)} is not a unit in {self}")
        inv = (self.base.inverse_value(r0[0]),)
        return self.reduce(P.mul(inv, u0))

    # -- projection from the ambient ring -------------------------------
    @cached_property
    def _t_powers(self) -> dict:
        return {}

    def t_power(self, e: int):
        """t^e in the quotient (e may be negative)."""
        got = self._t_powers.get(e)
        if got is None:
            if e == 0:
                got = self.one_value
            elif e > 0:
                got = self.reduce((self.base.zero_value,) * e + (self.base.one_value,))
            else:
                got = self.mul(self.t_power(e + 1), self.t_inverse)
            self._t_powers[e] = got
        return got

    def project_value(self, v, domain: Ring):
        if isinstance(domain, SkewLaurent):
            low, coeffs = v
            if not coeffs:
                return ()
            if low >= 0:
                return self.reduce((self.base.zero_value,) * low + tuple(coeffs))
            # sum c_i t^(low+i) = (sum c_i t^i) t^low
            return self.mul(self.reduce(coeffs), self.t_power(low))
        return self.reduce(v)

    def coerce(self, x):
        R = x.ring
        if R == self.ambient or (isinstance(R, SkewPoly) and R == self.poly):
            return self.element(self.project_value(x.value, R))
        if isinstance(R, SkewQuotient) and R.ambient == self.ambient:
            if self.poly.right_divide_value(R.modulus, self.modulus)[1]:
                raise UnsupportedRing(f"{self} is not a quotient of {R}")
            return self.element(self.reduce(x.value))
        if R == self.base:
            return self.element(pa.trim(self.base, (x.value,)))
        return self.element(pa.trim(self.base, (self.base.coerce(x).value,)))

    def lift(self, x: Element) -> Element:
        """Representative of degree < deg P in the skew polynomial ring."""
        return Element(self.poly, x.value)

    # -- vector space structure -----------------------------------------
    @cached_property
    def field_degree(self) -> int:
        K = self.base
        if isinstance(K, PrimeField):
            return 1
        if isinstance(K, GaloisField):
            return K.degree
        raise UnsupportedRing(f"{self} is not finite")

    @property
    def dimension(self) -> int:
        """Dimension over the coefficient field."""
        return self.degree_n

    def to_vector(self, a):
        return list(a) + [self.base.zero_value] * (self.degree_n - len(a))

    def to_prime_vector(self, a):
        K = self.base
        out = []
        for c in self.to_vector(a):
            out.extend([c] if isinstance(K, PrimeField) else K.to_prime_vector(c))
        return out

    def all_values(self):
        """Every element (finite coefficient field only)."""
        from itertools import product
        K = self.base
        vals = list(K.all_values())
        for combo in product(vals, repeat=self.degree_n):
            yield pa.trim(K, combo)

    def random_value(self, rng, size=3):
        return pa.trim(self.base, [self.base.random_value(rng) for _ in range(self.degree_n)])

    def generators(self):
        return {self.var: self.reduce((self.base.zero_value, self.base.one_value))}

    # -- primary / local structure --------------------------------------
    @cached_property
    def _primary(self):
        if self.local_hint is not None:
            return self.local_hint
        from .ideals import factor_generator
        A = self.ambient
        mod = A.from_poly(self.modulus) if isinstance(A, SkewLaurent) else self.modulus
        fac = factor_generator(Element(A, mod), A)
        if len(fac.factors) == 1:
            d, k = fac.factors[0]
            return self.ambient_to_poly(d.p), k
        return None

    def ambient_to_poly(self, p: Element):
        if isinstance(p.ring, SkewLaurent):
            return p.ring.to_poly(p.value)
        return p.value

    @property
    def is_primary(self) -> bool:
        return self._primary is not None

    @property
    def is_local(self) -> bool:
        # central simple quotients of noncommutative rings are matrix algebras
        return self.is_primary and self.is_commutative

    def primary_data(self):
        """(irreducible central p as a polynomial payload, k) with modulus = p^k."""
        if self._primary is None:
            raise UnsupportedRing(f"{self} is not primary")
        return self._primary

    def local_data(self):
        if not self.is_local:
            raise UnsupportedRing(f"{self} is not local")
        return self._primary

    def radical_generator_value(self):
        return self.reduce(self.primary_data()[0])

    @property
    def nilpotency(self) -> int:
        return self.primary_data()[1]

    @property
    def generator_degree(self) -> int:
        return len(self.primary_data()[0]) - 1

    def valuation_value(self, a):
        g, _ = self.local_data()
        if not a:
            return INFINITY, None
        m, u = pa.multiplicity(self.base, a, g)
        return m, self.reduce(u)

    def layer(self, j: int) -> "SkewQuotient":
        """R/(p^j) for 1 <= j <= nilpotency."""
        p, k = self.primary_data()
        if not 1 <= j <= k:
            raise ValueError(f"layer {j} outside 1..{k}")
        if j == k:
            return self
        return SkewQuotient(self.ambient, _poly_power(self.poly, p, j), local_hint=(p, j))

    # -- text ------------------------------------------------------------
    def format_value(self, a):
        return pa.format_poly(self.base, a, self.var)

    def __str__(self):
        return f"{self.ambient}/({pa.format_poly(self.base, self.modulus, self.var)})"


def skew_quotient(ambient: Ring, p: Element, k: int = 1) -> SkewQuotient:
    """R/(p^k) for a canonical central generator p."""
    if not isinstance(ambient, (SkewLaurent, SkewPoly)):
        raise UnsupportedRing(f"skew_quotient needs a skew ring, got {ambient}")
    P = ambient.poly_ring() if isinstance(ambient, SkewLaurent) else ambient
    base = ambient.to_poly(p.value) if isinstance(ambient, SkewLaurent) else p.value
    return SkewQuotient(ambient, _poly_power(P, base, k), local_hint=(base, k))


def skew_quotient_from_element(x: Element) -> SkewQuotient:
    """R/(x) for a central x (normalized to its canonical associate)."""
    from .ideals import central_generator_check
    R = x.ring
    g = central_generator_check(x, R)
    payload = R.to_poly(g.value) if isinstance(R, SkewLaurent) else g.value
    return SkewQuotient(R, payload)
