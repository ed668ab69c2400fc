"""Automorphisms and skew (Laurent) polynomial rings D[t; tau], D[t, t^-1; tau].

Multiplication follows the twist rule t*d = tau(d)*t.  Coefficients are
written on the left of powers of t.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import polyarith as pa
from .base import Element, NotAUnit, Ring, UnsupportedRing
from .fields import GaloisField, PrimeField, RationalFunctions, Rationals, finite_field


@dataclass(frozen=True)
class Automorphism:
    """tau = identity, Frobenius x -> x^(p^power), or shift x -> x + power."""

    kind: str = "identity"
    power: int = 1

    def __post_init__(self):
        if self.kind not in ("identity", "frobenius", "shift"):
            raise ValueError(f"unknown automorphism kind {self.kind!r}")
        if self.kind == "identity":
            object.__setattr__(self, "power", 0)
        elif self.kind == "shift" and self.power == 0:
            raise ValueError("shift by 0 is the identity; use kind='identity'")

    def check_base(self, K: Ring) -> None:
        if self.kind == "frobenius" and not isinstance(K, (PrimeField, GaloisField)):
            raise UnsupportedRing(f"Frobenius needs a finite field, got {K}")
        if self.kind == "shift" and not isinstance(K, RationalFunctions):
            raise UnsupportedRing(f"shift needs Q(x), got {K}")
        if not isinstance(K, (PrimeField, GaloisField, RationalFunctions)):
            raise UnsupportedRing(f"skew coefficient ring must be GF(q) or Q(x), got {K}")

    def applier(self, K: Ring) -> Callable:
        """Function (value, n) -> tau^n(value) on payloads of K."""
        if self.kind == "identity" or isinstance(K, PrimeField):
            return lambda a, n: a
        if self.kind == "frobenius":
            d = K.degree
            frob = K._tables.get("frob")
            s = self.power
            if frob is not None:
                return lambda a, n: frob[(s * n) % d][a]
            return lambda a, n: K.frobenius_value(a, (s * n) % d)
        s = self.power
        return lambda a, n: K.shift_value(a, s * n)

    def order(self, K: Ring) -> Optional[int]:
        """Multiplicative order of tau on K; None when infinite."""
        if self.kind == "identity" or isinstance(K, PrimeField):
            return 1
        if self.kind == "frobenius":
            d = K.degree
            return d // math.gcd(self.power % d, d) if self.power % d else 1
        return None

    def text(self) -> str:
        if self.kind == "identity":
            return "id"
        if self.power == 1:
            return "frob" if self.kind == "frobenius" else "shift"
        return f"{'frob' if self.kind == 'frobenius' else 'shift'}^{self.power}"

    def __str__(self):
        return self.text()


IDENTITY = Automorphism("identity")


def inner_order(tau: Automorphism, K: Ring) -> Optional[int]:
    """Order of tau (inner = identity over a commutative base); None = infinite."""
    return tau.order(K)


@dataclass(frozen=True)
class FixedField:
    """K^tau together with its embedding into K."""

    field: Ring
    embed: Callable = field(compare=False)


def fixed_field(tau: Automorphism, K: Ring) -> FixedField:
    m = tau.order(K)
    if m == 1:
        return FixedField(K, lambda c: c)
    if tau.kind == "shift":
        return FixedField(Rationals(), K.from_fraction)
    d = K.degree
    sub_deg = d // m
    F = finite_field(K.p ** sub_deg)
    if sub_deg == 1:
        return FixedField(F, lambda c: c)
    # find a root of F's modulus inside K and map the power basis
    beta = None
    for b in K.all_values():
        acc = K.zero_value
        for c in reversed(F.modulus):
            acc = K.add(K.mul(acc, b), K.from_int(c))
        if acc == K.zero_value:
            beta = b
            break
    powers = [K.one_value]
    for _ in range(sub_deg - 1):
        powers.append(K.mul(powers[-1], beta))
    table = {}
    for code in F.all_values():
        acc = K.zero_value
        for coeff, pw in zip(F.to_prime_vector(code), powers):
            acc = K.add(acc, K.mul(K.from_int(coeff), pw))
        table[code] = acc
    return FixedField(F, table.__getitem__)


class _SkewBase(Ring):
    base: Ring
    tau: Automorphism
    var: str

    def _setup(self):
        self.tau.check_base(self.base)
        object.__setattr__(self, "_twist", self.tau.applier(self.base))

    @property
    def is_commutative(self):
        return self.tau.order(self.base) == 1

    def characteristic(self):
        return self.base.characteristic()

    def twist(self, a, n: int):
        return self._twist(a, n)

    @property
    def inner_order(self) -> Optional[int]:
        return self.tau.order(self.base)

    def _mul_coeffs(self, f, g, offset: int):
        """Coefficients of (sum f_i t^(offset+i)) * (sum g_j t^j) with shared grading."""
        K = self.base
        zero = K.zero_value
        out = [zero] * (len(f) + len(g) - 1)
        tw = self._twist
        identity = self.tau.kind == "identity"
        for i, a in enumerate(f):
            if a == zero:
                continue
            n = offset + i
            for j, b in enumerate(g):
                if b == zero:
                    continue
                bb = b if identity or n == 0 else tw(b, n)
                out[i + j] = K.add(out[i + j], K.mul(a, bb))
        return out

    def auto_text(self) -> str:
        return self.tau.text()


@dataclass(frozen=True)
class SkewPoly(_SkewBase):
    """D[t; tau]; payload = coefficient tuple, lowest degree first."""

    base: Ring
    tau: Automorphism = IDENTITY
    var: str = "t"

    def __post_init__(self):
        self._setup()

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return (self.base.one_value,)

    def add(self, a, b):
        return pa.add(self.base, a, b)

    def neg(self, a):
        return pa.neg(self.base, a)

    def sub(self, a, b):
        return pa.sub(self.base, a, b)

    def mul(self, a, b):
        if not a or not b:
            return ()
        return pa.trim(self.base, self._mul_coeffs(a, b, 0))

    def from_int(self, n):
        return pa.trim(self.base, (self.base.from_int(n),))

    def inverse_value(self, a):
        if len(a) == 1:
            return (self.base.inverse_value(a[0]),)
        raise NotAUnit(f"{self.format_value(a)} is not a unit")

    def degree(self, a) -> int:
        return len(a) - 1

    def right_divide_value(self, f, g):
        """(q, r) with f = q*g + r and deg r < deg g."""
        if not g:
            raise ZeroDivisionError("skew division by zero")
        K, tw = self.base, self._twist
        r = list(f)
        m = len(g) - 1
        q = [K.zero_value] * max(len(f) - m, 0)
        zero = K.zero_value
        for n in range(len(f) - 1, m - 1, -1):
            c = r[n]
            if c == zero:
                continue
            k = n - m
            c = K.mul(c, K.inverse_value(tw(g[m], k)))
            q[k] = c
            for j, b in enumerate(g):
                r[k + j] = K.sub(r[k + j], K.mul(c, tw(b, k)))
        return pa.trim(K, q), pa.trim(K, r[:m])

    def left_divide_value(self, f, g):
        """(q, r) with f = g*q + r and deg r < deg g."""
        if not g:
            raise ZeroDivisionError("skew division by zero")
        K, tw = self.base, self._twist
        r = list(f)
        m = len(g) - 1
        q = [K.zero_value] * max(len(f) - m, 0)
        zero = K.zero_value
        lead_inv = K.inverse_value(g[m])
        for n in range(len(f) - 1, m - 1, -1):
            c = r[n]
            if c == zero:
                continue
            k = n - m
            c = tw(K.mul(lead_inv, c), -m)
            q[k] = c
            for j, b in enumerate(g):
                r[j + k] = K.sub(r[j + k], K.mul(b, tw(c, j)))
        return pa.trim(K, q), pa.trim(K, r[:m])

    def random_value(self, rng, size=3):
        d = rng.randint(0, size)
        return pa.trim(self.base, [self.base.random_value(rng) for _ in range(d + 1)])

    def generators(self):
        return {self.var: (self.base.zero_value, self.base.one_value)}

    def coerce(self, x):
        if x.ring == self.base:
            return self.element(pa.trim(self.base, (x.value,)))
        return self.element(pa.trim(self.base, (self.base.coerce(x).value,)))

    def format_value(self, a):
        return pa.format_poly(self.base, a, self.var)

    def __str__(self):
        return f"{self.base}[{self.var};{self.tau.text()}]"


@dataclass(frozen=True)
class SkewLaurent(_SkewBase):
    """D[t, t^-1; tau]; payload = (lowest exponent, coefficient tuple)."""

    base: Ring
    tau: Automorphism = IDENTITY
    var: str = "t"

    def __post_init__(self):
        self._setup()

    zero_value = (0, ())

    @property
    def one_value(self):
        return (0, (self.base.one_value,))

    def normalize(self, low: int, coeffs):
        zero = self.base.zero_value
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        i = 0
        while i < len(coeffs) and coeffs[i] == zero:
            i += 1
        if i == len(coeffs):
            return (0, ())
        return (low + i, tuple(coeffs[i:]))

    def add(self, a, b):
        if not a[1]:
            return b
        if not b[1]:
            return a
        K = self.base
        low = min(a[0], b[0])
        high = max(a[0] + len(a[1]), b[0] + len(b[1]))
        out = [K.zero_value] * (high - low)
        for i, c in enumerate(a[1]):
            out[a[0] - low + i] = c
        for i, c in enumerate(b[1]):
            j = b[0] - low + i
            out[j] = K.add(out[j], c)
        return self.normalize(low, out)

    def neg(self, a):
        return (a[0], pa.neg(self.base, a[1]))

    def mul(self, a, b):
        if not a[1] or not b[1]:
            return (0, ())
        return self.normalize(a[0] + b[0], self._mul_coeffs(a[1], b[1], a[0]))

    def from_int(self, n):
        return self.normalize(0, (self.base.from_int(n),))

    def monomial(self, c, e: int):
        return self.normalize(e, (c,))

    def inverse_value(self, a):
        if len(a[1]) != 1:
            raise NotAUnit(f"{self.format_value(a)} is not a unit")
        c, k = a[1][0], a[0]
        # (c t^k)^-1 = t^-k c^-1 = tau^-k(c^-1) t^-k
        return (-k, (self._twist(self.base.inverse_value(c), -k),))

    def degree(self, a) -> int:
        """Highest exponent (-1 for zero when used on polynomial payloads)."""
        return a[0] + len(a[1]) - 1 if a[1] else -1

    def is_polynomial(self, a) -> bool:
        return not a[1] or a[0] >= 0

    def to_poly(self, a):
        """Coefficient tuple of a polynomial payload."""
        if not a[1]:
            return ()
        if a[0] < 0:
            raise ValueError("negative exponents present")
        return (self.base.zero_value,) * a[0] + a[1]

    def from_poly(self, f):
        return self.normalize(0, f)

    def poly_ring(self) -> SkewPoly:
        return SkewPoly(self.base, self.tau, self.var)

    def random_value(self, rng, size=3):
        d = rng.randint(0, size)
        low = rng.randint(-1, 1)
        return self.normalize(low, [self.base.random_value(rng) for _ in range(d + 1)])

    def generators(self):
        return {self.var: (1, (self.base.one_value,))}

    def coerce(self, x):
        if isinstance(x.ring, SkewPoly) and x.ring.base == self.base and x.ring.tau == self.tau:
            return self.element(self.normalize(0, x.value))
        if x.ring == self.base:
            return self.element(self.normalize(0, (x.value,)))
        return self.element(self.normalize(0, (self.base.coerce(x).value,)))

    def format_value(self, a):
        low, coeffs = a
        K = self.base
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if c == K.zero_value:
                continue
            terms.append(pa.format_term(K.format_value(c), pa.monomial_text(self.var, low + i)))
        return pa.join_terms(terms)

    def __str__(self):
        if self.tau.kind == "identity":
            return f"{self.base}[{self.var}^]"
        return f"{self.base}[{self.var}^;{self.tau.text()}]"


@dataclass(frozen=True)
class Center:
    """Z(R) as a ring, plus the map from its payloads into R."""

    ring: Ring
    ambient: Ring
    period: Optional[int]
    fixed: FixedField = field(compare=False)

    def include(self, z: Element) -> Element:
        """Image in the ambient ring."""
        R = self.ambient
        if self.period is None:
            return Element(R, _const(R, self.fixed.embed(z.value)))
        if isinstance(R, SkewLaurent):
            low, coeffs = z.value
            m = self.period
            out = [R.base.zero_value] * (m * (len(coeffs) - 1) + 1) if coeffs else []
            for i, c in enumerate(coeffs):
                out[m * i] = self.fixed.embed(c)
            return Element(R, R.normalize(m * low, out))
        coeffs = z.value
        m = self.period
        out = [R.base.zero_value] * (m * (len(coeffs) - 1) + 1) if coeffs else []
        for i, c in enumerate(coeffs):
            out[m * i] = self.fixed.embed(c)
        return Element(R, pa.trim(R.base, out))

    def description(self) -> str:
        if self.period is None:
            return f"{self.ring} (constants)"
        return f"{self.ring} via s -> {self.ambient.var}^{self.period}" if self.period > 1 else \
            f"{self.ring} via s -> {self.ambient.var}"


def _const(R, c):
    if isinstance(R, SkewLaurent):
        return R.normalize(0, (c,))
    return pa.trim(R.base, (c,))


def center(R: Ring) -> Center:
    """Center of a skew polynomial or skew Laurent ring over a field."""
    if not isinstance(R, (SkewPoly, SkewLaurent)):
        raise UnsupportedRing(f"center is implemented for skew rings, got {R}")
    m = R.tau.order(R.base)
    fx = fixed_field(R.tau, R.base)
    if m is None:
        return Center(fx.field, R, None, fx)
    if isinstance(R, SkewLaurent):
        Z = SkewLaurent(fx.field, IDENTITY, "s")
    else:
        Z = SkewPoly(fx.field, IDENTITY, "s")
    return Center(Z, R, m, fx)
