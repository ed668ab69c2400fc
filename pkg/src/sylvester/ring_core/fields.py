"""Scalar rings: prime and Galois fields, Z, Q, Z/(n) and Q(x)."""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from . import polyarith as pa
from .base import NotAUnit, Ring, RingMismatch, UnsupportedRing

INFINITY = math.inf

TABLE_LIMIT = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, a) with n = p^a, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    a, m = 0, n
    while m % p == 0:
        m //= p
        a += 1
    return (p, a) if m == 1 else None


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    zero_value = 0
    one_value = 1

    @property
    def order(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def from_int(self, n):
        return n % self.p

    def inverse_value(self, a):
        if a % self.p == 0:
            raise NotAUnit("0 is not invertible")
        return pow(a, -1, self.p)

    def pth_root_value(self, a):
        return a

    def all_values(self) -> List[int]:
        return list(range(self.p))

    def random_value(self, rng, size=3):
        return rng.randrange(self.p)

    def to_prime_vector(self, a) -> List[int]:
        return [a]

    def from_prime_vector(self, v) -> int:
        return v[0] % self.p

    def frobenius_value(self, a, s: int = 1):
        return a

    def format_value(self, a):
        return str(a)

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class GaloisField(Ring):
    """F_q with q = p^d as F_p[a]/(modulus); payloads are base-p integer codes."""

    p: int
    modulus: Tuple[int, ...]
    var: str = "a"
    _tables: Dict = field(default=None, compare=False, repr=False, hash=False)
    is_field = True

    def __post_init__(self):
        from . import finite_poly
        Fp = PrimeField(self.p)
        m = tuple(c % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", m)
        if len(m) < 3 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 2")
        if not finite_poly.is_irreducible(Fp, m):
            raise ValueError(f"modulus {pa.format_poly(Fp, m, self.var)} is reducible over F_{self.p}")
        d = len(m) - 1
        q = self.p ** d
        tabs: Dict = {"d": d, "q": q, "Fp": Fp}
        # x -> x^p as a matrix over F_p, rows = images of basis vectors
        frob_rows = []
        for i in range(d):
            basis = [0] * d
            basis[i] = 1
            frob_rows.append(self._vec(self._pow_slow(self._code(basis), self.p, d, q)))
        tabs["frob_rows"] = frob_rows
        object.__setattr__(self, "_tables", tabs)
        if q <= TABLE_LIMIT:
            mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            add = [[self._code([(x + y) % self.p for x, y in zip(self._vec(a), self._vec(b))])
                    for b in range(q)] for a in range(q)]
            neg = [self._code([-x % self.p for x in self._vec(a)]) for a in range(q)]
            inv = [0] * q
            for a in range(1, q):
                for b in range(1, q):
                    if mul[a][b] == 1:
                        inv[a] = b
                        break
            frob = [list(range(q))]
            for _ in range(1, d):
                prev = frob[-1]
                frob.append([self._apply_frob_matrix(prev[a]) for a in range(q)])
            tabs.update(mul=mul, add=add, neg=neg, inv=inv, frob=frob)

    # -- encoding helpers ----------------------------------------------
    def _vec(self, a: int) -> List[int]:
        out = []
        for _ in range(len(self.modulus) - 1):
            out.append(a % self.p)
            a //= self.p
        return out

    def _code(self, v) -> int:
        c = 0
        for x in reversed(list(v)):
            c = c * self.p + x % self.p
        return c

    def _mul_slow(self, a: int, b: int) -> int:
        Fp = PrimeField(self.p)
        prod = pa.mul(Fp, pa.trim(Fp, self._vec(a)), pa.trim(Fp, self._vec(b)))
        return self._code(pa.mod(Fp, prod, self.modulus))

    def _pow_slow(self, a, e, d, q):
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            e >>= 1
            a = self._mul_slow(a, a)
        return r

    def _apply_frob_matrix(self, a: int) -> int:
        d = self._tables["d"]
        rows = self._tables["frob_rows"]
        v = self._vec(a)
        out = [0] * d
        for i, c in enumerate(v):
            if c:
                for j in range(d):
                    out[j] += c * rows[i][j]
        return self._code(out)

    # -- ring interface ------------------------------------------------
    zero_value = 0
    one_value = 1

    @property
    def order(self) -> int:
        return self._tables["q"]

    @property
    def degree(self) -> int:
        return self._tables["d"]

    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        t = self._tables.get("add")
        if t is not None:
            return t[a][b]
        return self._code([(x + y) for x, y in zip(self._vec(a), self._vec(b))])

    def neg(self, a):
        t = self._tables.get("neg")
        if t is not None:
            return t[a]
        return self._code([-x for x in self._vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        t = self._tables.get("mul")
        if t is not None:
            return t[a][b]
        return self._mul_slow(a, b)

    def from_int(self, n):
        return n % self.p

    def inverse_value(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        t = self._tables.get("inv")
        if t is not None:
            return t[a]
        return self._pow_slow(a, self.order - 2, 0, 0)

    def frobenius_value(self, a, s: int = 1):
        """a^(p^s)."""
        s %= self.degree
        t = self._tables.get("frob")
        if t is not None:
            return t[s][a]
        for _ in range(s):
            a = self._apply_frob_matrix(a)
        return a

    def pth_root_value(self, a):
        return self.frobenius_value(a, self.degree - 1)

    def all_values(self) -> List[int]:
        return list(range(self.order))

    def random_value(self, rng, size=3):
        return rng.randrange(self.order)

    def to_prime_vector(self, a) -> List[int]:
        return self._vec(a)

    def from_prime_vector(self, v) -> int:
        return self._code(v)

    def generators(self):
        return {self.var: self.p}  # code p encodes the vector (0, 1, 0, ...)

    def coerce(self, x):
        if isinstance(x.ring, PrimeField) and x.ring.p == self.p:
            return self.element(x.value)
        return super().coerce(x)

    def format_value(self, a):
        Fp = self._tables["Fp"]
        return pa.format_poly(Fp, pa.trim(Fp, self._vec(a)), self.var)

    def is_default_modulus(self) -> bool:
        from . import finite_poly
        return finite_poly.smallest_irreducible(self._tables["Fp"], self.degree) == self.modulus

    def __str__(self):
        if self.is_default_modulus():
            return f"GF({self.order})"
        Fp = self._tables["Fp"]
        return f"GF({self.order},{pa.format_poly(Fp, self.modulus, self.var)})"


@lru_cache(maxsize=None)
def finite_field(q: int, modulus: Optional[Tuple[int, ...]] = None, var: str = "a") -> Ring:
    """GF(q): a PrimeField for prime q, otherwise a GaloisField."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    p, d = pp
    if d == 1:
        return PrimeField(p)
    if modulus is None:
        modulus = _default_modulus(p, d)
    return GaloisField(p, tuple(modulus), var)


_DEFAULT_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {}


def _default_modulus(p, d):
    from . import finite_poly
    key = (p, d)
    if key not in _DEFAULT_MODULI:
        _DEFAULT_MODULI[key] = finite_poly.smallest_irreducible(PrimeField(p), d)
    return _DEFAULT_MODULI[key]


@dataclass(frozen=True)
class Integers(Ring):
    zero_value = 0
    one_value = 1

    def characteristic(self):
        return 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def inverse_value(self, a):
        if a in (1, -1):
            return a
        raise NotAUnit(f"{a} is not a unit in Z")

    def random_value(self, rng, size=3):
        bound = 6 * size
        return rng.randint(-bound, bound)

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class Rationals(Ring):
    is_field = True
    zero_value = Fraction(0)
    one_value = Fraction(1)

    def characteristic(self):
        return 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def inverse_value(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / a

    def random_value(self, rng, size=3):
        return Fraction(rng.randint(-3 * size, 3 * size), rng.randint(1, size))

    def coerce(self, x):
        if isinstance(x.ring, Integers):
            return self.element(Fraction(x.value))
        return super().coerce(x)

    def format_value(self, a):
        return str(a)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class IntegerQuotient(Ring):
    """Z/(n)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")

    zero_value = 0

    @property
    def one_value(self):
        return 1 % self.n

    @property
    def is_field(self):
        return is_prime(self.n)

    @property
    def order(self) -> int:
        return self.n

    def characteristic(self):
        return self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def from_int(self, n):
        return n % self.n

    def inverse_value(self, a):
        if math.gcd(a, self.n) != 1:
            raise NotAUnit(f"{a} is not a unit in Z/({self.n})")
        return pow(a, -1, self.n)

    def random_value(self, rng, size=3):
        return rng.randrange(self.n)

    def all_values(self):
        return list(range(self.n))

    # -- local structure -----------------------------------------------
    def local_data(self) -> Tuple[int, int]:
        """(radical generator payload, nilpotency) when n is a prime power."""
        pp = prime_power(self.n)
        if pp is None:
            raise UnsupportedRing(f"Z/({self.n}) is not local")
        return pp

    @property
    def is_local(self) -> bool:
        return prime_power(self.n) is not None

    def radical_generator_value(self):
        return self.local_data()[0] % self.n

    @property
    def nilpotency(self) -> int:
        return self.local_data()[1]

    def valuation_value(self, a):
        """(m, u) with a = p^m u, u a unit; (inf, None) for zero."""
        p, e = self.local_data()
        a %= self.n
        if a == 0:
            return INFINITY, None
        m = 0
        while a % p == 0:
            a //= p
            m += 1
        return m, a % self.n

    def __str__(self):
        return f"Z/({self.n})"


# -- Q(x) ------------------------------------------------------------------

_Q = Rationals()


def _qpoly(coeffs) -> Tuple[Fraction, ...]:
    return pa.trim(_Q, [Fraction(c) for c in coeffs])


def _integer_coeffs(f):
    """(L*f as integers, L) with L the lcm of the coefficient denominators."""
    L = 1
    for c in f:
        L = L * c.denominator // math.gcd(L, c.denominator)
    return [int(c * L) for c in f], L


def _cancel_common(num, den):
    """Divide out gcd(num, den) with sympy's integer polynomial gcd.

    The plain Euclidean gcd over Q swells coefficients badly; the heuristic
    and modular gcd over Z does not.
    """
    nz, ln = _integer_coeffs(num)
    dz, ld = _integer_coeffs(den)
    _, cf, cg = dup_inner_gcd(nz[::-1], dz[::-1], ZZ)
    # num/den = (nz * ld) / (dz * ln)
    return (tuple(Fraction(int(c) * ld) for c in reversed(cf)),
            tuple(Fraction(int(c) * ln) for c in reversed(cg)))


def taylor_shift(f, n) -> Tuple[Fraction, ...]:
    """f(x + n)."""
    out: Tuple = ()
    lin = (Fraction(n), Fraction(1))
    for c in reversed(f):
        out = pa.add(_Q, pa.mul(_Q, out, lin), (c,) if c else ())
    return out


@dataclass(frozen=True)
class RationalFunctions(Ring):
    """Q(x); payload (numerator, denominator) with monic, coprime denominator."""

    var: str = "x"
    is_field = True

    zero_value = ((), (Fraction(1),))
    one_value = ((Fraction(1),), (Fraction(1),))

    def characteristic(self):
        return 0

    @staticmethod
    def normalize(num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (Fraction(1),))
        if len(den) > 1 and len(num) > 0:
            num, den = _cancel_common(num, den)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (tuple(num), tuple(den))

    def add(self, a, b):
        if a[1] == b[1]:
            return self.normalize(pa.add(_Q, a[0], b[0]), a[1])
        return self.normalize(pa.add(_Q, pa.mul(_Q, a[0], b[1]), pa.mul(_Q, b[0], a[1])),
                              pa.mul(_Q, a[1], b[1]))

    def neg(self, a):
        return (pa.neg(_Q, a[0]), a[1])

    def mul(self, a, b):
        if not a[0] or not b[0]:
            return self.zero_value
        return self.normalize(pa.mul(_Q, a[0], b[0]), pa.mul(_Q, a[1], b[1]))

    def from_int(self, n):
        return self.normalize(_qpoly([n]), (Fraction(1),))

    def from_fraction(self, c: Fraction):
        return self.normalize(_qpoly([c]), (Fraction(1),))

    def inverse_value(self, a):
        if not a[0]:
            raise NotAUnit("0 is not invertible")
        return self.normalize(a[1], a[0])

    def shift_value(self, a, n: int = 1):
        """a(x + n)."""
        if n == 0:
            return a
        return self.normalize(taylor_shift(a[0], n), taylor_shift(a[1], n))

    def constant_value(self, a) -> Optional[Fraction]:
        if len(a[0]) <= 1 and len(a[1]) == 1:
            return a[0][0] if a[0] else Fraction(0)
        return None

    def random_value(self, rng, size=2):
        def rp(d):
            return _qpoly([rng.randint(-3, 3) for _ in range(d + 1)])
        num = rp(rng.randint(0, size))
        den = ()
        while not den:
            den = rp(rng.randint(0, max(size - 1, 0)))
        return self.normalize(num, den)

    def generators(self):
        return {self.var: ((Fraction(0), Fraction(1)), (Fraction(1),))}

    def coerce(self, x):
        if isinstance(x.ring, (Integers, Rationals)):
            return self.element(self.from_fraction(Fraction(x.value)))
        return super().coerce(x)

    def format_value(self, a):
        num = pa.format_poly(_Q, a[0], self.var)
        if a[1] == (Fraction(1),):
            return num
        den = pa.format_poly(_Q, a[1], self.var)
        if pa._needs_parens(num):
            num = f"({num})"
        if len(a[1]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return f"Q({self.var})"


def field_prime_data(K: Ring):
    """(p, degree) for finite fields; raises for others."""
    if isinstance(K, PrimeField):
        return K.p, 1
    if isinstance(K, GaloisField):
        return K.p, K.degree
    if isinstance(K, IntegerQuotient) and K.is_field:
        return K.n, 1
    raise UnsupportedRing(f"{K} is not a finite field")


def same_ring(a: Ring, b: Ring) -> None:
    if a is not b and a != b:
        raise RingMismatch(f"{a} vs {b}")
