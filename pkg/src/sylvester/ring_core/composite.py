"""Matrix rings Mat_n(R) and binary direct products R1 x R2."""
from __future__ import annotations

from dataclasses import dataclass

from .base import Element, NotAUnit, Ring, RingMismatch


@dataclass(frozen=True)
class MatrixRing(Ring):
    """Mat_n(base); payload = tuple of n row tuples."""

    base: Ring
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix size must be positive")

    is_commutative = False

    @property
    def zero_value(self):
        z = self.base.zero_value
        return tuple((z,) * self.n for _ in range(self.n))

    @property
    def one_value(self):
        return self.scalar(self.base.one_value)

    def scalar(self, c):
        z = self.base.zero_value
        return tuple(tuple(c if i == j else z for j in range(self.n)) for i in range(self.n))

    def characteristic(self):
        return self.base.characteristic()

    def add(self, a, b):
        B = self.base
        return tuple(tuple(B.add(x, y) for x, y in zip(r, s)) for r, s in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(tuple(B.neg(x) for x in r) for r in a)

    def mul(self, a, b):
        B = self.base
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = B.zero_value
                for k in range(n):
                    acc = B.add(acc, B.mul(a[i][k], b[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def from_int(self, n):
        return self.scalar(self.base.from_int(n))

    def inverse_value(self, a):
        from ..matrix_forms.matrix import RingMatrix
        from ..matrix_forms.elimination import inverse_over_field
        if not self.base.is_field:
            raise NotAUnit(f"inversion in {self} needs a field base")
        inv = inverse_over_field(RingMatrix.from_values(self.base, a))
        return inv.values()

    def random_value(self, rng, size=3):
        return tuple(tuple(self.base.random_value(rng, size) for _ in range(self.n))
                     for _ in range(self.n))

    def matrix_unit(self, i: int, j: int):
        z, o = self.base.zero_value, self.base.one_value
        return tuple(tuple(o if (r, c) == (i, j) else z for c in range(self.n))
                     for r in range(self.n))

    def coerce(self, x):
        if x.ring == self.base:
            return self.element(self.scalar(x.value))
        return self.element(self.scalar(self.base.coerce(x).value))

    def generators(self):
        return {}

    def format_value(self, a):
        B = self.base
        return "[" + ",".join("[" + ",".join(B.format_value(x) for x in r) + "]" for r in a) + "]"

    def __str__(self):
        return f"Mat({self.n}, {self.base})"


@dataclass(frozen=True)
class Product(Ring):
    """left x right; payload = (a, b)."""

    left: Ring
    right: Ring

    @property
    def is_commutative(self):
        return self.left.is_commutative and self.right.is_commutative

    @property
    def zero_value(self):
        return (self.left.zero_value, self.right.zero_value)

    @property
    def one_value(self):
        return (self.left.one_value, self.right.one_value)

    def component(self, i: int) -> Ring:
        return self.left if i == 0 else self.right

    def characteristic(self):
        import math
        a, b = self.left.characteristic(), self.right.characteristic()
        if a == 0 or b == 0:
            return 0
        return a * b // math.gcd(a, b)

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def sub(self, a, b):
        return (self.left.sub(a[0], b[0]), self.right.sub(a[1], b[1]))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def from_int(self, n):
        return (self.left.from_int(n), self.right.from_int(n))

    def inverse_value(self, a):
        return (self.left.inverse_value(a[0]), self.right.inverse_value(a[1]))

    def random_value(self, rng, size=3):
        return (self.left.random_value(rng, size), self.right.random_value(rng, size))

    def pair(self, x: Element, y: Element) -> Element:
        if x.ring != self.left or y.ring != self.right:
            raise RingMismatch("pair components do not match the factors")
        return Element(self, (x.value, y.value))

    def coerce(self, x):
        raise RingMismatch(f"cannot coerce {x.ring} into {self}")

    def format_value(self, a):
        return f"({self.left.format_value(a[0])}, {self.right.format_value(a[1])})"

    def __str__(self):
        def wrap(r):
            return f"({r})" if isinstance(r, Product) else str(r)
        return f"{wrap(self.left)} x {wrap(self.right)}"
