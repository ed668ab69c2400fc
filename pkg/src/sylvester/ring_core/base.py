"""Ring and element base classes.

Every ring works on raw, hashable payloads (ints, tuples, ...) through
methods like ``add(a, b)`` and ``mul(a, b)``.  :class:`Element` wraps a
payload together with its ring and gives operator syntax on top.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable


class AlgebraError(Exception):
    """Base class of all library errors."""


class RingMismatch(AlgebraError, TypeError):
    """Operands live in different rings."""


class NotAUnit(AlgebraError, ArithmeticError):
    """Raised by inversion when the element has no two-sided inverse."""


class UnsupportedRing(AlgebraError, ValueError):
    """The operation is not defined for this ring shape."""


class ParseError(AlgebraError, ValueError):
    """Text could not be parsed; ``position`` points into ``text``."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class Ring:
    """Abstract ring.  Concrete rings are frozen dataclasses."""

    is_field = False
    is_commutative = True

    # -- payload level -------------------------------------------------
    @property
    def zero_value(self) -> Any:
        raise NotImplementedError

    @property
    def one_value(self) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero_value(self, a) -> bool:
        return a == self.zero_value

    def inverse_value(self, a):
        """Two-sided inverse of ``a`` or :class:`NotAUnit`."""
        raise NotAUnit(f"{self.format_value(a)} is not a unit in {self}")

    def format_value(self, a) -> str:
        return str(a)

    def random_value(self, rng, size: int = 3):
        raise NotImplementedError

    def generators(self) -> Dict[str, Any]:
        """Named payloads usable in element expressions."""
        return {}

    def characteristic(self) -> int:
        raise NotImplementedError

    def pow_value(self, a, e: int):
        if e < 0:
            a = self.inverse_value(a)
            e = -e
        result = self.one_value
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    # -- element level -------------------------------------------------
    def __call__(self, x: Any = 0) -> "Element":
        if isinstance(x, Element):
            if x.ring == self:
                return x
            return self.coerce(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return Element(self, self.from_int(x))
        if isinstance(x, Fraction):
            return Element(self, self.from_int(x.numerator)) / Element(
                self, self.from_int(x.denominator))
        if isinstance(x, str):
            from .parse import parse_element
            return parse_element(self, x)
        raise TypeError(f"cannot build an element of {self} from {x!r}")

    def coerce(self, x: "Element") -> "Element":
        """Embed an element of a subring (e.g. the coefficient ring)."""
        raise RingMismatch(f"cannot coerce {x.ring} into {self}")

    def element(self, value) -> "Element":
        return Element(self, value)

    def zero(self) -> "Element":
        return Element(self, self.zero_value)

    def one(self) -> "Element":
        return Element(self, self.one_value)

    def gens(self) -> Dict[str, "Element"]:
        return {k: Element(self, v) for k, v in self.generators().items()}

    def random_element(self, rng, size: int = 3) -> "Element":
        return Element(self, self.random_value(rng, size))


class Element:
    """An element of ``ring`` with canonical payload ``value``."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, Element):
            if other.ring is self.ring or other.ring == self.ring:
                return other.value
            try:
                return self.ring.coerce(other).value
            except RingMismatch:
                raise RingMismatch(f"{other.ring} vs {self.ring}") from None
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring(other).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.add(self.value, o))

    def __radd__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.add(o, self.value))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.mul(self.value, o))

    def __rmul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.mul(o, self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.mul(self.value, self.ring.inverse_value(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.mul(o, self.ring.inverse_value(self.value)))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        return Element(self.ring, self.ring.pow_value(self.value, int(e)))

    def __eq__(self, other):
        if isinstance(other, Element):
            return (other.ring is self.ring or other.ring == self.ring) and other.value == self.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self.ring(other).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return not self.ring.is_zero_value(self.value)

    def is_zero(self) -> bool:
        return self.ring.is_zero_value(self.value)

    def inverse(self) -> "Element":
        return Element(self.ring, self.ring.inverse_value(self.value))

    def __str__(self):
        return self.ring.format_value(self.value)

    def __repr__(self):
        return f"Element({self.ring}, {self})"


def elements(ring: Ring, values: Iterable) -> list:
    return [Element(ring, v) for v in values]
