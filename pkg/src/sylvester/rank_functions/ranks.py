"""Symbolic Sylvester matrix rank functions and their exact evaluation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Tuple

from ..ideal_structure.ideals import (CentralSkewGenerator, Descriptor, IrreduciblePoly,
                                      PrimeInt, build_quotient)
from ..ideal_structure.quotients import SkewQuotient
from ..matrix_forms.elimination import field_rank_values
from ..matrix_forms.euclid import diagonalize_skew
from ..matrix_forms.matrix import RingMatrix
from ..matrix_forms.ore_rank import ore_rank_rational
from ..ring_core.base import Ring, RingMismatch, UnsupportedRing
from ..ring_core.composite import MatrixRing
from ..ring_core.fields import Integers, IntegerQuotient, RationalFunctions, Rationals
from ..ring_core.homs import RingHom, check_registered
from ..ring_core.polyrings import PolyQuotient, PolyRing
from ..ring_core.skew import SkewLaurent, SkewPoly
from ..matrix_forms.local import local_valuations
from .representation import (diagonal_rank, lattice_rank, representation_rank,
                             valuation_rank)


class RankFunction:
    """Base class.  Subclasses are frozen dataclasses with a ``ring`` field."""

    ring: Ring

    def evaluate(self, A: RingMatrix) -> Fraction:
        raise NotImplementedError

    def __call__(self, A: RingMatrix) -> Fraction:
        return eval_matrix(self, A)

    def linear_form(self) -> Dict["RankFunction", Fraction]:
        """This rank as a weighted sum of non-convex atoms."""
        return {self: Fraction(1)}

    def text(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.text()


def eval_matrix(rk: RankFunction, A: RingMatrix) -> Fraction:
    if not (A.ring is rk.ring or A.ring == rk.ring):
        raise RingMismatch(f"rank on {rk.ring} applied to a matrix over {A.ring}")
    if A.rows == 0 or A.cols == 0:
        return Fraction(0)
    return rk.evaluate(A)


def eval_element(rk: RankFunction, x) -> Fraction:
    return eval_matrix(rk, RingMatrix(rk.ring, 1, 1, ((x.value,),)))


# -- fields ---------------------------------------------------------------
@dataclass(frozen=True, eq=True)
class FieldRank(RankFunction):
    ring: Ring

    def __post_init__(self):
        if not self.ring.is_field:
            raise UnsupportedRing(f"{self.ring} is not a field")

    def evaluate(self, A):
        return Fraction(field_rank_values(self.ring, A.data))

    def text(self):
        return "field"


# -- local / primary artinian rings --------------------------------------
def primary_order(R: Ring) -> int:
    """Nilpotency order of the radical of a supported primary artinian ring."""
    if isinstance(R, IntegerQuotient):
        return R.local_data()[1]
    if isinstance(R, PolyQuotient):
        return R.local_data()[1]
    if isinstance(R, SkewQuotient):
        return R.primary_data()[1]
    raise UnsupportedRing(f"{R} is not a supported primary artinian ring")


@dataclass(frozen=True, eq=True)
class ArtinianExtreme(RankFunction):
    """rk_k: length of the image in (R/(c^k))^m, divided by k."""

    ring: Ring
    k: int

    def __post_init__(self):
        n = primary_order(self.ring)
        if not 1 <= self.k <= n:
            raise ValueError(f"k={self.k} outside 1..{n} for {self.ring}")

    def evaluate(self, A, method: str = "representation"):
        R = self.ring
        if method == "diagonal":
            return diagonal_rank(R, self.k, A)
        if isinstance(R, IntegerQuotient):
            return lattice_rank(R, self.k, A)
        return representation_rank(R, self.k, A)

    def text(self):
        return f"art({self.k})"


# -- Dedekind domains -------------------------------------------------------
def _dedekind_ring(R: Ring) -> bool:
    if isinstance(R, Integers):
        return True
    if isinstance(R, PolyRing) and R.base.is_field:
        return True
    return isinstance(R, SkewLaurent) and R.is_commutative


@dataclass(frozen=True, eq=True)
class DedekindExtreme(RankFunction):
    """rk_{m,k}: reduce modulo m^k, diagonalize, sum (k - v)/k."""

    ring: Ring
    ideal: Descriptor
    k: int

    def __post_init__(self):
        if not _dedekind_ring(self.ring):
            raise UnsupportedRing(f"{self.ring} is not a supported Dedekind domain")
        _check_descriptor(self.ring, self.ideal)
        if self.k < 1:
            raise ValueError("k must be positive")

    @cached_property
    def quotient(self):
        return build_quotient(self.ideal, self.k, self.ring)

    def evaluate(self, A):
        return valuation_rank(_local_valuations(self, A), self.k)

    def text(self):
        return f"ded({self.ideal.text()},k={self.k})"


# (ring, ideal) -> (n, {matrix data: valuations modulo m^n}).  All ded(m, k)
# with k <= n read the same diagonal form, so a family of them pays once.
_VALUATIONS: Dict = {}


def _local_valuations(rk: DedekindExtreme, A: RingMatrix):
    key = (rk.ring, rk.ideal)
    n, memo = _VALUATIONS.get(key, (0, None))
    if n < rk.k or len(memo) > 1 << 12:
        n, memo = max(n, rk.k), {}
        _VALUATIONS[key] = (n, memo)
    got = memo.get((A.cols, A.data))
    if got is None:
        Q = _quotient(rk.ideal, n, rk.ring)
        B = Q.projection.map_matrix(A)
        got = memo[(A.cols, A.data)] = local_valuations(Q.ring, B.data, B.cols)
    return got


@lru_cache(maxsize=256)
def _quotient(ideal, n, ring):
    return build_quotient(ideal, n, ring)


def _check_descriptor(R, d):
    if isinstance(d, PrimeInt):
        ok = isinstance(R, Integers)
    elif isinstance(d, IrreduciblePoly):
        ok = d.f.ring == R
    elif isinstance(d, CentralSkewGenerator):
        ok = d.p.ring == R
    else:
        ok = False
    if not ok:
        raise UnsupportedRing(f"descriptor {d.text()} does not belong to {R}")


def domain_rank(R: Ring, data) -> int:
    """Rank over the fraction field of a commutative domain (fraction-free)."""
    if isinstance(R, Integers):
        return field_rank_values(Rationals(), [[Fraction(x) for x in r] for r in data])
    rows = [list(r) for r in data]
    zero = R.zero_value
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        a = pr[c]
        for i in range(rank + 1, len(rows)):
            b = rows[i][c]
            if b != zero:
                rows[i] = [R.sub(R.mul(a, x), R.mul(b, y)) for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


@dataclass(frozen=True, eq=True)
class DedekindGeneric(RankFunction):
    """rk_0: rank over the fraction field."""

    ring: Ring

    def __post_init__(self):
        if not _dedekind_ring(self.ring):
            raise UnsupportedRing(f"{self.ring} is not a supported Dedekind domain")

    def evaluate(self, A):
        return Fraction(domain_rank(self.ring, A.data))

    def text(self):
        return "ded0"


# -- skew (Laurent) polynomial rings ---------------------------------------
@dataclass(frozen=True, eq=True)
class LaurentExtreme(RankFunction):
    """rk_{m,k}: psi-representation of R/m^k on R/m^k, normalized by k * deg p."""

    ring: Ring
    ideal: CentralSkewGenerator
    k: int

    def __post_init__(self):
        if not isinstance(self.ring, (SkewLaurent, SkewPoly)):
            raise UnsupportedRing(f"{self.ring} is not a skew polynomial ring")
        _check_descriptor(self.ring, self.ideal)
        if self.k < 1:
            raise ValueError("k must be positive")

    @cached_property
    def quotient(self):
        return build_quotient(self.ideal, self.k, self.ring)

    @cached_property
    def _projected(self) -> dict:
        return {}

    def _project(self, A):
        Q = self.quotient
        memo = self._projected
        if len(memo) > 1 << 15:
            memo.clear()
        f = Q.projection.map_value
        rows = []
        for r in A.data:
            out = []
            for v in r:
                w = memo.get(v)
                if w is None:
                    w = memo[v] = f(v)
                out.append(w)
            rows.append(tuple(out))
        return RingMatrix(Q.ring, A.rows, A.cols, tuple(rows))

    def evaluate(self, A, method: str = "representation"):
        Q = self.quotient
        if A.ring is not self.ring and A.ring != self.ring:
            raise RingMismatch(f"{self.text()} expects {self.ring}, got {A.ring}")
        B = self._project(A)
        if method == "diagonal":
            return diagonal_rank(Q.ring, self.k, B)
        return representation_rank(Q.ring, self.k, B)

    def text(self):
        return f"lau({self.ideal.text()},k={self.k})"


@dataclass(frozen=True, eq=True)
class LaurentGeneric(RankFunction):
    """rk_0: number of nonzero entries of a diagonal form."""

    ring: Ring

    def __post_init__(self):
        if not isinstance(self.ring, (SkewLaurent, SkewPoly)):
            raise UnsupportedRing(f"{self.ring} is not a skew polynomial ring")

    def evaluate(self, A, method: str = "auto"):
        if method == "auto" and isinstance(self.ring.base, RationalFunctions):
            return Fraction(ore_rank_rational(A))
        cert = diagonalize_skew(A)
        return Fraction(sum(1 for d in cert.diagonal if not d.is_zero()))

    def text(self):
        return "lau0"


# -- constructions ----------------------------------------------------------
def flatten_blocks(A: RingMatrix) -> RingMatrix:
    """Matrix over Mat_n(R) -> block matrix over R."""
    M = A.ring
    n = M.n
    rows = []
    for r in A.data:
        for i in range(n):
            rows.append(tuple(x for blk in r for x in blk[i]))
    return RingMatrix(M.base, A.rows * n, A.cols * n, tuple(rows))


@dataclass(frozen=True, eq=True)
class MatrixScaled(RankFunction):
    """(1/n) rk on Mat_n(R) through block flattening."""

    inner: RankFunction
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def ring(self):
        return MatrixRing(self.inner.ring, self.n)

    def evaluate(self, A):
        return eval_matrix(self.inner, flatten_blocks(A)) / self.n

    def linear_form(self):
        return {MatrixScaled(a, self.n): w for a, w in self.inner.linear_form().items()}

    def text(self):
        return f"morita(n={self.n}, {self.inner.text()})"


@dataclass(frozen=True, eq=True)
class Pullback(RankFunction):
    """rk(phi(A)) for a registered homomorphism phi: R -> S."""

    inner: RankFunction
    hom: RingHom

    def __post_init__(self):
        check_registered(self.hom)
        if self.hom.codomain != self.inner.ring:
            raise RingMismatch(f"{self.hom.text()} does not land in {self.inner.ring}")

    @property
    def ring(self):
        return self.hom.domain

    def evaluate(self, A):
        return eval_matrix(self.inner, self.hom.map_matrix(A))

    def linear_form(self):
        return {Pullback(a, self.hom): w for a, w in self.inner.linear_form().items()}

    def text(self):
        from ..ring_core.homs import MatrixPolyIso, ProductProjection
        h = self.hom
        if isinstance(h, ProductProjection):
            return f"proj{h.index + 1}({self.inner.text()})"
        if isinstance(h, MatrixPolyIso) and isinstance(self.inner, MatrixScaled) \
                and self.inner.inner.ring.var == h.domain.var:
            return f"extend({self.inner.inner.text()})"
        return f"pullback({self.inner.text()} along {h.text()})"


@dataclass(frozen=True, eq=True)
class Convex(RankFunction):
    """Exact rational convex combination sum c_i rk_i."""

    terms: Tuple[Tuple[Fraction, RankFunction], ...]
    checked: bool = True

    def __post_init__(self):
        terms = tuple((Fraction(c), r) for c, r in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("empty convex combination")
        ring = terms[0][1].ring
        for c, r in terms:
            if r.ring != ring:
                raise RingMismatch("convex terms must share one ring")
        if self.checked:
            if any(c <= 0 for c, _ in terms):
                raise ValueError("convex coefficients must be positive")
            if sum(c for c, _ in terms) != 1:
                raise ValueError("convex coefficients must sum to 1")

    @classmethod
    def unchecked(cls, terms):
        """Arbitrary nonnegative combination (for building counterexamples)."""
        return cls(tuple(terms), checked=False)

    @property
    def ring(self):
        return self.terms[0][1].ring

    def evaluate(self, A):
        return sum((c * eval_matrix(r, A) for c, r in self.terms), Fraction(0))

    def linear_form(self):
        out: Dict[RankFunction, Fraction] = {}
        for c, r in self.terms:
            for a, w in r.linear_form().items():
                out[a] = out.get(a, Fraction(0)) + c * w
        return out

    def text(self):
        return "convex(" + ", ".join(f"{c}*{r.text()}" for c, r in self.terms) + ")"


def evaluate_linear_form(form: Dict[RankFunction, Fraction], values: Dict[RankFunction, Fraction]):
    return sum((w * values[a] for a, w in form.items()), Fraction(0))
