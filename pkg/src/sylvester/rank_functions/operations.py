"""Modules, pullbacks, Morita transfer, products, extreme sets and extensions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from ..ideal_structure.ideals import (CentralSkewGenerator, IrreduciblePoly, PrimeInt,
                                      _from_center_poly, _raw_central)
from ..ideal_structure.quotients import SkewQuotient
from ..matrix_forms.matrix import RingMatrix
from ..ring_core.base import Element, Ring, RingMismatch, UnsupportedRing
from ..ring_core.composite import MatrixRing, Product
from ..ring_core.factoring import is_irreducible_poly
from ..ring_core.fields import GaloisField, Integers, IntegerQuotient, PrimeField, Rationals, is_prime
from ..ring_core.homs import (CenterInclusion, DiagonalEmbedding, MatrixPolyIso, ProductInjection,
                              ProductProjection, RingHom, ScalarPolyEmbedding, VariableRename)
from ..ring_core.polyrings import PolyQuotient, PolyRing
from ..ring_core.skew import SkewLaurent, center
from .ranks import (ArtinianExtreme, DedekindExtreme, DedekindGeneric, FieldRank, LaurentExtreme,
                    LaurentGeneric, MatrixScaled, Pullback, RankFunction, eval_element,
                    eval_matrix, primary_order)


# -- modules ---------------------------------------------------------------
@dataclass(frozen=True)
class ModulePresentation:
    """The left module R^m / R^n A for an n x m matrix A."""

    A: RingMatrix

    @property
    def ring(self) -> Ring:
        return self.A.ring

    @property
    def generators(self) -> int:
        return self.A.cols

    @classmethod
    def free(cls, ring: Ring, m: int) -> "ModulePresentation":
        return cls(RingMatrix.zeros(ring, 0, m))

    @classmethod
    def cyclic(cls, x: Element) -> "ModulePresentation":
        """R / R x."""
        return cls(RingMatrix(x.ring, 1, 1, ((x.value,),)))

    def direct_sum(self, other: "ModulePresentation") -> "ModulePresentation":
        return ModulePresentation(self.A.block_diag(other.A))


def dim_module(rk: RankFunction, M: ModulePresentation) -> Fraction:
    if M.ring != rk.ring:
        raise RingMismatch(f"module over {M.ring}, rank on {rk.ring}")
    return M.A.cols - eval_matrix(rk, M.A)


# -- pullback / Morita / products -------------------------------------------
def pullback(rk: RankFunction, hom: RingHom) -> RankFunction:
    return Pullback(rk, hom)


def morita_transfer(rk: RankFunction, n: int) -> RankFunction:
    """P(R) -> P(Mat_n(R)), rk -> (1/n) rk on flattened blocks."""
    return MatrixScaled(rk, n)


def morita_inverse(rk: RankFunction) -> RankFunction:
    """P(Mat_n(R)) -> P(R), pullback along r -> r I."""
    M = rk.ring
    if not isinstance(M, MatrixRing):
        raise UnsupportedRing(f"{M} is not a matrix ring")
    return Pullback(rk, DiagonalEmbedding(M.base, M.n))


@dataclass(frozen=True, eq=True)
class ProductCombine(RankFunction):
    """lam * rk1(pi_1 A) + (1 - lam) * rk2(pi_2 A) on R1 x R2."""

    left: RankFunction
    right: RankFunction
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if not 0 <= self.lam <= 1:
            raise ValueError("lambda must lie in [0, 1]")

    @property
    def ring(self):
        return Product(self.left.ring, self.right.ring)

    def parts(self):
        P = self.ring
        out = []
        if self.lam:
            out.append((self.lam, Pullback(self.left, ProductProjection(P, 0))))
        if self.lam != 1:
            out.append((1 - self.lam, Pullback(self.right, ProductProjection(P, 1))))
        return out

    def evaluate(self, A):
        return sum((c * eval_matrix(r, A) for c, r in self.parts()), Fraction(0))

    def linear_form(self):
        out = {}
        for c, r in self.parts():
            for a, w in r.linear_form().items():
                out[a] = out.get(a, Fraction(0)) + c * w
        return out

    def text(self):
        return f"product({self.lam}, {self.left.text()}, {self.right.text()})"


def product_combine(rk1: RankFunction, rk2: RankFunction, lam) -> ProductCombine:
    return ProductCombine(rk1, rk2, Fraction(lam))


def injection(P: Product, i: int) -> ProductInjection:
    return ProductInjection(P, i)


# -- center restriction -----------------------------------------------------
def center_inclusion(R: Ring) -> CenterInclusion:
    Z = center(R)
    if Z.period is None:
        raise UnsupportedRing(f"the center of {R} is a field of constants")
    return CenterInclusion(Z)


def restrict_to_center(rk: RankFunction) -> RankFunction:
    return Pullback(rk, center_inclusion(rk.ring))


# -- extreme points ----------------------------------------------------------
@dataclass(frozen=True)
class Bounds:
    """Caps on the infinite families: primes/degrees of ideals and k."""

    max_prime: int = 3
    max_degree: int = 1
    max_k: int = 2
    candidates: Optional[Tuple] = None


def monic_irreducibles(K: Ring, max_degree: int, nonzero_constant: bool = False) -> List[tuple]:
    """Monic irreducible polynomials over a finite field, by degree then code."""
    out = []
    vals = list(K.all_values())
    for d in range(1, max_degree + 1):
        for combo in itertools.product(vals, repeat=d):
            f = tuple(combo) + (K.one_value,)
            if nonzero_constant and f[0] == K.zero_value:
                continue
            if is_irreducible_poly(K, f):
                out.append(f)
    return out


def central_irreducibles(R: Ring, max_degree: int) -> List[CentralSkewGenerator]:
    """Central irreducible generators with nonzero constant term, s-degree <= max_degree."""
    Z = center(R)
    if Z.period is None:
        return []
    F = Z.ring.base
    return [_raw_central(_from_center_poly(R, Z, h))
            for h in monic_irreducibles(F, max_degree, nonzero_constant=True)]


def _ideal_candidates(R: Ring, bounds: Bounds):
    if bounds.candidates is not None:
        return list(bounds.candidates)
    if isinstance(R, Integers):
        return [PrimeInt(p) for p in range(2, bounds.max_prime + 1) if is_prime(p)]
    if isinstance(R, PolyRing):
        K = R.base
        if isinstance(K, (PrimeField, GaloisField)):
            return [IrreduciblePoly(Element(R, f)) for f in monic_irreducibles(K, bounds.max_degree)]
        if isinstance(K, Rationals):
            b = bounds.max_prime
            return [IrreduciblePoly(Element(R, (Fraction(-a), Fraction(1)))) for a in range(-b, b + 1)]
    if isinstance(R, SkewLaurent):
        return central_irreducibles(R, bounds.max_degree)
    raise UnsupportedRing(f"no ideal enumeration for {R}")


def extreme_set(R: Ring, bounds: Bounds = Bounds()) -> List[RankFunction]:
    """Extreme points of P(R): complete for artinian rings, bounded otherwise."""
    if isinstance(R, MatrixRing):
        return [MatrixScaled(e, R.n) for e in extreme_set(R.base, bounds)]
    if isinstance(R, PolyRing) and isinstance(R.base, MatrixRing):
        # Mat_n(F_q)[t]: unique extensions of the ranks of the center F_q[t]
        M = R.base
        inner = extreme_set(PolyRing(M.base, R.var), bounds)
        return [extend_center_rank(e, M.n, R.var) for e in inner]
    if isinstance(R, Product):
        out = [Pullback(e, ProductProjection(R, 0)) for e in extreme_set(R.left, bounds)]
        out += [Pullback(e, ProductProjection(R, 1)) for e in extreme_set(R.right, bounds)]
        return out
    if R.is_field:
        return [FieldRank(R)]
    if isinstance(R, (IntegerQuotient, PolyQuotient, SkewQuotient)):
        try:
            n = primary_order(R)
        except UnsupportedRing:
            raise UnsupportedRing(f"{R} is not primary; split it with crt_split first")
        return [ArtinianExtreme(R, k) for k in range(1, n + 1)]
    if isinstance(R, SkewLaurent) and not R.is_commutative:
        if R.inner_order is None:
            return [LaurentGeneric(R)]
        out: List[RankFunction] = [LaurentGeneric(R)]
        for d in _ideal_candidates(R, bounds):
            out += [LaurentExtreme(R, d, k) for k in range(1, bounds.max_k + 1)]
        return out
    if isinstance(R, (Integers, PolyRing, SkewLaurent)):
        out = [DedekindGeneric(R)]
        for d in _ideal_candidates(R, bounds):
            out += [DedekindExtreme(R, d, k) for k in range(1, bounds.max_k + 1)]
        return out
    raise UnsupportedRing(f"{R} is not in a classified family")


# -- Mat_n(F_q)[t] -------------------------------------------------------------
def extend_center_rank(rk: RankFunction, n: int, var: str = "t") -> RankFunction:
    """Extend a rank on F_q[x] to Mat_n(F_q)[t] through Mat_n(F_q[t])."""
    S = rk.ring
    if not isinstance(S, PolyRing) or not isinstance(S.base, (PrimeField, GaloisField)):
        raise UnsupportedRing(f"extension needs a rank on F_q[x], got {S}")
    T = PolyRing(S.base, var)
    inner = rk if S.var == var else Pullback(rk, VariableRename(T, S.var))
    R = PolyRing(MatrixRing(S.base, n), var)
    return Pullback(MatrixScaled(inner, n), MatrixPolyIso(R))


def scalar_embedding(R: PolyRing) -> ScalarPolyEmbedding:
    """F_q[t] -> Mat_n(F_q)[t], the inclusion of the center."""
    M = R.base
    if not isinstance(M, MatrixRing):
        raise UnsupportedRing(f"{R} is not Mat_n(K)[t]")
    return ScalarPolyEmbedding(PolyRing(M.base, R.var), M.n)


# -- localization -------------------------------------------------------------
def ore_membership(rk: RankFunction, T: Iterable[Element]) -> bool:
    """True iff rk(t) = 1 for every t in T."""
    return all(eval_element(rk, x) == 1 for x in T)


def extreme_text(rks: Sequence[RankFunction]) -> List[str]:
    return [r.text() for r in rks]
