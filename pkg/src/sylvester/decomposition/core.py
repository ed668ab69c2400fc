"""Recover extreme-point coefficients of a rank function from evaluations.

The b-sequence at an ideal m = (g) is b_k = dim(R/m^(k+1)) - dim(R/m^k),
with dim(R/m^k) = 1 - rk(g^k).  Weights are c_k = k (b_(k-1) - b_k); on an
artinian ring of nilpotency n the last weight closes as c_n = n b_(n-1).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..ideal_structure.ideals import Descriptor
from ..matrix_forms.matrix import RingMatrix
from ..rank_functions.ranks import RankFunction, eval_matrix, primary_order
from ..ring_core.base import AlgebraError, Element, Ring, UnsupportedRing
from ..ring_core.composite import Product
from ..ring_core.homs import ProductInjection


class NotARankFunction(AlgebraError, ValueError):
    """Oracle values contradict the rank function axioms."""


@dataclass(frozen=True)
class RankOracle:
    """Black-box exact evaluator on matrices over ``ring``."""

    ring: Ring
    evaluator: Callable[[RingMatrix], Fraction] = field(compare=False)
    label: str = "oracle"

    @classmethod
    def of(cls, rk: RankFunction) -> "RankOracle":
        return cls(rk.ring, lambda A: eval_matrix(rk, A), rk.text())

    def __call__(self, A: RingMatrix) -> Fraction:
        v = self.evaluator(A)
        if not isinstance(v, (int, Fraction)):
            raise NotARankFunction(f"{self.label} returned non-rational {v!r}")
        v = Fraction(v)
        if v < 0 or v > min(A.rows, A.cols):
            raise NotARankFunction(f"{self.label} returned {v} on a {A.rows}x{A.cols} matrix")
        return v

    def element(self, x: Element) -> Fraction:
        return self(RingMatrix(self.ring, 1, 1, ((x.value,),)))


@dataclass(frozen=True)
class BSequence:
    ideal: str
    values: Tuple[Fraction, ...]
    nilpotency: Optional[int] = None

    @property
    def depth(self) -> int:
        return len(self.values) - 1

    def violations(self) -> List[str]:
        out = []
        for i, b in enumerate(self.values):
            if b < 0:
                out.append(f"b_{i} = {b} < 0")
        for i in range(len(self.values) - 1):
            if self.values[i] < self.values[i + 1]:
                out.append(f"b_{i} = {self.values[i]} < b_{i + 1} = {self.values[i + 1]}")
        return out

    @property
    def is_monotone(self) -> bool:
        return not self.violations()


def b_sequence(oracle: RankOracle, g: Element, depth: int, ideal: str = "",
               nilpotency: Optional[int] = None) -> BSequence:
    """b_0..b_depth at the ideal generated by g."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    dims = [Fraction(0)]
    power = oracle.ring.one()
    for _ in range(depth + 1):
        power = power * g
        v = oracle.element(power)
        if v > 1:
            raise NotARankFunction(f"{oracle.label} gives rank {v} > 1 on {power}")
        dims.append(1 - v)
    values = tuple(dims[k + 1] - dims[k] for k in range(depth + 1))
    return BSequence(ideal or str(g), values, nilpotency)


def coefficients_from_b(b: BSequence) -> Tuple[List[Tuple[int, Fraction]], Fraction]:
    """([(k, c_k)], tail mass depth * b_depth); artinian sequences close at c_n."""
    bad = b.violations()
    if bad:
        raise NotARankFunction("b-sequence not nonincreasing and nonnegative: " + "; ".join(bad))
    vals = b.values
    d = b.depth
    if b.nilpotency is not None and d + 1 >= b.nilpotency:
        n = b.nilpotency
        cs = [(k, k * (vals[k - 1] - vals[k])) for k in range(1, n)]
        cs.append((n, n * vals[n - 1]))
        return cs, Fraction(0)
    cs = [(k, k * (vals[k - 1] - vals[k])) for k in range(1, d + 1)]
    return cs, d * vals[d]


@dataclass(frozen=True)
class DecompositionResult:
    coefficients: Dict[Tuple[str, int], Fraction]
    c0: Optional[Tuple[Fraction, Fraction]]
    residual: Fraction
    exact: bool
    tail_mass: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def attributed(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def mass_balance(self) -> Fraction:
        """attributed + midpoint(c0) + residual (always 1)."""
        mid = (self.c0[0] + self.c0[1]) / 2 if self.c0 else Fraction(0)
        return self.attributed + mid + self.residual

    def to_dict(self) -> dict:
        return {
            "coeffs": [{"ideal": i, "k": k, "c": str(c)}
                       for (i, k), c in sorted(self.coefficients.items(), key=_key)],
            "c0": None if self.c0 is None else [str(self.c0[0]), str(self.c0[1])],
            "residual": str(self.residual),
            "exact": self.exact,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _key(item):
    (ideal, k), _ = item
    return (ideal, k)


def decompose_artinian(oracle: RankOracle) -> DecompositionResult:
    """Exact weights on rk_1..rk_n for a primary artinian ring."""
    R = oracle.ring
    n = primary_order(R)
    c = Element(R, R.radical_generator_value())
    label = f"radical:{c}"
    b = b_sequence(oracle, c, n - 1, label, nilpotency=n)
    cs, _ = coefficients_from_b(b)
    total = sum(v for _, v in cs)
    if total != 1:
        raise NotARankFunction(f"weights sum to {total}, not 1")
    return DecompositionResult({(label, k): v for k, v in cs if v}, None, Fraction(0), True)


def decompose_global(oracle: RankOracle, candidates: Sequence[Descriptor], depth: int,
                     complete: bool = False) -> DecompositionResult:
    """Weights at candidate maximal ideals up to depth, plus the rk_0 interval.

    ``complete`` asserts that the candidates cover the support; only then can
    the result be flagged exact.
    """
    if len(set(candidates)) != len(candidates):
        raise ValueError("candidate ideals must be pairwise distinct")
    R = oracle.ring
    coeffs: Dict[Tuple[str, int], Fraction] = {}
    tails: Dict[str, Fraction] = {}
    for d in candidates:
        if d.ring != R:
            raise UnsupportedRing(f"{d.text()} is not an ideal of {R}")
        b = b_sequence(oracle, d.element_in(R), depth, d.text())
        cs, tail = coefficients_from_b(b)
        for k, v in cs:
            if v:
                coeffs[(d.text(), k)] = v
        tails[d.text()] = tail
    A = sum(coeffs.values(), Fraction(0))
    T = sum(tails.values(), Fraction(0))
    if A > 1:
        raise NotARankFunction(f"attributed mass {A} exceeds 1")
    c0 = (1 - A - T, 1 - A)
    return DecompositionResult(coeffs, c0, T / 2, complete and T == 0, tails)


def decompose_product(oracle: RankOracle):
    """(lam, oracle on R1 or None, oracle on R2 or None)."""
    P = oracle.ring
    if not isinstance(P, Product):
        raise UnsupportedRing(f"{P} is not a product ring")
    lams = []
    for i in (0, 1):
        e = ProductInjection(P, i)
        lams.append(oracle.element(Element(P, e.map_value(P.component(i).one_value))))
    if lams[0] + lams[1] != 1:
        raise NotARankFunction(f"rk((1,0)) + rk((0,1)) = {lams[0] + lams[1]}")
    comps = []
    for i in (0, 1):
        if lams[i] == 0:
            comps.append(None)
            continue
        inj = ProductInjection(P, i)
        lam = lams[i]
        comps.append(RankOracle(P.component(i),
                                (lambda inj, lam: lambda B: oracle(inj.map_matrix(B)) / lam)(inj, lam),
                                f"{oracle.label}[{i}]"))
    return lams[0], comps[0], comps[1]
