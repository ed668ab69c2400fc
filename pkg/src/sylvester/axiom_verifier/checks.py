"""Randomized checks of the rank function axioms.

Each check draws witness matrices from a seeded sampler and turns them into
relations: a tuple of matrices plus a judge that reads the rank values of
those matrices and says whether the axiom holds.  A family of ranks is
checked in one pass; ranks that are convex combinations or pullbacks share
atom evaluations through ``linear_form``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..matrix_forms.matrix import RingMatrix
from ..rank_functions.ranks import RankFunction, eval_matrix
from ..ring_core.base import Element, Ring, RingMismatch
from .sampler import MatrixSampler

Judge = Callable[[Sequence, Sequence[RingMatrix], int], Tuple[object, object, bool]]


# -- judges --------------------------------------------------------------
# A judge sees the rank values v of the witnesses w, all scaled by ``one``
# (exact integers over a common denominator, or Fractions with one = 1),
# and returns (lhs, rhs, holds) in the same scale.
def _equal_to(target):
    def judge(v, w, one):
        return v[0], target * one, v[0] == target * one
    return judge


def _product_bound(v, w, one):
    rhs = min(v[0], v[1])
    return v[2], rhs, v[2] <= rhs


def _block_sum(v, w, one):
    return v[2], v[0] + v[1], v[2] == v[0] + v[1]


def _triangular(v, w, one):
    return v[2], v[0] + v[1], v[2] >= v[0] + v[1]


def _dims(v, w, one):
    return [m.cols * one - x for m, x in zip(w, v)]


def _zero_module(v, w, one):
    d = _dims(v, w, one)[0]
    return d, 0, d == 0


def _free_module(v, w, one):
    d = _dims(v, w, one)[0]
    return d, one, d == one


def _module_sum(v, w, one):
    d = _dims(v, w, one)
    return d[2], d[0] + d[1], d[2] == d[0] + d[1]


def _exact_upper(v, w, one):
    d1, d3, d2 = _dims(v, w, one)
    return d2, d1 + d3, d2 <= d1 + d3


def _exact_lower(v, w, one):
    d1, d3, d2 = _dims(v, w, one)
    return d2, d3, d2 >= d3


def _nilpotent_chain(v, w, one):
    """v = rk(a^0), rk(a^1), ..., rk(a^N); b_i = v_i - v_(i+1) nonincreasing, >= 0."""
    b = [v[i] - v[i + 1] for i in range(len(v) - 1)]
    for i, x in enumerate(b):
        if x < 0:
            return x, 0, False
        if i + 1 < len(b) and b[i + 1] > x:
            return x, b[i + 1], False
    return (b[0] if b else 0), (b[-1] if b else 0), True


def _additive(v, w, one):
    return v[2], v[0] + v[1], v[2] == v[0] + v[1]


def _invariant(v, w, one):
    return v[1], v[0], v[1] == v[0]


JUDGES: Dict[str, Judge] = {
    "one": _equal_to(1),
    "zero": _equal_to(0),
    "product": _product_bound,
    "block_sum": _block_sum,
    "triangular": _triangular,
    "zero_module": _zero_module,
    "free_module": _free_module,
    "module_sum": _module_sum,
    "exact_upper": _exact_upper,
    "exact_lower": _exact_lower,
    "nilpotent": _nilpotent_chain,
    "additive": _additive,
    "invariant": _invariant,
}


@dataclass(frozen=True)
class Relation:
    axiom: str
    judge: str
    witnesses: Tuple[RingMatrix, ...]


@dataclass(frozen=True)
class ViolationReport:
    """A concrete counterexample; ``replay`` re-evaluates it from scratch."""

    axiom: str
    relation: str
    rank: str
    witnesses: Tuple[RingMatrix, ...]
    lhs: Fraction
    rhs: Fraction
    trial: int = -1

    def replay(self, rk: RankFunction) -> bool:
        """True iff the violation reproduces for ``rk``."""
        vals = [eval_matrix(rk, W) for W in self.witnesses]
        lhs, rhs, ok = JUDGES[self.relation](vals, self.witnesses, 1)
        return (not ok) and lhs == self.lhs and rhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "relation": self.relation,
            "rank": self.rank,
            "trial": self.trial,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "witnesses": [W.text() for W in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# -- relation generators ---------------------------------------------------
def _split(s: MatrixSampler) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Shapes of two blocks whose block matrix still fits in max_dim."""
    n = s.max_dim
    a1 = s.rng.randint(1, max(1, n - 1))
    a2 = s.rng.randint(1, max(1, n - 1))
    b1 = s.rng.randint(1, max(1, n - a1))
    b2 = s.rng.randint(1, max(1, n - a2))
    return (a1, a2), (b1, b2)


def _lower_triangular(s: MatrixSampler):
    (a1, a2), (b1, b2) = _split(s)
    A = s.matrix(a1, a2)
    B = s.matrix(b1, b2)
    C = s.matrix(b1, a2)
    D = RingMatrix.block([[A, RingMatrix.zeros(s.ring, a1, b2)], [C, B]])
    return A, B, D


def smat_relations(s: MatrixSampler) -> Iterator[Relation]:
    a, b, c = s.dims(), s.dims(), s.dims()
    A, B = s.matrix(a, b), s.matrix(b, c)
    yield Relation("SMat2", "product", (A, B, A @ B))
    (a1, a2), (b1, b2) = _split(s)
    A, B = s.matrix(a1, a2), s.matrix(b1, b2)
    yield Relation("SMat3", "block_sum", (A, B, A.block_diag(B)))
    A, B, D = _lower_triangular(s)
    yield Relation("SMat4", "triangular", (A, B, D))


def smat_fixed(R: Ring) -> Iterator[Relation]:
    yield Relation("SMat1", "one", (RingMatrix.identity(R, 1),))
    yield Relation("SMat1", "zero", (RingMatrix.zeros(R, 1, 1),))


def smod_relations(s: MatrixSampler) -> Iterator[Relation]:
    (a1, a2), (b1, b2) = _split(s)
    A, B = s.matrix(a1, a2), s.matrix(b1, b2)
    yield Relation("SMod2", "module_sum", (A, B, A.block_diag(B)))
    A, B, D = _lower_triangular(s)
    yield Relation("SMod3", "exact_upper", (A, B, D))
    yield Relation("SMod3", "exact_lower", (A, B, D))


def smod_fixed(R: Ring) -> Iterator[Relation]:
    yield Relation("SMod1", "zero_module", (RingMatrix.identity(R, 1),))
    yield Relation("SMod1", "free_module", (RingMatrix.zeros(R, 1, 1),))


def power_chain(a: RingMatrix) -> Tuple[RingMatrix, ...]:
    """I, a, a^2, ... up to and including the first zero power."""
    R = a.ring
    out = [RingMatrix.identity(R, a.rows)]
    p = a
    for _ in range(64):
        out.append(p)
        if p.is_zero():
            return tuple(out)
        p = p @ a
    raise ValueError("matrix is not nilpotent within 64 steps")


def nilpotent_relations(s: MatrixSampler) -> Iterator[Relation]:
    yield Relation("nilpotent", "nilpotent", power_chain(s.nilpotent_matrix(s.dims())))
    x = s.nilpotent_element()
    if x is not None:
        yield Relation("nilpotent", "nilpotent", power_chain(RingMatrix.scalar(x)))


def orthogonal_quadruple(s: MatrixSampler):
    """(A, B, C, D) with CA = A, BD = B, AD = 0, CB = 0."""
    r, c = s.dims(), s.dims()
    C, notC = s.idempotent_pair(r)
    E, D = s.idempotent_pair(c)
    A = C @ s.matrix(r, c) @ E
    B = notC @ s.matrix(r, c) @ D
    return A, B, C, D


def additivity_relations(s: MatrixSampler) -> Iterator[Relation]:
    A, B, _, _ = orthogonal_quadruple(s)
    yield Relation("additivity", "additive", (A, B, A + B))


def invariance_relations(s: MatrixSampler) -> Iterator[Relation]:
    r, c = s.dims(), s.dims()
    A = s.matrix(r, c)
    U = s.invertible(r)
    V = s.invertible(c)
    yield Relation("invariance", "invariant", (A, U @ A @ V))


CHECKS = {
    "smat": (smat_relations, smat_fixed),
    "smod": (smod_relations, smod_fixed),
    "nilpotent": (nilpotent_relations, None),
    "additivity": (additivity_relations, None),
    "invariance": (invariance_relations, None),
}


# -- evaluation ------------------------------------------------------------
@dataclass(frozen=True)
class VerifierConfig:
    trials: int = 500
    max_dim: int = 4
    degree: int = 3
    seed: int = 0


class FamilyEvaluator:
    """Evaluates many ranks on one ring, sharing atom evaluations."""

    def __init__(self, ranks: Sequence[RankFunction]):
        if not ranks:
            raise ValueError("no ranks to evaluate")
        ring = ranks[0].ring
        for r in ranks:
            if r.ring != ring:
                raise RingMismatch("all ranks in a family must share a ring")
        self.ring = ring
        self.ranks = list(ranks)
        self.forms = [r.linear_form() for r in ranks]
        atoms: Dict[RankFunction, None] = {}
        for f in self.forms:
            for a in f:
                atoms.setdefault(a, None)
        self.atoms = list(atoms)
        index = {a: i for i, a in enumerate(self.atoms)}
        # weights as integers over one common denominator
        self.den = math.lcm(*(w.denominator for f in self.forms for w in f.values()))
        self.int_forms = [[(index[a], int(w * self.den)) for a, w in f.items()] for f in self.forms]
        self._memo: Dict[RingMatrix, Dict[RankFunction, Fraction]] = {}
        self._nums: Dict[RingMatrix, Tuple[int, List[int]]] = {}

    def clear(self):
        self._memo.clear()
        self._nums.clear()

    def atom_values(self, W: RingMatrix) -> Dict[RankFunction, Fraction]:
        got = self._memo.get(W)
        if got is None:
            got = {a: eval_matrix(a, W) for a in self.atoms}
            self._memo[W] = got
        return got

    def numerators(self, W: RingMatrix) -> Tuple[int, List[int]]:
        """(L, nums) with rank i taking the value nums[i] / (den * L) on W."""
        got = self._nums.get(W)
        if got is None:
            av = self.atom_values(W)
            vals = [av[a] for a in self.atoms]
            L = math.lcm(*(v.denominator for v in vals))
            nums = [v.numerator * (L // v.denominator) for v in vals]
            got = (L, [sum(w * nums[i] for i, w in f) for f in self.int_forms])
            self._nums[W] = got
        return got

    def values(self, W: RingMatrix) -> List[Fraction]:
        L, nums = self.numerators(W)
        D = self.den * L
        return [Fraction(n, D) for n in nums]

    def scaled(self, witnesses: Sequence[RingMatrix]) -> Tuple[int, List[List[int]]]:
        """(one, per-rank integer values) over a denominator shared by all witnesses."""
        parts = [self.numerators(W) for W in witnesses]
        L = math.lcm(*(p[0] for p in parts))
        cols = [[n * (L // p[0]) for n in p[1]] for p in parts]
        return self.den * L, [list(r) for r in zip(*cols)]


def _trial_seed(seed: int, check: str, trial: int) -> int:
    tag = sum((i + 1) * ord(ch) for i, ch in enumerate(check))
    return (seed * 1_000_003 + tag) * 1_000_033 + trial


def run_family(ranks: Sequence[RankFunction], checks: Iterable[str] = tuple(CHECKS),
               config: VerifierConfig = VerifierConfig(),
               sampler_factory: Optional[Callable[[int], MatrixSampler]] = None
               ) -> Dict[int, List[ViolationReport]]:
    """Run the named checks for every rank; reports keyed by index in ``ranks``."""
    ev = FamilyEvaluator(ranks)
    R = ev.ring
    out: Dict[int, List[ViolationReport]] = {i: [] for i in range(len(ranks))}

    def judge(rel: Relation, trial: int):
        one, per_rank = ev.scaled(rel.witnesses)
        fn = JUDGES[rel.judge]
        for i, vals in enumerate(per_rank):
            lhs, rhs, ok = fn(vals, rel.witnesses, one)
            if not ok:
                out[i].append(ViolationReport(rel.axiom, rel.judge, ev.ranks[i].text(),
                                              rel.witnesses, Fraction(lhs, one),
                                              Fraction(rhs, one), trial))

    for name in checks:
        gen, fixed = CHECKS[name]
        if fixed is not None:
            for rel in fixed(R):
                judge(rel, -1)
        for t in range(config.trials):
            seed = _trial_seed(config.seed, name, t)
            s = (sampler_factory(seed) if sampler_factory else
                 MatrixSampler(R, config.max_dim, seed, config.degree))
            ev.clear()
            for rel in gen(s):
                judge(rel, t)
    ev.clear()
    return out


def _single(rk: RankFunction, name: str, trials: int, seed: int, max_dim: int,
            degree: int) -> List[ViolationReport]:
    cfg = VerifierConfig(trials, max_dim, degree, seed)
    return run_family([rk], (name,), cfg)[0]


def check_smat(rk: RankFunction, trials: int = 500, seed: int = 0, max_dim: int = 4,
               degree: int = 3) -> List[ViolationReport]:
    """SMat1 once; SMat2 (products), SMat3 (block sums), SMat4 (triangular blocks) per trial."""
    return _single(rk, "smat", trials, seed, max_dim, degree)


def check_smod(rk: RankFunction, trials: int = 500, seed: int = 0, max_dim: int = 4,
               degree: int = 3) -> List[ViolationReport]:
    """SMod1 once; SMod2 and SMod3 (through (A 0; C B) presentations) per trial."""
    return _single(rk, "smod", trials, seed, max_dim, degree)


def check_nilpotent_monotone(rk: RankFunction, a: Union[Element, RingMatrix, None] = None,
                             trials: int = 500, seed: int = 0, max_dim: int = 4,
                             degree: int = 3) -> List[ViolationReport]:
    """b_i = rk(a^i) - rk(a^(i+1)) is nonincreasing and nonnegative.

    With ``a`` given only that element (or square matrix) is checked;
    otherwise nilpotent matrices and elements are sampled.
    """
    if a is None:
        return _single(rk, "nilpotent", trials, seed, max_dim, degree)
    M = RingMatrix.scalar(a) if isinstance(a, Element) else a
    if M.rows != M.cols:
        raise ValueError("need a square matrix")
    chain = power_chain(M)
    vals = [eval_matrix(rk, W) for W in chain]
    lhs, rhs, ok = _nilpotent_chain(vals, chain, 1)
    return [] if ok else [ViolationReport("nilpotent", "nilpotent", rk.text(), chain, lhs, rhs)]


def check_orthogonal_additivity(rk: RankFunction, trials: int = 500, seed: int = 0,
                                max_dim: int = 4, degree: int = 3) -> List[ViolationReport]:
    """rk(A + B) = rk(A) + rk(B) for CA = A, BD = B, AD = 0, CB = 0."""
    return _single(rk, "additivity", trials, seed, max_dim, degree)


def check_invertible_invariance(rk: RankFunction, trials: int = 500, seed: int = 0,
                                max_dim: int = 4, degree: int = 3) -> List[ViolationReport]:
    """rk(UAV) = rk(A) for invertible U, V."""
    return _single(rk, "invariance", trials, seed, max_dim, degree)


@dataclass
class SuiteResult:
    ranks: List[str]
    reports: Dict[int, List[ViolationReport]] = field(default_factory=dict)

    @property
    def violations(self) -> List[ViolationReport]:
        return [r for i in sorted(self.reports) for r in self.reports[i]]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_suite(ranks: Sequence[RankFunction], config: VerifierConfig = VerifierConfig(),
                 checks: Iterable[str] = tuple(CHECKS)) -> SuiteResult:
    """All checks on a family of ranks over one ring."""
    reports = run_family(ranks, checks, config)
    return SuiteResult([r.text() for r in ranks], reports)
