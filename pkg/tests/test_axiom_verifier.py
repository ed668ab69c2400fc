import json
from dataclasses import dataclass
from fractions import Fraction

import pytest

from sylvester.axiom_verifier import (MatrixSampler, VerifierConfig, check_invertible_invariance,
                                      check_nilpotent_monotone, check_orthogonal_additivity,
                                      check_smat, check_smod, orthogonal_quadruple,
                                      ring_idempotents, verify_suite)
from sylvester.matrix_forms import RingMatrix
from sylvester.rank_functions import Bounds, Convex, RankFunction, extreme_set, parse_rank
from sylvester.ring_core import Ring, parse_element, parse_ring

SMALL = dict(trials=40, seed=3)


@dataclass(frozen=True)
class NonzeroRows(RankFunction):
    """Not a rank function: counts nonzero rows."""

    ring: Ring

    def evaluate(self, A):
        rows = sum(1 for r in A.data if any(not self.ring.is_zero_value(x) for x in r))
        return Fraction(min(rows, A.cols))

    def text(self):
        return "nonzero-rows"


@dataclass(frozen=True)
class Flipped(RankFunction):
    """Not a rank function: 1 - art(1) on 1x1 matrices, so b-sequences increase."""

    ring: Ring

    def evaluate(self, A):
        base = parse_rank("art(1)", self.ring)(A)
        return Fraction(min(A.rows, A.cols)) - base if A.rows == A.cols == 1 else base

    def text(self):
        return "flipped"


@pytest.mark.parametrize("spec,bounds", [
    ("GF(2)[t]/(t^3)", Bounds()), ("Z", Bounds()), ("GF(4)[t^;frob]", Bounds(max_degree=2)),
    ("Mat(2,GF(2))", Bounds()), ("GF(2)[t]/(t^2) x Z/(9)", Bounds()),
])
def test_extremes_pass_every_check(spec, bounds):
    R = parse_ring(spec)
    for rk in extreme_set(R, bounds):
        for check in (check_smat, check_smod, check_orthogonal_additivity,
                      check_invertible_invariance):
            assert check(rk, **SMALL) == [], (rk.text(), check.__name__)
        assert check_nilpotent_monotone(rk, **SMALL) == []


def test_nonzero_rows_is_caught():
    R = parse_ring("GF(3)")
    rk = NonzeroRows(R)
    bad = check_invertible_invariance(rk, **SMALL) + check_smat(rk, **SMALL)
    assert bad
    for v in bad:
        assert v.replay(rk)
        json.loads(v.to_json())


def test_scaled_rank_fails_smat1():
    R = parse_ring("GF(2)")
    rk = Convex.unchecked(((Fraction(2), parse_rank("field", R)),))
    bad = check_smat(rk, trials=1)
    assert any(v.axiom == "SMat1" for v in bad)


def test_flipped_rank_fails_nilpotent_check():
    R = parse_ring("GF(2)[t]/(t^3)")
    t = parse_element(R, "t")
    bad = check_nilpotent_monotone(Flipped(R), t)
    assert len(bad) == 1 and bad[0].axiom == "nilpotent"
    assert check_nilpotent_monotone(parse_rank("art(2)", R), t) == []


def test_suite_is_deterministic():
    R = parse_ring("Z")
    fam = [NonzeroRows(R), parse_rank("ded(prime:2,k=1)", R)]
    cfg = VerifierConfig(trials=20, seed=7)
    a = verify_suite(fam, cfg)
    b = verify_suite(fam, cfg)
    assert [v.to_dict() for v in a.violations] == [v.to_dict() for v in b.violations]
    assert a.violations and not a.reports.get(1)


def test_samples_respect_max_dim():
    R = parse_ring("GF(4)[t^;frob]")
    s = MatrixSampler(R, max_dim=3, seed=1)
    for _ in range(30):
        A = s.structured_matrix(s.dims(), s.dims())
        assert A.rows <= 3 and A.cols <= 3


def test_invertible_pairs_are_inverse():
    for spec in ("Z", "GF(2)[t]/(t^3)", "GF(4)[t^;frob]", "Mat(2,GF(2))"):
        R = parse_ring(spec)
        s = MatrixSampler(R, seed=2)
        for n in (1, 2, 4):
            U, V = s.invertible_pair(n)
            assert U @ V == RingMatrix.identity(R, n)
            assert V @ U == RingMatrix.identity(R, n)


def test_idempotent_pairs():
    for spec in ("GF(2)[t]/(t^2) x Z/(9)", "Mat(2,GF(3))", "Z"):
        R = parse_ring(spec)
        for e in ring_idempotents(R):
            assert R.mul(e, e) == e
        s = MatrixSampler(R, seed=4)
        E, F = s.idempotent_pair(3)
        assert E @ E == E and F @ F == F and E @ F == RingMatrix.zeros(R, 3, 3)


def test_orthogonal_quadruple_relations():
    R = parse_ring("GF(2)[t]/(t^2) x Z/(9)")
    s = MatrixSampler(R, max_dim=3, seed=5)
    for _ in range(10):
        A, B, C, D = orthogonal_quadruple(s)
        assert C @ A == A and B @ D == B
        assert (A @ D).is_zero() and (C @ B).is_zero()
