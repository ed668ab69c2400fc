from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sylvester.decomposition import (BSequence, NotARankFunction, RankOracle, b_sequence,
                                     coefficients_from_b, decompose_artinian, decompose_global,
                                     decompose_product)
from sylvester.ideal_structure import parse_descriptor
from sylvester.rank_functions import Convex, extreme_set, parse_rank, product_combine
from sylvester.ring_core import UnsupportedRing, parse_ring

Z = parse_ring("Z")
PRIMES = [parse_descriptor(f"prime:{p}", Z) for p in (2, 3)]


def weights(n):
    """Strategy: n positive rationals summing to 1."""
    return st.lists(st.integers(1, 20), min_size=n, max_size=n).map(
        lambda xs: [Fraction(x, sum(xs)) for x in xs])


@settings(max_examples=80, deadline=None)
@given(weights(4))
def test_artinian_weights_recovered(ws):
    R = parse_ring("GF(2)[t]/(t^4)")
    ex = extreme_set(R)
    rk = Convex(tuple(zip(ws, ex)))
    res = decompose_artinian(RankOracle.of(rk))
    assert {k: c for (_, k), c in res.coefficients.items()} == {k + 1: w for k, w in enumerate(ws)}
    assert res.exact and res.mass_balance() == 1


@settings(max_examples=60, deadline=None)
@given(weights(3))
def test_global_weights_recovered(ws):
    rk = Convex(((ws[0], parse_rank("ded0", Z)), (ws[1], parse_rank("ded(prime:2,k=2)", Z)),
                 (ws[2], parse_rank("ded(prime:3,k=1)", Z))))
    res = decompose_global(RankOracle.of(rk), PRIMES, depth=3, complete=True)
    assert res.coefficients == {("prime:2", 2): ws[1], ("prime:3", 1): ws[2]}
    assert res.c0 == (ws[0], ws[0])
    assert res.exact and res.residual == 0


def test_b_sequence_values():
    rk = parse_rank("ded(prime:2,k=2)", Z)
    b = b_sequence(RankOracle.of(rk), Z(2), 3)
    assert b.values == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert b.is_monotone
    cs, tail = coefficients_from_b(b)
    assert cs == [(1, 0), (2, 1), (3, 0)] and tail == 0


def test_shallow_depth_leaves_tail():
    rk = parse_rank("ded(prime:2,k=3)", Z)
    res = decompose_global(RankOracle.of(rk), PRIMES, depth=2, complete=True)
    assert not res.exact
    assert res.residual > 0
    assert res.mass_balance() == 1


def test_incomplete_candidates_never_exact():
    rk = parse_rank("convex(1/2*ded0, 1/2*ded(prime:5,k=1))", Z)
    res = decompose_global(RankOracle.of(rk), PRIMES, depth=3, complete=False)
    assert not res.exact
    # the prime 5 mass hides inside the rk_0 interval
    assert res.c0 == (1, 1)


def test_non_monotone_b_sequence_rejected():
    b = BSequence("x", (Fraction(1, 3), Fraction(1, 2)))
    assert not b.is_monotone
    with pytest.raises(NotARankFunction):
        coefficients_from_b(b)


def test_bogus_oracles_rejected():
    too_big = RankOracle(Z, lambda A: Fraction(2), "two")
    with pytest.raises(NotARankFunction):
        decompose_global(too_big, PRIMES, depth=2)
    floaty = RankOracle(Z, lambda A: 0.5, "float")
    with pytest.raises(NotARankFunction):
        floaty.element(Z(2))
    # rk(2) = 1/2, rk(4) = 1/2 gives b = (1/2, 0), then rk(8) = 0 gives b_2 = 1/2 > b_1
    table = {1: Fraction(1), 2: Fraction(1, 2), 4: Fraction(1, 2), 8: Fraction(0)}
    odd = RankOracle(Z, lambda A: table.get(abs(A.data[0][0]), Fraction(1)), "odd")
    with pytest.raises(NotARankFunction):
        decompose_global(odd, PRIMES[:1], depth=2)


def test_duplicate_candidates_rejected():
    with pytest.raises(ValueError):
        decompose_global(RankOracle.of(parse_rank("ded0", Z)), PRIMES + PRIMES[:1], depth=2)


def test_product_split():
    P = parse_ring("GF(2)[t]/(t^2) x Z/(9)")
    rk = product_combine(parse_rank("art(2)", P.left), parse_rank("art(1)", P.right),
                         Fraction(2, 7))
    lam, o1, o2 = decompose_product(RankOracle.of(rk))
    assert lam == Fraction(2, 7)
    assert decompose_artinian(o1).coefficients == {("radical:t", 2): 1}
    assert decompose_artinian(o2).coefficients == {("radical:3", 1): 1}
    edge = product_combine(parse_rank("art(2)", P.left), parse_rank("art(1)", P.right), 1)
    lam, o1, o2 = decompose_product(RankOracle.of(edge))
    assert lam == 1 and o2 is None
    with pytest.raises(UnsupportedRing):
        decompose_product(RankOracle.of(parse_rank("ded0", Z)))


def test_json_shape():
    rk = parse_rank("convex(1/2*ded(prime:2,k=1), 1/2*ded0)", Z)
    res = decompose_global(RankOracle.of(rk), PRIMES, depth=3, complete=True)
    assert res.to_dict() == {"coeffs": [{"ideal": "prime:2", "k": 1, "c": "1/2"}],
                             "c0": ["1/2", "1/2"], "residual": "0", "exact": True}
