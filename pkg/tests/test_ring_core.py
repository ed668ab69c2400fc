import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sylvester.ring_core import (NotAUnit, ParseError, RingMismatch, arith, center, finite_field,
                                 inner_order, is_prime, parse_element, parse_ring, prime_power,
                                 try_invert, valuation)

SPECS = [
    "GF(2)", "GF(4)", "GF(9)", "GF(5)", "Z", "Q", "Q(x)", "Z/(12)", "Z/(27)",
    "GF(3)[x]", "GF(2)[t]/(t^3)", "GF(2)[t]/(t^3+t+1)", "GF(4)[t;frob]", "GF(4)[t^;frob]",
    "GF(8)[t^;frob^2]", "Q(x)[t^;shift]", "Mat(2,GF(3))", "GF(2)[t]/(t^2) x Z/(9)",
    "GF(4)[t^;frob]/(t^2+1)",
]

rings = st.sampled_from(SPECS).map(parse_ring)
seeds = st.integers(0, 2 ** 32)


def elems(R, seed, n=3):
    rng = random.Random(seed)
    return [R.random_element(rng, 2) for _ in range(n)]


@settings(max_examples=120, deadline=None)
@given(rings, seeds)
def test_ring_axioms(R, seed):
    a, b, c = elems(R, seed)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + R.zero() == a and a * R.one() == a and R.one() * a == a
    assert a - a == R.zero()
    if R.is_commutative:
        assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(rings, seeds)
def test_element_text_round_trip(R, seed):
    for x in elems(R, seed):
        assert parse_element(R, str(x)) == x


@pytest.mark.parametrize("spec", SPECS)
def test_ring_text_round_trip(spec):
    R = parse_ring(spec)
    assert parse_ring(str(R)) == R


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 25, 27])
def test_finite_field_inverses(q):
    K = finite_field(q)
    elements = [K.element(v) for v in K.all_values()]
    assert len(elements) == q
    for x in elements:
        if x != K.zero():
            assert x * x.inverse() == K.one()
    # Frobenius x -> x^p is additive
    p = prime_power(q)[0]
    for x in elements[:6]:
        for y in elements[:6]:
            assert (x + y) ** p == x ** p + y ** p


def test_skew_commutation_rule():
    R = parse_ring("GF(4)[t^;frob]")
    a, t = parse_element(R, "a"), parse_element(R, "t")
    assert t * a == (a * a) * t
    assert t * t ** -1 == R.one()
    assert inner_order(R) == 2
    assert inner_order(parse_ring("GF(8)[t^;frob]")) == 3
    assert inner_order(parse_ring("Q(x)[t^;shift]")) is None


def test_shift_twist():
    R = parse_ring("Q(x)[t^;shift]")
    t, x = parse_element(R, "t"), parse_element(R, "x")
    assert t * x == (x + 1) * t
    assert t ** -1 * x == (x - 1) * t ** -1


def test_center_descriptions():
    assert center(parse_ring("GF(8)[t^;frob]")).description() == "GF(2)[s^] via s -> t^3"
    Z = center(parse_ring("GF(4)[t^;frob]"))
    assert str(Z.ring) == "GF(2)[s^]" and Z.period == 2
    assert center(parse_ring("Q(x)[t^;shift]")).period is None


def test_valuation_and_units():
    R = parse_ring("Z/(8)")
    assert valuation(R(4)) == (2, R(1))
    m, u = valuation(R(6))
    assert m == 1 and u * R(2) == R(6)
    with pytest.raises(NotAUnit):
        try_invert(R(2))
    assert try_invert(R(3)) * R(3) == R(1)


@given(st.integers(-50, 2000))
def test_prime_helpers_against_sympy(n):
    assert is_prime(n) == sympy.isprime(n)
    f = sympy.factorint(n) if n >= 2 else {}
    want = next(iter(f.items())) if len(f) == 1 else None
    assert prime_power(n) == want


@pytest.mark.parametrize("text", ["GF(6)", "GF(2)[t", "Z/(0)", "Mat(0,GF(2))", "GF(2)[t]/(t^2"])
def test_parse_errors_have_positions(text):
    with pytest.raises(ParseError) as info:
        parse_ring(text)
    assert 0 <= info.value.position <= len(text)


def test_mixed_ring_arithmetic_rejected():
    a = parse_ring("Z/(8)")(3)
    b = parse_ring("Z/(9)")(3)
    with pytest.raises(RingMismatch):
        arith("add", a, b)


def test_rational_functions_normalize():
    K = parse_ring("Q(x)")
    f = parse_element(K, "(x^2-1)/(2*x-2)")
    assert f == parse_element(K, "x/2+1/2")
    assert f * parse_element(K, "2/(x+1)") == K.one()
    assert parse_element(K, "3/6") == parse_element(K, "1/2")
