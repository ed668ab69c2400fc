import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sylvester.ideal_structure import (InvalidGenerator, NotCentral, build_quotient, crt_split,
                                       factor_generator, ideal_generator, is_central,
                                       parse_descriptor, principal_part,
                                       skew_quotient_from_element)
from sylvester.ring_core import Element, UnsupportedRing, parse_element, parse_ring

Z = parse_ring("Z")
L = parse_ring("GF(4)[t^;frob]")


@given(st.integers(2, 10 ** 6))
def test_integer_factorization_matches_sympy(n):
    fac = factor_generator(Z(n))
    got = {int(d.text().split(":")[1]): e for d, e in fac.factors}
    assert got == sympy.factorint(n)
    assert fac.product() == Z(n)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=2, max_size=9).filter(lambda c: c[-1] == 1),
       st.sampled_from([2, 3]))
def test_polynomial_factorization_matches_sympy(coeffs, p):
    x = sympy.Symbol("x")
    f = sum(c * x ** i for i, c in enumerate(coeffs))
    R = parse_ring(f"GF({p})[x]")
    g = parse_element(R, str(sympy.expand(f)).replace("**", "^"))
    fac = factor_generator(g)
    _, ref = sympy.factor_list(f, modulus=p)
    assert sorted(e for _, e in fac.factors) == sorted(e for _, e in ref)
    assert sorted(d.degree for d, _ in fac.factors) == sorted(sympy.degree(h, x) for h, _ in ref)
    assert fac.product() == g  # g is monic


def test_factorization_product_recovers_generator():
    R = parse_ring("GF(2)[x]")
    g = parse_element(R, "x^5+x^4+1")
    fac = factor_generator(g)
    assert fac.text() == "(irr:x^2+x+1)^1 * (irr:x^3+x+1)^1"
    assert fac.product() == g


def test_laurent_central_factorization():
    fac = factor_generator(parse_element(L, "t^6+t^4+t^2+1"))
    assert fac.text() == "(central:t^2+1)^3"
    with pytest.raises(NotCentral):
        factor_generator(parse_element(L, "t+1"))
    with pytest.raises(NotCentral):
        parse_descriptor("central:t+a", L)


def test_centrality():
    assert is_central(parse_element(L, "t^2"))
    assert not is_central(parse_element(L, "a*t^2"))
    assert not is_central(parse_element(L, "t"))


def test_principal_parts_and_generators():
    assert principal_part(Z(-12)) == Z(12)
    assert ideal_generator([Z(12), Z(18)]) == Z(6)
    assert principal_part(parse_element(L, "t^3+t")) == parse_element(L, "t^2+1")
    g = ideal_generator([parse_element(L, "t^4+1"), parse_element(L, "t^2+1")])
    assert g == parse_element(L, "t^2+1")
    with pytest.raises(InvalidGenerator):
        principal_part(Z(0))
    with pytest.raises(UnsupportedRing):
        principal_part(parse_ring("Z/(8)")(2))


def test_crt_split_and_quotients():
    parts = crt_split(factor_generator(Z(72)))
    assert [str(q.ring) for q in parts] == ["Z/(8)", "Z/(9)"]
    q = build_quotient(parse_descriptor("prime:3", Z), 2)
    assert str(q.ring) == "Z/(9)"
    assert q.projection(Z(10)) == q.ring(1)
    S = skew_quotient_from_element(parse_element(L, "t^4+1"))
    assert str(S) == "GF(4)[t^;frob]/(t^4+1)"


@pytest.mark.parametrize("text", ["prime:2", "prime:7"])
def test_descriptor_text_round_trip(text):
    assert parse_descriptor(text, Z).text() == text


def test_descriptor_rejects_composites():
    with pytest.raises(Exception):
        parse_descriptor("prime:6", Z)
    with pytest.raises(Exception):
        parse_descriptor("irr:x^2+1", parse_ring("GF(2)[x]"))


def test_element_of_descriptor():
    d = parse_descriptor("irr:x^2+x+1", parse_ring("GF(2)[x]"))
    assert isinstance(d.element_in(d.ring), Element)
    assert d.degree == 2
