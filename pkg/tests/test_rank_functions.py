import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from sylvester.axiom_verifier import MatrixSampler, random_convex_family
from sylvester.matrix_forms import RingMatrix
from sylvester.rank_functions import (ArtinianExtreme, Bounds, Convex, DedekindExtreme,
                                      DedekindGeneric, dim_module, eval_element, eval_matrix,
                                      extreme_set, flatten_blocks, lattice_rank, morita_inverse,
                                      morita_transfer, ore_membership, parse_rank,
                                      product_combine, representation_rank)
from sylvester.rank_functions.operations import ModulePresentation
from sylvester.ideal_structure import parse_descriptor
from sylvester.ring_core import ParseError, RingMismatch, UnsupportedRing, parse_ring

int_grids = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def smith_valuations(rows, p):
    """p-adic valuations of the integer Smith invariants (None for zeros), via sympy."""
    S = smith_normal_form(Matrix(rows), domain=ZZ)
    out = []
    for i in range(min(S.shape)):
        d = int(S[i, i])
        if d == 0:
            out.append(None)
            continue
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        out.append(v)
    return out


def reference_rank(vals, k):
    return sum((Fraction(k - v, k) for v in vals if v is not None and v < k), Fraction(0))


@settings(max_examples=120, deadline=None)
@given(int_grids, st.sampled_from([2, 3, 5]), st.integers(1, 3))
def test_dedekind_ranks_over_z_match_sympy_smith(rows, p, k):
    Z = parse_ring("Z")
    A = RingMatrix.from_values(Z, rows, len(rows[0]))
    rk = DedekindExtreme(Z, parse_descriptor(f"prime:{p}", Z), k)
    assert eval_matrix(rk, A) == reference_rank(smith_valuations(rows, p), k)
    assert eval_matrix(DedekindGeneric(Z), A) == Matrix(rows).rank()


@settings(max_examples=120, deadline=None)
@given(int_grids, st.sampled_from([(2, 3), (3, 2), (5, 2)]))
def test_artinian_ranks_over_z_mod_pn(rows, pn):
    """rk_k on Z/(p^n) is ded(p, k) of any integer lift."""
    p, n = pn
    Q = parse_ring(f"Z/({p ** n})")
    A = RingMatrix.from_values(Q, [[x % p ** n for x in r] for r in rows], len(rows[0]))
    vals = smith_valuations(rows, p)
    for k in range(1, n + 1):
        want = reference_rank(vals, k)
        rk = ArtinianExtreme(Q, k)
        assert rk.evaluate(A) == want
        assert rk.evaluate(A, method="diagonal") == want
        assert lattice_rank(Q, k, A) == want


@pytest.mark.parametrize("spec", ["GF(2)[t]/(t^4)", "GF(3)[t]/((t^2+1)^2)", "GF(4)[t]/(t^3)",
                                  "GF(4)[t^;frob]/((t^2+1)^2)"])
def test_representation_and_diagonal_agree(spec):
    R = parse_ring(spec)
    s = MatrixSampler(R, max_dim=4, seed=21)
    n = len(extreme_set(R))
    for _ in range(40):
        A = s.structured_matrix(s.dims(), s.dims())
        for k in range(1, n + 1):
            rk = ArtinianExtreme(R, k)
            assert rk.evaluate(A) == rk.evaluate(A, method="diagonal")
            assert representation_rank(R, k, A) == rk.evaluate(A)


def test_rank_of_nilpotent_powers():
    R = parse_ring("GF(2)[t]/(t^3)")
    rk2 = parse_rank("art(2)", R)
    t = R.gens()["t"]
    assert [eval_element(rk2, t ** i) for i in range(4)] == [1, Fraction(1, 2), 0, 0]


@pytest.mark.parametrize("spec,bounds", [
    ("GF(2)[t]/(t^3)", Bounds()), ("Z/(8)", Bounds()), ("Z", Bounds()), ("GF(2)[x]", Bounds()),
    ("GF(4)[t^;frob]", Bounds(max_degree=2, max_k=2)), ("Mat(2,GF(3))", Bounds()),
    ("GF(4)", Bounds()), ("GF(2)[t]/(t^2) x Z/(9)", Bounds()), ("Q(x)[t^;shift]", Bounds()),
    ("Mat(2,GF(2))[t]", Bounds()), ("GF(8)[t^;frob]", Bounds(max_degree=3, max_k=1)),
])
def test_rank_text_round_trip(spec, bounds):
    R = parse_ring(spec)
    ex = extreme_set(R, bounds)
    fam = ex + (random_convex_family(ex, 5, seed=2) if len(ex) > 1 else [])
    for rk in fam:
        again = parse_rank(rk.text(), R)
        assert again.text() == rk.text()


def test_extreme_counts():
    assert len(extreme_set(parse_ring("GF(2)[t]/(t^5)"))) == 5
    assert len(extreme_set(parse_ring("Z/(243)"))) == 5
    assert [e.text() for e in extreme_set(parse_ring("Q(x)[t^;shift]"))] == ["lau0"]
    with pytest.raises(UnsupportedRing):
        extreme_set(parse_ring("Z/(12)"))


def test_dim_module():
    Z = parse_ring("Z")
    rk = parse_rank("ded(prime:2,k=2)", Z)
    assert dim_module(rk, ModulePresentation.cyclic(Z(4))) == 1
    assert dim_module(rk, ModulePresentation.cyclic(Z(2))) == Fraction(1, 2)
    assert dim_module(rk, ModulePresentation.cyclic(Z(3))) == 0
    M = ModulePresentation.cyclic(Z(2)).direct_sum(ModulePresentation.free(Z, 2))
    assert dim_module(rk, M) == Fraction(5, 2)


def test_morita_transfer_and_inverse():
    R = parse_ring("GF(2)[t]/(t^2)")
    rk = parse_rank("art(2)", R)
    M = morita_transfer(rk, 2)
    s = MatrixSampler(M.ring, max_dim=3, seed=5)
    for _ in range(20):
        A = s.matrix(s.dims(), s.dims())
        assert eval_matrix(M, A) == eval_matrix(rk, flatten_blocks(A)) / 2
    back = morita_inverse(M)
    s = MatrixSampler(R, max_dim=3, seed=6)
    for _ in range(20):
        A = s.matrix(s.dims(), s.dims())
        assert eval_matrix(back, A) == eval_matrix(rk, A)


def test_product_combine_weights():
    P = parse_ring("GF(2)[t]/(t^2) x Z/(9)")
    rk = product_combine(parse_rank("art(1)", P.left), parse_rank("art(2)", P.right),
                         Fraction(1, 3))
    one_zero = P.element((P.left.one_value, P.right.zero_value))
    assert eval_element(rk, one_zero) == Fraction(1, 3)
    assert eval_element(rk, P.one()) == 1
    with pytest.raises(ValueError):
        product_combine(rk.left, rk.right, Fraction(3, 2))


def test_convex_validation():
    Z = parse_ring("Z")
    a, b = parse_rank("ded0", Z), parse_rank("ded(prime:2,k=1)", Z)
    with pytest.raises(ValueError):
        Convex(((Fraction(1, 2), a), (Fraction(1, 3), b)))
    with pytest.raises(ValueError):
        Convex(((Fraction(3, 2), a), (Fraction(-1, 2), b)))
    with pytest.raises(RingMismatch):
        Convex(((Fraction(1, 2), a), (Fraction(1, 2), parse_rank("art(1)", parse_ring("Z/(4)")))))


def test_ore_membership():
    Z = parse_ring("Z")
    rk = parse_rank("ded(prime:2,k=1)", Z)
    assert ore_membership(rk, [Z(3), Z(5)])
    assert not ore_membership(rk, [Z(3), Z(6)])


@pytest.mark.parametrize("text", ["art(0)", "art(9)", "ded(prime:4,k=1)", "convex(1/2*art(1))",
                                  "nonsense", "art(1"])
def test_bad_rank_text(text):
    with pytest.raises((ParseError, ValueError, UnsupportedRing)):
        parse_rank(text, parse_ring("GF(2)[t]/(t^3)") if "art" in text else parse_ring("Z"))


def test_rank_is_bounded_by_size():
    rng = random.Random(3)
    R = parse_ring("GF(4)[t^;frob]")
    s = MatrixSampler(R, seed=rng.randrange(100))
    for rk in extreme_set(R, Bounds(max_degree=2)):
        for _ in range(10):
            A = s.matrix(s.dims(), s.dims())
            v = eval_matrix(rk, A)
            assert 0 <= v <= min(A.rows, A.cols)
