import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from sylvester.axiom_verifier import MatrixSampler
from sylvester.matrix_forms import (RingMatrix, diagonalize_local_artinian, diagonalize_skew,
                                    local_valuations, parse_matrix, rank_mod_p, smith_form,
                                    verify_certificate)
from sylvester.ring_core import parse_ring

int_grids = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def padic(x, p):
    v = 0
    while x and x % p == 0:
        x //= p
        v += 1
    return v if x else None


@settings(max_examples=150, deadline=None)
@given(int_grids)
def test_smith_over_z_matches_sympy(rows):
    Z = parse_ring("Z")
    A = RingMatrix.from_values(Z, rows, len(rows[0]))
    cert = smith_form(A)
    assert verify_certificate(cert)
    ours = [abs(d.value) for d in cert.diagonal]
    ref = smith_normal_form(Matrix(rows), domain=ZZ)
    theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    assert ours == theirs
    # divisibility chain
    for a, b in zip(ours, ours[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)


@settings(max_examples=150, deadline=None)
@given(int_grids, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_sympy(rows, p):
    ref = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p))
    assert rank_mod_p([list(r) for r in rows], p) == ref.rank()


@settings(max_examples=100, deadline=None)
@given(int_grids, st.sampled_from([(2, 3), (3, 2), (5, 2)]))
def test_local_valuations_match_integer_smith(rows, pn):
    """Over Z/(p^n) the diagonal valuations are the p-adic ones of the Smith form, capped."""
    p, n = pn
    Q = parse_ring(f"Z/({p ** n})")
    A = RingMatrix.from_values(Q, [[x % p ** n for x in r] for r in rows], len(rows[0]))
    cert = diagonalize_local_artinian(A)
    assert verify_certificate(cert)
    ours = sorted(Q.valuation_value(d.value)[0] for d in cert.diagonal)
    ref = smith_normal_form(Matrix(rows), domain=ZZ)
    want = []
    for i in range(min(ref.shape)):
        v = padic(int(ref[i, i]), p)
        want.append(float("inf") if v is None or v >= n else v)
    assert ours == sorted(want)
    assert sorted(local_valuations(Q, A.data, A.cols)) == sorted(want)


@pytest.mark.parametrize("spec", ["GF(4)[t^;frob]", "GF(4)[t;frob]", "GF(8)[t^;frob^2]",
                                  "GF(9)[t;frob]", "Q(x)[t^;shift]"])
def test_skew_certificates_replay(spec):
    R = parse_ring(spec)
    s = MatrixSampler(R, max_dim=3, seed=11, degree=2)
    for _ in range(15):
        A = s.structured_matrix(s.dims(), s.dims())
        cert = diagonalize_skew(A)
        assert verify_certificate(cert)
        D = cert.replay()
        assert all(D.data[i][j] == R.zero_value
                   for i in range(D.rows) for j in range(D.cols) if i != j)


def test_smith_over_polynomials():
    R = parse_ring("GF(3)[x]")
    A = parse_matrix("x^2+1, x; x, 1", R)
    cert = smith_form(A)
    assert verify_certificate(cert)
    assert [str(d) for d in cert.diagonal] == ["1", "1"]
    B = parse_matrix("x, 0; 0, x^2", R)
    assert [str(d) for d in smith_form(B).diagonal] == ["x", "x^2"]


def test_tampered_certificate_rejected():
    Z = parse_ring("Z")
    A = parse_matrix("2, 4; 6, 8", Z)
    cert = smith_form(A)
    bad = type(cert)(cert.input, cert.p_ops, cert.q_ops,
                     (cert.diagonal[0], cert.diagonal[1] * Z(3)), cert.t_shift)
    assert not verify_certificate(bad)


def test_matrix_text_and_json_round_trip():
    R = parse_ring("GF(2)[t]/(t^3)")
    A = parse_matrix("t^2+1, 0; t, 1", R)
    assert parse_matrix(A.text(), R) == A
    js = '{"ring": "GF(2)[t]/(t^3)", "rows": [["t^2+1", "0"], ["t", "1"]]}'
    assert parse_matrix(js, R) == A


def test_matrix_product_associates():
    R = parse_ring("GF(4)[t^;frob]")
    s = MatrixSampler(R, seed=3)
    rng = random.Random(1)
    for _ in range(10):
        a, b, c, d = (rng.randint(1, 3) for _ in range(4))
        A, B, C = s.matrix(a, b), s.matrix(b, c), s.matrix(c, d)
        assert (A @ B) @ C == A @ (B @ C)
