import random

import pytest

from klrcell import combinatorics as cb
from klrcell import polynomials as P
from klrcell.nilhecke import (
    assemble, center_basis, delta, divided_difference, e_a, is_central, nilhecke,
    schubert, schubert_expand, verify_nilhecke,
)


def test_delta_examples():
    R1, R2, R3 = (nilhecke(a).algebra for a in (1, 2, 3))
    assert delta(1) == R1.one()
    assert delta(2) == R2.y(2)
    assert delta(3) == R3.y(2) * R3.y(3) * R3.y(3)
    assert delta(3).degree() == 6


def test_e_a_examples():
    assert e_a(1) == nilhecke(1).algebra.one()
    R = nilhecke(2).algebra
    assert e_a(2) == R.psi(1) * R.y(2)
    x = e_a(3)
    assert x.degree() == 0 and x * x == x


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_e_a_properties(a):
    R = nilhecke(a).algebra
    x = e_a(a)
    w0 = R.psi_w(cb.longest_element(a))
    assert x * x == x
    assert x * w0 == w0


def test_divided_difference_examples():
    assert divided_difference(1, P.var(2, 2)) == P.const(2)
    assert divided_difference(1, P.monomial((1, 1))) == {}
    assert divided_difference(1, P.monomial((0, 2))) == {(1, 0): 1, (0, 1): 1}


def test_schubert_examples():
    assert schubert(cb.identity(2), 2) == P.var(2, 2)
    assert schubert((2, 1, 3), 3) == divided_difference(1, P.monomial((0, 1, 2)))
    with pytest.raises(ValueError):
        schubert((2, 1), 3)


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
def test_schubert_of_longest_is_one(a):
    assert schubert(cb.longest_element(a), a) == P.const(a)


def test_schubert_expand_examples():
    w0 = cb.longest_element(2)
    assert schubert_expand(P.const(2), 2) == {w0: {(): 1}}
    assert schubert_expand(P.monomial((0, 1, 2)), 3) == {cb.identity(3): {(): 1}}
    got = schubert_expand(P.var(2, 1), 2)
    assert got == {w0: {(1,): 1}, cb.identity(2): {(): -1}}


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_schubert_expand_round_trip(a):
    rnd = random.Random(a)
    for _ in range(6):
        f = {}
        for _ in range(4):
            k = rnd.randint(0, 8 // 2)
            exps = [0] * a
            for _ in range(k):
                exps[rnd.randrange(a)] += 1
            f = P.add(f, P.monomial(exps, rnd.randint(-3, 3)))
        coeffs = schubert_expand(f, a)
        assert assemble(coeffs, a) == f
        assert schubert_expand(f, a, method="operators") == coeffs


def test_center_basis_examples():
    R2 = nilhecke(2).algebra
    assert center_basis(2, 2) == [R2.y(1) + R2.y(2)]
    assert len(center_basis(2, 4)) == 2
    assert all(is_central(z) for z in center_basis(2, 4))
    R1 = nilhecke(1).algebra
    assert center_basis(1, 6) == [R1.y(1) * R1.y(1) * R1.y(1)]
    assert center_basis(1, 3) == []


@pytest.mark.parametrize("a", [2, 3, 4])
def test_centrality(a):
    for n in (2, 4, 6):
        assert all(is_central(z) for z in center_basis(a, n))
    R = nilhecke(a).algebra
    assert not is_central(R.y(1))


@pytest.mark.parametrize("a,N", [(1, 6), (2, 8), (3, 4)])
def test_verify_nilhecke(a, N):
    report = verify_nilhecke(a, N)
    assert report.passed, report.failures()
    assert set(report.checks()) >= {
        "e_a idempotent", "e_a psi_w0 = psi_w0", "psi_w0(delta_a) = 1", "H e_a = P_a e_a",
        "e_a H e_a = Lambda_a e_a", "H e_a H = H", "cellular basis unimodular",
    }


def test_other_vertex():
    assert verify_nilhecke(2, 4, vertex=3).passed
