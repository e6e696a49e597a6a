import pytest

from klrcell import combinatorics as cb
from klrcell.cellular import (
    block_crossing_word, cell_component, cell_datum, cell_structure, cellular_basis, iota,
    lambda_pi_elements, psi_alpha, two_sided_ideal_component, verify_affine_cellularity,
    verify_cell_chain, verify_cellular_basis, verify_quotient_structure, young_subgroup,
)
from klrcell.combinatorics import RootPartition, RootVector
from klrcell.engine import get_algebra
from klrcell.graded import GradedLattice
from klrcell.nilhecke import e_a


def A(text):
    return RootVector.parse(text)


def Pi(text):
    return RootPartition.parse(text)


def test_iota_examples():
    R0 = get_algebra(RootVector({}))
    R1 = get_algebra(A("1:1"))
    R2 = get_algebra(A("2:1"))
    H = get_algebra(A("1:2"))
    x = H.psi(1) * H.y(2)
    assert iota([x, R0.one()]) == x
    assert iota([R1.e((1,)), R2.e((2,))]) == get_algebra(A("1:1,2:1")).e((1, 2))
    big = get_algebra(A("1:2,2:1"))
    assert iota([H.psi(1) * H.e((1, 1)), R2.e((2,))]) == big.psi(1) * big.e((1, 1, 2))


def test_block_crossing_word():
    assert block_crossing_word(1) == (1,)
    assert block_crossing_word(2) == (2, 3, 1, 2)
    w = cb.perm_from_word(block_crossing_word(3), 6)
    assert w == (4, 5, 6, 1, 2, 3)


def test_psi_alpha_examples():
    assert psi_alpha(A("1:1")) == get_algebra(A("1:2")).psi(1)
    for beta in ("1:1", "1:1,2:1", "1:1,2:1,3:1", "2:1,3:1,4:1"):
        alpha = A(beta)
        word = tuple(i for i in range(min(alpha.support), max(alpha.support) + 1))
        x = psi_alpha(alpha) * get_algebra(2 * alpha).e(word + word)
        assert x.degree() == -2


def test_cell_datum_examples():
    c = cell_datum(Pi("(1..2)^1"))
    R = c.algebra
    assert c.y_pi == R.one() and c.psi_pi == R.one() and c.e_pi == R.e((1, 2))
    assert cell_datum(Pi("(1..1)^2")).e_pi == e_a(2)
    assert cell_datum(Pi("(2..2)^1 (1..1)^1")).e_pi == R.e((2, 1))


@pytest.mark.parametrize("alpha", cb.weights_up_to(4, (1, 2, 3)), ids=str)
def test_cell_datum_invariants(alpha):
    for pi in cb.root_partitions(alpha):
        c = cell_datum(pi)
        R = c.algebra
        e = R.e(pi.word)
        assert c.y_pi.degree() == 2 * pi.sh
        assert (c.psi_pi * e).degree() == -2 * pi.sh
        assert c.e_pi.degree() == 0
        assert R.tau(c.psi_pi) == c.psi_pi
        assert c.e_pi == c.psi_pi * c.y_pi * e


def test_young_subgroup_order():
    pi = Pi("(1..2)^2 (1..1)^1")
    assert len(young_subgroup(pi)) == pi.parabolic_order() == 4


def test_lambda_pi_elements_examples():
    pi = Pi("(1..1)^2")
    H = get_algebra(A("1:2"))
    assert lambda_pi_elements(pi, 0) == [H.one()]
    assert lambda_pi_elements(pi, 2) == [(H.y(1) + H.y(2)) * H.e((1, 1))]
    assert len(lambda_pi_elements(pi, 4)) == 2
    assert lambda_pi_elements(pi, 3) == [] and lambda_pi_elements(pi, -2) == []


def test_lambda_pi_uses_block_dots():
    pi = Pi("(1..2)^2")
    R = get_algebra(pi.alpha)
    (x,) = lambda_pi_elements(pi, 2)
    # the block dots sit on the last strand of each block
    assert x == R.y(2) + R.y(4)


def test_cell_component_examples():
    alpha = A("1:1,2:1")
    top = cb.root_partitions(alpha)[0]
    R = get_algebra(alpha)
    lat = cell_component(top, 0)
    assert lat.contains(R.e(top.word))
    (only,) = cb.root_partitions(A("1:1"))
    assert cell_component(only, 0).is_full()
    (pi,) = cb.root_partitions(A("1:2"))
    assert cell_component(pi, -2).rank == 1


def test_two_sided_ideal_component_examples():
    alpha = A("1:1,2:1")
    parts = cb.root_partitions(alpha)
    for n in range(-2, 5):
        assert two_sided_ideal_component(parts, n).is_full()
    empty = two_sided_ideal_component([], 0, alpha)
    assert empty.rank == 0 and isinstance(empty, GradedLattice)
    top = two_sided_ideal_component(parts[:1], 0)
    assert top == cell_component(parts[0], 0)


def test_cellular_basis_examples():
    elems, ok = cellular_basis(A("1:1"), 0)
    assert ok and [str(x) for _, _, x in elems] == ["(1)*e(1)"]
    elems, ok = cellular_basis(A("1:2"), -2)
    assert ok and len(elems) == 1
    elems, ok = cellular_basis(A("1:1,2:1"), 0)
    assert ok and len(elems) == 2 and len({pi for pi, _, _ in elems}) == 2


@pytest.mark.parametrize("alpha", ["1:3", "1:2,2:1", "1:1,2:2", "1:1,2:1,3:1"])
def test_tau_cell_elements_match_tau(alpha):
    cs = cell_structure(A(alpha))
    R = cs.algebra
    for pi in cs.partitions:
        for n in range(cs.lo, 3):
            direct = {label: R.tau(x) for label, x in cs.cell_elements(pi, n)}
            fast = dict(cs.tau_cell_elements(pi, n))
            assert fast == direct


@pytest.mark.parametrize("alpha", ["1:1", "1:2", "1:1,2:1", "1:2,2:1", "1:1,2:1,3:1"])
def test_cell_chain_small(alpha):
    report = verify_cell_chain(A(alpha), 4)
    assert report.passed, report.failures()


@pytest.mark.parametrize("alpha", ["1:2", "1:1,2:1", "1:2,2:1", "1:1,2:2"])
def test_cellular_basis_small(alpha):
    report = verify_cellular_basis(A(alpha), 4)
    assert report.passed, report.failures()


@pytest.mark.parametrize("alpha", ["1:1", "1:2", "1:1,2:1", "1:2,2:1"])
def test_quotients_and_cellularity_small(alpha):
    for pi in cb.root_partitions(A(alpha)):
        report = verify_quotient_structure(pi, 4)
        assert report.passed, report.failures()
    report = verify_affine_cellularity(A(alpha), 4)
    assert report.passed, report.failures()


def test_cell_data_json():
    data = cell_datum(Pi("(1..1)^2")).to_json()
    assert data["i_pi"] == [1, 1] and data["y_pi"] == [0, 1]
