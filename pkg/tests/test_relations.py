import pytest

from klrcell.combinatorics import RootVector, weights_up_to
from klrcell.engine import get_algebra
from klrcell.relations import (
    relation_instances, evaluate_side, verify_relations, verify_relations_on_polynomials,
)

NAMES = {
    "e(i) e(j) = delta e(i)", "y_r e(i) = e(i) y_r", "y_r y_s = y_s y_r",
    "psi_r e(i) = e(s_r i) psi_r", "psi_r y_s = y_s psi_r", "psi_r psi_s = psi_s psi_r",
    "psi_r y_r+1 e(i) = (y_r psi_r + delta) e(i)", "y_r+1 psi_r e(i) = (psi_r y_r + delta) e(i)",
    "psi_r^2 e(i) case table", "braid relation", "sum of e(i) = 1",
}


def test_all_relation_families_are_generated():
    names = {r.name for r in relation_instances(RootVector.parse("1:1,2:2,3:1"))}
    assert names == NAMES


@pytest.mark.parametrize("alpha", ["1:1", "1:2", "1:1,2:1", "1:2,2:1", "1:1,2:1,3:1", "2:1,3:2"])
def test_relations_in_engine(alpha):
    report = verify_relations(RootVector.parse(alpha))
    assert report.passed, report.failures()


@pytest.mark.parametrize("alpha", ["1:2", "1:1,2:1", "1:2,2:1", "1:1,2:1,3:1"])
def test_relations_on_polynomials(alpha):
    report = verify_relations_on_polynomials(RootVector.parse(alpha), max_degree=3)
    assert report.passed, report.failures()


def test_a_wrong_relation_is_caught():
    alpha = RootVector.parse("1:1,2:1")
    R = get_algebra(alpha)
    rel = next(r for r in relation_instances(alpha)
               if r.name == "psi_r^2 e(i) case table" and r.where == ((1, 2), 1))
    # flipping the sign of the right side must break the identity
    flipped = [(-c, g) for c, g in rel.rhs]
    assert evaluate_side(R, rel.lhs) != evaluate_side(R, flipped)


def _random_vectors(R, rnd, count, max_degree):
    from klrcell import polynomials as P
    from klrcell.oracle import PolyVector

    out = []
    for _ in range(count):
        i = rnd.choice(R.words)
        exps = [0] * R.d
        for _ in range(max_degree):
            exps[rnd.randrange(R.d)] += 1
        out.append(PolyVector(R.d, {i: P.add(P.monomial(exps), P.monomial(exps[::-1], -2))}))
    return out


@pytest.mark.parametrize("alpha", weights_up_to(4, (1, 2, 3)), ids=str)
def test_relations_on_polynomials_full_range(alpha):
    # every monomial up to degree 1, plus random vectors of degree 8
    import random

    R = get_algebra(alpha)
    extra = _random_vectors(R, random.Random(str(alpha)), 4, 8)
    report = verify_relations_on_polynomials(alpha, max_degree=1, extra=extra)
    assert report.passed, report.failures()
