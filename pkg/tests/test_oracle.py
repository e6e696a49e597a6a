import random

import pytest

from klrcell import polynomials as P
from klrcell.combinatorics import RootVector
from klrcell.engine import Generator, get_algebra
from klrcell.oracle import PolyVector, act, act_gen, act_sequence
from klrcell.zlattice import Lattice

from conftest import random_element, random_generators

WEIGHTS = ["1:2", "1:1,2:1", "1:3", "1:2,2:1", "1:1,2:1,3:1", "1:2,2:2", "1:1,2:2,3:1", "1:1,3:1"]


def random_vector(R, rnd, max_degree=6, terms=3):
    comps = {}
    for i in rnd.sample(R.words, min(2, len(R.words))):
        f = {}
        for _ in range(terms):
            k = rnd.randint(0, max_degree)
            exps = [0] * R.d
            for _ in range(k):
                exps[rnd.randrange(R.d)] += 1
            f = P.add(f, P.monomial(exps, rnd.choice((-2, -1, 1, 2))))
        comps[i] = f
    return PolyVector(R.d, comps)


def test_act_gen_examples():
    v = PolyVector(2, {(1, 1): P.var(2, 2)})
    assert act_gen(Generator("psi", 1), v) == PolyVector(2, {(1, 1): P.const(2)})
    f = P.monomial((2, 1))
    w = PolyVector(2, {(1, 2): f})
    twice = act_sequence([Generator("psi", 1), Generator("psi", 1)], w)
    assert twice == PolyVector(2, {(1, 2): P.mul(P.sub(P.var(2, 1), P.var(2, 2)), f)})
    assert act_gen(Generator("e", (2, 1)), w).is_zero()


def test_act_examples():
    R = get_algebra(RootVector.parse("1:2"))
    v = PolyVector(2, {(1, 1): P.const(2)})
    assert act(R.one(), v) == v
    assert act(R.psi(1) * R.e((1, 1)), v).is_zero()


def test_act_rejects_bad_indices():
    v = PolyVector(2, {(1, 1): P.const(2)})
    with pytest.raises(ValueError):
        act_gen(Generator("psi", 2), v)
    with pytest.raises(ValueError):
        act_gen(Generator("y", 3), v)


def test_normal_form_acts_like_raw_word():
    rnd = random.Random(17)
    for k in range(120):
        R = get_algebra(RootVector.parse(WEIGHTS[k % len(WEIGHTS)]))
        gens = random_generators(R, rnd, 6)
        x = R.from_generators(gens)
        for _ in range(2):
            v = random_vector(R, rnd, max_degree=4)
            assert act(x, v) == act_sequence(gens, v)


def test_module_axiom():
    rnd = random.Random(23)
    for k in range(60):
        R = get_algebra(RootVector.parse(WEIGHTS[k % len(WEIGHTS)]))
        x, y = random_element(R, rnd), random_element(R, rnd)
        v = random_vector(R, rnd, max_degree=4)
        assert act(x * y, v) == act(x, act(y, v))


@pytest.mark.parametrize("alpha", ["1:2", "1:1,2:1", "1:3", "1:2,2:1", "1:1,2:1,3:1", "1:1,3:1,5:1"])
def test_pbw_monomials_act_independently(alpha):
    R = get_algebra(RootVector.parse(alpha))
    d = R.d
    family = [PolyVector(d, {i: P.monomial(m)}) for i in R.words
              for k in range(d + 2) for m in P.compositions(k, d)]
    columns: dict = {}

    def coords(x):
        out = {}
        for t, v in enumerate(family):
            for i, f in act(x, v).components.items():
                for e, c in f.items():
                    out[columns.setdefault((t, i, e), len(columns))] = c
        return out

    for n in range(R.min_degree(), 7):
        keys = R.pbw_basis_at_degree(n)
        rows = [coords(R.element({key: 1})) for key in keys]
        L = Lattice(len(columns) + 1, rows)
        assert L.rank == len(keys), f"degree {n}"
