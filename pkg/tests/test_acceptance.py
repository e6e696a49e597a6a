"""Acceptance suite: nine criteria, exact arithmetic, zero tolerance.

Each test records one PASS/FAIL line with its runtime; the lines are printed
in the terminal summary (see ``conftest.py``) and by ``python tests/test_acceptance.py``.
"""

import io
import math
import random
import time
from contextlib import redirect_stderr, redirect_stdout

import pytest

from klrcell import cli
from klrcell import combinatorics as cb
from klrcell import polynomials as P
from klrcell.cellular import (
    verify_affine_cellularity, verify_cell_chain, verify_cellular_basis, verify_quotient_structure,
)
from klrcell.combinatorics import RootVector
from klrcell.dimension import dim_check
from klrcell.engine import get_algebra
from klrcell.nilhecke import verify_nilhecke
from klrcell.oracle import PolyVector, act, act_sequence
from klrcell.qseries import QSeries, inv_one_minus
from klrcell.relations import verify_relations

from conftest import random_element, random_generators

WEIGHTS = cb.weights_up_to(4, (1, 2, 3))
SMALL_WEIGHTS = cb.weights_up_to(3, (1, 2, 3))

RESULTS: dict[int, str] = {}


def record(number, title, budget, body):
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    if elapsed > budget:
        failures.append(f"runtime {elapsed:.1f}s exceeds {budget}s")
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number}: {status}  {title}  ({elapsed:.1f}s, budget {budget}s)"
    if failures:
        line += "  first failure: " + str(failures[0])
    RESULTS[number] = line
    print(line)
    assert not failures, failures[:5]


def report_failures(reports):
    return [f"{r.name} {r.params}: {f.check} alpha={f.alpha} pi={f.pi} degree={f.degree}"
            for r in reports for f in r.failures()]


# 1 ---------------------------------------------------------------------------


def test_criterion_1_relations():
    def body():
        return report_failures([verify_relations(alpha) for alpha in WEIGHTS])

    record(1, "defining relations hold in the engine (34 weights)", 30, body)


# 2 ---------------------------------------------------------------------------


def _random_vector(R, rnd):
    comps = {}
    for i in rnd.sample(R.words, min(2, len(R.words))):
        f = {}
        for _ in range(3):
            exps = [0] * R.d
            for _ in range(rnd.randint(0, 6)):
                exps[rnd.randrange(R.d)] += 1
            f = P.add(f, P.monomial(exps, rnd.choice((-2, -1, 1, 2))))
        comps[i] = f
    return PolyVector(R.d, comps)


def test_criterion_2_oracle():
    def body():
        rnd = random.Random(20240)
        pool = [a for a in WEIGHTS if a.height >= 2]
        failures = []
        for k in range(500):
            R = get_algebra(pool[k % len(pool)])
            gens = random_generators(R, rnd, 6)
            x = R.from_generators(gens)
            for _ in range(5):
                v = _random_vector(R, rnd)
                if act(x, v) != act_sequence(gens, v):
                    failures.append(("word", R.alpha, gens))
        for k in range(200):
            R = get_algebra(pool[k % len(pool)])
            x, y = random_element(R, rnd, 3), random_element(R, rnd, 3)
            v = _random_vector(R, rnd)
            if act(x * y, v) != act(x, act(y, v)):
                failures.append(("module axiom", R.alpha))
        return failures

    record(2, "normal forms act like raw words; module axiom (500 + 200 samples)", 60, body)


# 3 ---------------------------------------------------------------------------


def test_criterion_3_nilhecke():
    def body():
        reports = [verify_nilhecke(a, 8) for a in (1, 2, 3)] + [verify_nilhecke(4, 4)]
        failures = report_failures(reports)
        needed = {"e_a idempotent", "e_a psi_w0 = psi_w0", "psi_w0(delta_a) = 1",
                  "e_a H e_a = Lambda_a e_a", "H e_a H = H", "cellular basis unimodular"}
        for r in reports:
            missing = needed - set(r.checks())
            if missing:
                failures.append(f"{r.params}: missing {sorted(missing)}")
        return failures

    record(3, "nilHecke structure for a <= 3 at N = 8 and a = 4 at N = 4", 120, body)


# 4 ---------------------------------------------------------------------------


def test_criterion_4_dimension():
    def body():
        failures = []
        for alpha in WEIGHTS:
            rep = dim_check(alpha, 8)
            if not rep.agree:
                failures.append(f"{alpha}: mismatch at q^{rep.mismatch()}")
        N = 8
        g2, g4 = inv_one_minus(2, N + 2), inv_one_minus(4, N + 2)
        formula = QSeries.from_coeffs({-2: 1, 0: 2, 2: 1}) * g2 * g4
        closed = QSeries.from_coeffs({-2: 1, 0: 1}) * g2 * g2
        if not formula.compare(closed).equal:
            failures.append("closed form for 2 alpha_1")
        if not dim_check(RootVector.parse("1:2"), N).pbw.compare(closed).equal:
            failures.append("PBW count for 2 alpha_1 differs from the closed form")
        return failures

    record(4, "dim_q: PBW = sum l_pi c_pi^2 = cellular count up to q^8 (34 weights)", 120, body)


# 5 ---------------------------------------------------------------------------


def test_criterion_5_cell_chain():
    def body():
        reports = [verify_cell_chain(alpha, 6) for alpha in WEIGHTS]
        failures = report_failures(reports)
        needed = {"I_pi = sum R e(i_sigma) R", "e(i) in I_>pi for i > i_pi",
                  "psi_w P e(i_pi) in I_>pi for w in S_pi", "y_r e(i_pi) = y_s e(i_pi) mod I_>pi"}
        for r in reports:
            missing = needed - set(r.checks())
            if missing:
                failures.append(f"{r.params}: missing {sorted(missing)}")
        return failures

    record(5, "cell ideals equal idempotent-generated ideals for n <= 6 (34 weights)", 300, body)


# 6 ---------------------------------------------------------------------------


def test_criterion_6_cellular_basis():
    def body():
        return report_failures([verify_cellular_basis(alpha, 6) for alpha in WEIGHTS])

    record(6, "cellular basis is a unimodular change of basis, sum of cells = R (34 weights)",
           180, body)


# 7 ---------------------------------------------------------------------------


def test_criterion_7_quotients_and_cellularity():
    def body():
        reports = []
        for alpha in SMALL_WEIGHTS:
            reports += [verify_quotient_structure(pi, 6) for pi in cb.root_partitions(alpha)]
            reports.append(verify_affine_cellularity(alpha, 6))
        return report_failures(reports)

    record(7, "quotient structure (i)-(v) and affine cellularity, heights <= 3", 300, body)


# 8 ---------------------------------------------------------------------------


def test_criterion_8_combinatorics():
    def body():
        failures = []
        for a in range(1, 7):
            if cb.poincare(a) != cb.poincare_brute_force(a):
                failures.append(f"poincare a={a}")
        for alpha in cb.weights_up_to(5, (1, 2, 3, 4)):
            for pi in cb.root_partitions(alpha):
                if len(cb.min_coset_reps(pi)) * pi.parabolic_order() != math.factorial(pi.height):
                    failures.append(f"coset count {pi}")
        for a in range(1, 6):
            word = cb.symmetric_w0_word(a)
            if cb.perm_from_word(word, a) != cb.longest_element(a) or \
                    word[::-1] not in cb.commutation_class(word):
                failures.append(f"symmetric w0 word a={a}")
        return failures

    record(8, "Poincare product = brute force, |S^pi||S_pi| = d!, symmetric w0 words", 10, body)


# 9 ---------------------------------------------------------------------------

GOLDEN = {
    ("partitions", "--alpha", "1:1,2:1"): (0, "(2..2)^1 (1..1)^1\n(1..2)^1\n"),
    ("eval", "--alpha", "1:1,2:1", "s1*s1*e(1,2)"): (0, "(1)*y[1,0]*e(1,2) + (-1)*y[0,1]*e(1,2)\n"),
    ("dim", "--alpha", "1:2", "--cutoff", "6"): (0, (
        "alpha = 1:2, cutoff = 6: agree\n"
        " n  pbw  formula  cellular\n"
        "-2    1        1         1\n"
        "-1    0        0         0\n"
        " 0    3        3         3\n"
        " 1    0        0         0\n"
        " 2    5        5         5\n"
        " 3    0        0         0\n"
        " 4    7        7         7\n"
        " 5    0        0         0\n"
        " 6    9        9         9\n")),
}

EXIT_CODES = {
    ("verify", "--alpha", "1:1,2:1", "--suite", "all", "--cutoff", "6"): 0,
    ("eval", "--alpha", "1:1", "y1*("): 2,
    ("eval", "--alpha", "1:1,2:1", "e(1,1)"): 2,
    ("partitions", "--alpha", "bad"): 2,
}


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue()


def test_criterion_9_cli(monkeypatch):
    def failing_suite(alpha, N):
        from klrcell.reports import Report

        r = Report("forced")
        r.add("forced failure", False)
        return [r]

    def body():
        failures = []
        for argv, (code, text) in GOLDEN.items():
            got = _run(argv)
            if got != (code, text):
                failures.append(f"{' '.join(argv)}: got {got!r}")
        for argv, code in EXIT_CODES.items():
            got = _run(argv)[0]
            if got != code:
                failures.append(f"{' '.join(argv)}: exit {got}, expected {code}")
        with monkeypatch.context() as m:
            m.setitem(cli.SUITES, "relations", failing_suite)
            if _run(("verify", "--alpha", "1:1", "--suite", "relations"))[0] != 1:
                failures.append("a failed verification must exit 1")
        return failures

    record(9, "CLI goldens byte-identical; exit codes 0/1/2", 5, body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
