"""The defining relations of R_alpha, checked as identities.

A relation instance is a pair of formal sums of generator words, one per
side, for a fixed word ``i`` of content ``alpha`` and admissible indices.
The engine check multiplies both sides out into normal form; the oracle
check lets both raw generator words act on the polynomial module.

>>> from klrcell.combinatorics import RootVector
>>> verify_relations(RootVector.parse("1:1,2:1")).passed
True
"""

from __future__ import annotations

from typing import Iterator, Optional

from . import polynomials as P
from .combinatorics import RootVector, Word
from .engine import Element, Generator, KLRAlgebra, get_algebra
from .oracle import PolyVector, act_sequence
from .reports import Report

__all__ = [
    "Relation", "relation_instances", "evaluate_side",
    "verify_relations", "verify_relations_on_polynomials",
]

Side = list[tuple[int, tuple[Generator, ...]]]  # formal sum of generator words


class Relation:
    __slots__ = ("name", "where", "lhs", "rhs")

    def __init__(self, name: str, where: tuple, lhs: Side, rhs: Side):
        self.name, self.where, self.lhs, self.rhs = name, where, lhs, rhs


def E(i) -> Generator:
    return Generator("e", tuple(i))


def Y(r: int) -> Generator:
    return Generator("y", r)


def S(r: int) -> Generator:
    return Generator("psi", r)


def _swap(i: Word, r: int) -> Word:
    i = list(i)
    i[r - 1], i[r] = i[r], i[r - 1]
    return tuple(i)


def _psi_square(r: int, i: Word) -> Side:
    a, b = i[r - 1], i[r]
    if a == b:
        return []
    if abs(a - b) > 1:
        return [(1, (E(i),))]
    if a == b + 1:
        return [(1, (Y(r + 1), E(i))), (-1, (Y(r), E(i)))]
    return [(1, (Y(r), E(i))), (-1, (Y(r + 1), E(i)))]


def _braid_correction(i: Word, r: int) -> int:
    if i[r + 1] == i[r - 1] == i[r] + 1:
        return 1
    if i[r + 1] == i[r - 1] == i[r] - 1:
        return -1
    return 0


def relation_instances(alpha: RootVector) -> Iterator[Relation]:
    R = get_algebra(alpha)
    d = R.d
    words = R.words
    for i in words:
        e = E(i)
        for j in words:
            yield Relation("e(i) e(j) = delta e(i)", (i, j), [(1, (e, E(j)))],
                           [(1, (e,))] if i == j else [])
        for r in range(1, d + 1):
            yield Relation("y_r e(i) = e(i) y_r", (i, r), [(1, (Y(r), e))], [(1, (e, Y(r)))])
            for s in range(1, d + 1):
                yield Relation("y_r y_s = y_s y_r", (i, r, s),
                               [(1, (Y(r), Y(s), e))], [(1, (Y(s), Y(r), e))])
        for r in range(1, d):
            yield Relation("psi_r e(i) = e(s_r i) psi_r", (i, r),
                           [(1, (S(r), e))], [(1, (E(_swap(i, r)), S(r)))])
            for s in range(1, d + 1):
                if s not in (r, r + 1):
                    yield Relation("psi_r y_s = y_s psi_r", (i, r, s),
                                   [(1, (S(r), Y(s), e))], [(1, (Y(s), S(r), e))])
            for s in range(1, d):
                if abs(r - s) > 1:
                    yield Relation("psi_r psi_s = psi_s psi_r", (i, r, s),
                                   [(1, (S(r), S(s), e))], [(1, (S(s), S(r), e))])
            delta = [(1, (e,))] if i[r - 1] == i[r] else []
            yield Relation("psi_r y_r+1 e(i) = (y_r psi_r + delta) e(i)", (i, r),
                           [(1, (S(r), Y(r + 1), e))], [(1, (Y(r), S(r), e))] + delta)
            yield Relation("y_r+1 psi_r e(i) = (psi_r y_r + delta) e(i)", (i, r),
                           [(1, (Y(r + 1), S(r), e))], [(1, (S(r), Y(r), e))] + delta)
            yield Relation("psi_r^2 e(i) case table", (i, r),
                           [(1, (S(r), S(r), e))], _psi_square(r, i))
            if r + 1 < d:
                c = _braid_correction(i, r)
                yield Relation("braid relation", (i, r), [(1, (S(r), S(r + 1), S(r), e))],
                               [(1, (S(r + 1), S(r), S(r + 1), e))] + ([(c, (e,))] if c else []))
    yield Relation("sum of e(i) = 1", (), [(1, (E(i),)) for i in words], [(1, ())])


def evaluate_side(R: KLRAlgebra, side: Side) -> Element:
    out = R.zero()
    for c, gens in side:
        out = out + R.from_generators(list(gens)) * c
    return out


def _act_side(side: Side, v: PolyVector) -> PolyVector:
    out = PolyVector(v.d)
    for c, gens in side:
        out = out + act_sequence(gens, v).scale(c)
    return out


def _collect(report: Report, alpha: RootVector, outcomes) -> Report:
    seen: dict[str, list] = {}
    for name, where, bad in outcomes:
        entry = seen.setdefault(name, [0, None])
        entry[0] += 1
        if bad is not None and entry[1] is None:
            entry[1] = (where, bad)
    for name, (count, bad) in seen.items():
        report.add(name, bad is None, alpha=str(alpha), detail={"instances": count},
                   witness={"where": repr(bad[0]), "difference": bad[1]} if bad else None)
    return report


def verify_relations(alpha: RootVector) -> Report:
    """Every defining relation as an identity of normal forms."""
    R = get_algebra(alpha)

    def outcomes():
        for rel in relation_instances(alpha):
            diff = evaluate_side(R, rel.lhs) - evaluate_side(R, rel.rhs)
            yield rel.name, rel.where, (str(diff) if diff else None)

    return _collect(Report("relations", params={"alpha": str(alpha)}), alpha, outcomes())


def verify_relations_on_polynomials(alpha: RootVector, max_degree: int = 2,
                                    extra: Optional[list[PolyVector]] = None) -> Report:
    """Every relation as an operator identity on the polynomial module.

    Test vectors: each monomial of degree ``<= max_degree`` in each component,
    plus any ``extra`` vectors.
    """
    R = get_algebra(alpha)
    d = R.d
    vectors = [PolyVector(d, {i: P.monomial(m)}) for i in R.words
               for k in range(max_degree + 1) for m in P.compositions(k, d)]
    vectors += list(extra or [])

    def outcomes():
        for rel in relation_instances(alpha):
            bad = None
            for v in vectors:
                if _act_side(rel.lhs, v) != _act_side(rel.rhs, v):
                    bad = repr(v.components)
                    break
            yield rel.name, rel.where, bad

    report = Report("relations-on-polynomials", params={"alpha": str(alpha), "max_degree": max_degree})
    return _collect(report, alpha, outcomes())
