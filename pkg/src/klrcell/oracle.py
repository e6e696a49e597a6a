"""A polynomial representation of R_alpha, used to cross-check the rewriter.

The module is ``⊕_i Z[y_1..y_d] e(i)``.  Dots multiply, idempotents project,
and ``psi_r`` moves component ``i`` to ``s_r . i`` acting by a divided
difference (equal labels), a plain swap (distant labels or ``i_r = i_{r+1}+1``),
or a swap followed by ``y_{r+1} - y_r`` (``i_r = i_{r+1}-1``).  This is an
independent implementation: it never calls the rewriter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import combinatorics as cb
from . import polynomials as P
from .combinatorics import Word
from .engine import Element, Generator

__all__ = ["PolyVector", "act_gen", "act", "act_sequence"]


@dataclass
class PolyVector:
    d: int
    components: dict[Word, P.Poly] = field(default_factory=dict)

    def __post_init__(self):
        self.components = {tuple(i): dict(f) for i, f in self.components.items() if f}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.d == other.d and self.components == other.components

    def __add__(self, other: "PolyVector") -> "PolyVector":
        out = dict(self.components)
        for i, f in other.components.items():
            out[i] = P.add(out.get(i, {}), f)
        return PolyVector(self.d, out)

    def scale(self, c: int) -> "PolyVector":
        return PolyVector(self.d, {i: P.scale(f, c) for i, f in self.components.items()})

    def is_zero(self) -> bool:
        return not self.components


def _add_into(out: dict[Word, P.Poly], i: Word, f: Mapping) -> None:
    g = P.add(out.get(i, {}), f)
    if g:
        out[i] = g
    else:
        out.pop(i, None)


def act_gen(g: Generator, v: PolyVector) -> PolyVector:
    d = v.d
    if g.kind == "e":
        j = tuple(g.arg)
        return PolyVector(d, {j: v.components[j]} if j in v.components else {})
    if g.kind == "y":
        r = g.arg
        if not 1 <= r <= d:
            raise ValueError(f"dot index {r} out of range")
        y = P.var(d, r)
        return PolyVector(d, {i: P.mul(y, f) for i, f in v.components.items()})
    if g.kind == "psi":
        r = g.arg
        if not 1 <= r < d:
            raise ValueError(f"crossing index {r} out of range")
        out: dict[Word, P.Poly] = {}
        diff = P.sub(P.var(d, r + 1), P.var(d, r))
        for i, f in v.components.items():
            a, b = i[r - 1], i[r]
            if a == b:
                image = P.divided_difference(f, r)
            elif a == b - 1:
                image = P.mul(diff, P.swap(f, r))
            else:
                image = P.swap(f, r)
            _add_into(out, cb.swap(i, r), image)
        return PolyVector(d, out)
    raise ValueError(f"unknown generator kind {g.kind!r}")


def act_sequence(gens, v: PolyVector) -> PolyVector:
    """Apply a generator word (leftmost acts last)."""
    for g in reversed(list(gens)):
        v = act_gen(g, v)
    return v


def act(x: Element, v: PolyVector) -> PolyVector:
    out = PolyVector(v.d)
    R = x.algebra
    for key, c in x.terms.items():
        out = out + act_sequence(R.generator_sequence(key), v).scale(c)
    return out
