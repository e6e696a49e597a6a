"""Graded components of R_alpha as free Z-modules, and lattices inside them.

A component is ``e(j) R_alpha e(i)`` in a single degree, with the PBW
monomials as its coordinate basis.  Two-sided ideals, and spans of elements
that each live in one such block, split as direct sums over blocks, so every
lattice here is stored block by block.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

from . import combinatorics as cb
from .combinatorics import Word
from .engine import Element, KLRAlgebra, Key
from .zlattice import Lattice

__all__ = ["Block", "BlockComponent", "GradedLattice", "component_blocks", "block_of"]

Block = tuple[Word, Word]  # (left word, right word)


def block_of(key: Key) -> Block:
    w, _, i = key
    return cb.act(w, i), i


class BlockComponent:
    """The PBW coordinates of ``e(j) R e(i)`` in degree ``n``."""

    def __init__(self, algebra: KLRAlgebra, n: int, block: Block):
        self.algebra = algebra
        self.n = n
        self.block = block
        self.keys: list[Key] = algebra.pbw_basis_at_degree(n, block)
        self.index = {k: c for c, k in enumerate(self.keys)}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def vector(self, terms) -> dict[int, int]:
        out = {}
        for k, c in terms.items():
            col = self.index.get(k)
            if col is None:
                raise ValueError(f"term {k} is not in block {self.block} at degree {self.n}")
            out[col] = c
        return out

    def element(self, vec) -> Element:
        return self.algebra.element({self.keys[c]: x for c, x in vec.items()})


def component_blocks(algebra: KLRAlgebra, n: int) -> dict[Block, BlockComponent]:
    """All nonzero blocks of the degree ``n`` component."""
    return {b: c for b, c in _components(algebra, n).items() if c.dim}


@lru_cache(maxsize=256)
def _components(algebra: KLRAlgebra, n: int) -> dict[Block, BlockComponent]:
    blocks: dict[Block, None] = {}
    for key in algebra.pbw_basis_at_degree(n):
        blocks.setdefault(block_of(key), None)
    return {b: BlockComponent(algebra, n, b) for b in blocks}


class GradedLattice:
    """A sublattice of the degree ``n`` component, stored block by block.

    ``add`` splits an element into its blocks.  That is only the span of the
    added elements when the span is block-decomposable, as it is for ideals
    and for spans of block-homogeneous elements; pass ``split=False`` to
    insist on block-homogeneous input.
    """

    def __init__(self, algebra: KLRAlgebra, n: int, elements: Iterable[Element] = (),
                 split: bool = True):
        self.algebra = algebra
        self.n = n
        self.split = split
        self.components = component_blocks(algebra, n)
        self.lattices: dict[Block, Lattice] = {}
        for x in elements:
            self.add(x)

    def _lattice(self, block: Block) -> Lattice:
        lat = self.lattices.get(block)
        if lat is None:
            comp = self.components.get(block)
            if comp is None:
                raise ValueError(f"block {block} is empty at degree {self.n}")
            lat = self.lattices[block] = Lattice(comp.dim)
        return lat

    def _parts(self, x: Element) -> dict[Block, dict]:
        parts = x.blocks()
        if not self.split and len(parts) > 1:
            raise ValueError("element is not block-homogeneous")
        for terms in parts.values():
            for k in terms:
                if KLRAlgebra.degree(k) != self.n:
                    raise ValueError(f"element has a term outside degree {self.n}")
        return parts

    def add(self, x: Element) -> bool:
        grew = False
        for b, terms in self._parts(x).items():
            grew |= self._lattice(b).add(self.components[b].vector(terms))
        return grew

    def contains(self, x: Element) -> bool:
        for b, terms in self._parts(x).items():
            lat = self.lattices.get(b)
            if lat is None or not lat.contains(self.components[b].vector(terms)):
                return False
        return True

    __contains__ = contains

    def reduce(self, x: Element) -> Element:
        """Canonical representative of ``x`` modulo the lattice."""
        out = {}
        for b, terms in self._parts(x).items():
            comp = self.components[b]
            lat = self.lattices.get(b)
            vec = comp.vector(terms)
            if lat is not None:
                vec = lat.reduce(vec)
            for c, v in vec.items():
                out[comp.keys[c]] = v
        return self.algebra.element(out)

    @property
    def rank(self) -> int:
        return sum(l.rank for l in self.lattices.values())

    @property
    def ambient_dim(self) -> int:
        return sum(c.dim for c in self.components.values())

    def block_is_full(self, block: Block) -> bool:
        lat = self.lattices.get(block)
        return lat is not None and lat.is_full()

    def is_full(self) -> bool:
        return all(self.block_is_full(b) for b in self.components)

    def is_saturated(self) -> bool:
        return all(l.is_saturated() for l in self.lattices.values())

    def canonical(self) -> tuple:
        return tuple(sorted((b, l.canonical()) for b, l in self.lattices.items() if l.rank))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedLattice):
            return NotImplemented
        if self.n != other.n or self.algebra != other.algebra:
            return False
        mine = {b: l for b, l in self.lattices.items() if l.rank}
        theirs = {b: l for b, l in other.lattices.items() if l.rank}
        return mine.keys() == theirs.keys() and all(l == theirs[b] for b, l in mine.items())

    def __le__(self, other: "GradedLattice") -> bool:
        for b, lat in self.lattices.items():
            if not lat.rank:
                continue
            olat = other.lattices.get(b)
            if olat is None or not lat <= olat:
                return False
        return True

    def copy(self) -> "GradedLattice":
        out = GradedLattice(self.algebra, self.n, split=self.split)
        out.lattices = {b: l.copy() for b, l in self.lattices.items()}
        return out

    def __add__(self, other: "GradedLattice") -> "GradedLattice":
        out = self.copy()
        for b, lat in other.lattices.items():
            if b in out.lattices:
                out.lattices[b] = out.lattices[b] + lat
            else:
                out.lattices[b] = lat.copy()
        return out

    def basis_elements(self) -> list[Element]:
        """HNF rows, as elements."""
        out = []
        for b in sorted(self.lattices):
            comp = self.components[b]
            for row in self.lattices[b].hnf_rows():
                out.append(comp.element(row))
        return out
