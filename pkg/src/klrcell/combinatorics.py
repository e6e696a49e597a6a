"""Type A_infinity root data, weight words, root partitions and S_d combinatorics.

Permutations are tuples in one-line notation with values ``1..d``; composition
is ``(u * v)(k) = u(v(k))`` and ``s_r`` swaps the values ``r`` and ``r + 1``
when multiplied on the left.  ``S_d`` acts on words by place permutation,
``(w . i)[w(k)] = i[k]``, so that ``psi_r e(i) = e(s_r . i) psi_r``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .qseries import QSeries

Word = tuple[int, ...]
Perm = tuple[int, ...]

__all__ = [
    "cartan", "RootVector", "PositiveRoot", "RootPartition",
    "words_of", "weights_up_to", "compare_words", "positive_roots", "root_partitions",
    "identity", "compose", "inverse", "length", "inversions", "act",
    "perm_from_word", "is_reduced", "left_descents", "canonical_reduced_word",
    "all_perms", "min_coset_reps", "parabolic_factorize", "Move",
    "reduced_word_path", "commutation_class", "symmetric_w0_word",
    "longest_element", "poincare", "poincare_brute_force",
]


def cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


# ---------------------------------------------------------------------------
# roots and words


@dataclass(frozen=True)
class RootVector:
    """An element of the positive root lattice, stored as sorted (vertex, mult) pairs."""

    items: tuple[tuple[int, int], ...]

    def __init__(self, mults: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = dict(mults.items() if isinstance(mults, Mapping) else mults)
        if any(c < 0 for c in pairs.values()):
            raise ValueError("root vector multiplicities must be nonnegative")
        object.__setattr__(
            self, "items", tuple(sorted((int(i), int(c)) for i, c in pairs.items() if c))
        )

    @classmethod
    def parse(cls, text: str) -> "RootVector":
        """Parse ``"1:2,2:1"`` (vertex:multiplicity pairs)."""
        text = text.strip()
        if not text or text == "0":
            return cls()
        pairs = {}
        for chunk in text.split(","):
            m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(\d+)\s*", chunk)
            if not m:
                raise ValueError(f"cannot parse root vector component {chunk!r}")
            i, c = int(m.group(1)), int(m.group(2))
            pairs[i] = pairs.get(i, 0) + c
        return cls(pairs)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "RootVector":
        counts: dict[int, int] = {}
        for i in word:
            counts[i] = counts.get(i, 0) + 1
        return cls(counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def __getitem__(self, i: int) -> int:
        return self.as_dict().get(i, 0)

    @property
    def height(self) -> int:
        return sum(c for _, c in self.items)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.items)

    def __add__(self, other: "RootVector") -> "RootVector":
        out = self.as_dict()
        for i, c in other.items:
            out[i] = out.get(i, 0) + c
        return RootVector(out)

    def __sub__(self, other: "RootVector") -> "RootVector":
        out = self.as_dict()
        for i, c in other.items:
            out[i] = out.get(i, 0) - c
        return RootVector(out)

    def __rmul__(self, k: int) -> "RootVector":
        return RootVector({i: k * c for i, c in self.items})

    def contains(self, other: "RootVector") -> bool:
        mine = self.as_dict()
        return all(mine.get(i, 0) >= c for i, c in other.items)

    def __str__(self) -> str:
        return ",".join(f"{i}:{c}" for i, c in self.items) or "0"


def weights_up_to(height: int, support: Sequence[int]) -> list[RootVector]:
    """All nonzero ``alpha`` of height ``<= height`` supported on ``support``."""
    support = sorted(support)
    out = []
    for mults in itertools.product(range(height + 1), repeat=len(support)):
        if 0 < sum(mults) <= height:
            out.append(RootVector({i: m for i, m in zip(support, mults) if m}))
    return sorted(out, key=lambda a: (a.height, sorted(a.as_dict().items())))


def words_of(alpha: RootVector) -> list[Word]:
    """All words with content ``alpha``, lexicographically descending."""
    return _words_of(alpha.items)


@lru_cache(maxsize=None)
def _words_of(items: tuple[tuple[int, int], ...]) -> list[Word]:
    letters = [i for i, c in items for _ in range(c)]
    return sorted(set(itertools.permutations(letters)), reverse=True)


def compare_words(u: Sequence[int], v: Sequence[int]) -> int:
    """Lexicographic comparison; a proper prefix is the smaller word."""
    u, v = tuple(u), tuple(v)
    return (u > v) - (u < v)


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


class PositiveRoot(NamedTuple):
    """The root ``alpha(m, n) = alpha_m + ... + alpha_n``."""

    m: int
    n: int

    @property
    def word(self) -> Word:
        return tuple(range(self.m, self.n + 1))

    @property
    def height(self) -> int:
        return self.n - self.m + 1

    @property
    def vector(self) -> RootVector:
        return RootVector({i: 1 for i in self.word})

    def __str__(self) -> str:
        return f"({self.m}..{self.n})"


def positive_roots(alpha: RootVector) -> list[PositiveRoot]:
    """Positive roots ``beta`` with ``beta <= alpha`` coefficientwise, in increasing root order."""
    mult = alpha.as_dict()
    roots = []
    for m in mult:
        n = m
        while mult.get(n, 0) > 0:
            roots.append(PositiveRoot(m, n))
            n += 1
    return sorted(roots, key=lambda b: b.word)


@dataclass(frozen=True)
class RootPartition:
    """``beta_1^{p_1} ... beta_N^{p_N}`` with ``beta_1 > ... > beta_N``."""

    parts: tuple[tuple[PositiveRoot, int], ...]

    def __post_init__(self):
        for (b1, _), (b2, _) in zip(self.parts, self.parts[1:]):
            if not b1.word > b2.word:
                raise ValueError(f"roots out of order in root partition: {b1} <= {b2}")
        if any(p <= 0 for _, p in self.parts):
            raise ValueError("root partition multiplicities must be positive")

    @property
    def alpha(self) -> RootVector:
        out: dict[int, int] = {}
        for beta, p in self.parts:
            for i in beta.word:
                out[i] = out.get(i, 0) + p
        return RootVector(out)

    @property
    def height(self) -> int:
        return sum(beta.height * p for beta, p in self.parts)

    @property
    def word(self) -> Word:
        """The dominant word ``i_pi``."""
        return tuple(i for beta, p in self.parts for _ in range(p) for i in beta.word)

    @property
    def sh(self) -> int:
        return sum(p * (p - 1) // 2 for _, p in self.parts)

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        """The pi-blocks as tuples of 1-based strand positions."""
        out, pos = [], 1
        for beta, p in self.parts:
            for _ in range(p):
                out.append(tuple(range(pos, pos + beta.height)))
                pos += beta.height
        return out

    @property
    def block_sizes(self) -> list[int]:
        return [beta.height for beta, p in self.parts for _ in range(p)]

    def parabolic_order(self) -> int:
        """``|S_pi|``."""
        return math.prod(math.factorial(s) for s in self.block_sizes)

    def __str__(self) -> str:
        return " ".join(f"{beta}^{p}" for beta, p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "RootPartition":
        parts = []
        for m in re.finditer(r"\((-?\d+)\.\.(-?\d+)\)\^(\d+)", text):
            parts.append((PositiveRoot(int(m.group(1)), int(m.group(2))), int(m.group(3))))
        if not parts:
            raise ValueError(f"cannot parse root partition {text!r}")
        return cls(tuple(parts))


def root_partitions(alpha: RootVector) -> list[RootPartition]:
    """All root partitions of ``alpha``, descending in the order ``i_pi``."""
    roots = positive_roots(alpha)[::-1]  # largest first
    found: list[RootPartition] = []

    def descend(rest: RootVector, start: int, acc: list[tuple[PositiveRoot, int]]):
        if rest.height == 0:
            found.append(RootPartition(tuple(acc)))
            return
        for k in range(start, len(roots)):
            beta = roots[k]
            bv = beta.vector
            p = 1
            while rest.contains(p * bv):
                descend(rest - p * bv, k + 1, acc + [(beta, p)])
                p += 1

    if alpha.height:
        descend(alpha, 0, [])
    return sorted(found, key=lambda pi: pi.word, reverse=True)


# ---------------------------------------------------------------------------
# permutations


def identity(d: int) -> Perm:
    return tuple(range(1, d + 1))


def compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[v[k] - 1] for k in range(len(v)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for k, wk in enumerate(w, 1):
        out[wk - 1] = k
    return tuple(out)


def inversions(w: Perm) -> list[tuple[int, int]]:
    """Pairs ``(k, l)`` of 1-based positions with ``k < l`` and ``w(k) > w(l)``."""
    d = len(w)
    return [(k + 1, l + 1) for k in range(d) for l in range(k + 1, d) if w[k] > w[l]]


def length(w: Perm) -> int:
    d = len(w)
    return sum(1 for k in range(d) for l in range(k + 1, d) if w[k] > w[l])


def act(w: Perm, word: Sequence[int]) -> Word:
    """Place permutation: ``(w . i)[w(k)] = i[k]``."""
    out = [0] * len(word)
    for k, wk in enumerate(w):
        out[wk - 1] = word[k]
    return tuple(out)


def swap(word: Sequence[int], r: int) -> Word:
    """``s_r . word``."""
    word = list(word)
    word[r - 1], word[r] = word[r], word[r - 1]
    return tuple(word)


def left_mul_simple(r: int, w: Perm) -> Perm:
    """``s_r * w``: swap the values r and r+1."""
    return tuple(r + 1 if x == r else r if x == r + 1 else x for x in w)


def perm_from_word(word: Sequence[int], d: int) -> Perm:
    w = identity(d)
    for r in reversed(word):
        w = left_mul_simple(r, w)
    return w


def is_reduced(word: Sequence[int], d: int) -> bool:
    return length(perm_from_word(word, d)) == len(word)


def left_descents(w: Perm) -> list[int]:
    """``r`` with ``l(s_r w) < l(w)``, i.e. ``r + 1`` appears before ``r``."""
    pos = inverse(w)
    return [r for r in range(1, len(w)) if pos[r - 1] > pos[r]]


@lru_cache(maxsize=None)
def canonical_reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically least reduced word of ``w``."""
    out = []
    while True:
        desc = left_descents(w)
        if not desc:
            return tuple(out)
        r = desc[0]
        out.append(r)
        w = left_mul_simple(r, w)


def all_perms(d: int) -> list[Perm]:
    return list(itertools.permutations(range(1, d + 1)))


def longest_element(d: int) -> Perm:
    return tuple(range(d, 0, -1))


def _increasing_on_blocks(w: Perm, blocks: Sequence[Sequence[int]]) -> bool:
    return all(w[b[k] - 1] < w[b[k + 1] - 1] for b in blocks for k in range(len(b) - 1))


def min_coset_reps(pi: RootPartition) -> list[Perm]:
    """``S^pi``: the permutations increasing on every pi-block."""
    return _min_coset_reps(tuple(pi.block_sizes))


@lru_cache(maxsize=None)
def _min_coset_reps(sizes: tuple[int, ...]) -> list[Perm]:
    blocks, pos = [], 1
    for s in sizes:
        blocks.append(tuple(range(pos, pos + s)))
        pos += s
    return [w for w in all_perms(pos - 1) if _increasing_on_blocks(w, blocks)]


def parabolic_factorize(w: Perm, pi: RootPartition) -> tuple[Perm, Perm]:
    """Split ``w = w^pi * w_pi`` with ``w^pi`` in ``S^pi`` and ``w_pi`` in ``S_pi``."""
    top = list(w)
    for block in pi.blocks:
        vals = sorted(w[k - 1] for k in block)
        for k, v in zip(block, vals):
            top[k - 1] = v
    top = tuple(top)
    return top, compose(inverse(top), w)


# ---------------------------------------------------------------------------
# reduced words and braid moves


class Move(NamedTuple):
    kind: str  # "braid" or "commute"
    pos: int   # 0-based index of the first letter touched


def _neighbours(word: tuple[int, ...]) -> Iterator[tuple[Move, tuple[int, ...]]]:
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) > 1:
            yield Move("commute", p), word[:p] + (b, a) + word[p + 2:]
    for p in range(len(word) - 2):
        a, b, c = word[p:p + 3]
        if a == c and abs(a - b) == 1:
            yield Move("braid", p), word[:p] + (b, a, b) + word[p + 3:]


def apply_move(word: Sequence[int], move: Move) -> tuple[int, ...]:
    word = tuple(word)
    p = move.pos
    if move.kind == "commute":
        return word[:p] + (word[p + 1], word[p]) + word[p + 2:]
    a, b, c = word[p:p + 3]
    if not (a == c and abs(a - b) == 1):
        raise ValueError(f"no braid move at position {p} of {word}")
    return word[:p] + (b, a, b) + word[p + 3:]


@lru_cache(maxsize=4096)
def reduced_word_path(r1: tuple[int, ...], r2: tuple[int, ...]) -> tuple[Move, ...]:
    """Braid and commutation moves turning reduced word ``r1`` into ``r2`` (BFS)."""
    r1, r2 = tuple(r1), tuple(r2)
    d = max(r1 + r2, default=0) + 1
    if len(r1) != len(r2) or perm_from_word(r1, d) != perm_from_word(r2, d):
        raise ValueError(f"{r1} and {r2} are not words of the same permutation")
    if not is_reduced(r1, d):
        raise ValueError(f"{r1} is not reduced")
    if r1 == r2:
        return ()
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Move] | None] = {r1: None}
    queue = deque([r1])
    while queue:
        cur = queue.popleft()
        for move, nxt in _neighbours(cur):
            if nxt in parent:
                continue
            parent[nxt] = (cur, move)
            if nxt == r2:
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, mv = parent[node]
                    path.append(mv)
                    node = prev
                return tuple(reversed(path))
            queue.append(nxt)
    raise ValueError(f"no path between {r1} and {r2}")


def commutation_class(word: Sequence[int]) -> set[tuple[int, ...]]:
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for move, nxt in _neighbours(cur):
            if move.kind == "commute" and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _staircase(a: int) -> tuple[int, ...]:
    # (s_1)(s_2 s_1)(s_3 s_2 s_1)...: the braid diagram of the longest element
    return tuple(r for top in range(1, a) for r in range(top, 0, -1))


@lru_cache(maxsize=None)
def symmetric_w0_word(a: int) -> tuple[int, ...]:
    """A reduced word of ``w_0`` in ``S_a`` whose reverse is commutation-equivalent to it."""
    if a < 1:
        raise ValueError("a must be at least 1")
    candidates = [_staircase(a)]
    for word in candidates:
        if word[::-1] in commutation_class(word):
            return word
    raise AssertionError(f"staircase word for w_0 in S_{a} failed to verify")


# ---------------------------------------------------------------------------
# Poincare polynomials


def poincare(a: int, N: int | None = None) -> QSeries:
    """``sum_{w in S_a} t^{l(w)}`` via the product of ``(t^r - 1)/(t - 1)``."""
    if a < 1:
        raise ValueError("a must be at least 1")
    result = QSeries.one()
    for r in range(1, a + 1):
        result = result * QSeries.from_coeffs({k: 1 for k in range(r)})
    return result.truncate(N)


def poincare_brute_force(a: int) -> QSeries:
    counts: dict[int, int] = {}
    for w in all_perms(a):
        counts[length(w)] = counts.get(length(w), 0) + 1
    return QSeries.from_coeffs(counts)
