"""KLR algebras of type A_infinity: normal forms by term rewriting.

Every element is stored in the basis ``psi_w y^m e(i)`` (crossings on the
left, dots in the middle, the *right* idempotent last); the left idempotent of
such a term is ``w . i``.  ``psi_w`` always means the product of crossings
along the lexicographically least reduced word of ``w``.

The hard work happens in :class:`Rewriter`, which knows three things:

* ``psi_left(r, u, j)``: the normal form of ``psi_r psi_u e(j)``;
* ``dot_left(a, u, j)``: the normal form of ``y_a psi_u e(j)``;
* ``normalize_word(seq, j)``: the normal form of ``psi_seq e(j)`` for an
  arbitrary crossing sequence.

They call one another on strictly fewer crossings, which is what makes the
recursion terminate.  All three are memoized with bounded LRU caches; none of
them depends on ``alpha`` beyond the word ``j``, so one rewriter can serve
every algebra.

>>> R = KLRAlgebra(RootVector({1: 1, 2: 1}))
>>> print(R.psi(1) * R.psi(1) * R.e((1, 2)))
(1)*y[1,0]*e(1,2) + (-1)*y[0,1]*e(1,2)
"""

from __future__ import annotations

import json
from operator import add
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

from . import combinatorics as cb
from .combinatorics import Perm, RootVector, Word, cartan
from .polynomials import compositions
from .qseries import QSeries, inv_one_minus

__all__ = [
    "Rewriter", "KLRAlgebra", "Element", "Generator", "default_rewriter",
    "set_cache_limit", "psi_degree", "TerminationError", "get_algebra", "basis_sort_key",
]

Key = tuple[Perm, tuple[int, ...], Word]          # (w, m, i)
Terms = tuple[tuple[tuple[Perm, tuple[int, ...]], int], ...]


class TerminationError(AssertionError):
    pass


class Generator(NamedTuple):
    """A generator symbol: ``("e", word)``, ``("y", r)`` or ``("psi", r)``."""

    kind: str
    arg: Union[int, Word]

    def __str__(self) -> str:
        if self.kind == "e":
            return f"e({cb.format_word(self.arg)})"
        return f"{'s' if self.kind == 'psi' else 'y'}{self.arg}"


@lru_cache(maxsize=None)
def psi_degree(w: Perm, i: Word) -> int:
    """Degree of ``psi_w e(i)``, summed over the crossing strand pairs."""
    return -sum(cartan(i[k - 1], i[l - 1]) for k, l in cb.inversions(w))


def _accumulate(out: dict, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        del out[key]


def _shift(m1: tuple[int, ...], m2: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(add, m1, m2))


class Rewriter:
    """Memoized normalization of crossing and dot products against a right word."""

    def __init__(self, cache_limit: Optional[int] = 200_000, check_termination: bool = False):
        self.cache_limit = cache_limit
        self.check_termination = check_termination
        self.normalize_word = lru_cache(maxsize=cache_limit)(self._normalize_word)
        self.psi_left = lru_cache(maxsize=cache_limit)(self._psi_left)
        self.dot_left = lru_cache(maxsize=cache_limit)(self._dot_left)
        self.dots_through = lru_cache(maxsize=cache_limit)(self._dots_through)
        self.mono_product = lru_cache(maxsize=cache_limit)(self._mono_product)
        self._corrections = lru_cache(maxsize=cache_limit)(self._braid_corrections)

    def fresh(self) -> "Rewriter":
        """An independent rewriter with empty caches (per-task cache mode)."""
        return Rewriter(self.cache_limit, self.check_termination)

    def cache_info(self) -> dict[str, object]:
        return {
            name: getattr(self, name).cache_info()
            for name in ("normalize_word", "psi_left", "dot_left", "dots_through", "mono_product")
        }

    def _check(self, seq: Sequence[int], bound: int) -> None:
        if self.check_termination and len(seq) >= bound:
            raise TerminationError(
                f"correction term with {len(seq)} crossings does not decrease from {bound}"
            )

    # -- braid moves -------------------------------------------------------

    def _braid_corrections(self, start: tuple[int, ...], target: tuple[int, ...],
                           j: Word) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """Error terms collected while rewriting reduced word ``start`` into ``target``.

        ``psi_start e(j) = psi_target e(j) + sum coef * psi_seq e(j)``.
        """
        d = len(j)
        word = start
        out = []
        for move in cb.reduced_word_path(start, target):
            if move.kind == "braid":
                p = move.pos
                triple = word[p:p + 3]
                right = word[p + 3:]
                jr = cb.act(cb.perm_from_word(right, d), j)
                r = min(triple)
                x, y, z = jr[r - 1], jr[r], jr[r + 1]
                if x == z and x == y + 1:
                    eps = 1
                elif x == z and x == y - 1:
                    eps = -1
                else:
                    eps = 0
                if eps:
                    # psi_r psi_{r+1} psi_r = psi_{r+1} psi_r psi_{r+1} + eps
                    coef = eps if triple == (r, r + 1, r) else -eps
                    out.append((coef, word[:p] + right))
            word = cb.apply_move(word, move)
        return tuple(out)

    # -- the three memoized primitives -------------------------------------

    def _normalize_word(self, seq: tuple[int, ...], j: Word) -> Terms:
        d = len(j)
        if not seq:
            return (((cb.identity(d), (0,) * d), 1),)
        r = seq[0]
        if not 1 <= r < d:
            raise ValueError(f"crossing psi_{r} out of range for {d} strands")
        out: dict = {}
        for (u, m), c in self.normalize_word(seq[1:], j):
            for (u2, m2), c2 in self.psi_left(r, u, j):
                _accumulate(out, (u2, _shift(m2, m)), c * c2)
        return tuple(out.items())

    def _psi_left(self, r: int, u: Perm, j: Word) -> Terms:
        su = cb.left_mul_simple(r, u)
        U = cb.canonical_reduced_word(u)
        n_cross = len(U) + 1
        out: dict = {}
        if r not in cb.left_descents(u):
            start, target = (r,) + U, cb.canonical_reduced_word(su)
            out[(su, (0,) * len(j))] = 1
            for coef, seq in self._corrections(start, target, j):
                self._check(seq, n_cross)
                for key, c in self.normalize_word(seq, j):
                    _accumulate(out, key, coef * c)
            return tuple(out.items())

        # psi_r psi_u with l(s_r u) < l(u): bring r to the front, then square
        SU = cb.canonical_reduced_word(su)
        for coef, seq in self._corrections(U, (r,) + SU, j):
            seq = (r,) + seq
            self._check(seq, n_cross)
            for key, c in self.normalize_word(seq, j):
                _accumulate(out, key, coef * c)
        jj = cb.act(su, j)
        a, b = jj[r - 1], jj[r]
        self._check(SU, n_cross)
        if a == b:
            pass
        elif abs(a - b) > 1:
            _accumulate(out, (su, (0,) * len(j)), 1)
        else:
            # (y_{r+1} - y_r) if a = b + 1, (y_r - y_{r+1}) if a = b - 1
            plus, minus = (r + 1, r) if a == b + 1 else (r, r + 1)
            for key, c in self.dot_left(plus, su, j):
                _accumulate(out, key, c)
            for key, c in self.dot_left(minus, su, j):
                _accumulate(out, key, -c)
        return tuple(out.items())

    def _dot_left(self, a: int, u: Perm, j: Word) -> Terms:
        d = len(j)
        if not 1 <= a <= d:
            raise ValueError(f"dot y_{a} out of range for {d} strands")
        W = cb.canonical_reduced_word(u)
        k = len(W)
        # right[t]: the word just below the crossing W[t]
        right: list[Word] = [j] * k
        for t in range(k - 2, -1, -1):
            right[t] = cb.swap(right[t + 1], W[t + 1])
        out: dict = {}
        b = a
        for t, r in enumerate(W):
            jr = right[t]
            same = jr[r - 1] == jr[r]
            if b == r + 1:
                b = r
                sign = 1
            elif b == r:
                b = r + 1
                sign = -1
            else:
                continue
            if same:
                seq = W[:t] + W[t + 1:]
                self._check(seq, k)
                for key, c in self.normalize_word(seq, j):
                    _accumulate(out, key, sign * c)
        m = [0] * d
        m[b - 1] = 1
        _accumulate(out, (u, tuple(m)), 1)
        return tuple(out.items())

    def _dots_through(self, m: tuple[int, ...], u: Perm, j: Word) -> Terms:
        """Normal form of ``y^m psi_u e(j)``."""
        for a, x in enumerate(m, 1):
            if x:
                break
        else:
            return (((u, m), 1),)
        rest = list(m)
        rest[a - 1] -= 1
        out: dict = {}
        for (u2, m2), c in self.dots_through(tuple(rest), u, j):
            for (u3, m3), c3 in self.dot_left(a, u2, j):
                _accumulate(out, (u3, _shift(m3, m2)), c * c3)
        return tuple(out.items())

    def _mono_product(self, w: Perm, m: tuple[int, ...], v: Perm, j: Word) -> Terms:
        """Normal form of ``psi_w y^m psi_v e(j)``."""
        W = cb.canonical_reduced_word(w)
        out: dict = {}
        for (u, m2), c in self.dots_through(m, v, j):
            for (u2, m3), c2 in self.normalize_word(W + cb.canonical_reduced_word(u), j):
                _accumulate(out, (u2, _shift(m3, m2)), c * c2)
        return tuple(out.items())


default_rewriter = Rewriter()


def set_cache_limit(limit: Optional[int]) -> None:
    """Replace the shared rewriter with one whose caches hold ``limit`` entries."""
    global default_rewriter
    default_rewriter = Rewriter(limit)


# ---------------------------------------------------------------------------


class KLRAlgebra:
    """The algebra ``R_alpha`` over the integers."""

    def __init__(self, alpha: RootVector, rewriter: Optional[Rewriter] = None):
        self.alpha = alpha
        self.d = alpha.height
        self.words: list[Word] = cb.words_of(alpha)
        self.word_set = frozenset(self.words)
        self._rewriter = rewriter

    @property
    def rewriter(self) -> Rewriter:
        return self._rewriter or default_rewriter

    def __repr__(self) -> str:
        return f"KLRAlgebra({self.alpha})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KLRAlgebra) and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash(self.alpha)

    # -- constructors ------------------------------------------------------

    def element(self, terms: Mapping[Key, int]) -> "Element":
        return Element(self, {k: c for k, c in terms.items() if c})

    def zero(self) -> "Element":
        return Element(self, {})

    def monomial(self, w: Sequence[int], m: Sequence[int], i: Sequence[int], c: int = 1) -> "Element":
        w, m, i = tuple(w), tuple(m), tuple(i)
        self._check_word(i)
        if len(w) != self.d or len(m) != self.d:
            raise ValueError("monomial data does not match the height of alpha")
        return Element(self, {(w, m, i): c} if c else {})

    def e(self, i: Sequence[int]) -> "Element":
        i = tuple(i)
        self._check_word(i)
        return Element(self, {(cb.identity(self.d), (0,) * self.d, i): 1})

    def one(self) -> "Element":
        idw, zero = cb.identity(self.d), (0,) * self.d
        return Element(self, {(idw, zero, i): 1 for i in self.words})

    def y(self, r: int) -> "Element":
        return self.left_mul_gen(Generator("y", r), self.one())

    def psi(self, r: int) -> "Element":
        return self.left_mul_gen(Generator("psi", r), self.one())

    def dots(self, m: Sequence[int]) -> "Element":
        """``y^m`` (times the identity)."""
        m = tuple(m)
        idw = cb.identity(self.d)
        return Element(self, {(idw, m, i): 1 for i in self.words})

    def poly(self, f: Mapping[tuple[int, ...], int]) -> "Element":
        """A polynomial in the dots, times the identity."""
        idw = cb.identity(self.d)
        return Element(self, {(idw, m, i): c for m, c in f.items() for i in self.words if c})

    def psi_word(self, seq: Sequence[int]) -> "Element":
        """``psi_{r_1} ... psi_{r_k}`` (times the identity), normalized."""
        seq = tuple(seq)
        out: dict = {}
        for j in self.words:
            for (u, m), c in self.rewriter.normalize_word(seq, j):
                _accumulate(out, (u, m, j), c)
        return Element(self, out)

    def psi_w(self, w: Perm) -> "Element":
        return self.psi_word(cb.canonical_reduced_word(tuple(w)))

    def _check_word(self, i: Word) -> None:
        if i not in self.word_set:
            raise ValueError(f"word {i} does not have content {self.alpha}")

    # -- grading -----------------------------------------------------------

    @staticmethod
    def degree(key: Key) -> int:
        w, m, i = key
        return psi_degree(w, i) + 2 * sum(m)

    # -- products ----------------------------------------------------------

    def left_mul_gen(self, g: Generator, x: "Element") -> "Element":
        rw = self.rewriter
        out: dict = {}
        if g.kind == "e":
            j = tuple(g.arg)
            self._check_word(j)
            return Element(self, {k: c for k, c in x.terms.items() if cb.act(k[0], k[2]) == j})
        if g.kind == "y":
            if not 1 <= g.arg <= self.d:
                raise ValueError(f"dot index {g.arg} out of range 1..{self.d}")
            for (w, m, i), c in x.terms.items():
                for (u, m2), c2 in rw.dot_left(g.arg, w, i):
                    _accumulate(out, (u, _shift(m2, m), i), c * c2)
            return Element(self, out)
        if g.kind == "psi":
            if not 1 <= g.arg < self.d:
                raise ValueError(f"crossing index {g.arg} out of range 1..{self.d - 1}")
            for (w, m, i), c in x.terms.items():
                for (u, m2), c2 in rw.psi_left(g.arg, w, i):
                    _accumulate(out, (u, _shift(m2, m), i), c * c2)
            return Element(self, out)
        raise ValueError(f"unknown generator kind {g.kind!r}")

    def left_mul_word(self, seq: Sequence[int], x: "Element") -> "Element":
        """``psi_seq * x`` for an arbitrary crossing sequence."""
        seq = tuple(seq)
        rw = self.rewriter
        out: dict = {}
        for (w, m, i), c in x.terms.items():
            full = seq + cb.canonical_reduced_word(w)
            for (u, m2), c2 in rw.normalize_word(full, i):
                _accumulate(out, (u, _shift(m2, m), i), c * c2)
        return Element(self, out)

    def left_mul_dots(self, m: Sequence[int], x: "Element") -> "Element":
        m = tuple(m)
        rw = self.rewriter
        out: dict = {}
        for (w, n, i), c in x.terms.items():
            for (u, m2), c2 in rw.dots_through(m, w, i):
                _accumulate(out, (u, _shift(m2, n), i), c * c2)
        return Element(self, out)

    def mul(self, x: "Element", y: "Element") -> "Element":
        if x.algebra != self or y.algebra != self:
            raise ValueError("cannot multiply elements of different algebras")
        rw = self.rewriter
        # group y by (v, j); the dots on the right of each group just ride along
        by_left: dict[Word, dict] = {}
        for (v, n, j), c in y.terms.items():
            by_left.setdefault(cb.act(v, j), {}).setdefault((v, j), []).append((n, c))
        out: dict = {}
        get = out.get
        for (w, m, i), c1 in x.terms.items():
            partners = by_left.get(i)
            if not partners:
                continue
            for (v, j), tail in partners.items():
                for (u, m2), c3 in rw.mono_product(w, m, v, j):
                    c13 = c1 * c3
                    for n, c2 in tail:
                        key = (u, _shift(m2, n), j)
                        out[key] = get(key, 0) + c13 * c2
        return Element(self, {k: c for k, c in out.items() if c})

    def tau(self, x: "Element") -> "Element":
        """The anti-involution fixing ``e(i)``, ``y_r`` and ``psi_r``."""
        rw = self.rewriter
        out: dict = {}
        for (w, m, i), c in x.terms.items():
            j = cb.act(w, i)
            rev = cb.canonical_reduced_word(w)[::-1]
            for (u, m2), c2 in rw.normalize_word(rev, j):
                for (u3, m3), c3 in rw.dots_through(m, u, j):
                    _accumulate(out, (u3, _shift(m3, m2), j), c * c2 * c3)
        return Element(self, out)

    def generator_sequence(self, key: Key) -> list[Generator]:
        """Crossings along the canonical word, then dots, then the idempotent."""
        w, m, i = key
        gens = [Generator("psi", r) for r in cb.canonical_reduced_word(w)]
        for a, x in enumerate(m, 1):
            gens.extend([Generator("y", a)] * x)
        gens.append(Generator("e", i))
        return gens

    def from_generators(self, gens: Sequence[Generator]) -> "Element":
        """Multiply out a generator sequence right to left."""
        x = self.one()
        for g in reversed(gens):
            x = self.left_mul_gen(g, x)
        return x

    # -- the PBW basis -----------------------------------------------------

    def min_degree(self) -> int:
        return min((psi_degree(w, i) for i in self.words for w in cb.all_perms(self.d)),
                   default=0)

    def pbw_basis_at_degree(self, n: int, block: Optional[tuple[Word, Word]] = None) -> list[Key]:
        """All basis monomials of degree ``n`` (optionally inside ``e(j) R e(i)``)."""
        d = self.d
        words = self.words if block is None else [block[1]]
        out = []
        for i in words:
            for w in cb.all_perms(d):
                if block is not None and cb.act(w, i) != block[0]:
                    continue
                rest = n - psi_degree(w, i)
                if rest < 0 or rest % 2:
                    continue
                for m in compositions(rest // 2, d):
                    out.append((w, m, i))
        return sorted(out, key=basis_sort_key)

    def dim_q_pbw(self, N: int) -> QSeries:
        """Graded rank up to ``q^N``, from the PBW basis."""
        crossing_part: dict[int, int] = {}
        for i in self.words:
            for w in cb.all_perms(self.d):
                e = psi_degree(w, i)
                crossing_part[e] = crossing_part.get(e, 0) + 1
        lo = min(crossing_part)
        dots = QSeries.one(N - lo)
        for _ in range(self.d):
            dots = dots * inv_one_minus(2, N - lo)
        return QSeries.from_coeffs(crossing_part) * dots


@lru_cache(maxsize=None)
def get_algebra(alpha: RootVector) -> KLRAlgebra:
    """A shared algebra instance per ``alpha`` (it uses the shared rewriter)."""
    return KLRAlgebra(alpha)


def basis_sort_key(key: Key):
    """Canonical term order: degree, then w, then dots (y_1 first), then word."""
    w, m, i = key
    return (KLRAlgebra.degree(key), w, tuple(-x for x in m), i)


class Element:
    """A finite integer combination of normal monomials ``psi_w y^m e(i)``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: KLRAlgebra, terms: Mapping[Key, int]):
        self.algebra = algebra
        self.terms = dict(terms)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise ValueError("elements live in different algebras")
            return other
        if isinstance(other, int):
            return self.algebra.one() * other if other else self.algebra.zero()
        return NotImplemented

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Element":
        return (-self) + other

    def __mul__(self, other) -> "Element":
        if isinstance(other, int):
            return Element(self.algebra, {k: c * other for k, c in self.terms.items()} if other else {})
        if isinstance(other, Element):
            return self.algebra.mul(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def tau(self) -> "Element":
        return self.algebra.tau(self)

    # -- grading and blocks ------------------------------------------------

    def degrees(self) -> set[int]:
        return {KLRAlgebra.degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def homogeneous_components(self) -> dict[int, "Element"]:
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            out.setdefault(KLRAlgebra.degree(k), {})[k] = c
        return {n: Element(self.algebra, t) for n, t in out.items()}

    def blocks(self) -> dict[tuple[Word, Word], dict[Key, int]]:
        """Split into ``e(j) x e(i)`` pieces keyed by ``(j, i)``."""
        out: dict = {}
        for k, c in self.terms.items():
            w, _, i = k
            out.setdefault((cb.act(w, i), i), {})[k] = c
        return out

    def max_crossings(self) -> int:
        return max((cb.length(k[0]) for k in self.terms), default=0)

    # -- output ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items(), key=lambda kc: basis_sort_key(kc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_term(k, c) for k, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Element({self})"

    def to_json(self) -> dict:
        return {
            "alpha": str(self.algebra.alpha),
            "terms": [
                {
                    "coeff": c,
                    "psi": list(cb.canonical_reduced_word(w)),
                    "w": list(w),
                    "y": list(m),
                    "e": list(i),
                    "degree": KLRAlgebra.degree((w, m, i)),
                }
                for (w, m, i), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, algebra: KLRAlgebra, data) -> "Element":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {}
        for t in data["terms"]:
            w = tuple(t["w"]) if "w" in t else cb.perm_from_word(t["psi"], algebra.d)
            terms[(w, tuple(t["y"]), tuple(t["e"]))] = int(t["coeff"])
        return algebra.element(terms)


def format_term(key: Key, c: int) -> str:
    w, m, i = key
    parts = [f"({c})"]
    word = cb.canonical_reduced_word(w)
    if word:
        parts.append(f"psi[{cb.format_word(word)}]")
    if any(m):
        parts.append(f"y[{cb.format_word(m)}]")
    parts.append(f"e({cb.format_word(i)})")
    return "*".join(parts)
