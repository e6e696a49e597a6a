"""Exact integer lattices: row Hermite normal form, membership, equality.

Vectors are handled sparsely as ``{column: value}`` dicts; dense lists are
accepted wherever a vector is expected.  A :class:`Lattice` keeps an echelon
basis keyed by pivot column (the smallest column of each row) and is grown one
vector at a time with extended-gcd row operations, so no step ever leaves the
integers.

>>> hnf([[2, 1], [1, 1]])
[[1, 0], [0, 1]]
>>> L = Lattice(2, [[2, 0]])
>>> L.contains([1, 0]), L.contains([4, 0])
(False, True)
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence, Union

__all__ = [
    "Lattice", "hnf", "member", "lattice_equal", "is_unimodular_square",
    "solve", "xgcd", "determinant",
]

Vector = Union[Mapping[int, int], Sequence[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _sparse(v: Vector) -> dict[int, int]:
    if isinstance(v, Mapping):
        return {int(k): int(x) for k, x in v.items() if x}
    return {k: int(x) for k, x in enumerate(v) if x}


def _axpy(v: dict[int, int], a: int, p: Mapping[int, int]) -> None:
    """``v += a * p`` in place."""
    for k, x in p.items():
        val = v.get(k, 0) + a * x
        if val:
            v[k] = val
        else:
            v.pop(k, None)


class Lattice:
    """A sublattice of ``Z^dim`` spanned by the rows given so far."""

    def __init__(self, dim: int, rows: Iterable[Vector] = ()):
        self.dim = dim
        self._pivots: dict[int, dict[int, int]] = {}
        self._canonical: Optional[tuple] = None
        for row in rows:
            self.add(row)

    def copy(self) -> "Lattice":
        other = Lattice(self.dim)
        other._pivots = {c: dict(p) for c, p in self._pivots.items()}
        return other

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, v: Vector) -> bool:
        """Insert ``v``; return True if the lattice grew."""
        v = _sparse(v)
        if any(k < 0 or k >= self.dim for k in v):
            raise ValueError("vector has a coordinate outside the ambient dimension")
        grew = False
        piv = self._pivots
        while v:
            c = min(v)
            p = piv.get(c)
            if p is None:
                if v[c] < 0:
                    v = {k: -x for k, x in v.items()}
                piv[c] = v
                grew = True
                break
            a, b = p[c], v[c]
            if b % a == 0:
                _axpy(v, -(b // a), p)
                continue
            g, x, y = xgcd(a, b)
            new_p = {k: x * val for k, val in p.items() if x}
            _axpy(new_p, y, v)
            new_v = dict(v) if a == g else {k: (a // g) * val for k, val in v.items()}
            _axpy(new_v, -(b // g), p)
            piv[c] = new_p
            v = new_v
            grew = True
        if grew:
            self._canonical = None
        return grew

    def extend(self, rows: Iterable[Vector]) -> None:
        for row in rows:
            self.add(row)

    def contains(self, v: Vector) -> bool:
        v = _sparse(v)
        piv = self._pivots
        while v:
            c = min(v)
            p = piv.get(c)
            if p is None or v[c] % p[c]:
                return False
            _axpy(v, -(v[c] // p[c]), p)
        return True

    __contains__ = contains

    def reduce(self, v: Vector) -> dict[int, int]:
        """Canonical representative of ``v`` modulo the lattice."""
        v = _sparse(v)
        for c in sorted(self._pivots):
            x = v.get(c)
            if x:
                p = self._pivots[c]
                q = x // p[c]
                if q:
                    _axpy(v, -q, p)
        return v

    def is_full(self) -> bool:
        """True iff the lattice is all of ``Z^dim``."""
        return self.rank == self.dim and all(p[c] == 1 for c, p in self._pivots.items())

    def is_saturated(self) -> bool:
        """True iff ``Z^dim / L`` is torsion free."""
        return all(p[c] == 1 for c, p in self._pivots.items())

    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)

    def hnf_rows(self) -> list[dict[int, int]]:
        """Canonical row-style HNF: positive pivots, entries above pivots reduced."""
        cols = sorted(self._pivots)
        rows = [dict(self._pivots[c]) for c in cols]
        for k, c in enumerate(cols):
            d = rows[k][c]
            for j in range(k):
                x = rows[j].get(c, 0)
                q = x // d
                if q:
                    _axpy(rows[j], -q, rows[k])
        return rows

    def canonical(self) -> tuple:
        if self._canonical is None:
            self._canonical = tuple(tuple(sorted(r.items())) for r in self.hnf_rows())
        return self._canonical

    def dense_hnf(self) -> list[list[int]]:
        out = []
        for r in self.hnf_rows():
            row = [0] * self.dim
            for k, x in r.items():
                row[k] = x
            out.append(row)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        if self.dim != other.dim or self._pivots.keys() != other._pivots.keys():
            return False
        if self._canonical is not None and other._canonical is not None:
            return self._canonical == other._canonical
        # same rational span and L <= L': the index is the ratio of pivot products
        return self._pivot_product() == other._pivot_product() and self <= other

    def _pivot_product(self) -> int:
        out = 1
        for c, p in self._pivots.items():
            out *= p[c]
        return out

    def __le__(self, other: "Lattice") -> bool:
        return all(other.contains(p) for p in self._pivots.values())

    def __add__(self, other: "Lattice") -> "Lattice":
        out = self.copy()
        out.extend(other._pivots.values())
        return out

    def __repr__(self) -> str:
        return f"Lattice(dim={self.dim}, rank={self.rank})"


def hnf(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form of ``M`` with zero rows dropped."""
    ncols = len(M[0]) if M else 0
    return Lattice(ncols, M).dense_hnf()


def member(v: Vector, L: Lattice) -> bool:
    return L.contains(v)


def lattice_equal(L1: Lattice, L2: Lattice) -> bool:
    return L1 == L2


def is_unimodular_square(M: Sequence[Vector], dim: Optional[int] = None) -> bool:
    """Square with determinant +-1 (rows may be dense or sparse)."""
    n = len(M)
    if dim is None:
        dim = n if not M or isinstance(M[0], Mapping) else len(M[0])
    if dim != n:
        return False
    return Lattice(dim, M).is_full()


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    A = [list(map(int, row)) for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for j in range(k + 1, n):
                if A[j][k]:
                    A[k], A[j] = A[j], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def solve(M: Sequence[Vector], v: Vector, dim: int) -> Optional[tuple[list[int], int]]:
    """Find integers ``x`` with ``sum_k x[k] * M[k] == v``.

    Returns ``(x, nullity)`` where ``nullity`` is the rank of the integer
    relations among the rows (0 means the solution is unique), or None when
    ``v`` is not in the row span.
    """
    m = len(M)
    # augmented rows [M_k | e_k]; identity block sits after the ambient columns
    L = Lattice(dim + m)
    for k, row in enumerate(M):
        aug = _sparse(row)
        aug[dim + k] = 1
        L.add(aug)
    w = _sparse(v)
    piv = L._pivots
    while w and min(w) < dim:
        c = min(w)
        p = piv.get(c)
        if p is None or w[c] % p[c]:
            return None
        _axpy(w, -(w[c] // p[c]), p)
    x = [-w.get(dim + k, 0) for k in range(m)]
    nullity = sum(1 for c in piv if c >= dim)
    return x, nullity
