"""Sparse integer polynomials in ``y_1, ..., y_n``.

A polynomial is a dict mapping exponent tuples to nonzero ints; the zero
polynomial is ``{}``.  Variables are 1-based to match the dot generators.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

Exponent = tuple[int, ...]
Poly = dict[Exponent, int]

__all__ = [
    "Poly", "const", "var", "monomial", "add", "sub", "scale", "mul", "power",
    "swap", "divided_difference", "is_symmetric", "partitions",
    "monomial_symmetric", "to_monomial_symmetric", "homogeneous_parts",
    "poly_degree", "compositions", "format_poly",
]


def const(n: int, c: int = 1) -> Poly:
    return {(0,) * n: c} if c else {}


def var(n: int, r: int) -> Poly:
    if not 1 <= r <= n:
        raise ValueError(f"variable y_{r} out of range for {n} variables")
    e = [0] * n
    e[r - 1] = 1
    return {tuple(e): 1}


def monomial(exps: Sequence[int], c: int = 1) -> Poly:
    return {tuple(exps): c} if c else {}


def add(f: Mapping[Exponent, int], g: Mapping[Exponent, int]) -> Poly:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(f: Mapping[Exponent, int], c: int) -> Poly:
    return {e: c * v for e, v in f.items()} if c else {}


def sub(f: Mapping[Exponent, int], g: Mapping[Exponent, int]) -> Poly:
    return add(f, scale(g, -1))


def mul(f: Mapping[Exponent, int], g: Mapping[Exponent, int]) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def power(f: Mapping[Exponent, int], k: int, n: int) -> Poly:
    out = const(n)
    for _ in range(k):
        out = mul(out, f)
    return out


def swap(f: Mapping[Exponent, int], r: int) -> Poly:
    """``s_r f``: exchange ``y_r`` and ``y_{r+1}``."""
    out = {}
    for e, c in f.items():
        e = list(e)
        e[r - 1], e[r] = e[r], e[r - 1]
        out[tuple(e)] = c
    return out


def divided_difference(f: Mapping[Exponent, int], r: int) -> Poly:
    """``(f - s_r f) / (y_{r+1} - y_r)``, computed monomial by monomial."""
    out: Poly = {}
    for e, c in f.items():
        a, b = e[r - 1], e[r]
        if a == b:
            continue
        lo, gap = min(a, b), abs(a - b)
        sign = c if b > a else -c
        base = list(e)
        for k in range(gap):
            base[r - 1] = lo + k
            base[r] = lo + gap - 1 - k
            key = tuple(base)
            v = out.get(key, 0) + sign
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def is_symmetric(f: Mapping[Exponent, int], variables: Sequence[int] | None = None) -> bool:
    if not f:
        return True
    n = len(next(iter(f)))
    variables = list(variables or range(1, n + 1))
    for e, c in f.items():
        sub_e = [e[v - 1] for v in variables]
        for perm in set(itertools.permutations(sub_e)):
            e2 = list(e)
            for v, x in zip(variables, perm):
                e2[v - 1] = x
            if f.get(tuple(e2), 0) != c:
                return False
    return True


@lru_cache(maxsize=None)
def partitions(k: int, max_parts: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``k`` into at most ``max_parts`` parts, reverse lex order."""
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``k`` into ``n`` parts."""
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions(k - first, n - 1):
            yield (first,) + rest


def monomial_symmetric(lam: Sequence[int], n: int, variables: Sequence[int] | None = None) -> Poly:
    """``m_lambda`` in the given variables (default ``y_1..y_n``)."""
    variables = list(variables or range(1, n + 1))
    lam = tuple(lam) + (0,) * (len(variables) - len(lam))
    if len(lam) > len(variables):
        return {}
    out: Poly = {}
    for perm in set(itertools.permutations(lam)):
        e = [0] * n
        for v, x in zip(variables, perm):
            e[v - 1] = x
        out[tuple(e)] = 1
    return out


def to_monomial_symmetric(f: Mapping[Exponent, int]) -> dict[tuple[int, ...], int]:
    """Coordinates of a symmetric ``f`` in the monomial symmetric basis."""
    if not is_symmetric(f):
        raise ValueError("polynomial is not symmetric")
    out = {}
    for e, c in f.items():
        if list(e) == sorted(e, reverse=True):
            out[tuple(x for x in e if x)] = c
    return out


def poly_degree(e: Exponent) -> int:
    return sum(e)


def homogeneous_parts(f: Mapping[Exponent, int]) -> dict[int, Poly]:
    out: dict[int, Poly] = {}
    for e, c in f.items():
        out.setdefault(sum(e), {})[e] = c
    return out


def format_poly(f: Mapping[Exponent, int]) -> str:
    if not f:
        return "0"
    terms = []
    for e, c in sorted(f.items(), reverse=True):
        mono = "*".join(f"y{k + 1}" + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x)
        terms.append(f"{c}" + (f"*{mono}" if mono else ""))
    return " + ".join(terms)
