"""The affine nilHecke algebra H_a, Schubert polynomials and the idempotent e_a.

``H_a`` is not a separate implementation: it is ``R_{a alpha_i}`` for a single
vertex ``i``, where every word is ``(i, ..., i)`` and the crossings act on
polynomials by divided differences.

>>> from klrcell.polynomials import format_poly
>>> format_poly(divided_difference(1, {(0, 2): 1}))
'1*y1 + 1*y2'
>>> format_poly(schubert(longest_element(3), 3))
'1'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import combinatorics as cb
from . import polynomials as P
from .combinatorics import Perm, RootVector, longest_element
from .engine import Element, KLRAlgebra
from .graded import GradedLattice, component_blocks
from .reports import Report
from .zlattice import Lattice, is_unimodular_square, solve

__all__ = [
    "NilHecke", "nilhecke", "delta", "e_a", "divided_difference", "divided_difference_word",
    "schubert", "schubert_expand", "assemble", "center_basis", "is_central",
    "verify_nilhecke", "SymPoly", "longest_element",
]

SymPoly = dict[tuple[int, ...], int]  # partition -> coefficient of m_lambda


@dataclass(frozen=True)
class NilHecke:
    a: int
    vertex: int = 1

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("rank a must be at least 1")

    @property
    def alpha(self) -> RootVector:
        return RootVector({self.vertex: self.a})

    @property
    def algebra(self) -> KLRAlgebra:
        return _algebra(self.alpha)

    @property
    def word(self) -> tuple[int, ...]:
        return (self.vertex,) * self.a


@lru_cache(maxsize=None)
def _algebra(alpha: RootVector) -> KLRAlgebra:
    return KLRAlgebra(alpha)


def nilhecke(a: int, vertex: int = 1) -> NilHecke:
    return NilHecke(a, vertex)


def delta_exponent(a: int) -> tuple[int, ...]:
    return tuple(range(a))


def delta(a: int, vertex: int = 1) -> Element:
    """``y_2 y_3^2 ... y_a^(a-1)``."""
    H = NilHecke(a, vertex)
    return H.algebra.monomial(cb.identity(a), delta_exponent(a), H.word)


@lru_cache(maxsize=None)
def _e_a(a: int, vertex: int) -> Element:
    H = NilHecke(a, vertex)
    return H.algebra.psi_w(longest_element(a)) * delta(a, vertex)


def e_a(a: int, vertex: int = 1) -> Element:
    """The idempotent ``psi_{w_0} delta_a``."""
    return _e_a(a, vertex)


def divided_difference(r: int, f: P.Poly) -> P.Poly:
    """``(f - s_r f) / (y_{r+1} - y_r)``, checked to be exact."""
    q = P.divided_difference(f, r)
    if f:
        n = len(next(iter(f)))
        back = P.mul(P.sub(P.var(n, r + 1), P.var(n, r)), q)
        if back != P.sub(f, P.swap(f, r)):
            raise AssertionError(f"divided difference by y_{r + 1} - y_{r} left a remainder")
    return q


def divided_difference_word(word, f: P.Poly) -> P.Poly:
    """Apply ``psi_{r_1} ... psi_{r_k}`` to ``f`` (rightmost first)."""
    for r in reversed(tuple(word)):
        f = P.divided_difference(f, r)
    return f


@lru_cache(maxsize=None)
def _schubert(w: Perm) -> tuple:
    a = len(w)
    f = P.monomial(delta_exponent(a))
    return tuple(sorted(divided_difference_word(cb.canonical_reduced_word(w), f).items()))


def schubert(w: Perm, a: Optional[int] = None) -> P.Poly:
    """``psi_w(delta_a)`` as a polynomial."""
    w = tuple(w)
    if a is not None and len(w) != a:
        raise ValueError(f"permutation {w} is not in S_{a}")
    return dict(_schubert(w))


def sym_to_poly(c: SymPoly, a: int) -> P.Poly:
    out: P.Poly = {}
    for lam, x in c.items():
        out = P.add(out, P.scale(P.monomial_symmetric(lam, a), x))
    return out


def assemble(coeffs: dict[Perm, SymPoly], a: int) -> P.Poly:
    """``sum_w c_w psi_w(delta_a)``."""
    out: P.Poly = {}
    for w, c in coeffs.items():
        out = P.add(out, P.mul(sym_to_poly(c, a), schubert(w, a)))
    return out


def _expand_lattice(f: P.Poly, a: int) -> dict[Perm, SymPoly]:
    out: dict[Perm, SymPoly] = {}
    top = a * (a - 1) // 2
    for k, part in sorted(P.homogeneous_parts(f).items()):
        columns = {e: c for c, e in enumerate(P.compositions(k, a))}
        labels, rows = [], []
        for w in cb.all_perms(a):
            rest = k - (top - cb.length(w))
            if rest < 0:
                continue
            for lam in P.partitions(rest, a):
                g = P.mul(P.monomial_symmetric(lam, a), schubert(w, a))
                labels.append((w, lam))
                rows.append({columns[e]: c for e, c in g.items()})
        target = {columns[e]: c for e, c in part.items()}
        sol = solve(rows, target, len(columns))
        if sol is None:
            raise AssertionError(f"degree {k} part is outside the span of the Schubert basis")
        x, nullity = sol
        if nullity:
            raise AssertionError(f"Schubert products are dependent in degree {k}")
        for (w, lam), c in zip(labels, x):
            if c:
                out.setdefault(w, {})[lam] = out.get(w, {}).get(lam, 0) + c
    return out


def _expand_operators(f: P.Poly, a: int) -> dict[Perm, SymPoly]:
    w0 = longest_element(a)
    out: dict[Perm, SymPoly] = {}
    rest = dict(f)
    for w in sorted(cb.all_perms(a), key=lambda u: (cb.length(u), u)):
        v = cb.compose(w0, cb.inverse(w))
        c = divided_difference_word(cb.canonical_reduced_word(v), rest)
        if c:
            out[w] = P.to_monomial_symmetric(c)
            rest = P.sub(rest, P.mul(c, schubert(w, a)))
    if rest:
        raise AssertionError("operator extraction left a remainder")
    return out


def schubert_expand(f: P.Poly, a: int, method: str = "lattice") -> dict[Perm, SymPoly]:
    """Symmetric coefficients ``c_w`` with ``f = sum_w c_w psi_w(delta_a)``.

    ``method`` is ``"lattice"`` (integer linear algebra, degree by degree) or
    ``"operators"`` (peel off ``c_w`` with divided differences).
    """
    if method == "lattice":
        return _expand_lattice(f, a)
    if method == "operators":
        return _expand_operators(f, a)
    raise ValueError(f"unknown method {method!r}")


def center_basis(a: int, n: int, vertex: int = 1) -> list[Element]:
    """Monomial symmetric polynomials of degree ``n`` as elements of ``H_a``."""
    if n < 0 or n % 2:
        return []
    H = NilHecke(a, vertex)
    return [H.algebra.poly(P.monomial_symmetric(lam, a)) for lam in P.partitions(n // 2, a)]


def is_central(x: Element) -> bool:
    R = x.algebra
    gens = [R.y(r) for r in range(1, R.d + 1)] + [R.psi(r) for r in range(1, R.d)]
    gens += [R.e(i) for i in R.words]
    return all(g * x == x * g for g in gens)


# -- the per-degree verification -----------------------------------------


def _span(R: KLRAlgebra, n: int, elements) -> GradedLattice:
    return GradedLattice(R, n, elements)


def verify_nilhecke(a: int, N: int, vertex: int = 1, lo: Optional[int] = None) -> Report:
    """Check the structure of ``H_a`` and ``e_a`` in every degree ``lo..N``.

    Degree-free checks: ``e_a`` idempotent, ``e_a psi_{w_0} = psi_{w_0}``,
    ``psi_{w_0}(delta_a) = 1``, centrality of low-degree symmetric polynomials.
    Per degree ``n``:

    * ``H e_a``: ``{y^m e_a}`` is a basis of the span of ``{b e_a}`` over PBW ``b``;
      and ``psi_r (f e_a) = (d_r f) e_a``;
    * ``e_a H e_a``: ``{m_lambda e_a}`` is a basis of it;
    * ``H e_a H`` is the whole component;
    * ``{psi_w b_x delta_a e_a psi_v^tau}`` is a unimodular change of basis.
    """
    H = NilHecke(a, vertex)
    R = H.algebra
    ea = e_a(a, vertex)
    w0 = longest_element(a)
    top = a * (a - 1)
    if lo is None:
        lo = -top
    report = Report("nilhecke", params={"a": a, "N": N, "lo": lo, "vertex": vertex})
    tag = {"alpha": str(H.alpha)}

    report.add("e_a idempotent", ea * ea == ea, **tag)
    psi_w0 = R.psi_w(w0)
    report.add("e_a psi_w0 = psi_w0", ea * psi_w0 == psi_w0, **tag)
    report.add("psi_w0(delta_a) = 1", schubert(w0, a) == P.const(a), **tag)
    for k in range(0, 4):
        for z in center_basis(a, 2 * k, vertex):
            report.add("symmetric polynomials central", is_central(z), degree=2 * k, **tag)

    eh_basis = {}  # degree -> elements e_a psi_{w0} f
    for n in range(lo, N + 1):
        comp = component_blocks(R, n)
        if not comp:
            continue
        pbw = [R.element({k: 1}) for k in R.pbw_basis_at_degree(n)]

        # H e_a
        mono = []
        if n >= 0 and n % 2 == 0:
            mono = [R.monomial(cb.identity(a), m, H.word) for m in P.compositions(n // 2, a)]
        f_ea = [m * ea for m in mono]
        span_f = _span(R, n, f_ea)
        span_all = _span(R, n, [b * ea for b in pbw])
        ok = span_f == span_all and span_f.rank == len(mono)
        report.add("H e_a = P_a e_a", ok, degree=n, **tag,
                   detail={"rank": span_f.rank, "monomials": len(mono)})
        equivariant = True
        for exps in (P.compositions(n // 2, a) if mono else ()):
            f = P.monomial(exps)
            for r in range(1, a):
                lhs = R.psi(r) * R.poly(f) * ea
                rhs = R.poly(divided_difference(r, f)) * ea
                equivariant &= lhs == rhs
        report.add("psi_r f e_a = d_r(f) e_a", equivariant, degree=n, **tag)

        # e_a H e_a
        sym = []
        if n >= 0 and n % 2 == 0:
            sym = [R.poly(P.monomial_symmetric(lam, a)) * ea for lam in P.partitions(n // 2, a)]
        span_sym = _span(R, n, sym)
        span_ehe = _span(R, n, [ea * b * ea for b in pbw])
        ok = span_sym == span_ehe and span_sym.rank == len(sym)
        report.add("e_a H e_a = Lambda_a e_a", ok, degree=n, **tag,
                   detail={"rank": span_ehe.rank, "partitions": len(sym)})

        # H e_a H, generated by (P_a e_a)(e_a H)
        hh = GradedLattice(R, n)
        for k in range(0, n - lo + 1, 2):
            if hh.is_full():
                break
            left = [R.monomial(cb.identity(a), m, H.word) * ea for m in P.compositions(k // 2, a)]
            right = [ea * R.element({key: 1}) for key in R.pbw_basis_at_degree(n - k)]
            for x in left:
                for y in right:
                    hh.add(x * y)
                    if hh.is_full():
                        break
                if hh.is_full():
                    break
        report.add("H e_a H = H", hh.is_full(), degree=n, **tag,
                   detail={"rank": hh.rank, "dim": hh.ambient_dim})

        # the cellular basis
        cell = []
        for w in cb.all_perms(a):
            for v in cb.all_perms(a):
                rest = n + 2 * cb.length(w) + 2 * cb.length(v) - top
                if rest < 0 or rest % 2:
                    continue
                right = ea * R.tau(R.psi_w(v))
                for lam in P.partitions(rest // 2, a):
                    b = R.poly(P.monomial_symmetric(lam, a))
                    cell.append(R.psi_w(w) * b * delta(a, vertex) * right)
        ok = _unimodular(R, n, cell)
        report.add("cellular basis unimodular", ok, degree=n, **tag,
                   detail={"size": len(cell), "dim": len(pbw)})
    return report


def _unimodular(R: KLRAlgebra, n: int, elements: list[Element]) -> bool:
    comp = component_blocks(R, n)
    total = sum(c.dim for c in comp.values())
    if len(elements) != total:
        return False
    rows_by_block: dict = {}
    for x in elements:
        parts = x.blocks()
        if len(parts) != 1:
            return False
        (b, terms), = parts.items()
        if b not in comp:
            return False
        rows_by_block.setdefault(b, []).append(comp[b].vector(terms))
    return all(
        is_unimodular_square(rows_by_block.get(b, []), c.dim) for b, c in comp.items()
    )
