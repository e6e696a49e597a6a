"""Cell data of R_alpha and the chain of cell ideals.

For a root partition ``pi = beta_1^{p_1} ... beta_N^{p_N}`` the strands split
into ``pi``-blocks: ``p_k`` consecutive blocks of size ``|beta_k|`` for each
``k``.  Swapping two neighbouring blocks of the same root is ``psi_{k,r}``; a
dot on the last strand of the ``s``-th block is ``y_{k,s}``.  From these:

* ``y_pi`` is the product of staircases ``y_{k,2} y_{k,3}^2 ... y_{k,p_k}^{p_k-1}``;
* ``psi_pi`` reverses the blocks of each root, along a reduced word of the
  longest element that reads the same backwards up to commuting letters;
* ``e_pi = psi_pi y_pi e(i_pi)`` and ``Lambda_pi`` is the ring of polynomials
  in the block dots that are symmetric in each root's dots separately.

The cell ``I'_pi`` is spanned by ``psi_w y_pi b e_pi psi_v^tau`` with ``w, v``
minimal coset representatives and ``b`` in ``Lambda_pi``; every span and ideal
is handled one degree at a time as an integer lattice in PBW coordinates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import combinatorics as cb
from . import polynomials as P
from .combinatorics import Perm, RootPartition, RootVector, Word
from .engine import Element, KLRAlgebra, get_algebra, psi_degree
from .graded import GradedLattice, component_blocks
from .reports import Report
from .zlattice import is_unimodular_square

__all__ = [
    "iota", "block_crossing_word", "psi_alpha", "CellDatum", "cell_datum",
    "lambda_pi_polys", "lambda_pi_elements", "CellStructure", "cell_structure",
    "cell_component", "two_sided_ideal_component", "cellular_basis",
    "verify_cell_chain", "verify_cellular_basis", "verify_quotient_structure",
    "verify_affine_cellularity", "young_subgroup",
]


# -- embeddings and block crossings ---------------------------------------


def iota(parts: Sequence[Element]) -> Element:
    """Place elements of ``R_{alpha^1}, ..., R_{alpha^l}`` side by side in ``R_{sum alpha^k}``."""
    alpha = RootVector({})
    for x in parts:
        alpha = alpha + x.algebra.alpha
    R = get_algebra(alpha)
    out: dict = {(cb.identity(0), (), ()): 1}
    for x in parts:
        nxt: dict = {}
        for (w, m, i), c in out.items():
            shift = len(w)
            for (w2, m2, i2), c2 in x.terms.items():
                key = (w + tuple(k + shift for k in w2), m + m2, i + i2)
                nxt[key] = nxt.get(key, 0) + c * c2
        out = {k: c for k, c in nxt.items() if c}
    return R.element(out)


def block_crossing_word(d: int) -> tuple[int, ...]:
    """Crossings that swap two neighbouring blocks of ``d`` strands.

    ``(psi_d ... psi_{2d-1}) ... (psi_2 ... psi_{d+1}) (psi_1 ... psi_d)``.
    """
    return tuple(r for k in range(d, 0, -1) for r in range(k, k + d))


def psi_alpha(alpha: RootVector) -> Element:
    """The block crossing as an element of ``R_{2 alpha}``."""
    return get_algebra(2 * alpha).psi_word(block_crossing_word(alpha.height))


def young_subgroup(pi: RootPartition) -> list[Perm]:
    """``S_pi``: permutations preserving every pi-block."""
    d = pi.height
    out = []
    for pieces in itertools.product(*(itertools.permutations(b) for b in pi.blocks)):
        w = [0] * d
        for block, img in zip(pi.blocks, pieces):
            for k, v in zip(block, img):
                w[k - 1] = v
        out.append(tuple(w))
    return out


# -- cell data --------------------------------------------------------------


@dataclass
class CellDatum:
    pi: RootPartition
    i_pi: Word
    psi_word: tuple[int, ...]
    y_exponent: tuple[int, ...]
    # dot positions y_{k,s}: one tuple per root of pi
    dot_positions: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    psi_pi: Element
    psi_pi_e: Element
    y_pi: Element
    e_pi: Element

    @property
    def algebra(self) -> KLRAlgebra:
        return self.e_pi.algebra

    def psi_kr_word(self, k: int, r: int) -> tuple[int, ...]:
        """Crossings of ``psi_{k,r}`` (``k`` and ``r`` 1-based)."""
        beta, p = self.pi.parts[k - 1]
        if not 1 <= r < p:
            raise ValueError(f"block crossing index {r} out of range for p = {p}")
        h = beta.height
        shift = self.offsets[k - 1] + (r - 1) * h
        return tuple(x + shift for x in block_crossing_word(h))

    def y_ks(self, k: int, s: int) -> int:
        """Strand position of ``y_{k,s}``."""
        return self.dot_positions[k - 1][s - 1]

    def to_json(self) -> dict:
        return {
            "pi": str(self.pi),
            "i_pi": list(self.i_pi),
            "psi_pi_word": list(self.psi_word),
            "y_pi": list(self.y_exponent),
            "e_pi": str(self.e_pi),
        }


@lru_cache(maxsize=None)
def cell_datum(pi: RootPartition) -> CellDatum:
    R = get_algebra(pi.alpha)
    d = pi.height
    i_pi = pi.word
    offsets, positions = [], []
    word: list[int] = []
    y_exp = [0] * d
    pos = 0
    for beta, p in pi.parts:
        h = beta.height
        offsets.append(pos)
        positions.append(tuple(pos + s * h for s in range(1, p + 1)))
        for s in range(2, p + 1):
            y_exp[pos + s * h - 1] = s - 1
        for r in cb.symmetric_w0_word(p) if p > 1 else ():
            shift = pos + (r - 1) * h
            word.extend(x + shift for x in block_crossing_word(h))
        pos += h * p
    psi_pi = R.psi_word(word)
    psi_pi_e = psi_pi * R.e(i_pi)
    y_pi = R.dots(y_exp)
    e_pi = psi_pi_e * y_pi * R.e(i_pi)
    datum = CellDatum(pi, i_pi, tuple(word), tuple(y_exp), tuple(positions), tuple(offsets),
                      psi_pi, psi_pi_e, y_pi, e_pi)
    _check_datum(datum)
    return datum


def _check_datum(c: CellDatum) -> None:
    R = c.algebra
    sh = c.pi.sh
    problems = []
    if (c.y_pi * R.e(c.i_pi)).degree() != 2 * sh:
        problems.append("deg y_pi != 2 sh")
    if c.psi_pi_e and c.psi_pi_e.degree() != -2 * sh:
        problems.append("deg psi_pi e(i_pi) != -2 sh")
    if c.e_pi.degree() != 0:
        problems.append("deg e_pi != 0")
    if R.tau(c.psi_pi) != c.psi_pi:
        problems.append("tau(psi_pi) != psi_pi")
    if c.psi_pi * c.y_pi * R.e(c.i_pi) != c.e_pi:
        problems.append("e_pi != psi_pi y_pi e(i_pi)")
    if problems:
        raise AssertionError(f"cell datum for {c.pi} violates: {', '.join(problems)}")


def _partition_tuples(sizes: Sequence[int], total: int):
    """Tuples of partitions, the k-th with at most ``sizes[k]`` parts, of total size."""
    if not sizes:
        if total == 0:
            yield ()
        return
    for k in range(total + 1):
        for lam in P.partitions(k, sizes[0]):
            for rest in _partition_tuples(sizes[1:], total - k):
                yield (lam,) + rest


def lambda_pi_polys(pi: RootPartition, n: int) -> list[tuple[tuple, P.Poly]]:
    """Monomial-symmetric basis of ``Lambda_pi`` in degree ``n`` as ``(label, poly)``."""
    if n < 0 or n % 2:
        return []
    c = cell_datum(pi)
    d = pi.height
    sizes = [p for _, p in pi.parts]
    out = []
    for lams in _partition_tuples(sizes, n // 2):
        f = P.const(d)
        for lam, variables in zip(lams, c.dot_positions):
            f = P.mul(f, P.monomial_symmetric(lam, d, variables))
        out.append((lams, f))
    return out


def lambda_pi_elements(pi: RootPartition, n: int) -> list[Element]:
    R = get_algebra(pi.alpha)
    return [R.poly(f) for _, f in lambda_pi_polys(pi, n)]


def format_label(label) -> str:
    w, lams, v = label
    lam = ",".join("(" + ",".join(map(str, l)) + ")" for l in lams)
    return f"w={cb.format_word(w)} b={lam} v={cb.format_word(v)}"


# -- the cell structure of one algebra --------------------------------------


class CellStructure:
    """Lazily computed cells, cell ideals and two-sided ideals of ``R_alpha``."""

    def __init__(self, alpha: RootVector):
        self.alpha = alpha
        self.algebra = get_algebra(alpha)
        self.partitions: list[RootPartition] = cb.root_partitions(alpha)  # descending
        self.rank = {pi: k for k, pi in enumerate(self.partitions)}
        self.lo = self.algebra.min_degree() if alpha.height else 0
        self._left: dict = {}
        self._right: dict = {}
        self._cells: dict = {}
        self._cell_lat: dict = {}
        self._upper: dict = {}
        self._ideal: dict = {}

    def datum(self, pi: RootPartition) -> CellDatum:
        return cell_datum(pi)

    def higher(self, pi: RootPartition) -> list[RootPartition]:
        return self.partitions[: self.rank[pi]]

    # -- cell spanning elements --

    def core(self, pi: RootPartition, lams, f: P.Poly) -> Element:
        """``y_pi b e_pi``; the left factor of every cell element."""
        key = ("core", pi, lams)
        if key not in self._left:
            c = self.datum(pi)
            R = self.algebra
            self._left[key] = R.poly(P.mul(P.monomial(c.y_exponent), f)) * c.e_pi
        return self._left[key]

    def left(self, pi: RootPartition, w: Perm, lams, f: P.Poly) -> Element:
        """``psi_w y_pi b e_pi``."""
        key = (pi, w, lams)
        if key not in self._left:
            self._left[key] = self.algebra.left_mul_word(
                cb.canonical_reduced_word(w), self.core(pi, lams, f))
        return self._left[key]

    def right(self, i: Word, v: Perm) -> Element:
        """``e(i) psi_v^tau``."""
        key = (i, v)
        if key not in self._right:
            R = self.algebra
            j = cb.act(v, i)
            terms = R.rewriter.normalize_word(cb.canonical_reduced_word(v)[::-1], j)
            self._right[key] = R.element({(u, m, j): c for (u, m), c in terms})
        return self._right[key]

    def cell_elements(self, pi: RootPartition, n: int) -> list[tuple[tuple, Element]]:
        """Labelled spanning elements ``((w, lambdas, v), psi_w y_pi b e_pi psi_v^tau)``."""
        key = (pi, n)
        if key in self._cells:
            return self._cells[key]
        c = self.datum(pi)
        i = c.i_pi
        reps = cb.min_coset_reps(pi)
        base = 2 * pi.sh
        out = []
        for w in reps:
            dw = psi_degree(w, i)
            for v in reps:
                rest = n - dw - psi_degree(v, i) - base
                if rest < 0 or rest % 2:
                    continue
                for lams, f in lambda_pi_polys(pi, rest):
                    x = self.left(pi, w, lams, f) * self.right(i, v)
                    out.append(((w, lams, v), x))
        self._cells[key] = out
        return out

    def tau_cell_elements(self, pi: RootPartition, n: int) -> list[tuple[tuple, Element]]:
        """``tau`` of each cell element, as ``psi_v (y_pi psi_pi b y_pi e(i_pi)) psi_w^tau``.

        Uses that ``tau`` is an anti-automorphism fixing polynomials and
        ``psi_pi``; far cheaper than applying it to the expanded element.
        """
        key = ("tau", pi, n)
        if key in self._cells:
            return self._cells[key]
        R = self.algebra
        c = self.datum(pi)
        head = R.dots(c.y_exponent) * c.psi_pi_e
        cores: dict = {}
        out = []
        for (w, lams, v), _ in self.cell_elements(pi, n):
            if lams not in cores:
                f = dict(lambda_pi_polys(pi, 2 * sum(map(sum, lams))))[lams]
                cores[lams] = head * R.poly(P.mul(f, P.monomial(c.y_exponent)))
            left = R.left_mul_word(cb.canonical_reduced_word(v), cores[lams])
            out.append(((w, lams, v), left * self.right(c.i_pi, w)))
        self._cells[key] = out
        return out

    def cell_lattice(self, pi: RootPartition, n: int) -> GradedLattice:
        """Degree ``n`` part of ``I'_pi``."""
        key = (pi, n)
        if key not in self._cell_lat:
            lat = GradedLattice(self.algebra, n, split=False)
            for _, x in self.cell_elements(pi, n):
                lat.add(x)
            self._cell_lat[key] = lat
        return self._cell_lat[key]

    def upper(self, pi: Optional[RootPartition], n: int, strict: bool = False) -> GradedLattice:
        """``I_pi`` (or ``I_{>pi}`` when ``strict``) in degree ``n``."""
        k = len(self.partitions) if pi is None else self.rank[pi] + (0 if strict else 1)
        key = (k, n)
        if key not in self._upper:
            if k == 0:
                self._upper[key] = GradedLattice(self.algebra, n)
            else:
                prev = self.upper(self.partitions[k - 2], n) if k > 1 else GradedLattice(self.algebra, n)
                self._upper[key] = prev + self.cell_lattice(self.partitions[k - 1], n)
        return self._upper[key]

    # -- ideals generated by idempotents --

    def ideal(self, pi: RootPartition, n: int, strict: bool = False) -> GradedLattice:
        """``sum_{sigma >= pi} R e(i_sigma) R`` in degree ``n`` (``>`` when strict)."""
        k = self.rank[pi] + (0 if strict else 1)
        key = (k, n)
        if key not in self._ideal:
            lat = GradedLattice(self.algebra, n)
            if k > 1:
                lat = self.ideal(self.partitions[k - 2], n).copy()
            if k >= 1:
                add_idempotent_ideal(self, lat, self.partitions[k - 1].word)
            self._ideal[key] = lat
        return self._ideal[key]

    # -- membership helpers --

    def in_upper(self, x: Element, pi: Optional[RootPartition], strict: bool = True) -> bool:
        """Is ``x`` in ``I_{>pi}`` (or ``I_pi``), degree by degree?"""
        for n, part in x.homogeneous_components().items():
            if pi is None:
                return not x
            if not self.upper(pi, n, strict).contains(part):
                return False
        return True

    def reduce(self, x: Element, pi: RootPartition) -> Element:
        """Canonical representative of ``x`` modulo ``I_{>pi}``."""
        out = self.algebra.zero()
        for n, part in x.homogeneous_components().items():
            out = out + self.upper(pi, n, strict=True).reduce(part)
        return out


def add_idempotent_ideal(cs: CellStructure, lat: GradedLattice, i: Word) -> None:
    """Add ``R e(i) R`` (degree ``lat.n``) to ``lat``.

    Spanned by ``psi_w y^m e(i) psi_v^tau``; blocks already full are skipped.
    """
    R = cs.algebra
    n = lat.n
    d = R.d
    perms = cb.all_perms(d)
    for w in perms:
        dw = psi_degree(w, i)
        left_word = cb.act(w, i)
        for v in perms:
            rest = n - dw - psi_degree(v, i)
            if rest < 0 or rest % 2:
                continue
            block = (left_word, cb.act(v, i))
            if block not in lat.components:
                continue
            right = cs.right(i, v)
            for m in P.compositions(rest // 2, d):
                if lat.block_is_full(block):
                    break
                x = R.monomial(w, m, i) * right
                if x:
                    lat.add(x)


_structures: dict[RootVector, CellStructure] = {}


def cell_structure(alpha: RootVector) -> CellStructure:
    cs = _structures.get(alpha)
    if cs is None:
        cs = _structures[alpha] = CellStructure(alpha)
    return cs


def cell_component(pi: RootPartition, n: int) -> GradedLattice:
    return cell_structure(pi.alpha).cell_lattice(pi, n)


def two_sided_ideal_component(sigmas: Iterable[RootPartition], n: int,
                              alpha: Optional[RootVector] = None) -> GradedLattice:
    """``sum_{sigma} R e(i_sigma) R`` in degree ``n``."""
    sigmas = list(sigmas)
    if alpha is None:
        if not sigmas:
            raise ValueError("alpha is needed for an empty set of root partitions")
        alpha = sigmas[0].alpha
    cs = cell_structure(alpha)
    lat = GradedLattice(cs.algebra, n)
    for s in sigmas:
        add_idempotent_ideal(cs, lat, s.word)
    return lat


# -- the cellular basis -------------------------------------------------------


def cellular_basis(alpha: RootVector, n: int) -> tuple[list[tuple[RootPartition, tuple, Element]], bool]:
    """All cell spanning elements of degree ``n``, and whether they form a Z-basis."""
    cs = cell_structure(alpha)
    elems = [(pi, label, x) for pi in cs.partitions for label, x in cs.cell_elements(pi, n)]
    return elems, _is_basis(cs.algebra, n, [x for _, _, x in elems])


def _is_basis(R: KLRAlgebra, n: int, elements: list[Element]) -> bool:
    comp = component_blocks(R, n)
    rows: dict = {}
    for x in elements:
        parts = x.blocks()
        if len(parts) != 1:
            return False
        (b, terms), = parts.items()
        if b not in comp:
            return False
        rows.setdefault(b, []).append(comp[b].vector(terms))
    if set(rows) - set(comp):
        return False
    return all(is_unimodular_square(rows.get(b, []), c.dim) for b, c in comp.items())


# -- verification -------------------------------------------------------------


def _degrees(cs: CellStructure, N: int, lo: Optional[int]) -> range:
    return range(cs.lo if lo is None else lo, N + 1)


def verify_cell_chain(alpha: RootVector, N: int, lo: Optional[int] = None) -> Report:
    """Cell ideals against ideals generated by idempotents, plus the supporting membership checks."""
    cs = cell_structure(alpha)
    R = cs.algebra
    a = str(alpha)
    report = Report("cell-chain", params={"alpha": a, "N": N, "lo": cs.lo if lo is None else lo})
    for pi in cs.partitions:
        c = cs.datum(pi)
        tag = {"alpha": a, "pi": str(pi)}
        for n in _degrees(cs, N, lo):
            cells = cs.upper(pi, n)
            ideal = cs.ideal(pi, n)
            report.add("I_pi = sum R e(i_sigma) R", cells == ideal, degree=n, **tag,
                       detail={"rank": cells.rank, "ideal_rank": ideal.rank})
            own = cs.cell_lattice(pi, n)
            stable = all(own.contains(x) for _, x in cs.tau_cell_elements(pi, n))
            report.add("tau(I'_pi) = I'_pi", stable, degree=n, **tag)

        # larger words are already in the higher ideal
        ok = all(cs.upper(pi, 0, strict=True).contains(R.e(i))
                 for i in R.words if i > c.i_pi)
        report.add("e(i) in I_>pi for i > i_pi", ok, degree=0, **tag)

        # psi_w f e(i_pi) for 1 != w in S_pi
        witnesses = []
        for w in young_subgroup(pi):
            if w == cb.identity(R.d):
                continue
            for k in range(0, 2):
                for m in P.compositions(k, R.d):
                    x = R.monomial(w, m, c.i_pi)
                    if x.degree() <= N:
                        witnesses.append(x)
        bad = [x for x in witnesses if not cs.in_upper(x, pi)]
        report.add("psi_w P e(i_pi) in I_>pi for w in S_pi", not bad, **tag,
                   detail={"witnesses": len(witnesses)},
                   witness={"element": str(bad[0])} if bad else None)

        bad = []
        count = 0
        if N >= 2:
            for block in pi.blocks:
                for r, s in itertools.combinations(block, 2):
                    x = (R.y(r) - R.y(s)) * R.e(c.i_pi)
                    count += 1
                    if not cs.in_upper(x, pi):
                        bad.append(x)
        report.add("y_r e(i_pi) = y_s e(i_pi) mod I_>pi", not bad, **tag,
                   detail={"witnesses": count},
                   witness={"element": str(bad[0])} if bad else None)

        sq = c.e_pi * c.e_pi
        report.add("e_pi^2 = e_pi mod I_>pi", cs.in_upper(sq - c.e_pi, pi), degree=0, **tag,
                   detail={"exactly_idempotent": sq == c.e_pi})

        comm = True
        for n in range(0, min(N, 4) + 1, 2):
            for b in lambda_pi_elements(pi, n):
                comm &= b * c.e_pi == c.e_pi * b and b * c.psi_pi_e == c.psi_pi_e * b
        report.add("psi_pi e(i_pi), e_pi commute with Lambda_pi", comm, **tag)

        report.extend(_block_nilhecke_relations(cs, pi, N))
    return report


def _block_nilhecke_relations(cs: CellStructure, pi: RootPartition, N: int) -> Report:
    """Images of the nilHecke relations under the block maps, modulo ``I_{>pi}``."""
    R = cs.algebra
    c = cs.datum(pi)
    e = R.e(c.i_pi)
    report = Report("block-nilhecke")
    tag = {"alpha": str(cs.alpha), "pi": str(pi)}
    for k, (beta, p) in enumerate(pi.parts, 1):
        if p < 2:
            continue
        psi = {r: R.psi_word(c.psi_kr_word(k, r)) for r in range(1, p)}
        y = {s: R.y(c.y_ks(k, s)) for s in range(1, p + 1)}
        checks = []
        for r in range(1, p):
            checks.append(("psi_kr^2 = 0", psi[r] * psi[r] * e))
            checks.append(("psi_kr y_k,r+1 = y_kr psi_kr + 1",
                           (psi[r] * y[r + 1] - y[r] * psi[r]) * e - e))
            checks.append(("y_k,r+1 psi_kr = psi_kr y_kr + 1",
                           (y[r + 1] * psi[r] - psi[r] * y[r]) * e - e))
            for s in range(1, p + 1):
                if s not in (r, r + 1):
                    checks.append(("psi_kr y_ks = y_ks psi_kr", (psi[r] * y[s] - y[s] * psi[r]) * e))
            if r + 1 < p:
                checks.append(("block braid relation",
                               (psi[r] * psi[r + 1] * psi[r] - psi[r + 1] * psi[r] * psi[r + 1]) * e))
            for r2 in range(r + 2, p):
                checks.append(("distant block crossings commute",
                               (psi[r] * psi[r2] - psi[r2] * psi[r]) * e))
        for name, x in checks:
            report.add(f"block nilHecke: {name}", cs.in_upper(x, pi), **tag,
                       detail={"root": str(beta)})
    return report


def verify_cellular_basis(alpha: RootVector, N: int, lo: Optional[int] = None) -> Report:
    """Per degree: the cell elements form a Z-basis, so the cells give a direct sum."""
    cs = cell_structure(alpha)
    report = Report("cellular-basis", params={"alpha": str(alpha), "N": N})
    from .dimension import c_pi, l_pi

    formulas = {}
    for pi in cs.partitions:
        c2 = c_pi(pi) * c_pi(pi)
        formulas[pi] = (l_pi(pi, N - min(c2.coeffs)) * c2).truncate(N)
    for n in _degrees(cs, N, lo):
        elems, ok = cellular_basis(alpha, n)
        dim = sum(c.dim for c in component_blocks(cs.algebra, n).values())
        report.add("cellular basis unimodular", ok, degree=n, alpha=str(alpha),
                   detail={"size": len(elems), "dim": dim})
        total = GradedLattice(cs.algebra, n)
        rank_sum = 0
        for pi in cs.partitions:
            lat = cs.cell_lattice(pi, n)
            rank_sum += lat.rank
            total = total + lat
        report.add("direct sum of cells = R", total.is_full() and rank_sum == dim,
                   degree=n, alpha=str(alpha), detail={"rank_sum": rank_sum, "dim": dim})
        for pi, series in formulas.items():
            count = sum(1 for _, x in cs.cell_elements(pi, n) if x.degree() == n)
            report.add("cell count = l_pi c_pi^2", count == series.coeffs.get(n, 0),
                       degree=n, alpha=str(alpha), pi=str(pi),
                       detail={"count": count, "formula": series.coeffs.get(n, 0)})
    return report


# -- quotients R / I_{>pi} ----------------------------------------------------


class _Quotient:
    """Spans inside the degree ``n`` component modulo ``I_{>pi}``."""

    def __init__(self, cs: CellStructure, pi: RootPartition, n: int):
        self.base = cs.upper(pi, n, strict=True)
        self.base_rank = self.base.rank

    def span(self, elements: Iterable[Element]) -> GradedLattice:
        lat = self.base.copy()
        for x in elements:
            lat.add(x)
        return lat

    def rank(self, lat: GradedLattice) -> int:
        return lat.rank - self.base_rank


def _pbw_elements(R: KLRAlgebra, n: int, left: Optional[Word] = None,
                  right: Optional[Word] = None) -> list[Element]:
    out = []
    for key in R.pbw_basis_at_degree(n):
        w, _, i = key
        if right is not None and i != right:
            continue
        if left is not None and cb.act(w, i) != left:
            continue
        out.append(R.element({key: 1}))
    return out


def verify_quotient_structure(pi: RootPartition, N: int, lo: Optional[int] = None) -> Report:
    """Structure of ``R / I_{>pi}`` around the image of ``e_pi``, degree by degree.

    (i)   ``b -> b e_pi`` identifies ``Lambda_pi`` with ``e R e`` (ranks, spans, products);
    (ii)  ``{psi_w y_pi e_pi}`` is a free basis of ``R e`` over ``e R e``;
    (iii) ``{e_pi psi_v^tau}`` is a free basis of ``e R`` over ``e R e``;
    (iv)  the products of the two bases are independent and span ``R e R``;
    (v)   ``R e R = I_pi / I_{>pi}``.
    """
    alpha = pi.alpha
    cs = cell_structure(alpha)
    R = cs.algebra
    c = cs.datum(pi)
    i = c.i_pi
    e = c.e_pi
    reps = cb.min_coset_reps(pi)
    tag = {"alpha": str(alpha), "pi": str(pi)}
    report = Report("quotient", params={"alpha": str(alpha), "pi": str(pi), "N": N})
    ydots = R.dots(c.y_exponent)
    left_basis = {w: R.left_mul_word(cb.canonical_reduced_word(w), ydots * e) for w in reps}
    right_basis = {v: e * cs.right(i, v) for v in reps}
    lam_cache: dict = {}

    def lam(k: int) -> list:
        if k not in lam_cache:
            lam_cache[k] = [(lab, R.poly(f)) for lab, f in lambda_pi_polys(pi, k)]
        return lam_cache[k]

    for n in _degrees(cs, N, lo):
        q = _Quotient(cs, pi, n)
        # (i)
        lam_e = [b * e for _, b in lam(n)]
        span_lam = q.span(lam_e)
        span_ere = q.span(e * x * e for x in _pbw_elements(R, n, i, i))
        ok = span_lam == span_ere and q.rank(span_lam) == len(lam_e)
        report.add("(i) e R e = Lambda_pi e", ok, degree=n, **tag,
                   detail={"rank": q.rank(span_ere), "dim_Lambda": len(lam_e)})

        mult = True
        for k in range(0, n + 1, 2):
            for (_, b1), (_, b2) in itertools.product(lam(k), lam(n - k)):
                diff = (b1 * e) * (b2 * e) - (b1 * b2) * e
                mult &= not diff or q.base.contains(diff)
        report.add("(i) b e * b' e = b b' e", mult, degree=n, **tag)

        # (ii): R e over e R e, on the basis psi_w y_pi e_pi
        gens = [left_basis[w] * (b * e) for w in reps
                for _, b in lam(n - psi_degree(w, i) - 2 * pi.sh)]
        span_gens = q.span(gens)
        span_re = q.span(x * e for x in _pbw_elements(R, n, right=i))
        ok = span_gens == span_re and q.rank(span_gens) == len(gens)
        report.add("(ii) R e free over e R e", ok, degree=n, **tag,
                   detail={"rank": q.rank(span_re), "generators": len(gens)})

        # (iii): e R over e R e, on the basis e_pi psi_v^tau
        gens = [(b * e) * right_basis[v] for v in reps for _, b in lam(n - psi_degree(v, i))]
        span_gens = q.span(gens)
        span_er = q.span(e * x for x in _pbw_elements(R, n, left=i))
        ok = span_gens == span_er and q.rank(span_gens) == len(gens)
        report.add("(iii) e R free over e R e", ok, degree=n, **tag,
                   detail={"rank": q.rank(span_er), "generators": len(gens)})

        # (iv) and (v)
        prods = [left_basis[w] * (b * e) * right_basis[v] for w in reps for v in reps
                 for _, b in lam(n - psi_degree(w, i) - 2 * pi.sh - psi_degree(v, i))]
        span_prods = q.span(prods)
        target = cs.upper(pi, n)
        span_rer = _two_sided(cs, q, e, i, n, target)
        ok = span_prods == span_rer and q.rank(span_prods) == len(prods)
        report.add("(iv) R e (x) e R -> R e R bijective", ok, degree=n, **tag,
                   detail={"rank": q.rank(span_rer), "products": len(prods)})
        report.add("(v) R e R = I_pi / I_>pi", span_rer == target, degree=n, **tag,
                   detail={"rank": q.rank(span_rer), "target": target.rank - q.base_rank})
    return report


def _two_sided(cs: CellStructure, q: _Quotient, e: Element, i: Word, n: int,
               target: GradedLattice) -> GradedLattice:
    """``R e R + I_{>pi}`` in degree ``n``, from ``psi_w y^m e y^m' psi_v^tau``.

    ``e`` lies in ``e(i) R e(i)``.  Generators are taken in order of total dot
    degree and the loop stops once the span reaches ``target``, which is an
    ideal containing ``e`` and so can never be exceeded.
    """
    R = cs.algebra
    d = R.d
    lat = q.base.copy()
    if lat == target:
        return lat
    perms = cb.all_perms(d)
    dw = {w: psi_degree(w, i) for w in perms}
    for total in range(0, max(0, n - 2 * cs.lo) // 2 + 1):
        for w in perms:
            for v in perms:
                if dw[w] + dw[v] + 2 * total != n:
                    continue
                right = cs.right(i, v)
                for k in range(total + 1):
                    for m1 in P.compositions(k, d):
                        a = R.monomial(w, m1, i) * e
                        if not a:
                            continue
                        for m2 in P.compositions(total - k, d):
                            x = a * R.left_mul_dots(m2, right)
                            if x and lat.add(x) and lat == target:
                                return lat
    return lat


# -- affine cellularity -------------------------------------------------------


def verify_affine_cellularity(alpha: RootVector, N: int, lo: Optional[int] = None) -> Report:
    """The cell chain is tau-stable and tau transposes cell labels modulo the higher ideal."""
    cs = cell_structure(alpha)
    R = cs.algebra
    report = Report("affine-cellularity", params={"alpha": str(alpha), "N": N})
    for pi in cs.partitions:
        tag = {"alpha": str(alpha), "pi": str(pi)}
        reps = cb.min_coset_reps(pi)
        report.add("V has rank |S^pi|", len(reps) * pi.parabolic_order() == math.factorial(R.d),
                   **tag, detail={"rank_V": len(reps)})
        for n in _degrees(cs, N, lo):
            lat = cs.upper(pi, n)
            stable = all(lat.contains(x) for sigma in [pi] + cs.higher(pi)
                         for _, x in cs.tau_cell_elements(sigma, n))
            report.add("tau(I_pi) = I_pi", stable, degree=n, **tag)
            elems = dict(cs.cell_elements(pi, n))
            bad = None
            exact = True
            for (w, lams, v), tx in cs.tau_cell_elements(pi, n):
                mirror = elems.get((v, lams, w))
                if mirror is None:
                    bad = (w, lams, v)
                    break
                diff = tx - mirror
                exact &= not diff
                if diff and not cs.upper(pi, n, strict=True).contains(diff):
                    bad = (w, lams, v)
                    break
            report.add("tau(C(w,b,v)) = C(v,b,w) mod I_>pi", bad is None, degree=n, **tag,
                       detail={"exact": exact, "elements": len(elems)},
                       witness={"label": format_label(bad)} if bad else None)
    return report
