"""Graded dimensions of R_alpha three ways.

* ``pbw``: count PBW monomials by degree;
* ``formula``: ``sum_pi l_pi c_pi^2`` with ``c_pi = q^{sh} sum_{w in S^pi} q^{deg psi_w e(i_pi)}``
  and ``l_pi = prod_k prod_{m=1}^{p_k} 1/(1 - q^{2m})``;
* ``cellular``: degrees measured on the constructed cell ingredients
  ``psi_w y_pi e_pi``, ``e_pi psi_v^tau`` and the monomial-symmetric basis of
  ``Lambda_pi``.

>>> from klrcell.combinatorics import RootPartition
>>> str(c_pi(RootPartition.parse("(1..1)^2"), 4))
'1*q^-1 + 1*q^1'
>>> str(l_pi(RootPartition.parse("(1..1)^2"), 4))
'1*q^0 + 1*q^2 + 2*q^4 (mod q^5)'
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import combinatorics as cb
from .combinatorics import RootPartition, RootVector
from .engine import get_algebra, psi_degree
from .qseries import Comparison, QSeries, inv_one_minus

__all__ = ["c_pi", "l_pi", "l_p", "formula_series", "cellular_count", "DimReport", "dim_check"]


def c_pi(pi: RootPartition, N: Optional[int] = None) -> QSeries:
    """``q^{sh} sum_{w in S^pi} q^{deg psi_w e(i_pi)}``; exact, ``N`` is ignored."""
    i = pi.word
    coeffs: dict[int, int] = {}
    for w in cb.min_coset_reps(pi):
        e = psi_degree(w, i) + pi.sh
        coeffs[e] = coeffs.get(e, 0) + 1
    return QSeries.from_coeffs(coeffs)


def l_p(p: int, N: int) -> QSeries:
    out = QSeries.one(N)
    for m in range(1, p + 1):
        out = out * inv_one_minus(2 * m, N)
    return out


def l_pi(pi: RootPartition, N: int) -> QSeries:
    out = QSeries.one(N)
    for _, p in pi.parts:
        out = out * l_p(p, N)
    return out


def _low(s: QSeries) -> int:
    return min(s.coeffs) if s.coeffs else 0


def formula_series(alpha: RootVector, N: int) -> QSeries:
    total = QSeries.zero(N)
    for pi in cb.root_partitions(alpha):
        c = c_pi(pi)
        c2 = c * c
        total = total + (l_pi(pi, N - _low(c2)) * c2).truncate(N)
    return total


def cellular_count(alpha: RootVector, N: int) -> QSeries:
    """Count cell spanning elements by the degrees the engine assigns them."""
    from .cellular import cell_datum, lambda_pi_polys

    R = get_algebra(alpha)
    total = QSeries.zero(N)
    for pi in cb.root_partitions(alpha):
        c = cell_datum(pi)
        ydots = R.dots(c.y_exponent)
        left, right = {}, {}
        for w in cb.min_coset_reps(pi):
            x = R.psi_w(w) * ydots * c.e_pi
            left[w] = x.degree()
            right[w] = (c.e_pi * R.tau(R.psi_w(w))).degree()
        ends: dict[int, int] = {}
        for dl in left.values():
            for dr in right.values():
                ends[dl + dr] = ends.get(dl + dr, 0) + 1
        low = min(ends)
        lam = {}
        for k in range(0, N - low + 1, 2):
            polys = lambda_pi_polys(pi, k)
            if polys:
                # every basis element must sit in degree k
                assert all(R.poly(f).degree() == k for _, f in polys)
                lam[k] = len(polys)
        lam_series = QSeries.from_coeffs(lam, N - low, 0)
        total = total + (QSeries.from_coeffs(ends) * lam_series).truncate(N)
    return total


@dataclass
class DimReport:
    alpha: RootVector
    cutoff: int
    pbw: QSeries
    formula: QSeries
    cellular: QSeries

    def comparisons(self) -> dict[str, Comparison]:
        return {
            "pbw = formula": self.pbw.compare(self.formula),
            "pbw = cellular": self.pbw.compare(self.cellular),
        }

    @property
    def agree(self) -> bool:
        return all(c.equal for c in self.comparisons().values())

    def mismatch(self) -> Optional[int]:
        found = [c.mismatch for c in self.comparisons().values() if c.mismatch is not None]
        return min(found) if found else None

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "cutoff": self.cutoff,
            "pbw": self.pbw.to_json(),
            "formula": self.formula.to_json(),
            "cellular": self.cellular.to_json(),
            "agree": self.agree,
            "mismatch": self.mismatch(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def table(self) -> str:
        series = {"pbw": self.pbw, "formula": self.formula, "cellular": self.cellular}
        lo = min(min(s.coeffs, default=self.cutoff) for s in series.values())
        rows = [["n", *series]]
        for n in range(lo, self.cutoff + 1):
            rows.append([str(n)] + [str(s.coeffs.get(n, 0)) for s in series.values()])
        widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
        lines = ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows]
        status = "agree" if self.agree else f"DISAGREE at q^{self.mismatch()}"
        return "\n".join([f"alpha = {self.alpha}, cutoff = {self.cutoff}: {status}"] + lines)


def dim_check(alpha: RootVector, N: int) -> DimReport:
    R = get_algebra(alpha)
    return DimReport(alpha, N, R.dim_q_pbw(N).truncate(N), formula_series(alpha, N),
                     cellular_count(alpha, N))
