"""Truncated integer Laurent series in the grading variable ``q``.

A :class:`QSeries` knows its coefficients exactly up to ``cutoff`` and nothing
beyond.  ``lo`` is a lower bound for the exponents of the *whole* series,
including the unknown tail; it is what lets a product decide how far its own
coefficients are still determined.  ``cutoff=None`` marks an exact (finitely
supported) Laurent polynomial.

>>> one_plus_q = QSeries.from_coeffs({0: 1, 1: 1})
>>> one_minus_q = QSeries.from_coeffs({0: 1, 1: -1})
>>> str(one_plus_q * one_minus_q)
'1*q^0 + -1*q^2'
>>> str(inv_one_minus(2, 6))
'1*q^0 + 1*q^2 + 1*q^4 + 1*q^6 (mod q^7)'
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional

__all__ = ["QSeries", "Comparison", "inv_one_minus", "geometric", "monomial"]


def _min_cutoff(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Comparison(NamedTuple):
    """Outcome of comparing two series on the range where both are known."""

    equal: bool
    lo: int
    hi: Optional[int]
    # first exponent where the coefficients differ, if any
    mismatch: Optional[int]


@dataclass(frozen=True)
class QSeries:
    coeffs: Mapping[int, int] = field(default_factory=dict)
    cutoff: Optional[int] = None
    lo: int = 0

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int], cutoff: Optional[int] = None,
                    lo: Optional[int] = None) -> "QSeries":
        kept = {
            int(e): int(c) for e, c in coeffs.items()
            if c != 0 and (cutoff is None or e <= cutoff)
        }
        if lo is None:
            if kept:
                lo = min(kept)
            elif cutoff is not None:
                lo = cutoff + 1
            else:
                lo = 0
        kept = {e: c for e, c in kept.items() if e >= lo}
        return cls(dict(sorted(kept.items())), cutoff, lo)

    @classmethod
    def zero(cls, cutoff: Optional[int] = None) -> "QSeries":
        return cls.from_coeffs({}, cutoff)

    @classmethod
    def one(cls, cutoff: Optional[int] = None) -> "QSeries":
        return cls.from_coeffs({0: 1}, cutoff)

    @property
    def exact(self) -> bool:
        return self.cutoff is None

    def __getitem__(self, n: int) -> int:
        if self.cutoff is not None and n > self.cutoff:
            raise KeyError(f"coefficient of q^{n} is beyond the cutoff {self.cutoff}")
        return self.coeffs.get(n, 0)

    def truncate(self, cutoff: Optional[int]) -> "QSeries":
        return QSeries.from_coeffs(self.coeffs, _min_cutoff(self.cutoff, cutoff), self.lo)

    def __add__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            other = QSeries.from_coeffs({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries.from_coeffs(out, _min_cutoff(self.cutoff, other.cutoff),
                                   min(self.lo, other.lo))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.coeffs.items()}, self.cutoff, self.lo)

    def __sub__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            other = QSeries.from_coeffs({0: other})
        return self + (-other)

    def __mul__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            return QSeries.from_coeffs({e: c * other for e, c in self.coeffs.items()},
                                       self.cutoff, self.lo)
        cut = None
        if self.cutoff is not None:
            cut = self.cutoff + other.lo
        if other.cutoff is not None:
            cut = _min_cutoff(cut, other.cutoff + self.lo)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if cut is not None and e > cut:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return QSeries.from_coeffs(out, cut, self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        result = QSeries.one()
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k``."""
        cut = None if self.cutoff is None else self.cutoff + k
        return QSeries({e + k: c for e, c in self.coeffs.items()}, cut, self.lo + k)

    def substitute_power(self, k: int) -> "QSeries":
        """Replace ``q`` by ``q**k`` (k >= 1)."""
        if k < 1:
            raise ValueError("k must be positive")
        cut = None if self.cutoff is None else self.cutoff * k
        return QSeries({e * k: c for e, c in self.coeffs.items()}, cut, self.lo * k)

    def compare(self, other: "QSeries") -> Comparison:
        """Compare coefficientwise on ``[min lo, min cutoff]``."""
        lo = min(self.lo, other.lo)
        hi = _min_cutoff(self.cutoff, other.cutoff)
        exps = set(self.coeffs) | set(other.coeffs)
        for e in sorted(exps):
            if hi is not None and e > hi:
                break
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return Comparison(False, lo, hi, e)
        return Comparison(True, lo, hi, None)

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "cutoff": self.cutoff,
            "coeffs": {str(e): c for e, c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSeries":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = {int(e): int(c) for e, c in data["coeffs"].items()}
        return cls.from_coeffs(coeffs, data["cutoff"], data["lo"])

    def __str__(self) -> str:
        body = " + ".join(f"{c}*q^{e}" for e, c in self.coeffs.items()) or "0"
        if self.cutoff is None:
            return body
        return f"{body} (mod q^{self.cutoff + 1})"


def monomial(e: int, c: int = 1) -> QSeries:
    return QSeries.from_coeffs({e: c})


def inv_one_minus(k: int, N: int) -> QSeries:
    """The geometric series ``1/(1 - q^k)`` known up to ``q^N``."""
    if k <= 0:
        raise ValueError(f"inv_one_minus needs k >= 1, got {k}")
    return QSeries.from_coeffs({k * m: 1 for m in range(N // k + 1)} if N >= 0 else {},
                               N, 0)


geometric = inv_one_minus
