"""Pass/fail records produced by the verification routines."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

__all__ = ["CheckRecord", "Report"]


@dataclass
class CheckRecord:
    check: str
    status: str  # "pass" or "fail"
    degree: Optional[int] = None
    alpha: Optional[str] = None
    pi: Optional[str] = None
    detail: dict[str, Any] = field(default_factory=dict)
    witness: Optional[dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {k: v for k, v in asdict(self).items() if v is not None and v != {}}
        return out


@dataclass
class Report:
    name: str
    records: list[CheckRecord] = field(default_factory=list)
    params: dict[str, Any] = field(default_factory=dict)

    def add(self, check: str, ok: bool, **kw) -> CheckRecord:
        rec = CheckRecord(check, "pass" if ok else "fail", **kw)
        self.records.append(rec)
        return rec

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def checks(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.records:
            seen.setdefault(r.check, None)
        return list(seen)

    def to_json(self) -> dict:
        return {
            "report": self.name,
            "params": self.params,
            "passed": self.passed,
            "records": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def summary_lines(self) -> list[str]:
        lines = []
        for name in self.checks():
            recs = [r for r in self.records if r.check == name]
            bad = [r for r in recs if not r.passed]
            status = "PASS" if not bad else "FAIL"
            extra = ""
            if bad:
                first = bad[0]
                where = [f"{k}={getattr(first, k)}" for k in ("alpha", "pi", "degree")
                         if getattr(first, k) is not None]
                extra = "  first failure: " + ", ".join(where)
            lines.append(f"{status}  {name}  ({len(recs) - len(bad)}/{len(recs)}){extra}")
        return lines
