"""Structured verification reports.

A report is a list of clauses, each with an id and a status:

* ``pass``: the identity holds exactly;
* ``fail``: it does not, and ``residual`` shows the nonzero difference;
* ``finding``: a documented discrepancy in a printed formula, recorded for
  the reader but not counted as a failure of the implementation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .qcore import format_rational

PASS, FAIL, FINDING = "pass", "fail", "finding"


@dataclass(frozen=True)
class Clause:
    id: str
    status: str
    residual: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"id": self.id, "status": self.status}
        if self.residual is not None:
            d["residual"] = self.residual
        return d


@dataclass
class Report:
    suite: str
    family: str
    q: Fraction
    n_max: int
    clauses: list[Clause] = field(default_factory=list)

    def check(self, clause_id: str, residual, finding: bool = False) -> bool:
        """Record a clause that passes iff ``residual`` is zero (or ``True``).

        ``residual`` is either a bool or any value whose falsiness means
        "exactly zero".
        """
        if isinstance(residual, bool):
            ok, text = residual, None
        else:
            ok = not residual
            text = None if ok else _residual_text(residual)
        if ok:
            self.clauses.append(Clause(clause_id, PASS))
        else:
            self.clauses.append(Clause(clause_id, FINDING if finding else FAIL, text))
        return ok

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.clauses:
            self.clauses.append(Clause(prefix + c.id, c.status, c.residual))

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.clauses)

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.status == FAIL]

    def findings(self) -> list[Clause]:
        return [c for c in self.clauses if c.status == FINDING]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "family": self.family,
            "q": format_rational(self.q),
            "n_max": self.n_max,
            "clauses": [c.to_dict() for c in self.clauses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        counts = {PASS: 0, FAIL: 0, FINDING: 0}
        for c in self.clauses:
            counts[c.status] += 1
        return (f"{self.suite}[{self.family}, q={format_rational(self.q)}, n<={self.n_max}]: "
                f"{counts[PASS]} pass, {counts[FAIL]} fail, {counts[FINDING]} finding")


def _residual_text(r) -> str:
    if isinstance(r, Fraction) or isinstance(r, int):
        return format_rational(Fraction(r))
    if isinstance(r, str):
        return r
    return str(r)
