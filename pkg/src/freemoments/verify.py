"""Cross-check of E((x+y)^n) across the partition pipeline, the normal-form
oracle and the rank-4 free-group count."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import amalgam, pipeline, radial, reference
from .algebra import DEFAULT_CAP, BudgetError
from .laurent import HLaurent

# Reduced words of length 8 that are trivial in the surface group but not in
# F_4: the 8 cyclic rotations of the relator and the 8 of its inverse.  No
# shorter nontrivial word dies, so the correction is 0 below degree 8.
RELATOR_CORRECTION = {8: 16}
F4_MAX_DEGREE = 8


def f4_tau(n: int) -> Optional[int]:
    """tau((x+y)^n) from the free group of rank 4 plus the relator correction, n <= 8."""
    if n > F4_MAX_DEGREE:
        return None
    return radial.tau_free(n, 4) + RELATOR_CORRECTION.get(n, 0)


@dataclass
class VerifyRow:
    degree: int
    pipeline: HLaurent
    amalgam: HLaurent
    f4: Optional[int]

    @property
    def agree(self) -> bool:
        return self.pipeline == self.amalgam

    @property
    def f4_agree(self) -> Optional[bool]:
        if self.f4 is None:
            return None
        return self.f4 == self.amalgam.trace()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "pipeline_tau": str(self.pipeline.trace()),
            "amalgam_tau": str(self.amalgam.trace()),
            "f4_tau": None if self.f4 is None else str(self.f4),
            "pipeline_expectation": self.pipeline.to_json(),
            "amalgam_expectation": self.amalgam.to_json(),
            "agree": self.agree,
            "f4_agree": self.f4_agree,
        }


@dataclass
class VerifyReport:
    rows: list[VerifyRow]
    discrepancies: list[reference.Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when pipeline and oracle agree everywhere (printed slips do not count)."""
        return all(r.agree and r.f4_agree is not False for r in self.rows)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "rows": [r.to_json() for r in self.rows],
            "discrepancies": [d.to_json() for d in self.discrepancies],
        }


def verify_cross(max_degree: int = 8, cap: int = DEFAULT_CAP) -> VerifyReport:
    if max_degree > cap:
        raise BudgetError(f"degree {max_degree} exceeds cap {cap}")
    oracle = amalgam.oracle_moments(max_degree, cap)
    rows = []
    for n in range(1, max_degree + 1):
        rows.append(VerifyRow(n, pipeline.expect_xy(n, cap), oracle[n][0], f4_tau(n)))
    return VerifyReport(rows, reference.all_discrepancies(max_degree))
