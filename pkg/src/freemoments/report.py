"""Machine-readable reports and their JSON / CSV / text renderings.

Big integers are always written as decimal strings.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .laurent import HLaurent
from .reference import Discrepancy

FORMATS = ("json", "csv", "text")


@dataclass
class MomentReport:
    degree: int
    method: str
    expectation: HLaurent
    strata: Optional[dict] = None  # label -> HLaurent or int
    discrepancies: list[Discrepancy] = field(default_factory=list)
    elapsed_ms: Optional[float] = None  # left out of the output unless set

    @property
    def tau(self) -> int:
        return self.expectation.trace()

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "method": self.method,
            "tau": str(self.tau),
            "expectation": self.expectation.to_json(),
            "discrepancies": [d.to_json() for d in self.discrepancies],
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.strata is not None:
            out["strata"] = {
                k: str(v.trace() if isinstance(v, HLaurent) else v) for k, v in self.strata.items()
            }
        return out


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def emit_records(records: Sequence[dict], fmt: str, columns: Optional[Sequence[str]] = None) -> str:
    """Render flat records.  JSON keeps full structure; CSV and text keep `columns`."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        return _dump_json(records[0] if len(records) == 1 else list(records))
    columns = list(columns or (records[0].keys() if records else []))
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, dict):
        return ";".join(f"{k}:{x}" for k, x in v.items())
    return str(v)


def emit(reports: Sequence[MomentReport], fmt: str) -> bytes:
    """Render moment reports; CSV has the header degree,method,tau."""
    records = [r.to_json() for r in reports]
    if fmt == "json":
        return emit_records(records, "json").encode("utf-8")
    text = emit_records(records, fmt, ["degree", "method", "tau"])
    if fmt == "text":
        extra = []
        for r in reports:
            extra.append(f"E(deg {r.degree}) = {r.expectation}")
            for k, v in (r.strata or {}).items():
                extra.append(f"  stratum {k}: {v.trace() if isinstance(v, HLaurent) else v}")
            for d in r.discrepancies:
                extra.append(f"  printed {d.paper_value} vs computed {d.computed_value} at {d.location}")
        text += "\n".join(extra) + "\n"
    return text.encode("utf-8")
