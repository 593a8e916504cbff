"""Scan report shared by every verifier."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class ScanReport:
    name: str
    lo: int
    hi: int
    violations: list[tuple[int, str]] = field(default_factory=list)
    extremal_margin: float | None = None
    findings: list[tuple[int, str]] = field(default_factory=list)
    table: list[tuple] = field(default_factory=list)
    columns: tuple[str, ...] = ()
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, index: int, detail: str) -> None:
        self.violations.append((index, detail))

    def observe_margin(self, margin: float) -> None:
        if self.extremal_margin is None or margin < self.extremal_margin:
            self.extremal_margin = margin

    def first_violation(self) -> int | None:
        return self.violations[0][0] if self.violations else None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["passed"] = self.passed
        d["range"] = [self.lo, self.hi]
        d["table"] = [list(row) for row in self.table]
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=_jsonable, **kw)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  range=[{self.lo},{self.hi}]"
        if self.extremal_margin is not None:
            line += f"  min_margin={self.extremal_margin:.6g}"
        if self.violations:
            line += f"  violations={len(self.violations)} first@{self.violations[0][0]}: {self.violations[0][1]}"
        if self.findings:
            line += f"  findings={len(self.findings)}"
        return line

    def to_tsv(self) -> str:
        """Human-readable aligned columns: summary, violations, findings, table."""
        lines = [self.summary()]
        for idx, detail in self.violations:
            lines.append(f"violation\t{idx}\t{detail}")
        for idx, detail in self.findings:
            lines.append(f"finding\t{idx}\t{detail}")
        for note in self.notes:
            lines.append(f"note\t{note}")
        if self.table:
            rows = [tuple(self.columns)] if self.columns else []
            rows += [tuple(_cell(x) for x in row) for row in self.table]
            widths = [max(len(r[j]) for r in rows if j < len(r)) for j in range(max(len(r) for r in rows))]
            for r in rows:
                lines.append("\t".join(cell.rjust(widths[j]) for j, cell in enumerate(r)))
        return "\n".join(lines) + "\n"


def _cell(x) -> str:
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return str(x)
