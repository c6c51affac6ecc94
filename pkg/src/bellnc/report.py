"""Verification reports: one record per check, deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__

PROVENANCE = ("reference", "derived", "trivial")


@dataclass(frozen=True)
class Record:
    check: str
    expected: str
    provenance: str
    computed: str
    passed: bool
    inputs: dict = field(default_factory=dict)
    discrepancy: str = None

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "expected": self.expected,
            "provenance": self.provenance,
            "computed": self.computed,
            "passed": self.passed,
        }
        if self.discrepancy:
            out["discrepancy"] = self.discrepancy
        return out


@dataclass
class Report:
    command: str
    records: list = field(default_factory=list)

    def add(self, check, expected, provenance, computed, passed, inputs=None, discrepancy=None) -> Record:
        r = Record(check, str(expected), provenance, str(computed), bool(passed), dict(inputs or {}), discrepancy)
        self.records.append(r)
        return r

    def extend(self, records):
        self.records.extend(records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> dict:
        n_pass = sum(r.passed for r in self.records)
        return {
            "total": len(self.records),
            "passed": n_pass,
            "failed": len(self.records) - n_pass,
            "flagged": sum(1 for r in self.records if r.discrepancy),
        }

    def _sorted(self):
        return sorted(self.records, key=lambda r: r.check)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "version": __version__,
            "passed": self.passed,
            "summary": self.summary(),
            "records": [r.to_dict() for r in self._sorted()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command} (version {__version__})"]
        for r in self._sorted():
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"[{status}] {r.check}")
            if r.inputs:
                lines.append("    inputs:   " + ", ".join(f"{k}={v}" for k, v in sorted(r.inputs.items())))
            lines.append(f"    expected: {r.expected} ({r.provenance})")
            lines.append(f"    computed: {r.computed}")
            if r.discrepancy:
                lines.append(f"    flag:     {r.discrepancy}")
        s = self.summary()
        lines.append(
            f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed, {s['flagged']} flagged"
        )
        return "\n".join(lines)
