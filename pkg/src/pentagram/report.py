"""Verification reports shared by the CLI, the scripts and the tests."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-degenerate"


@dataclass
class Check:
    name: str
    status: str
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def check(name: str, ok: bool, witness: Optional[Dict[str, Any]] = None) -> Check:
    """A pass/fail check; the witness is kept only on failure."""
    return Check(name, PASS if ok else FAIL, None if ok else witness)


@dataclass
class VerificationReport:
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    timing_ms: Optional[int] = None

    def add(self, c: Check) -> Check:
        self.checks.append(c)
        return c

    def extend(self, cs) -> None:
        self.checks.extend(cs)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "command": self.command,
            "parameters": self.parameters,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.counts(),
        }
        if self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.command} {json.dumps(self.parameters, sort_keys=True)}"]
        for c in self.checks:
            lines.append(f"  {c.status.upper():<18} {c.name}")
            if c.witness is not None:
                lines.append(f"    witness: {json.dumps(c.witness, sort_keys=True)}")
        s = self.counts()
        lines.append(f"{s[PASS]} passed, {s[FAIL]} failed, {s[SKIPPED]} skipped")
        if self.timing_ms is not None:
            lines.append(f"time: {self.timing_ms} ms")
        return "\n".join(lines)
