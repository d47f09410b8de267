"""Verification reports shared by every command."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
MISMATCH = "mismatch-logged"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    data: Any = None

    def to_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        if self.data is not None:
            d["data"] = self.data
        return d


@dataclass
class Report:
    target: str
    checks: list = field(default_factory=list)
    timing_ms: float | None = None
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name, ok, detail="", data=None):
        """Record a check; ``ok`` may be a bool or an explicit status string."""
        if isinstance(ok, str):
            status = ok
        else:
            status = PASS if ok else FAIL
        self.checks.append(Check(name, status, detail, data))
        return status == PASS

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail, c.data))

    def finish(self):
        self.timing_ms = round((time.perf_counter() - self._t0) * 1000.0, 1)
        return self

    @property
    def ok(self) -> bool:
        # mismatch-logged entries document deviations from printed closed
        # forms; they do not fail a run by themselves
        return all(c.status != FAIL for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.ok else FAIL

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timing=True):
        d = {"target": self.target, "status": self.status,
             "checks": [c.to_dict() for c in self.checks]}
        if timing and self.timing_ms is not None:
            d["timing_ms"] = self.timing_ms
        return d

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False, default=str)

    def to_text(self, timing=True):
        lines = [f"{self.target}: {self.status.upper()}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        if timing and self.timing_ms is not None:
            lines.append(f"  ({self.timing_ms} ms)")
        return "\n".join(lines)
