"""Pass/fail reports produced by the structural checks and oracles."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, Any] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, check: str, passed: bool, counterexample=None):
        """Record a check; the first counterexample per check is kept."""
        self.checks[check] = self.checks.get(check, True) and bool(passed)
        if not passed and counterexample is not None:
            self.counterexamples.setdefault(check, counterexample)

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": dict(self.checks),
            "counterexamples": dict(self.counterexamples),
            "skipped": dict(self.skipped),
            "info": dict(self.info),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, default=str)
