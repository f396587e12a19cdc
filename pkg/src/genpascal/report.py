"""Pass/fail reports produced by verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Report:
    suite: str
    passed: bool
    counterexample: dict[str, Any] | None = None
    checked: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "checked": self.checked,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def merge_reports(suite: str, reports: list[Report]) -> Report:
    """Combine sub-reports: pass iff all pass, first counterexample wins."""
    checked = sum(r.checked for r in reports)
    for r in reports:
        if not r.passed:
            ce = dict(r.counterexample or {})
            ce.setdefault("subsuite", r.suite)
            return Report(suite, False, ce, checked)
    return Report(suite, True, None, checked)
