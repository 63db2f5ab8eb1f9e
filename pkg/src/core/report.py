"""Verification reports: per-check records with exact string values"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CheckRecord:
    id: str
    passed: bool
    expected: str = ""
    actual: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> Dict[str, Any]:
        return {"id": self.id, "status": self.status, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    """Outcome of one suite; wall time stays out of the JSON payload"""
    suite: str
    checks: List[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, id: str, passed: bool, expected: Any = "", actual: Any = "") -> CheckRecord:
        record = CheckRecord(id, bool(passed), str(expected), str(actual))
        self.checks.append(record)
        return record

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return bool(self.checks) and not self.failed

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "passed": self.passed,
            "total": len(self.checks),
            "checks": [c.to_json() for c in self.checks],
        }

    def summary(self) -> str:
        return f"{self.suite}: {self.passed}/{len(self.checks)} passed ({self.wall_time:.2f}s)"
