from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

OK = "ok"
MISMATCH = "mismatch"
ERROR = "error"
SKIPPED = "skipped"
FINDING = "finding"

FAILING = frozenset({MISMATCH, ERROR})


@dataclass
class CheckResult:
    """Outcome of one verification with a JSON-ready payload."""

    check: str
    status: str
    payload: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status not in FAILING

    def to_json(self) -> dict[str, Any]:
        return {"check": self.check, "status": self.status, "payload": self.payload}
