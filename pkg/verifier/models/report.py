from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one acceptance check; ``status`` is pass iff the comparator accepted ``actual``."""

    check_id: str
    claim: str
    expected: Any
    actual: Any
    status: CheckStatus
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


@dataclass(frozen=True)
class Report:
    checks: Tuple[CheckResult, ...]
    fingerprint: str
    summary: Dict[str, int] = field(init=False)

    def __post_init__(self):
        passed = sum(1 for c in self.checks if c.passed)
        object.__setattr__(
            self,
            "summary",
            {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed},
        )

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    @property
    def failed(self) -> Tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)
