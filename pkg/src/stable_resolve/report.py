from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification pass; truthy iff nothing was flagged."""

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def fail(self, message):
        self.violations.append(message)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": list(self.violations),
        }
        if self.details:
            out["details"] = self.details
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.checked} checked)"
        if self.violations:
            text += f": {len(self.violations)} violation(s), first: {self.violations[0]}"
        return text
