# models/report.py
from typing import Dict, List


class Report:
    """
    Result of a property check. Violations are collected, never raised; each
    names the clause it breaks plus where it was found.
    """

    def __init__(self, kind: str):
        self.kind = kind
        self.violations: List[dict] = []
        self.summary: Dict[str, object] = {}

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, clause: str, message: str, **where):
        self.violations.append({"clause": clause, "message": message, **where})

    def clauses(self) -> List[str]:
        return sorted({v["clause"] for v in self.violations})

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "violations": self.violations,
            "summary": self.summary,
        }
