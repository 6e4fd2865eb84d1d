# models/verification.py
from datetime import datetime

from mongoengine import (
    Document, EmbeddedDocument,
    StringField, BooleanField, FloatField, IntField,
    DictField, EmbeddedDocumentListField, DateTimeField
)


# One bound checked against one graph
class VerificationRow(EmbeddedDocument):
    graph_id = StringField(required=True)
    family = StringField(required=True)
    params = DictField()
    delta = IntField(required=True)
    genus = IntField(null=True)
    rho_lower = FloatField(required=True)
    rho_upper = FloatField(required=True)
    bound_id = StringField(required=True)
    bound_value = FloatField(required=True)
    satisfied = BooleanField(required=True)
    runtime_ms = FloatField(null=True)

    @classmethod
    def from_row(cls, row: dict) -> "VerificationRow":
        return cls(**{name: row.get(name) for name in cls._fields})

    def to_json(self):
        return {
            "graph_id": self.graph_id,
            "family": self.family,
            "params": dict(self.params or {}),
            "delta": self.delta,
            "genus": self.genus,
            "rho_lower": self.rho_lower,
            "rho_upper": self.rho_upper,
            "bound_id": self.bound_id,
            "bound_value": self.bound_value,
            "satisfied": self.satisfied,
            "runtime_ms": self.runtime_ms,
        }


class VerificationRun(Document):
    tolerance = FloatField(required=True)
    version = StringField(required=True)
    corpus = StringField(default="default")
    rows = EmbeddedDocumentListField(VerificationRow)
    passed = BooleanField(required=True)
    created_at = DateTimeField(default=datetime.utcnow)

    meta = {"collection": "verification_runs", "ordering": ["-created_at"]}

    @classmethod
    def from_rows(cls, rows, tolerance: float, version: str, corpus: str = "default") -> "VerificationRun":
        return cls(
            tolerance=tolerance,
            version=version,
            corpus=corpus,
            rows=[VerificationRow.from_row(r) for r in rows],
            passed=all(r["satisfied"] for r in rows),
        )

    def to_json(self):
        return {
            "id": str(self.id) if self.id else None,
            "tolerance": self.tolerance,
            "version": self.version,
            "corpus": self.corpus,
            "passed": self.passed,
            "rows": [r.to_json() for r in self.rows],
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }
