# models/decomposition.py
from typing import Dict, List, Mapping, Optional

from models.graph import Edge, EdgeLabel, Graph, normalize_edge
from models.report import Report
from utils.errors import GraphError

VARIANTS = ("a", "b", "c")


class Decomposition:
    """
    Edge partition of `base` into T (2-degenerate, or a forest for variant c),
    T1 (forest, variant c only) and L (bounded degree).

    s is the light-edge threshold d(γ) the decomposition was built for and
    k the excluded K_(2,k) order (variant c only).
    """

    def __init__(self, base: Graph, labels: Mapping[Edge, EdgeLabel], s: int, variant: str, k: Optional[int] = None):
        if variant not in VARIANTS:
            raise GraphError(f"Unknown decomposition variant '{variant}'", {"variant": variant})
        self.base = base
        self.labels: Dict[Edge, EdgeLabel] = {normalize_edge(u, v): EdgeLabel(l) for (u, v), l in labels.items()}
        self.s = s
        self.variant = variant
        self.k = k

    def edges_with(self, label: EdgeLabel) -> List[Edge]:
        return sorted(e for e, l in self.labels.items() if l == label)

    def part(self, label: EdgeLabel) -> Graph:
        """The subgraph formed by the edges carrying `label`."""
        return Graph.from_edges(self.edges_with(label))

    def label_degree(self, label: EdgeLabel, v: int) -> int:
        return sum(1 for (a, b), l in self.labels.items() if l == label and v in (a, b))

    def label_degrees(self, label: EdgeLabel) -> Dict[int, int]:
        counts = {v: 0 for v in self.base.vertices}
        for (a, b), l in self.labels.items():
            if l == label:
                counts[a] = counts.get(a, 0) + 1
                counts[b] = counts.get(b, 0) + 1
        return counts

    def sizes(self) -> Dict[str, int]:
        return {label.value: len(self.edges_with(label)) for label in EdgeLabel}

    @classmethod
    def from_json(cls, base: Graph, data: dict) -> "Decomposition":
        labels = {}
        for u, v, label in data.get("labels", []):
            labels[normalize_edge(int(u), int(v))] = EdgeLabel(label)
        return cls(base, labels, int(data["s"]), data["variant"], data.get("k"))

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "s": self.s,
            "k": self.k,
            "labels": [[u, v, l.value] for (u, v), l in sorted(self.labels.items())],
        }


class DecompositionReport(Report):
    """Outcome of checking a decomposition against its variant's contract."""

    def __init__(self, variant: str):
        super().__init__("decomposition")
        self.variant = variant

    def to_json(self) -> dict:
        return {"variant": self.variant, **super().to_json()}
