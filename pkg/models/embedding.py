# models/embedding.py
from types import MappingProxyType
from typing import Dict, Mapping, Sequence, Tuple

from models.graph import Graph
from utils.errors import GraphError

Dart = Tuple[int, int]


class EmbeddedGraph:
    """
    Graph plus a rotation system: for every vertex the cyclic order of its
    neighbors. `declared_genus` is the Euler genus of the surface the caller
    claims the graph lives on; the traced genus is computed from the faces.
    """

    def __init__(self, graph: Graph, rotation: Mapping[int, Sequence[int]], declared_genus: int = 0):
        if declared_genus < 0:
            raise GraphError(f"Euler genus must be non-negative, got {declared_genus}")
        rot: Dict[int, Tuple[int, ...]] = {}
        for v in graph.vertices:
            order = tuple(int(u) for u in rotation.get(v, ()))
            if sorted(order) != list(graph.neighbors(v)):
                raise GraphError(
                    f"Rotation at vertex {v} is not a permutation of its neighbors",
                    {"vertex": v, "rotation": list(order)},
                )
            rot[v] = order
        self.graph = graph
        self.rotation = MappingProxyType(rot)
        self.declared_genus = declared_genus

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddedGraph":
        graph = Graph.from_json(data)
        rotation = {int(v): order for v, order in (data.get("rotation") or {}).items()}
        try:
            genus = int(data.get("genus") or 0)
        except (TypeError, ValueError):
            raise GraphError(f"'genus' must be an integer, got {data.get('genus')!r}", {"genus": data.get("genus")})
        return cls(graph, rotation, genus)

    def to_json(self) -> dict:
        data = self.graph.to_json()
        data["rotation"] = {str(v): list(order) for v, order in self.rotation.items()}
        data["genus"] = self.declared_genus
        return data


class Face:
    """A face given by its boundary walk, a cyclic sequence of darts (u -> v)."""
    __slots__ = ("walk",)

    def __init__(self, walk: Sequence[Dart]):
        self.walk = tuple(walk)

    @property
    def size(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(u for u, _ in self.walk)

    def to_json(self):
        return {"size": self.size, "vertices": list(self.vertices)}

    def __repr__(self):
        return f"Face({list(self.vertices)})"
