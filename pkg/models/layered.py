# models/layered.py
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

from models.embedding import EmbeddedGraph
from models.graph import Graph
from utils.errors import GraphError


class LayeredGraph:
    """
    A graph with its vertex set split into layers S_0, S_1, ..., S_m such that
    every edge joins two consecutive layers.
    """

    def __init__(self, graph: Graph, layers: Sequence[Sequence[int]],
                 rotation: Optional[Mapping[int, Sequence[int]]] = None, params: Optional[dict] = None):
        self.graph = graph
        self.layers: Tuple[Tuple[int, ...], ...] = tuple(tuple(layer) for layer in layers)
        self.rotation = MappingProxyType({v: tuple(r) for v, r in rotation.items()}) if rotation else None
        self.params = dict(params or {})

        level: Dict[int, int] = {}
        for i, layer in enumerate(self.layers):
            for v in layer:
                if v in level:
                    raise GraphError(f"Vertex {v} appears in layers {level[v]} and {i}", {"vertex": v})
                level[v] = i
        if set(level) != set(graph.vertices):
            raise GraphError("Layers must partition the vertex set")
        for u, v in graph.edges():
            if abs(level[u] - level[v]) != 1:
                raise GraphError(
                    f"Edge {u}-{v} joins layers {level[u]} and {level[v]}",
                    {"edge": [u, v], "layers": [level[u], level[v]]},
                )
        self.level = MappingProxyType(level)

    def layer_sizes(self) -> Tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def embedded(self) -> EmbeddedGraph:
        if self.rotation is None:
            raise GraphError("No rotation system was generated for this graph", self.params)
        return EmbeddedGraph(self.graph, self.rotation, 0)

    def to_json(self) -> dict:
        data = self.graph.to_json()
        data["params"] = self.params
        data["layers"] = [list(layer) for layer in self.layers]
        if self.rotation is not None:
            data["rotation"] = {str(v): list(r) for v, r in self.rotation.items()}
        return data
