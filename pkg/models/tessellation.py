# models/tessellation.py
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from models.embedding import EmbeddedGraph
from models.graph import Edge, Graph, normalize_edge

BLACK = "black"
WHITE = "white"


def cycle_edges(cycle: Sequence[int]) -> List[Edge]:
    return [normalize_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


class TessellationPatch:
    """
    Finite ball of the regular {p,q} tessellation around `root`.

    `faces` lists the inner faces only, each as its cyclic vertex sequence;
    the outer face is bounded by `boundary`, the last vertex layer in cyclic order.
    """

    def __init__(self, p: int, q: int, radius: int, graph: Graph, rotation: Mapping[int, Sequence[int]],
                 root: int, boundary: Sequence[int], faces: Iterable[Sequence[int]],
                 build_layer: Mapping[int, int]):
        self.p = p
        self.q = q
        self.radius = radius
        self.graph = graph
        self.rotation = MappingProxyType({v: tuple(r) for v, r in rotation.items()})
        self.root = root
        self.boundary = tuple(boundary)
        self.faces: Tuple[Tuple[int, ...], ...] = tuple(tuple(f) for f in faces)
        self.build_layer = MappingProxyType(dict(build_layer))

    @cached_property
    def edge_faces(self) -> Mapping[Edge, Tuple[int, ...]]:
        """Indices of the inner faces on each edge; a single index means the edge also borders the outer face."""
        index: Dict[Edge, List[int]] = {}
        for f, face in enumerate(self.faces):
            for e in cycle_edges(face):
                index.setdefault(e, []).append(f)
        return MappingProxyType({e: tuple(fs) for e, fs in index.items()})

    def embedded(self) -> EmbeddedGraph:
        return EmbeddedGraph(self.graph, self.rotation, 0)

    def on_boundary(self, v: int) -> bool:
        return self.build_layer.get(v) == self.radius

    def interior_vertices(self) -> List[int]:
        return [v for v in self.graph.vertices if self.build_layer[v] < self.radius]

    def interior_graph(self) -> Graph:
        """Subgraph induced on V_0..V_(R-1): every vertex in it has full degree p."""
        return self.graph.induced_subgraph(self.interior_vertices())

    def without_edges(self, edges: Iterable[Edge]) -> "TessellationPatch":
        """Copy with some edges removed; faces are kept as they were so the damage shows up in checks."""
        drop = {normalize_edge(u, v) for u, v in edges}
        graph = self.graph.without_edges(drop)
        rotation = {
            v: [u for u in order if normalize_edge(u, v) not in drop] for v, order in self.rotation.items()
        }
        return TessellationPatch(self.p, self.q, self.radius, graph, rotation, self.root, self.boundary,
                                 self.faces, self.build_layer)

    def to_json(self) -> dict:
        data = self.graph.to_json()
        data.update({
            "params": {"p": self.p, "q": self.q, "r": self.radius},
            "root": self.root,
            "rotation": {str(v): list(r) for v, r in self.rotation.items()},
            "layers": [sorted(v for v, i in self.build_layer.items() if i == level) for level in range(self.radius + 1)],
            "boundary": list(self.boundary),
            "faces": [list(f) for f in self.faces],
            "genus": 0,
        })
        return data


class LayerStructure:
    """
    The alternating vertex/face closure around a root: V_0 = {root},
    F_i = faces meeting V_i not seen before, V_(i+1) = vertices of F_i not seen before.
    """

    def __init__(self, graph: Graph, root: int, vertex_layers: Sequence[Sequence[int]],
                 face_layers: Sequence[Sequence[int]],
                 faces: Sequence[Sequence[int]], layer_graphs: Sequence[Graph], color: Mapping[int, str]):
        self.graph = graph
        self.root = root
        self.vertex_layers = tuple(tuple(sorted(layer)) for layer in vertex_layers)
        self.face_layers = tuple(tuple(layer) for layer in face_layers)
        self.faces = tuple(tuple(f) for f in faces)
        self.layer_graphs = tuple(layer_graphs)
        self.color = MappingProxyType(dict(color))
        self.level = MappingProxyType({v: i for i, layer in enumerate(self.vertex_layers) for v in layer})

    @property
    def depth(self) -> int:
        """Index of the last vertex layer."""
        return len(self.vertex_layers) - 1

    def is_black(self, v: int) -> bool:
        return self.color.get(v) == BLACK

    def cycle_order(self, i: int) -> Optional[List[int]]:
        """
        Vertices of G_i in cyclic order starting at the smallest id and moving
        to its smaller neighbor; None when G_i is not a single cycle.
        """
        layer = self.layer_graphs[i]
        if layer.num_vertices < 3 or any(layer.degree(v) != 2 for v in layer.vertices) or not layer.is_connected():
            return None
        start = layer.vertices[0]
        order = [start]
        previous, current = start, layer.neighbors(start)[0]
        while current != start:
            order.append(current)
            a, b = layer.neighbors(current)
            previous, current = current, (b if a == previous else a)
        return order

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "vertex_layer_sizes": [len(layer) for layer in self.vertex_layers],
            "face_layer_sizes": [len(layer) for layer in self.face_layers],
            "black": [sum(1 for v in layer if self.is_black(v)) for layer in self.vertex_layers],
        }


class Earthworm:
    """Maximal path of a layer cycle whose inner vertices are white, oriented from its smaller end."""
    __slots__ = ("path", "layer")

    def __init__(self, path: Sequence[int], layer: int):
        self.path = tuple(path)
        self.layer = layer

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def edges(self) -> List[Edge]:
        return [normalize_edge(self.path[i], self.path[i + 1]) for i in range(self.length)]

    def to_json(self) -> dict:
        return {"layer": self.layer, "length": self.length, "path": list(self.path)}

    def __repr__(self):
        return f"Earthworm(layer={self.layer}, path={list(self.path)})"


class MatchingFamily:
    """M_1..M_(q-3): M_t holds edge t of every earthworm. `violations` lists shared vertices inside a set."""

    def __init__(self, sets: Sequence[Iterable[Edge]], violations: Optional[List[dict]] = None):
        self.sets: Tuple[frozenset, ...] = tuple(frozenset(normalize_edge(u, v) for u, v in s) for s in sets)
        self.violations = list(violations or [])

    @property
    def is_matching(self) -> bool:
        return not self.violations

    def union(self) -> frozenset:
        return frozenset().union(*self.sets) if self.sets else frozenset()

    def to_json(self) -> Dict[str, object]:
        return {
            "sizes": [len(s) for s in self.sets],
            "is_matching": self.is_matching,
            "violations": self.violations,
        }
