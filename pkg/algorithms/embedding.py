# algorithms/embedding.py
import logging
from typing import Dict, List, Tuple

from models.embedding import EmbeddedGraph, Face
from models.graph import Graph
from utils.errors import GraphError, LightEdgeError

logger = logging.getLogger(__name__)


def trace_faces(embedded: EmbeddedGraph) -> List[Face]:
    """
    Orientable face tracing: after dart (u -> v) the walk continues with
    (v -> w), w being the successor of u in the rotation at v.
    Every dart lands in exactly one face.
    """
    position: Dict[int, Dict[int, int]] = {
        v: {u: i for i, u in enumerate(order)} for v, order in embedded.rotation.items()
    }
    visited = set()
    faces: List[Face] = []
    for u in embedded.graph.vertices:
        for v in embedded.rotation[u]:
            if (u, v) in visited:
                continue
            walk: List[Tuple[int, int]] = []
            dart = (u, v)
            while dart not in visited:
                visited.add(dart)
                walk.append(dart)
                a, b = dart
                order = embedded.rotation[b]
                dart = (b, order[(position[b][a] + 1) % len(order)])
            faces.append(Face(walk))
    return faces


def euler_genus_traced(embedded: EmbeddedGraph) -> int:
    """2 - (n - e + f) for a connected embedded graph."""
    graph = embedded.graph
    if graph.num_vertices == 0 or not graph.is_connected():
        raise GraphError("Euler genus is only traced for connected, nonempty graphs")
    faces = max(len(trace_faces(embedded)), 1)
    return 2 - (graph.num_vertices - graph.num_edges + faces)


def traced_genus(embedded: EmbeddedGraph) -> int:
    """Euler genus of the rotation system, summed over the connected components."""
    graph = embedded.graph
    total = 0
    for component in graph.components():
        rotation = {v: embedded.rotation[v] for v in component}
        total += euler_genus_traced(EmbeddedGraph(graph.induced_subgraph(component), rotation))
    return total


def check_declared_genus(embedded: EmbeddedGraph) -> EmbeddedGraph:
    """A rotation system may not trace a surface of larger Euler genus than the one it declares."""
    traced = traced_genus(embedded)
    if traced > embedded.declared_genus:
        logger.info("Rotation system traces genus %s above the declared %s", traced, embedded.declared_genus)
        raise GraphError(
            f"Rotation system traces Euler genus {traced}, above the declared genus {embedded.declared_genus}",
            {"traced": traced, "declared": embedded.declared_genus},
        )
    return embedded


def d_of_genus(genus: int) -> int:
    """The light-edge threshold d(γ) shared by orientable and non-orientable surfaces."""
    if genus < 0:
        raise GraphError(f"Euler genus must be non-negative, got {genus}", {"genus": genus})
    if genus <= 1:
        return 10
    if genus <= 3:
        return 12
    if genus <= 5:
        return 2 * genus + 6
    return 2 * genus + 4


def find_light_edge(graph: Graph, genus: int) -> Tuple[int, int]:
    """
    Edge of minimum weight deg(u) + deg(v), lexicographically first on ties.
    A graph with minimum degree 3 embedded in Euler genus γ always has one of
    weight <= d(γ) + 3; a heavier minimum means the graph does not embed there.
    """
    if graph.num_edges == 0 or graph.min_degree < 3:
        raise GraphError(
            f"Light edges are only guaranteed for minimum degree >= 3 (got {graph.min_degree})",
            {"min_degree": graph.min_degree},
        )
    u, v = min(graph.edges(), key=lambda e: (graph.weight(*e), e))
    weight = graph.weight(u, v)
    limit = d_of_genus(genus) + 3
    if weight > limit:
        logger.warning("Minimum edge weight %s exceeds d(%s)+3 = %s", weight, genus, limit)
        raise LightEdgeError(
            f"Minimum edge weight {weight} exceeds d({genus})+3 = {limit}; "
            f"the graph does not embed in Euler genus {genus}",
            {"edge": [u, v], "weight": weight, "limit": limit, "genus": genus},
        )
    return u, v
