# tests/strategies.py
from hypothesis.strategies import composite, integers, lists, sampled_from

from models.graph import Graph


@composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 12, connected: bool = False, min_edges: int = 0) -> Graph:
    n = draw(integers(min_vertices, max_vertices))
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        extra = draw(lists(sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)),
                           max_size=len(pairs)))
        edges.update(extra)
    return Graph.from_edges(edges, range(n))


@composite
def trees(draw, min_vertices: int = 2, max_vertices: int = 20) -> Graph:
    n = draw(integers(min_vertices, max_vertices))
    return Graph.from_edges(((draw(integers(0, v - 1)), v) for v in range(1, n)), range(n))
