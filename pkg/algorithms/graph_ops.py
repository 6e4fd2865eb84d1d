# algorithms/graph_ops.py
import heapq
import logging
from collections import deque
from typing import Dict, List, Optional, Set, Tuple

from models.graph import Graph, Orientation
from utils.errors import GraphError

logger = logging.getLogger(__name__)


def union(K: Graph, L: Graph) -> Graph:
    """V(K) ∪ V(L) and E(K) ∪ E(L); ids are read in one shared universe."""
    vertices = set(K.vertices) | set(L.vertices)
    return Graph.from_edges(K.edges() + L.edges(), vertices)


def degeneracy(graph: Graph) -> Tuple[int, List[int]]:
    """
    Repeatedly remove a vertex of minimum current degree (smallest id on ties).
    Returns the largest degree seen at removal time and the removal order.
    """
    degree = graph.degrees()
    heap = [(d, v) for v, d in degree.items()]
    heapq.heapify(heap)
    removed: Set[int] = set()
    ordering: List[int] = []
    d = 0
    while heap:
        current, v = heapq.heappop(heap)
        if v in removed or current != degree[v]:
            continue
        removed.add(v)
        ordering.append(v)
        d = max(d, current)
        for u in graph.neighbors(v):
            if u not in removed:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return d, ordering


def is_forest(graph: Graph) -> bool:
    # acyclic iff |E| = |V| - (number of components)
    return graph.num_edges == graph.num_vertices - len(graph.components())


def contains_k2k(graph: Graph, k: int) -> Optional[Tuple[int, int, Tuple[int, ...]]]:
    """
    Lexicographically smallest pair (u, v), u < v, with at least k common
    neighbors, returned with its k smallest common neighbors; None if K_{2,k} is absent.
    """
    if k < 2:
        raise GraphError(f"K_(2,k) search needs k >= 2, got {k}", {"k": k})
    for u in graph.vertices:
        counts: Dict[int, int] = {}
        for w in graph.neighbors(u):
            for v in graph.neighbors(w):
                if v > u:
                    counts[v] = counts.get(v, 0) + 1
        for v in sorted(counts):
            if counts[v] >= k:
                common = sorted(set(graph.neighbors(u)) & set(graph.neighbors(v)))
                return u, v, tuple(common[:k])
    return None


def _orient(graph: Graph, k: int) -> Tuple[Optional[Orientation], Optional[Set[int]]]:
    if k < 0:
        raise GraphError(f"Indegree bound must be non-negative, got {k}", {"k": k})

    # start with every edge pointing at its larger endpoint
    heads = {(u, v): v for u, v in graph.edges()}
    tails_into: Dict[int, Set[int]] = {v: set() for v in graph.vertices}
    for u, v in graph.edges():
        tails_into[v].add(u)
    indegree = {v: len(t) for v, t in tails_into.items()}

    augmentations = 0
    for x in graph.vertices:
        while indegree[x] > k:
            # breadth-first over reversed arcs until a vertex with spare indegree shows up
            parent = {x: None}
            queue = deque([x])
            target = None
            while queue and target is None:
                current = queue.popleft()
                for w in sorted(tails_into[current]):
                    if w in parent:
                        continue
                    parent[w] = current
                    if indegree[w] < k:
                        target = w
                        break
                    queue.append(w)

            if target is None:
                logger.info("No orientation with max indegree %s: %s vertices reach an over-full vertex", k, len(parent))
                return None, set(parent)

            y = target
            while y != x:
                nxt = parent[y]
                tails_into[nxt].discard(y)
                tails_into[y].add(nxt)
                heads[(y, nxt) if y < nxt else (nxt, y)] = y
                indegree[nxt] -= 1
                indegree[y] += 1
                y = nxt
            augmentations += 1

    logger.debug("Orientation with max indegree %s found after %s path reversals", k, augmentations)
    return Orientation(graph, heads), None


def orient_max_indegree(graph: Graph, k: int) -> Optional[Orientation]:
    """
    Orientation with every indegree <= k, found by reversing directed paths from
    an over-full vertex to a vertex with indegree < k. Returns None when every
    orientation has a vertex of indegree > k.
    """
    orientation, _ = _orient(graph, k)
    return orientation


def densest_witness(graph: Graph, k: int) -> Optional[dict]:
    """
    When orient_max_indegree(graph, k) fails, the vertices reached by the failed
    search span more than k * |S| edges; that subgraph certifies the failure.
    """
    orientation, reached = _orient(graph, k)
    if orientation is not None:
        return None
    sub = graph.induced_subgraph(reached)
    return {
        "vertices": list(sub.vertices),
        "edges": sub.num_edges,
        "density": sub.num_edges / sub.num_vertices,
        "k": k,
    }
