# models/graph.py
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from utils.errors import GraphError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """
    Finite simple undirected graph with integer vertex ids.

    Immutable: every operation that "changes" a graph returns a new one.
    Neighbor lists are kept sorted so that iteration order (and therefore
    every tie-break in the toolkit) is smallest id first.
    """
    __slots__ = ("_adjacency", "_edge_count")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: Dict[int, Tuple[int, ...]] = {}
        for v, neighbors in adjacency.items():
            v = int(v)
            if v < 0:
                raise GraphError(f"Vertex ids must be non-negative, got {v}", {"vertex": v})
            ns = sorted(int(u) for u in neighbors)
            if v in ns:
                raise GraphError(f"Self-loop at vertex {v}", {"vertex": v})
            if len(set(ns)) != len(ns):
                raise GraphError(f"Duplicate neighbor at vertex {v}", {"vertex": v})
            adj[v] = tuple(ns)

        degree_sum = 0
        for v, ns in adj.items():
            for u in ns:
                if u not in adj or v not in adj[u]:
                    raise GraphError(f"Adjacency is not symmetric on edge {v}-{u}", {"edge": [v, u]})
            degree_sum += len(ns)

        self._adjacency = MappingProxyType(dict(sorted(adj.items())))
        self._edge_count = degree_sum // 2

    # ------------------------
    # Constructors
    # ------------------------
    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from an edge list; repeated edges are merged, self-loops rejected."""
        adj: Dict[int, set] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}", {"vertex": u})
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj)

    @classmethod
    def empty(cls, vertices: Iterable[int] = ()) -> "Graph":
        return cls({int(v): () for v in vertices})

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        """Accepts {"n": int, "edges": [[u, v], ...]} with an optional explicit "vertices" list."""
        if not isinstance(data, dict) or "edges" not in data:
            raise GraphError("Graph JSON must be an object with an 'edges' list")
        if "vertices" in data:
            vertices = data["vertices"]
        else:
            vertices = range(int(data.get("n", 0)))
        return cls.from_edges((tuple(e) for e in data["edges"]), vertices)

    # ------------------------
    # Basic accessors
    # ------------------------
    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(self._adjacency.keys())

    @property
    def adjacency(self) -> Mapping[int, Tuple[int, ...]]:
        return self._adjacency

    def __contains__(self, v) -> bool:
        return v in self._adjacency

    def __len__(self) -> int:
        return len(self._adjacency)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> Dict[int, int]:
        return {v: len(ns) for v, ns in self._adjacency.items()}

    @property
    def num_vertices(self) -> int:
        return len(self._adjacency)

    @property
    def num_edges(self) -> int:
        return self._edge_count

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adjacency.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(ns) for ns in self._adjacency.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adjacency and v in self._adjacency[u]

    def weight(self, u: int, v: int) -> int:
        """w(uv) = deg(u) + deg(v)."""
        return self.degree(u) + self.degree(v)

    def edges(self) -> List[Edge]:
        return [(v, u) for v, ns in self._adjacency.items() for u in ns if v < u]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    # ------------------------
    # Derived graphs
    # ------------------------
    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph({v: [u for u in self._adjacency[v] if u in keep] for v in keep if v in self._adjacency})

    def edge_subgraph(self, edges: Iterable[Edge], keep_vertices: bool = False) -> "Graph":
        """Subgraph formed by `edges`; vertices are the incident ones unless keep_vertices is set."""
        chosen = []
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"Edge {u}-{v} is not in the graph", {"edge": [u, v]})
            chosen.append((u, v))
        return Graph.from_edges(chosen, self.vertices if keep_vertices else ())

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        removed = {normalize_edge(u, v) for u, v in edges}
        return Graph.from_edges((e for e in self.edges() if e not in removed), self.vertices)

    def index(self) -> Dict[int, int]:
        """Vertex id -> row index in matrix representations."""
        return {v: i for i, v in enumerate(self._adjacency)}

    def to_sparse(self, shift: float = 0.0) -> csr_matrix:
        """Adjacency matrix (plus shift * I) in CSR form, rows ordered as `vertices`."""
        index = self.index()
        n = len(index)
        rows, cols = [], []
        for v, ns in self._adjacency.items():
            for u in ns:
                rows.append(index[v])
                cols.append(index[u])
        data = np.ones(len(rows), dtype=float)
        if shift:
            rows.extend(range(n))
            cols.extend(range(n))
            data = np.concatenate([data, np.full(n, float(shift))])
        return csr_matrix((data, (rows, cols)), shape=(n, n))

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by smallest member."""
        if not self._adjacency:
            return []
        count, labels = connected_components(self.to_sparse(), directed=False)
        groups: Dict[int, List[int]] = {}
        for v, label in zip(self._adjacency, labels):
            groups.setdefault(int(label), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # ------------------------
    # Serialization / comparison
    # ------------------------
    def to_json(self) -> dict:
        vertices = self.vertices
        data = {"n": len(vertices), "edges": [list(e) for e in self.edges()]}
        if vertices != tuple(range(len(vertices))):
            data["vertices"] = list(vertices)
        return data

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return dict(self._adjacency) == dict(other._adjacency)

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges}, max_degree={self.max_degree})"


class EdgeLabel(str, Enum):
    """Part an edge is assigned to by a decomposition."""
    T = "T"
    T1 = "T1"
    L = "L"


class Orientation:
    """
    One direction (tail, head) per edge of `graph`.
    Indegree of v is the number of edges whose head is v.
    """

    def __init__(self, graph: Graph, heads: Mapping[Edge, int]):
        for u, v in graph.edges():
            head = heads.get((u, v))
            if head not in (u, v):
                raise GraphError(f"Edge {u}-{v} has no valid direction", {"edge": [u, v]})
        if len(heads) != graph.num_edges:
            raise GraphError("Orientation covers edges that are not in the graph")
        self.graph = graph
        self._heads = dict(heads)

    def head(self, u: int, v: int) -> int:
        return self._heads[normalize_edge(u, v)]

    def arcs(self) -> List[Tuple[int, int]]:
        """(tail, head) pairs in edge order."""
        result = []
        for (u, v), head in sorted(self._heads.items()):
            result.append((v, u) if head == u else (u, v))
        return result

    def indegrees(self) -> Dict[int, int]:
        counts = {v: 0 for v in self.graph.vertices}
        for head in self._heads.values():
            counts[head] += 1
        return counts

    @property
    def max_indegree(self) -> int:
        return max(self.indegrees().values(), default=0)

    def to_json(self, k: Optional[int] = None) -> dict:
        return {
            "k": k,
            "max_indegree": self.max_indegree,
            "arcs": [list(a) for a in self.arcs()],
        }
