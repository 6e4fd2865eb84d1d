# algorithms/generators.py
"""
Deterministic constructors for the graph families the toolkit analyses.
Vertex ids are assigned in creation order starting at 0.
"""
import logging
from typing import Callable, Dict, List, Optional, Tuple

from algorithms.embedding import trace_faces
from models.embedding import EmbeddedGraph
from models.graph import Edge, Graph
from models.layered import LayeredGraph
from models.tessellation import TessellationPatch
from utils.errors import DivisibilityError, GraphError, HyperbolicityError, UnknownFamily

logger = logging.getLogger(__name__)


# ------------------------
# H^{k,d}_i
# ------------------------
def gen_hkd(k: int, d: int, i: int) -> LayeredGraph:
    """
    H_0 = K_(k, d-k) with S_0 of size k and S_1 of size d-k. Step j groups
    S_(j+1) into consecutive k-tuples and gives each tuple d-k common new
    neighbours, which form S_(j+2). For k = 2 a planar rotation system is built
    alongside: a tuple's children sit in the face the tuple shares with its poles.
    """
    if not 1 <= k < d:
        raise DivisibilityError(f"H^(k,d) needs 1 <= k < d, got k={k}, d={d}", {"k": k, "d": d})
    if d % k:
        raise DivisibilityError(f"k = {k} must divide d = {d}", {"k": k, "d": d})
    if i < 0:
        raise GraphError(f"Step count must be non-negative, got {i}", {"i": i})

    m = d - k
    planar = k == 2
    edges: List[Edge] = []
    layers: List[List[int]] = [list(range(k)), list(range(k, d))]
    for a in layers[0]:
        edges.extend((a, c) for c in layers[1])

    rotation: Dict[int, List[int]] = {}
    poles: Dict[int, Tuple[int, int]] = {}
    if planar:
        a, b = layers[0]
        rotation[a] = list(layers[1])
        rotation[b] = list(reversed(layers[1]))
        for c in layers[1]:
            rotation[c] = [a, b]
            poles[c] = (a, b)

    next_id = d
    for _ in range(i):
        current = layers[-1]
        children: List[int] = []
        for start in range(0, len(current), k):
            group = current[start:start + k]
            fresh = list(range(next_id, next_id + m))
            next_id += m
            for parent in group:
                edges.extend((parent, x) for x in fresh)
            if planar:
                first, second = group
                u, w = poles[first]
                at = rotation[first].index(w) + 1
                rotation[first][at:at] = fresh
                at = rotation[second].index(u) + 1
                rotation[second][at:at] = list(reversed(fresh))
                for x in fresh:
                    rotation[x] = [first, second]
                    poles[x] = (first, second)
            children.extend(fresh)
        layers.append(children)

    graph = Graph.from_edges(edges)
    logger.debug("gen_hkd(%s, %s, %s): %s vertices, layer sizes %s", k, d, i, graph.num_vertices,
                 [len(layer) for layer in layers])
    return LayeredGraph(graph, layers, rotation if planar else None, {"family": "hkd", "k": k, "d": d, "i": i})


# ------------------------
# {p,q} tessellation balls
# ------------------------
class _PatchBuilder:
    """
    Grows the ball one face layer at a time. The boundary is kept as a cyclic
    list in counter-clockwise order; every rotation is counter-clockwise, and a
    boundary vertex b with neighbours a (previous) and c (next) has its
    outward gap right after a.
    """

    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        self.next_id = 0
        self.rotation: Dict[int, List[int]] = {}
        self.layer: Dict[int, int] = {}
        self.edges: List[Edge] = []

    def _new(self, level: int) -> int:
        v = self.next_id
        self.next_id += 1
        self.layer[v] = level
        return v

    def _close(self, entries: List[Tuple[int, Optional[int]]]) -> List[int]:
        """Link a new boundary cycle of (vertex, inner neighbour) entries and set their rotations."""
        ring = [v for v, _ in entries]
        n = len(ring)
        for j, (v, inner) in enumerate(entries):
            prev, nxt = ring[j - 1], ring[(j + 1) % n]
            self.rotation[v] = [nxt, inner, prev] if inner is not None else [nxt, prev]
            self.edges.append((v, nxt))
            if inner is not None:
                self.edges.append((inner, v))
        return ring

    def start(self) -> List[int]:
        root = self._new(0)
        spokes = [self._new(1) for _ in range(self.p)]
        self.rotation[root] = list(spokes)
        entries: List[Tuple[int, Optional[int]]] = []
        for n in spokes:
            entries.append((n, root))
            entries.extend((self._new(1), None) for _ in range(self.q - 3))
        return self._close(entries)

    def grow(self, boundary: List[int], level: int) -> List[int]:
        n = len(boundary)
        outward: Dict[int, List[int]] = {}
        for j, b in enumerate(boundary):
            a = boundary[j - 1]
            fresh = [self._new(level) for _ in range(self.p - len(self.rotation[b]))]
            at = self.rotation[b].index(a) + 1
            self.rotation[b][at:at] = fresh
            outward[b] = fresh

        entries: List[Tuple[int, Optional[int]]] = []
        for j, b in enumerate(boundary):
            fresh = outward[b]
            for t, w in enumerate(fresh):
                entries.append((w, b))
                if t + 1 < len(fresh):
                    # vertex face between consecutive new edges at b
                    entries.extend((self._new(level), None) for _ in range(self.q - 3))
            # face on the outer side of edge b -> next boundary vertex
            entries.extend((self._new(level), None) for _ in range(self.q - 4))
        return self._close(entries)


def gen_tessellation(p: int, q: int, R: int) -> TessellationPatch:
    """Ball of face radius R around a root vertex in the regular {p,q} tessellation."""
    if 2 * (p + q) > p * q:
        raise HyperbolicityError(f"1/p + 1/q > 1/2 for (p, q) = ({p}, {q})", {"p": p, "q": q})
    if p < 4 or q < 4:
        raise GraphError(f"Only p, q >= 4 are generated, got ({p}, {q})", {"p": p, "q": q})
    if R < 1:
        raise GraphError(f"Patch radius must be >= 1, got {R}", {"r": R})

    builder = _PatchBuilder(p, q)
    boundary = builder.start()
    for level in range(2, R + 1):
        boundary = builder.grow(boundary, level)
        logger.debug("{%s,%s} layer %s: boundary of %s vertices, %s total", p, q, level, len(boundary), builder.next_id)

    graph = Graph.from_edges(builder.edges)
    embedded = EmbeddedGraph(graph, builder.rotation, 0)
    faces = trace_faces(embedded)
    outer = max(faces, key=lambda f: f.size)
    inner = [f.vertices for f in faces if f is not outer]
    logger.info("gen_tessellation(%s, %s, %s): %s vertices, %s edges, %s faces",
                p, q, R, graph.num_vertices, graph.num_edges, len(inner))
    return TessellationPatch(p, q, R, graph, builder.rotation, 0, boundary, inner, builder.layer)


# ------------------------
# Named families
# ------------------------
def _positive(name: str, value, minimum: int = 1) -> int:
    if value is None:
        raise GraphError(f"Missing parameter '{name}'", {"param": name})
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise GraphError(f"Parameter '{name}' must be an integer, got {value!r}", {"param": name, "value": value})
    if value < minimum:
        raise GraphError(f"Parameter '{name}' must be >= {minimum}, got {value}", {"param": name, "value": value})
    return value


def complete(n: int) -> Graph:
    n = _positive("n", n)
    return Graph.from_edges(((u, v) for u in range(n) for v in range(u + 1, n)), range(n))


def complete_bipartite(m: int, n: int) -> Graph:
    m, n = _positive("m", m), _positive("n", n)
    return Graph.from_edges((u, m + v) for u in range(m) for v in range(n))


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def cycle(n: int) -> Graph:
    n = _positive("n", n, 3)
    return Graph.from_edges((v, (v + 1) % n) for v in range(n))


def path(n: int) -> Graph:
    n = _positive("n", n)
    return Graph.from_edges(((v, v + 1) for v in range(n - 1)), range(n))


def dary_tree(d: int, h: int) -> Graph:
    """Complete d-ary tree with levels 0..h."""
    d, h = _positive("d", d), _positive("h", h, 0)
    edges, frontier, next_id = [], [0], 1
    for _ in range(h):
        children = []
        for parent in frontier:
            for _ in range(d):
                edges.append((parent, next_id))
                children.append(next_id)
                next_id += 1
        frontier = children
    return Graph.from_edges(edges, range(next_id))


def grid(m: int, n: int) -> Graph:
    m, n = _positive("m", m), _positive("n", n)
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph.from_edges(edges, range(m * n))


def wheel(n: int) -> Graph:
    """Hub 0 joined to the cycle 1..n."""
    n = _positive("n", n, 3)
    rim = [(1 + v, 1 + (v + 1) % n) for v in range(n)]
    return Graph.from_edges(rim + [(0, v) for v in range(1, n + 1)])


def apollonian(rounds: int) -> Graph:
    """
    Stacked triangulation: start from a triangle and, in every round, put a new
    vertex into each bounded triangular face and join it to the face's corners.
    """
    rounds = _positive("rounds", rounds, 0)
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    next_id = 3
    for _ in range(rounds):
        refined = []
        for a, b, c in faces:
            v = next_id
            next_id += 1
            edges.extend([(a, v), (b, v), (c, v)])
            refined.extend([(a, b, v), (b, c, v), (a, c, v)])
        faces = refined
    return Graph.from_edges(edges)


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete-bipartite": complete_bipartite,
    "star": star,
    "cycle": cycle,
    "path": path,
    "dary-tree": dary_tree,
    "grid": grid,
    "wheel": wheel,
    "apollonian": apollonian,
}


def gen_named(family: str, **params) -> Graph:
    constructor = FAMILIES.get(family)
    if constructor is None:
        raise UnknownFamily(f"Unknown graph family '{family}'", {"family": family, "known": sorted(FAMILIES)})
    try:
        return constructor(**params)
    except TypeError as e:
        raise GraphError(f"Bad parameters for family '{family}': {e}", {"family": family, "params": params})
