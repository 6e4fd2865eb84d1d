# algorithms/tessellation.py
import logging
from collections import Counter, deque
from typing import Dict, List, Optional, Sequence, Set

from algorithms.bounds import evaluate_bound, tessellation_upper
from algorithms.graph_ops import is_forest
from algorithms.spectral import fractional_bound, rho_power
from models.graph import Edge, Graph, normalize_edge
from models.report import Report
from models.tessellation import (
    BLACK, WHITE, Earthworm, LayerStructure, MatchingFamily, TessellationPatch, cycle_edges,
)
from utils.errors import CycleNotInterior, ShortEarthworm

logger = logging.getLogger(__name__)


# ------------------------
# Layers
# ------------------------
def layer_partition(patch: TessellationPatch, root: Optional[int] = None) -> LayerStructure:
    """V_0 = {root}; F_i = faces meeting V_i not seen yet; V_(i+1) = vertices of F_i not seen yet."""
    root = patch.root if root is None else root
    faces_at: Dict[int, List[int]] = {}
    for index, face in enumerate(patch.faces):
        for v in set(face):
            faces_at.setdefault(v, []).append(index)

    vertex_layers: List[List[int]] = [[root]]
    face_layers: List[List[int]] = []
    seen_vertices: Set[int] = {root}
    seen_faces: Set[int] = set()
    while True:
        layer_faces = sorted({f for v in vertex_layers[-1] for f in faces_at.get(v, ()) if f not in seen_faces})
        if not layer_faces:
            break
        seen_faces.update(layer_faces)
        face_layers.append(layer_faces)
        layer = sorted({v for f in layer_faces for v in patch.faces[f] if v not in seen_vertices})
        if not layer:
            break
        seen_vertices.update(layer)
        vertex_layers.append(layer)

    layer_graphs = [patch.graph.induced_subgraph(layer) for layer in vertex_layers]
    color: Dict[int, str] = {}
    for i in range(1, len(vertex_layers)):
        previous = set(vertex_layers[i - 1])
        for v in vertex_layers[i]:
            color[v] = BLACK if any(u in previous for u in patch.graph.neighbors(v)) else WHITE

    logger.debug("layer_partition from %s: vertex layers %s", root, [len(l) for l in vertex_layers])
    return LayerStructure(patch.graph, root, vertex_layers, face_layers, patch.faces, layer_graphs, color)


def _interior_layers(layers: LayerStructure) -> range:
    # the last vertex layer is the patch boundary and is never complete
    return range(1, layers.depth)


def verify_layer_properties(layers: LayerStructure, q: int) -> Report:
    """
    On every interior layer i: (a) G_i is a cycle, (b) each vertex of V_i has at
    most one neighbour in V_(i-1), (c) each face of F_(i-1) has at most two
    vertices in V_(i-1), adjacent when there are exactly two.
    """
    report = Report("layer_properties")
    checked = []
    for i in _interior_layers(layers):
        layer_graph = layers.layer_graphs[i]
        if layers.cycle_order(i) is None:
            report.fail("a_cycle", f"G_{i} is not a cycle", layer=i,
                        vertices=layer_graph.num_vertices, edges=layer_graph.num_edges)

        previous = set(layers.vertex_layers[i - 1])
        for v in layers.vertex_layers[i]:
            back = [u for u in layers.graph.neighbors(v) if u in previous]
            if len(back) > 1:
                report.fail("b_back_neighbors", f"{len(back)} neighbours in V_{i - 1}", layer=i, vertex=v)

        for f in layers.face_layers[i - 1]:
            face = layers.faces[f]
            on_previous = [v for v in face if v in previous]
            if len(on_previous) > 2:
                report.fail("c_face_contact", f"face meets V_{i - 1} in {len(on_previous)} vertices",
                            layer=i, face=list(face))
            elif len(on_previous) == 2 and not _consecutive(face, *on_previous):
                report.fail("c_face_contact", "the two vertices in V_(i-1) are not adjacent on the face",
                            layer=i, face=list(face))
        checked.append(i)
    report.summary["layers_checked"] = checked
    report.summary["q"] = q
    return report


def _consecutive(face: Sequence[int], u: int, v: int) -> bool:
    n = len(face)
    i, j = face.index(u), face.index(v)
    return (i - j) % n in (1, n - 1)


# ------------------------
# Boundary degree sum
# ------------------------
_OUTER = -1


def _flood(patch: TessellationPatch, start: int, blocked: Set[Edge], seen: Set[int]):
    """Yields the faces reachable from `start` without crossing `blocked`, then _OUTER if the outer face is reached."""
    seen.add(start)
    queue = deque([start])
    while queue:
        f = queue.popleft()
        yield f
        for e in cycle_edges(patch.faces[f]):
            if e in blocked:
                continue
            incident = patch.edge_faces[e]
            if len(incident) == 1:
                yield _OUTER
                return
            for g in incident:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)


def _inside_faces(patch: TessellationPatch, cycle: Sequence[int]) -> List[int]:
    """
    Faces separated from the outer face by the cycle's edges.

    Both sides of the first cycle edge are flooded in lockstep; the side that
    runs out of faces without meeting the outer face is the inside.
    """
    blocked = set(cycle_edges(cycle))
    sides = []
    for start in patch.edge_faces.get(cycle_edges(cycle)[0], ()):
        seen: Set[int] = set()
        sides.append((_flood(patch, start, blocked, seen), seen))
    while sides:
        for side in list(sides):
            walk, seen = side
            f = next(walk, None)
            if f is None:
                return sorted(seen)
            if f == _OUTER:
                sides.remove(side)
    return []


def boundary_degree_check(patch: TessellationPatch, cycle: Sequence[int]) -> Report:
    """
    H is the closed disk bounded by `cycle`; d = Σ deg_H(u) over the cycle's k
    vertices must satisfy d < 2(k-1)(q-1)/(q-2). Compared in integers.
    """
    cycle = list(cycle)
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise CycleNotInterior("A cycle needs at least three distinct vertices", {"cycle": cycle})
    for u, v in cycle_edges(cycle):
        if not patch.graph.has_edge(u, v):
            raise CycleNotInterior(f"{u}-{v} is not an edge of the patch", {"edge": [u, v]})
    touching = [v for v in cycle if patch.on_boundary(v)]
    if touching:
        raise CycleNotInterior("The cycle touches the patch boundary", {"vertices": touching})

    inside = _inside_faces(patch, cycle)
    disk_edges = {e for index in inside for e in cycle_edges(patch.faces[index])}
    on_cycle = set(cycle)
    degree: Counter = Counter()
    for u, v in disk_edges:
        if u in on_cycle:
            degree[u] += 1
        if v in on_cycle:
            degree[v] += 1
    d = sum(degree[u] for u in cycle)
    q = patch.q

    report = Report("boundary_degree")
    report.summary.update({
        "k": k,
        "d": d,
        "limit": 2 * (k - 1) * (q - 1) / (q - 2),
        "inside_faces": len(inside),
    })
    if d * (q - 2) >= 2 * (k - 1) * (q - 1):
        report.fail("degree_sum", f"d = {d} is not below 2(k-1)(q-1)/(q-2) for k = {k}", cycle=cycle)
    return report


# ------------------------
# Earthworms and matchings
# ------------------------
def earthworms(layers: LayerStructure, q: int) -> List[Earthworm]:
    """Black-to-black arcs with white interiors on every interior layer cycle."""
    worms: List[Earthworm] = []
    for i in _interior_layers(layers):
        order = layers.cycle_order(i)
        if order is None:
            logger.warning("Layer %s is not a cycle; no earthworms extracted there", i)
            continue
        blacks = [j for j, v in enumerate(order) if layers.is_black(v)]
        n = len(order)
        for t, start in enumerate(blacks):
            end = blacks[(t + 1) % len(blacks)]
            span = (end - start) % n or n
            path = [order[(start + s) % n] for s in range(span + 1)]
            if path[-1] < path[0]:
                path.reverse()
            worms.append(Earthworm(path, i))
    return worms


def build_matchings(worms: Sequence[Earthworm], q: int) -> MatchingFamily:
    """M_t takes edge t of every earthworm, counted from its canonical end, t = 1..q-3."""
    count = q - 3
    short = [w for w in worms if w.length < count]
    if short:
        worm = short[0]
        raise ShortEarthworm(
            f"Earthworm on layer {worm.layer} has length {worm.length} < q-3 = {count}",
            {"layer": worm.layer, "path": list(worm.path), "short": len(short)},
        )
    sets: List[List[Edge]] = [[] for _ in range(count)]
    for worm in worms:
        for t in range(count):
            sets[t].append(normalize_edge(worm.path[t], worm.path[t + 1]))

    violations = []
    for t, edges in enumerate(sets, start=1):
        used: Set[int] = set()
        for u, v in edges:
            for x in (u, v):
                if x in used:
                    violations.append({"set": t, "vertex": x})
                used.add(x)
    if violations:
        logger.info("%s vertices are shared inside matching sets", len(violations))
    return MatchingFamily(sets, violations)


def verify_forests(patch: TessellationPatch, layers: LayerStructure, matchings: MatchingFamily,
                   tolerance: float = None) -> Report:
    """
    T_t = interior graph minus M_t must be a forest for t = 1..q-3, and the
    union of the interior layer cycles T_(q-2) must have maximum degree 2.
    Every interior edge then lies in q-3 of the T's, which gives the fractional bound.
    """
    report = Report("forests")
    interior = patch.interior_graph()
    parts: List[Graph] = []
    for t, matching in enumerate(matchings.sets, start=1):
        part = interior.without_edges(matching)
        if not is_forest(part):
            excess = part.num_edges - part.num_vertices + len(part.components())
            report.fail("T_forest", f"T_{t} has {excess} independent cycles", t=t)
        parts.append(part)

    cycle_union = Graph.from_edges(
        e for i in _interior_layers(layers) for e in layers.layer_graphs[i].edges()
    )
    if cycle_union.max_degree > 2:
        report.fail("layer_union_degree", f"Δ(T_(q-2)) = {cycle_union.max_degree} > 2")
    parts.append(cycle_union)

    report.summary["parts"] = len(parts)
    if report.passed and interior.num_edges:
        report.summary["fractional_bound"] = fractional_bound(interior, parts, patch.q - 3, tolerance)
    return report


# ------------------------
# Full pipeline
# ------------------------
def analyze_patch(patch: TessellationPatch, tolerance: float = None) -> dict:
    """Layers, their properties, boundary degree sums, earthworms, matchings, forests and the bound comparison."""
    p, q = patch.p, patch.q
    layers = layer_partition(patch)
    properties = verify_layer_properties(layers, q)

    boundary_checks = []
    for index, face in enumerate(patch.faces):
        if not any(patch.on_boundary(v) for v in face):
            boundary_checks.append(boundary_degree_check(patch, face))
    for i in _interior_layers(layers):
        order = layers.cycle_order(i)
        if order is not None:
            boundary_checks.append(boundary_degree_check(patch, order))
    boundary_failures = [r.violations[0] for r in boundary_checks if not r.passed]

    worms = earthworms(layers, q)
    lengths = Counter(w.length for w in worms)
    short = [w.to_json() for w in worms if w.length < q - 3]

    report = {
        "params": {"p": p, "q": q, "r": patch.radius},
        "n": patch.graph.num_vertices,
        "edges": patch.graph.num_edges,
        "layers": layers.to_json(),
        "layer_properties": properties.to_json(),
        "boundary_degree": {
            "checked": len(boundary_checks),
            "passed": not boundary_failures,
            "violations": boundary_failures,
        },
        "earthworms": {
            "count": len(worms),
            "length_histogram": {str(length): c for length, c in sorted(lengths.items())},
            "short": short,
        },
    }

    forests = None
    if not short:
        matchings = build_matchings(worms, q)
        report["matchings"] = matchings.to_json()
        forests = verify_forests(patch, layers, matchings, tolerance)
        report["forests"] = forests.to_json()

    interior = patch.interior_graph()
    bound, bound_id = tessellation_upper(p, q)
    row = {"bound_id": bound_id, "bound_value": bound, "tessellation": evaluate_bound("tessellation", p=p, q=q)}
    if interior.num_edges:
        estimate = rho_power(interior, tolerance)
        row.update({"rho_lower": estimate.lower, "rho_upper": estimate.upper,
                    "satisfied": estimate.upper <= bound + 1e-9})
    report["comparison"] = row
    report["passed"] = bool(
        properties.passed and not boundary_failures and not short
        and forests is not None and forests.passed and row.get("satisfied", True)
    )
    logger.info("analyze_patch {%s,%s} r=%s: passed=%s", p, q, patch.radius, report["passed"])
    return report
