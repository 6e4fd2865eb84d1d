# algorithms/decompose.py
"""
Forward reduction loops that build the T/T1/L edge partitions of graphs
embedded in a surface of Euler genus γ, plus the independent checker for
their contracts and the threshold peeling of small-degree subgraphs.

Each loop applies the first rule that fires, smallest ids first. Rules are
evaluated against the current (residual) degrees; the contracts are
checked against the degrees of the original graph.
"""
import heapq
import logging
import math
from typing import Dict, List, Optional, Set

from algorithms.embedding import d_of_genus
from algorithms.graph_ops import contains_k2k, degeneracy, is_forest
from models.decomposition import Decomposition, DecompositionReport
from models.graph import Edge, EdgeLabel, Graph, normalize_edge
from utils.errors import GraphError, K2kPresent, NoReductionApplies, ResidualNonempty

logger = logging.getLogger(__name__)


class _Residual:
    """Mutable working copy of a graph used by the reduction loops."""

    def __init__(self, graph: Graph):
        self.adj: Dict[int, Set[int]] = {v: set(ns) for v, ns in graph.adjacency.items()}
        self.edge_count = graph.num_edges
        self.labels: Dict[Edge, EdgeLabel] = {}
        self.small_edges: List[Edge] = []
        self.low_vertices: List[int] = []
        self.degree_one: List[int] = []
        self.degree_two: List[int] = []

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def alive(self, v: int) -> bool:
        return v in self.adj

    def take_edge(self, u: int, v: int, label: EdgeLabel) -> List[int]:
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edge_count -= 1
        self.labels[normalize_edge(u, v)] = label
        touched = []
        for x in (u, v):
            if self.adj[x]:
                touched.append(x)
            else:
                # rule (1): isolated vertices are deleted as soon as they appear
                del self.adj[x]
        return touched


class _Reducer:
    """
    Shared loop for the three variants. `small_edge_ok` decides whether an edge
    between two current-small vertices may go to L; `low_vertex_step` performs
    the low-degree rule(s) and returns False when none applies.
    """

    def __init__(self, graph: Graph, s: int, variant: str, k: Optional[int] = None):
        self.graph = graph
        self.s = s
        self.variant = variant
        self.k = k
        self.state = _Residual(graph)
        for v in list(self.state.adj):
            if not self.state.adj[v]:
                del self.state.adj[v]
        for u, v in graph.edges():
            if self._small_edge_ok(u, v):
                heapq.heappush(self.state.small_edges, (u, v))
        for v in self.state.adj:
            self._queue_low(v)

    # ------------------------
    # Rule predicates
    # ------------------------
    def _small(self, v: int) -> bool:
        return self.state.alive(v) and self.state.degree(v) <= self.s

    def _small_edge_ok(self, u: int, v: int) -> bool:
        if not (self._small(u) and self._small(v)):
            return False
        if self.variant == "b":
            # only vertices of S \ S2 (small, degree >= 3) may share an L edge
            return self.state.degree(u) >= 3 and self.state.degree(v) >= 3
        return True

    def _queue_low(self, v: int):
        d = self.state.degree(v)
        if self.variant == "c":
            if d == 1:
                heapq.heappush(self.state.degree_one, v)
            elif d == 2:
                heapq.heappush(self.state.degree_two, v)
        elif d <= 2:
            heapq.heappush(self.state.low_vertices, v)

    def _after_degree_drop(self, vertices: List[int]):
        for x in vertices:
            if not self.state.alive(x):
                continue
            self._queue_low(x)
            if self._small(x):
                for y in self.state.adj[x]:
                    if self._small_edge_ok(x, y):
                        heapq.heappush(self.state.small_edges, normalize_edge(x, y))

    # ------------------------
    # Rules
    # ------------------------
    def _apply_small_edge(self) -> bool:
        heap = self.state.small_edges
        while heap:
            u, v = heapq.heappop(heap)
            if self.state.alive(u) and v in self.state.adj[u] and self._small_edge_ok(u, v):
                touched = self.state.take_edge(u, v, EdgeLabel.L)
                self._after_degree_drop(touched)
                return True
        return False

    def _remove_vertex_into_t(self, v: int):
        touched = []
        for w in sorted(self.state.adj[v]):
            touched.extend(self.state.take_edge(v, w, EdgeLabel.T))
        self._after_degree_drop([x for x in touched if x != v])

    def _apply_low_vertex(self) -> bool:
        heap = self.state.low_vertices
        while heap:
            v = heapq.heappop(heap)
            if self.state.alive(v) and 1 <= self.state.degree(v) <= 2:
                self._remove_vertex_into_t(v)
                return True
        return False

    def _apply_degree_one(self) -> bool:
        heap = self.state.degree_one
        while heap:
            v = heapq.heappop(heap)
            if self.state.alive(v) and self.state.degree(v) == 1:
                self._remove_vertex_into_t(v)
                return True
        return False

    def _apply_degree_two(self) -> bool:
        limit = self.k * (self.s - 1) + 1
        heap = self.state.degree_two
        skipped = []
        applied = False
        while heap:
            v = heapq.heappop(heap)
            if not (self.state.alive(v) and self.state.degree(v) == 2):
                continue
            a, b = sorted(self.state.adj[v])
            if self.state.degree(a) <= limit:
                u, w = a, b
            elif self.state.degree(b) <= limit:
                u, w = b, a
            else:
                skipped.append(v)
                continue
            touched = self.state.take_edge(v, w, EdgeLabel.T)
            touched += self.state.take_edge(u, v, EdgeLabel.T1)
            self._after_degree_drop([x for x in touched if x != v])
            applied = True
            break
        for v in skipped:
            heapq.heappush(heap, v)
        return applied

    def run(self) -> Decomposition:
        steps = 0
        while self.state.edge_count > 0:
            if self._apply_small_edge():
                pass
            elif self.variant == "c" and (self._apply_degree_one() or self._apply_degree_two()):
                pass
            elif self.variant != "c" and self._apply_low_vertex():
                pass
            else:
                remaining = self.state.edge_count
                logger.warning(
                    "Variant %s reduction stuck with %s edges left (s=%s)", self.variant, remaining, self.s
                )
                raise NoReductionApplies(
                    f"No reduction rule applies with {remaining} edges left; "
                    f"the graph does not embed in a surface with d(γ) = {self.s}",
                    {
                        "variant": self.variant,
                        "s": self.s,
                        "remaining_edges": remaining,
                        "remaining_vertices": sorted(self.state.adj),
                    },
                )
            steps += 1
        logger.debug("Variant %s decomposition finished after %s reductions", self.variant, steps)
        return Decomposition(self.graph, self.state.labels, self.s, self.variant, self.k)


def decompose_a(graph: Graph, genus: int) -> Decomposition:
    """G = T ∪ L with T 2-degenerate and ĥδ(v)-2 <= deg_L(v) <= ĥδ(v)."""
    return _Reducer(graph, d_of_genus(genus), "a").run()


def decompose_b(graph: Graph, genus: int) -> Decomposition:
    """G = T ∪ L with T 2-degenerate, deg_L(v) <= ĥδ(v)-2 (deg >= 2) and deg_L(v) = 0 (deg <= 1)."""
    return _Reducer(graph, d_of_genus(genus), "b").run()


def decompose_c(graph: Graph, genus: int, k: int) -> Decomposition:
    """G = T ∪ T1 ∪ L with T, T1 forests and Δ(T1) <= (k-1)(s-1)+2, for K_(2,k)-free G."""
    if k < 2:
        raise GraphError(f"Variant c needs k >= 2, got {k}", {"k": k})
    witness = contains_k2k(graph, k)
    if witness is not None:
        u, v, common = witness
        raise K2kPresent(
            f"Graph contains K_(2,{k}) on {u}, {v} with common neighbors {list(common)}",
            {"u": u, "v": v, "common": list(common), "k": k},
        )
    return _Reducer(graph, d_of_genus(genus), "c", k).run()


DECOMPOSERS = {"a": decompose_a, "b": decompose_b, "c": decompose_c}


def decompose(graph: Graph, variant: str, genus: int, k: Optional[int] = None) -> Decomposition:
    if variant not in DECOMPOSERS:
        raise GraphError(f"Unknown decomposition variant '{variant}'", {"variant": variant})
    if variant == "c":
        return decompose_c(graph, genus, k if k is not None else 2)
    return DECOMPOSERS[variant](graph, genus)


def verify_decomposition(graph: Graph, decomposition: Decomposition) -> DecompositionReport:
    """
    Check every clause of the variant's contract against the ORIGINAL degrees of
    `graph`. Violations are collected, never raised.
    """
    report = DecompositionReport(decomposition.variant)
    s = decomposition.s
    labels = decomposition.labels

    expected = graph.edge_set()
    for e in sorted(expected - labels.keys()):
        report.fail("coverage", "edge has no label", edge=list(e))
    for e in sorted(labels.keys() - expected):
        report.fail("coverage", "labelled edge is not in the graph", edge=list(e))

    t_part = decomposition.part(EdgeLabel.T)
    t1_part = decomposition.part(EdgeLabel.T1)
    l_part = decomposition.part(EdgeLabel.L)
    deg_l = decomposition.label_degrees(EdgeLabel.L)

    if decomposition.variant in ("a", "b"):
        t_degeneracy, _ = degeneracy(t_part)
        if t_degeneracy > 2:
            report.fail("T_2_degenerate", f"T is {t_degeneracy}-degenerate")
        if t1_part.num_edges:
            report.fail("labels", f"variant {decomposition.variant} has no T1 part")
        report.summary["T_degeneracy"] = t_degeneracy
    else:
        if not is_forest(t_part):
            report.fail("T_forest", "T contains a cycle")
        if not is_forest(t1_part):
            report.fail("T1_forest", "T1 contains a cycle")
        k = decomposition.k or 2
        limit = (k - 1) * (s - 1) + 2
        if t1_part.max_degree > limit:
            report.fail("T1_max_degree", f"Δ(T1) = {t1_part.max_degree} exceeds (k-1)(s-1)+2 = {limit}")
        report.summary["T1_degree_limit"] = limit

    for v in graph.vertices:
        degree = graph.degree(v)
        capped = min(degree, s)
        dl = deg_l.get(v, 0)
        if decomposition.variant == "b":
            if degree <= 1 and dl != 0:
                report.fail("deg_L_zero", f"deg_L = {dl} at a vertex of degree {degree}", vertex=v)
            elif degree >= 2 and dl > capped - 2:
                report.fail("deg_L_upper", f"deg_L = {dl} > ĥδ-2 = {capped - 2}", vertex=v)
        elif not (capped - 2 <= dl <= capped):
            report.fail("deg_L_window", f"deg_L = {dl} outside [{capped - 2}, {capped}]", vertex=v)

    report.summary.update({
        "sizes": decomposition.sizes(),
        "max_degree_G": graph.max_degree,
        "max_degree_T": t_part.max_degree,
        "max_degree_T1": t1_part.max_degree,
        "max_degree_L": l_part.max_degree,
        "s": s,
    })
    return report


def peel_thresholds(genus: int, epsilon: float) -> List[float]:
    rounds = math.ceil(1.0 / epsilon - 1e-12)
    return [genus ** (epsilon * (i + 1)) + 6 for i in range(rounds)]


def threshold_peel(graph: Graph, genus: int, epsilon: float) -> List[Graph]:
    """
    Split G into G_1..G_k, k = ⌈1/ε⌉. Round i removes, as long as possible, a
    vertex of residual degree < γ^(εi) + 6 and puts the edges it still has into G_i.
    """
    if genus < 2:
        raise GraphError(f"Threshold peeling needs γ >= 2, got {genus}", {"genus": genus})
    if not 0 < epsilon <= 1:
        raise GraphError(f"ε must lie in (0, 1], got {epsilon}", {"epsilon": epsilon})

    residual: Dict[int, Set[int]] = {v: set(ns) for v, ns in graph.adjacency.items() if ns}
    parts: List[Graph] = []
    for i, threshold in enumerate(peel_thresholds(genus, epsilon)):
        taken: List[Edge] = []
        queue = [v for v in residual if len(residual[v]) < threshold]
        heapq.heapify(queue)
        while queue:
            v = heapq.heappop(queue)
            if v not in residual or len(residual[v]) >= threshold:
                continue
            for u in sorted(residual[v]):
                taken.append(normalize_edge(u, v))
                residual[u].discard(v)
                if not residual[u]:
                    del residual[u]
                elif len(residual[u]) < threshold:
                    heapq.heappush(queue, u)
            del residual[v]
        logger.debug("Peel round %s (threshold %.3f) took %s edges", i + 1, threshold, len(taken))
        parts.append(Graph.from_edges(taken))

    remaining = sum(len(ns) for ns in residual.values()) // 2
    if remaining:
        logger.warning("Threshold peeling left %s edges after %s rounds", remaining, len(parts))
        raise ResidualNonempty(
            f"{remaining} edges remain after {len(parts)} peeling rounds",
            {"remaining_edges": remaining, "rounds": len(parts), "genus": genus, "epsilon": epsilon},
        )
    return parts
