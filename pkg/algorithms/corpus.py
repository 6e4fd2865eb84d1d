# algorithms/corpus.py
"""
The verification corpus: which graphs are checked against which closed-form
bounds, and how one corpus entry turns into report rows.
"""
import logging
import math
import time
from typing import Dict, List, Optional, Tuple

from algorithms.bounds import decomposition_bound, evaluate_bound, tessellation_upper
from algorithms.embedding import d_of_genus
from algorithms.generators import gen_hkd, gen_named, gen_tessellation
from algorithms.graph_ops import contains_k2k, degeneracy, is_forest, orient_max_indegree
from algorithms.spectral import rho_power
from models.graph import Graph
from utils.errors import GraphError, ToolkitError

logger = logging.getLogger(__name__)

SATISFACTION_SLACK = 1e-9

DEFAULT_CORPUS: List[dict] = [
    {"graph_id": "star-4", "family": "star", "params": {"n": 4}, "genus": 0, "planar": True},
    {"graph_id": "k2-6", "family": "complete-bipartite", "params": {"m": 2, "n": 6}, "genus": 0, "planar": True},
    {"graph_id": "k3-3", "family": "complete-bipartite", "params": {"m": 3, "n": 3}, "genus": 1, "planar": False},
    {"graph_id": "k5", "family": "complete", "params": {"n": 5}, "genus": 1, "planar": False},
    {"graph_id": "cycle-8", "family": "cycle", "params": {"n": 8}, "genus": 0, "planar": True},
    {"graph_id": "path-3", "family": "path", "params": {"n": 3}, "genus": 0, "planar": True},
    {"graph_id": "binary-tree-4", "family": "dary-tree", "params": {"d": 2, "h": 4}, "genus": 0, "planar": True},
    {"graph_id": "ternary-tree-3", "family": "dary-tree", "params": {"d": 3, "h": 3}, "genus": 0, "planar": True},
    {"graph_id": "grid-6x6", "family": "grid", "params": {"m": 6, "n": 6}, "genus": 0, "planar": True},
    {"graph_id": "wheel-12", "family": "wheel", "params": {"n": 12}, "genus": 0, "planar": True},
    {"graph_id": "apollonian-3", "family": "apollonian", "params": {"rounds": 3}, "genus": 0, "planar": True},
    {"graph_id": "apollonian-4", "family": "apollonian", "params": {"rounds": 4}, "genus": 0, "planar": True},
    {"graph_id": "hkd-2-8-2", "family": "hkd", "params": {"k": 2, "d": 8, "i": 2}, "genus": 0, "planar": True},
    {"graph_id": "hkd-2-10-2", "family": "hkd", "params": {"k": 2, "d": 10, "i": 2}, "genus": 0, "planar": True},
    {"graph_id": "hkd-2-12-2", "family": "hkd", "params": {"k": 2, "d": 12, "i": 2}, "genus": 0, "planar": True},
    {"graph_id": "hkd-2-16-1", "family": "hkd", "params": {"k": 2, "d": 16, "i": 1}, "genus": 0, "planar": True},
    {"graph_id": "hkd-3-9-2", "family": "hkd", "params": {"k": 3, "d": 9, "i": 2}, "genus": None, "planar": False},
    {"graph_id": "tess-4-5-3", "family": "tess", "params": {"p": 4, "q": 5, "r": 3}, "genus": 0, "planar": True},
    {"graph_id": "tess-5-4-3", "family": "tess", "params": {"p": 5, "q": 4, "r": 3}, "genus": 0, "planar": True},
    {"graph_id": "tess-4-6-3", "family": "tess", "params": {"p": 4, "q": 6, "r": 3}, "genus": 0, "planar": True},
    {"graph_id": "tess-6-4-3", "family": "tess", "params": {"p": 6, "q": 4, "r": 3}, "genus": 0, "planar": True},
    {"graph_id": "tess-5-5-2", "family": "tess", "params": {"p": 5, "q": 5, "r": 2}, "genus": 0, "planar": True},
]


def build_graph(entry: dict) -> Graph:
    """The graph a corpus entry stands for; tessellation entries use the patch interior."""
    family = entry.get("family")
    params = dict(entry.get("params") or {})
    if family == "hkd":
        return gen_hkd(int(params["k"]), int(params["d"]), int(params["i"])).graph
    if family == "tess":
        return gen_tessellation(int(params["p"]), int(params["q"]), int(params["r"])).interior_graph()
    return gen_named(family, **params)


def smallest_orientation_k(graph: Graph) -> int:
    """Least k admitting an orientation of maximum indegree k; the degeneracy always does."""
    upper, _ = degeneracy(graph)
    lower = max(1, math.ceil(graph.num_edges / max(graph.num_vertices, 1)))
    for k in range(lower, upper + 1):
        if orient_max_indegree(graph, k) is not None:
            return k
    return upper


def _smallest_k2k_free(graph: Graph) -> int:
    k = 2
    while contains_k2k(graph, k) is not None:
        k += 1
    return k


def applicable_bounds(graph: Graph, entry: dict) -> List[Tuple[str, float]]:
    """(bound_id, value) pairs whose hypotheses the entry satisfies."""
    delta = graph.max_degree
    genus = entry.get("genus")
    family = entry.get("family")
    params = entry.get("params") or {}
    bounds: List[Tuple[str, float]] = [("max_degree", float(delta))]

    k = smallest_orientation_k(graph)
    if delta >= 2 * k:
        bounds.append(("hayes", evaluate_bound("hayes", k=k, delta=delta)))
    if is_forest(graph) and delta >= 2:
        bounds.append(("tree", evaluate_bound("tree", delta=delta)))

    if genus is not None:
        s = d_of_genus(genus)
        if delta >= s + 2:
            bounds.append(("genus_a", evaluate_bound("genus_a", delta=delta, gamma=genus)))
        if delta >= s:
            k2k = _smallest_k2k_free(graph)
            bounds.append(("genus_k2k", evaluate_bound("genus_k2k", delta=delta, gamma=genus, k=k2k)))
        try:
            bounds.append(("decomposition", decomposition_bound(graph, genus)["bound"]))
        except ToolkitError as e:
            logger.warning("No decomposition bound for %s: %s", entry.get("graph_id"), e.message)

    if entry.get("planar"):
        if delta >= 10:
            bounds.append(("planar_1", evaluate_bound("planar_1", delta=delta)))
            bounds.append(("planar_2", evaluate_bound("planar_2", delta=delta)))
        if delta >= 4:
            bounds.append(("planar_headline", evaluate_bound("planar_headline", delta=delta)))
        if delta >= 2:
            bounds.append(("three_forests", evaluate_bound("three_forests", delta=delta)))

    if family == "hkd":
        bounds.append(("lower_limit", evaluate_bound("lower_limit", k=int(params["k"]), d=int(params["d"]))))
    if family == "tess":
        value, bound_id = tessellation_upper(int(params["p"]), int(params["q"]))
        bounds.append((bound_id, value))
    return bounds


def verify_entry(entry: dict, tolerance: float = None, timings: bool = False) -> List[dict]:
    """One row per applicable bound: satisfied iff rho_upper <= bound_value + 1e-9."""
    started = time.perf_counter()
    if "graph_id" not in entry or "family" not in entry:
        raise GraphError("Corpus entries need 'graph_id' and 'family'", {"entry": entry})
    graph = build_graph(entry)
    estimate = rho_power(graph, tolerance)
    bounds = applicable_bounds(graph, entry)
    runtime_ms = round((time.perf_counter() - started) * 1000, 3) if timings else None

    rows = []
    for bound_id, value in bounds:
        rows.append({
            "graph_id": entry["graph_id"],
            "family": entry["family"],
            "params": dict(entry.get("params") or {}),
            "delta": graph.max_degree,
            "genus": entry.get("genus"),
            "rho_lower": estimate.lower,
            "rho_upper": estimate.upper,
            "bound_id": bound_id,
            "bound_value": value,
            "satisfied": estimate.upper <= value + SATISFACTION_SLACK,
            "runtime_ms": runtime_ms,
        })
    unsatisfied = [r["bound_id"] for r in rows if not r["satisfied"]]
    if unsatisfied:
        logger.warning("%s violates %s", entry["graph_id"], unsatisfied)
    logger.debug("%s: %s rows, rho in [%.9f, %.9f]", entry["graph_id"], len(rows), estimate.lower, estimate.upper)
    return rows


def verify_corpus(entries: Optional[List[dict]] = None, tolerance: float = None, timings: bool = False) -> List[dict]:
    rows: List[dict] = []
    for entry in entries if entries is not None else DEFAULT_CORPUS:
        rows.extend(verify_entry(entry, tolerance, timings))
    logger.info("Verified %s rows, %s unsatisfied", len(rows), sum(1 for r in rows if not r["satisfied"]))
    return rows


def summarize(rows: List[dict]) -> Dict[str, int]:
    return {
        "rows": len(rows),
        "satisfied": sum(1 for r in rows if r["satisfied"]),
        "unsatisfied": sum(1 for r in rows if not r["satisfied"]),
    }
