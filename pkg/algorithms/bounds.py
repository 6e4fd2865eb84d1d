# algorithms/bounds.py
"""
Closed-form spectral radius bounds, each with the parameter range of the
theorem it comes from, plus a few reports assembled from them.
"""
import logging
import math
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from algorithms.decompose import decompose, threshold_peel
from algorithms.embedding import d_of_genus
from algorithms.generators import gen_hkd
from algorithms.graph_ops import degeneracy
from algorithms.spectral import geometric_test_vector, paschke_minimizer, rayleigh_lower, rho_power
from models.graph import EdgeLabel, Graph
from utils.errors import BoundParameterError

logger = logging.getLogger(__name__)


class BoundFormula:
    def __init__(self, bound_id: str, params: Tuple[str, ...], formula: Callable[..., float],
                 check: Callable[..., Optional[str]], kind: str = "upper", asymptotic: bool = False):
        self.bound_id = bound_id
        self.params = params
        self.formula = formula
        self.check = check
        self.kind = kind
        self.asymptotic = asymptotic

    def __call__(self, **params) -> float:
        missing = [name for name in self.params if name not in params]
        if missing:
            raise BoundParameterError(
                f"Bound '{self.bound_id}' needs parameters {list(self.params)}, missing {missing}",
                {"bound_id": self.bound_id, "missing": missing},
            )
        values = {name: params[name] for name in self.params}
        problem = self.check(**values)
        if problem:
            raise BoundParameterError(
                f"Bound '{self.bound_id}' is stated for {problem}; got {values}",
                {"bound_id": self.bound_id, "params": values, "range": problem},
            )
        return float(self.formula(**values))

    def to_json(self) -> dict:
        return {"bound_id": self.bound_id, "params": list(self.params), "kind": self.kind, "asymptotic": self.asymptotic}


def _require(condition: bool, text: str) -> Optional[str]:
    return None if condition else text


def _d(gamma: int) -> int:
    return d_of_genus(gamma)


BOUNDS: Dict[str, BoundFormula] = {}


def _register(bound_id, params, formula, check, **kwargs):
    BOUNDS[bound_id] = BoundFormula(bound_id, params, formula, check, **kwargs)


_register("hayes", ("k", "delta"),
          lambda k, delta: 2 * math.sqrt(k * (delta - k)),
          lambda k, delta: _require(k >= 1 and delta >= 2 * k, "k >= 1 and Δ >= 2k"))
_register("genus_a", ("delta", "gamma"),
          lambda delta, gamma: math.sqrt(8 * (delta - _d(gamma))) + _d(gamma),
          lambda delta, gamma: _require(gamma >= 0 and delta >= _d(gamma) + 2, "γ >= 0 and Δ >= d(γ) + 2"))
_register("genus_k2k", ("delta", "gamma", "k"),
          lambda delta, gamma, k: (2 * math.sqrt(delta - _d(gamma) + 1)
                                   + 2 * math.sqrt((k - 1) * (_d(gamma) - 1) + 1) + _d(gamma)),
          lambda delta, gamma, k: _require(gamma >= 0 and k >= 2 and delta >= _d(gamma),
                                           "γ >= 0, k >= 2 and Δ >= d(γ)"))
_register("planar_1", ("delta",),
          lambda delta: math.sqrt(8 * delta - 80) + 2 * math.sqrt(21),
          lambda delta: _require(delta >= 10, "Δ >= 10"))
_register("planar_2", ("delta",),
          lambda delta: math.sqrt(8 * delta - 16) + 2 * math.sqrt(15),
          lambda delta: _require(delta >= 10, "Δ >= 10"))
_register("planar_no4sep", ("delta",),
          lambda delta: 2 * math.sqrt(delta - 9) + 2 * math.sqrt(19) + 2 * math.sqrt(21),
          lambda delta: _require(delta >= 10, "Δ >= 10"))
_register("tessellation", ("p", "q"),
          lambda p, q: 2 * math.sqrt(p - 1) + 2 / (q - 3),
          lambda p, q: _require(p >= 4 and q >= 4, "p >= 4 and q >= 4"))
_register("higuchi_shirai", ("p", "q"),
          lambda p, q: 2 * math.sqrt((p - 2) * (1 + 1 / (q - 2))),
          lambda p, q: _require(p >= 3 and q >= 3 and 2 * (p + q) <= p * q, "p, q >= 3 and 1/p + 1/q <= 1/2"))
_register("lower_limit", ("k", "d"),
          lambda k, d: 2 * math.sqrt(k * (d - k)),
          lambda k, d: _require(1 <= k < d, "1 <= k < d"), kind="lower")

_register("tree", ("delta",),
          lambda delta: 2 * math.sqrt(delta - 1),
          lambda delta: _require(delta >= 2, "Δ >= 2"))
_register("three_forests", ("delta",),
          lambda delta: 6 * math.sqrt(delta - 1),
          lambda delta: _require(delta >= 2, "Δ >= 2"))
_register("hayes_planar", ("delta",),
          lambda delta: math.sqrt(12 * (delta - 3)),
          lambda delta: _require(delta >= 6, "Δ >= 6"))
_register("planar_headline", ("delta",),
          lambda delta: math.sqrt(8 * delta - 16) + 7.75,
          lambda delta: _require(delta >= 4, "Δ >= 4"))
_register("sqrt_delta", ("delta",),
          lambda delta: math.sqrt(delta),
          lambda delta: _require(delta >= 0, "Δ >= 0"), kind="lower")
_register("genus_sqrt_log", ("delta", "gamma"),
          lambda delta, gamma: math.sqrt(8 * delta) + math.sqrt(gamma) * math.log(gamma),
          lambda delta, gamma: _require(delta >= 1 and gamma >= 2, "Δ >= 1 and γ >= 2"), asymptotic=True)
_register("genus_sqrt_log_k2k", ("delta", "gamma"),
          lambda delta, gamma: 2 * math.sqrt(delta) + math.sqrt(gamma) * math.log(gamma),
          lambda delta, gamma: _require(delta >= 1 and gamma >= 2, "Δ >= 1 and γ >= 2"), asymptotic=True)


def evaluate_bound(bound_id: str, **params) -> float:
    formula = BOUNDS.get(bound_id)
    if formula is None:
        raise BoundParameterError(f"Unknown bound '{bound_id}'", {"bound_id": bound_id, "known": sorted(BOUNDS)})
    return formula(**params)


def below_tree_bound(p: int, q: int) -> bool:
    """True when Higuchi–Shirai evaluates to at most 2√(p-1) and cannot be an upper bound."""
    return evaluate_bound("higuchi_shirai", p=p, q=q) <= 2 * math.sqrt(p - 1) + 1e-12


def tessellation_upper(p: int, q: int) -> Tuple[float, str]:
    """Smallest usable upper bound for a {p,q} tessellation and the id it came from."""
    best = (evaluate_bound("tessellation", p=p, q=q), "tessellation")
    if not below_tree_bound(p, q):
        hs = evaluate_bound("higuchi_shirai", p=p, q=q)
        if hs < best[0]:
            best = (hs, "higuchi_shirai")
    return best


# ------------------------
# Reports built on top of the formulas
# ------------------------
def _part_bound(part: Graph) -> dict:
    delta = part.max_degree
    k, _ = degeneracy(part)
    value = float(delta)
    if k >= 1 and delta >= 2 * k:
        value = min(value, evaluate_bound("hayes", k=k, delta=delta))
    return {"edges": part.num_edges, "max_degree": delta, "degeneracy": k, "bound": value}


def decomposition_bound(graph: Graph, genus: int, variant: str = "a", epsilon: Optional[float] = None,
                        k: Optional[int] = None) -> dict:
    """
    Upper bound on ρ(G) from an actual decomposition: Hayes (or Δ) on each part
    with its measured degeneracy and maximum degree, summed by subadditivity.
    With ε given, L is first split by threshold peeling.
    """
    decomposition = decompose(graph, variant, genus, k)
    parts: List[dict] = []
    for label in (EdgeLabel.T, EdgeLabel.T1):
        part = decomposition.part(label)
        if part.num_edges:
            parts.append({"part": label.value, **_part_bound(part)})
    l_part = decomposition.part(EdgeLabel.L)
    if l_part.num_edges:
        if epsilon is not None:
            for i, piece in enumerate(threshold_peel(l_part, genus, epsilon), start=1):
                if piece.num_edges:
                    parts.append({"part": f"L{i}", **_part_bound(piece)})
        else:
            parts.append({"part": "L", **_part_bound(l_part)})
    total = sum(entry["bound"] for entry in parts)
    logger.debug("decomposition_bound(variant=%s, γ=%s): %s parts, total %.6f", variant, genus, len(parts), total)
    return {
        "variant": variant,
        "genus": genus,
        "s": decomposition.s,
        "epsilon": epsilon,
        "parts": parts,
        "bound": total,
    }


def bound_table(p_values: Iterable[int], q_values: Iterable[int]) -> List[dict]:
    """Tessellation, Higuchi–Shirai and Paschke side by side for hyperbolic (p, q)."""
    rows = []
    q_values = list(q_values)
    for p in p_values:
        for q in q_values:
            if p < 4 or q < 4:
                continue
            tree = 2 * math.sqrt(p - 1)
            s_min, lower = paschke_minimizer(p, q)
            tess = evaluate_bound("tessellation", p=p, q=q)
            hs = evaluate_bound("higuchi_shirai", p=p, q=q)
            rows.append({
                "p": p,
                "q": q,
                "tree": tree,
                "tessellation": tess,
                "tessellation_gap": tess - tree,
                "higuchi_shirai": hs,
                "higuchi_shirai_below_tree_bound": below_tree_bound(p, q),
                "paschke_lower": lower,
                "paschke_s": s_min,
                "paschke_gap": lower - tree,
            })
    return rows


def lower_bound_sequence(k: int, d: int, depth: int, q: float, tolerance: float = None) -> List[dict]:
    """ρ(H^{k,d}_i) for i = 0..depth next to the geometric-vector Rayleigh certificate."""
    limit = evaluate_bound("lower_limit", k=k, d=d)
    rows = []
    for i in range(depth + 1):
        layered = gen_hkd(k, d, i)
        estimate = rho_power(layered.graph, tolerance)
        certificate = rayleigh_lower(layered.graph, geometric_test_vector(layered.layers, q))
        rows.append({
            "i": i,
            "n": layered.graph.num_vertices,
            "rho_lower": estimate.lower,
            "rho_upper": estimate.upper,
            "rayleigh": certificate,
            "limit": limit,
        })
    return rows
