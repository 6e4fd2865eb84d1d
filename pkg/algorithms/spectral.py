# algorithms/spectral.py
import logging
import math
import os
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from models.graph import Graph, normalize_edge
from models.spectral import SpectralEstimate
from utils.errors import (
    BoundParameterError, CoverageViolation, GraphError, IterationLimit, SizeLimit, ZeroVector,
)

logger = logging.getLogger(__name__)

SPECTRAL_TOLERANCE = float(os.getenv("SPECTRAL_TOLERANCE", "1e-8"))
POWER_ITERATION_CAP = int(float(os.getenv("POWER_ITERATION_CAP", "1e6")))
ORACLE_SIZE_LIMIT = int(os.getenv("ORACLE_SIZE_LIMIT", "2000"))


# ------------------------
# Power iteration with Collatz–Wielandt certificates
# ------------------------
def _collatz_wielandt(matrix, x: np.ndarray) -> Tuple[float, float, np.ndarray]:
    y = matrix @ x
    ratios = y / x
    return float(ratios.min()), float(ratios.max()), y


def rho_power(graph: Graph, tolerance: float = None, max_applications: int = None) -> SpectralEstimate:
    """
    Power iteration on A + I from the all-ones vector, per connected component.

    The shift keeps bipartite components from oscillating; the Perron root of
    A + I is ρ + 1, so the shift is removed from both certified ends.
    Interval and witness both belong to the component with the largest certified upper end.
    """
    tolerance = SPECTRAL_TOLERANCE if tolerance is None else tolerance
    cap = POWER_ITERATION_CAP if max_applications is None else max_applications
    if graph.num_edges == 0:
        raise GraphError("Spectral radius estimation needs at least one edge")

    best = None
    applications = 0
    for component in graph.components():
        if len(component) < 2:
            continue
        sub = graph.induced_subgraph(component)
        matrix = sub.to_sparse(shift=1.0)
        x = np.ones(len(component))
        while True:
            lo, hi, y = _collatz_wielandt(matrix, x)
            applications += 1
            if hi - lo <= tolerance:
                break
            if applications >= cap:
                logger.warning("Power iteration hit the cap of %s applications (width %.3e)", cap, hi - lo)
                raise IterationLimit(
                    f"Certified interval did not close within {cap} matrix applications",
                    {"cap": cap, "lower": lo - 1.0, "upper": hi - 1.0},
                )
            x = y / y.max()
        if best is None or hi - 1.0 > best[1]:
            best = (lo - 1.0, hi - 1.0, dict(zip(sub.vertices, x.tolist())), component)

    logger.debug("rho_power on %s: [%.12f, %.12f] after %s applications", graph, best[0], best[1], applications)
    return SpectralEstimate(best[0], best[1], best[2], applications, tolerance, best[3])


# ------------------------
# Dense oracle: cyclic Jacobi with round-robin (parallel) ordering
# ------------------------
def _round_robin(n: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a >= 0 and b >= 0]
        rounds.append((np.array([a for a, _ in pairs]), np.array([b for _, b in pairs])))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-14, max_sweeps: int = 100) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations. Each round
    annihilates n/2 disjoint off-diagonal pairs at once.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()
    rounds = _round_robin(n)
    scale = np.linalg.norm(a)
    for sweep in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= tol * max(scale, 1.0):
            logger.debug("Jacobi converged after %s sweeps (off-norm %.3e)", sweep, off)
            break
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > 0.0
            if not active.any():
                continue
            theta = np.zeros_like(apq)
            theta[active] = (a[q, q][active] - a[p, p][active]) / (2.0 * apq[active])
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            with np.errstate(over="ignore"):
                t = sign / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            cols_p, cols_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cols_p * c - cols_q * s
            a[:, q] = cols_p * s + cols_q * c
            rows_p, rows_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
    return np.sort(np.diag(a))


def rho_dense_oracle(graph: Graph) -> float:
    """Largest adjacency eigenvalue from the Jacobi solver; independent of power iteration."""
    if graph.num_vertices > ORACLE_SIZE_LIMIT:
        raise SizeLimit(
            f"Dense oracle is limited to {ORACLE_SIZE_LIMIT} vertices, got {graph.num_vertices}",
            {"limit": ORACLE_SIZE_LIMIT, "n": graph.num_vertices},
        )
    if graph.num_edges == 0:
        return 0.0
    return float(jacobi_eigenvalues(graph.to_dense())[-1])


# ------------------------
# Test vectors and lower bounds
# ------------------------
def rayleigh_lower(graph: Graph, f: Mapping[int, float]) -> float:
    """<f|Af> / ||f||^2 = 2 Σ_uv f(u)f(v) / Σ f(v)^2, a lower bound on ρ(G)."""
    norm = sum(f.get(v, 0.0) ** 2 for v in graph.vertices)
    if norm <= 0.0:
        raise ZeroVector("Rayleigh quotient needs a nonzero test vector")
    inner = 2.0 * sum(f.get(u, 0.0) * f.get(v, 0.0) for u, v in graph.edges())
    return inner / norm


def geometric_test_vector(layers: Sequence[Iterable[int]], q: float) -> Dict[int, float]:
    """f(v) = q^i for v in layer S_i."""
    return {v: q ** i for i, layer in enumerate(layers) for v in layer}


def fractional_bound(graph: Graph, parts: Sequence[Graph], p: int, tolerance: float = None) -> float:
    """
    (1/p) Σ ρ(G_i) over parts covering every edge of G at least p times; the
    upper ends of the certified estimates are used.
    """
    if p < 1:
        raise BoundParameterError(f"Coverage multiplicity must be >= 1, got {p}", {"p": p})
    coverage = {e: 0 for e in graph.edges()}
    for part in parts:
        for u, v in part.edges():
            e = normalize_edge(u, v)
            if e in coverage:
                coverage[e] += 1
    for e, count in coverage.items():
        if count < p:
            raise CoverageViolation(
                f"Edge {e[0]}-{e[1]} lies in {count} parts, fewer than p = {p}",
                {"edge": list(e), "count": count, "p": p},
            )
    total = sum(rho_power(part, tolerance).upper for part in parts if part.num_edges)
    return total / p


# ------------------------
# Paschke's lower bound for vertex-transitive graphs
# ------------------------
def _paschke_objective(p: int, q: int):
    def objective(s: float) -> float:
        # (1 + cosh sq) / sinh sq == coth(sq / 2)
        t = 1.0 / (math.tanh(s * q / 2.0) * math.sinh(s))
        phi = t / (math.sqrt(1.0 + t * t) + 1.0)
        return (p - 2) * phi + 2.0 * math.cosh(s)
    return objective


def paschke_minimizer(p: int, q: int, s_max: float = 4.0, grid_points: int = 400) -> Tuple[float, float]:
    """(s*, value) minimising the Paschke objective over s in (0, s_max]."""
    if p < 3 or q < 3:
        raise BoundParameterError(f"Paschke's bound needs p, q >= 3, got ({p}, {q})", {"p": p, "q": q})
    objective = _paschke_objective(p, q)
    grid = np.geomspace(1e-4, s_max, grid_points)
    values = np.array([objective(s) for s in grid])
    i = int(np.argmin(values))
    if i == 0 or i == len(grid) - 1:
        return float(grid[i]), float(values[i])
    result = minimize_scalar(objective, bracket=(grid[i - 1], grid[i], grid[i + 1]), method="golden", tol=1e-10)
    if result.fun <= values[i]:
        return float(result.x), float(result.fun)
    return float(grid[i]), float(values[i])


def paschke_lower(p: int, q: int) -> float:
    return paschke_minimizer(p, q)[1]
