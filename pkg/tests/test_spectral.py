# tests/test_spectral.py
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from algorithms.generators import complete, complete_bipartite, cycle, gen_hkd, path, star
from algorithms.graph_ops import union
from algorithms.spectral import (
    fractional_bound, geometric_test_vector, jacobi_eigenvalues, paschke_lower, paschke_minimizer,
    rayleigh_lower, rho_dense_oracle, rho_power,
)
from models.graph import Graph
from utils.errors import BoundParameterError, CoverageViolation, GraphError, IterationLimit, SizeLimit, ZeroVector

from strategies import graphs


# ------------------------
# rho_power
# ------------------------
@pytest.mark.parametrize("graph,expected", [
    (star(4), 2.0),
    (cycle(8), 2.0),
    (complete_bipartite(2, 6), math.sqrt(12)),
    (complete(5), 4.0),
    (path(3), math.sqrt(2)),
])
def test_rho_power_brackets_known_values(graph, expected):
    estimate = rho_power(graph, 1e-10)
    assert estimate.lower <= expected + 1e-12
    assert expected <= estimate.upper + 1e-12
    assert estimate.width <= 1e-10


def test_regular_graph_interval_closes_at_once():
    estimate = rho_power(cycle(8))
    assert estimate.iterations == 1
    assert estimate.lower == pytest.approx(2.0)
    assert estimate.upper == pytest.approx(2.0)


def test_witness_lives_on_the_dominant_component():
    g = union(cycle(5), Graph.from_edges([(10 + u, 10 + v) for u, v in complete(5).edges()]))
    estimate = rho_power(g, 1e-9)
    assert estimate.contains(4.0, 1e-9)
    assert set(estimate.component) == set(range(10, 15))
    assert all(x > 0 for x in estimate.witness.values())


def test_interval_comes_from_the_witness_component():
    # star K_(1,3) and a triangle; a loose tolerance stops both after one application
    g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (4, 6)])
    estimate = rho_power(g, 2.5)
    w = estimate.witness
    assert set(w) == {0, 1, 2, 3}
    ratios = [sum(w[u] for u in g.neighbors(v)) / w[v] for v in w]
    assert estimate.lower == pytest.approx(min(ratios))
    assert estimate.upper == pytest.approx(max(ratios))
    assert (estimate.lower, estimate.upper) == (pytest.approx(1.0), pytest.approx(3.0))
    assert estimate.contains(math.sqrt(3))


@settings(deadline=None, max_examples=100)
@given(graphs(min_vertices=2, min_edges=1))
def test_rho_lies_between_root_and_max_degree(g):
    estimate = rho_power(g, 1e-9)
    assert math.sqrt(g.max_degree) <= estimate.upper + 1e-9
    assert estimate.lower <= g.max_degree + 1e-9


@settings(deadline=None, max_examples=100)
@given(graphs(min_vertices=3, min_edges=2), integers(0, 10 ** 6))
def test_rho_is_monotone_under_edge_deletion(g, pick):
    edges = g.edges()
    sub = g.without_edges([edges[pick % len(edges)]])
    assert rho_power(sub, 1e-9).lower <= rho_power(g, 1e-9).upper + 1e-9


@settings(deadline=None, max_examples=100)
@given(graphs(min_vertices=3, min_edges=1), integers(0, 10 ** 6))
def test_rho_is_monotone_under_vertex_deletion(g, pick):
    keep = [v for v in g.vertices if v != g.vertices[pick % g.num_vertices]]
    sub = g.induced_subgraph(keep)
    if sub.num_edges:
        assert rho_power(sub, 1e-9).lower <= rho_power(g, 1e-9).upper + 1e-9


def test_rho_power_needs_an_edge():
    with pytest.raises(GraphError):
        rho_power(Graph.empty(range(3)))


def test_rho_power_cap():
    with pytest.raises(IterationLimit) as excinfo:
        rho_power(path(30), 1e-12, max_applications=3)
    assert excinfo.value.details["cap"] == 3


def test_estimate_json_hides_witness_by_default():
    data = rho_power(star(4)).to_json()
    assert "witness" not in data
    assert "witness" in rho_power(star(4)).to_json(include_witness=True)


# ------------------------
# dense oracle
# ------------------------
def test_jacobi_matches_numpy_on_a_random_symmetric_matrix():
    rng = np.random.default_rng(7)
    m = rng.normal(size=(9, 9))
    m = m + m.T
    assert np.allclose(jacobi_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-10)


@pytest.mark.parametrize("graph,expected", [
    (path(3), math.sqrt(2)),
    (complete_bipartite(2, 3), math.sqrt(6)),
    (complete(6), 5.0),
])
def test_oracle_known_values(graph, expected):
    assert rho_dense_oracle(graph) == pytest.approx(expected, abs=1e-10)


def test_oracle_on_hkd_step_one():
    value = rho_dense_oracle(gen_hkd(2, 8, 1).graph)
    assert math.sqrt(12) < value < 2 * math.sqrt(12)


def test_oracle_size_limit(monkeypatch):
    monkeypatch.setattr("algorithms.spectral.ORACLE_SIZE_LIMIT", 5)
    with pytest.raises(SizeLimit):
        rho_dense_oracle(path(6))


def test_oracle_on_edgeless_graph():
    assert rho_dense_oracle(Graph.empty(range(4))) == 0.0


@settings(deadline=None, max_examples=200)
@given(graphs(min_vertices=2, min_edges=1))
def test_power_interval_contains_the_oracle(g):
    estimate = rho_power(g, 1e-9)
    assert estimate.contains(rho_dense_oracle(g), 1e-8)


# ------------------------
# Rayleigh quotients
# ------------------------
def test_rayleigh_on_regular_graph():
    assert rayleigh_lower(cycle(4), {v: 1.0 for v in range(4)}) == pytest.approx(2.0)


def test_rayleigh_of_an_indicator_is_zero():
    assert rayleigh_lower(path(2), {0: 1.0}) == 0.0


def test_rayleigh_rejects_zero_vector():
    with pytest.raises(ZeroVector):
        rayleigh_lower(path(3), {})


def test_geometric_vector_values():
    f = geometric_test_vector([[0], [1, 2], [3]], 0.5)
    assert f == {0: 1.0, 1: 0.5, 2: 0.5, 3: 0.25}


def test_geometric_vector_certifies_growth_on_hkd():
    layered = gen_hkd(2, 8, 4)
    value = rayleigh_lower(layered.graph, geometric_test_vector(layered.layers, 0.5))
    assert 5.0 < value <= rho_power(layered.graph).upper + 1e-9


# ------------------------
# fractional covers
# ------------------------
def test_double_cover_returns_rho():
    g = complete(4)
    assert fractional_bound(g, [g, g], 2) == pytest.approx(3.0, abs=1e-7)


def test_edge_disjoint_split_is_subadditive():
    g = cycle(6)
    k = Graph.from_edges([(0, 1), (2, 3), (4, 5)])
    l = Graph.from_edges([(1, 2), (3, 4), (0, 5)])
    value = fractional_bound(g, [k, l], 1)
    assert value == pytest.approx(2.0, abs=1e-7)
    assert value >= rho_power(g).lower - 1e-9


def test_undercovered_edge_is_reported():
    g = cycle(4)
    with pytest.raises(CoverageViolation) as excinfo:
        fractional_bound(g, [g], 2)
    assert excinfo.value.details["count"] == 1


def test_fractional_bound_needs_positive_multiplicity():
    with pytest.raises(BoundParameterError):
        fractional_bound(cycle(4), [cycle(4)], 0)


# ------------------------
# Paschke
# ------------------------
@pytest.mark.parametrize("p,q", [(4, 5), (5, 4), (4, 8), (7, 3), (10, 10)])
def test_paschke_beats_the_tree_bound(p, q):
    assert paschke_lower(p, q) >= 2 * math.sqrt(p - 1) - 1e-9


def test_paschke_for_four_five_sits_below_the_tessellation_bound():
    value = paschke_lower(4, 5)
    assert 2 * math.sqrt(3) <= value <= 2 * math.sqrt(3) + 1


def test_paschke_minimizer_is_interior():
    s, value = paschke_minimizer(4, 5)
    assert 1e-4 < s < 4.0
    assert value == pytest.approx(paschke_lower(4, 5))


def test_paschke_gap_shrinks_with_p():
    gaps = [paschke_lower(p, 6) - 2 * math.sqrt(p - 1) for p in range(4, 21)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_paschke_parameter_range():
    with pytest.raises(BoundParameterError):
        paschke_lower(2, 5)
