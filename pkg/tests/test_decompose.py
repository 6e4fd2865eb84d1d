# tests/test_decompose.py
import pytest

from algorithms.decompose import (
    decompose, decompose_a, decompose_b, decompose_c, peel_thresholds, threshold_peel, verify_decomposition,
)
from algorithms.embedding import d_of_genus
from algorithms.generators import (
    apollonian, complete, complete_bipartite, cycle, dary_tree, gen_hkd, gen_tessellation, path, star,
)
from models.decomposition import Decomposition
from models.graph import EdgeLabel, Graph
from utils.errors import GraphError, K2kPresent, NoReductionApplies, ResidualNonempty


def labels_of(decomposition):
    return set(decomposition.labels.values())


# ------------------------
# variant a
# ------------------------
def test_star_goes_to_l():
    d = decompose_a(star(5), 0)
    assert labels_of(d) == {EdgeLabel.L}
    assert verify_decomposition(star(5), d).passed


def test_cycle_goes_to_l():
    d = decompose_a(cycle(6), 0)
    assert labels_of(d) == {EdgeLabel.L}
    assert verify_decomposition(cycle(6), d).passed


def test_k12_is_stuck_on_the_sphere():
    with pytest.raises(NoReductionApplies) as excinfo:
        decompose_a(complete(12), 0)
    assert excinfo.value.details["remaining_edges"] == 66


def test_k12_decomposes_on_a_surface_with_large_threshold():
    # d(γ) >= 11 makes every vertex of K12 small
    d = decompose_a(complete(12), 2)
    assert verify_decomposition(complete(12), d).passed


@pytest.mark.parametrize("graph", [
    apollonian(3),
    gen_tessellation(4, 5, 2).graph,
    gen_hkd(2, 16, 1).graph,
])
def test_variant_a_contract_holds(graph):
    assert verify_decomposition(graph, decompose_a(graph, 0)).passed


@pytest.mark.parametrize("graph", [
    star(15),
    complete_bipartite(2, 12),
    apollonian(4),
    gen_tessellation(6, 4, 2).graph,
    gen_hkd(2, 12, 2).graph,
    gen_hkd(2, 16, 1).graph,
])
def test_variant_a_t_degree_stays_below_the_excess(graph):
    t = decompose_a(graph, 0).part(EdgeLabel.T)
    limit = max(2, graph.max_degree - d_of_genus(0) + 2)
    assert t.num_edges == 0 or t.max_degree <= limit


# ------------------------
# variant b
# ------------------------
def test_path_goes_to_t():
    d = decompose_b(path(4), 0)
    assert labels_of(d) == {EdgeLabel.T}
    assert verify_decomposition(path(4), d).passed


@pytest.mark.parametrize("graph", [complete_bipartite(2, 3), apollonian(3), gen_tessellation(6, 4, 2).graph])
def test_variant_b_contract_holds(graph):
    report = verify_decomposition(graph, decompose_b(graph, 0))
    assert report.passed, report.violations


# ------------------------
# variant c
# ------------------------
def test_large_star_sheds_leaves_until_the_center_is_small():
    d = decompose_c(star(15), 0, 2)
    assert d.sizes() == {"T": 5, "T1": 0, "L": 10}
    assert verify_decomposition(star(15), d).passed


def test_small_tree_goes_to_l():
    # every vertex is small, so the small-edge rule fires first
    tree = dary_tree(2, 3)
    d = decompose_c(tree, 0, 2)
    assert labels_of(d) == {EdgeLabel.L}
    assert verify_decomposition(tree, d).passed


def test_cycle_variant_c():
    d = decompose_c(cycle(8), 0, 2)
    assert labels_of(d) == {EdgeLabel.L}
    report = verify_decomposition(cycle(8), d)
    assert report.passed
    assert report.summary["sizes"]["T"] == 0


def test_variant_c_on_pentagon_patch():
    graph = gen_tessellation(4, 5, 3).graph
    report = verify_decomposition(graph, decompose_c(graph, 0, 2))
    assert report.passed
    assert report.summary["T1_degree_limit"] == 11


def test_variant_c_degree_two_rule_uses_t1():
    # hubs of degree 12 are not small; the degree-2 middles move one edge to T and one to T1
    graph = complete_bipartite(2, 12)
    with pytest.raises(K2kPresent):
        decompose_c(graph, 0, 2)
    d = decompose_c(graph, 0, 13)
    assert EdgeLabel.T1 in labels_of(d)
    assert verify_decomposition(graph, d).passed


def test_variant_c_rejects_k2k():
    with pytest.raises(K2kPresent) as excinfo:
        decompose_c(complete_bipartite(2, 3), 0, 3)
    assert excinfo.value.details["common"] == [2, 3, 4]


RUNS = [
    ("a", apollonian(4), None),
    ("a", gen_hkd(2, 12, 2).graph, None),
    ("b", gen_tessellation(6, 4, 2).graph, None),
    ("b", complete_bipartite(2, 12), None),
    ("c", gen_tessellation(4, 5, 2).graph, 2),
    ("c", star(15), 2),
]


@pytest.mark.parametrize("variant,graph,k", RUNS)
def test_decomposition_is_deterministic(variant, graph, k):
    first = decompose(graph, variant, 0, k)
    second = decompose(Graph.from_json(graph.to_json()), variant, 0, k)
    assert first.labels == second.labels


@pytest.mark.parametrize("variant,graph,k", RUNS)
def test_every_edge_gets_exactly_one_label(variant, graph, k):
    d = decompose(graph, variant, 0, k)
    sizes = d.sizes()
    assert sizes["T"] + sizes["T1"] + sizes["L"] == graph.num_edges
    assert set(d.labels) == set(graph.edges())


def test_decompose_dispatch():
    assert decompose(cycle(5), "b", 0).variant == "b"
    with pytest.raises(GraphError):
        decompose(cycle(5), "z", 0)


# ------------------------
# verify_decomposition
# ------------------------
def test_k4_in_t_is_not_two_degenerate():
    k4 = complete(4)
    d = Decomposition(k4, {e: EdgeLabel.T for e in k4.edges()}, 10, "a")
    report = verify_decomposition(k4, d)
    assert not report.passed
    assert "T_2_degenerate" in report.clauses()


def test_k3_33_cannot_meet_the_l_window():
    graph = complete_bipartite(3, 33)
    labels = {}
    used = {0: 0, 1: 0, 2: 0}
    for leaf in range(3, 36):
        hub = leaf % 3
        for h in range(3):
            if h == hub and used[h] < 10:
                labels[(h, leaf)] = EdgeLabel.L
                used[h] += 1
            else:
                labels[(h, leaf)] = EdgeLabel.T
    report = verify_decomposition(graph, Decomposition(graph, labels, 10, "a"))
    assert not report.passed
    assert "deg_L_window" in report.clauses()


def test_missing_labels_are_coverage_violations():
    graph = cycle(4)
    d = Decomposition(graph, {(0, 1): EdgeLabel.L}, 10, "a")
    assert "coverage" in verify_decomposition(graph, d).clauses()


def test_decomposition_json_round_trip():
    d = decompose_a(apollonian(2), 0)
    again = Decomposition.from_json(apollonian(2), d.to_json())
    assert again.labels == d.labels


# ------------------------
# threshold peeling
# ------------------------
def test_tree_peels_in_one_round():
    tree = dary_tree(3, 3)
    parts = threshold_peel(tree, 4, 1)
    assert len(parts) == 1
    assert parts[0].num_edges == tree.num_edges


def test_k10_single_round():
    parts = threshold_peel(complete(10), 9, 1)
    assert [p.num_edges for p in parts] == [45]


def test_k10_two_rounds():
    assert peel_thresholds(9, 0.5) == [9.0, 15.0]
    parts = threshold_peel(complete(10), 9, 0.5)
    assert [p.num_edges for p in parts] == [0, 45]


def test_peeling_leaves_residual():
    with pytest.raises(ResidualNonempty):
        threshold_peel(complete(20), 2, 1)


def test_peeling_parameter_checks():
    with pytest.raises(GraphError):
        threshold_peel(complete(4), 1, 0.5)
    with pytest.raises(GraphError):
        threshold_peel(complete(4), 4, 0)


def test_hub_picks_up_l_edges_once_it_becomes_small():
    graph = gen_hkd(2, 16, 1).graph
    d = decompose_a(graph, 0)
    # vertex 2 starts at degree 16; six children go to T before it is small
    assert d.label_degree(EdgeLabel.L, 2) == 8
    assert d.label_degree(EdgeLabel.T, 2) == 8
