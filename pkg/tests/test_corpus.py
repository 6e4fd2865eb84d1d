# tests/test_corpus.py
import math

import pytest

from algorithms.corpus import (
    DEFAULT_CORPUS, applicable_bounds, build_graph, smallest_orientation_k, summarize, verify_corpus, verify_entry,
)
from algorithms.generators import complete, complete_bipartite, cycle, gen_named
from utils.errors import GraphError
from utils.graph_io import ROW_FIELDS


def entry(graph_id):
    return next(e for e in DEFAULT_CORPUS if e["graph_id"] == graph_id)


def test_corpus_ids_are_unique():
    ids = [e["graph_id"] for e in DEFAULT_CORPUS]
    assert len(ids) == len(set(ids))


def test_build_graph_uses_patch_interior():
    graph = build_graph(entry("tess-4-5-3"))
    assert graph.degree(0) == 4
    assert graph.max_degree == 4
    assert min(graph.degrees().values()) < 4


@pytest.mark.parametrize("graph,k", [
    (cycle(6), 1),
    (complete(4), 2),
    (complete(5), 2),
    (complete_bipartite(3, 3), 2),
    (gen_named("apollonian", rounds=3), 3),
])
def test_smallest_orientation_k(graph, k):
    assert smallest_orientation_k(graph) == k


def test_planar_entry_gets_planar_bounds():
    e = entry("wheel-12")
    ids = [bound_id for bound_id, _ in applicable_bounds(build_graph(e), e)]
    assert ids[0] == "max_degree"
    assert {"hayes", "genus_a", "genus_k2k", "planar_1", "planar_2", "planar_headline", "three_forests"} <= set(ids)
    assert "tree" not in ids


def test_tree_entry_gets_tree_bound():
    e = entry("binary-tree-4")
    bounds = dict(applicable_bounds(build_graph(e), e))
    assert bounds["tree"] == pytest.approx(2 * math.sqrt(2))


def test_hkd_entry_gets_lower_limit():
    e = entry("hkd-3-9-2")
    bounds = dict(applicable_bounds(build_graph(e), e))
    assert bounds["lower_limit"] == pytest.approx(2 * math.sqrt(18))
    assert "genus_a" not in bounds


def test_tessellation_entry_gets_the_best_tessellation_bound():
    e = entry("tess-5-4-3")
    bounds = dict(applicable_bounds(build_graph(e), e))
    assert bounds["higuchi_shirai"] == pytest.approx(2 * math.sqrt(4.5))


def test_verify_entry_rows():
    rows = verify_entry(entry("k5"))
    assert rows
    for row in rows:
        assert set(row) == set(ROW_FIELDS)
        assert row["satisfied"]
        assert row["runtime_ms"] is None
    hayes = next(r for r in rows if r["bound_id"] == "hayes")
    # K5 is 4-regular with an orientation of indegree 2: Hayes is tight
    assert hayes["bound_value"] == pytest.approx(4.0)


def test_verify_entry_timings():
    rows = verify_entry(entry("cycle-8"), timings=True)
    assert all(r["runtime_ms"] >= 0 for r in rows)


def test_violated_bound_is_reported_not_raised():
    e = {"graph_id": "k30-claimed-planar", "family": "complete", "params": {"n": 30}, "genus": None, "planar": True}
    rows = verify_entry(e)
    failing = {r["bound_id"] for r in rows if not r["satisfied"]}
    # ρ(K30) = 29 exceeds the planar bounds at Δ = 29
    assert {"planar_1", "planar_2", "planar_headline"} <= failing
    assert "max_degree" not in failing


def test_entry_needs_id_and_family():
    with pytest.raises(GraphError):
        verify_entry({"family": "cycle", "params": {"n": 4}})


def test_small_corpus_all_satisfied():
    entries = [entry(i) for i in ("star-4", "k2-6", "cycle-8", "path-3", "grid-6x6", "hkd-2-8-2")]
    rows = verify_corpus(entries)
    summary = summarize(rows)
    assert summary["unsatisfied"] == 0
    assert summary["rows"] == len(rows) == summary["satisfied"]
