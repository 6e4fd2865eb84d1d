import math

import pytest

from algorithms.generators import complete, complete_bipartite, cycle


def payload(graph, **extra):
    return {"graph": graph.to_json(), **extra}


def test_home(client):
    res = client.get("/")
    assert res.status_code == 200
    assert "version" in res.get_json()


def test_rho_brackets_the_spectral_radius(client):
    res = client.post("/spectral/rho/", json=payload(complete_bipartite(2, 6), tol=1e-9))
    body = res.get_json()
    assert res.status_code == 200
    assert body["success"]
    data = body["data"]
    assert data["lower"] <= math.sqrt(12) + 1e-9
    assert data["upper"] >= math.sqrt(12) - 1e-9
    assert data["upper"] - data["lower"] <= 1e-9
    assert (data["n"], data["m"], data["delta"]) == (8, 12, 6)
    assert "witness" not in data


def test_rho_with_witness(client):
    res = client.post("/spectral/rho/", json=payload(cycle(5), witness=True))
    data = res.get_json()["data"]
    assert len(data["witness"]) == 5


def test_missing_graph_is_a_graph_error(client):
    res = client.post("/spectral/rho/", json={"edges": [[0, 1]]})
    body = res.get_json()
    assert res.status_code == 400
    assert not body["success"]
    assert body["data"]["code"] == "graph_error"


def test_self_loop_is_rejected(client):
    res = client.post("/spectral/rho/", json={"graph": {"n": 2, "edges": [[0, 0], [0, 1]]}})
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "graph_error"


def test_generate_hkd(client):
    res = client.post("/graphs/generate/", json={"family": "hkd", "params": {"k": 2, "d": 8, "i": 1}})
    data = res.get_json()["data"]
    assert res.status_code == 200
    assert [len(layer) for layer in data["layers"]] == [2, 6, 18]
    assert "rotation" in data
    assert data["version"]


def test_generate_named(client):
    res = client.post("/graphs/generate/", json={"family": "wheel", "params": {"n": 6}})
    data = res.get_json()["data"]
    assert data["n"] == 7
    assert len(data["edges"]) == 12
    assert data["params"] == {"family": "wheel", "n": 6}


def test_generate_needs_a_family(client):
    res = client.post("/graphs/generate/", json={})
    assert res.status_code == 400


def test_generate_unknown_family(client):
    res = client.post("/graphs/generate/", json={"family": "petersen"})
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "unknown_family"


def test_orient_reports_a_witness_when_too_dense(client):
    res = client.post("/graphs/orient/", json=payload(complete(4), k=1))
    data = res.get_json()["data"]
    assert res.status_code == 200
    assert data["exists"] is False
    assert data["witness"]


def test_orient_returns_arcs(client):
    res = client.post("/graphs/orient/", json=payload(complete(4), k=2))
    data = res.get_json()["data"]
    assert data["exists"]
    assert data["orientation"]["max_indegree"] <= 2
    assert len(data["orientation"]["arcs"]) == 6


def test_decompose_cycle(client):
    res = client.post("/decompose/", json=payload(cycle(6), variant="a", genus=0, bound=True))
    body = res.get_json()
    assert res.status_code == 200
    assert body["success"]
    assert body["data"]["report"]["passed"]
    assert len(body["data"]["decomposition"]["labels"]) == 6
    assert "bound" in body["data"]


def test_decompose_stuck_graph_is_a_400(client):
    res = client.post("/decompose/", json=payload(complete(12), variant="a", genus=0))
    body = res.get_json()
    assert res.status_code == 400
    assert body["data"]["code"] == "no_reduction_applies"
    assert body["data"]["details"]


def test_list_bounds(client):
    res = client.get("/bounds/")
    ids = {b["bound_id"] for b in res.get_json()["data"]}
    assert {"hayes", "planar_headline", "tessellation", "higuchi_shirai", "tree"} <= ids


def test_evaluate_bound(client):
    res = client.post("/bounds/evaluate", json={"bound_id": "hayes", "params": {"k": 3, "delta": 12}})
    data = res.get_json()["data"]
    assert data["value"] == pytest.approx(2 * math.sqrt(3 * 9))


def test_evaluate_bound_out_of_range(client):
    res = client.post("/bounds/evaluate", json={"bound_id": "planar_1", "params": {"delta": 3}})
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "bound_parameter_error"


def test_bound_table(client):
    res = client.get("/bounds/table?p=4..5&q=5")
    rows = res.get_json()["data"]
    assert [(r["p"], r["q"]) for r in rows] == [(4, 5), (5, 5)]
    assert rows[0]["tessellation"] == pytest.approx(2 * math.sqrt(3) + 1)


def test_tessellation_analyze(client):
    res = client.post("/tessellation/analyze", json={"p": 6, "q": 4, "r": 2})
    body = res.get_json()
    assert res.status_code == 200
    assert body["success"]
    assert body["data"]["params"] == {"p": 6, "q": 4, "r": 2}


def test_tessellation_analyze_needs_p_and_q(client):
    res = client.post("/tessellation/analyze", json={"p": 4})
    assert res.status_code == 400


def test_tessellation_analyze_rejects_spherical_pairs(client):
    res = client.post("/tessellation/analyze", json={"p": 4, "q": 3, "r": 2})
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "hyperbolicity_error"


SMALL_ENTRIES = [
    {"graph_id": "star-4", "family": "star", "params": {"n": 4}, "genus": 0, "planar": True},
    {"graph_id": "cycle-8", "family": "cycle", "params": {"n": 8}, "genus": 0, "planar": True},
    {"graph_id": "k5", "family": "complete", "params": {"n": 5}, "genus": 1, "planar": False},
]


@pytest.mark.parametrize("parallel", [False, True])
def test_verify_entries(client, parallel):
    res = client.post("/verify/", json={"entries": SMALL_ENTRIES, "parallel": parallel})
    body = res.get_json()
    assert res.status_code == 200
    assert body["success"]
    assert body["data"]["summary"]["unsatisfied"] == 0
    assert [r["graph_id"] for r in body["data"]["rows"]][0] == "star-4"
    assert {r["graph_id"] for r in body["data"]["rows"]} == {"star-4", "cycle-8", "k5"}


def test_verify_store_without_mongo_gives_no_run_id(client):
    res = client.post("/verify/", json={"entries": SMALL_ENTRIES[:1], "store": True})
    assert res.get_json()["data"]["run_id"] is None


def test_runs_need_mongo(client):
    assert client.get("/verify/runs").status_code == 503
    assert client.get("/verify/runs/abc").status_code == 503


@pytest.mark.parametrize("url,body", [
    ("/spectral/rho/", payload(cycle(5), tol="abc")),
    ("/spectral/rho/", payload(cycle(5), tol="nan")),
    ("/verify/", {"entries": SMALL_ENTRIES[:1], "tol": "abc"}),
    ("/decompose/", payload(cycle(6), variant="a", genus="sphere")),
    ("/decompose/", payload(cycle(6), variant="c", k=[2])),
    ("/graphs/orient/", payload(complete(4), k="two")),
    ("/tessellation/analyze", {"p": 4, "q": 5, "r": 1, "tol": "abc"}),
    ("/graphs/generate/", {"family": "hkd", "params": {"k": "x"}}),
    ("/graphs/generate/", {"family": "wheel", "params": {"n": "six"}}),
])
def test_non_numeric_fields_are_graph_errors(client, url, body):
    res = client.post(url, json=body)
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "graph_error"


def test_null_tolerance_falls_back_to_the_default(client):
    res = client.post("/spectral/rho/", json=payload(cycle(5), tol=None))
    assert res.status_code == 200
    assert res.get_json()["data"]["tolerance"] > 0


def test_bound_table_rejects_a_bad_range(client):
    res = client.get("/bounds/table?p=four")
    assert res.status_code == 400
    assert res.get_json()["data"]["code"] == "graph_error"


def test_rotation_with_understated_genus_is_rejected(client):
    k5 = complete(5)
    graph = k5.to_json()
    graph["rotation"] = {str(v): list(k5.neighbors(v)) for v in k5.vertices}
    res = client.post("/spectral/rho/", json={"graph": graph})
    body = res.get_json()
    assert res.status_code == 400
    assert body["data"]["code"] == "graph_error"
    assert body["data"]["details"]["declared"] == 0
    graph["genus"] = body["data"]["details"]["traced"]
    assert client.post("/spectral/rho/", json={"graph": graph}).status_code == 200
