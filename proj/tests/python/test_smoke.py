"""Smoke tests for the python bindings (run with PYTHONPATH at the built module)."""

import _cpmatch as m

TRIANGLE = "3 3\n0 1 2\n1 2 1\n2 0 1"


def test_parse_and_roundtrip():
    g = m.parse_graph(TRIANGLE)
    assert g.vertex_count == 3
    assert g.edge_count == 3
    assert m.parse_graph(m.format_graph(g)).edge_count == 3


def test_graph_constructor():
    g = m.WeightedGraph(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1)])
    assert g.edges() == [(0, 1, 2), (1, 2, 1), (2, 0, 1)]


def test_generate_instance_deterministic():
    a = m.generate_instance(10, 0.5, 100, 42)
    b = m.generate_instance(10, 0.5, 100, 42)
    assert m.format_graph(a) == m.format_graph(b)


def test_find_odd_cycle():
    g = m.parse_graph(TRIANGLE)
    cycle = m.find_odd_cycle(g)
    assert sorted(cycle) == [0, 1, 2]
    bipartite = m.parse_graph("4 4\n0 1 1\n1 2 1\n2 3 1\n3 0 1")
    assert m.find_odd_cycle(bipartite) is None


def test_transform():
    g = m.parse_graph(TRIANGLE)
    model = m.transform_graph(g, [[0, 1, 2]])
    assert model["vertex_count"] == 4
    weights = sorted(w for (_, _, w) in model["edges"])
    assert weights == [0, 2, 2]


def test_run_bp_and_projection():
    g = m.parse_graph(TRIANGLE)
    out = m.run_bp(g, [[0, 1, 2]], iterations=100)
    assert out["converged"]
    assert out["in_domain"]
    assert out["x"] == ["1", "0", "0"]


def test_bp_baseline_all_half():
    # The bare triangle settles on the uninformative all-half decode; attaching
    # its cycle instead keeps the messages oscillating for the whole budget.
    g = m.parse_graph(TRIANGLE)
    out = m.run_bp_baseline(g, [], iterations=1000)
    assert out["x"] == ["1/2", "1/2", "1/2"]
    cyc = m.run_bp_baseline(g, [[0, 1, 2]], iterations=1000)
    assert not cyc["converged"]


def test_lp_and_tightness():
    g = m.parse_graph(TRIANGLE)
    sol = m.solve_clp(g, [[0, 1, 2]])
    assert sol["objective"] == "2"
    assert sol["is_integral"]
    tu = m.check_tight_unique(g, [])
    assert not tu["tight"]


def test_cutting_plane_and_classification():
    g = m.parse_graph(TRIANGLE)
    out = m.cp_bp(g, iterations=1000)
    assert out["status"] == "MATCHING"
    assert out["weight"] == 2
    assert len(out["cycles"]) == 1
    lp = m.cp_lp(g)
    assert lp["status"] == "MATCHING" and lp["weight"] == 2
    assert m.classify_instance(g) == "SOLVED_WITH_CUTS"


def test_oracle_and_validation():
    g = m.parse_graph(TRIANGLE)
    r = m.brute_force_mwm(g)
    assert r["weight"] == 2 and r["unique"] and r["edge_ids"] == [0]
    ok, weight, _ = m.validate_matching(g, [0])
    assert ok and weight == 2
