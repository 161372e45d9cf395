# Smoke coverage of the Python bindings: construction, the main
# pipeline, and the dict-returning wrappers. Deep behaviour lives in the
# C++ test suite; this only proves the module is importable and wired to
# the same implementations.

import math

import pytest

import sizeramsey as sr


def test_params_expose_the_derived_thresholds():
    params = sr.RamseyParams.make(16, 2)
    assert params.n == 16
    assert params.r == 2
    assert params.host_vertices == 224
    assert params.phase_count == 14
    assert not params.out_of_regime
    assert params.edge_probability == pytest.approx(22.0 * math.log(2.0) / 16.0)
    assert params.edge_lower < params.edge_upper


def test_params_reject_probabilities_above_one():
    with pytest.raises(sr.OutOfRegimeError):
        sr.RamseyParams.make(10, 2)  # 22 ln(2) / 10 > 1


def test_graph_construction_and_validation():
    g = sr.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.vertex_count == 4
    assert g.edge_count == 3
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(sr.InvalidArgumentError):
        sr.Graph(3, [(0, 0)])


def test_sampler_is_deterministic_per_seed():
    a = sr.sample_gnp(50, 0.3, 7)
    b = sr.sample_gnp(50, 0.3, 7)
    c = sr.sample_gnp(50, 0.3, 8)
    assert a.edges() == b.edges()
    assert a.edges() != c.edges()


def test_build_host_returns_a_report_dict():
    params = sr.RamseyParams.make(16, 2)
    graph, report = sr.build_host(params, 5)
    assert graph.vertex_count == 224
    assert report["satisfies_ii"] is True
    assert report["out_of_regime"] is False
    assert report["expansion"]["method"] == "skipped"
    assert params.edge_lower < report["edge_count"] < params.edge_upper


def test_pipeline_finds_a_monochromatic_path():
    params = sr.RamseyParams.make(16, 2)
    graph, _ = sr.build_host(params, 5)
    colouring = sr.adversary_colour(graph, 16, 2, "uniform-random", 99)
    cert = sr.find_monochromatic_path(graph, colouring, 16)
    assert cert["outcome"] == "path_found"
    assert len(cert["path"]) == 16
    assert cert["witness"] is None


def test_trial_harness_reports_a_perfect_rate():
    params = sr.RamseyParams.make(16, 2)
    result = sr.run_ramsey_trials(params, "uniform-random", 3, 12)
    assert result["summary"]["trials"] == 3
    assert result["summary"]["path_found_rate"] == "1"
    assert len(result["rows"]) == 3
    assert all(row["outcome"] == "path_found" for row in result["rows"])


def test_min_size_ramsey_threshold_for_short_paths():
    result = sr.min_size_ramsey(3, 2, 5)
    assert result["m"] == 3
    assert result["witness"]["vertex_count"] == 3
    assert len(result["witness"]["edges"]) == 3


def test_arrows_decide_on_the_triangle():
    verdict = sr.arrows_decide(sr.Graph.complete(3), 3, 2)
    assert verdict["arrows"] is True
    assert verdict["counterexample"] is None
    assert verdict["examined"] == 4


def test_longest_path_on_a_spine():
    g = sr.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    length, witness = sr.longest_path(g)
    assert length == 5
    assert witness == [0, 1, 2, 3, 4]
    with pytest.raises(sr.CapExceededError):
        sr.longest_path(sr.Graph.complete(20))


def test_bound_helpers_agree_with_the_closed_forms():
    assert sr.union_bound_coefficient(2) == pytest.approx(
        2.0 * math.log(14.0 * math.e) - 10.9 * math.log(2.0)
    )
    table = sr.bound_table([2])
    assert table["rows"][0]["r"] == 2
    params = sr.RamseyParams.make(200, 2)
    expected = (200.0**2 + 19900.0) * params.edge_probability
    assert sr.expected_pair_edges(params) == pytest.approx(expected)


def test_expansion_checkers_return_dicts():
    g = sr.Graph.complete(4)
    exact = sr.check_expansion_exact(g, 1, 0.5)
    assert exact["result"] == "witness"
    assert exact["witness"]["edge_count"] >= 1
    monte = sr.check_expansion_monte_carlo(sr.Graph(6, []), 2, 1.0, 10, 3)
    assert monte["result"] == "no-witness-found"
    assert monte["trials"] == 10
