import pytest

from eulermod4 import theorems
from eulermod4.constructions import book, cycle_graph, hypercube, smallest_eps01, triangle_of_squares
from eulermod4.graph import build_graph
from eulermod4.graphio import read_graph6_stream
from eulermod4.theorems import THEOREM_IDS, SuiteConfig, analyze_graph, check_graph, run_suite


def names(checks):
    return {name for name, _ok, _details in checks}


def test_checks_for_book():
    checks = check_graph(book(3, 5))
    assert all(ok for _n, ok, _d in checks)
    # p = 11 is above the default order limits for the exhaustive checks
    assert names(checks) == {"T5-blocks", "T2", "T3/10/14/23", "T4/11/18/25", "EDP2"}


def test_checks_for_small_two_type_graph():
    checks = check_graph(smallest_eps01())
    assert all(ok for _n, ok, _d in checks)
    assert {"T1", "TE", "TD", "TA", "O2", "T3/10/14/23", "T4/11/18/25", "EDP2", "T2"} <= names(checks)
    assert "planarity" not in names(checks)


def test_checks_for_hypercube():
    checks = check_graph(hypercube(4))
    assert names(checks) == {"E02-bipartite", "T27", "T28", "T5-blocks", "T2"}
    assert all(ok for _n, ok, _d in checks)


def test_checks_for_bipartite_census():
    checks = {n: ok for n, ok, _d in check_graph(cycle_graph(6))}
    assert checks["C1.1/O1"] and checks["T28"]


def test_suite_on_small_corpus(eulerian_corpus):
    tally = run_suite([g for g in eulerian_corpus if g.p <= 7])
    assert tally.records == 52 and tally.failures == 0
    rep = tally.as_dict()
    assert list(rep["theorems"]) == list(THEOREM_IDS)
    assert rep["theorems"]["T1"]["pass"] == 52
    assert rep["theorems"]["TE"]["pass"] == 52


def test_suite_skips_non_eulerian_and_counts_parse_errors():
    tally = run_suite(read_graph6_stream(["Bw", "C~", "B", "Dhc"]))
    assert tally.records == 2
    assert tally.skipped == [{"graph6": "C~", "note": "not Eulerian"}]
    assert len(tally.parse_errors) == 1
    assert tally.failures == 0


def test_suite_empty():
    tally = run_suite([])
    assert tally.records == 0 and tally.failures == 0


def test_suite_records_budget_overflow_as_skip():
    # a bipartite graph cannot stop its residue scan early
    tally = run_suite([hypercube(4)], SuiteConfig(cycle_cap=100))
    assert tally.records == 0
    assert tally.skipped[0]["note"].startswith("budget exceeded")


def test_suite_reports_failures(monkeypatch):
    """Negative control: a broken predicate must surface as a failure."""
    monkeypatch.setattr(theorems, "has_degree_two_node", lambda g: False)
    tally = run_suite([smallest_eps01(), book(3, 7)])
    assert tally.failed["T4/11/18/25"] == [smallest_eps01().to_graph6(), book(3, 7).to_graph6()]


def test_suite_in_parallel_matches_serial(eulerian_corpus):
    graphs = [g for g in eulerian_corpus if g.p <= 6]
    a = run_suite(graphs).as_dict()
    b = run_suite(graphs, SuiteConfig(jobs=2)).as_dict()
    assert a == b


def test_analyze_report():
    rep = analyze_graph(hypercube(4))
    assert rep["class"] == "e02" and rep["regular"] == 4
    assert rep["planar"] is False and rep["degree2"] is False
    assert rep["violations"] == []
    rep = analyze_graph(book(3, 5))
    assert rep["class"] == "e01" and rep["rosa_golomb"] == "nongraceful"
    assert rep["spectrum"] == [0, 1]
    rep = analyze_graph(build_graph(3, [(0, 1), (1, 2)]))
    assert rep["class"] == "not_euler" and rep["violations"] == []
    rep = analyze_graph(build_graph(4, [(0, 1), (2, 3)]))
    assert rep["connected"] is False and rep["class"] == "not_euler"


def test_analyze_triangle_of_squares():
    rep = analyze_graph(triangle_of_squares(), SuiteConfig(census_max_order=9))
    assert rep["bipartite"] is False and rep["class"] == "mixed"
    assert rep["checks"]["T1"] and rep["checks"]["TE"]
