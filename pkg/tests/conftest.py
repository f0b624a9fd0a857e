from __future__ import annotations

from pathlib import Path

import networkx as nx
import pytest

from eulermod4.graph import Graph, build_graph
from eulermod4.graphio import read_graph6_stream

DATA = Path(__file__).parent / "data"


def load(name: str) -> list[Graph]:
    with open(DATA / name, encoding="ascii") as fh:
        return [r.graph for r in read_graph6_stream(fh)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    return h


def bowtie() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture(scope="session")
def eulerian_corpus() -> list[Graph]:
    """All connected Eulerian graphs with 1 to 10 nodes, one per isomorphism class."""
    return load("eulerian_connected_p1-10.g6")


@pytest.fixture(scope="session")
def connected_p7() -> list[Graph]:
    """All connected graphs with 1 to 7 nodes."""
    return load("connected_p1-7.g6")


@pytest.fixture(scope="session")
def connected_q9() -> list[Graph]:
    """All connected graphs with 1 to 9 edges."""
    return load("connected_q1-9.g6")


# -- acceptance summary -----------------------------------------------------------

_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for name, args in getattr(report, "criterion", []) or []:
        num, title = args
        entry = _criteria.setdefault(num, {"title": title, "ok": True, "tests": 0})
        entry["tests"] += 1
        entry["ok"] &= report.outcome == "passed"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = [("criterion", m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {e['title']} ({e['tests']} checks)")
