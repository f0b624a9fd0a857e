"""Acceptance criteria 1-9, each at its stated scale and tolerance.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
ends with one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
from itertools import combinations

import pytest

from eulermod4.classification import (
    class_counts,
    conjecture_predicate,
    cycle_spectrum,
    epsilon_class,
    rosa_golomb_status,
    verify_size_identity,
)
from eulermod4.constructions import (
    book,
    cycle_graph,
    hypercube,
    parallel_paths,
    path_addition,
    smallest_eps01,
    triangle_of_squares,
)
from eulermod4.cycles import (
    count_edge_disjoint_paths,
    decomposition_census,
    edge_cycle_parities,
    enumerate_decompositions,
    peel_decomposition,
)
from eulermod4.errors import EulerMod4Error
from eulermod4.graceful import BUDGET_EXCEEDED, EXHAUSTED, FOUND, Labeling, search_graceful, survey, verify_graceful
from eulermod4.graph import build_graph, is_bipartite, is_eulerian, regular_degree
from eulermod4.graphio import encode_graph6, parse_graph6
from eulermod4.structure import blocks, has_degree_two_node, intersection_parity_report, is_planar

from conftest import load
from oracles import naive_graceful
from test_graphio import HAND_DECODED
from test_graph import graphs

from hypothesis import given, settings


def criterion(n, title):
    return pytest.mark.criterion(n, title)


@pytest.fixture(scope="session")
def corpus_p8(eulerian_corpus):
    return [g for g in eulerian_corpus if g.p <= 8]


@pytest.fixture(scope="session")
def classified(eulerian_corpus):
    """(graph, class) for every two-type graph in the p <= 10 corpus."""
    out = []
    for g in eulerian_corpus:
        cls = epsilon_class(g)
        if cls.is_two_type:
            out.append((g, cls))
    return out


# -- 1 ---------------------------------------------------------------------------------------

C1 = criterion(1, "size identity over all decompositions, p <= 8")


@C1
def test_size_identity_all_decompositions(corpus_p8):
    assert len(corpus_p8) == 236
    total = 0
    for g in corpus_p8:
        census = decomposition_census(g)
        total += census.total
        for xi, n in census.by_xi.items():
            assert n > 0
            assert (xi[1] + 2 * xi[2] + 3 * xi[3]) % 4 == g.q % 4, (g.to_graph6(), xi)
    print(f"\n  {len(corpus_p8)} graphs, {total} decompositions, 0 violations")


@C1
def test_size_identity_on_materialized_decompositions(corpus_p8):
    """Where the list fits under the cap, check every decomposition one by one."""
    checked = 0
    for g in corpus_p8:
        census = decomposition_census(g)
        if census.total > 20000:
            continue
        decs = enumerate_decompositions(g)
        assert len(decs) == census.total
        for d in decs:
            assert d.is_valid_for(g)
            assert verify_size_identity(g.q, class_counts(d))
        checked += 1
    assert checked >= 200


# -- 2 ---------------------------------------------------------------------------------------

C2 = criterion(2, "odd decomposition count, edge-cycle parity and EDP parity, p <= 8")


@C2
def test_decomposition_count_is_odd(corpus_p8):
    for g in corpus_p8:
        assert decomposition_census(g).total % 2 == 1, g.to_graph6()


@C2
def test_edge_cycle_parity(corpus_p8, connected_p7):
    for g in corpus_p8:
        assert all(edge_cycle_parities(g).values()), g.to_graph6()
    # the converse: connected non-Eulerian graphs have an edge on evenly many cycles
    for g in connected_p7:
        if g.q and not is_eulerian(g):
            assert not all(edge_cycle_parities(g).values()), g.to_graph6()


@C2
def test_edge_disjoint_path_parity(corpus_p8):
    for g in corpus_p8:
        for u, v in combinations(range(g.p), 2):
            assert count_edge_disjoint_paths(g, u, v) % 2 == 0, (g.to_graph6(), u, v)


# -- 3 ---------------------------------------------------------------------------------------

C3 = criterion(3, "classification fixtures")


@C3
def test_smallest_eps01_fixture():
    g = smallest_eps01()
    assert (g.p, g.q) == (7, 9)
    assert epsilon_class(g).tag == "e01"
    assert rosa_golomb_status(g).verdict == "nongraceful"


@C3
def test_book_fixtures():
    assert cycle_spectrum(book(3, 5)) == {0, 1}
    assert cycle_spectrum(book(3, 7)) == {0, 3}


@C3
def test_triangle_of_squares_fixture():
    g = triangle_of_squares()
    assert not is_bipartite(g)
    lengths = {tuple(d.lengths()) for d in enumerate_decompositions(g)}
    assert (4, 4, 4) in lengths and (3, 9) in lengths


@C3
def test_hypercube_fixture():
    g = hypercube(4)
    assert epsilon_class(g).tag == "e02"
    assert regular_degree(g) == 4
    assert not is_planar(g)


# -- 4 ---------------------------------------------------------------------------------------

C4 = criterion(4, "degree-2 node and no regular graphs outside e02, p <= 10")


@C4
def test_degree_two_node(classified):
    seen = 0
    for g, cls in classified:
        if cls.pair != (0, 2):
            assert has_degree_two_node(g), g.to_graph6()
            assert regular_degree(g) is None or regular_degree(g) == 2
            seen += 1
    assert seen == 94


@C4
def test_regular_graphs_with_two_types_are_bipartite(eulerian_corpus):
    regular = [g for g in eulerian_corpus if (regular_degree(g) or 0) >= 4]
    assert regular
    for g in regular:
        spec = cycle_spectrum(g)
        if len(spec) <= 2:
            assert spec == {0, 2} and is_bipartite(g), g.to_graph6()


# -- 5 ---------------------------------------------------------------------------------------

C5 = criterion(5, "intersection parity rules and e13 blocks, p <= 10")


@C5
def test_intersection_parity(classified):
    for g, cls in classified:
        if cls.pair != (0, 2):
            assert intersection_parity_report(g, cls) == [], g.to_graph6()


@C5
def test_e13_blocks_are_cycles(classified):
    e13 = [g for g, cls in classified if cls.pair == (1, 3)]
    assert len(e13) == 5
    for g in e13:
        prof = blocks(g)
        assert all(prof.block_is_cycle(k) for k in range(len(prof.blocks)))


# -- 6 ---------------------------------------------------------------------------------------

C6 = criterion(6, "e12, e13, e23 graphs planar; hypercube(4) nonplanar")


@C6
def test_planarity(classified):
    checked = 0
    for g, cls in classified:
        if cls.pair in ((1, 2), (1, 3), (2, 3)):
            assert is_planar(g), g.to_graph6()
            checked += 1
    assert checked == 13
    assert not is_planar(hypercube(4))


# -- 7 ---------------------------------------------------------------------------------------

C7 = criterion(7, "graceful search soundness")


@C7
def test_search_agrees_with_brute_force(connected_q9):
    assert len(connected_q9) == 1068
    for g in connected_q9:
        out = search_graceful(g)
        naive = naive_graceful(g)
        assert out.verdict in (FOUND, EXHAUSTED)
        assert (out.verdict == FOUND) == (naive is not None), g.to_graph6()
        if out.verdict == FOUND:
            assert verify_graceful(g, out.labeling)


@C7
def test_rosa_golomb_graphs_yield_no_labeling(eulerian_corpus):
    graphs_ = [g for g in eulerian_corpus if 0 < g.q <= 16 and g.q % 4 in (1, 2)]
    graphs_ += [cycle_graph(n) for n in range(5, 17) if n % 4 in (1, 2)]
    graphs_ += [book(3, 5), smallest_eps01()]
    for g in graphs_:
        assert search_graceful(g).verdict == EXHAUSTED, g.to_graph6()
    print(f"\n  {len(graphs_)} Rosa-Golomb graphs searched exhaustively, none graceful")


@C7
def test_small_cycles_have_verified_labelings():
    for n in (3, 4):
        out = search_graceful(cycle_graph(n))
        assert out.verdict == FOUND
        assert verify_graceful(cycle_graph(n), out.labeling)
    assert verify_graceful(cycle_graph(4), Labeling((0, 4, 1, 2)))


# -- 8 ---------------------------------------------------------------------------------------

C8 = criterion(8, "conjecture harness on applicable graphs, q <= 18")


def _applicable(g):
    cls = epsilon_class(g)
    return cls.is_two_type and conjecture_predicate(cls, class_counts(peel_decomposition(g)))


def construction_sweep():
    out = []
    for k in (3, 5):
        for length in range(3, 10):
            out.append(lambda k=k, length=length: book(k, length))
    for n1 in range(2, 6):
        for n2 in range(2, 6):
            for m in range(1, 4):
                out.append(lambda n1=n1, n2=n2, m=m: parallel_paths(n1, n2, m))
    for n in range(3, 13):
        for v in range(1, n // 2 + 1):
            for count in (2, 4):
                for length in range(1, 8):
                    out.append(lambda n=n, v=v, count=count, length=length:
                               path_addition(cycle_graph(n), 0, v, count, length))
    graphs_ = []
    for make in out:
        try:
            graphs_.append(make())
        except EulerMod4Error:
            continue
    return graphs_


@pytest.fixture(scope="session")
def conjecture_pool(eulerian_corpus):
    pool = {}
    for g in list(eulerian_corpus) + construction_sweep():
        if g.q <= 18 and _applicable(g):
            pool.setdefault(g.to_graph6(), g)
    return list(pool.values())


@C8
def test_conjecture_survey(conjecture_pool):
    assert len(conjecture_pool) == 76
    first = [json.dumps(r) for r in survey(conjecture_pool)]
    second = [json.dumps(r) for r in survey(conjecture_pool)]
    assert first == second
    recs = [json.loads(x) for x in first]
    agg = recs[-1]
    assert agg["records"] == len(conjecture_pool) == agg["conjecture_applicable"]
    for rec in recs[:-1]:
        assert rec["outcome"] != BUDGET_EXCEEDED
        assert rec["outcome"] == FOUND or rec["graph6"] in agg["counterexample_candidates"]
    assert agg["budget_exceeded"] == []
    print(f"\n  {agg['records']} applicable graphs, outcomes {agg['by_outcome']}, "
          f"counterexample candidates {agg['counterexample_candidates']}")


# -- 9 ---------------------------------------------------------------------------------------

C9 = criterion(9, "graph6 round trip and hand-decoded fixtures")


@C9
def test_round_trip_all_small_graphs(eulerian_corpus, connected_p7):
    every = load("all_p1-8.g6")
    assert len(every) == 13598
    for g in every + eulerian_corpus + connected_p7:
        assert parse_graph6(encode_graph6(g)) == g


@C9
def test_round_trip_every_bit_position():
    for p in range(1, 11):
        pairs = list(combinations(range(p), 2))
        full = build_graph(p, pairs)
        assert parse_graph6(encode_graph6(full)) == full
        for e in pairs:
            one = build_graph(p, [e])
            rest = build_graph(p, [f for f in pairs if f != e])
            assert parse_graph6(encode_graph6(one)) == one
            assert parse_graph6(encode_graph6(rest)) == rest


@C9
def test_round_trip_all_labeled_graphs_p5():
    pairs = list(combinations(range(5), 2))
    for bits in range(1 << len(pairs)):
        g = build_graph(5, [e for k, e in enumerate(pairs) if bits >> k & 1])
        assert parse_graph6(encode_graph6(g)) == g


@C9
@settings(max_examples=300, deadline=None)
@given(graphs(max_p=10))
def test_round_trip_random_p10(g):
    assert parse_graph6(encode_graph6(g)) == g


@C9
def test_hand_decoded_fixtures():
    assert len(HAND_DECODED) >= 5
    for text, (p, edges) in HAND_DECODED.items():
        assert parse_graph6(text) == build_graph(p, edges)
        assert encode_graph6(build_graph(p, edges)) == text


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
