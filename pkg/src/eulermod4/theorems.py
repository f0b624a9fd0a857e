"""Mechanical checks of the structural theorems over graph corpora.

Every check returns ``(theorem_id, ok, details)``; checks that do not apply
to a graph are simply not emitted. Expensive checks are limited by order
through :class:`SuiteConfig`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .classification import (
    ClassCounts,
    class_counts,
    conjecture_predicate,
    cycle_spectrum,
    epsilon_class,
    rosa_golomb_status,
    verify_size_identity,
)
from .cycles import (
    DEFAULT_CYCLE_CAP,
    count_edge_disjoint_paths,
    decomposition_census,
    edge_cycle_counts,
    peel_decomposition,
)
from .errors import BudgetExceeded
from .graph import Graph, is_bipartite, is_eulerian, regular_degree
from .graphio import Record
from .structure import (
    biconnected_two_type_witness,
    blocks,
    has_degree_two_node,
    intersection_parity_report,
    is_cycle_graph,
    is_planar,
    pair_with_two_edp,
    subgraph,
)

THEOREM_IDS = (
    "T1", "C1.1/O1", "O2", "TE", "TD", "TA",
    "E02-bipartite", "T5-blocks", "T2", "T3/10/14/23", "T20", "C20.1",
    "T4/11/18/25", "EDP2", "planarity", "T27", "T28",
)


@dataclass(frozen=True)
class SuiteConfig:
    cycle_cap: int = DEFAULT_CYCLE_CAP
    census_max_order: int = 8
    edp_max_order: int = 8
    edge_parity_max_order: int = 8
    jobs: int = 1


Check = tuple[str, bool, dict]


def census_checks(g: Graph, cfg: SuiteConfig) -> list[Check]:
    """Checks over every cycle decomposition (T1, C1.1, O1, O2, TE)."""
    census = decomposition_census(g, cfg.cycle_cap)
    out: list[Check] = []
    bad = [list(xi) for xi in census.by_xi if not verify_size_identity(g.q, ClassCounts(tuple(xi), (0, 0, 0, 0)))]
    out.append(("T1", not bad, {"decompositions": census.total, "bad_xi": bad}))
    out.append(("TE", census.total % 2 == 1, {"decompositions": census.total}))
    if is_bipartite(g):
        odd = [list(xi) for xi in census.by_xi if xi[1] or xi[3] or (2 * xi[2] - g.q) % 4]
        out.append(("C1.1/O1", not odd, {"bad_xi": odd}))
    elif g.q:
        has_odd = any(xi[1] or xi[3] for xi in census.by_xi)
        out.append(("O2", has_odd, {}))
    return out


def edge_parity_check(g: Graph, cfg: SuiteConfig) -> Check:
    """Connected g is Eulerian iff every edge lies on an odd number of cycles."""
    counts = edge_cycle_counts(g, cfg.cycle_cap)
    all_odd = all(c % 2 for c in counts.values())
    even = [list(e) for e, c in counts.items() if c % 2 == 0]
    return "TD", all_odd == is_eulerian(g), {"even_edges": even}


def edp_parity_check(g: Graph) -> Check:
    odd = []
    for u, v in combinations(range(g.p), 2):
        k = count_edge_disjoint_paths(g, u, v)
        if k % 2:
            odd.append([u, v, k])
    return "TA", not odd, {"odd_pairs": odd}


def structural_checks(g: Graph, cfg: SuiteConfig) -> list[Check]:
    """Class-dependent checks; ``g`` must be connected and Eulerian."""
    out: list[Check] = []
    spec = cycle_spectrum(g, cfg.cycle_cap)
    cls = epsilon_class(g, cfg.cycle_cap)
    bip = is_bipartite(g)
    if bip or cls.tag == "e02":
        out.append(("E02-bipartite", bip and spec <= {0, 2}, {"spectrum": sorted(spec), "bipartite": bip}))

    k = regular_degree(g)
    if k is not None and len(spec) <= 2:
        if k >= 4:
            out.append(("T27", spec == {0, 2} and bip, {"degree": k, "spectrum": sorted(spec)}))
        out.append(("T28", bip or (is_cycle_graph(g) and g.p % 2 == 1), {"degree": k, "spectrum": sorted(spec)}))

    if not cls.is_two_type:
        return out
    i, j = cls.pair
    prof = blocks(g, cfg.cycle_cap)
    stray = [sorted(s) for s in prof.spectra if not s <= {i, j}]
    if (i, j) == (1, 3):
        shape_ok = prof.beta_pair.get((1, 3), 0) == 0 and prof.beta_single.get(1, 0) > 0 and prof.beta_single.get(3, 0) > 0
    else:
        shape_ok = prof.beta_pair.get((i, j), 0) > 0 or (prof.beta_single.get(i, 0) > 0 and prof.beta_single.get(j, 0) > 0)
    out.append(("T5-blocks", shape_ok and not stray and prof.beta_other == 0, {"blocks": prof.as_dict()}))

    missing = []
    for edges, s in zip(prof.blocks, prof.spectra):
        if len(s) == 2:
            h, _ = subgraph(g, list(edges))
            if biconnected_two_type_witness(h, epsilon_class(h, cfg.cycle_cap), cfg.cycle_cap) is None:
                missing.append([list(e) for e in edges])
    out.append(("T2", not missing, {"blocks_without_witness": missing}))

    if (i, j) != (0, 2):
        viol = intersection_parity_report(g, cls, cfg.cycle_cap)
        out.append(("T20" if (i, j) == (1, 3) else "T3/10/14/23", not viol, {"violations": [v["details"] for v in viol]}))
        out.append(("T4/11/18/25", has_degree_two_node(g), {"degrees": sorted(set(g.degrees))}))
        out.append(("EDP2", pair_with_two_edp(g) is not None, {}))
    if (i, j) == (1, 3):
        noncycle = [k for k in range(len(prof.blocks)) if not prof.block_is_cycle(k)]
        out.append(("C20.1", not noncycle, {"non_cycle_blocks": noncycle}))
    if (i, j) in ((1, 2), (1, 3), (2, 3)):
        out.append(("planarity", is_planar(g), {"class": cls.tag}))
    return out


def check_graph(g: Graph, cfg: SuiteConfig = SuiteConfig()) -> list[Check]:
    """All applicable checks for one connected Eulerian graph."""
    out: list[Check] = []
    if g.p <= cfg.census_max_order:
        out.extend(census_checks(g, cfg))
    if g.p <= cfg.edge_parity_max_order:
        out.append(edge_parity_check(g, cfg))
    if g.p <= cfg.edp_max_order:
        out.append(edp_parity_check(g))
    out.extend(structural_checks(g, cfg))
    return out


@dataclass
class TheoremTally:
    passed: dict[str, int] = field(default_factory=lambda: {t: 0 for t in THEOREM_IDS})
    failed: dict[str, list[str]] = field(default_factory=lambda: {t: [] for t in THEOREM_IDS})
    records: int = 0
    skipped: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)

    def add(self, g6: str, checks: list[Check]) -> None:
        self.records += 1
        for name, ok, _details in checks:
            if ok:
                self.passed[name] += 1
            else:
                self.failed[name].append(g6)

    @property
    def failures(self) -> int:
        return sum(len(v) for v in self.failed.values())

    def as_dict(self) -> dict:
        return {
            "records": self.records,
            "theorems": {
                t: {"pass": self.passed[t], "fail": len(self.failed[t]), "failures": self.failed[t]}
                for t in THEOREM_IDS
            },
            "skipped": self.skipped,
            "parse_errors": self.parse_errors,
        }


def _job(args: tuple[Graph, SuiteConfig]) -> list[Check] | str:
    g, cfg = args
    try:
        return check_graph(g, cfg)
    except BudgetExceeded as exc:
        return f"budget exceeded: {exc}"


def run_suite(source: Iterable[Record | Graph], cfg: SuiteConfig = SuiteConfig()) -> TheoremTally:
    """Run :func:`check_graph` over a corpus; non-Eulerian records are skipped."""
    tally = TheoremTally()
    work: list[tuple[str, Graph]] = []
    for item in source:
        if isinstance(item, Record):
            if item.graph is None:
                tally.parse_errors.append({"line": item.index, "text": item.text, "error": item.error})
                continue
            g = item.graph
        else:
            g = item
        g6 = g.to_graph6()
        if not is_eulerian(g):
            tally.skipped.append({"graph6": g6, "note": "not Eulerian"})
            continue
        work.append((g6, g))
    args = [(g, cfg) for _, g in work]
    if cfg.jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_job, args, chunksize=max(1, len(args) // (8 * cfg.jobs))))
    else:
        results = map(_job, args)
    for (g6, _), res in zip(work, results):
        if isinstance(res, str):
            tally.skipped.append({"graph6": g6, "note": res})
        else:
            tally.add(g6, res)
    return tally


def iter_violations(g: Graph, checks: list[Check]) -> Iterator[dict]:
    for name, ok, details in checks:
        if not ok:
            yield {"theorem": name, "graph": g.to_graph6(), "details": details}


def analyze_graph(g: Graph, cfg: SuiteConfig = SuiteConfig()) -> dict:
    """Full per-graph report: predicates, class, blocks and any theorem violations."""
    rep: dict = {"graph6": g.to_graph6(), "p": g.p, "q": g.q, "connected": g.connected}
    euler = is_eulerian(g)
    rep.update(
        eulerian=euler,
        regular=regular_degree(g),
        bipartite=is_bipartite(g),
        degree2=has_degree_two_node(g),
        planar=is_planar(g),
    )
    if not g.connected:
        rep.update({"class": "not_euler", "violations": []})
        return rep
    spec = cycle_spectrum(g, cfg.cycle_cap)
    cls = epsilon_class(g, cfg.cycle_cap)
    rep["spectrum"] = sorted(spec)
    rep["class"] = cls.tag
    rep["blocks"] = blocks(g, cfg.cycle_cap).as_dict()
    if not euler:
        rep["violations"] = []
        return rep
    counts = class_counts(peel_decomposition(g))
    rep["xi"] = list(counts.xi)
    rep["q_mod4"] = g.q % 4
    rep["rosa_golomb"] = rosa_golomb_status(g).verdict
    rep["conjecture"] = cls.is_two_type and conjecture_predicate(cls, counts)
    checks = check_graph(g, cfg)
    rep["checks"] = {name: ok for name, ok, _ in checks}
    rep["violations"] = list(iter_violations(g, checks))
    return rep
