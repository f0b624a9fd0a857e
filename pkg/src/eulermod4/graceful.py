"""Graceful labelings: verification, exhaustive search and the conjecture survey."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _kernels
from .classification import (
    CONJECTURE_NUMBER,
    class_counts,
    conjecture_predicate,
    epsilon_class,
    rosa_golomb_status,
)
from .constructions import single_tree_plantings
from .cycles import DEFAULT_CYCLE_CAP, peel_decomposition
from .errors import Disconnected, PartialLabeling, PreconditionError
from .graph import Graph
from .graphio import Record

DEFAULT_BUDGET = 10**8

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class Labeling:
    """Node labels ``phi[v]``."""

    phi: tuple[int, ...]

    @property
    def node_labels(self) -> frozenset[int]:
        return frozenset(self.phi)

    def edge_labels(self, g: Graph) -> list[int]:
        return sorted(abs(self.phi[u] - self.phi[v]) for u, v in g.edges)

    def complement(self, q: int) -> "Labeling":
        return Labeling(tuple(q - x for x in self.phi))


def verify_graceful(g: Graph, labeling: Labeling) -> bool:
    """Distinct labels in [0, q] whose edge differences are exactly 1..q."""
    phi = labeling.phi
    if len(phi) != g.p:
        raise PartialLabeling(f"{len(phi)} labels for {g.p} nodes")
    if len(set(phi)) != g.p or min(phi) < 0 or max(phi) > g.q:
        return False
    return labeling.edge_labels(g) == list(range(1, g.q + 1))


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str
    labeling: Labeling | None
    nodes_explored: int


def search_graceful(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Backtracking over edge labels q, q-1, ..., 1.

    Each label d goes on an edge whose ends get labels {x, x + d}. The node
    labeled 0 always has a smaller index than the node labeled q, which
    discards only complements. ``exhausted`` proves no graceful labeling exists.
    """
    if not g.connected:
        raise Disconnected(f"{g} is disconnected")
    if g.q < 1:
        raise PreconditionError("graceful search needs at least one edge")
    indptr, indices = g.csr
    res, labels, explored = _kernels.graceful_search(indptr, indices, g.edge_id_matrix, g.q, budget)
    explored = int(explored)
    if res == _kernels.FOUND:
        lab = Labeling(tuple(int(x) for x in labels))
        if not verify_graceful(g, lab):  # pragma: no cover - kernel invariant
            raise AssertionError(f"search returned a non-graceful labeling for {g.to_graph6()}")
        return SearchOutcome(FOUND, lab, explored)
    if res == _kernels.EXHAUSTED:
        return SearchOutcome(EXHAUSTED, None, explored)
    return SearchOutcome(BUDGET_EXCEEDED, None, explored)


# -- survey ---------------------------------------------------------------------

@dataclass(frozen=True)
class SurveyOptions:
    budget: int = DEFAULT_BUDGET
    cycle_cap: int = DEFAULT_CYCLE_CAP
    search_nongraceful: bool = False
    timing: bool = False
    jobs: int = 1


_SCOPE = {"two": "part2", "single": "single_type", "mixed": "mixed", "trivial": "trivial", "not_euler": "not_euler"}


def survey_graph(g: Graph, options: SurveyOptions = SurveyOptions(), extra: dict | None = None) -> dict:
    """One survey record: classification, filter verdict and search outcome."""
    rec: dict = {"graph6": g.to_graph6(), "p": g.p, "q": g.q}
    if extra:
        rec.update(extra)
    cls = epsilon_class(g, options.cycle_cap)
    rec["class"] = cls.tag
    rec["scope"] = _SCOPE[cls.kind]
    xi = None
    rg = None
    applies = False
    conjecture = None
    if cls.kind != "not_euler":
        counts = class_counts(peel_decomposition(g))
        xi = list(counts.xi)
        rg = rosa_golomb_status(g)
        if cls.is_two_type:
            conjecture = CONJECTURE_NUMBER[cls.pair]
            applies = conjecture_predicate(cls, counts)
    elif extra and "base" in extra:
        # Eulerforest of a conjecture-applicable graph
        conjecture = 7
        applies = True
    rec["xi"] = xi
    rec["rosa_golomb"] = rg.verdict if rg else None
    rec["conjecture"] = conjecture
    rec["conjecture_applies"] = applies

    start = time.perf_counter()
    if not g.connected or g.q == 0:
        outcome = SearchOutcome("skipped", None, 0)
    elif rg is not None and rg.nongraceful and not options.search_nongraceful:
        outcome = SearchOutcome("filtered", None, 0)
    else:
        outcome = search_graceful(g, options.budget)
    elapsed = time.perf_counter() - start

    rec["outcome"] = outcome.verdict
    rec["labeling"] = list(outcome.labeling.phi) if outcome.labeling else None
    rec["nodes_explored"] = outcome.nodes_explored
    rec["millis"] = round(elapsed * 1000, 3) if options.timing else None
    rec["counterexample_candidate"] = applies and outcome.verdict == EXHAUSTED
    if rg is not None and rg.nongraceful and outcome.verdict == FOUND:
        rec["anomaly"] = "labeling found for a Rosa-Golomb graph"
    return rec


@dataclass
class SurveyTally:
    records: int = 0
    parse_errors: int = 0
    by_class: dict[str, int] = field(default_factory=dict)
    by_outcome: dict[str, int] = field(default_factory=dict)
    conjecture_applicable: int = 0
    conjecture_found: int = 0
    counterexample_candidates: list[str] = field(default_factory=list)
    budget_exceeded: list[str] = field(default_factory=list)
    anomalies: list[str] = field(default_factory=list)

    def add(self, rec: dict) -> None:
        if "error" in rec:
            self.parse_errors += 1
            return
        self.records += 1
        self.by_class[rec["class"]] = self.by_class.get(rec["class"], 0) + 1
        self.by_outcome[rec["outcome"]] = self.by_outcome.get(rec["outcome"], 0) + 1
        if rec["conjecture_applies"]:
            self.conjecture_applicable += 1
            self.conjecture_found += rec["outcome"] == FOUND
        if rec["counterexample_candidate"]:
            self.counterexample_candidates.append(rec["graph6"])
        if rec["outcome"] == BUDGET_EXCEEDED:
            self.budget_exceeded.append(rec["graph6"])
        if "anomaly" in rec:
            self.anomalies.append(rec["graph6"])

    def as_dict(self) -> dict:
        return {
            "aggregate": True,
            "records": self.records,
            "parse_errors": self.parse_errors,
            "by_class": dict(sorted(self.by_class.items())),
            "by_outcome": dict(sorted(self.by_outcome.items())),
            "conjecture_applicable": self.conjecture_applicable,
            "conjecture_found": self.conjecture_found,
            "counterexample_candidates": self.counterexample_candidates,
            "budget_exceeded": self.budget_exceeded,
            "anomalies": self.anomalies,
        }


SurveyItem = tuple[Graph, dict]


def _survey_item(args: tuple[SurveyItem, SurveyOptions]) -> dict:
    (g, extra), options = args
    return survey_graph(g, options, extra)


def _items(source: Iterable[Record | Graph | SurveyItem]) -> Iterator[SurveyItem | dict]:
    for item in source:
        if isinstance(item, Graph):
            yield item, {}
        elif isinstance(item, Record):
            if item.graph is None:
                yield {"error": item.error, "line": item.index, "text": item.text}
            else:
                yield item.graph, {}
        else:
            yield item


def survey(source: Iterable[Record | Graph | SurveyItem], options: SurveyOptions = SurveyOptions()) -> Iterator[dict]:
    """Survey records in input order, followed by one aggregate record.

    Unparseable records come through as ``{"error": ...}`` entries and are
    counted, not surveyed.
    """
    tally = SurveyTally()
    items = list(_items(source))
    work = [(it, options) for it in items if not isinstance(it, dict)]
    if options.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            results = iter(list(pool.map(_survey_item, work, chunksize=max(1, len(work) // (4 * options.jobs)))))
    else:
        results = map(_survey_item, work)
    for it in items:
        rec = it if isinstance(it, dict) else next(results)
        tally.add(rec)
        yield rec
    yield tally.as_dict()


def eulerforest_items(graphs: Iterable[Graph], max_planted: int = 4, cycle_cap: int = DEFAULT_CYCLE_CAP) -> Iterator[SurveyItem]:
    """Plantings of single trees (up to ``max_planted`` new nodes) on every
    conjecture-applicable graph, tagged with their base graph."""
    for g in graphs:
        cls = epsilon_class(g, cycle_cap)
        if not cls.is_two_type or not conjecture_predicate(cls, class_counts(peel_decomposition(g))):
            continue
        base = g.to_graph6()
        for t, h in single_tree_plantings(g, max_planted):
            yield h, {"base": base, "host": t.host, "tree": list(t.parent)}
