"""Command-line entry point: ``eulermod4 <subcommand> [options]``.

Every subcommand reads graph6 records (or an edge list, or construction
specs) and writes one JSON object per line, or CSV with ``--format csv``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, TextIO

from .classification import classify
from .constructions import build_construction
from .cycles import (
    DEFAULT_CYCLE_CAP,
    DEFAULT_DECOMP_CAP,
    decomposition_census,
    enumerate_decompositions,
    euler_circuit,
    peel_decomposition,
)
from .errors import EulerMod4Error
from .graceful import DEFAULT_BUDGET, SurveyOptions, eulerforest_items, search_graceful, survey
from .graph import Graph, is_eulerian
from .graphio import Record, read_edge_list, read_graph6_stream
from .theorems import SuiteConfig, analyze_graph, run_suite

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_COUNTEREXAMPLE = 3

# Stable CSV columns per subcommand; nested values are written as compact JSON.
CSV_COLUMNS = {
    "analyze": ["graph6", "p", "q", "connected", "eulerian", "regular", "bipartite", "degree2", "planar",
                "spectrum", "class", "xi", "q_mod4", "rosa_golomb", "conjecture", "blocks", "violations", "error"],
    "decompose": ["graph6", "p", "q", "eulerian", "circuit", "peel", "decompositions", "count", "by_xi", "error"],
    "classify": ["graph6", "p", "q", "class", "xi", "q_mod4", "rosa_golomb", "conjecture", "error"],
    "construct": ["spec", "graph6", "p", "q", "class", "xi", "q_mod4", "rosa_golomb", "conjecture"],
    "graceful": ["graph6", "p", "q", "outcome", "labeling", "nodes_explored", "error"],
    "theorems": ["theorem", "pass", "fail", "failures"],
    "conjectures": ["graph6", "p", "q", "base", "host", "tree", "class", "scope", "xi", "rosa_golomb", "conjecture",
                    "conjecture_applies", "outcome", "labeling", "nodes_explored", "millis",
                    "counterexample_candidate", "anomaly", "error"],
}


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph6 file, or - for standard input")
    common.add_argument("--edge-list", action="store_true", help="read one graph as an edge list instead of graph6")
    common.add_argument("--construct", "-c", action="append", default=[], metavar="SPEC",
                        help="use a construction (e.g. 'book k=3 len=5') as input; repeatable")
    common.add_argument("--output", "-o", default="-", help="output file, or - for standard output")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cycle-cap", type=_positive, default=DEFAULT_CYCLE_CAP)
    common.add_argument("--decomp-cap", type=_positive, default=DEFAULT_DECOMP_CAP)
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="graceful search expansions")
    common.add_argument("--jobs", "-j", type=_positive, default=1)
    common.add_argument("--search-nongraceful", action="store_true",
                        help="search Rosa-Golomb graphs instead of filtering them")
    common.add_argument("--timing", action="store_true", help="record wall-clock millis (breaks reproducibility)")

    parser = argparse.ArgumentParser(prog="eulermod4", description="Mod-4 cycle analysis of Euler graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="full per-graph report with theorem checks")
    p = sub.add_parser("decompose", parents=[common], help="Euler circuit and cycle decompositions")
    p.add_argument("--all", action="store_true", help="list every decomposition (bounded by --decomp-cap)")
    p.add_argument("--count", action="store_true", help="count decompositions per xi vector")
    sub.add_parser("classify", parents=[common], help="epsilon class and Rosa-Golomb verdict")
    p = sub.add_parser("construct", parents=[common], help="build a graph from a construction spec")
    p.add_argument("spec", nargs="*", help="construction spec words, e.g. book k=3 len=5")
    sub.add_parser("graceful", parents=[common], help="exhaustive graceful labeling search")
    p = sub.add_parser("theorems", parents=[common], help="theorem suite over a corpus")
    p.add_argument("--census-max-order", type=int, default=8)
    p.add_argument("--edp-max-order", type=int, default=8)
    p.add_argument("--edge-parity-max-order", type=int, default=8)
    p = sub.add_parser("conjectures", parents=[common], help="gracefulness conjecture survey")
    p.add_argument("--eulerforest", type=int, default=0, metavar="N",
                   help="also plant every rooted tree with up to N new nodes on conjecture-applicable inputs")
    p.add_argument("--max-q", type=int, default=None, help="skip input graphs with more edges")
    return parser


# -- input / output ---------------------------------------------------------------

def _open_in(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, encoding="ascii")


def read_source(args) -> list[Record]:
    """All input graphs as Records; construction specs take precedence."""
    if args.construct:
        out = []
        for k, text in enumerate(args.construct, 1):
            try:
                out.append(Record(k, text, build_construction(text), None))
            except EulerMod4Error as exc:
                out.append(Record(k, text, None, str(exc)))
        return out
    fh = _open_in(args.input)
    try:
        if args.edge_list:
            g, _mapping = read_edge_list(fh)
            return [Record(1, "", g, None)]
        return list(read_graph6_stream(fh))
    finally:
        if fh is not sys.stdin:
            fh.close()


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list, tuple, bool)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


class Writer:
    def __init__(self, stream: TextIO, fmt: str, columns: list[str]):
        self.stream = stream
        self.fmt = fmt
        self.columns = columns
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(columns)

    def write(self, rec: dict) -> None:
        if self._csv is not None:
            if rec.get("aggregate"):
                return
            self._csv.writerow([_cell(rec.get(c)) for c in self.columns])
        else:
            self.stream.write(json.dumps(rec) + "\n")
        self.stream.flush()


def _error_record(rec: Record) -> dict:
    return {"line": rec.index, "text": rec.text, "error": rec.error}


def _report_error(msg: str) -> None:
    print(f"eulermod4: {msg}", file=sys.stderr)


def _map(fn: Callable, items: list, jobs: int) -> Iterable:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return map(fn, items)


def _guarded(fn: Callable[[Graph], dict], g: Graph) -> dict:
    try:
        return fn(g)
    except EulerMod4Error as exc:
        return {"graph6": g.to_graph6(), "p": g.p, "q": g.q, "error": f"{type(exc).__name__}: {exc}"}


# -- per-graph reports --------------------------------------------------------------

def _classify_report(g: Graph, cap: int) -> dict:
    return {"graph6": g.to_graph6(), "p": g.p, "q": g.q, **classify(g, cap)}


def _graceful_report(g: Graph, budget: int) -> dict:
    rec = {"graph6": g.to_graph6(), "p": g.p, "q": g.q}
    out = search_graceful(g, budget)
    rec.update(outcome=out.verdict, labeling=list(out.labeling.phi) if out.labeling else None,
               nodes_explored=out.nodes_explored)
    return rec


def _decompose_report(g: Graph, cycle_cap: int, decomp_cap: int, list_all: bool, count: bool) -> dict:
    rec: dict = {"graph6": g.to_graph6(), "p": g.p, "q": g.q, "eulerian": is_eulerian(g)}
    if not rec["eulerian"]:
        return rec
    rec["circuit"] = euler_circuit(g)
    rec["peel"] = [list(c.nodes) for c in peel_decomposition(g)]
    if list_all:
        decs = enumerate_decompositions(g, decomp_cap, cycle_cap)
        rec["decompositions"] = [[list(c.nodes) for c in d] for d in decs]
        rec["count"] = len(decs)
    if count:
        census = decomposition_census(g, cycle_cap)
        rec["count"] = census.total
        rec["by_xi"] = {",".join(map(str, xi)): n for xi, n in sorted(census.by_xi.items())}
    return rec


# -- subcommands ----------------------------------------------------------------------

def _per_graph(args, out: Writer, fn: Callable[[Graph], dict]) -> tuple[int, list[dict]]:
    records = read_source(args)
    code = EXIT_OK
    graphs = [r.graph for r in records if r.graph is not None]
    results = iter(_map(partial(_guarded, fn), graphs, args.jobs))
    produced = []
    for r in records:
        if r.graph is None:
            _report_error(f"record {r.index}: {r.error}")
            out.write(_error_record(r))
            code = EXIT_ERROR
            continue
        rec = next(results)
        if "error" in rec:
            _report_error(f"{rec['graph6']}: {rec['error']}")
            code = EXIT_ERROR
        out.write(rec)
        produced.append(rec)
    return code, produced


def cmd_analyze(args, out: Writer) -> int:
    cfg = SuiteConfig(cycle_cap=args.cycle_cap)
    code, recs = _per_graph(args, out, partial(analyze_graph, cfg=cfg))
    if any(rec.get("violations") for rec in recs):
        return EXIT_VIOLATION
    return code


def cmd_classify(args, out: Writer) -> int:
    return _per_graph(args, out, partial(_classify_report, cap=args.cycle_cap))[0]


def cmd_graceful(args, out: Writer) -> int:
    return _per_graph(args, out, partial(_graceful_report, budget=args.budget))[0]


def cmd_decompose(args, out: Writer) -> int:
    fn = partial(_decompose_report, cycle_cap=args.cycle_cap, decomp_cap=args.decomp_cap,
                 list_all=args.all, count=args.count)
    return _per_graph(args, out, fn)[0]


def cmd_construct(args, out: Writer) -> int:
    specs = list(args.construct)
    if args.spec:
        specs.append(" ".join(args.spec))
    if not specs:
        _report_error("construct needs a spec, e.g. 'book k=3 len=5'")
        return EXIT_ERROR
    code = EXIT_OK
    for text in specs:
        try:
            g = build_construction(text)
            out.write({"spec": text, **_classify_report(g, args.cycle_cap)})
        except EulerMod4Error as exc:
            _report_error(f"{text!r}: {exc}")
            code = EXIT_ERROR
    return code


def cmd_theorems(args, out: Writer) -> int:
    cfg = SuiteConfig(
        cycle_cap=args.cycle_cap,
        census_max_order=args.census_max_order,
        edp_max_order=args.edp_max_order,
        edge_parity_max_order=args.edge_parity_max_order,
        jobs=args.jobs,
    )
    tally = run_suite(read_source(args), cfg)
    for err in tally.parse_errors:
        _report_error(f"record {err['line']}: {err['error']}")
    report = tally.as_dict()
    if out.fmt == "csv":
        for name, row in report["theorems"].items():
            out.write({"theorem": name, **row})
    else:
        out.write(report)
    if tally.failures:
        return EXIT_VIOLATION
    return EXIT_ERROR if tally.parse_errors else EXIT_OK


def cmd_conjectures(args, out: Writer) -> int:
    options = SurveyOptions(budget=args.budget, cycle_cap=args.cycle_cap,
                            search_nongraceful=args.search_nongraceful, timing=args.timing, jobs=args.jobs)
    records = read_source(args)
    if args.max_q is not None:
        records = [r for r in records if r.graph is None or r.graph.q <= args.max_q]
    source: list = list(records)
    if args.eulerforest:
        graphs = [r.graph for r in records if r.graph is not None and r.graph.connected]
        source.extend(eulerforest_items(graphs, args.eulerforest, args.cycle_cap))
    code = EXIT_OK
    for rec in survey(source, options):
        if "error" in rec:
            _report_error(f"record {rec['line']}: {rec['error']}")
            code = EXIT_ERROR
        out.write(rec)
        if rec.get("aggregate") and rec["counterexample_candidates"]:
            code = EXIT_COUNTEREXAMPLE
    return code


COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "graceful": cmd_graceful,
    "theorems": cmd_theorems,
    "conjectures": cmd_conjectures,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        stream = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8", newline="")
    except OSError as exc:
        _report_error(str(exc))
        return EXIT_ERROR
    try:
        return COMMANDS[args.command](args, Writer(stream, args.format, CSV_COLUMNS[args.command]))
    except OSError as exc:
        _report_error(str(exc))
        return EXIT_ERROR
    except EulerMod4Error as exc:
        _report_error(f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR
    finally:
        if stream is not sys.stdout:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
