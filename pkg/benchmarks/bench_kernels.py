"""Compiled vs pure-Python timings for the two hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each mode runs in its own interpreter, with ``EULERMOD4_NUMBA=1`` and
``EULERMOD4_NUMBA=0``, so the pure side never calls into a compiled helper.
Compilation is excluded by a warm-up call.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
from itertools import combinations

from eulermod4 import _kernels
from eulermod4._accel import NUMBA_ENABLED
from eulermod4.constructions import book, cycle_graph, hypercube, parallel_paths, triangle_of_squares
from eulermod4.graph import build_graph

ALL_RESIDUES = 0b1111


def cycle_case(g):
    indptr, indices = g.csr
    return lambda k: k(indptr, indices, 10**7, False, ALL_RESIDUES)


def graceful_case(g):
    indptr, indices = g.csr
    return lambda k: k(indptr, indices, g.edge_id_matrix, g.q, 10**8)


CASES = [
    ("cycle_dfs", "hypercube(4)", _kernels.cycle_dfs, cycle_case(hypercube(4))),
    ("cycle_dfs", "K_{4,4}", _kernels.cycle_dfs,
     cycle_case(build_graph(8, [(a, b) for a in range(4) for b in range(4, 8)]))),
    ("cycle_dfs", "parallel_paths(3,3,2)", _kernels.cycle_dfs, cycle_case(parallel_paths(3, 3, 2))),
    ("graceful_search", "K5", _kernels.graceful_search, graceful_case(build_graph(5, list(combinations(range(5), 2))))),
    ("graceful_search", "triangle_of_squares", _kernels.graceful_search, graceful_case(triangle_of_squares())),
    ("graceful_search", "C9 (exhausted)", _kernels.graceful_search, graceful_case(cycle_graph(9))),
    ("graceful_search", "book(3,5) (exhausted)", _kernels.graceful_search, graceful_case(book(3, 5))),
]


def best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def run_mode(repeat: int) -> dict:
    out = {}
    for kernel, name, k, run in CASES:
        run(k)
        out[f"{kernel}|{name}"] = best(lambda: run(k), repeat)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description="benchmark numba kernels against the pure-Python fallback")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps({"numba": NUMBA_ENABLED, "times": run_mode(args.repeat)}))
        return
    res = {}
    for flag in ("1", "0"):
        env = dict(os.environ, EULERMOD4_NUMBA=flag)
        proc = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                              env=env, check=True, capture_output=True, text=True)
        res[flag] = json.loads(proc.stdout)
    print(f"numba available: {res['1']['numba']}")
    print(f"{'kernel':<16} {'case':<24} {'numba s':>9} {'python s':>9} {'speedup':>8}")
    for key, fast in res["1"]["times"].items():
        slow = res["0"]["times"][key]
        kernel, name = key.split("|")
        print(f"{kernel:<16} {name:<24} {fast:>9.4f} {slow:>9.3f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
