"""The compiled kernels against their interpreted source, and the env switch."""

import json
import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings

from eulermod4 import _kernels
from eulermod4._accel import NUMBA_ENABLED
from eulermod4.constructions import book, cycle_graph, hypercube

from test_graph import graphs


@settings(max_examples=60, deadline=None)
@given(graphs(max_p=8))
def test_cycle_dfs_compiled_matches_python(g):
    indptr, indices = g.csr
    for store, stop in [(True, 0), (False, 0b1111), (False, 0)]:
        a = _kernels.cycle_dfs(indptr, indices, 10**6, store, stop)
        b = _kernels.cycle_dfs.py_func(indptr, indices, 10**6, store, stop)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        assert a[2:] == b[2:]


def test_cycle_dfs_cap_status():
    g = hypercube(4)
    indptr, indices = g.csr
    for fn in (_kernels.cycle_dfs, _kernels.cycle_dfs.py_func):
        flat, offsets, count, _mask, status = fn(indptr, indices, 10, True, 0)
        assert status == _kernels.CAP_EXCEEDED and count == 11
        assert len(flat) == 0


def test_cycle_dfs_storage_layout():
    g = book(2, 4)
    indptr, indices = g.csr
    flat, offsets, count, mask, status = _kernels.cycle_dfs(indptr, indices, 100, True, 0)
    assert status == _kernels.OK and count == 3
    lengths = np.diff(offsets)
    assert sorted(lengths) == [4, 4, 6]
    assert mask == 0b0101


def _search(g, budget, fn):
    indptr, indices = g.csr
    return fn(indptr, indices, g.edge_id_matrix, g.q, budget)


def test_graceful_compiled_matches_python():
    for g in [cycle_graph(4), cycle_graph(5), cycle_graph(7), hypercube(3)]:
        a = _search(g, 10**6, _kernels.graceful_search)
        b = _search(g, 10**6, _kernels.graceful_search.py_func)
        assert a[0] == b[0] and a[2] == b[2]
        assert np.array_equal(a[1], b[1])


def test_graceful_budget_status():
    res, _labels, explored = _search(book(3, 5), 50, _kernels.graceful_search)
    assert res == _kernels.OUT_OF_BUDGET and explored == 51


SCRIPT = """
import json
from eulermod4._accel import NUMBA_ENABLED
from eulermod4.classification import cycle_spectrum
from eulermod4.constructions import book, cycle_graph
from eulermod4.graceful import search_graceful
out = search_graceful(cycle_graph(8))
print(json.dumps([NUMBA_ENABLED, sorted(cycle_spectrum(book(3, 5))), out.verdict,
                  list(out.labeling.phi), out.nodes_explored]))
"""


def _run(flag):
    env = dict(os.environ, EULERMOD4_NUMBA=flag)
    res = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_env_switch_gives_identical_results():
    pure = _run("0")
    fast = _run("1")
    assert pure[0] is False
    assert fast[0] is NUMBA_ENABLED
    assert pure[1:] == fast[1:]
