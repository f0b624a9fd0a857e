"""Array kernels for the exhaustive searches.

All kernels take CSR adjacency (``indptr``, ``indices``, neighbors sorted)
and plain int64 arrays, so the same source runs compiled or interpreted.
"""

from __future__ import annotations

import numpy as np

from ._accel import jit

# cycle_dfs status codes
OK = 0
CAP_EXCEEDED = 1
MASK_COMPLETE = 2

# graceful search results
FOUND = 1
EXHAUSTED = 0
OUT_OF_BUDGET = -1


@jit
def cycle_dfs(indptr, indices, cap, store, stop_mask):
    """Enumerate simple cycles, each exactly once.

    A cycle is reported from its smallest node ``r``, walking only through
    nodes larger than ``r``, and only in the orientation whose second node
    is smaller than its last. Residues of cycle lengths mod 4 are OR-ed
    into a 4-bit mask; the walk stops early once ``mask == stop_mask``
    (pass 0 to never stop) or once more than ``cap`` cycles were seen.

    Returns ``(flat, offsets, count, mask, status)``; with ``store`` false
    ``flat`` and ``offsets`` stay empty.
    """
    p = indptr.shape[0] - 1
    on_path = np.zeros(p, np.bool_)
    path = np.zeros(max(p, 1), np.int64)
    ptr = np.zeros(max(p, 1), np.int64)
    flat = np.empty(256 if store else 0, np.int64)
    offsets = np.zeros(65 if store else 1, np.int64)
    used = 0
    count = 0
    mask = 0
    status = OK
    for r in range(p):
        depth = 0
        path[0] = r
        on_path[r] = True
        ptr[0] = indptr[r]
        while depth >= 0:
            v = path[depth]
            if ptr[depth] < indptr[v + 1]:
                w = indices[ptr[depth]]
                ptr[depth] += 1
                if w == r:
                    if depth >= 2 and path[1] < path[depth]:
                        length = depth + 1
                        count += 1
                        mask |= 1 << (length % 4)
                        if count > cap:
                            status = CAP_EXCEEDED
                            break
                        if store:
                            if used + length > flat.shape[0]:
                                grown = np.empty(max(2 * flat.shape[0], used + length), np.int64)
                                grown[:used] = flat[:used]
                                flat = grown
                            if count >= offsets.shape[0]:
                                grown_off = np.zeros(2 * offsets.shape[0], np.int64)
                                grown_off[:count] = offsets[:count]
                                offsets = grown_off
                            flat[used:used + length] = path[:length]
                            used += length
                            offsets[count] = used
                        if mask == stop_mask:
                            status = MASK_COMPLETE
                            break
                elif w > r and not on_path[w]:
                    depth += 1
                    path[depth] = w
                    on_path[w] = True
                    ptr[depth] = indptr[w]
            else:
                on_path[v] = False
                depth -= 1
        if status != OK:
            break
    n_off = count + 1 if store else 1
    if status == CAP_EXCEEDED:
        n_off = 1
        used = 0
    return flat[:used], offsets[:n_off], count, mask, status


@jit
def _extend(d, q, indptr, indices, eid, label, node_at, used, counter, budget):
    """Place edge label ``d`` on some edge; recurse on ``d - 1``."""
    if d == 0:
        return FOUND
    counter[0] += 1
    if counter[0] > budget:
        return OUT_OF_BUDGET
    p = label.shape[0]
    for x in range(q - d + 1):
        y = x + d
        a = node_at[x]
        b = node_at[y]
        if a >= 0 and b >= 0:
            e = eid[a, b]
            if e >= 0 and not used[e]:
                used[e] = True
                res = _extend(d - 1, q, indptr, indices, eid, label, node_at, used, counter, budget)
                if res != EXHAUSTED:
                    return res
                used[e] = False
        elif a >= 0 or b >= 0:
            # one end labeled: attach the missing label to a fresh neighbor
            fixed = a if a >= 0 else b
            want = y if a >= 0 else x
            for k in range(indptr[fixed], indptr[fixed + 1]):
                w = indices[k]
                if label[w] < 0:
                    e = eid[fixed, w]
                    label[w] = want
                    node_at[want] = w
                    used[e] = True
                    res = _extend(d - 1, q, indptr, indices, eid, label, node_at, used, counter, budget)
                    if res != EXHAUSTED:
                        return res
                    used[e] = False
                    node_at[want] = -1
                    label[w] = -1
        else:
            # both labels free: any edge with two unlabeled ends, either way round;
            # for the first edge (label q) only the orientation u < v gets 0
            for u in range(p):
                if label[u] >= 0:
                    continue
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if label[w] >= 0 or (d == q and w < u):
                        continue
                    e = eid[u, w]
                    label[u] = x
                    label[w] = y
                    node_at[x] = u
                    node_at[y] = w
                    used[e] = True
                    res = _extend(d - 1, q, indptr, indices, eid, label, node_at, used, counter, budget)
                    if res != EXHAUSTED:
                        return res
                    used[e] = False
                    node_at[x] = -1
                    node_at[y] = -1
                    label[u] = -1
                    label[w] = -1
    return EXHAUSTED


@jit
def graceful_search(indptr, indices, eid, q, budget):
    """Depth-first search for a graceful labeling, largest edge label first.

    Returns ``(result, labels, expansions)`` where ``result`` is FOUND,
    EXHAUSTED or OUT_OF_BUDGET and ``labels[v]`` is the label of node v
    (meaningful only when FOUND).
    """
    p = indptr.shape[0] - 1
    label = np.full(p, -1, np.int64)
    node_at = np.full(q + 1, -1, np.int64)
    used = np.zeros(q, np.bool_)
    counter = np.zeros(1, np.int64)
    res = _extend(q, q, indptr, indices, eid, label, node_at, used, counter, budget)
    return res, label, counter[0]
