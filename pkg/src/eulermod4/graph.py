"""Immutable simple undirected graphs and their elementary predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, LoopEdge, NodeOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on nodes ``0..p-1``.

    ``edges`` is sorted and every pair is stored as ``(u, v)`` with ``u < v``.
    Use :func:`build_graph` rather than the constructor.
    """

    p: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def order(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) with each neighbor list sorted ascending."""
        indptr = np.zeros(self.p + 1, dtype=np.int64)
        np.cumsum([len(a) for a in self.adjacency], out=indptr[1:])
        indices = np.fromiter(
            (w for a in self.adjacency for w in a), dtype=np.int64, count=2 * self.q
        )
        return indptr, indices

    @cached_property
    def edge_id_matrix(self) -> np.ndarray:
        m = np.full((self.p, self.p), -1, dtype=np.int64)
        for i, (u, v) in enumerate(self.edges):
            m[u, v] = i
            m[v, u] = i
        return m

    @cached_property
    def connected(self) -> bool:
        return is_connected(self)

    def to_graph6(self) -> str:
        from .graphio import encode_graph6

        return encode_graph6(self)

    def __str__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def build_graph(p: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` and return the canonical :class:`Graph`."""
    if p < 1:
        raise NodeOutOfRange(f"order must be at least 1, got {p}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < p and 0 <= v < p):
            raise NodeOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {p})")
        if u == v:
            raise LoopEdge(f"loop at node {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(p)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(p, edges, tuple(tuple(sorted(a)) for a in adj))


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.p)
    seen[0] = 1
    todo = [0]
    count = 1
    while todo:
        v = todo.pop()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                todo.append(w)
    return count == g.p


def is_eulerian(g: Graph) -> bool:
    """Connected with every degree even."""
    return g.connected and all(d % 2 == 0 for d in g.degrees)


def regular_degree(g: Graph) -> int | None:
    degs = set(g.degrees)
    return degs.pop() if len(degs) == 1 else None


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring of ``g`` (0/1 per node), or None if an odd cycle exists."""
    color = [-1] * g.p
    for s in range(g.p):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with node ``order[i]`` renamed to ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.p, [(pos[u], pos[v]) for u, v in g.edges])
