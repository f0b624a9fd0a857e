"""Euler circuits, cycle decompositions, simple-cycle enumeration and
edge-disjoint path counts."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from . import _kernels
from .errors import (
    CycleBudgetExceeded,
    DecompositionBudgetExceeded,
    NotEulerian,
    SameNode,
)
from .graph import Edge, Graph, is_eulerian

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_DECOMP_CAP = 10**5


def canonical_rotation(nodes: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest node, then orient toward its smaller neighbor."""
    n = len(nodes)
    i = min(range(n), key=nodes.__getitem__)
    fwd = tuple(nodes[(i + k) % n] for k in range(n))
    if fwd[1] > fwd[-1]:
        return (fwd[0],) + fwd[:0:-1]
    return fwd


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle in canonical rotation. Order is by length, then nodes."""

    length: int
    nodes: tuple[int, ...]

    @classmethod
    def from_nodes(cls, nodes: Sequence[int]) -> "Cycle":
        if len(nodes) < 3 or len(set(nodes)) != len(nodes):
            raise ValueError(f"not a simple cycle: {tuple(nodes)}")
        canon = canonical_rotation(tuple(int(v) for v in nodes))
        return cls(len(canon), canon)

    @property
    def residue(self) -> int:
        return self.length % 4

    @cached_property
    def edges(self) -> frozenset[Edge]:
        n = self.length
        return frozenset(
            (min(self.nodes[k], self.nodes[(k + 1) % n]), max(self.nodes[k], self.nodes[(k + 1) % n]))
            for k in range(n)
        )

    def edge_mask(self, g: Graph) -> int:
        m = 0
        for e in self.edges:
            m |= 1 << g.edge_index[e]
        return m

    def __str__(self) -> str:
        return "C" + str(self.length) + "(" + "-".join(map(str, self.nodes)) + ")"


@dataclass(frozen=True)
class CycleSet:
    """Every simple cycle of a graph, sorted by (length, nodes)."""

    cycles: tuple[Cycle, ...]

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def __getitem__(self, i: int) -> Cycle:
        return self.cycles[i]

    def lengths(self) -> list[int]:
        return [c.length for c in self.cycles]


@dataclass(frozen=True)
class CycleDecomposition:
    """Edge-disjoint cycles covering a graph; held as a sorted tuple so that
    equal partitions compare equal."""

    cycles: tuple[Cycle, ...]

    @classmethod
    def of(cls, cycles) -> "CycleDecomposition":
        return cls(tuple(sorted(cycles)))

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def lengths(self) -> list[int]:
        return [c.length for c in self.cycles]

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[Edge] = set()
        for c in self.cycles:
            if not c.edges <= g.edge_index.keys() or seen & c.edges:
                return False
            seen |= c.edges
        return len(seen) == g.q


# -- Euler circuits and the greedy peel ---------------------------------------

def _require_eulerian(g: Graph) -> None:
    if not is_eulerian(g):
        raise NotEulerian(f"{g} is not Eulerian")


def euler_circuit(g: Graph) -> list[int]:
    """Hierholzer's algorithm, always leaving by the smallest unused neighbor.

    The walk starts at the smallest node of positive degree and has q + 1
    entries (first == last). K1 yields ``[0]``.
    """
    _require_eulerian(g)
    if g.q == 0:
        return [0]
    nxt = [0] * g.p
    used = bytearray(g.q)
    start = next(v for v in range(g.p) if g.adjacency[v])
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        adj = g.adjacency[v]
        while nxt[v] < len(adj) and used[g.edge_id(v, adj[nxt[v]])]:
            nxt[v] += 1
        if nxt[v] < len(adj):
            w = adj[nxt[v]]
            used[g.edge_id(v, w)] = 1
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def peel_decomposition(g: Graph) -> CycleDecomposition:
    """Deterministic decomposition by greedy walking.

    Walk from the smallest node with unused edges, always to the smallest
    unused neighbor; when the walk revisits one of its own nodes, cut that
    loop off as a cycle and keep walking from the revisited node.
    """
    _require_eulerian(g)
    used = bytearray(g.q)
    remaining = list(g.degrees)
    cycles: list[Cycle] = []
    while True:
        start = next((v for v in range(g.p) if remaining[v]), None)
        if start is None:
            break
        walk = [start]
        pos = {start: 0}
        while True:
            v = walk[-1]
            if not remaining[v]:
                break
            w = next(w for w in g.adjacency[v] if not used[g.edge_id(v, w)])
            used[g.edge_id(v, w)] = 1
            remaining[v] -= 1
            remaining[w] -= 1
            if w in pos:
                k = pos[w]
                cycles.append(Cycle.from_nodes(walk[k:]))
                for u in walk[k + 1:]:
                    del pos[u]
                del walk[k + 1:]
            else:
                pos[w] = len(walk)
                walk.append(w)
    d = CycleDecomposition.of(cycles)
    if not d.is_valid_for(g):  # pragma: no cover - internal invariant
        raise AssertionError("peel produced an invalid decomposition")
    return d


# -- simple cycles ------------------------------------------------------------

@lru_cache(maxsize=256)
def _enumerate(g: Graph, cap: int) -> CycleSet:
    indptr, indices = g.csr
    flat, offsets, count, _mask, status = _kernels.cycle_dfs(indptr, indices, cap, True, 0)
    if status == _kernels.CAP_EXCEEDED:
        raise CycleBudgetExceeded(f"{g} has more than {cap} simple cycles", cap)
    flat = flat.tolist()
    offsets = offsets.tolist()
    cycles = [Cycle(offsets[k + 1] - offsets[k], tuple(flat[offsets[k]:offsets[k + 1]])) for k in range(count)]
    cycles.sort()
    return CycleSet(tuple(cycles))


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> CycleSet:
    """All simple cycles of ``g``; raises CycleBudgetExceeded past ``cap``."""
    return _enumerate(g, cap)


def edge_cycle_counts(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> dict[Edge, int]:
    counts = Counter({e: 0 for e in g.edges})
    for c in enumerate_cycles(g, cap):
        counts.update(c.edges)
    return dict(counts)


def edge_cycle_parities(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> dict[Edge, int]:
    """Parity (1 = odd) of the number of simple cycles through each edge."""
    return {e: c % 2 for e, c in edge_cycle_counts(g, cap).items()}


# -- cycle decompositions -----------------------------------------------------

def _cycles_by_edge(g: Graph, cap: int) -> tuple[list[Cycle], list[int], list[list[int]]]:
    cycles = list(enumerate_cycles(g, cap))
    masks = [c.edge_mask(g) for c in cycles]
    through: list[list[int]] = [[] for _ in range(g.q)]
    for k, m in enumerate(masks):
        e = 0
        while m:
            if m & 1:
                through[e].append(k)
            m >>= 1
            e += 1
    return cycles, masks, through


def enumerate_decompositions(
    g: Graph, cap: int = DEFAULT_DECOMP_CAP, cycle_cap: int = DEFAULT_CYCLE_CAP
) -> list[CycleDecomposition]:
    """Every partition of E(g) into simple cycles, each produced once.

    Branches on the cycles through the smallest uncovered edge.
    """
    _require_eulerian(g)
    cycles, masks, through = _cycles_by_edge(g, cycle_cap)
    out: list[CycleDecomposition] = []
    chosen: list[int] = []

    def rec(rest: int) -> None:
        if rest == 0:
            if len(out) >= cap:
                raise DecompositionBudgetExceeded(f"{g} has more than {cap} cycle decompositions", cap)
            out.append(CycleDecomposition.of(cycles[k] for k in chosen))
            return
        low = (rest & -rest).bit_length() - 1
        for k in through[low]:
            if masks[k] & ~rest == 0:
                chosen.append(k)
                rec(rest ^ masks[k])
                chosen.pop()

    rec((1 << g.q) - 1)
    return out


@dataclass(frozen=True)
class DecompositionCensus:
    """Exact tally of all cycle decompositions by residue-count vector.

    ``by_xi[(x0, x1, x2, x3)]`` is the number of decompositions with
    ``x_i`` cycles of length congruent to i mod 4.
    """

    total: int
    by_xi: dict[tuple[int, int, int, int], int]

    def residue_sets(self) -> set[frozenset[int]]:
        return {frozenset(i for i in range(4) if xi[i]) for xi in self.by_xi}


def decomposition_census(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> DecompositionCensus:
    """Count every cycle decomposition without materializing them.

    Memoized over the set of still-uncovered edges, branching exactly like
    :func:`enumerate_decompositions`, so the tally covers the same objects.
    """
    _require_eulerian(g)
    cycles, masks, through = _cycles_by_edge(g, cycle_cap)
    unit = [tuple(int(c.residue == i) for i in range(4)) for c in cycles]
    memo: dict[int, dict[tuple[int, int, int, int], int]] = {0: {(0, 0, 0, 0): 1}}

    def rec(rest: int) -> dict[tuple[int, int, int, int], int]:
        hit = memo.get(rest)
        if hit is not None:
            return hit
        low = (rest & -rest).bit_length() - 1
        acc: dict[tuple[int, int, int, int], int] = {}
        for k in through[low]:
            if masks[k] & ~rest == 0:
                du = unit[k]
                for xi, n in rec(rest ^ masks[k]).items():
                    key = (xi[0] + du[0], xi[1] + du[1], xi[2] + du[2], xi[3] + du[3])
                    acc[key] = acc.get(key, 0) + n
        memo[rest] = acc
        return acc

    tally = rec((1 << g.q) - 1)
    return DecompositionCensus(sum(tally.values()), dict(sorted(tally.items())))


# -- edge-disjoint paths ------------------------------------------------------

def count_edge_disjoint_paths(g: Graph, u: int, v: int) -> int:
    """Maximum number of pairwise edge-disjoint u-v paths (unit-capacity max flow)."""
    if u == v:
        raise SameNode(f"source and sink are both {u}")
    flow = [0] * g.q  # +1: along (a, b) with a < b, -1: against
    total = 0
    while True:
        parent: list[int | None] = [None] * g.p
        parent[u] = u
        queue = deque([u])
        while queue and parent[v] is None:
            a = queue.popleft()
            for b in g.adjacency[a]:
                if parent[b] is not None:
                    continue
                e = g.edge_id(a, b)
                sign = 1 if a < b else -1
                if flow[e] * sign < 1:
                    parent[b] = a
                    queue.append(b)
        if parent[v] is None:
            return total
        b = v
        while b != u:
            a = parent[b]
            flow[g.edge_id(a, b)] += 1 if a < b else -1
            b = a
        total += 1
