"""Block structure, pairwise cycle intersections and the parity rules they obey,
degree-2 nodes and planarity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .classification import EpsilonClass, spectrum_mask
from .cycles import DEFAULT_CYCLE_CAP, Cycle, count_edge_disjoint_paths, enumerate_cycles
from .errors import Disconnected, NotBiconnected, PreconditionError
from .graph import Edge, Graph, build_graph

EVEN, ODD = 0, 1

# Allowed parities of the shared path length t for two cycles of residues
# (a, b) meeting in a single path, per two-type class (i, j). An empty set
# means such intersections cannot occur at all.
CLOSED_PARITY: dict[tuple[int, int], dict[tuple[int, int], frozenset[int]]] = {
    (0, 1): {(0, 0): frozenset({EVEN}), (0, 1): frozenset({EVEN}), (1, 1): frozenset({ODD})},
    (0, 2): {(0, 0): frozenset({EVEN, ODD}), (0, 2): frozenset({EVEN, ODD}), (2, 2): frozenset({EVEN, ODD})},
    (0, 3): {(0, 0): frozenset({EVEN}), (0, 3): frozenset({EVEN}), (3, 3): frozenset({ODD})},
    (1, 2): {(1, 1): frozenset({EVEN}), (1, 2): frozenset({ODD}), (2, 2): frozenset({ODD})},
    (1, 3): {(1, 1): frozenset(), (1, 3): frozenset(), (3, 3): frozenset()},
    (2, 3): {(2, 2): frozenset({ODD}), (2, 3): frozenset({ODD}), (3, 3): frozenset({EVEN})},
}

PARITY_THEOREM = {(0, 1): "T3", (0, 2): "T7", (0, 3): "T10", (1, 2): "T14", (1, 3): "T20", (2, 3): "T23"}


def violation(theorem: str, g: Graph, **details) -> dict:
    return {"theorem": theorem, "graph": g.to_graph6(), "details": details}


# -- blocks -------------------------------------------------------------------

def biconnected_edge_sets(g: Graph) -> list[list[Edge]]:
    """Biconnected components as edge lists (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.p
    low = [0] * g.p
    clock = 0
    out: list[list[Edge]] = []
    estack: list[Edge] = []
    for s in range(g.p):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(g.adjacency[s]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] < 0:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block = []
                while True:
                    a, b = estack.pop()
                    block.append((min(a, b), max(a, b)))
                    if (a, b) == (u, v):
                        break
                out.append(sorted(block))
    out.sort()
    return out


def subgraph(g: Graph, edges: list[Edge]) -> tuple[Graph, list[int]]:
    """The graph spanned by ``edges``, renumbered; also returns new -> old node map."""
    nodes = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(pos[u], pos[v]) for u, v in edges]), nodes


def is_cycle_graph(g: Graph) -> bool:
    return g.connected and g.p >= 3 and all(d == 2 for d in g.degrees)


@dataclass(frozen=True)
class BlockProfile:
    blocks: tuple[tuple[Edge, ...], ...]
    spectra: tuple[frozenset[int], ...]
    beta_single: dict[int, int]
    beta_pair: dict[tuple[int, int], int]
    beta_other: int
    cutnodes: tuple[int, ...]

    def block_is_cycle(self, k: int) -> bool:
        edges = self.blocks[k]
        nodes = {v for e in edges for v in e}
        return len(edges) >= 3 and len(edges) == len(nodes)

    def as_dict(self) -> dict:
        return {
            "count": len(self.blocks),
            "spectra": [sorted(s) for s in self.spectra],
            "beta_single": {str(k): v for k, v in sorted(self.beta_single.items())},
            "beta_pair": {"%d%d" % k: v for k, v in sorted(self.beta_pair.items())},
            "beta_other": self.beta_other,
            "cutnodes": list(self.cutnodes),
        }


def blocks(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> BlockProfile:
    """Biconnected components, each typed by the residues of the cycles inside it."""
    if not g.connected:
        raise Disconnected(f"{g} is disconnected")
    edge_sets = biconnected_edge_sets(g)
    spectra = []
    beta_single: dict[int, int] = {}
    beta_pair: dict[tuple[int, int], int] = {}
    other = 0
    seen_in: dict[int, int] = {}
    for edges in edge_sets:
        for v in {v for e in edges for v in e}:
            seen_in[v] = seen_in.get(v, 0) + 1
        if len(edges) == 1:
            spec = frozenset()
        else:
            mask = spectrum_mask(subgraph(g, edges)[0], cap)
            spec = frozenset(i for i in range(4) if mask >> i & 1)
        spectra.append(spec)
        if len(spec) == 1:
            (i,) = spec
            beta_single[i] = beta_single.get(i, 0) + 1
        elif len(spec) == 2:
            pair = tuple(sorted(spec))
            beta_pair[pair] = beta_pair.get(pair, 0) + 1
        else:
            other += 1
    cut = tuple(sorted(v for v, n in seen_in.items() if n > 1))
    return BlockProfile(tuple(map(tuple, edge_sets)), tuple(spectra), beta_single, beta_pair, other, cut)


# -- cycle intersections ------------------------------------------------------

@dataclass(frozen=True)
class CycleIntersection:
    """How two cycles meet: ``disjoint``, ``node`` (one shared node, no shared
    edge), ``path`` (shared edges form one path of ``t`` edges and no other
    node is shared) or ``complex``."""

    pair: tuple[Cycle, Cycle]
    kind: str
    t: int = 0
    combined_residue: int | None = None


def combined_residue(i: int, j: int, t: int) -> int:
    """Residue of the cycle left after removing a shared path of t edges."""
    if t < 1:
        raise ValueError("shared path must have at least one edge")
    return (i + j - 2 * t) % 4


def _is_single_path(edges: frozenset[Edge]) -> tuple[bool, set[int]]:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    nodes = set(deg)
    if len(nodes) != len(edges) + 1 or max(deg.values()) > 2:
        return False, nodes
    # a forest with |V| = |E| + 1 and max degree 2 is a path iff connected
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(nodes))
    seen = {start}
    todo = [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(nodes), nodes


def intersect_cycles(c1: Cycle, c2: Cycle) -> CycleIntersection:
    shared_nodes = set(c1.nodes) & set(c2.nodes)
    shared_edges = c1.edges & c2.edges
    pair = (c1, c2)
    if not shared_edges:
        if not shared_nodes:
            return CycleIntersection(pair, "disjoint")
        if len(shared_nodes) == 1:
            return CycleIntersection(pair, "node")
        return CycleIntersection(pair, "complex")
    is_path, path_nodes = _is_single_path(shared_edges)
    if is_path and path_nodes == shared_nodes:
        t = len(shared_edges)
        return CycleIntersection(pair, "path", t, combined_residue(c1.residue, c2.residue, t))
    return CycleIntersection(pair, "complex")


def _two_type_pair(cls: EpsilonClass) -> tuple[int, int]:
    if not cls.is_two_type:
        raise PreconditionError(f"class {cls.tag} is not two-type")
    return cls.pair


def intersection_parity_report(g: Graph, cls: EpsilonClass, cap: int = DEFAULT_CYCLE_CAP) -> list[dict]:
    """Path intersections whose length parity breaks the rule for ``cls``.

    Class e02 imposes no rule, so nothing is enumerated for it.
    """
    pair = _two_type_pair(cls)
    rules = CLOSED_PARITY[pair]
    if all(len(v) == 2 for v in rules.values()):
        return []
    out = []
    cycles = list(enumerate_cycles(g, cap))
    for c1, c2 in combinations(cycles, 2):
        if c1.edges.isdisjoint(c2.edges):
            continue
        x = intersect_cycles(c1, c2)
        if x.kind != "path":
            continue
        key = (min(c1.residue, c2.residue), max(c1.residue, c2.residue))
        allowed = rules.get(key)
        if allowed is None or x.t % 2 not in allowed:
            out.append(
                violation(
                    PARITY_THEOREM[pair], g, cycles=[list(c1.nodes), list(c2.nodes)], types=list(key), t=x.t
                )
            )
    return out


def biconnected_two_type_witness(
    g: Graph, cls: EpsilonClass, cap: int = DEFAULT_CYCLE_CAP
) -> CycleIntersection | None:
    """First residue-i / residue-j cycle pair meeting in a single path.

    ``g`` must be one block. None means no such pair exists, which would
    contradict the block theorem for two-type classes.
    """
    i, j = _two_type_pair(cls)
    if g.p < 3 or len(biconnected_edge_sets(g)) != 1:
        raise NotBiconnected(f"{g} is not 2-connected")
    cycles = list(enumerate_cycles(g, cap))
    of_i = [c for c in cycles if c.residue == i]
    of_j = [c for c in cycles if c.residue == j]
    for ci in of_i:
        for cj in of_j:
            if ci.edges.isdisjoint(cj.edges):
                continue
            x = intersect_cycles(ci, cj)
            if x.kind == "path":
                return x
    return None


# -- degree 2, EDP pairs, planarity --------------------------------------------

def has_degree_two_node(g: Graph) -> bool:
    return 2 in g.degrees


def pair_with_two_edp(g: Graph) -> tuple[int, int] | None:
    """Some node pair joined by exactly two edge-disjoint paths, or None."""
    order = sorted(range(g.p), key=lambda v: (g.degrees[v], v))
    for u, v in combinations(order, 2):
        if min(g.degrees[u], g.degrees[v]) < 2:
            continue
        if count_edge_disjoint_paths(g, u, v) == 2:
            return (min(u, v), max(u, v))
    return None


def is_planar(g: Graph) -> bool:
    if g.p >= 3 and g.q > 3 * g.p - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    return nx.check_planarity(h)[0]
