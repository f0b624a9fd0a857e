"""Generators for the graph families used as fixtures and survey input.

Node numbering is deterministic: the base cycle first, then added
structure in creation order.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .classification import epsilon_class
from .errors import BadParameters, ClassCheckFailed, InvalidPlan, TooShort, WouldCreateMultiEdge
from .graph import Graph, build_graph
from .graphio import parse_graph6


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise TooShort(f"a cycle needs at least 3 nodes, got {n}")
    return build_graph(n, [(k, (k + 1) % n) for k in range(n)])


def _add_path(edges: list, next_node: int, a: int, b: int, length: int) -> int:
    """Append a path of ``length`` edges from a to b through fresh nodes."""
    prev = a
    for _ in range(length - 1):
        edges.append((prev, next_node))
        prev = next_node
        next_node += 1
    edges.append((prev, b))
    return next_node


def parallel_paths(n1: int, n2: int, m: int) -> Graph:
    """C_n with n = n1*n2, plus m new paths of length n2 over each of the n1
    consecutive segments between nodes k*n2 and (k+1)*n2.

    Order n + m*n1*(n2 - 1), size n*(m + 1). For n1 = 2 both segments join
    the same two nodes, which then carry 2m added paths.
    """
    if n1 < 2 or n2 < 2 or m < 1:
        raise BadParameters(f"need n1 > 1, n2 > 1, m > 0; got n1={n1} n2={n2} m={m}")
    n = n1 * n2
    edges = [(k, (k + 1) % n) for k in range(n)]
    nxt = n
    for k in range(n1):
        a, b = k * n2, ((k + 1) * n2) % n
        for _ in range(m):
            nxt = _add_path(edges, nxt, a, b, n2)
    return build_graph(nxt, edges)


def book(k: int, length: int) -> Graph:
    """k cycles of the given length sharing the single edge (0, 1)."""
    if k < 2 or length < 3:
        raise BadParameters(f"need k >= 2 and length >= 3; got k={k} length={length}")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(k):
        nxt = _add_path(edges, nxt, 1, 0, length - 1)
    return build_graph(nxt, edges)


def triangle_of_squares() -> Graph:
    """Triangle 0-1-2 with a 4-cycle hung on each side: a (9, 12)-graph."""
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for a, b in [(0, 1), (1, 2), (0, 2)]:
        nxt = _add_path(edges, nxt, a, b, 3)
    return build_graph(nxt, edges)


def smallest_eps01_candidates() -> list[Graph]:
    """Readings of "C5 plus two nodes adjacent to a pair of nonadjacent nodes".

    First both new nodes join the same pair (0, 2); then they join two
    different nonadjacent pairs, (0, 2) and (1, 3).
    """
    c5 = [(k, (k + 1) % 5) for k in range(5)]
    same = build_graph(7, c5 + [(5, 0), (5, 2), (6, 0), (6, 2)])
    different = build_graph(7, c5 + [(5, 0), (5, 2), (6, 1), (6, 3)])
    return [same, different]


def smallest_eps01() -> Graph:
    """The (7, 9)-graph in class e01, self-checked at construction."""
    for g in smallest_eps01_candidates():
        if (g.p, g.q) == (7, 9) and epsilon_class(g).tag == "e01":
            return g
    raise ClassCheckFailed("no reading of the smallest e01 graph classifies as e01")


def hypercube(d: int) -> Graph:
    if d < 1:
        raise BadParameters(f"dimension must be positive, got {d}")
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def path_addition(base: Graph, u: int, v: int, count: int, length: int) -> Graph:
    """Add ``count`` internally disjoint u-v paths of ``length`` edges.

    Degrees change only at u and v (by ``count`` each); the result stays
    Eulerian when the base is Eulerian and ``count`` is even.
    """
    if u == v or not (0 <= u < base.p and 0 <= v < base.p):
        raise BadParameters(f"need two distinct nodes of the base graph, got {u}, {v}")
    if count < 1 or length < 1:
        raise BadParameters(f"need count >= 1 and length >= 1, got {count}, {length}")
    if length == 1 and (count > 1 or base.has_edge(u, v)):
        raise WouldCreateMultiEdge(f"edge ({u}, {v}) would be doubled")
    edges = list(base.edges)
    nxt = base.p
    for _ in range(count):
        nxt = _add_path(edges, nxt, u, v, length)
    return build_graph(nxt, edges)


# -- planting trees -----------------------------------------------------------

@dataclass(frozen=True)
class Planting:
    """A rooted tree to plant: ``parent[i]`` is the parent of tree node i
    (-1 for the root ``root``). The root is identified with ``host``."""

    host: int
    parent: tuple[int, ...]
    root: int = 0


PlantingPlan = Sequence[Planting]


def _check_tree(t: Planting) -> None:
    n = len(t.parent)
    if not 0 <= t.root < n or t.parent[t.root] != -1:
        raise InvalidPlan(f"root {t.root} must have parent -1")
    for i, par in enumerate(t.parent):
        if i != t.root and not 0 <= par < n:
            raise InvalidPlan(f"tree node {i} has invalid parent {par}")
    for i in range(n):
        seen = set()
        while i != t.root:
            if i in seen:
                raise InvalidPlan("parent vector contains a cycle")
            seen.add(i)
            i = t.parent[i]


def plant(g: Graph, plan: PlantingPlan) -> Graph:
    """Identify each tree's root with its host node; other tree nodes are new."""
    edges = list(g.edges)
    nxt = g.p
    for t in plan:
        if not 0 <= t.host < g.p:
            raise InvalidPlan(f"host {t.host} is not a node of the graph")
        _check_tree(t)
        ids = {}
        for i in range(len(t.parent)):
            if i == t.root:
                ids[i] = t.host
            else:
                ids[i] = nxt
                nxt += 1
        edges.extend((ids[i], ids[par]) for i, par in enumerate(t.parent) if i != t.root)
    return build_graph(nxt, edges)


def core_graph(g: Graph) -> tuple[Graph | None, list[int]]:
    """Delete pendant nodes until none remain.

    Returns the core (None when nothing is left) and the surviving original
    node ids, in order.
    """
    alive = [True] * g.p
    deg = list(g.degrees)
    todo = [v for v in range(g.p) if deg[v] <= 1]
    while todo:
        v = todo.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    todo.append(w)
    keep = [v for v in range(g.p) if alive[v]]
    if not keep:
        return None, []
    pos = {v: i for i, v in enumerate(keep)}
    core = build_graph(len(keep), [(pos[u], pos[v]) for u, v in g.edges if alive[u] and alive[v]])
    return core, keep


def _ahu(children: list[list[int]], v: int) -> str:
    return "(" + "".join(sorted(_ahu(children, c) for c in children[v])) + ")"


def rooted_trees(max_nodes: int) -> list[tuple[int, ...]]:
    """Parent vectors (root 0) of all rooted trees with 2..max_nodes nodes,
    one per isomorphism class, smallest first."""
    found: dict[str, tuple[int, ...]] = {}
    for n in range(2, max_nodes + 1):
        for tail in product(*(range(i) for i in range(1, n))):
            parent = (-1,) + tail
            children: list[list[int]] = [[] for _ in range(n)]
            for i in range(1, n):
                children[parent[i]].append(i)
            found.setdefault(_ahu(children, 0), parent)
    return sorted(found.values(), key=lambda t: (len(t), t))


def single_tree_plantings(g: Graph, max_planted: int = 4) -> Iterator[tuple[Planting, Graph]]:
    """Every rooted tree with at most ``max_planted`` non-root nodes, planted
    at every node of ``g`` in turn."""
    for parent in rooted_trees(max_planted + 1):
        for host in range(g.p):
            t = Planting(host, parent)
            yield t, plant(g, [t])


# -- construction mini-language -------------------------------------------------

@dataclass(frozen=True)
class CycleGraph:
    n: int

    def build(self) -> Graph:
        return cycle_graph(self.n)


@dataclass(frozen=True)
class ParallelPaths:
    n1: int
    n2: int
    m: int

    def build(self) -> Graph:
        return parallel_paths(self.n1, self.n2, self.m)


@dataclass(frozen=True)
class Book:
    k: int
    len: int

    def build(self) -> Graph:
        return book(self.k, self.len)


@dataclass(frozen=True)
class TriangleOfSquares:
    def build(self) -> Graph:
        return triangle_of_squares()


@dataclass(frozen=True)
class SmallestEps01:
    def build(self) -> Graph:
        return smallest_eps01()


@dataclass(frozen=True)
class Hypercube:
    d: int

    def build(self) -> Graph:
        return hypercube(self.d)


@dataclass(frozen=True)
class PathAddition:
    base: object
    u: int
    v: int
    count: int
    len: int

    def build(self) -> Graph:
        return path_addition(self.base.build(), self.u, self.v, self.count, self.len)


@dataclass(frozen=True)
class Graph6Literal:
    text: str

    def build(self) -> Graph:
        return parse_graph6(self.text)


_FORMS = {
    "cycle": (CycleGraph, ("n",)),
    "parallel-paths": (ParallelPaths, ("n1", "n2", "m")),
    "book": (Book, ("k", "len")),
    "triangle-of-squares": (TriangleOfSquares, ()),
    "smallest-eps01": (SmallestEps01, ()),
    "hypercube": (Hypercube, ("d",)),
    "path-addition": (PathAddition, ("base", "u", "v", "count", "len")),
}


def _parse_base(token: str):
    """``cycle:7``, ``hypercube:3``, ``book:2:5`` or ``g6:<graph6>``."""
    kind, _, rest = token.partition(":")
    try:
        if kind == "g6":
            return Graph6Literal(rest)
        args = [int(a) for a in rest.split(":")] if rest else []
        if kind == "cycle":
            return CycleGraph(*args)
        if kind == "hypercube":
            return Hypercube(*args)
        if kind == "book":
            return Book(*args)
        if kind == "parallel-paths":
            return ParallelPaths(*args)
        if kind in ("triangle-of-squares", "smallest-eps01") and not args:
            return _FORMS[kind][0]()
    except (TypeError, ValueError) as exc:
        raise BadParameters(f"bad base graph {token!r}: {exc}") from None
    raise BadParameters(f"unknown base graph {token!r}")


def parse_construction(text: str):
    """Parse e.g. ``book k=3 len=5`` or
    ``path-addition base=cycle:7 u=0 v=3 count=2 len=3``."""
    words = shlex.split(text)
    if not words or words[0] not in _FORMS:
        raise BadParameters(f"unknown construction {text!r}; expected one of {', '.join(_FORMS)}")
    cls, names = _FORMS[words[0]]
    kwargs = {}
    for w in words[1:]:
        key, eq, val = w.partition("=")
        if not eq or key not in names or key in kwargs:
            raise BadParameters(f"bad argument {w!r} for {words[0]} (takes {', '.join(names) or 'none'})")
        if key == "base":
            kwargs[key] = _parse_base(val)
        else:
            try:
                kwargs[key] = int(val)
            except ValueError:
                raise BadParameters(f"argument {key} must be an integer, got {val!r}") from None
    missing = [n for n in names if n not in kwargs]
    if missing:
        raise BadParameters(f"{words[0]} is missing {', '.join(missing)}")
    return cls(**kwargs)


def build_construction(text: str) -> Graph:
    return parse_construction(text).build()
