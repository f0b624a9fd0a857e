"""graph6 and edge-list codecs.

Only the short graph6 form (fewer than 63 nodes) is supported. Bits run
column-wise over the upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import EdgeListError, MalformedHeader, OrderTooLarge, TruncatedBits
from .graph import Graph, build_graph

GRAPH6_HEADER = b">>graph6<<"
MAX_ORDER = 62


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    return line


def parse_graph6(line: bytes | str) -> Graph:
    data = _as_bytes(line)
    if not data:
        raise MalformedHeader("empty graph6 record")
    n = data[0] - 63
    if data[0] == 126:
        raise MalformedHeader("long-form graph6 header (order >= 63) is not supported")
    if not 0 <= n <= MAX_ORDER:
        raise MalformedHeader(f"invalid graph6 header byte {data[0]!r}")
    if n == 0:
        raise MalformedHeader("graph6 record encodes the empty graph")
    body = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise TruncatedBits(f"order {n} needs {nbytes} data bytes, got {len(body)}")
    for b in body:
        if not 63 <= b <= 126:
            raise MalformedHeader(f"byte {b!r} outside the printable graph6 range")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.p > MAX_ORDER:
        raise OrderTooLarge(f"order {g.p} needs the long graph6 form")
    nbits = g.p * (g.p - 1) // 2
    bits = bytearray((nbits + 5) // 6 * 6)
    for u, v in g.edges:
        bits[v * (v - 1) // 2 + u] = 1
    out = bytearray([63 + g.p])
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = (chunk << 1) | b
        out.append(63 + chunk)
    return out.decode("ascii")


@dataclass(frozen=True)
class Record:
    """One line of a graph6 stream: either a graph or a parse error."""

    index: int
    text: str
    graph: Graph | None = None
    error: str | None = None


def read_graph6_stream(lines: Iterable[bytes | str]) -> Iterator[Record]:
    """Yield a :class:`Record` per non-blank, non-comment line."""
    index = 0
    for raw in lines:
        text = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        text = text.strip()
        if not text or text.startswith("#"):
            continue
        try:
            yield Record(index, text, graph=parse_graph6(text))
        except ValueError as exc:
            yield Record(index, text, error=f"{type(exc).__name__}: {exc}")
        index += 1


def read_edge_list(stream: IO[str] | Iterable[str]) -> tuple[Graph, dict[str, int]]:
    """Parse the edge-list text format.

    First data line is ``p q``, then ``q`` lines ``u v``; ``#`` starts a
    comment line. Zero-based integer labels map to themselves; any other
    labels are renumbered in order of first appearance. Returns the graph
    and the label map.
    """
    rows = []
    for line in stream:
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())
    if not rows:
        raise EdgeListError("empty edge list")
    try:
        p, q = int(rows[0][0]), int(rows[0][1])
    except (ValueError, IndexError):
        raise EdgeListError(f"bad header line {' '.join(rows[0])!r}") from None
    pairs = rows[1:]
    if len(pairs) != q:
        raise EdgeListError(f"header announces {q} edges, found {len(pairs)}")
    for r in pairs:
        if len(r) != 2:
            raise EdgeListError(f"bad edge line {' '.join(r)!r}")
    labels = [tok for r in pairs for tok in r]
    if all(tok.isdigit() and int(tok) < p for tok in labels):
        mapping = {str(i): i for i in range(p)}
    else:
        mapping = {}
        for tok in labels:
            mapping.setdefault(tok, len(mapping))
        if len(mapping) > p:
            raise EdgeListError(f"{len(mapping)} distinct labels exceed order {p}")
    return build_graph(p, [(mapping[a], mapping[b]) for a, b in pairs]), mapping


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
