"""Labeled simple undirected graphs and the graph6 interchange format.

Vertices are dense 0-based integer labels; isolated vertices are legal.
Graphs are immutable and hashable, so they can be shared freely and used
as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import Graph6Error

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``.
    Construction rejects self-loops and out-of-range endpoints.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) endpoint out of range for n={self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_rows(self) -> list[list[int]]:
        """Dense 0/1 adjacency matrix with exact Python integers."""
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rows[u][v] = 1
            rows[v][u] = 1
        return rows

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, sorted by minimum vertex."""
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = {start}
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> "Graph":
        """Image of the graph under a vertex relabeling (must be injective)."""
        new_n = self.n if n is None else n
        return Graph(new_n, frozenset((mapping[u], mapping[v]) for u, v in self.edges))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled to 0..k-1 in sorted order."""
        support = sorted(set(vertices))
        index = {v: i for i, v in enumerate(support)}
        kept = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(support), kept)

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Standalone graph on the support of ``edges``, relabeled to 0..k-1."""
        kept = {(u, v) if u < v else (v, u) for u, v in edges}
        support = sorted({v for e in kept for v in e})
        index = {v: i for i, v in enumerate(support)}
        return Graph(len(support), frozenset((index[u], index[v]) for u, v in kept))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted past those of ``g1``."""
    shift = g1.n
    edges = set(g1.edges)
    edges.update((u + shift, v + shift) for u, v in g2.edges)
    return Graph(g1.n + g2.n, frozenset(edges))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


# -- graph6 ------------------------------------------------------------------
#
# Standard encoding: optional ">>graph6<<" header, then N(n), then the upper
# triangle of the adjacency matrix in column order, packed 6 bits per byte
# (big-endian within a byte), each byte offset by 63.


def _encode_number(n: int) -> bytes:
    if n < 0:
        raise ValueError("graph6 cannot encode negative sizes")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        parts = [(n >> (6 * s)) & 63 for s in range(5, -1, -1)]
        return bytes([126, 126] + [p + 63 for p in parts])
    raise ValueError(f"graph6 size limit exceeded: {n}")


def to_graph6(g: Graph) -> str:
    """Encode a graph in graph6 (no header, no trailing newline)."""
    out = bytearray(_encode_number(g.n))
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line into a :class:`Graph`.

    Raises :class:`Graph6Error` with the byte offset of the first defect:
    a malformed header, a byte outside the printable graph6 range, or a
    bit vector shorter/longer than the vertex count requires.
    """
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(b">>"):
        header = GRAPH6_HEADER.encode("ascii")
        if not data.startswith(header):
            raise Graph6Error("malformed graph6 header", 0)
        pos = len(header)
    if pos >= len(data):
        raise Graph6Error("missing size field", pos)

    def require(index: int) -> int:
        if index >= len(data):
            raise Graph6Error("truncated size field", index)
        byte = data[index]
        if not (63 <= byte <= 126):
            raise Graph6Error(f"out-of-range byte 0x{byte:02x}", index)
        return byte - 63

    first = require(pos)
    if first < 63:
        n = first
        pos += 1
    else:
        if require(pos + 1) < 63:
            n = 0
            for k in range(3):
                n = (n << 6) | require(pos + 1 + k)
            pos += 4
        else:
            n = 0
            for k in range(6):
                n = (n << 6) | require(pos + 2 + k)
            pos += 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error("truncated bit vector", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing data after bit vector", pos + nbytes)

    edges = set()
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = require(pos + bit // 6)
            if (byte >> (5 - bit % 6)) & 1:
                edges.add((i, j))
            bit += 1
    # padding bits beyond the triangle must be zero
    while bit < 6 * nbytes:
        byte = require(pos + bit // 6)
        if (byte >> (5 - bit % 6)) & 1:
            raise Graph6Error("nonzero padding bit", pos + bit // 6)
        bit += 1
    return Graph(n, frozenset(edges))


def parse_graph6_lines(text: str) -> Iterator[Graph]:
    """Parse a multi-line graph6 document, skipping blank lines."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)
