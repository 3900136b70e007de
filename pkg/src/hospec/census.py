"""Connected-subgraph enumeration, tree canonical codes, subtree censuses.

The enumerators visit every connected edge (or vertex) subset exactly once
using the ESU extension discipline, so censuses never need dedup of raw
subsets.  Tree isomorphism is decided by an AHU-style code rooted at the
centroid; general small graphs get a brute-force canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .errors import BudgetExceededError, NotATreeError
from .graphs import Edge, Graph

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class EdgeSubgraph:
    """A connected edge subset of a host graph plus its vertex support."""

    edges: frozenset[Edge]
    vertices: frozenset[int]

    def as_graph(self) -> Graph:
        """Standalone copy on vertices 0..k-1 (sorted-support relabeling)."""
        support = sorted(self.vertices)
        index = {v: i for i, v in enumerate(support)}
        return Graph(
            len(support), frozenset((index[u], index[v]) for u, v in self.edges)
        )


def _esu_subsets(
    adjacency: list[set[int]], max_size: int, budget: int
) -> Iterator[tuple[int, ...]]:
    """Yield every connected subset of 1..max_size items exactly once.

    ``adjacency`` is over item indices (vertices, or edges via the line
    graph).  Each subset is emitted with its minimum item as the anchor,
    following the ESU extension rule, so no dedup is required.
    """
    emitted = 0
    n = len(adjacency)
    for root in range(n):
        start_ext = sorted(w for w in adjacency[root] if w > root)
        stack = [((root,), start_ext, frozenset(adjacency[root]))]
        while stack:
            subset, ext, border = stack.pop()
            emitted += 1
            if emitted > budget:
                raise BudgetExceededError(budget)
            yield subset
            if len(subset) == max_size:
                continue
            for i, w in enumerate(ext):
                exclusive = sorted(
                    u
                    for u in adjacency[w]
                    if u > root and u not in border and u not in subset
                )
                stack.append(
                    (subset + (w,), ext[i + 1 :] + exclusive, border | adjacency[w])
                )


def connected_edge_subgraphs(
    g: Graph, max_edges: int, budget: int = DEFAULT_BUDGET
) -> Iterator[EdgeSubgraph]:
    """All connected edge subsets with 1..max_edges edges, each once.

    Deterministic order for a fixed input; raises BudgetExceededError rather
    than silently truncating.
    """
    if max_edges < 1:
        raise ValueError("max_edges must be >= 1")
    edges = g.sorted_edges()
    incident: dict[int, set[int]] = {}
    for idx, (u, v) in enumerate(edges):
        incident.setdefault(u, set()).add(idx)
        incident.setdefault(v, set()).add(idx)
    line_adj = [
        (incident[u] | incident[v]) - {idx} for idx, (u, v) in enumerate(edges)
    ]
    for subset in _esu_subsets(line_adj, max_edges, budget):
        chosen = frozenset(edges[i] for i in subset)
        support = frozenset(v for e in chosen for v in e)
        yield EdgeSubgraph(chosen, support)


def connected_induced_subgraphs(
    g: Graph, max_vertices: int | None = None, budget: int = DEFAULT_BUDGET
) -> Iterator[frozenset[int]]:
    """All connected vertex subsets (single vertices included), each once."""
    cap = g.n if max_vertices is None else max_vertices
    if cap < 1:
        raise ValueError("max_vertices must be >= 1")
    for subset in _esu_subsets(g.adjacency(), cap, budget):
        yield frozenset(subset)


# -- tree canonical codes ------------------------------------------------------


def tree_centroids(t: Graph) -> list[int]:
    """The one or two centroid vertices (max remaining component <= n/2)."""
    n = t.n
    if n == 1:
        return [0]
    adj = t.adjacency()
    order: list[int] = []
    parent = [-1] * n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    out = []
    for v in range(n):
        heaviest = n - size[v]
        for w in adj[v]:
            if w != parent[v] and parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest <= n // 2:
            out.append(v)
    return sorted(out)


def tree_rooted_code(t: Graph, root: int) -> bytes:
    """AHU code of the tree rooted at ``root``; equal iff rooted-isomorphic."""
    adj = t.adjacency()
    code: dict[int, bytes] = {}
    stack: list[tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, par, expanded = stack.pop()
        if expanded:
            children = sorted(code[w] for w in adj[v] if w != par)
            code[v] = b"(" + b"".join(children) + b")"
        else:
            stack.append((v, par, True))
            for w in adj[v]:
                if w != par:
                    stack.append((w, v, False))
    return code[root]


def tree_canonical_code(t: Graph) -> bytes:
    """Label-invariant code of a free tree; equal iff isomorphic.

    Rooted at the centroid; a two-centroid tie takes the lexicographic
    minimum of the two rooted codes.
    """
    if not t.is_tree():
        raise NotATreeError(f"expected a tree, got n={t.n}, m={t.edge_count}")
    return min(tree_rooted_code(t, c) for c in tree_centroids(t))


def tree_from_code(code: bytes) -> Graph:
    """Rebuild a representative tree from an AHU code (inverse of encoding)."""
    edges = []
    path: list[int] = []
    count = 0
    for ch in code:
        if ch == ord("("):
            node = count
            count += 1
            if path:
                edges.append((path[-1], node))
            path.append(node)
        elif ch == ord(")"):
            path.pop()
        else:
            raise ValueError(f"invalid tree code byte {ch!r}")
    if path:
        raise ValueError("unbalanced tree code")
    return Graph(count, frozenset(edges))


def trees_are_isomorphic(t1: Graph, t2: Graph) -> bool:
    return tree_canonical_code(t1) == tree_canonical_code(t2)


# -- subtree censuses ----------------------------------------------------------


@dataclass(frozen=True)
class SubtreeCensus:
    """Counts of m-edge subtrees keyed by canonical tree code."""

    m: int
    counts: dict[bytes, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "counts": {code.hex(): c for code, c in sorted(self.counts.items())},
        }


def subtree_census(t: Graph, m: int, budget: int = DEFAULT_BUDGET) -> SubtreeCensus:
    """Count the m-edge subtrees of a tree, grouped up to isomorphism."""
    if not t.is_tree():
        raise NotATreeError("subtree census requires a tree host")
    if not (1 <= m <= t.edge_count):
        raise ValueError(f"m must be in 1..{t.edge_count}, got {m}")
    counts: dict[bytes, int] = {}
    for sub in connected_edge_subgraphs(t, m, budget):
        if len(sub.edges) != m:
            continue
        code = tree_canonical_code(sub.as_graph())
        counts[code] = counts.get(code, 0) + 1
    return SubtreeCensus(m, counts)


def count_pattern(t: Graph, pattern: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Number of subtrees of ``t`` isomorphic to the tree ``pattern``."""
    if not pattern.is_tree():
        raise NotATreeError("pattern must be a tree")
    m = pattern.edge_count
    if m == 0 or m > t.edge_count:
        return 0
    census = subtree_census(t, m, budget)
    return census.counts.get(tree_canonical_code(pattern), 0)


# -- free tree generation ------------------------------------------------------


def generate_free_trees(m: int) -> list[Graph]:
    """One representative per isomorphism class of trees with m edges.

    Grown by leaf extension with canonical-code dedup; output is sorted by
    code, so the order is stable across runs.
    """
    if m < 0:
        raise ValueError("edge count must be non-negative")
    level: dict[bytes, Graph] = {tree_canonical_code(Graph(1)): Graph(1)}
    for _ in range(m):
        nxt: dict[bytes, Graph] = {}
        for tree in level.values():
            for v in range(tree.n):
                grown = Graph(tree.n + 1, tree.edges | {(v, tree.n)})
                code = tree_canonical_code(grown)
                if code not in nxt:
                    nxt[code] = grown
        level = nxt
    return [level[code] for code in sorted(level)]


# -- general small-graph canonical form ----------------------------------------


def _refine_colors(n: int, adj: list[set[int]]) -> list[int]:
    colors = [len(adj[v]) for v in range(n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_graph_key(g: Graph) -> tuple:
    """Complete isomorphism invariant for small graphs.

    Color refinement first, then minimisation over the color-respecting
    relabelings.  Worst case is factorial in the largest color class, so
    keep this to desk-scale graphs (the library uses it for <= 8 vertices).
    """
    n = g.n
    if n == 0:
        return (0, ())
    adj = g.adjacency()
    colors = _refine_colors(n, adj)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]
    offset = 0
    offsets = []
    for cls in ordered_classes:
        offsets.append(offset)
        offset += len(cls)
    best: tuple | None = None
    for perms in product(*(permutations(cls) for cls in ordered_classes)):
        label = {}
        for cls_perm, off in zip(perms, offsets):
            for i, v in enumerate(cls_perm):
                label[v] = off + i
        edges = tuple(
            sorted(
                (label[u], label[v]) if label[u] < label[v] else (label[v], label[u])
                for u, v in g.edges
            )
        )
        if best is None or edges < best:
            best = edges
    return (n, best)


def graphs_are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    return canonical_graph_key(g1) == canonical_graph_key(g2)
