"""Cospectral-pair constructions: cospectral vertices and coalescences.

Two vertices of a tree are cospectral when the vertex-deleted subtrees have
identical characteristic polynomials.  Coalescing any rooted tree onto the
two vertices of a non-similar cospectral pair yields exactly-cospectral,
non-isomorphic trees whose 5-edge subtree censuses differ, so the pair is
separated by high-ordered invariants.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .catalog import named_tree
from .census import count_pattern, generate_free_trees, tree_rooted_code
from .errors import NotATreeError
from .graphs import Graph
from .spectra import characteristic_polynomial


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not (0 <= self.root < self.graph.n):
            raise ValueError(f"root {self.root} out of range for n={self.graph.n}")

    @property
    def root_degree(self) -> int:
        return self.graph.degree(self.root)


@dataclass(frozen=True)
class CospectralVertexPair:
    """Vertices u, v of a tree whose deleted subtrees are exactly cospectral;
    ``similar`` marks pairs related by an automorphism."""

    tree: Graph
    u: int
    v: int
    similar: bool


def delete_vertex(g: Graph, v: int) -> Graph:
    return g.induced_subgraph([w for w in range(g.n) if w != v])


def vertices_are_similar(t: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of the tree maps u to v."""
    return tree_rooted_code(t, u) == tree_rooted_code(t, v)


def cospectral_vertex_pairs(t: Graph) -> list[CospectralVertexPair]:
    """All unordered vertex pairs with cospectral deletions, flagged similar
    or not via the rooted canonical code."""
    if not t.is_tree():
        raise NotATreeError("cospectral vertex pairs are computed on trees")
    by_poly: dict[tuple[int, ...], list[int]] = {}
    for v in range(t.n):
        key = characteristic_polynomial(delete_vertex(t, v)).coefficients
        by_poly.setdefault(key, []).append(v)
    pairs = []
    for group in by_poly.values():
        for i, u in enumerate(group):
            for v in group[i + 1 :]:
                pairs.append(CospectralVertexPair(t, u, v, vertices_are_similar(t, u, v)))
    return pairs


def coalesce(f: RootedGraph, t: RootedGraph) -> Graph:
    """Glue two rooted graphs by identifying their roots."""
    nf = f.graph.n
    mapping = {}
    nxt = nf
    for v in range(t.graph.n):
        if v == t.root:
            mapping[v] = f.root
        else:
            mapping[v] = nxt
            nxt += 1
    edges = set(f.graph.edges)
    edges.update(
        tuple(sorted((mapping[u], mapping[v]))) for u, v in t.graph.edges
    )
    return Graph(nf + t.graph.n - 1, frozenset(edges))


def schwenk_pair(f: RootedGraph, pair: CospectralVertexPair) -> tuple[Graph, Graph]:
    """Coalesce ``f`` onto both vertices of a cospectral pair.

    The outputs are exactly cospectral trees; they are non-isomorphic when
    the pair is non-similar and ``f`` has at least one edge.
    """
    if not f.graph.is_tree():
        raise NotATreeError("the attachment must be a tree to keep outputs trees")
    if pair.similar:
        warnings.warn(
            "coalescing at similar vertices yields isomorphic graphs",
            stacklevel=2,
        )
    return (
        coalesce(f, RootedGraph(pair.tree, pair.u)),
        coalesce(f, RootedGraph(pair.tree, pair.v)),
    )


def r6_count_difference(f: RootedGraph, pair: CospectralVertexPair) -> int:
    """Gap between the R6-subtree counts of the two coalescences.

    Returned as a magnitude (the pair's orientation is arbitrary); it equals
    the degree of the attachment root.
    """
    r6 = named_tree("R6")
    at_u, at_v = schwenk_pair(f, pair)
    return abs(count_pattern(at_v, r6) - count_pattern(at_u, r6))


def scan_cospectral_vertices(
    max_vertices: int, require_nonsimilar: bool = True
) -> list[CospectralVertexPair]:
    """Exhaustive scan of all free trees up to ``max_vertices`` vertices.

    Returns every (non-similar, by default) cospectral vertex pair found,
    in deterministic tree order.
    """
    found = []
    for n in range(2, max_vertices + 1):
        for tree in generate_free_trees(n - 1):
            for pair in cospectral_vertex_pairs(tree):
                if pair.similar and require_nonsimilar:
                    continue
                found.append(pair)
    return found
