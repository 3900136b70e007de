"""Spectral-moment coefficient engine for trees and power hypertrees.

The central quantity is the number of closed d-walks in a subgraph that
traverse every edge at least once.  For trees it has a closed form as a sum
over positive integer edge weightings; inclusion-exclusion over edge subsets
provides an independent oracle that also covers cyclic subgraphs.  Summing
the coefficients against subtree censuses yields exact spectral moments of
trees and of their k-power hypertrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .census import subtree_census, tree_from_code
from .errors import BudgetExceededError, NotATreeError
from .graphs import Graph
from .spectra import spectral_moments_upto

ORACLE_EDGE_LIMIT = 20


def positive_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` integers >= 1,
    in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in positive_compositions(total - first, parts - 1):
            yield (first,) + rest


def covering_walks_tree(tree: Graph, d: int) -> int:
    """Closed d-walks in a tree that traverse every edge at least once.

    Evaluated by the weighted-composition formula: a walk assigns each edge a
    positive weight (half the number of traversals), and each weighting
    contributes d * prod_e w(e) * prod_v (deg_w(v)-1)!/prod_{e at v} w(e)!.
    Intermediate terms are rational; the total is asserted integral.
    """
    if not tree.is_tree():
        raise NotATreeError("the weighted-composition formula applies to trees only")
    if d <= 0:
        raise ValueError("walk length must be positive")
    if d % 2 == 1:
        return 0
    edges = tree.sorted_edges()
    m = len(edges)
    if m == 0 or d // 2 < m:
        return 0
    incident: list[list[int]] = [[] for _ in range(tree.n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    vertices = [inc for inc in incident if inc]
    fact = [1] * (d // 2 + 1)
    for i in range(2, len(fact)):
        fact[i] = fact[i - 1] * i
    total = Fraction(0)
    for weights in positive_compositions(d // 2, m):
        term = Fraction(1)
        for w in weights:
            term *= w
        for inc in vertices:
            deg = sum(weights[i] for i in inc)
            r = 1
            for i in inc:
                r *= fact[weights[i]]
            term *= Fraction(fact[deg - 1], r)
        total += term
    total *= d
    assert total.denominator == 1, "covering-walk total must be an integer"
    return int(total)


def covering_walks_oracle(sub: Graph, d: int) -> int:
    """Independent count of edge-covering closed d-walks, any connected graph.

    Inclusion-exclusion over edge subsets: sum of (-1)^(|E|-|S|) times the
    closed d-walk count of the spanning subgraph on S.
    """
    if not sub.is_connected() or sub.edge_count == 0:
        raise ValueError("oracle requires a connected graph with at least one edge")
    if d <= 0:
        raise ValueError("walk length must be positive")
    edges = sub.sorted_edges()
    m = len(edges)
    if m > ORACLE_EDGE_LIMIT:
        raise BudgetExceededError(2**ORACLE_EDGE_LIMIT)
    total = 0
    for mask in range(2**m):
        kept = [edges[i] for i in range(m) if mask >> i & 1]
        walks = spectral_moments_upto(Graph(sub.n, frozenset(kept)), d)[d]
        total += walks if (m - len(kept)) % 2 == 0 else -walks
    return total


@lru_cache(maxsize=None)
def _covering_walks_by_code(code: bytes, d: int) -> int:
    return covering_walks_tree(tree_from_code(code), d)


def tree_spectral_moment(t: Graph, d: int) -> int:
    """d-th spectral moment of a tree from its subtree census.

    Sums covering-walk coefficients against subtree counts for every subtree
    size up to min(d/2, edge count); equals the trace-based moment exactly.
    """
    if not t.is_tree():
        raise NotATreeError("tree_spectral_moment requires a tree")
    if d <= 0:
        raise ValueError("moment order must be positive")
    if d % 2 == 1:
        return 0
    total = 0
    for m in range(1, min(d // 2, t.edge_count) + 1):
        census = subtree_census(t, m)
        for code, count in census.counts.items():
            total += _covering_walks_by_code(code, d) * count
    return total


def hypertree_moment_scale(k: int, m: int, edge_count: int) -> Fraction:
    """Weight of the size-m subtree layer in a k-power hypertree moment."""
    if k < 2:
        raise ValueError("uniformity k must be >= 2")
    return (
        Fraction(1, 2) * (k - 1) ** ((edge_count - m) * (k - 1)) * k ** (m * (k - 2) + 1)
    )


def power_hypertree_moment(t: Graph, k: int, d: int) -> int:
    """d-th spectral moment of the k-power hypertree of a tree, exact.

    Zero unless k divides d; otherwise each subtree size m contributes its
    census weighted by covering walks of length 2d/k and the k-dependent
    scale factor.  The rational total is asserted integral.
    """
    if not t.is_tree():
        raise NotATreeError("power_hypertree_moment requires a tree")
    if k < 2:
        raise ValueError("uniformity k must be >= 2")
    if d <= 0:
        raise ValueError("moment order must be positive")
    if d % k != 0:
        return 0
    z = d // k
    total = Fraction(0)
    for m in range(1, min(z, t.edge_count) + 1):
        census = subtree_census(t, m)
        layer = sum(
            _covering_walks_by_code(code, 2 * z) * count
            for code, count in census.counts.items()
        )
        total += hypertree_moment_scale(k, m, t.edge_count) * layer
    assert total.denominator == 1, "hypertree moment must be an integer"
    return int(total)


@dataclass(frozen=True)
class SubtreeInvariant:
    """Census sum weighted by covering-walk coefficients: one high-ordered
    cospectral invariant of trees per (subtree size, walk length) pair."""

    m: int
    d: int
    value: int


def subtree_invariant(t: Graph, m: int, d: int) -> SubtreeInvariant:
    """Sum over m-edge subtree classes of coefficient times count, exact."""
    if not t.is_tree():
        raise NotATreeError("subtree_invariant requires a tree")
    if d % 2 == 1 or d <= 0:
        raise ValueError("d must be a positive even integer")
    if d < 2 * m:
        raise ValueError("d must be at least 2m for a nonvanishing layer")
    if m > t.edge_count:
        return SubtreeInvariant(m, d, 0)
    census = subtree_census(t, m)
    value = sum(
        _covering_walks_by_code(code, d) * count for code, count in census.counts.items()
    )
    return SubtreeInvariant(m, d, value)


# -- exact recovery of invariant differences from hypertree moments -------------


def vandermonde_matrix(ks: Sequence[int], edge_count: int) -> list[list[Fraction]]:
    """Coefficient matrix whose row for k scales the size-m layers, m=1..len(ks)."""
    z = len(ks)
    if len(set(ks)) != z:
        raise ValueError("uniformities must be pairwise distinct")
    if any(k < 2 for k in ks):
        raise ValueError("uniformities must be >= 2")
    rows = []
    for k in ks:
        f1 = hypertree_moment_scale(k, 1, edge_count)
        ratio = Fraction(k ** (k - 2), (k - 1) ** (k - 1))
        rows.append([f1 * ratio**j for j in range(z)])
    return rows


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over exact rationals; asserts a nonzero determinant."""
    z = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    det = Fraction(1)
    for col in range(z):
        pivot = next((r for r in range(col, z) if a[r][col] != 0), None)
        assert pivot is not None, "singular system (distinct uniformities exclude this)"
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(z):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    assert det != 0
    return [a[r][z] for r in range(z)]


def vandermonde_determinant(ks: Sequence[int], edge_count: int) -> Fraction:
    """Exact determinant of the recovery system's coefficient matrix."""
    matrix = vandermonde_matrix(ks, edge_count)
    z = len(matrix)
    a = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(z):
        pivot = next((r for r in range(col, z) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, z):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def vandermonde_forward(
    y: Sequence[int | Fraction], ks: Sequence[int], edge_count: int
) -> list[Fraction]:
    """Moment differences produced by injected per-size layer values."""
    matrix = vandermonde_matrix(ks, edge_count)
    return [sum((row[j] * y[j] for j in range(len(y))), Fraction(0)) for row in matrix]


def vandermonde_recover(
    moment_differences: Sequence[int | Fraction],
    ks: Sequence[int],
    edge_count: int,
) -> list[Fraction]:
    """Recover per-size invariant differences from hypertree moment differences.

    Solves the square system exactly in rationals.  When the right-hand side
    comes from genuine moment differences of two trees, entry m-1 equals the
    difference of their size-m subtree invariants.
    """
    if len(moment_differences) != len(ks):
        raise ValueError("need exactly one moment difference per uniformity")
    matrix = vandermonde_matrix(ks, edge_count)
    rhs = [Fraction(x) for x in moment_differences]
    return solve_exact(matrix, rhs)


# -- frozen coefficient tables ---------------------------------------------------

TABLE_TREE_NAMES = {
    3: ("P4", "S4"),
    4: ("P5", "Q5", "S5"),
    5: ("P6", "Q6", "R6", "H6", "J6", "S6"),
}

TABLE_WALK_LENGTHS = {3: (6, 8), 4: (8, 10, 12), 5: tuple(range(10, 21, 2))}

# Expected coefficient tables, frozen: rows follow TABLE_WALK_LENGTHS, columns
# follow TABLE_TREE_NAMES for each subtree size.
EXPECTED_COEFFICIENT_TABLES: dict[int, dict[int, tuple[int, ...]]] = {
    3: {6: (6, 12), 8: (32, 72)},
    4: {8: (8, 16, 48), 10: (60, 140, 480), 12: (300, 804, 3120)},
    5: {
        10: (10, 20, 20, 40, 60, 240),
        12: (96, 216, 228, 504, 792, 3600),
        14: (588, 1484, 1652, 3976, 6552, 33600),
        16: (2944, 8304, 9728, 25216, 43680, 252000),
        18: (13158, 41328, 50832, 140832, 257184, 1668240),
        20: (54730, 190800, 245880, 724320, 1398600, 10206000),
    },
}


def computed_coefficient_tables() -> dict[int, dict[int, tuple[int, ...]]]:
    """Recompute every table cell from the weighted-composition formula."""
    from .catalog import named_tree

    out: dict[int, dict[int, tuple[int, ...]]] = {}
    for m, names in TABLE_TREE_NAMES.items():
        trees = [named_tree(name) for name in names]
        out[m] = {
            d: tuple(covering_walks_tree(t, d) for t in trees)
            for d in TABLE_WALK_LENGTHS[m]
        }
    return out
