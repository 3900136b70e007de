"""Subgraph enumeration, canonical codes, free-tree generation."""

import random
from itertools import combinations

import pytest

from hospec.catalog import named_tree, path_graph, star_graph, cycle_graph
from hospec.census import (
    canonical_graph_key,
    connected_edge_subgraphs,
    connected_induced_subgraphs,
    count_pattern,
    generate_free_trees,
    graphs_are_isomorphic,
    subtree_census,
    tree_canonical_code,
    tree_from_code,
)
from hospec.errors import BudgetExceededError, NotATreeError
from hospec.graphs import Graph

# unlabeled free trees on 1..10 vertices
KNOWN_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def brute_force_connected_edge_subsets(g: Graph, max_edges: int) -> set[frozenset]:
    """Independent oracle: filter every edge subset for connectivity."""
    edges = g.sorted_edges()
    out = set()
    for k in range(1, max_edges + 1):
        for subset in combinations(edges, k):
            sub = g.edge_subgraph(subset)
            if sub.is_connected():
                out.add(frozenset(subset))
    return out


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = frozenset((rng.randrange(i), i) for i in range(1, n))
    return Graph(n, edges)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(dict(enumerate(perm)))


def test_enumeration_examples():
    assert sum(1 for _ in connected_edge_subgraphs(path_graph(3), 2)) == 3
    assert sum(1 for _ in connected_edge_subgraphs(cycle_graph(4), 4)) == 13
    assert sum(1 for _ in connected_edge_subgraphs(star_graph(5), 4)) == 15


def test_enumeration_matches_brute_force():
    rng = random.Random(42)
    for _ in range(25):
        n = rng.randint(2, 7)
        g = Graph(
            n,
            frozenset(
                (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
            ),
        )
        cap = rng.randint(1, max(1, g.edge_count))
        mine = {sub.edges for sub in connected_edge_subgraphs(g, cap)}
        assert mine == brute_force_connected_edge_subsets(g, cap)


def test_enumeration_deterministic_and_unique():
    g = cycle_graph(6)
    first = [sub.edges for sub in connected_edge_subgraphs(g, 6)]
    second = [sub.edges for sub in connected_edge_subgraphs(g, 6)]
    assert first == second
    assert len(first) == len(set(first))


def test_budget_error():
    with pytest.raises(BudgetExceededError):
        list(connected_edge_subgraphs(cycle_graph(8), 8, budget=10))


def test_induced_subsets_include_singletons():
    subsets = list(connected_induced_subgraphs(path_graph(3)))
    assert frozenset({0}) in subsets
    assert frozenset({0, 1, 2}) in subsets
    assert len(subsets) == 6  # 3 singletons, 2 edges, 1 whole path


def test_code_invariant_under_relabeling():
    rng = random.Random(8)
    for _ in range(30):
        t = random_tree(rng, 10)
        assert tree_canonical_code(t) == tree_canonical_code(shuffled(t, rng))


def test_code_separates_path_star():
    assert tree_canonical_code(path_graph(4)) != tree_canonical_code(star_graph(4))


def test_six_codes_on_six_vertices():
    codes = {tree_canonical_code(t) for t in generate_free_trees(5)}
    assert len(codes) == 6


def test_code_roundtrip():
    rng = random.Random(12)
    for _ in range(20):
        t = random_tree(rng, rng.randint(1, 12))
        code = tree_canonical_code(t)
        rebuilt = tree_from_code(code)
        assert rebuilt.n == t.n
        assert tree_canonical_code(rebuilt) == code


def test_code_rejects_non_tree():
    with pytest.raises(NotATreeError):
        tree_canonical_code(cycle_graph(4))


def test_census_examples():
    census = subtree_census(path_graph(5), 2)
    assert census.counts == {tree_canonical_code(path_graph(3)): 3}
    census = subtree_census(star_graph(5), 3)
    assert census.counts == {tree_canonical_code(star_graph(4)): 4}
    census = subtree_census(path_graph(6), 5)
    assert census.counts == {tree_canonical_code(path_graph(6)): 1}


def test_census_total_matches_enumeration():
    rng = random.Random(77)
    for _ in range(10):
        t = random_tree(rng, rng.randint(3, 9))
        for m in range(1, t.edge_count + 1):
            total = subtree_census(t, m).total()
            direct = sum(
                1 for sub in connected_edge_subgraphs(t, m) if len(sub.edges) == m
            )
            assert total == direct


def test_count_pattern_examples():
    assert count_pattern(path_graph(5), path_graph(3)) == 3
    rng = random.Random(4)
    for _ in range(10):
        t = random_tree(rng, rng.randint(2, 9))
        assert count_pattern(t, path_graph(2)) == t.edge_count


def test_count_pattern_relabel_invariant():
    rng = random.Random(31)
    t = random_tree(rng, 9)
    pattern = named_tree("Q5")
    base = count_pattern(t, pattern)
    for _ in range(5):
        assert count_pattern(shuffled(t, rng), shuffled(pattern, rng)) == base


def test_free_tree_counts_against_known():
    for n, want in enumerate(KNOWN_TREE_COUNTS, start=1):
        assert len(generate_free_trees(n - 1)) == want


def test_free_trees_unique_codes():
    for m in range(0, 8):
        trees = generate_free_trees(m)
        codes = {tree_canonical_code(t) for t in trees}
        assert len(codes) == len(trees)
        assert all(t.edge_count == m for t in trees)


def test_free_trees_against_prufer_oracle():
    # independent route: decode every Prufer sequence, dedup by code
    for n in range(3, 8):
        seen = set()
        for idx in range(n ** (n - 2)):
            seq = []
            x = idx
            for _ in range(n - 2):
                seq.append(x % n)
                x //= n
            degree = [1] * n
            for s in seq:
                degree[s] += 1
            edges = []
            seq_iter = list(seq)
            leaves = sorted(v for v in range(n) if degree[v] == 1)
            import heapq

            heapq.heapify(leaves)
            deg = degree[:]
            for s in seq_iter:
                leaf = heapq.heappop(leaves)
                edges.append((leaf, s))
                deg[s] -= 1
                if deg[s] == 1:
                    heapq.heappush(leaves, s)
            u = heapq.heappop(leaves)
            v = heapq.heappop(leaves)
            edges.append((u, v))
            seen.add(tree_canonical_code(Graph(n, frozenset(edges))))
        assert len(seen) == KNOWN_TREE_COUNTS[n - 1]


def test_free_tree_counts_against_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(2, 11):
        assert len(generate_free_trees(n - 1)) == sum(
            1 for _ in nx.nonisomorphic_trees(n)
        )


def test_named_trees_appear_once_in_generation():
    by_size = {}
    for name in ("P2", "P3", "P4", "S4", "P5", "Q5", "S5", "P6", "Q6", "R6", "H6", "J6", "S6"):
        t = named_tree(name)
        by_size.setdefault(t.edge_count, []).append((name, tree_canonical_code(t)))
    for m, entries in by_size.items():
        codes = [code for _, code in entries]
        assert len(set(codes)) == len(codes)
        generated = [tree_canonical_code(t) for t in generate_free_trees(m)]
        for name, code in entries:
            assert generated.count(code) == 1, name


def test_canonical_graph_key_complete_on_small_graphs():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 6)
        g = Graph(
            n,
            frozenset(
                (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
            ),
        )
        assert canonical_graph_key(g) == canonical_graph_key(shuffled(g, rng))
    # non-isomorphic pairs with equal degree sequences
    assert canonical_graph_key(cycle_graph(6)) != canonical_graph_key(
        Graph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
    )
    assert graphs_are_isomorphic(cycle_graph(4), Graph(4, frozenset({(0, 2), (2, 1), (1, 3), (3, 0)})))
