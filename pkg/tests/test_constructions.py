"""Named graphs, cospectral vertices, coalescences, Schwenk pairs."""

import random

import pytest

from hospec.catalog import (
    cycle_graph,
    named_tree,
    path_graph,
    saltire_pair,
    schwenk_figure_tree,
    schwenk_witness,
    smith_graph,
    spider_graph,
    star_graph,
    load_fixtures,
)
from hospec.census import count_pattern, tree_canonical_code, trees_are_isomorphic
from hospec.constructions import (
    CospectralVertexPair,
    RootedGraph,
    coalesce,
    cospectral_vertex_pairs,
    delete_vertex,
    r6_count_difference,
    scan_cospectral_vertices,
    schwenk_pair,
    vertices_are_similar,
)
from hospec.errors import NotATreeError
from hospec.graphs import Graph
from hospec.spectra import characteristic_polynomial, is_cospectral, spectral_radius


def test_smith_examples():
    c6 = smith_graph("C", 6)
    assert c6.n == 6 and all(d == 2 for d in c6.degrees())
    et6 = smith_graph("ET6")
    assert et6.n == 7
    assert abs(spectral_radius(et6) - 2.0) < 1e-9
    e6 = smith_graph("E6")
    assert e6.n == 6
    assert spectral_radius(e6) < 2.0 - 1e-6


def test_smith_radius_split():
    radius_two = [smith_graph("C", 5), smith_graph("DT", 5), smith_graph("DT", 9),
                  smith_graph("ET6"), smith_graph("ET7"), smith_graph("ET8")]
    for g in radius_two:
        assert abs(spectral_radius(g) - 2.0) < 1e-9
    below = [smith_graph("P", 9), smith_graph("D", 4), smith_graph("D", 8),
             smith_graph("E6"), smith_graph("E7"), smith_graph("E8")]
    for g in below:
        assert spectral_radius(g) < 2.0 - 1e-6


def test_smith_shapes():
    assert trees_are_isomorphic(smith_graph("D", 4), star_graph(4))
    assert trees_are_isomorphic(smith_graph("DT", 5), star_graph(5))
    assert trees_are_isomorphic(smith_graph("E6"), spider_graph(1, 2, 2))
    assert trees_are_isomorphic(smith_graph("ET8"), spider_graph(1, 2, 5))


def test_smith_validation_errors():
    with pytest.raises(ValueError):
        smith_graph("C", 2)
    with pytest.raises(ValueError):
        smith_graph("DT", 4)
    with pytest.raises(KeyError):
        smith_graph("Z", 5)
    with pytest.raises(ValueError):
        smith_graph("E6", 7)


def test_saltire():
    g1, g2 = saltire_pair()
    assert (g1.n, g1.edge_count) == (5, 4)
    assert (g2.n, g2.edge_count) == (5, 4)
    assert is_cospectral(g1, g2)
    assert {len(c) for c in g1.components()} == {4, 1}
    assert g2.is_connected()


def test_p3_leaf_pair_similar():
    pairs = cospectral_vertex_pairs(path_graph(3))
    assert len(pairs) == 1
    assert pairs[0].similar
    assert {pairs[0].u, pairs[0].v} == {0, 2}


def test_star_leaves_similar():
    pairs = cospectral_vertex_pairs(star_graph(4))
    assert len(pairs) == 3  # all leaf pairs
    assert all(p.similar for p in pairs)


def test_witness_fixture_integrity():
    tree, u, v = schwenk_witness()
    assert tree.n == 9 and tree.is_tree()
    assert characteristic_polynomial(delete_vertex(tree, u)) == characteristic_polynomial(
        delete_vertex(tree, v)
    )
    assert not vertices_are_similar(tree, u, v)


def test_figure_fixture_integrity():
    tree, u, v = schwenk_figure_tree()
    assert tree.n == 11 and tree.is_tree()
    assert characteristic_polynomial(delete_vertex(tree, u)) == characteristic_polynomial(
        delete_vertex(tree, v)
    )
    assert not vertices_are_similar(tree, u, v)


def test_fixture_file_carries_schema_version():
    assert load_fixtures()["schema_version"] == 1


def test_scan_finds_witness_at_nine():
    found = scan_cospectral_vertices(9)
    assert len(found) == 1
    pair = found[0]
    assert pair.tree.n == 9
    witness_tree, u, v = schwenk_witness()
    assert tree_canonical_code(pair.tree) == tree_canonical_code(witness_tree)
    assert {pair.u, pair.v} == {u, v}


def test_coalesce_edge_to_p3_leaf_gives_p4():
    f = RootedGraph(path_graph(2), 0)
    t = RootedGraph(path_graph(3), 0)
    assert trees_are_isomorphic(coalesce(f, t), path_graph(4))


def test_coalesce_counts_add():
    rng = random.Random(44)
    for _ in range(50):
        n1, n2 = rng.randint(1, 7), rng.randint(1, 7)
        f = RootedGraph(
            Graph(n1, frozenset((rng.randrange(i), i) for i in range(1, n1))),
            rng.randrange(n1),
        )
        t = RootedGraph(
            Graph(n2, frozenset((rng.randrange(i), i) for i in range(1, n2))),
            rng.randrange(n2),
        )
        merged = coalesce(f, t)
        assert merged.n == n1 + n2 - 1
        assert merged.edge_count == f.graph.edge_count + t.graph.edge_count


def test_coalesce_at_similar_vertices_isomorphic():
    tree = star_graph(4)
    f = RootedGraph(path_graph(3), 1)
    out1 = coalesce(f, RootedGraph(tree, 1))
    out2 = coalesce(f, RootedGraph(tree, 2))
    assert trees_are_isomorphic(out1, out2)


def _figure_pair() -> CospectralVertexPair:
    tree, u, v = schwenk_figure_tree()
    return CospectralVertexPair(tree, u, v, vertices_are_similar(tree, u, v))


def test_schwenk_pair_cospectral_non_isomorphic():
    pair = _figure_pair()
    for attach_n in (2, 3, 4):
        f = RootedGraph(path_graph(attach_n), 0)
        a, b = schwenk_pair(f, pair)
        assert is_cospectral(a, b)
        assert tree_canonical_code(a) != tree_canonical_code(b)
        assert a.n == pair.tree.n + attach_n - 1


def test_schwenk_smallest_witness_with_pendant_edge():
    tree, u, v = schwenk_witness()
    pair = CospectralVertexPair(tree, u, v, vertices_are_similar(tree, u, v))
    a, b = schwenk_pair(RootedGraph(path_graph(2), 0), pair)
    assert a.n == b.n == 10
    assert is_cospectral(a, b)
    assert tree_canonical_code(a) != tree_canonical_code(b)


def test_schwenk_similar_pair_warns():
    tree = path_graph(3)
    pair = cospectral_vertex_pairs(tree)[0]
    with pytest.warns(UserWarning):
        schwenk_pair(RootedGraph(path_graph(2), 0), pair)


def test_schwenk_rejects_non_tree_attachment():
    pair = _figure_pair()
    with pytest.raises(NotATreeError):
        schwenk_pair(RootedGraph(cycle_graph(3), 0), pair)


def test_r6_gap_equals_root_degree():
    pair = _figure_pair()
    for degree in (1, 2, 3):
        f = RootedGraph(star_graph(degree + 1), 0)
        assert r6_count_difference(f, pair) == degree


def test_r6_signed_orientation_of_fixture():
    """The frozen fixture is oriented so attaching at v gains R6 subtrees."""
    tree, u, v = schwenk_figure_tree()
    pair = CospectralVertexPair(tree, u, v, False)
    r6 = named_tree("R6")
    f = RootedGraph(star_graph(3), 0)
    at_u, at_v = schwenk_pair(f, pair)
    assert count_pattern(at_v, r6) - count_pattern(at_u, r6) == 2


def test_nine_vertex_witness_pairs_violate_r6_law():
    """The smallest witness shifts Q6/H6 counts instead; the R6 law picks the
    11-vertex fixture (see ledger)."""
    tree, u, v = schwenk_witness()
    pair = CospectralVertexPair(tree, u, v, False)
    f = RootedGraph(star_graph(2), 0)
    assert r6_count_difference(f, pair) == 0
