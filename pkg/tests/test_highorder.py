"""Base sets, closed forms, verdicts, mate search."""

import math
import random

import pytest

from hospec.catalog import (
    cycle_graph,
    path_graph,
    saltire_pair,
    smith_graph,
    star_graph,
)
from hospec.errors import SpectralRadiusError
from hospec.graphs import Graph, disjoint_union, to_graph6
from hospec.highorder import (
    REGIME_K3,
    REGIME_KGT3,
    classify_smith_component,
    closed_form_discrepancies,
    compare_base_sets,
    eigen_base_set,
    high_order_tree_test,
    hypercycle_base_values,
    hypercycle_distinct_eigenvalues,
    hyperpath_distinct_eigenvalues,
    p3_c4_invariant,
    power_distinct_eigenvalues,
    smith_component_multisets,
    smith_mate_search,
)
from hospec.spectra import is_cospectral

GOLDEN = (1 + math.sqrt(5)) / 2


def approx_set(values, want, tol=1e-8):
    return len(values) == len(want) and all(
        abs(a - b) <= tol for a, b in zip(sorted(values), sorted(want))
    )


def test_base_single_edge():
    base = eigen_base_set(path_graph(2))
    assert approx_set(base.values, [1.0])


def test_base_star():
    base = eigen_base_set(star_graph(5))
    assert approx_set(base.values, [0, 1, 2, 3, 4])


def test_base_saltire_union():
    g = disjoint_union(cycle_graph(4), Graph(1))
    want = [0, (3 - math.sqrt(5)) / 2, 1, 2, (3 + math.sqrt(5)) / 2, 4]
    assert approx_set(eigen_base_set(g).values, want)


def test_base_witnesses_and_closed_forms():
    base = eigen_base_set(star_graph(5))
    by_value = {round(e.value): e for e in base.entries}
    assert by_value[1].witness.edge_count == 1
    assert by_value[4].closed_form == "4"
    assert to_graph6(by_value[3].witness) == to_graph6(star_graph(4))


def test_base_monotone_under_subgraphs():
    host = smith_graph("DT", 9)
    sub = path_graph(5)  # subtree of the core path
    b_host = eigen_base_set(host)
    b_sub = eigen_base_set(sub)
    for value in b_sub.values:
        assert b_host.contains(value)


def test_regimes_coincide_on_trees_except_zero():
    rng = random.Random(21)
    for _ in range(8):
        n = rng.randint(2, 8)
        t = Graph(n, frozenset((rng.randrange(i), i) for i in range(1, n)))
        all_vals = set()
        induced = eigen_base_set(t, REGIME_K3)
        edge_based = eigen_base_set(t, REGIME_KGT3)
        for v in edge_based.values:
            assert induced.contains(v)
        for v in induced.values:
            if v > 1e-9:
                assert edge_based.contains(v)


def test_power_distinct_count():
    base = eigen_base_set(star_graph(5))
    for k in (3, 4, 5, 7):
        vals = power_distinct_eigenvalues(star_graph(5), k)
        nonzero = sum(1 for v in base.values if v > 1e-9)
        assert len(vals) == k * nonzero + 1


def test_power_k3_uses_induced_subgraphs():
    # induced connected subgraphs of the 3-vertex path: P1 (0), P2 (1), P3 (2, 0)
    vals = power_distinct_eigenvalues(path_graph(3), 3)
    bases = sorted({round(v.base, 9) for v in vals})
    assert bases == [0.0, 1.0, 2.0]
    assert len(vals) == 3 * 2 + 1


def test_power_single_hyperedge_roots_of_unity():
    import cmath

    vals = power_distinct_eigenvalues(path_graph(2), 5)
    assert len(vals) == 5
    points = sorted(
        (round(v.complex_value().real, 9), round(v.complex_value().imag, 9))
        for v in vals
    )
    want = sorted(
        (round(cmath.exp(2j * cmath.pi * t / 5).real, 9), round(cmath.exp(2j * cmath.pi * t / 5).imag, 9))
        for t in range(5)
    )
    assert points == want


def test_hyperpath_k2_reduces_to_path_spectrum():
    n = 6
    vals = hyperpath_distinct_eigenvalues(n, 2)
    reals = sorted(round(v.complex_value().real, 9) for v in vals)
    # distinct classical path eigenvalues over all subpaths, plus 0 from j=1
    want = {0.0}
    for j in range(1, n + 1):
        want.update(2 * math.cos(math.pi * t / (j + 1)) for t in range(1, j + 1))
    assert reals == sorted(round(v, 9) for v in sorted(set(round(w, 12) for w in want)))


def test_hypercycle_contains_two_to_the_2_over_k():
    vals = hypercycle_base_values(5)
    assert any(abs(v - 4.0) < 1e-9 for v in vals)  # r = n gives 2cos(2pi) = 2
    eigs = hypercycle_distinct_eigenvalues(5, 4)
    assert any(abs(v.base - 4.0) < 1e-9 for v in eigs)
    with pytest.raises(ValueError):
        hypercycle_distinct_eigenvalues(5, 3)


def test_hyperpath_formula_matches_enumeration_for_long_paths():
    # for n >= 3 the only formula-vs-enumeration gap can be the j=1 zero,
    # and paths contain P3, so even that vanishes
    for n in (3, 4, 5, 6):
        report = closed_form_discrepancies("path", n)
        assert report["only_closed_form"] == []
        assert report["only_enumeration"] == []


def test_hyperpath_formula_discrepancy_on_single_edge():
    report = closed_form_discrepancies("path", 2)
    assert approx_set(report["only_closed_form"], [0.0])
    assert report["only_enumeration"] == []


def test_hypercycle_formula_omits_spanning_path():
    # the closed form indexes paths only up to n-1 vertices; enumeration sees
    # the spanning path of the cycle as well; report, never patch
    report = closed_form_discrepancies("cycle", 4)
    assert report["only_closed_form"] == []
    want_missing = [(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2]
    assert approx_set(report["only_enumeration"], want_missing)


def test_p3_c4_invariant_examples():
    for n in range(2, 8):
        dt = smith_graph("DT", n + 4)
        assert p3_c4_invariant(dt) == n + 4
        mate = disjoint_union(cycle_graph(4), path_graph(n))
        assert p3_c4_invariant(mate) == n + 4
    assert p3_c4_invariant(star_graph(5)) == 6


def test_p3_c4_invariant_matches_enumeration():
    from hospec.census import connected_edge_subgraphs

    rng = random.Random(10)
    for _ in range(12):
        n = rng.randint(2, 7)
        g = Graph(
            n,
            frozenset(
                (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
            ),
        )
        p3 = c4 = 0
        if g.edge_count >= 2:
            for sub in connected_edge_subgraphs(g, min(4, g.edge_count)):
                sg = sub.as_graph()
                if sg.n == 3 and sg.edge_count == 2:
                    p3 += 1
                elif sg.n == 4 and sg.edge_count == 4 and all(d == 2 for d in sg.degrees()):
                    c4 += 1
        assert p3_c4_invariant(g) == p3 + 2 * c4


def test_verdict_identical_relabeled():
    rng = random.Random(13)
    t = Graph(9, frozenset((rng.randrange(i), i) for i in range(1, 9)))
    perm = list(range(9))
    rng.shuffle(perm)
    verdict = high_order_tree_test(t, t.relabel(dict(enumerate(perm))))
    assert verdict.cospectral_k2
    assert verdict.tree_invariants_equal
    assert verdict.base_sets_equal
    assert not verdict.distinguished
    assert verdict.first_witness is None


def test_verdict_p4_vs_s4():
    verdict = high_order_tree_test(path_graph(4), star_graph(4))
    assert not verdict.cospectral_k2
    assert verdict.distinguished
    assert "characteristic" in verdict.first_witness


def test_verdict_schwenk_pair_distinguished_with_r6_witness():
    from hospec.catalog import schwenk_figure_tree
    from hospec.constructions import (
        CospectralVertexPair,
        RootedGraph,
        schwenk_pair,
        vertices_are_similar,
    )

    tree, u, v = schwenk_figure_tree()
    pair = CospectralVertexPair(tree, u, v, vertices_are_similar(tree, u, v))
    a, b = schwenk_pair(RootedGraph(path_graph(2), 0), pair)
    verdict = high_order_tree_test(a, b)
    assert verdict.cospectral_k2
    assert verdict.tree_invariants_equal is False
    assert verdict.distinguished
    assert "R6" in verdict.first_witness


def test_saltire_base_sets_differ_with_witness():
    g1, g2 = saltire_pair()
    assert is_cospectral(g1, g2)
    b1, b2 = eigen_base_set(g1), eigen_base_set(g2)
    equal, witness = compare_base_sets(b1, b2)
    assert not equal and witness is not None
    golden_sq = (3 + math.sqrt(5)) / 2
    assert b1.contains(golden_sq)
    assert not b2.contains(golden_sq)
    assert b2.margin(golden_sq) > 0.1


def test_smith_dhs_witnesses():
    for v in range(8, 13):
        n = v - 4
        dt = smith_graph("DT", v)
        mate = disjoint_union(cycle_graph(4), path_graph(n))
        witness = (2 * math.cos(math.pi / (2 * n + 2))) ** 2
        b_dt = eigen_base_set(dt)
        b_mate = eigen_base_set(mate)
        assert b_dt.contains(witness)
        assert not b_mate.contains(witness)
        assert b_mate.margin(witness) > 1e-6
    et6 = smith_graph("ET6")
    mate = disjoint_union(cycle_graph(6), Graph(1))
    witness = 2 + math.sqrt(2)
    assert eigen_base_set(et6).contains(witness)
    assert eigen_base_set(mate).margin(witness) > 1e-6


def test_classify_components():
    assert classify_smith_component(cycle_graph(5)) == ("C", 5)
    assert classify_smith_component(path_graph(4)) == ("P", 4)
    assert classify_smith_component(star_graph(4)) == ("D", 4)
    assert classify_smith_component(star_graph(5)) == ("DT", 5)
    assert classify_smith_component(smith_graph("ET7")) == ("ET7", 8)
    with pytest.raises(SpectralRadiusError):
        classify_smith_component(Graph(4, frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)})))


def test_multisets_cover_saltire_size():
    tags = smith_component_multisets(5, 4)
    assert (("C", 4), ("P", 1)) in tags
    assert (("DT", 5),) in tags


def test_mate_search_dtilde():
    for v in range(8, 13):
        dt = smith_graph("DT", v)
        mates = smith_mate_search(dt)
        want = disjoint_union(cycle_graph(4), path_graph(v - 4))
        assert [to_graph6(m) for m in mates] == [to_graph6(want)]


def test_mate_search_etilde6():
    mates = smith_mate_search(smith_graph("ET6"))
    want = disjoint_union(cycle_graph(6), Graph(1))
    assert [to_graph6(m) for m in mates] == [to_graph6(want)]


def test_mate_search_is_symmetric():
    mate = disjoint_union(cycle_graph(4), path_graph(5))
    found = smith_mate_search(mate)
    assert [to_graph6(m) for m in found] == [to_graph6(smith_graph("DT", 9))]


def test_mate_search_paths_are_determined():
    for n in range(1, 13):
        assert smith_mate_search(path_graph(n)) == []


def test_mate_search_rejects_large_radius():
    k5 = Graph(5, frozenset((i, j) for i in range(5) for j in range(i + 1, 5)))
    with pytest.raises(SpectralRadiusError):
        smith_mate_search(k5)


def test_cr_invariant_equal_on_all_cospectral_pairs_seen():
    g1, g2 = saltire_pair()
    assert p3_c4_invariant(g1) == p3_c4_invariant(g2)
    for v in range(8, 12):
        dt = smith_graph("DT", v)
        mate = disjoint_union(cycle_graph(4), path_graph(v - 4))
        assert p3_c4_invariant(dt) == p3_c4_invariant(mate)
