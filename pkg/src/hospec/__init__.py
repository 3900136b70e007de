"""Exact spectral and high-ordered (power-hypergraph) invariants of graphs.

The library computes integer characteristic polynomials and spectral moments,
subtree censuses with canonical tree codes, edge-covering walk coefficients,
spectral moments of k-power hypertrees, squared-eigenvalue base sets of
subgraphs, exhaustive cospectral-mate searches in the Smith regime, and
Schwenk-style cospectral tree constructions.
"""

from .catalog import (
    named_tree,
    path_graph,
    saltire_pair,
    schwenk_figure_tree,
    schwenk_witness,
    smith_graph,
    spider_graph,
    star_graph,
    cycle_graph,
)
from .census import (
    EdgeSubgraph,
    SubtreeCensus,
    connected_edge_subgraphs,
    connected_induced_subgraphs,
    count_pattern,
    generate_free_trees,
    subtree_census,
    tree_canonical_code,
    tree_from_code,
    trees_are_isomorphic,
)
from .constructions import (
    CospectralVertexPair,
    RootedGraph,
    coalesce,
    cospectral_vertex_pairs,
    r6_count_difference,
    schwenk_pair,
)
from .errors import (
    BudgetExceededError,
    Graph6Error,
    HospecError,
    NotATreeError,
    SpectralRadiusError,
)
from .graphs import Graph, disjoint_union, parse_graph6, to_graph6, union_all
from .highorder import (
    EigenBase,
    HighOrderVerdict,
    PowerEigenvalue,
    eigen_base_set,
    high_order_tree_test,
    hypercycle_distinct_eigenvalues,
    hyperpath_distinct_eigenvalues,
    p3_c4_invariant,
    power_distinct_eigenvalues,
    smith_mate_search,
)
from .hunt import HuntReport, hunt
from .moments import (
    SubtreeInvariant,
    covering_walks_oracle,
    covering_walks_tree,
    power_hypertree_moment,
    subtree_invariant,
    tree_spectral_moment,
    vandermonde_forward,
    vandermonde_recover,
)
from .spectra import (
    IntPolynomial,
    Spectrum,
    characteristic_polynomial,
    eigenvalues,
    is_cospectral,
    spectral_moment,
    spectral_radius,
)

__version__ = "0.1.0"
