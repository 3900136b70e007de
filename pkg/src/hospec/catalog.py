"""Catalog of named graphs: small trees, Smith's graphs, the Saltire pair.

Tree names follow the coefficient tables (P = path, S = star, Q/R/H/J = the
remaining shapes, pinned by requiring the frozen tables to reproduce).  Smith
families are the connected graphs with spectral radius at most 2: paths,
cycles, D/E shapes, and their spectral-radius-exactly-2 extensions, each
validated numerically at construction.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import SpectralRadiusError
from .graphs import Graph, disjoint_union, parse_graph6
from .spectra import spectral_radius

RADIUS_TWO_TOL = 1e-9
RADIUS_BELOW_TWO_MARGIN = 1e-6


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 with n-1 leaves."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def spider_graph(*legs: int) -> Graph:
    """Center 0 with one path of each given length attached."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, frozenset(edges))


def _tree(n: int, *edges: tuple[int, int]) -> Graph:
    return Graph(n, frozenset(edges))


# Shapes behind the table column names.  Q5 is the 4-edge chair; Q6/R6 are the
# two 5-edge spiders with a degree-3 center (legs 1,1,3 and 1,2,2); H6 is the
# double star; J6 is the star with one subdivided edge.
_NAMED_TREES: dict[str, Graph] = {
    "P2": path_graph(2),
    "P3": path_graph(3),
    "P4": path_graph(4),
    "P5": path_graph(5),
    "P6": path_graph(6),
    "S4": star_graph(4),
    "S5": star_graph(5),
    "S6": star_graph(6),
    "Q5": spider_graph(1, 1, 2),
    "Q6": spider_graph(1, 1, 3),
    "R6": spider_graph(1, 2, 2),
    "H6": _tree(6, (0, 1), (0, 2), (0, 3), (1, 4), (1, 5)),
    "J6": spider_graph(1, 1, 1, 2),
}


def named_tree(name: str) -> Graph:
    """Catalog tree by its table label (case-insensitive): P2..P6, S4..S6,
    Q5, Q6, R6, H6, J6."""
    key = name.upper()
    if key not in _NAMED_TREES:
        raise KeyError(f"unknown tree name {name!r}; known: {sorted(_NAMED_TREES)}")
    return _NAMED_TREES[key]


def named_tree_labels() -> list[str]:
    return sorted(_NAMED_TREES)


def tree_names_by_code() -> dict[bytes, str]:
    from .census import tree_canonical_code

    return {tree_canonical_code(g): name for name, g in _NAMED_TREES.items()}


# -- Smith's graphs --------------------------------------------------------------

SMITH_FAMILIES = ("P", "C", "D", "E6", "E7", "E8", "DT", "ET6", "ET7", "ET8")


def _d_graph(v: int) -> Graph:
    """Path on v-2 vertices with two extra leaves on one end (v >= 4)."""
    if v < 4:
        raise ValueError("D-type needs at least 4 vertices")
    edges = [(i, i + 1) for i in range(v - 3)]
    edges += [(0, v - 2), (0, v - 1)]
    return Graph(v, frozenset(edges))


def _d_tilde_graph(v: int) -> Graph:
    """Path on v-4 vertices with two extra leaves on each end (v >= 5).

    At v=5 the path degenerates to a point and the result is the 4-leaf star.
    """
    if v < 5:
        raise ValueError("radius-2 D-type needs at least 5 vertices")
    core = v - 4
    edges = [(i, i + 1) for i in range(core - 1)]
    edges += [(0, core), (0, core + 1), (core - 1, core + 2), (core - 1, core + 3)]
    return Graph(v, frozenset(edges))


def smith_graph(family: str, size: int | None = None) -> Graph:
    """Connected graph with spectral radius at most 2, by family name.

    Families: P (path), C (cycle), D, E6, E7, E8, and the radius-exactly-2
    variants DT, ET6, ET7, ET8.  ``size`` is the vertex count for P/C/D/DT
    and must be omitted for the fixed-size E shapes.  Every constructed graph
    is checked numerically: radius exactly 2 for C/DT/ET, strictly below 2
    otherwise.
    """
    key = family.upper().replace("~", "T").replace("TILDE", "T")
    fixed = {
        "E6": spider_graph(1, 2, 2),
        "E7": spider_graph(1, 2, 3),
        "E8": spider_graph(1, 2, 4),
        "ET6": spider_graph(2, 2, 2),
        "ET7": spider_graph(1, 3, 3),
        "ET8": spider_graph(1, 2, 5),
    }
    if key in fixed:
        if size is not None and size != fixed[key].n:
            raise ValueError(f"{key} has a fixed size of {fixed[key].n} vertices")
        g = fixed[key]
    elif key == "P":
        if size is None:
            raise ValueError("P needs a vertex count")
        g = path_graph(size)
    elif key == "C":
        if size is None:
            raise ValueError("C needs a vertex count")
        g = cycle_graph(size)
    elif key == "D":
        if size is None:
            raise ValueError("D needs a vertex count")
        g = _d_graph(size)
    elif key == "DT":
        if size is None:
            raise ValueError("DT needs a vertex count")
        g = _d_tilde_graph(size)
    else:
        raise KeyError(f"unknown Smith family {family!r}; known: {SMITH_FAMILIES}")
    _validate_smith(key, g)
    return g


def _validate_smith(key: str, g: Graph) -> None:
    # closed-form families at large sizes are safe; check the rest numerically
    if g.n > 64:
        return
    radius = spectral_radius(g)
    if key in ("C", "DT", "ET6", "ET7", "ET8"):
        if abs(radius - 2.0) > RADIUS_TWO_TOL:
            raise SpectralRadiusError(f"{key} must have spectral radius 2", radius)
    else:
        if radius >= 2.0 - RADIUS_BELOW_TWO_MARGIN:
            raise SpectralRadiusError(f"{key} must have spectral radius below 2", radius)


def saltire_pair() -> tuple[Graph, Graph]:
    """The classic 5-vertex cospectral non-isomorphic pair:
    (4-cycle plus an isolated vertex, 4-leaf star)."""
    return disjoint_union(cycle_graph(4), Graph(1)), star_graph(5)


# -- frozen fixtures --------------------------------------------------------------


def load_fixtures() -> dict:
    with resources.files("hospec.data").joinpath("catalog.json").open("r") as fh:
        return json.load(fh)


def schwenk_witness() -> tuple[Graph, int, int]:
    """The smallest tree with a non-similar cospectral vertex pair, frozen
    from an exhaustive scan of all trees on up to 9 vertices."""
    fixtures = load_fixtures()
    entry = fixtures["schwenk_witness"]
    return parse_graph6(entry["tree"]), entry["u"], entry["v"]


def schwenk_figure_tree() -> tuple[Graph, int, int]:
    """The smallest tree whose cospectral pair satisfies the R6 coalescence
    law (the count shift equals the attachment root's degree), frozen from an
    exhaustive scan; the returned (u, v) orientation makes the shift positive."""
    fixtures = load_fixtures()
    entry = fixtures["schwenk_figure_tree"]
    return parse_graph6(entry["tree"]), entry["u"], entry["v"]
