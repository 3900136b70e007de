"""Command-line interface.

One subcommand per capability: exact spectra and cospectrality, censuses and
coefficients, power-hypertree moments, base sets and high-order tests, the
named-graph catalog, cospectral-pair constructions, table reproduction, and
the cospectral-tree hunt.  Graphs are passed as graph6 strings or catalog
names.  Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, constructions, highorder, moments, report
from .census import DEFAULT_BUDGET, subtree_census, tree_canonical_code
from .errors import BudgetExceededError, HospecError
from .graphs import Graph, parse_graph6, to_graph6
from .hunt import HUNT_MAX_VERTICES, hunt
from .spectra import (
    DEFAULT_TOL,
    characteristic_polynomial,
    eigenvalues,
    is_cospectral,
    spectral_moment,
    spectral_radius,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_SMITH_SIZED = ("P", "C", "D", "DT")
_SMITH_FIXED = ("E6", "E7", "E8", "ET6", "ET7", "ET8")


def resolve_graph(token: str) -> Graph:
    """Catalog name (tree label, Smith family[:size], fixture) or graph6."""
    name = token.strip()
    upper = name.upper().replace("~", "T")
    if upper in catalog.named_tree_labels():
        return catalog.named_tree(upper)
    if upper in _SMITH_FIXED:
        return catalog.smith_graph(upper)
    if ":" in upper:
        fam, _, size = upper.partition(":")
        if fam in _SMITH_SIZED and size.isdigit():
            return catalog.smith_graph(fam, int(size))
    if upper in ("SCHWENK-WITNESS", "SCHWENK-FIGURE"):
        tree, _, _ = (
            catalog.schwenk_witness()
            if upper == "SCHWENK-WITNESS"
            else catalog.schwenk_figure_tree()
        )
        return tree
    return parse_graph6(name)


def emit(args, text_lines: list[str], json_obj: dict, csv_rows: tuple[list, list] | None):
    """Render one payload in the selected format to stdout."""
    if args.format == "json":
        json_obj = {"schema_version": SCHEMA_VERSION, **json_obj}
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    elif args.format == "csv":
        import csv as _csv

        writer = _csv.writer(sys.stdout)
        if csv_rows is None:
            raise ValueError("this command has no CSV form")
        header, rows = csv_rows
        writer.writerow(header)
        writer.writerows(rows)
    else:
        for line in text_lines:
            print(line)


# -- subcommand bodies -------------------------------------------------------------


def cmd_spectrum(args) -> int:
    g = resolve_graph(args.graph)
    spec = eigenvalues(g, args.tol)
    vals = list(spec.eigenvalues)
    emit(
        args,
        [f"n={g.n} m={g.edge_count}", "eigenvalues: " + " ".join(f"{v:.9f}" for v in vals)],
        {"command": "spectrum", "graph": g.to_json_obj(), "eigenvalues": vals, "tol": args.tol},
        (["index", "eigenvalue"], [[i, f"{v:.12g}"] for i, v in enumerate(vals)]),
    )
    return EXIT_OK


def cmd_charpoly(args) -> int:
    g = resolve_graph(args.graph)
    poly = characteristic_polynomial(g)
    emit(
        args,
        [str(poly)],
        {
            "command": "charpoly",
            "graph": g.to_json_obj(),
            "coefficients_low_to_high": list(poly.coefficients),
            "pretty": str(poly),
        },
        (["power", "coefficient"], [[p, c] for p, c in enumerate(poly.coefficients)]),
    )
    return EXIT_OK


def cmd_cospectral(args) -> int:
    g1, g2 = resolve_graph(args.graph1), resolve_graph(args.graph2)
    same = is_cospectral(g1, g2)
    emit(
        args,
        [f"cospectral: {str(same).lower()}"],
        {
            "command": "cospectral",
            "graphs": [g1.to_json_obj(), g2.to_json_obj()],
            "cospectral": same,
            "charpoly": list(characteristic_polynomial(g1).coefficients) if same else None,
        },
        (["cospectral"], [[str(same).lower()]]),
    )
    return EXIT_OK


def cmd_census(args) -> int:
    t = resolve_graph(args.tree)
    census = subtree_census(t, args.m, args.budget)
    names = catalog.tree_names_by_code()
    rows = [
        [code.hex(), names.get(code, ""), count]
        for code, count in sorted(census.counts.items())
    ]
    text = [f"subtrees with {args.m} edges: {census.total()} total"]
    text += [f"  {name or code_hex}: {count}" for code_hex, name, count in rows]
    emit(
        args,
        text,
        {"command": "census", **census.to_json_obj()},
        (["code", "name", "count"], rows),
    )
    return EXIT_OK


def cmd_coeff(args) -> int:
    g = resolve_graph(args.graph)
    if args.oracle:
        value = moments.covering_walks_oracle(g, args.d)
        route = "inclusion-exclusion"
    else:
        value = moments.covering_walks_tree(g, args.d)
        route = "weighted-composition"
    emit(
        args,
        [f"covering closed {args.d}-walks: {value}"],
        {
            "command": "coeff",
            "graph": g.to_json_obj(),
            "d": args.d,
            "value": value,
            "route": route,
        },
        (["d", "value", "route"], [[args.d, value, route]]),
    )
    return EXIT_OK


def cmd_moments(args) -> int:
    g = resolve_graph(args.graph)
    trace_value = spectral_moment(g, args.d)
    census_value = None
    ok = True
    if g.is_tree():
        census_value = moments.tree_spectral_moment(g, args.d)
        ok = census_value == trace_value
    text = [f"spectral moment d={args.d}: {trace_value}"]
    if census_value is not None:
        text.append(f"census decomposition: {census_value} ({'match' if ok else 'MISMATCH'})")
    emit(
        args,
        text,
        {
            "command": "moments",
            "graph": g.to_json_obj(),
            "d": args.d,
            "trace_moment": trace_value,
            "census_moment": census_value,
            "match": ok,
        },
        (["d", "trace_moment", "census_moment"], [[args.d, trace_value, census_value]]),
    )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_hyper_moment(args) -> int:
    t = resolve_graph(args.tree)
    value = moments.power_hypertree_moment(t, args.k, args.d)
    emit(
        args,
        [f"moment d={args.d} of the {args.k}-power hypertree: {value}"],
        {
            "command": "hyper-moment",
            "graph": t.to_json_obj(),
            "k": args.k,
            "d": args.d,
            "value": value,
        },
        (["k", "d", "value"], [[args.k, args.d, value]]),
    )
    return EXIT_OK


def cmd_base_set(args) -> int:
    g = resolve_graph(args.graph)
    regime = highorder.REGIME_K3 if args.regime == "k3" else highorder.REGIME_KGT3
    base = highorder.eigen_base_set(g, regime, args.tol, args.budget)
    rows = [
        [f"{e.value:.12g}", to_graph6(e.witness), e.closed_form or ""]
        for e in base.entries
    ]
    text = [f"base set ({regime}), {len(base.entries)} values:"]
    text += [
        f"  {e.value:.9f}  witness {to_graph6(e.witness)}"
        + (f"  = {e.closed_form}" if e.closed_form else "")
        for e in base.entries
    ]
    emit(
        args,
        text,
        {"command": "base-set", "graph": g.to_json_obj(), **base.to_json_obj()},
        (["beta_sq", "witness", "closed_form"], rows),
    )
    return EXIT_OK


def cmd_high_order_test(args) -> int:
    t1, t2 = resolve_graph(args.tree1), resolve_graph(args.tree2)
    verdict = highorder.high_order_tree_test(
        t1, t2, m_max=args.m, d_max=args.d, tol=args.tol, budget=args.budget
    )
    text = [
        f"cospectral (k=2): {verdict.cospectral_k2}",
        f"tree invariants equal: {verdict.tree_invariants_equal}",
        f"base sets equal: {verdict.base_sets_equal}",
        f"distinguished: {verdict.distinguished}"
        + (f" ({verdict.first_witness})" if verdict.first_witness else ""),
    ]
    emit(
        args,
        text,
        {
            "command": "high-order-test",
            "graphs": [t1.to_json_obj(), t2.to_json_obj()],
            **verdict.to_json_obj(),
        },
        (
            ["cospectral_k2", "tree_invariants_equal", "base_sets_equal", "witness"],
            [[
                verdict.cospectral_k2,
                verdict.tree_invariants_equal,
                verdict.base_sets_equal,
                verdict.first_witness or "",
            ]],
        ),
    )
    return EXIT_OK


def cmd_smith(args) -> int:
    g = catalog.smith_graph(args.family, args.size)
    radius = spectral_radius(g, args.tol)
    emit(
        args,
        [f"{args.family} size={args.size}: {to_graph6(g)} (n={g.n}, m={g.edge_count}, radius={radius:.9f})"],
        {
            "command": "smith",
            "family": args.family,
            "graph6": to_graph6(g),
            "graph": g.to_json_obj(),
            "spectral_radius": radius,
        },
        (["family", "graph6", "n", "m", "radius"], [[args.family, to_graph6(g), g.n, g.edge_count, f"{radius:.12g}"]]),
    )
    return EXIT_OK


def cmd_saltire(args) -> int:
    g1, g2 = catalog.saltire_pair()
    same = is_cospectral(g1, g2)
    b1 = highorder.eigen_base_set(g1, tol=args.tol)
    b2 = highorder.eigen_base_set(g2, tol=args.tol)
    bases_equal, witness = highorder.compare_base_sets(b1, b2)
    ok = same and not bases_equal
    text = [
        f"pair: {to_graph6(g1)}  {to_graph6(g2)}",
        f"cospectral: {same}",
        f"base sets differ: {not bases_equal}" + (f" ({witness})" if witness else ""),
    ]
    emit(
        args,
        text,
        {
            "command": "saltire",
            "pair": [to_graph6(g1), to_graph6(g2)],
            "cospectral": same,
            "base_sets_equal": bases_equal,
            "witness": witness,
        },
        (["graph6_a", "graph6_b", "cospectral", "base_sets_equal"],
         [[to_graph6(g1), to_graph6(g2), same, bases_equal]]),
    )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_schwenk(args) -> int:
    if args.attach is not None:
        f = constructions.RootedGraph(resolve_graph(args.attach), args.root)
    else:
        f = constructions.RootedGraph(catalog.star_graph(args.attach_degree + 1), 0)
    tree, u, v = (
        catalog.schwenk_witness() if args.fixture == "smallest" else catalog.schwenk_figure_tree()
    )
    pair = constructions.CospectralVertexPair(
        tree, u, v, constructions.vertices_are_similar(tree, u, v)
    )
    a, b = constructions.schwenk_pair(f, pair)
    gap = constructions.r6_count_difference(f, pair)
    cospec = is_cospectral(a, b)
    noniso = tree_canonical_code(a) != tree_canonical_code(b)
    ok = cospec and noniso
    text = [
        f"base tree: {to_graph6(tree)} pair ({u}, {v})",
        f"coalescences: {to_graph6(a)}  {to_graph6(b)}",
        f"cospectral: {cospec}  non-isomorphic: {noniso}",
        f"R6 count gap: {gap} (attachment root degree {f.root_degree})",
    ]
    emit(
        args,
        text,
        {
            "command": "schwenk",
            "base_tree": to_graph6(tree),
            "pair": [u, v],
            "coalescences": [to_graph6(a), to_graph6(b)],
            "cospectral": cospec,
            "non_isomorphic": noniso,
            "r6_count_gap": gap,
            "root_degree": f.root_degree,
        },
        (["tree_a", "tree_b", "cospectral", "non_isomorphic", "r6_gap", "root_degree"],
         [[to_graph6(a), to_graph6(b), cospec, noniso, gap, f.root_degree]]),
    )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_mate_search(args) -> int:
    g = resolve_graph(args.graph)
    mates = highorder.smith_mate_search(g, args.tol)
    text = [f"{len(mates)} cospectral mate(s)"] + [f"  {to_graph6(m)}" for m in mates]
    emit(
        args,
        text,
        {
            "command": "mate-search",
            "target": to_graph6(g),
            "mates": [to_graph6(m) for m in mates],
        },
        (["mate_graph6"], [[to_graph6(m)] for m in mates]),
    )
    return EXIT_OK


def cmd_tables(args) -> int:
    computed = moments.computed_coefficient_tables()
    expected = moments.EXPECTED_COEFFICIENT_TABLES
    names = moments.TABLE_TREE_NAMES
    mismatches = []
    for m in sorted(expected):
        for d in sorted(expected[m]):
            if computed[m][d] != expected[m][d]:
                mismatches.append((m, d, expected[m][d], computed[m][d]))
    header, rows = report.coefficient_table_rows(computed, names)
    text = []
    for m in sorted(computed):
        text.append(f"covering-walk coefficients, {m}-edge subtrees "
                    f"(columns: {', '.join(names[m])})")
        for d in sorted(computed[m]):
            text.append(f"  d={d:>2}: " + "  ".join(str(v) for v in computed[m][d]))
    if mismatches:
        text.append("MISMATCHES against the frozen tables:")
        for m, d, want, got in mismatches:
            text.append(f"  m={m} d={d}: expected {want}, computed {got}")
    else:
        text.append(f"all {sum(len(t) * len(names[m]) for m, t in computed.items())} "
                    "cells match the frozen tables")
    json_obj = {
        "command": "tables",
        "tables": {
            str(m): {str(d): dict(zip(names[m], computed[m][d])) for d in computed[m]}
            for m in computed
        },
        "matches_frozen": not mismatches,
        "mismatches": [
            {"m": m, "d": d, "expected": list(w), "computed": list(g)}
            for m, d, w, g in mismatches
        ],
    }
    emit(args, text, json_obj, (header, rows))
    if args.output_dir:
        outdir = Path(args.output_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        report.write_csv(outdir / "tables.csv", header, rows)
        report.write_wide_coefficient_tables(outdir, computed, names)
        report.write_json(outdir / "tables.json", {"schema_version": SCHEMA_VERSION, **json_obj})
        report.render_coefficient_tables(computed, names, outdir / "tables.png")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_hunt(args) -> int:
    rep = hunt(args.n, m_max=args.m, d_max=args.d, tol=args.tol, budget=args.budget)
    nonsingleton = rep.nonsingleton_buckets
    undistinguished = rep.undistinguished
    text = [
        f"n={rep.n}: {sum(len(b.members) for b in rep.buckets)} trees, "
        f"{len(rep.buckets)} spectral buckets, {len(nonsingleton)} with cospectral mates",
    ]
    for s in rep.separations:
        text.append(f"  [{s.bucket_index}] {s.member_a} vs {s.member_b}: {s.witness}")
    if undistinguished:
        text.append(f"UNDISTINGUISHED PAIRS: {len(undistinguished)} "
                    "(not separated by any implemented invariant)")
    else:
        text.append("every cospectral pair separated by an implemented invariant")
    header = ["bucket", "graph6", "bucket_size", "charpoly"]
    rows = [
        [i, member, len(b.members), " ".join(str(c) for c in b.charpoly)]
        for i, b in enumerate(rep.buckets)
        for member in b.members
    ]
    emit(args, text, {"command": "hunt", **rep.to_json_obj()}, (header, rows))
    if args.output_dir:
        outdir = Path(args.output_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        report.write_json(outdir / f"hunt_n{rep.n}.json", rep.to_json_obj())
        report.write_csv(outdir / f"hunt_n{rep.n}_buckets.csv", header, rows)
        report.write_csv(
            outdir / f"hunt_n{rep.n}_separations.csv",
            ["bucket", "member_a", "member_b", "distinguished", "witness"],
            [
                [s.bucket_index, s.member_a, s.member_b, s.verdict.distinguished, s.witness]
                for s in rep.separations
            ],
        )
        for i, bucket in enumerate(rep.buckets):
            if len(bucket.members) < 2:
                continue
            graphs = [parse_graph6(g6) for g6 in bucket.members]
            report.render_graph_grid(
                graphs,
                list(bucket.members),
                outdir / f"hunt_n{rep.n}_bucket{i}.png",
                suptitle=f"cospectral trees on {rep.n} vertices (bucket {i})",
            )
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hospec",
        description="Exact spectral and high-ordered (power-hypergraph) invariants "
        "of graphs and trees.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="numeric tolerance (default 1e-9)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="subgraph enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="numeric eigenvalues")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial")
    p.add_argument("graph")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("cospectral", parents=[common], help="exact cospectrality test")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("census", parents=[common], help="subtree census of a tree")
    p.add_argument("tree")
    p.add_argument("--m", type=int, required=True, help="subtree edge count")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("coeff", parents=[common],
                       help="edge-covering closed-walk count (moment coefficient)")
    p.add_argument("graph")
    p.add_argument("--d", type=int, required=True, help="walk length")
    p.add_argument("--oracle", action="store_true",
                   help="use the inclusion-exclusion oracle instead of the tree formula")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("moments", parents=[common],
                       help="exact spectral moment (dual-route check on trees)")
    p.add_argument("graph")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("hyper-moment", parents=[common],
                       help="spectral moment of the k-power hypertree")
    p.add_argument("tree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_hyper_moment)

    p = sub.add_parser("base-set", parents=[common],
                       help="squared subgraph eigenvalues with witnesses")
    p.add_argument("graph")
    p.add_argument("--regime", choices=("k3", "kgt3"), default="kgt3")
    p.set_defaults(func=cmd_base_set)

    p = sub.add_parser("high-order-test", parents=[common],
                       help="necessary conditions for high-ordered cospectrality")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--m", type=int, default=5, help="max subtree size for invariants")
    p.add_argument("--d", type=int, default=16, help="max walk length for invariants")
    p.set_defaults(func=cmd_high_order_test)

    p = sub.add_parser("smith", parents=[common], help="named Smith graph")
    p.add_argument("family", help="P, C, D, E6, E7, E8, DT, ET6, ET7, ET8")
    p.add_argument("size", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_smith)

    p = sub.add_parser("saltire", parents=[common],
                       help="the cospectral pair separated by base sets")
    p.set_defaults(func=cmd_saltire)

    p = sub.add_parser("schwenk", parents=[common],
                       help="cospectral non-isomorphic trees by coalescence")
    p.add_argument("--attach-degree", type=int, default=1,
                   help="attach a star with this root degree (default 1)")
    p.add_argument("--attach", default=None,
                   help="attach this tree (graph6 or name) instead of a star")
    p.add_argument("--root", type=int, default=0, help="root of --attach")
    p.add_argument("--fixture", choices=("figure", "smallest"), default="figure",
                   help="base tree: R6-law fixture (default) or smallest witness")
    p.set_defaults(func=cmd_schwenk)

    p = sub.add_parser("mate-search", parents=[common],
                       help="exhaustive cospectral mates in the Smith regime")
    p.add_argument("graph")
    p.set_defaults(func=cmd_mate_search)

    p = sub.add_parser("tables", parents=[common],
                       help="recompute and verify the frozen coefficient tables")
    p.add_argument("-o", "--output-dir", default=None,
                   help="write tables.csv/.json and tables.png here")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("hunt", parents=[common],
                       help="bucket all n-vertex trees by spectrum and separate")
    p.add_argument("n", type=int, help=f"vertex count (<= {HUNT_MAX_VERTICES})")
    p.add_argument("--m", type=int, default=5, help="max subtree size for invariants")
    p.add_argument("--d", type=int, default=16, help="max walk length for invariants")
    p.add_argument("-o", "--output-dir", default=None,
                   help="write report files and bucket figures here")
    p.set_defaults(func=cmd_hunt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HospecError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
