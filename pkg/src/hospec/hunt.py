"""Empirical probe for cospectral trees and their high-ordered separation.

Generates all free trees on n vertices, buckets them by exact characteristic
polynomial, and runs the high-ordered necessary conditions inside each
non-singleton bucket.  Undistinguished pairs are reported explicitly; the
probe never claims more than the implemented invariants show.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .census import DEFAULT_BUDGET, generate_free_trees
from .graphs import to_graph6
from .highorder import HighOrderVerdict, high_order_tree_test
from .spectra import DEFAULT_TOL, characteristic_polynomial

SCHEMA_VERSION = 1
HUNT_MAX_VERTICES = 14


@dataclass(frozen=True)
class HuntBucket:
    charpoly: tuple[int, ...]
    members: tuple[str, ...]  # graph6, sorted


@dataclass(frozen=True)
class PairSeparation:
    bucket_index: int
    member_a: str
    member_b: str
    verdict: HighOrderVerdict

    @property
    def witness(self) -> str:
        return self.verdict.first_witness or "undistinguished"


@dataclass(frozen=True)
class HuntReport:
    n: int
    m_max: int
    d_max: int
    buckets: tuple[HuntBucket, ...]
    separations: tuple[PairSeparation, ...]

    @property
    def nonsingleton_buckets(self) -> list[HuntBucket]:
        return [b for b in self.buckets if len(b.members) > 1]

    @property
    def undistinguished(self) -> list[PairSeparation]:
        return [s for s in self.separations if not s.verdict.distinguished]

    def to_json_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "m_max": self.m_max,
            "d_max": self.d_max,
            "buckets": [
                {"charpoly": list(b.charpoly), "members": list(b.members)}
                for b in self.buckets
            ],
            "separations": [
                {
                    "bucket": s.bucket_index,
                    "pair": [s.member_a, s.member_b],
                    "distinguished": s.verdict.distinguished,
                    "witness": s.verdict.first_witness,
                }
                for s in self.separations
            ],
        }


def hunt(
    n: int,
    m_max: int = 5,
    d_max: int = 16,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> HuntReport:
    """Bucket all free trees on n vertices by spectrum, then separate.

    Output ordering is canonical: members sort by graph6 string, buckets by
    their polynomial coefficients.
    """
    if not (1 <= n <= HUNT_MAX_VERTICES):
        raise ValueError(f"hunt is desk-scale only: 1 <= n <= {HUNT_MAX_VERTICES}")
    trees = {to_graph6(t): t for t in generate_free_trees(n - 1)}
    by_poly: dict[tuple[int, ...], list[str]] = {}
    for g6 in sorted(trees):
        coeffs = characteristic_polynomial(trees[g6]).coefficients
        by_poly.setdefault(coeffs, []).append(g6)
    buckets = tuple(
        HuntBucket(coeffs, tuple(sorted(members)))
        for coeffs, members in sorted(by_poly.items())
    )
    separations = []
    for index, bucket in enumerate(buckets):
        for a, b in combinations(bucket.members, 2):
            verdict = high_order_tree_test(
                trees[a], trees[b], m_max=m_max, d_max=d_max, tol=tol, budget=budget
            )
            separations.append(PairSeparation(index, a, b, verdict))
    return HuntReport(n, m_max, d_max, buckets, tuple(separations))
