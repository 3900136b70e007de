"""Exact characteristic polynomials, spectral moments, numeric eigenvalues.

Cospectrality is decided on exact integer characteristic polynomials; no
floating point touches that path.  Numeric eigenvalues come from a symmetric
eigensolver and carry an explicit tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError
from .graphs import Graph

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self):
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficient(power)
            if c == 0 and self.degree > 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            if power == 0:
                body = f"{mag}"
            else:
                xs = "x" if power == 1 else f"x^{power}"
                body = xs if mag == 1 else f"{mag}{xs}"
            terms.append(f"{sign} {body}" if terms else f"{sign}{body}")
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues, ascending, with the solver tolerance."""

    eigenvalues: tuple[float, ...]
    tol: float

    def radius(self) -> float:
        return max((abs(x) for x in self.eigenvalues), default=0.0)


def characteristic_polynomial(g: Graph) -> IntPolynomial:
    """Exact char poly of the adjacency matrix, det(xI - A).

    Faddeev-LeVerrier recurrence over Python integers; every division is
    asserted exact, so the result is reliable for cospectrality tests.
    """
    n = g.n
    if n == 0:
        return IntPolynomial((1,))
    a = g.adjacency_rows()
    adj = [[(j, 1) for j, x in enumerate(row) if x] for row in a]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1 = I
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        am = [[sum(m[j][c] for j, _ in adj[i]) for c in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        assert trace % k == 0, "Faddeev-LeVerrier trace not divisible"
        c = -(trace // k)
        coeffs[n - k] = c
        if k < n:
            m = am
            for i in range(n):
                m[i][i] += c
    return IntPolynomial(tuple(coeffs))


def spectral_moment(g: Graph, d: int) -> int:
    """Sum of d-th powers of all eigenvalues = closed d-walk count, exact."""
    if d < 0:
        raise ValueError("moment order must be non-negative")
    return spectral_moments_upto(g, d)[d]


def spectral_moments_upto(g: Graph, d_max: int) -> list[int]:
    """Exact moments for every order 0..d_max in one pass of matrix powers."""
    n = g.n
    adj = g.adjacency()
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    out = [n]
    for _ in range(d_max):
        power = [
            [sum(power[j][c] for j in adj[i]) for c in range(n)] for i in range(n)
        ]
        out.append(sum(power[i][i] for i in range(n)))
    return out


def eigenvalues(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """All adjacency eigenvalues via a symmetric eigensolver, ascending."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if g.n == 0:
        return Spectrum((), tol)
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        # residual of the best effort is unknown here; report the matrix norm
        raise EigensolverError(f"eigensolver failed: {exc}", float(np.abs(a).max()))
    return Spectrum(tuple(float(x) for x in vals), tol)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return eigenvalues(g, tol).radius()


def is_cospectral(g1: Graph, g2: Graph) -> bool:
    """Exact test: identical integer characteristic polynomials."""
    return characteristic_polynomial(g1) == characteristic_polynomial(g2)


def path_eigenvalues(n: int) -> list[float]:
    """Closed form for the path on n vertices: 2cos(pi t/(n+1)), t=1..n."""
    return [2.0 * math.cos(math.pi * t / (n + 1)) for t in range(1, n + 1)]


def cycle_eigenvalues(n: int) -> list[float]:
    """Closed form for the cycle on n vertices: 2cos(2 pi r/n), r=1..n."""
    return [2.0 * math.cos(2.0 * math.pi * r / n) for r in range(1, n + 1)]
