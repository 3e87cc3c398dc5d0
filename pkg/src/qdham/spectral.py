"""Perron root of the distance signless Laplacian, its lower bounds, quotient
matrices of equitable partitions, and the cubic characteristic polynomials of
the two one-parameter exception families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .errors import BracketError, InvalidParameter, NonEquitableError, NoConvergence
from .graph import Graph
from .metric import DistanceData, QDMatrix, all_pairs_distances, qd_matrix

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000


@dataclass(frozen=True)
class SpectralConfig:
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER


@dataclass(frozen=True, eq=False)
class SpectralEstimate:
    rho: float
    vector: np.ndarray
    residual: float
    iterations: int


def spectral_radius(
    q: Union[QDMatrix, np.ndarray],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    start: Optional[np.ndarray] = None,
) -> SpectralEstimate:
    """Largest eigenvalue of a nonnegative irreducible symmetric matrix by power iteration.

    Starts from the normalised all-ones vector (or ``start``, which must be
    positive) and stops once the max-norm of ``Qx - rho x`` drops to ``tol``,
    with ``rho`` the Rayleigh quotient.
    """
    a = np.asarray(q.q if isinstance(q, QDMatrix) else q, dtype=np.float64)
    n = a.shape[0]
    x = np.ones(n) if start is None else np.asarray(start, dtype=np.float64)
    x = x / np.linalg.norm(x)
    if n == 1:
        return SpectralEstimate(float(a[0, 0]), x, 0.0, 0)
    rho, residual = 0.0, math.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            return SpectralEstimate(rho, x, residual, it)
        x = y / np.linalg.norm(y)
    raise NoConvergence(rho, residual, max_iter)


def rho_d(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(qd_matrix(all_pairs_distances(g)), tol).rho


def eigen_equation_residual(d: DistanceData, est: SpectralEstimate) -> float:
    """``max_u |(rho - Tr(u)) x_u - sum_v d(u,v) x_v|``."""
    x = est.vector
    return float(np.max(np.abs((est.rho - d.tr) * x - d.dist @ x)))


# --- lower bounds -------------------------------------------------------------


def lower_bound_bipartite(order: int) -> float:
    """Lower bound on the spectral radius of a connected bipartite graph of the given order."""
    if order < 2:
        raise InvalidParameter(f"bipartite bound needs order >= 2, got {order}")
    if order % 2 == 0:
        return float(3 * order - 4)
    return (5 * order - 8 + math.sqrt(order * order + 8)) / 2


def lower_bound_sigma(d: DistanceData) -> float:
    """``4 sigma / n``, attained exactly by transmission-regular graphs."""
    return 4 * d.sigma / d.n


# --- equitable quotients ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PartitionQuotient:
    classes: tuple[tuple[int, ...], ...]
    B: np.ndarray

    def largest_eigenvalue(self) -> float:
        return float(np.max(np.linalg.eigvals(self.B.astype(np.float64)).real))


def quotient_matrix(
    q: QDMatrix, d: DistanceData, classes: Sequence[Sequence[int]]
) -> PartitionQuotient:
    cls = tuple(tuple(c) for c in classes)
    flat = sorted(v for c in cls for v in c)
    if flat != list(range(d.n)) or any(not c for c in cls):
        raise InvalidParameter("classes must partition the vertex set into nonempty parts")
    k = len(cls)
    B = np.zeros((k, k), dtype=np.int64)
    for i, ci in enumerate(cls):
        for j, cj in enumerate(cls):
            sums = d.dist[np.ix_(ci, cj)].sum(axis=1)
            bad = np.nonzero(sums != sums[0])[0]
            if bad.size:
                w = int(bad[0])
                raise NonEquitableError(i, j, ci[0], ci[w], int(sums[0]), int(sums[w]))
            B[i, j] = int(q.q[ci[0], list(cj)].sum())
    return PartitionQuotient(cls, B)


def transmission_classes(d: DistanceData) -> list[list[int]]:
    """Group vertices by transmission value, in increasing order of transmission."""
    groups: dict[int, list[int]] = {}
    for v, t in enumerate(d.tr.tolist()):
        groups.setdefault(t, []).append(v)
    return [groups[t] for t in sorted(groups)]


# --- cubics -------------------------------------------------------------------


@dataclass(frozen=True)
class Cubic:
    """Monic cubic ``x^3 + c2 x^2 + c1 x + c0``."""

    c2: int
    c1: int
    c0: int

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return (1, self.c2, self.c1, self.c0)

    def __call__(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x):
        return (3 * x + 2 * self.c2) * x + self.c1

    def scale(self, x: float) -> float:
        ax = abs(x)
        return ax**3 + abs(self.c2) * ax**2 + abs(self.c1) * ax + abs(self.c0)

    def critical_points(self) -> Optional[tuple[float, float]]:
        disc = self.c2 * self.c2 - 3 * self.c1
        if disc < 0:
            return None
        r = math.sqrt(disc)
        return ((-self.c2 - r) / 3, (-self.c2 + r) / 3)

    def derivative_discriminant(self) -> int:
        return self.c2 * self.c2 - 3 * self.c1


def family_char_cubic(family: str, n: int) -> Cubic:
    """Characteristic cubic of the one-parameter exception family.

    ``T6``: ``K3 v (K_{n-5} + 2K1)`` (needs n >= 7); ``T8``: ``K2 v (K_{n-4} + 2K1)``
    (needs n >= 6).
    """
    fam = family.upper()
    if fam == "T6":
        if n < 7:
            raise InvalidParameter(f"T6 cubic needs n >= 7, got {n}")
        return Cubic(-(5 * n - 7), 8 * n * n - 31 * n + 56, -4 * n**3 + 26 * n * n - 82 * n + 80)
    if fam == "T8":
        if n < 6:
            raise InvalidParameter(f"T8 cubic needs n >= 6, got {n}")
        return Cubic(-(5 * n - 6), 8 * n * n - 28 * n + 44, -4 * n**3 + 24 * n * n - 68 * n + 64)
    raise InvalidParameter(f"unknown cubic family {family!r}")


def family_critical_points(family: str, n: int) -> tuple[float, float]:
    """Closed-form critical points as printed for each family."""
    fam = family.upper()
    if fam == "T6":
        r, b = math.sqrt(n * n + 23 * n - 119), 5 * n - 7
    elif fam == "T8":
        r, b = math.sqrt(n * n + 24 * n - 96), 5 * n - 6
    else:
        raise InvalidParameter(f"unknown cubic family {family!r}")
    return ((b - r) / 3, (b + r) / 3)


def largest_cubic_root(c: Cubic, rtol: float = 1e-12, max_iter: int = 200) -> float:
    """The root right of the larger critical point, by Newton safeguarded with bisection."""
    crit = c.critical_points()
    cauchy = 1.0 + max(abs(c.c2), abs(c.c1), abs(c.c0))
    lo = crit[1] if crit else -cauchy
    hi = abs(c.c2) + 1.0
    if hi <= lo or c(hi) <= 0:
        hi = cauchy
    if c(lo) > 0 or c(hi) <= 0:
        signs = {"start": float(np.sign(c(hi)))}
        if crit:
            signs.update(x1=float(np.sign(c(crit[0]))), x2=float(np.sign(c(crit[1]))))
        raise BracketError(signs)
    x = hi
    for _ in range(max_iter):
        fx = c(x)
        if abs(fx) <= rtol * c.scale(x) or hi - lo <= 4 * np.finfo(float).eps * abs(x):
            return x
        if fx > 0:
            hi = x
        else:
            lo = x
        dfx = c.derivative(x)
        step = x - fx / dfx if dfx != 0 else math.nan
        x = step if lo < step < hi else (lo + hi) / 2
    return x


def threshold_t6(n: int) -> Fraction:
    return Fraction(2 * n * n + 6 * n - 36, n)


def threshold_t8(n: int) -> Fraction:
    return Fraction(2 * n * n + 6 * n - 28, n)
