"""Path matrices, cone intervals, attainable position sets and cone extremes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (
    ONE,
    Matrix,
    ReciprocalMatrix,
    Vector,
    check_index,
    entrywise_leq,
    inv_transpose,
)
from .cycles import HCycle, check_cycle, cycle_product, gamma_set
from .errors import ConsistentMatrix, CycleNotInGamma

__all__ = [
    "AttainSet",
    "ConeInterval",
    "GlobalBounds",
    "PathMatrix",
    "attain_set",
    "cone_inclusion_test",
    "cone_interval",
    "extreme_vector",
    "extreme_vectors",
    "global_bounds",
    "inv_transpose",
    "path_matrix",
    "require_gamma",
]


@dataclass(frozen=True)
class PathMatrix:
    cycle: HCycle
    values: Matrix
    cycle_product: Fraction

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.values[i][j]

    @property
    def n(self) -> int:
        return len(self.values)


@lru_cache(maxsize=8192)
def _path_matrix(a: ReciprocalMatrix, tau: HCycle) -> PathMatrix:
    n, m, seq = a.n, a.entries, tau.seq
    prefix = [ONE] * n
    for t in range(1, n):
        prefix[t] = prefix[t - 1] * m[seq[t - 1]][seq[t]]
    total = prefix[-1] * m[seq[-1]][seq[0]]
    rows = [[ONE] * n for _ in range(n)]
    for s in range(n):
        row = rows[seq[s]]
        for t in range(n):
            if t > s:
                row[seq[t]] = prefix[t] / prefix[s]
            elif t < s:
                row[seq[t]] = total * prefix[t] / prefix[s]
    return PathMatrix(tau, tuple(tuple(r) for r in rows), total)


def path_matrix(a: ReciprocalMatrix, tau: HCycle) -> PathMatrix:
    """Matrix of along-cycle path products, with unit diagonal."""
    check_cycle(a, tau)
    return _path_matrix(a, tau)


def require_gamma(a: ReciprocalMatrix, tau: HCycle) -> Fraction:
    """Return the cycle product, raising unless it is below 1."""
    prod = cycle_product(a, tau)
    if prod >= 1:
        raise CycleNotInGamma(tau, prod)
    return prod


@dataclass(frozen=True)
class ConeInterval:
    """``lower <= W <= upper`` for exactly the vectors of one cone."""

    cycle: HCycle
    lower: PathMatrix
    upper: Matrix


def cone_interval(a: ReciprocalMatrix, tau: HCycle) -> ConeInterval:
    require_gamma(a, tau)
    lower = path_matrix(a, tau)
    return ConeInterval(tau, lower, inv_transpose(lower.values))


@dataclass(frozen=True)
class GlobalBounds:
    lower: Matrix
    upper: Matrix


def global_bounds(a: ReciprocalMatrix, max_n: int | None = None) -> GlobalBounds:
    """Entry-wise minimum of the path matrices over all cycles below 1."""
    gamma = gamma_set(a, max_n)
    if not gamma:
        raise ConsistentMatrix("global_bounds")
    low: list[list[Fraction]] | None = None
    for tau in gamma:
        p = _path_matrix(a, tau).values
        if low is None:
            low = [list(r) for r in p]
            continue
        for row, prow in zip(low, p):
            for j, x in enumerate(prow):
                if x < row[j]:
                    row[j] = x
    lower = tuple(tuple(r) for r in low)
    return GlobalBounds(lower, inv_transpose(lower))


@dataclass(frozen=True)
class AttainSet:
    """Pairs ``(p, q)`` with ``p`` listed before ``q`` when the cycle starts at ``anchor``."""

    cycle: HCycle
    anchor: int
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pq: object) -> bool:
        return pq in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=4096)
def attain_set(tau: HCycle, k: int) -> AttainSet:
    check_index(k, tau.n)
    walk = tau.rooted_at(k)
    pairs = frozenset(
        (walk[s], walk[t]) for s in range(tau.n) for t in range(s + 1, tau.n)
    )
    return AttainSet(tau, k, pairs)


def extreme_vector(a: ReciprocalMatrix, tau: HCycle, k: int) -> Vector:
    """Cone generator that matches the path matrix on the anchor-``k`` set.

    Normalized so that entry ``k`` is 1; the other entries are ``1 / P(k, q)``.
    """
    require_gamma(a, tau)
    check_index(k, a.n)
    row = path_matrix(a, tau).values[k]
    return tuple(ONE if q == k else 1 / row[q] for q in range(a.n))


def extreme_vectors(a: ReciprocalMatrix, tau: HCycle) -> list[Vector]:
    require_gamma(a, tau)
    p = path_matrix(a, tau).values
    n = a.n
    return [tuple(ONE if q == k else 1 / p[k][q] for q in range(n)) for k in range(n)]


def cone_inclusion_test(a: ReciprocalMatrix, tau: HCycle, nu: HCycle) -> bool:
    """True iff ``P_tau <= P_nu``, which puts the ``nu`` cone inside the ``tau`` cone."""
    require_gamma(a, tau)
    require_gamma(a, nu)
    return entrywise_leq(path_matrix(a, tau).values, path_matrix(a, nu).values)
