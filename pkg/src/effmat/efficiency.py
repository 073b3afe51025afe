"""Efficiency of weight vectors: cone membership, oracles and cone sampling.

A vector ``w`` is efficient for an inconsistent ``A`` exactly when some cycle
``tau`` with product below 1 satisfies ``P_tau <= W``. Walking consecutive
entries of ``P_tau`` reduces that to one inequality per cycle edge,
``w_i >= a_ij * w_j``, which is what the fast paths below check.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .core import (
    ReciprocalMatrix,
    Vector,
    positive_vector,
    projectively_equal,
    ratios,
    to_rational,
)
from .cycles import HCycle, gamma_set
from .errors import AllZeroCoefficients, DimensionMismatch, NonPositiveEntry
from .paths import extreme_vectors, path_matrix, require_gamma


def _vector_for(a: ReciprocalMatrix, w: Sequence) -> Vector:
    w = positive_vector(w)
    if len(w) != a.n:
        raise DimensionMismatch(a.n, len(w))
    return w


def _arcs(a: ReciprocalMatrix, w: Vector) -> list[list[bool]]:
    # arcs[i][j]: w_i / w_j >= a_ij
    m = a.entries
    return [[w[i] >= m[i][j] * w[j] for j in range(a.n)] for i in range(a.n)]


def _chain_holds(arcs: list[list[bool]], tau: HCycle) -> bool:
    return all(arcs[i][j] for i, j in tau.edges())


def in_cone(w: Sequence, a: ReciprocalMatrix, tau: HCycle) -> bool:
    """Whether ``w`` lies in the cone of ``tau``: ``P_tau <= W`` entrywise."""
    require_gamma(a, tau)
    w = _vector_for(a, w)
    p = path_matrix(a, tau).values
    return all(
        p[i][j] * w[j] <= w[i] for i in range(a.n) for j in range(a.n) if i != j
    )


@dataclass(frozen=True)
class EfficiencyReport:
    efficient: bool
    member_cones: tuple[HCycle, ...] = ()
    tight_positions: Mapping[HCycle, frozenset[tuple[int, int]]] = field(
        default_factory=dict
    )


def _column_proportional(a: ReciprocalMatrix, w: Vector) -> bool:
    return projectively_equal(w, a.column(0))


def efficiency_report(w: Sequence, a: ReciprocalMatrix, max_n: int | None = None) -> EfficiencyReport:
    """Decide efficiency and list the cones containing ``w``.

    For a consistent matrix the efficient vectors are the multiples of its
    columns and no cones are reported.
    """
    w = _vector_for(a, w)
    gamma = gamma_set(a, max_n)
    if not gamma:
        return EfficiencyReport(_column_proportional(a, w))
    arcs = _arcs(a, w)
    big_w = ratios(w)
    members: list[HCycle] = []
    tight: dict[HCycle, frozenset[tuple[int, int]]] = {}
    for tau in gamma:
        if not _chain_holds(arcs, tau):
            continue
        members.append(tau)
        p = path_matrix(a, tau).values
        tight[tau] = frozenset(
            (i, j)
            for i in range(a.n)
            for j in range(a.n)
            if i != j and big_w[i][j] == p[i][j]
        )
    return EfficiencyReport(bool(members), tuple(members), tight)


def is_efficient(w: Sequence, a: ReciprocalMatrix, max_n: int | None = None) -> bool:
    w = _vector_for(a, w)
    gamma = gamma_set(a, max_n)
    if not gamma:
        return _column_proportional(a, w)
    arcs = _arcs(a, w)
    return any(_chain_holds(arcs, tau) for tau in gamma)


def _strongly_connected(adj: list[list[bool]]) -> bool:
    n = len(adj)
    for forward in (True, False):
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in range(n):
                edge = adj[u][v] if forward else adj[v][u]
                if edge and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        if not all(seen):
            return False
    return True


def digraph_oracle(w: Sequence, a: ReciprocalMatrix) -> bool:
    """Efficiency via strong connectivity of the comparison digraph.

    Arc ``i -> j`` (``i != j``) whenever ``a_ij * w_j >= w_i``, i.e. the
    approximation ``w_i / w_j`` does not exceed the judgment ``a_ij``.
    Reversing every arc gives the transposed graph, which is strongly
    connected exactly when this one is, so the arc orientation convention
    does not affect the verdict.
    """
    w = _vector_for(a, w)
    m = a.entries
    n = a.n
    adj = [[i != j and m[i][j] * w[j] >= w[i] for j in range(n)] for i in range(n)]
    return _strongly_connected(adj)


def deviations(a: ReciprocalMatrix, w: Vector) -> list[list[Fraction]]:
    return [
        [abs(a.entries[i][j] - w[i] / w[j]) for j in range(a.n)] for i in range(a.n)
    ]


def dominates_fit(a: ReciprocalMatrix, v: Sequence, w: Sequence) -> bool:
    """Exact certificate: ``|A - V| <= |A - W|`` entrywise, strictly somewhere."""
    dv = deviations(a, tuple(v))
    dw = deviations(a, tuple(w))
    strict = False
    for rv, rw in zip(dv, dw):
        for x, y in zip(rv, rw):
            if x > y:
                return False
            if x < y:
                strict = True
    return strict


def _perturbation_subsets(n: int, rng: random.Random) -> list[tuple[int, ...]]:
    # scaling S up equals scaling its complement down, so |S| <= n/2 suffices
    subsets = [(i,) for i in range(n)]
    if 2 ** (n - 1) <= 64:
        for size in range(2, n // 2 + 1):
            subsets.extend(itertools.combinations(range(n), size))
    else:
        for _ in range(2 * n):
            size = rng.randint(2, n // 2)
            subsets.append(tuple(sorted(rng.sample(range(n), size))))
    return subsets


def refute_by_perturbation(
    w: Sequence, a: ReciprocalMatrix, budget: int = 32, seed: int = 0
) -> Vector | None:
    """Search for a vector whose ratio matrix fits ``a`` at least as well everywhere.

    Each of the ``budget`` rounds scales coordinate subsets by ``1 +/- 2**-t``.
    A returned vector is a verified certificate that ``w`` is inefficient;
    ``None`` proves nothing.
    """
    w = _vector_for(a, w)
    n, m = a.n, a.entries
    rng = random.Random(seed)
    dev = deviations(a, w)
    subsets = _perturbation_subsets(n, rng)
    for t in range(1, budget + 1):
        step = Fraction(1, 2**t)
        for subset in subsets:
            inside = set(subset)
            outside = [j for j in range(n) if j not in inside]
            for f in (1 + step, 1 - step):
                strict = False
                ok = True
                for i in subset:
                    for j in outside:
                        r = w[i] * f / w[j]
                        up, down = abs(m[i][j] - r), abs(m[j][i] - 1 / r)
                        if up > dev[i][j] or down > dev[j][i]:
                            ok = False
                            break
                        if up < dev[i][j] or down < dev[j][i]:
                            strict = True
                    if not ok:
                        break
                if ok and strict:
                    v = tuple(x * f if k in inside else x for k, x in enumerate(w))
                    if dominates_fit(a, v, w):
                        return v
    return None


def sample_cone(a: ReciprocalMatrix, tau: HCycle, coefficients: Sequence) -> Vector:
    """Nonnegative combination of the cone's extreme vectors."""
    require_gamma(a, tau)
    coeffs = [to_rational(c) for c in coefficients]
    if len(coeffs) != a.n:
        raise DimensionMismatch(a.n, len(coeffs))
    for k, c in enumerate(coeffs):
        if c < 0:
            raise NonPositiveEntry(k)
    if not any(coeffs):
        raise AllZeroCoefficients()
    gens = extreme_vectors(a, tau)
    return tuple(
        sum((c * g[q] for c, g in zip(coeffs, gens) if c), Fraction(0))
        for q in range(a.n)
    )
