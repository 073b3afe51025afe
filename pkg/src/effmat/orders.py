"""Order structure shared by the efficient vectors of a cone or a whole matrix.

``P(i, j) >= 1`` in a path matrix means every vector of the cone has
``w_i >= w_j``. Because ``P(i, j) * P(j, i)`` equals the cycle product, which
is below 1, the relation never holds in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Matrix, ReciprocalMatrix
from .cycles import HCycle
from .paths import global_bounds, path_matrix, require_gamma


@dataclass(frozen=True)
class OrderPartition:
    """Ordered blocks; members of an earlier block are weakly above later ones."""

    blocks: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


def _above(m: Matrix) -> set[tuple[int, int]]:
    n = len(m)
    return {(i, j) for i in range(n) for j in range(n) if i != j and m[i][j] >= 1}


def _unique_order(m: Matrix) -> tuple[int, ...] | None:
    n = len(m)
    pairs = _above(m)
    if len(pairs) != n * (n - 1) // 2:
        return None
    # with a full count the relation is a strict total order, so sorting by
    # how many indices each one beats recovers it
    wins = [0] * n
    for i, _ in pairs:
        wins[i] += 1
    order = tuple(sorted(range(n), key=lambda i: -wins[i]))
    if sorted(wins) != list(range(n)):
        return None
    return order


def pairwise_above(a: ReciprocalMatrix, tau: HCycle) -> set[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``w_i >= w_j`` throughout the cone of ``tau``."""
    require_gamma(a, tau)
    return _above(path_matrix(a, tau).values)


def cone_unique_order(a: ReciprocalMatrix, tau: HCycle) -> tuple[int, ...] | None:
    """The common order of all vectors in the cone, largest first, if there is one."""
    require_gamma(a, tau)
    return _unique_order(path_matrix(a, tau).values)


def global_unique_order(a: ReciprocalMatrix, max_n: int | None = None) -> tuple[int, ...] | None:
    """The order shared by every efficient vector, read off the global lower bound."""
    return _unique_order(global_bounds(a, max_n).lower)


def global_pairwise_above(a: ReciprocalMatrix, max_n: int | None = None) -> set[tuple[int, int]]:
    return _above(global_bounds(a, max_n).lower)


def _front_block(m: Matrix, remaining: Sequence[int]) -> frozenset[int]:
    # The smallest front block holding x is the closure of x under "i needs j
    # whenever P(i, j) < 1". Closures are nested or disjoint-ordered, so the
    # smallest one over all x is the unique inclusion-minimal front block.
    best: frozenset[int] | None = None
    for x in remaining:
        block = {x}
        stack = [x]
        while stack:
            i = stack.pop()
            for j in remaining:
                if j not in block and m[i][j] < 1:
                    block.add(j)
                    stack.append(j)
        if best is None or len(block) < len(best):
            best = frozenset(block)
    return best


def partial_order_partition(a: ReciprocalMatrix, tau: HCycle) -> OrderPartition:
    """Split the alternatives as finely as the cone's pairwise order allows."""
    require_gamma(a, tau)
    m = path_matrix(a, tau).values
    remaining = list(range(a.n))
    blocks: list[frozenset[int]] = []
    while remaining:
        block = _front_block(m, remaining)
        blocks.append(block)
        remaining = [i for i in remaining if i not in block]
    return OrderPartition(tuple(blocks))
