"""Small reference matrices with hand-checked efficient-set structure."""

from __future__ import annotations

from fractions import Fraction as F

from .core import ReciprocalMatrix

# Three cycles below 1 (products 1/7, 2/3, 6/7) and no common order.
BOUND_MATRIX = ReciprocalMatrix(
    (
        (1, 1, 3, 7),
        (1, 1, 1, 2),
        (F(1, 3), 1, 1, 1),
        (F(1, 7), F(1, 2), 1, 1),
    )
)

# Every efficient vector is weakly decreasing.
DECREASING_MATRIX = ReciprocalMatrix(
    (
        (1, 1, 3, 4),
        (1, 1, 2, 3),
        (F(1, 3), F(1, 2), 1, 1),
        (F(1, 4), F(1, 3), 1, 1),
    )
)


def star_matrix(free=1) -> ReciprocalMatrix:
    """Alternatives 1 and 2 sit above 3 and 4 along the identity cycle.

    ``free`` fills the two reciprocal pairs the identity cycle never uses.
    """
    t = F(free)
    return ReciprocalMatrix(
        (
            (1, F(1, 2), t, 4),
            (2, 1, 6, t),
            (1 / t, F(1, 6), 1, F(1, 2)),
            (F(1, 4), 1 / t, 2, 1),
        )
    )


def corner_matrix(a=2) -> ReciprocalMatrix:
    """All ones except ``a`` in the top-right corner and ``1/a`` opposite."""
    a = F(a)
    rows = [[F(1)] * 4 for _ in range(4)]
    rows[0][3], rows[3][0] = a, 1 / a
    return ReciprocalMatrix(rows)


# Distinct 5x5 matrices with identical global lower bounds whose efficient
# sets still differ, e.g. at (5, 5, 3/10, 1, 1/100).
L_EQUAL_A = ReciprocalMatrix(
    (
        (1, 1, F(1, 10), 9, 500),
        (1, 1, 1, 5, 11),
        (10, 1, 1, 1, 30),
        (F(1, 9), F(1, 5), 1, 1, 1),
        (F(1, 500), F(1, 11), F(1, 30), 1, 1),
    )
)
L_EQUAL_B = L_EQUAL_A.with_pair(2, 4, F(301, 10))
L_EQUAL_WITNESS = (F(5), F(5), F(3, 10), F(1), F(1, 100))
