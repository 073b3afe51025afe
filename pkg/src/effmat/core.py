"""Exact rational matrices and vectors for pairwise-comparison analysis.

All entries are :class:`fractions.Fraction`. Indices are 0-based throughout the
API; only rendered text (labels, messages) uses 1-based positions.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DiagonalNotOne,
    DimensionMismatch,
    DimensionTooSmall,
    EffmatError,
    IndexOutOfRange,
    NonPositiveEntry,
    ParseError,
    ReciprocityViolation,
)

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]

ONE = Fraction(1)
DEFAULT_MAX_N = 9


def max_dimension(override: int | None = None) -> int:
    """Dimension cap: explicit override, else ``EFFMAT_MAX_N``, else 9."""
    if override is not None:
        return int(override)
    env = os.environ.get("EFFMAT_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def to_rational(value) -> Fraction:
    """Convert ints, Fractions and decimal/fraction strings exactly.

    Floats go through their shortest decimal repr, so ``30.1`` becomes
    ``301/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> str:
    return str(x)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(to_rational(x) for x in row) for row in rows)


def positive_vector(values: Iterable) -> Vector:
    w = tuple(to_rational(x) for x in values)
    for i, x in enumerate(w):
        if x <= 0:
            raise NonPositiveEntry(i)
    return w


def _check_square(rows: Matrix) -> int:
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch(n, len(row))
    return n


@dataclass(frozen=True)
class ReciprocalMatrix:
    """Positive square matrix with unit diagonal and ``a[j][i] == 1 / a[i][j]``."""

    entries: Matrix

    def __post_init__(self):
        rows = as_matrix(self.entries)
        object.__setattr__(self, "entries", rows)
        n = _check_square(rows)
        if n < 2:
            raise DimensionTooSmall(n)
        for i in range(n):
            for j in range(n):
                if rows[i][j] <= 0:
                    raise NonPositiveEntry(i, j)
        for i in range(n):
            if rows[i][i] != 1:
                raise DiagonalNotOne(i)
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] * rows[j][i] != 1:
                    raise ReciprocityViolation(i, j)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def with_pair(self, i: int, j: int, value) -> "ReciprocalMatrix":
        """Copy with ``a[i][j] = value`` and the reciprocal entry updated."""
        value = to_rational(value)
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        rows[j][i] = 1 / value
        return ReciprocalMatrix(rows)

    def __str__(self) -> str:
        return format_matrix(self.entries)


def format_matrix(m: Sequence[Sequence[Fraction]]) -> str:
    cells = [[str(x) for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def validate_reciprocal(entries: Iterable[Iterable]) -> ReciprocalMatrix:
    """Parse and validate a reciprocal matrix, raising on the first violation."""
    return ReciprocalMatrix(as_matrix(entries))


def is_consistent(a: ReciprocalMatrix) -> bool:
    # a_ij == a_i0 * a_0j for all i, j implies the full triple rule
    m = a.entries
    return all(
        m[i][j] == m[i][0] * m[0][j] for i in range(1, a.n) for j in range(1, a.n)
    )


def ratio_matrix(w: Sequence) -> ReciprocalMatrix:
    """The consistent matrix ``[w_i / w_j]``."""
    w = positive_vector(w)
    if len(w) < 2:
        raise DimensionTooSmall(len(w))
    return ReciprocalMatrix(tuple(tuple(wi / wj for wj in w) for wi in w))


def ratios(w: Vector) -> Matrix:
    """Unvalidated ``[w_i / w_j]`` for hot loops."""
    return tuple(tuple(wi / wj for wj in w) for wi in w)


def inv_transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    """Entry-wise inverse of the transpose: ``out[i][j] = 1 / m[j][i]``."""
    n = len(m)
    for i in range(n):
        for j in range(n):
            if m[i][j] <= 0:
                raise NonPositiveEntry(i, j)
    return tuple(tuple(1 / m[j][i] for j in range(n)) for i in range(n))


def entrywise_leq(m1: Sequence[Sequence[Fraction]], m2: Sequence[Sequence[Fraction]]) -> bool:
    return all(x <= y for r1, r2 in zip(m1, m2) for x, y in zip(r1, r2))


def normalize(w: Sequence[Fraction]) -> Vector:
    """Scale so the first entry is 1."""
    return tuple(x / w[0] for x in w)


def projectively_equal(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return len(u) == len(v) and all(a * v[0] == b * u[0] for a, b in zip(u, v))


@dataclass(frozen=True)
class MonomialMap:
    """A permutation composed with a positive diagonal scaling.

    As a matrix this is ``S = Q D``: index ``i`` is scaled by ``scale[i]`` and
    then sent to ``perm[i]``. So ``(S w)[perm[i]] = scale[i] * w[i]`` and
    ``(S A S^-1)[perm[i]][perm[j]] = scale[i] * a[i][j] / scale[j]``.
    """

    perm: tuple[int, ...]
    scale: tuple[Fraction, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        scale = tuple(to_rational(d) for d in self.scale)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "scale", scale)
        n = len(perm)
        if len(scale) != n:
            raise DimensionMismatch(n, len(scale))
        if sorted(perm) != list(range(n)):
            raise EffmatError(f"not a permutation: {perm}")
        for i, d in enumerate(scale):
            if d <= 0:
                raise NonPositiveEntry(i)

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(tuple(range(n)), (ONE,) * n)

    @classmethod
    def diagonal(cls, scale: Sequence) -> "MonomialMap":
        return cls(tuple(range(len(scale))), tuple(scale))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "MonomialMap":
        return cls(tuple(perm), (ONE,) * len(perm))

    def inverse(self) -> "MonomialMap":
        n = self.n
        inv = [0] * n
        for i, p in enumerate(self.perm):
            inv[p] = i
        return MonomialMap(tuple(inv), tuple(1 / self.scale[inv[j]] for j in range(n)))


def _check_dims(expected: int, got: int) -> None:
    if expected != got:
        raise DimensionMismatch(expected, got)


def monomial_conjugate(a: ReciprocalMatrix, s: MonomialMap) -> ReciprocalMatrix:
    """Return ``S A S^-1``."""
    _check_dims(a.n, s.n)
    n = a.n
    out = [[ONE] * n for _ in range(n)]
    for i in range(n):
        pi, di = s.perm[i], s.scale[i]
        for j in range(n):
            out[pi][s.perm[j]] = di * a.entries[i][j] / s.scale[j]
    return ReciprocalMatrix(out)


def apply_monomial(s: MonomialMap, w: Sequence) -> Vector:
    """Return ``S w``."""
    w = positive_vector(w)
    _check_dims(s.n, len(w))
    out = [ONE] * s.n
    for i in range(s.n):
        out[s.perm[i]] = s.scale[i] * w[i]
    return tuple(out)


def check_index(k: int, n: int) -> None:
    if not 0 <= k < n:
        raise IndexOutOfRange(k, n)


def random_rational(rng: random.Random, max_int: int = 9) -> Fraction:
    return Fraction(rng.randint(1, max_int), rng.randint(1, max_int))


def random_reciprocal(n: int, rng: random.Random, max_int: int = 9) -> ReciprocalMatrix:
    """Upper entries are ratios of integers in ``1..max_int``."""
    rows = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = random_rational(rng, max_int)
            rows[i][j], rows[j][i] = x, 1 / x
    return ReciprocalMatrix(rows)


def random_positive_vector(n: int, rng: random.Random, max_int: int = 9) -> Vector:
    return tuple(random_rational(rng, max_int) for _ in range(n))


def random_monomial(n: int, rng: random.Random, max_int: int = 9) -> MonomialMap:
    perm = list(range(n))
    rng.shuffle(perm)
    return MonomialMap(tuple(perm), random_positive_vector(n, rng, max_int))
