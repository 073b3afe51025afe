"""Exception hierarchy.

Positions are stored 0-based on the exception objects and rendered 1-based in
messages, which is how users write matrix coordinates.
"""

from __future__ import annotations


class EffmatError(ValueError):
    """Base class for all validation and precondition failures."""


class NonPositiveEntry(EffmatError):
    def __init__(self, i: int, j: int | None = None):
        self.i, self.j = i, j
        where = f"({i + 1}, {j + 1})" if j is not None else f"{i + 1}"
        super().__init__(f"entry {where} is not strictly positive")


class DiagonalNotOne(EffmatError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"diagonal entry ({i + 1}, {i + 1}) is not 1")


class ReciprocityViolation(EffmatError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(
            f"entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) are not reciprocal"
        )


class DimensionTooSmall(EffmatError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"dimension {n} is below the minimum of 2")


class DimensionMismatch(EffmatError):
    def __init__(self, expected: int, got: int):
        self.expected, self.got = expected, got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class DimensionExceedsCap(EffmatError):
    def __init__(self, n: int, cap: int):
        self.n, self.cap = n, cap
        super().__init__(
            f"dimension {n} exceeds the cap of {cap} (set EFFMAT_MAX_N or --max-n)"
        )


class IndicesEqual(EffmatError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"path endpoints coincide at index {i + 1}")


class IndexOutOfRange(EffmatError):
    def __init__(self, index: int, n: int):
        self.index, self.n = index, n
        super().__init__(f"index {index + 1} is outside 1..{n}")


class CycleNotInGamma(EffmatError):
    def __init__(self, cycle, product):
        self.cycle, self.product = cycle, product
        super().__init__(f"cycle {cycle} has product {product} >= 1")


class ConsistentMatrix(EffmatError):
    def __init__(self, what: str = "operation"):
        super().__init__(f"{what} requires an inconsistent matrix")


class AllZeroCoefficients(EffmatError):
    def __init__(self):
        super().__init__("cone coefficients are all zero")


class ParseError(EffmatError):
    """Malformed input document."""
