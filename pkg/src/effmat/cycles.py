"""Directed Hamiltonian cycles, cycle products and path products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator

from .core import ONE, ReciprocalMatrix, check_index, max_dimension
from .errors import (
    ConsistentMatrix,
    DimensionExceedsCap,
    DimensionMismatch,
    DimensionTooSmall,
    EffmatError,
    IndicesEqual,
)


@dataclass(frozen=True, order=True)
class HCycle:
    """A directed Hamiltonian cycle, stored rotated so that it starts at 0.

    ``HCycle((0, 1, 2, 3))`` is the cycle 0->1->2->3->0, written ``12341`` in
    1-based label form. A cycle and its reverse are different values.
    """

    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(v) for v in self.seq)
        object.__setattr__(self, "seq", seq)
        if sorted(seq) != list(range(len(seq))):
            raise EffmatError(f"not a permutation of 0..{len(seq) - 1}: {seq}")
        if len(seq) < 2:
            raise DimensionTooSmall(len(seq))
        if seq[0] != 0:
            raise EffmatError(f"cycle must be listed from index 0: {seq}")

    @classmethod
    def from_sequence(cls, seq) -> "HCycle":
        """Canonicalize any rotation of a vertex listing."""
        seq = tuple(seq)
        if seq and len(seq) > 1 and seq[0] == seq[-1]:
            seq = seq[:-1]
        if 0 not in seq:
            raise EffmatError(f"not a permutation: {seq}")
        r = seq.index(0)
        return cls(seq[r:] + seq[:r])

    @classmethod
    def parse(cls, label: str) -> "HCycle":
        """Parse a 1-based label such as ``"12341"`` or ``"1-2-3-4"``."""
        text = label.strip()
        parts = text.replace(",", " ").replace("-", " ").split()
        if len(parts) == 1:
            parts = list(parts[0])
        try:
            seq = [int(p) - 1 for p in parts]
        except ValueError as exc:
            raise EffmatError(f"bad cycle label {label!r}") from exc
        return cls.from_sequence(seq)

    @property
    def n(self) -> int:
        return len(self.seq)

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for t, v in enumerate(self.seq):
            pos[v] = t
        return tuple(pos)

    def label(self) -> str:
        closed = [v + 1 for v in self.seq] + [self.seq[0] + 1]
        sep = "" if self.n < 10 else "-"
        return sep.join(str(v) for v in closed)

    def __str__(self) -> str:
        return self.label()

    def reverse(self) -> "HCycle":
        return HCycle((self.seq[0],) + self.seq[:0:-1])

    def rooted_at(self, k: int) -> tuple[int, ...]:
        """The vertex listing starting at ``k``."""
        t = self.position[k]
        return self.seq[t:] + self.seq[:t]

    def edges(self) -> Iterator[tuple[int, int]]:
        s = self.seq
        for t in range(self.n):
            yield s[t], s[(t + 1) % self.n]


def _check_cap(n: int, max_n: int | None) -> None:
    if n < 2:
        raise DimensionTooSmall(n)
    cap = max_dimension(max_n)
    if n > cap:
        raise DimensionExceedsCap(n, cap)


@lru_cache(maxsize=16)
def _all_cycles(n: int) -> tuple[HCycle, ...]:
    return tuple(HCycle((0,) + p) for p in itertools.permutations(range(1, n)))


def enumerate_hcycles(n: int, max_n: int | None = None) -> list[HCycle]:
    """All ``(n-1)!`` directed H-cycles, lexicographic by canonical sequence."""
    _check_cap(n, max_n)
    return list(_all_cycles(n))


def check_cycle(a: ReciprocalMatrix, tau: HCycle) -> None:
    if a.n != tau.n:
        raise DimensionMismatch(a.n, tau.n)


def cycle_product(a: ReciprocalMatrix, tau: HCycle) -> Fraction:
    check_cycle(a, tau)
    m = a.entries
    prod = ONE
    for i, j in tau.edges():
        prod *= m[i][j]
    return prod


def path_product(a: ReciprocalMatrix, tau: HCycle, i: int, j: int) -> Fraction:
    """Product of entries of ``a`` along ``tau`` from ``i`` forward to ``j``."""
    check_cycle(a, tau)
    check_index(i, a.n)
    check_index(j, a.n)
    if i == j:
        raise IndicesEqual(i)
    m = a.entries
    walk = tau.rooted_at(i)
    prod = ONE
    for t in range(1, a.n):
        prod *= m[walk[t - 1]][walk[t]]
        if walk[t] == j:
            return prod
    raise AssertionError("unreachable: j lies on the cycle")


@dataclass(frozen=True)
class GammaSet:
    """Cycles with product < 1 paired with their products, sorted by cycle."""

    members: tuple[tuple[HCycle, Fraction], ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[HCycle]:
        return (c for c, _ in self.members)

    def __contains__(self, tau: object) -> bool:
        return tau in self._lookup

    def __bool__(self) -> bool:
        return bool(self.members)

    @cached_property
    def _lookup(self) -> dict[HCycle, Fraction]:
        return dict(self.members)

    @property
    def cycles(self) -> list[HCycle]:
        return [c for c, _ in self.members]

    def product(self, tau: HCycle) -> Fraction:
        return self._lookup[tau]


@lru_cache(maxsize=512)
def _gamma(a: ReciprocalMatrix) -> GammaSet:
    n, m = a.n, a.entries
    found: list[tuple[HCycle, Fraction]] = []
    # depth-first over permutations of 1..n-1 in lexicographic order, sharing
    # partial products between cycles with a common prefix
    seq = [0]
    used = [False] * n
    used[0] = True

    def extend(last: int, prod: Fraction) -> None:
        if len(seq) == n:
            total = prod * m[last][0]
            if total < 1:
                found.append((HCycle(tuple(seq)), total))
            return
        for v in range(1, n):
            if not used[v]:
                used[v] = True
                seq.append(v)
                extend(v, prod * m[last][v])
                seq.pop()
                used[v] = False

    extend(0, ONE)
    return GammaSet(tuple(found))


def gamma_set(a: ReciprocalMatrix, max_n: int | None = None) -> GammaSet:
    """All H-cycles whose product in ``a`` is strictly below 1."""
    _check_cap(a.n, max_n)
    return _gamma(a)


def min_cycles(a: ReciprocalMatrix, max_n: int | None = None) -> tuple[Fraction, list[HCycle]]:
    """Minimum cycle product and every cycle attaining it."""
    gamma = gamma_set(a, max_n)
    if not gamma:
        raise ConsistentMatrix("min_cycles")
    value = min(p for _, p in gamma.members)
    return value, [c for c, p in gamma.members if p == value]
