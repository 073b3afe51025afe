"""Comparing efficient sets of two reciprocal matrices.

Distinct matrices of size at most 4, and distinct pairs of simply perturbed
consistent (SPC) matrices, are known to have different efficient sets. In
general only necessary conditions for equality are available. The decision
procedure below returns ``Unknown`` when all of them pass and no separating
vector turns up.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    ONE,
    Matrix,
    MonomialMap,
    ReciprocalMatrix,
    Vector,
    check_index,
    is_consistent,
    max_dimension,
    monomial_conjugate,
    random_reciprocal,
)
from .cycles import HCycle, gamma_set, min_cycles
from .efficiency import is_efficient
from .errors import ConsistentMatrix, DimensionExceedsCap, DimensionMismatch, DimensionTooSmall
from .paths import _path_matrix, attain_set, extreme_vectors, global_bounds, require_gamma


# -- dominance ---------------------------------------------------------------


def dominance(m1: Matrix, m2: Matrix, positions: Iterable[tuple[int, int]]) -> tuple[bool, bool]:
    """``(m1 <= m2 on positions, strict somewhere)``."""
    n = len(m1)
    leq, strict = True, False
    for i, j in positions:
        check_index(i, n)
        check_index(j, n)
        x, y = m1[i][j], m2[i][j]
        if x > y:
            leq = False
        elif x < y:
            strict = True
    return leq, leq and strict


def dominates(m1: Matrix, m2: Matrix, positions: Iterable[tuple[int, int]]) -> bool:
    return dominance(m1, m2, positions)[0]


def _dominated_on(p: Matrix, q: Matrix, pairs) -> bool:
    # q <= p on every pair
    return all(q[i][j] <= p[i][j] for i, j in pairs)


def undominated(a: ReciprocalMatrix, tau: HCycle, k: int) -> bool:
    """No other cycle's path matrix is at most ``P_tau`` on the anchor-``k`` set."""
    require_gamma(a, tau)
    pairs = attain_set(tau, k).pairs
    p = _path_matrix(a, tau).values
    return not any(
        _dominated_on(p, _path_matrix(a, nu).values, pairs)
        for nu in gamma_set(a)
        if nu != tau
    )


def l_equal(a: ReciprocalMatrix, b: ReciprocalMatrix) -> bool:
    """Exact equality of the global lower bounds (necessary for equal efficient sets)."""
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)
    return global_bounds(a).lower == global_bounds(b).lower


# -- SPC matrices ------------------------------------------------------------


def canonical_spc(n: int, x) -> ReciprocalMatrix:
    """All ones except ``x`` at the top-right corner and ``1/x`` opposite."""
    x = Fraction(x)
    rows = [[ONE] * n for _ in range(n)]
    rows[0][n - 1], rows[n - 1][0] = x, 1 / x
    return ReciprocalMatrix(rows)


@dataclass(frozen=True)
class SpcForm:
    """``a == map . canonical_spc(n, x) . map^-1`` with ``x > 1``.

    The map sends canonical index 0 to ``l`` and ``n - 1`` to ``k``, so the
    perturbed entry of the source matrix sits at ``(l, k)``.
    """

    map: MonomialMap
    x: Fraction
    l: int
    k: int

    @property
    def n(self) -> int:
        return self.map.n

    def canonical(self) -> ReciprocalMatrix:
        return canonical_spc(self.n, self.x)

    def reconstruct(self) -> ReciprocalMatrix:
        return monomial_conjugate(self.canonical(), self.map)


def spc_form(a: ReciprocalMatrix) -> SpcForm | None:
    """Detect a matrix that is one reciprocal pair away from consistent."""
    n, m = a.n, a.entries
    if n < 3 or is_consistent(a):
        return None
    for l, k in itertools.combinations(range(n), 2):
        mid = next(i for i in range(n) if i not in (l, k))
        forced = m[l][mid] * m[mid][k]
        repaired = a.with_pair(l, k, forced)
        if not is_consistent(repaired):
            continue
        u = repaired.column(0)
        ratio = m[l][k] / forced
        if ratio < 1:
            l, k, ratio = k, l, 1 / ratio
        rest = [i for i in range(n) if i not in (l, k)]
        perm = (l, *rest, k)
        form = SpcForm(MonomialMap(perm, tuple(u[p] for p in perm)), ratio, l, k)
        if form.reconstruct() != a:
            raise AssertionError("SPC canonicalization failed to reproduce input")
        return form
    return None


def spc_efficiency(w: Sequence, form: SpcForm) -> bool:
    """Efficiency for the matrix described by ``form``, in closed form.

    Pulled back to canonical coordinates ``v``, the efficient vectors are those
    with ``v_last <= v_i <= v_first <= x * v_last``.
    """
    if len(w) != form.n:
        raise DimensionMismatch(form.n, len(w))
    w = [Fraction(x) for x in w]
    v = [w[p] / d for p, d in zip(form.map.perm, form.map.scale)]
    first, last = v[0], v[-1]
    return all(last <= x <= first for x in v) and first <= form.x * last


# -- verdicts ----------------------------------------------------------------


class Status(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Check:
    name: str
    outcome: str
    detail: str = ""


@dataclass(frozen=True)
class EqualityVerdict:
    status: Status
    witness: Vector | None = None
    evidence: tuple[Check, ...] = ()
    witness_efficient_for: str | None = None

    def check(self, name: str) -> Check | None:
        return next((c for c in self.evidence if c.name == name), None)


def separates(w: Sequence, a: ReciprocalMatrix, b: ReciprocalMatrix) -> str | None:
    """``"A"`` or ``"B"`` if ``w`` is efficient for exactly that matrix."""
    in_a, in_b = is_efficient(w, a), is_efficient(w, b)
    if in_a == in_b:
        return None
    return "A" if in_a else "B"


def _cone_extremes(a: ReciprocalMatrix) -> list[tuple[HCycle, list[Vector]]]:
    return [(tau, extreme_vectors(a, tau)) for tau in gamma_set(a)]


def extreme_transfer_check(a: ReciprocalMatrix, b: ReciprocalMatrix) -> Vector | None:
    """First cone extreme of one matrix that is not efficient for the other."""
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)
    for x, y, name in ((a, b, "A"), (b, a, "B")):
        if not gamma_set(x):
            raise ConsistentMatrix(f"extreme transfer ({name})")
    for x, y in ((a, b), (b, a)):
        for _, gens in _cone_extremes(x):
            for e in gens:
                if not is_efficient(e, y):
                    return e
    return None


def _vsum(vectors: Sequence[Vector]) -> Vector:
    return tuple(sum(col, Fraction(0)) for col in zip(*vectors))


def _structured_candidates(a: ReciprocalMatrix) -> Iterable[Vector]:
    """Columns, cone extremes, facet centroids and cone centroids."""
    n = a.n
    for j in range(n):
        yield a.column(j)
    cones = _cone_extremes(a)
    for _, gens in cones:
        yield from gens
    for _, gens in cones:
        for skip in range(n):
            yield _vsum([g for q, g in enumerate(gens) if q != skip])
        yield _vsum(gens)


def _sampled_candidates(a: ReciprocalMatrix, rng: random.Random, draws: int) -> Iterable[Vector]:
    cones = _cone_extremes(a)
    if not cones:
        return
    n = a.n
    for _ in range(draws):
        _, gens = rng.choice(cones)
        support = [q for q in range(n) if rng.random() < 0.6] or [rng.randrange(n)]
        yield _vsum([tuple(rng.randint(1, 9) * x for x in gens[q]) for q in support])


def _nudged_candidates(a: ReciprocalMatrix, steps: int = 6) -> Iterable[Vector]:
    for _, gens in _cone_extremes(a):
        for e in gens:
            for i in range(a.n):
                for t in range(1, steps + 1):
                    for f in (1 + Fraction(1, 2**t), 1 - Fraction(1, 2**t)):
                        yield tuple(x * f if q == i else x for q, x in enumerate(e))


def find_witness(
    a: ReciprocalMatrix, b: ReciprocalMatrix, seed: int = 0, draws: int = 200
) -> tuple[Vector, str] | tuple[None, None]:
    """Search for a vector efficient for exactly one of ``a`` and ``b``.

    Exact candidates come first, then seeded random cone samples, then small
    single-coordinate nudges of extremes.
    """
    rng = random.Random(seed)
    stages = (
        itertools.chain(_structured_candidates(a), _structured_candidates(b)),
        itertools.chain(_sampled_candidates(a, rng, draws), _sampled_candidates(b, rng, draws)),
        itertools.chain(_nudged_candidates(a), _nudged_candidates(b)),
    )
    for candidates in stages:
        for w in candidates:
            side = separates(w, a, b)
            if side:
                return w, side
    return None, None


def _row_cover(a: ReciprocalMatrix, b: ReciprocalMatrix) -> tuple[HCycle, int] | None:
    """First ``(tau, k)`` of ``a`` with no cycle of ``b`` dominating it on the anchor set."""
    gb = [_path_matrix(b, nu).values for nu in gamma_set(b)]
    for tau in gamma_set(a):
        p = _path_matrix(a, tau).values
        for k in range(a.n):
            pairs = attain_set(tau, k).pairs
            if not any(_dominated_on(p, q, pairs) for q in gb):
                return tau, k
    return None


def _undominated_transfer(a: ReciprocalMatrix, b: ReciprocalMatrix) -> tuple[HCycle, int] | None:
    """First undominated ``(tau, k)`` of ``a`` not reproduced exactly by ``b``."""
    gamma_b = gamma_set(b)
    for tau in gamma_set(a):
        p = _path_matrix(a, tau).values
        for k in range(a.n):
            if not undominated(a, tau, k):
                continue
            if tau not in gamma_b:
                return tau, k
            q = _path_matrix(b, tau).values
            if any(p[i][j] != q[i][j] for i, j in attain_set(tau, k).pairs):
                return tau, k
    return None


def _pair_label(found: tuple[HCycle, int] | None) -> str:
    if found is None:
        return ""
    tau, k = found
    return f"cycle {tau.label()}, anchor {k + 1}"


def _battery(a: ReciprocalMatrix, b: ReciprocalMatrix) -> list[Check]:
    checks: list[Check] = []
    same_l = l_equal(a, b)
    checks.append(Check("l_equal", "pass" if same_l else "fail"))
    if a.n == 4:
        va, vb = min_cycles(a)[0], min_cycles(b)[0]
        checks.append(
            Check("min_cycle_product", "pass" if va == vb else "fail", f"{va} vs {vb}")
        )
    e = extreme_transfer_check(a, b)
    checks.append(
        Check(
            "extreme_transfer",
            "pass" if e is None else "fail",
            "" if e is None else "(" + ", ".join(map(str, e)) + ")",
        )
    )
    for name, fn in (("row_cover", _row_cover), ("undominated_transfer", _undominated_transfer)):
        found = fn(a, b) or fn(b, a)
        checks.append(Check(name, "pass" if found is None else "fail", _pair_label(found)))
    return checks


def decide_equal_efficient_sets(
    a: ReciprocalMatrix, b: ReciprocalMatrix, seed: int = 0
) -> EqualityVerdict:
    """Decide ``E(a) == E(b)`` where the theory allows, else report ``Unknown``.

    ``NotEqual`` always comes with a vector efficient for exactly one matrix
    when the search finds one. ``Equal`` is returned only for identical inputs.
    """
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)
    if a == b:
        return EqualityVerdict(Status.EQUAL, evidence=(Check("route", "identical"),))

    def not_equal(route: str, checks: list[Check]) -> EqualityVerdict:
        w, side = find_witness(a, b, seed)
        evidence = [Check("route", route), *checks]
        evidence.append(Check("witness", "found" if w else "missing"))
        return EqualityVerdict(Status.NOT_EQUAL, w, tuple(evidence), side)

    if is_consistent(a) or is_consistent(b):
        return not_equal("consistent", [])
    if spc_form(a) and spc_form(b):
        return not_equal("both_spc", [])
    if a.n <= 4:
        return not_equal("small_dimension", [])

    checks = _battery(a, b)
    if any(c.outcome == "fail" for c in checks):
        return not_equal("necessary_condition", checks)
    w, side = find_witness(a, b, seed)
    if w is not None:
        evidence = [Check("route", "witness_search"), *checks, Check("witness", "found")]
        return EqualityVerdict(Status.NOT_EQUAL, w, tuple(evidence), side)
    evidence = [Check("route", "undecided"), *checks, Check("witness", "missing")]
    return EqualityVerdict(Status.UNKNOWN, None, tuple(evidence))


# -- counterexample search ---------------------------------------------------

STRATEGIES = ("random", "bound-preserving")


def _nudge(rng: random.Random, value: Fraction) -> Fraction:
    step = Fraction(rng.randint(1, 9), 10 * rng.randint(1, 9))
    return value * (1 + step) if rng.random() < 0.5 else value / (1 + step)


def _candidate_pair(
    n: int,
    rng: random.Random,
    strategy: str,
    index: int,
    base: ReciprocalMatrix | None,
    entry: tuple[int, int] | None,
    values: Sequence[Fraction] | None,
) -> tuple[ReciprocalMatrix, ReciprocalMatrix]:
    if strategy == "random":
        a = random_reciprocal(n, rng)
        i, j = sorted(rng.sample(range(n), 2))
        while True:
            b = a.with_pair(i, j, _nudge(rng, a[i, j]))
            if b != a:
                return a, b
    a = base if base is not None else random_reciprocal(n, rng)
    if entry is not None and values:
        i, j = entry
        return a, a.with_pair(i, j, values[index % len(values)])
    # prefer a single-entry nudge that leaves the global lower bound fixed
    b = a
    for _ in range(8):
        i, j = entry if entry is not None else sorted(rng.sample(range(n), 2))
        b = a.with_pair(i, j, _nudge(rng, a[i, j]))
        if b != a and gamma_set(a) and gamma_set(b) and l_equal(a, b):
            break
    return a, b


def _matrix_strings(a: ReciprocalMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in a.entries]


def _verdict_row(label: str, a: ReciprocalMatrix, b: ReciprocalMatrix, v: EqualityVerdict) -> dict:
    return {
        "label": label,
        "A": _matrix_strings(a),
        "B": _matrix_strings(b),
        "status": str(v.status),
        "witness": None if v.witness is None else [str(x) for x in v.witness],
        "evidence": [{"name": c.name, "outcome": c.outcome, "detail": c.detail} for c in v.evidence],
    }


def search_counterexamples(
    n: int,
    iterations: int,
    seed: int = 0,
    strategy: str = "random",
    base: ReciprocalMatrix | None = None,
    entry: tuple[int, int] | None = None,
    values: Sequence | None = None,
    max_n: int | None = None,
) -> dict:
    """Look for distinct pairs with no separating vector found.

    Every iteration draws from its own RNG seeded by ``(seed, iteration)``, so
    reports are reproducible and independent of how the loop is split up.
    Pairs whose verdict is ``Unknown`` are listed in full; the rest are counted.
    """
    if n < 5:
        raise DimensionTooSmall(n)
    cap = max_dimension(max_n)
    if n > cap:
        raise DimensionExceedsCap(n, cap)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    if base is not None and base.n != n:
        raise DimensionMismatch(n, base.n)
    if strategy == "bound-preserving" and base is None and n == 5:
        from .known import L_EQUAL_A

        base = L_EQUAL_A
        if entry is None and values is None:
            entry = (2, 4)
            values = [Fraction(30) + Fraction(k, 10) for k in range(1, 11)]
    values = None if values is None else [Fraction(v) for v in values]

    counts = {s.value: 0 for s in Status}
    l_equal_pairs = 0
    survivors: list[dict] = []
    sanity: list[dict] = []

    if n == 5 and iterations > 0:
        from .known import L_EQUAL_A, L_EQUAL_B

        v = decide_equal_efficient_sets(L_EQUAL_A, L_EQUAL_B, seed)
        sanity.append(_verdict_row("l-equal reference pair", L_EQUAL_A, L_EQUAL_B, v))

    for it in range(iterations):
        rng = random.Random(f"{seed}:{it}")
        a, b = _candidate_pair(n, rng, strategy, it, base, entry, values)
        if a == b:
            continue
        if gamma_set(a) and gamma_set(b) and l_equal(a, b):
            l_equal_pairs += 1
        v = decide_equal_efficient_sets(a, b, seed)
        counts[v.status.value] += 1
        if v.status is Status.UNKNOWN:
            survivors.append(_verdict_row(f"iteration {it}", a, b, v))

    return {
        "schema": "effmat/1",
        "kind": "search",
        "n": n,
        "iterations": iterations,
        "seed": seed,
        "strategy": strategy,
        "counts": counts,
        "l_equal_pairs": l_equal_pairs,
        "sanity": sanity,
        "unknown": survivors,
    }
