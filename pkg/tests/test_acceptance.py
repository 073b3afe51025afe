"""End-to-end acceptance checks, one test per criterion.

Each test records PASS/FAIL in ``conftest.ACCEPTANCE``; the terminal summary
prints one line per criterion after the run.
"""

from __future__ import annotations

import contextlib
import itertools
import json
import random
import time
from fractions import Fraction

from effmat import cli
from effmat.core import (
    apply_monomial,
    monomial_conjugate,
    normalize,
    random_monomial,
    random_positive_vector,
    random_reciprocal,
    ratios,
)
from effmat.cycles import _gamma, cycle_product, enumerate_hcycles, gamma_set
from effmat.efficiency import (
    digraph_oracle,
    dominates_fit,
    efficiency_report,
    is_efficient,
    refute_by_perturbation,
    sample_cone,
)
from effmat.equality import (
    Status,
    canonical_spc,
    decide_equal_efficient_sets,
    l_equal,
    search_counterexamples,
    separates,
    undominated,
)
from effmat.io import MatrixDocument, dumps
from effmat.known import (
    BOUND_MATRIX,
    DECREASING_MATRIX,
    L_EQUAL_A,
    L_EQUAL_B,
    L_EQUAL_WITNESS,
    corner_matrix,
    star_matrix,
)
from effmat.orders import (
    cone_unique_order,
    global_pairwise_above,
    global_unique_order,
    partial_order_partition,
)
from effmat.paths import (
    _path_matrix,
    attain_set,
    cone_interval,
    extreme_vector,
    extreme_vectors,
    global_bounds,
    inv_transpose,
    path_matrix,
)

from conftest import ACCEPTANCE, cyc, mat


@contextlib.contextmanager
def criterion(number: int, title: str):
    ACCEPTANCE[number] = (title, False)
    try:
        yield
    except BaseException:
        print(f"FAIL  criterion {number}: {title}")
        raise
    ACCEPTANCE[number] = (title, True)
    print(f"PASS  criterion {number}: {title}")


def cold_caches():
    _gamma.cache_clear()
    _path_matrix.cache_clear()
    attain_set.cache_clear()


def order_of(w) -> tuple[int, ...]:
    assert len(set(w)) == len(w), "ties make the order ambiguous"
    return tuple(sorted(range(len(w)), key=lambda q: -w[q]))


# -- frozen reference values (1-based rows as printed, 0-based in code) --------

BOUND_CYCLES = ["12341", "12431", "13241"]
BOUND_PRODUCTS = [Fraction(1, 7), Fraction(2, 3), Fraction(6, 7)]
BOUND_LOWER = [
    mat([[1, 1, 1, 1], ["1/7", 1, 1, 1], ["1/7", "1/7", 1, 1], ["1/7", "1/7", "1/7", 1]]),
    mat([[1, 1, 2, 2], ["2/3", 1, 2, 2], ["1/3", "1/3", 1, "2/3"], ["1/3", "1/3", 1, 1]]),
    mat([[1, 3, 3, 6], ["2/7", 1, "6/7", 2], ["2/7", 1, 1, 2], ["1/7", "3/7", "3/7", 1]]),
]
BOUND_UPPER = [
    mat([[1, 7, 7, 7], [1, 1, 7, 7], [1, 1, 1, 7], [1, 1, 1, 1]]),
    mat([[1, "3/2", 3, 3], [1, 1, 3, 3], ["1/2", "1/2", 1, 1], ["1/2", "1/2", "3/2", 1]]),
    mat([[1, "7/2", "7/2", 7], ["1/3", 1, 1, "7/3"], ["1/3", "7/6", 1, "7/3"], ["1/6", "1/2", "1/2", 1]]),
]
BOUND_L = mat([[1, 1, 1, 1], ["1/7", 1, "6/7", 1], ["1/7", "1/7", 1, "2/3"], ["1/7", "1/7", "1/7", 1]])

L_EQUAL_LOWER = mat(
    [
        [1, "1/110", "1/10", "1/10", "1/10"],
        ["1/500", 1, "1/1000", "11/5000", "1/10"],
        ["1/500", "1/500", 1, "99/500", 1],
        ["1/500", "1/5000", "1/5000", 1, "11/90"],
        ["1/500", "1/25000", "1/5000", "1/5000", 1],
    ]
)


def test_criterion_01_bound_matrix_reproduction():
    with criterion(1, "bound matrix cycles, intervals and L reproduced in < 0.1 s"):
        cold_caches()
        start = time.perf_counter()
        gamma = gamma_set(BOUND_MATRIX)
        intervals = [cone_interval(BOUND_MATRIX, t) for t in gamma]
        lower = global_bounds(BOUND_MATRIX).lower
        elapsed = time.perf_counter() - start
        assert [t.label() for t in gamma] == BOUND_CYCLES
        assert [gamma.product(t) for t in gamma] == BOUND_PRODUCTS
        for interval, lo, up in zip(intervals, BOUND_LOWER, BOUND_UPPER):
            assert interval.lower.values == lo
            assert interval.upper == up
        assert lower == BOUND_L
        assert elapsed < 0.1, f"{elapsed:.3f}s"


def test_criterion_02_equal_lower_bounds_distinct_sets(tmp_path, capsys):
    with criterion(2, "L-equal 5x5 pair: same L, separating vector, compare says NotEqual, < 0.5 s"):
        fa, fb = tmp_path / "a.json", tmp_path / "b.json"
        fa.write_text(dumps(MatrixDocument(L_EQUAL_A).to_json()))
        fb.write_text(dumps(MatrixDocument(L_EQUAL_B).to_json()))
        cold_caches()
        start = time.perf_counter()
        la, lb = global_bounds(L_EQUAL_A).lower, global_bounds(L_EQUAL_B).lower
        in_a = efficiency_report(L_EQUAL_WITNESS, L_EQUAL_A).efficient
        in_b = efficiency_report(L_EQUAL_WITNESS, L_EQUAL_B).efficient
        code = cli.main(["compare", str(fa), str(fb), "--json"])
        elapsed = time.perf_counter() - start
        report = json.loads(capsys.readouterr().out)
        assert la == lb == L_EQUAL_LOWER
        assert sum(1 for i in range(5) for j in range(5) if i != j) == 20
        assert in_a and not in_b
        assert code == 1 and report["status"] == "NotEqual"
        witness = tuple(Fraction(x) for x in report["witness"])
        assert separates(witness, L_EQUAL_A, L_EQUAL_B) == report["witness_efficient_for"]
        assert elapsed < 0.5, f"{elapsed:.3f}s"


def test_criterion_03_decreasing_matrix():
    with criterion(3, "decreasing matrix: global order 1,2,3,4 and two cycles 1/2, 8/9"):
        gamma = gamma_set(DECREASING_MATRIX)
        assert [t.label() for t in gamma] == ["12341", "14231"]
        assert [gamma.product(t) for t in gamma] == [Fraction(1, 2), Fraction(8, 9)]
        assert global_unique_order(DECREASING_MATRIX) == (0, 1, 2, 3)


def test_criterion_04_bound_matrix_orders():
    with criterion(4, "bound matrix: per-cone orders, no global order, 1 above all"):
        orders = [cone_unique_order(BOUND_MATRIX, cyc(c)) for c in BOUND_CYCLES]
        assert orders == [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]
        assert global_unique_order(BOUND_MATRIX) is None
        assert {(0, 1), (0, 2), (0, 3)} <= global_pairwise_above(BOUND_MATRIX)


def test_criterion_05_star_matrix():
    with criterion(5, "star matrix: blocks {1,2},{3,4}; three extreme orders, never decreasing"):
        alpha = cyc("12341")
        expected = {(1, 0, 3, 2), (0, 1, 3, 2), (1, 0, 2, 3)}
        for free in (1, 2, Fraction(1, 3), 7):
            a = star_matrix(free)
            assert partial_order_partition(a, alpha).as_lists() == [[0, 1], [2, 3]]
            seen = {order_of(e) for e in extreme_vectors(a, alpha)}
            assert seen == expected
            assert (0, 1, 2, 3) not in seen


def test_criterion_06_corner_matrix():
    with criterion(6, "corner matrix a=2: alpha extremes and undominated anchors"):
        a = corner_matrix(2)
        alpha, gamma = cyc("12341"), cyc("13241")
        got = {normalize(extreme_vector(a, alpha, k)) for k in range(4)}
        want = {normalize(tuple(Fraction(x) for x in v)) for v in [(1, 1, 1, 1), (2, 2, 2, 1), (2, 1, 1, 1), (2, 2, 1, 1)]}
        assert got == want
        assert [undominated(a, alpha, k) for k in range(4)] == [False, False, True, False]
        assert [undominated(a, gamma, k) for k in range(4)] == [False, True, False, False]


def test_criterion_07_extreme_vector_properties():
    with criterion(7, "200 random matrices: extremes efficient, tight on S_k, tight set in one S_k'"):
        rng = random.Random(701)
        matrices = failures = 0
        while matrices < 200:
            n = rng.choice((3, 4, 5))
            a = random_reciprocal(n, rng)
            gamma = gamma_set(a)
            if not gamma:
                continue
            matrices += 1
            for tau in gamma:
                p = path_matrix(a, tau).values
                for k in range(n):
                    w = extreme_vector(a, tau, k)
                    rep = efficiency_report(w, a)
                    big_w = ratios(w)
                    ok = rep.efficient and tau in rep.member_cones
                    ok = ok and all(big_w[i][j] == p[i][j] for i, j in attain_set(tau, k).pairs)
                    ok = ok and any(rep.tight_positions[tau] <= attain_set(tau, q).pairs for q in range(n))
                    failures += not ok
        assert failures == 0


def test_criterion_08_oracle_agreement():
    with criterion(8, "1000 random (A, w): cone test, digraph and refuter agree"):
        disagreements = certificates = 0
        for i in range(1000):
            rng = random.Random(f"oracle:{i}")
            n = rng.randint(3, 5)
            a = random_reciprocal(n, rng)
            gamma = gamma_set(a)
            if i % 2 == 0 and gamma:
                tau = rng.choice(gamma.cycles)
                w = sample_cone(a, tau, [rng.randint(0, 3) for _ in range(n - 1)] + [1])
            else:
                w = random_positive_vector(n, rng)
            cone = efficiency_report(w, a).efficient
            graph = digraph_oracle(w, a)
            v = refute_by_perturbation(w, a, budget=16, seed=i)
            if v is not None:
                certificates += 1
                if cone or graph or not dominates_fit(a, v, w):
                    disagreements += 1
            if cone != graph:
                disagreements += 1
        print(f"verified refutation certificates: {certificates}")
        assert disagreements == 0


def random_spc(n: int, rng: random.Random):
    x = Fraction(rng.randint(3, 30), rng.randint(1, 2))
    return monomial_conjugate(canonical_spc(n, x), random_monomial(n, rng))


def test_criterion_09_spc_pairs():
    with criterion(9, "200 distinct SPC pairs: L differs, NotEqual with verified witness"):
        rng = random.Random(901)
        pairs = failures = 0
        while pairs < 200:
            n = rng.randint(3, 6)
            a, b = random_spc(n, rng), random_spc(n, rng)
            if a == b:
                continue
            pairs += 1
            v = decide_equal_efficient_sets(a, b)
            ok = not l_equal(a, b) and v.status is Status.NOT_EQUAL
            ok = ok and v.witness is not None and separates(v.witness, a, b) is not None
            failures += not ok
        assert failures == 0


def test_criterion_10_four_by_four_pairs():
    with criterion(10, "200 distinct 4x4 pairs: NotEqual with verified witness, no Unknown"):
        rng = random.Random(1001)
        pairs = failures = 0
        while pairs < 200:
            a = random_reciprocal(4, rng)
            if pairs % 2:
                b = random_reciprocal(4, rng)
            else:
                # single-entry changes are the hard case: most structure survives
                i, j = sorted(rng.sample(range(4), 2))
                b = a.with_pair(i, j, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
            if a == b:
                continue
            pairs += 1
            v = decide_equal_efficient_sets(a, b)
            ok = v.status is Status.NOT_EQUAL and v.witness is not None
            ok = ok and separates(v.witness, a, b) is not None
            failures += not ok
        assert failures == 0


def test_criterion_11_structural_invariants():
    with criterion(11, "path matrix identities, anchor sets, monomial equivariance"):
        rng = random.Random(1101)
        for _ in range(40):
            n = rng.randint(3, 5)
            a = random_reciprocal(n, rng)
            for tau in enumerate_hcycles(n):
                p = path_matrix(a, tau)
                prod = cycle_product(a, tau)
                for i, j in itertools.permutations(range(n), 2):
                    assert p[i, j] * p[j, i] == prod
                assert path_matrix(a, tau.reverse()).values == inv_transpose(p.values)
                for k in range(n):
                    pairs = attain_set(tau, k).pairs
                    assert len(pairs) == (n * n - n) // 2
                    for i, j in itertools.combinations(range(n), 2):
                        assert ((i, j) in pairs) != ((j, i) in pairs)
        for _ in range(100):
            n = rng.randint(3, 5)
            a = random_reciprocal(n, rng)
            s = random_monomial(n, rng)
            w = random_positive_vector(n, rng)
            b = monomial_conjugate(a, s)
            assert is_efficient(w, a) == is_efficient(apply_monomial(s, w), b)
            gamma = gamma_set(a)
            if gamma:
                tau = rng.choice(gamma.cycles)
                e = extreme_vector(a, tau, rng.randrange(n))
                assert is_efficient(apply_monomial(s, e), b)


def test_criterion_12_performance(tmp_path, capsys):
    with criterion(12, "n=8 full analyze < 10 s; n=5 search of 1000 iterations < 60 s"):
        path = tmp_path / "n8.json"
        path.write_text(dumps(MatrixDocument(random_reciprocal(8, random.Random(1201))).to_json()))
        cold_caches()
        start = time.perf_counter()
        code = cli.main(["analyze", str(path), "--full", "--json"])
        analyze = time.perf_counter() - start
        report = json.loads(capsys.readouterr().out)
        assert code == 0 and len(report["path_matrices"]) == 5040

        cold_caches()
        start = time.perf_counter()
        result = search_counterexamples(5, 1000, seed=1202)
        search = time.perf_counter() - start
        assert sum(result["counts"].values()) == 1000
        assert result["sanity"][0]["status"] == "NotEqual"
        print(f"analyze n=8: {analyze:.2f}s, search n=5 x1000: {search:.2f}s")
        assert analyze < 10, f"{analyze:.2f}s"
        assert search < 60, f"{search:.2f}s"
