import random

import pytest

from effmat.core import random_reciprocal, ratio_matrix
from effmat.cycles import gamma_set
from effmat.errors import ConsistentMatrix, CycleNotInGamma, DimensionMismatch
from effmat.known import BOUND_MATRIX
from effmat.paths import (
    attain_set,
    cone_inclusion_test,
    cone_interval,
    extreme_vector,
    global_bounds,
    inv_transpose,
    path_matrix,
)

from conftest import cyc, mat

# Hand-checked path matrices and intervals of the bound matrix.
P_ALPHA = mat([[1, 1, 1, 1], ["1/7", 1, 1, 1], ["1/7", "1/7", 1, 1], ["1/7", "1/7", "1/7", 1]])
U_ALPHA = mat([[1, 7, 7, 7], [1, 1, 7, 7], [1, 1, 1, 7], [1, 1, 1, 1]])
P_BETA = mat([[1, 1, 2, 2], ["2/3", 1, 2, 2], ["1/3", "1/3", 1, "2/3"], ["1/3", "1/3", 1, 1]])
U_BETA = mat([[1, "3/2", 3, 3], [1, 1, 3, 3], ["1/2", "1/2", 1, 1], ["1/2", "1/2", "3/2", 1]])
P_GAMMA = mat([[1, 3, 3, 6], ["2/7", 1, "6/7", 2], ["2/7", 1, 1, 2], ["1/7", "3/7", "3/7", 1]])
U_GAMMA = mat([[1, "7/2", "7/2", 7], ["1/3", 1, 1, "7/3"], ["1/3", "7/6", 1, "7/3"], ["1/6", "1/2", "1/2", 1]])
L_BOUND = mat([[1, 1, 1, 1], ["1/7", 1, "6/7", 1], ["1/7", "1/7", 1, "2/3"], ["1/7", "1/7", "1/7", 1]])
U_BOUND = mat([[1, 7, 7, 7], [1, 1, 7, 7], [1, "7/6", 1, 7], [1, 1, "3/2", 1]])


@pytest.mark.parametrize(
    "label, lower, upper",
    [("12341", P_ALPHA, U_ALPHA), ("12431", P_BETA, U_BETA), ("13241", P_GAMMA, U_GAMMA)],
)
def test_bound_matrix_intervals(label, lower, upper):
    interval = cone_interval(BOUND_MATRIX, cyc(label))
    assert interval.lower.values == lower
    assert interval.upper == upper


def test_bound_matrix_global_bounds():
    bounds = global_bounds(BOUND_MATRIX)
    assert bounds.lower == L_BOUND
    assert bounds.upper == U_BOUND


def test_interval_requires_gamma_member():
    with pytest.raises(CycleNotInGamma):
        cone_interval(BOUND_MATRIX, cyc("14321"))
    with pytest.raises(ConsistentMatrix):
        global_bounds(ratio_matrix([1, 2, 3]))
    with pytest.raises(DimensionMismatch):
        path_matrix(BOUND_MATRIX, cyc("1231"))


def test_path_matrix_structure_on_random_matrices():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(3, 5)
        a = random_reciprocal(n, rng)
        for tau in gamma_set(a):
            p = path_matrix(a, tau)
            assert all(p[i, i] == 1 for i in range(n))
            for i in range(n):
                for j in range(n):
                    if i != j:
                        assert p[i, j] * p[j, i] == p.cycle_product
            rev = path_matrix(a, tau.reverse()).values
            assert rev == inv_transpose(p.values)


def test_attain_set_size_and_direction():
    tau = cyc("13241")
    s = attain_set(tau, 1)  # rooted at index 1: 1 -> 3 -> 0 -> 2
    assert (1, 3) in s and (3, 0) in s and (0, 1) not in s
    for k in range(4):
        pairs = attain_set(tau, k).pairs
        assert len(pairs) == 6
        for i in range(4):
            for j in range(i + 1, 4):
                assert ((i, j) in pairs) != ((j, i) in pairs)


def test_extreme_vector_attains_path_matrix_on_its_set():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randint(3, 5)
        a = random_reciprocal(n, rng)
        for tau in gamma_set(a):
            p = path_matrix(a, tau).values
            for k in range(n):
                w = extreme_vector(a, tau, k)
                assert w[k] == 1
                for i, j in attain_set(tau, k).pairs:
                    assert w[i] / w[j] == p[i][j]


def test_cone_inclusion_is_reflexive():
    for tau in gamma_set(BOUND_MATRIX):
        assert cone_inclusion_test(BOUND_MATRIX, tau, tau)
    assert not cone_inclusion_test(BOUND_MATRIX, cyc("12341"), cyc("13241"))


def test_global_lower_bound_is_entrywise_minimum():
    rng = random.Random(7)
    for _ in range(20):
        a = random_reciprocal(5, rng)
        gamma = gamma_set(a)
        if not gamma:
            continue
        low = global_bounds(a).lower
        for i in range(5):
            for j in range(5):
                assert low[i][j] == min(path_matrix(a, t)[i, j] for t in gamma)
