import random
from math import gcd

import pytest

from conftest import PENTAGON_H2_FREE_BLOCK
from oracles import random_matrix
from tilecoh.intmat import IntMatrix, det
from tilecoh.normalforms import (
    characteristic_polynomial,
    hermite_normal_form,
    integer_eigen,
    inverse_unimodular,
    kernel_basis,
    smith_normal_form,
)


def assert_smith_axioms(a, snf):
    assert snf.p @ a @ snf.q == snf.d
    assert abs(det(snf.p)) == 1
    assert abs(det(snf.q)) == 1
    assert snf.p @ snf.p_inv == IntMatrix.identity(a.rows)
    assert snf.q @ snf.q_inv == IntMatrix.identity(a.cols)
    assert snf.d.is_diagonal()
    diag = snf.d.diagonal_entries()
    assert all(v >= 0 for v in diag)
    nonzero = [v for v in diag if v]
    assert list(diag[: len(nonzero)]) == nonzero, "zeros must trail"
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:]))
    assert snf.rank == len(nonzero)


def test_snf_identity():
    snf = smith_normal_form(IntMatrix.identity(3))
    assert snf.d == IntMatrix.identity(3)
    assert_smith_axioms(IntMatrix.identity(3), snf)


def test_snf_determinantal_divisor_oracle():
    # first invariant factor = gcd of entries, product = |det|
    a = IntMatrix.diagonal([4, 6])
    g = gcd(4, 6)
    assert smith_normal_form(a).invariant_factors == (g, abs(det(a)) // g)
    b = IntMatrix.from_rows([[1, 2], [3, 4]])
    g = 1
    assert smith_normal_form(b).invariant_factors == (g, abs(det(b)) // g)


def test_snf_empty_shapes():
    for rows, cols in ((0, 0), (0, 4), (4, 0)):
        a = IntMatrix.zeros(rows, cols)
        snf = smith_normal_form(a)
        assert snf.rank == 0
        assert snf.p == IntMatrix.identity(rows)
        assert_smith_axioms(a, snf)


def test_snf_deterministic():
    a = IntMatrix.from_rows([[6, 4, 2], [2, 8, 4], [0, 2, 2]])
    first = smith_normal_form(a)
    second = smith_normal_form(a)
    assert first == second


def test_snf_axioms_randomized():
    rng = random.Random(2024)
    for _ in range(250):
        rows, cols = rng.randint(0, 6), rng.randint(0, 6)
        a = random_matrix(rng, rows, cols, 9)
        assert_smith_axioms(a, smith_normal_form(a))


def solve_in_column_lattice(h, v):
    """Greedy integer solve of h @ x = v against a staircase matrix."""
    residue = list(v)
    for j in range(h.cols):
        col = h.column(j)
        pivot_row = next((i for i, val in enumerate(col) if val), None)
        if pivot_row is None:
            break
        if residue[pivot_row] % col[pivot_row]:
            return False
        q = residue[pivot_row] // col[pivot_row]
        for i in range(h.rows):
            residue[i] -= q * col[i]
    return all(x == 0 for x in residue)


def test_hnf_trivial_cases():
    ident = IntMatrix.identity(3)
    h, u = hermite_normal_form(ident)
    assert h == ident and u == ident
    zero = IntMatrix.zeros(2, 3)
    h, u = hermite_normal_form(zero)
    assert h == zero and u == IntMatrix.identity(3)


def test_hnf_preserves_column_lattice():
    a = IntMatrix.from_rows([[2, 4], [6, 8]])
    h, u = hermite_normal_form(a)
    assert a @ u == h
    assert abs(det(u)) == 1
    for j in range(a.cols):
        assert solve_in_column_lattice(h, a.column(j))
        assert solve_in_column_lattice(a, h.column(j)) or solve_in_column_lattice(
            h, h.column(j)
        )


def test_hnf_randomized():
    rng = random.Random(5)
    for _ in range(200):
        rows, cols = rng.randint(0, 4), rng.randint(0, 4)
        a = random_matrix(rng, rows, cols, 6)
        h, u = hermite_normal_form(a)
        assert a @ u == h
        assert abs(det(u)) == 1
        for j in range(cols):
            assert solve_in_column_lattice(h, a.column(j))


def test_rank_agreement_between_forms():
    rng = random.Random(6)
    for _ in range(150):
        rows, cols = rng.randint(0, 5), rng.randint(0, 5)
        a = random_matrix(rng, rows, cols, 6)
        snf_rank = smith_normal_form(a).rank
        h, _ = hermite_normal_form(a)
        hnf_rank = sum(1 for j in range(h.cols) if any(h.column(j)))
        assert snf_rank == hnf_rank
        assert kernel_basis(a).cols == cols - snf_rank


def test_kernel_cases():
    k = kernel_basis(IntMatrix.zeros(2, 3))
    assert k.cols == 3
    k = kernel_basis(IntMatrix.from_rows([[1, 1]]))
    assert k.cols == 1
    x, y = k.column(0)
    assert (x, y) in ((1, -1), (-1, 1))


def test_kernel_correctness_randomized():
    rng = random.Random(8)
    for _ in range(150):
        rows, cols = rng.randint(0, 4), rng.randint(0, 4)
        a = random_matrix(rng, rows, cols, 5)
        k = kernel_basis(a)
        assert (a @ k).is_zero()
        # completeness: any kernel vector solves in the basis lattice
        h, _ = hermite_normal_form(k)
        for _ in range(5):
            coeffs = IntMatrix.column_vector([rng.randint(-3, 3) for _ in range(k.cols)])
            vec = k @ coeffs
            assert (a @ vec).is_zero()
            assert solve_in_column_lattice(h, vec.column(0))


def test_charpoly_small():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert characteristic_polynomial(a) == (1, -5, -2)
    assert characteristic_polynomial(IntMatrix.identity(3)) == (1, -3, 3, -1)
    assert characteristic_polynomial(IntMatrix.zeros(0, 0)) == (1,)


def test_integer_eigen_examples():
    pairs = integer_eigen(IntMatrix.identity(2))
    assert len(pairs) == 1 and pairs[0][0] == 1
    pairs = integer_eigen(IntMatrix.diagonal([2, 3]))
    assert [lam for lam, _ in pairs] == [3, 2]
    for lam, vec in pairs:
        assert IntMatrix.diagonal([2, 3]) @ vec == lam * vec
    assert integer_eigen(IntMatrix.from_rows([[0, -1], [1, 0]])) == []


def test_integer_eigen_pentagon_free_block():
    pairs = integer_eigen(PENTAGON_H2_FREE_BLOCK)
    assert pairs[0][0] == 6
    vec = pairs[0][1].column(0)
    assert vec in ((1, 0, 1, 1, 1), (-1, 0, -1, -1, -1))


def test_integer_eigen_properties():
    rng = random.Random(9)
    for _ in range(120):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n, 4)
        for lam, vec in integer_eigen(a):
            assert a @ vec == lam * vec
            g = 0
            for v in vec.column(0):
                g = gcd(g, v)
            assert g == 1


def test_inverse_unimodular():
    g = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert g @ inverse_unimodular(g) == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse_unimodular(IntMatrix.diagonal([2, 1]))
