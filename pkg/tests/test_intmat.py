import random

import pytest

from oracles import cofactor_det, random_matrix
from tilecoh.intmat import IntMatrix, det, hstack, is_unimodular


def test_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        IntMatrix(1, 2, ((1, 2, 3),))
    with pytest.raises(TypeError):
        IntMatrix(1, 1, ((1.5,),))


def test_empty_shapes_are_legal():
    for rows, cols in ((0, 0), (0, 3), (3, 0)):
        m = IntMatrix.zeros(rows, cols)
        assert m.shape == (rows, cols)
        assert m.is_zero()
    tall = IntMatrix.from_rows([], cols=4)
    assert tall.shape == (0, 4)
    assert (IntMatrix.zeros(2, 0) @ IntMatrix.zeros(0, 3)).shape == (2, 3)


def test_immutability_and_hash():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(AttributeError):
        m.rows = 5
    assert hash(m) == hash(IntMatrix.from_rows([[1, 2], [3, 4]]))
    assert m != IntMatrix.from_rows([[1, 2]])


def test_arithmetic():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert a + b == IntMatrix.from_rows([[1, 3], [4, 4]])
    assert a - a == IntMatrix.zeros(2, 2)
    assert -a == IntMatrix.from_rows([[-1, -2], [-3, -4]])
    assert 2 * a == IntMatrix.from_rows([[2, 4], [6, 8]])
    assert a @ b == IntMatrix.from_rows([[2, 1], [4, 3]])
    assert a.transpose() == IntMatrix.from_rows([[1, 3], [2, 4]])
    assert a.pow(0) == IntMatrix.identity(2)
    assert a.pow(3) == a @ a @ a
    assert hstack(a, b).shape == (2, 4)


def test_shape_mismatch_reports_both_shapes():
    a = IntMatrix.zeros(2, 3)
    b = IntMatrix.zeros(2, 2)
    with pytest.raises(ValueError, match="2x3.*2x2"):
        a @ b
    with pytest.raises(ValueError, match="2x3.*2x2"):
        a + b


def test_det_small_cases():
    assert det(IntMatrix.identity(3)) == 1
    assert det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(IntMatrix.zeros(0, 0)) == 1
    assert det(IntMatrix.zeros(3, 3)) == 0
    with pytest.raises(ValueError, match="2x3"):
        det(IntMatrix.zeros(2, 3))


def test_det_matches_cofactor_oracle():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(0, 5)
        a = random_matrix(rng, n, n, 9)
        assert det(a) == cofactor_det(a)


def test_det_multiplicativity():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n, 5)
        b = random_matrix(rng, n, n, 5)
        assert det(a @ b) == det(a) * det(b)


def test_is_unimodular():
    assert is_unimodular(IntMatrix.identity(4))
    assert is_unimodular(IntMatrix.from_rows([[2, 1], [1, 1]]))
    assert not is_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
    assert not is_unimodular(IntMatrix.zeros(1, 2))


def test_predicates():
    u = IntMatrix.from_rows([[1, 5], [0, 2]])
    assert u.is_upper_triangular()
    assert not u.is_diagonal()
    assert IntMatrix.diagonal([3, 4]).is_diagonal()
    assert not u.transpose().is_upper_triangular()
