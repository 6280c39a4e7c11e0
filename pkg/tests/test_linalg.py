import random
from fractions import Fraction

import pytest

from g9cov.cyclo import CycNum, I_UNIT, ONE, ZERO
from g9cov.group import standard_generators
from g9cov.linalg import (Mat, ShapeError, SingularMatrixError, kron,
                          mat_from_json, mat_to_json, solve_exact)


def rnd_mat(rng, n, m=None, span=3):
    m = n if m is None else m
    return Mat(n, m, [CycNum(*[Fraction(rng.randint(-span, span), rng.randint(1, 3))
                               for _ in range(4)]) for _ in range(n * m)])


def test_generator_relations():
    t, d = standard_generators()
    assert t.matmul(t) == Mat.identity(2)
    assert d ** 4 == Mat.identity(2)


def test_matmul_identity_random():
    rng = random.Random(3)
    for _ in range(20):
        m = rnd_mat(rng, 3)
        assert Mat.identity(3).matmul(m) == m
        assert m.matmul(Mat.identity(3)) == m
    with pytest.raises(ShapeError):
        rnd_mat(rng, 2).matmul(rnd_mat(rng, 3))


def test_det_examples():
    t, d = standard_generators()
    assert t.det() == CycNum(-1)
    assert d.det() == I_UNIT
    assert Mat.identity(4).det() == ONE
    with pytest.raises(ShapeError):
        Mat.zeros(2, 3).det()


def test_det_multiplicative_sampled():
    rng = random.Random(5)
    for _ in range(30):
        a, b = rnd_mat(rng, 3), rnd_mat(rng, 3)
        assert a.matmul(b).det() == a.det() * b.det()


def test_inverse_examples():
    t, d = standard_generators()
    assert d.inverse() == d ** 3
    assert t.inverse() == t
    assert Mat.identity(3).inverse() == Mat.identity(3)
    with pytest.raises(SingularMatrixError):
        Mat.from_rows([[1, 1], [1, 1]]).inverse()


def test_nullspace_examples():
    assert Mat.identity(3).nullspace() == []
    ns = Mat.zeros(2, 2).nullspace()
    assert [tuple(v.entries) for v in ns] == [(ONE, ZERO), (ZERO, ONE)]
    # hand elimination of [[1,1],[1,1]]: one free column, vector (-1, 1)
    ns = Mat.from_rows([[1, 1], [1, 1]]).nullspace()
    assert len(ns) == 1
    assert tuple(ns[0].entries) == (CycNum(-1), ONE)


def test_nullspace_exactness_and_rank():
    rng = random.Random(9)
    for _ in range(20):
        m = Mat(3, 5, [CycNum(rng.randint(-2, 2)) for _ in range(15)])
        basis = m.nullspace()
        for v in basis:
            assert all(e.is_zero() for e in m.matmul(v).entries)
        if basis:
            stacked = Mat.from_rows([[v.at(i, 0) for v in basis] for i in range(5)])
            assert stacked.nullspace() == []  # basis has full column rank


def test_kron_reference_values():
    t, d = standard_generators()
    assert kron(d, d) == Mat.diagonal([1, I_UNIT, I_UNIT, -1])
    rho21_d = Mat.diagonal([1, I_UNIT, -1])
    assert kron(d, rho21_d) == Mat.diagonal([1, I_UNIT, -1, I_UNIT, -1, -I_UNIT])
    assert kron(Mat.identity(2), Mat.identity(2)) == Mat.identity(4)


def test_kron_mixed_product_sampled():
    rng = random.Random(15)
    for _ in range(20):
        a, b = rnd_mat(rng, 2), rnd_mat(rng, 2)
        c, d = rnd_mat(rng, 3), rnd_mat(rng, 3)
        assert kron(a, c).matmul(kron(b, d)) == kron(a.matmul(b), c.matmul(d))


def test_solve_exact():
    t, _ = standard_generators()
    x = solve_exact(t, Mat.identity(2))
    assert t.matmul(x) == Mat.identity(2)
    with pytest.raises(ValueError):
        solve_exact(Mat.column([1, 0]), Mat.column([0, 1]))


def test_json_round_trip():
    rng = random.Random(21)
    m = rnd_mat(rng, 2, 3)
    assert mat_from_json(mat_to_json(m)) == m
