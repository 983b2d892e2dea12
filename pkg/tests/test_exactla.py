import math
from fractions import Fraction

import numpy as np

from liemoments.exactla import (det_fraction, identity_int, inv_fraction,
                                is_positive_definite,
                                leading_principal_minors, mat_vec,
                                smith_normal_form, solve_fraction)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def test_det_inv_against_numpy():
    rng = np.random.default_rng(20240811)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        m = rng.integers(-5, 6, size=(n, n)).tolist()
        d = det_fraction(m)
        assert abs(float(d) - np.linalg.det(np.array(m, dtype=float))) < 1e-6
        if d != 0:
            inv = inv_fraction(m)
            prod = _matmul(m, [list(r) for r in inv])
            assert prod == identity_int(n)


def test_solve_roundtrip():
    m = [[2, -1], [-1, 2]]
    x = solve_fraction(m, (1, 1))
    assert x == (Fraction(1), Fraction(1))
    assert mat_vec(m, x) == (Fraction(1), Fraction(1))


def test_minors_and_definiteness():
    assert leading_principal_minors([[2, -1], [-1, 2]]) == [2, 3]
    assert is_positive_definite([[2, -1], [-1, 2]])
    assert not is_positive_definite([[1, 2], [2, 1]])
    assert not is_positive_definite([[0, 0], [0, 1]])


def test_snf_properties_random():
    rng = np.random.default_rng(7)
    for _ in range(40):
        nr = int(rng.integers(1, 5))
        nc = int(rng.integers(1, 5))
        m = rng.integers(-6, 7, size=(nr, nc)).tolist()
        diag, u, v = smith_normal_form(m)
        assert abs(det_fraction(u)) == 1
        assert abs(det_fraction(v)) == 1
        prod = _matmul(_matmul([list(r) for r in u], m), [list(r) for r in v])
        for i in range(nr):
            for j in range(nc):
                expect = diag[i] if i == j and i < len(diag) else 0
                assert prod[i][j] == expect
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0


def test_snf_known_diagonals():
    # det 3 lattice quotient: invariant factors 1, 3
    diag, _, _ = smith_normal_form([[2, -1], [-1, 2]])
    assert diag == (1, 3)
    diag, _, _ = smith_normal_form([[2]])
    assert diag == (2,)
    diag, _, _ = smith_normal_form([[2, 0], [0, 2]])
    assert diag == (2, 2)


def test_snf_divisor_product_matches_det():
    rng = np.random.default_rng(99)
    for _ in range(25):
        n = int(rng.integers(1, 5))
        m = rng.integers(-4, 5, size=(n, n)).tolist()
        diag, _, _ = smith_normal_form(m)
        assert math.prod(diag) == abs(det_fraction(m))
