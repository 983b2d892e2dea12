from fractions import Fraction

import numpy as np
import pytest

from liemoments.exactla import mat_vec
from liemoments.rootsys import (ConfigurationError, build_root_system,
                                reflect_covector, reflect_weight)
from liemoments.repweights import (a_lambda, is_regular, weight_system,
                                   weyl_dimension)

import oracles


def test_weyl_dimension_known_values():
    a1 = build_root_system("A1")
    assert [weyl_dimension(a1, (m,)) for m in range(6)] == [1, 2, 3, 4, 5, 6]
    a2 = build_root_system("A2")
    assert weyl_dimension(a2, (1, 0)) == 3
    assert weyl_dimension(a2, (0, 1)) == 3
    assert weyl_dimension(a2, (1, 1)) == 8
    assert weyl_dimension(a2, (2, 2)) == 27
    b2 = build_root_system("B2")
    assert weyl_dimension(b2, (1, 0)) == 5
    assert weyl_dimension(b2, (0, 1)) == 4
    assert weyl_dimension(b2, (1, 1)) == 16
    g2 = build_root_system("G2")
    assert weyl_dimension(g2, (1, 0)) == 7
    assert weyl_dimension(g2, (0, 1)) == 14
    assert weyl_dimension(build_root_system("A1xA1"), (2, 3)) == 12


def test_rejects_non_dominant():
    rs = build_root_system("A2")
    with pytest.raises(ConfigurationError):
        weyl_dimension(rs, (-1, 0))
    with pytest.raises(ConfigurationError):
        weight_system(rs, (1,))


def test_weight_system_a1():
    rs = build_root_system("A1")
    assert weight_system(rs, (3,)).entries == {(3,): 1, (1,): 1,
                                               (-1,): 1, (-3,): 1}


def test_weight_system_a2_adjoint():
    rs = build_root_system("A2")
    ws = weight_system(rs, (1, 1))
    assert ws.entries[(0, 0)] == 2
    roots = set(rs.positive_roots)
    for w, m in ws.entries.items():
        if w != (0, 0):
            assert m == 1
            assert w in roots or tuple(-c for c in w) in roots
    assert ws.dimension() == 8


def test_weight_system_matches_weyl_formula():
    cases = [("A1", (4,)), ("A2", (1, 1)), ("A2", (2, 1)), ("B2", (1, 1)),
             ("B2", (0, 2)), ("G2", (1, 0)), ("A1xA1", (1, 2))]
    for spec, lam in cases:
        rs = build_root_system(spec)
        assert weight_system(rs, lam).entries == \
            oracles.weyl_formula_multiplicities(rs, lam)


def test_weight_sums_random():
    rng = np.random.default_rng(20240812)
    specs = ["A1", "A2", "B2"]
    for _ in range(30):
        rs = build_root_system(specs[int(rng.integers(len(specs)))])
        lam = tuple(int(c) for c in rng.integers(0, 5, size=rs.rank))
        if weyl_dimension(rs, lam) > 10 ** 4:
            continue
        ws = weight_system(rs, lam)
        assert ws.dimension() == weyl_dimension(rs, lam)
        for i in range(rs.rank):
            assert sum(m * w[i] for w, m in ws.entries.items()) == 0


def test_weight_system_cached():
    rs = build_root_system("A2")
    assert weight_system(rs, (2, 1)) is weight_system(rs, (2, 1))


def test_a_lambda_small_cases():
    a1 = build_root_system("A1")
    assert a_lambda(a1, (1,)).matrix == ((Fraction(1),),)
    assert a_lambda(a1, (2,)).matrix == ((Fraction(8, 3),),)
    a2 = build_root_system("A2")
    m = a_lambda(a2, (1, 0)).matrix
    assert m == ((Fraction(2, 3), Fraction(-1, 3)),
                 (Fraction(-1, 3), Fraction(2, 3)))


def test_a_lambda_positive_definite_and_symmetric():
    rng = np.random.default_rng(5)
    for spec in ("A2", "B2", "A1xA1"):
        rs = build_root_system(spec)
        for _ in range(5):
            lam = tuple(int(c) for c in rng.integers(1, 4, size=rs.rank))
            sm = a_lambda(rs, lam)
            assert sm.matrix == tuple(tuple(row[i] for row in sm.matrix)
                                      for i in range(rs.rank))
            assert sm.det > 0


def test_a_lambda_weyl_equivariance():
    # the moment matrix intertwines the covector action with the weight
    # action: A(s_i x) = s_i(A x)
    rng = np.random.default_rng(11)
    for spec, lam in [("A2", (1, 1)), ("B2", (1, 2)), ("G2", (1, 1))]:
        rs = build_root_system(spec)
        sm = a_lambda(rs, lam)
        for _ in range(5):
            x = tuple(Fraction(int(c), 5)
                      for c in rng.integers(-9, 10, size=rs.rank))
            for i in range(rs.rank):
                lhs = sm.apply(reflect_covector(rs, x, i))
                rhs = reflect_weight(rs, sm.apply(x), i)
                assert tuple(lhs) == tuple(rhs)


def test_solve_inverts_apply():
    rs = build_root_system("B2")
    sm = a_lambda(rs, (1, 1))
    x = sm.solve(rs.rho)
    assert tuple(sm.apply(x)) == (Fraction(1), Fraction(1))


def test_is_regular():
    rs = build_root_system("A2")
    assert is_regular(rs, (1, 1))
    assert not is_regular(rs, (1, 0))
    assert not is_regular(rs, (0, 0))
