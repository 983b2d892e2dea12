import math
from fractions import Fraction

import pytest

from liemoments.asymptotics import (ClassFunction, HypothesisError,
                                    biane_dimension_estimate, cycle_constants,
                                    leading_term_I, leading_term_K,
                                    mehta_closed_form, nu_character,
                                    vanish_leading_constant, weyl_equivariant)
from liemoments.charring import CycleType
from liemoments.repweights import a_lambda, weyl_dimension
from liemoments.rootsys import build_root_system, kappa


def test_cycle_constants():
    assert cycle_constants(CycleType((2, 0, 1))) == (3, 5, 11)
    assert cycle_constants(CycleType(())) == (0, 0, 0)


def test_nu_character_a1():
    rs = build_root_system("A1")
    psi = (Fraction(1, 2),)
    assert nu_character(rs, (1,), 3, psi) == -1
    assert nu_character(rs, (1,), 4, psi) == 1
    assert nu_character(rs, (1,), 0, psi) == 1
    assert nu_character(rs, (2,), 3, psi) == 1


def test_nu_character_trivial_on_root_lattice():
    rs = build_root_system("A2")
    for psi in rs.center.elements:
        assert nu_character(rs, (1, 1), 5, psi) == 1


def test_class_function_one():
    rs = build_root_system("A2")
    f = ClassFunction.one(2)
    assert f.is_trivial_one()
    assert f.value_at_identity(rs) == 1
    for psi in rs.center.elements:
        assert f.central_value(rs, psi) == 1


def test_class_function_central_values():
    rs = build_root_system("A2")
    f = ClassFunction((((1, 0), 2.0),))
    vals = [f.central_value(rs, psi) for psi in rs.center.elements]
    assert vals[0] == 6.0
    # the nontrivial central elements multiply the standard character by the
    # two primitive cube roots of unity, so the three values sum to zero
    assert abs(sum(vals)) < 1e-12
    g = ClassFunction((((1, 0), 1.0), ((0, 1), 1.0)))
    total = sum(g.central_value(rs, psi) for psi in rs.center.elements)
    assert abs(total.imag) < 1e-13


def test_leading_term_I_a1_values():
    rs = build_root_system("A1")
    a = CycleType((1,))
    for n in (2, 10, 100, 160):
        est = leading_term_I(rs, (1,), a, n)
        want = 4 * 2 ** n / (math.sqrt(2 * math.pi) * n ** 1.5)
        assert est.value == pytest.approx(want, rel=1e-12)
        assert est.pi_sum == 2
    for n in (1, 3, 101):
        est = leading_term_I(rs, (1,), a, n)
        assert est.value == 0.0
        assert est.pi_sum == 0


def test_estimate_reconstruction():
    rs = build_root_system("A2")
    est = leading_term_I(rs, (1, 1), CycleType((1,)), 12)
    rebuilt = (math.exp(est.log_dim_power) * est.prefactor
               * float(est.kappa_term) * est.pi_sum.real)
    assert est.value == pytest.approx(rebuilt, rel=1e-12)
    assert math.log(abs(est.value)) == pytest.approx(est.log_abs_value(),
                                                     abs=1e-10)
    d = est.to_dict()
    assert d["N"] == 12
    assert d["kappa_term"] == str(est.kappa_term)


def test_leading_term_manual_assembly():
    # independent reassembly from dimension, second-moment form and kappa
    rs = build_root_system("A1")
    n = 9
    est = leading_term_I(rs, (2,), CycleType((1,)), n)
    assert est.pi_sum == 2  # 2 omega lies in the root lattice
    dim = weyl_dimension(rs, (2,))
    sm = a_lambda(rs, (2,))
    manual = (dim ** n
              * (2 * math.pi) ** rs.num_positive_roots
              / ((2 * math.pi * n) ** (rs.dim_group / 2)
                 * math.sqrt(sm.det))
              * float(kappa(rs, sm.solve(rs.rho)))
              * 2)
    assert est.value == pytest.approx(manual, rel=1e-12)


def test_leading_term_hypotheses():
    rs = build_root_system("A1")
    with pytest.raises(HypothesisError):
        leading_term_I(rs, (0,), CycleType((1,)), 4)       # not regular
    with pytest.raises(HypothesisError):
        leading_term_I(rs, (1,), CycleType((0, 1)), 4)     # gcd 2
    with pytest.raises(HypothesisError):
        leading_term_I(rs, (1,), CycleType((1,)), 0)       # bad index
    with pytest.raises(HypothesisError):
        leading_term_K(rs, (1,), CycleType((2,)), CycleType((1,)), 4)
    with pytest.raises(HypothesisError):
        leading_term_K(rs, (1,), CycleType((0, 1)), CycleType((0, 1)), 4)
    # gcd is taken over the union of supports: squares on one side are fine
    # when the other side contributes an odd power and the totals balance
    est = leading_term_K(rs, (1,), CycleType((0, 3)), CycleType((6,)), 2)
    assert est.value > 0


def test_leading_term_K_values():
    rs = build_root_system("A1")
    for n in (1, 2, 40, 160):
        est = leading_term_K(rs, (1,), CycleType((1,)), CycleType((1,)), n)
        want = 4 ** n / (math.sqrt(math.pi) * n ** 1.5)
        assert est.value == pytest.approx(want, rel=1e-12)
        assert est.pi_sum == 2
    a2 = build_root_system("A2")
    est = leading_term_K(a2, (1, 1), CycleType((1,)), CycleType((1,)), 7)
    assert est.pi_sum == 3  # the constant test function sums to |center|


def test_biane_estimate_a1():
    rs = build_root_system("A1")
    for n in (10, 60, 120):
        got = biane_dimension_estimate(rs, (2,), n)
        want = 2 * 3 ** n * (3 / 4) / (math.sqrt(2 * math.pi) * n ** 1.5
                                       * math.sqrt(8 / 3))
        assert got == pytest.approx(want, rel=1e-12)
    with pytest.raises(HypothesisError):
        biane_dimension_estimate(rs, (1,), 10)   # not in the root lattice
    with pytest.raises(HypothesisError):
        biane_dimension_estimate(rs, (0,), 10)   # not regular


def test_vanish_leading_constant_a1():
    rs = build_root_system("A1")
    got = vanish_leading_constant(rs, [[1]], 1.0, 0.0, 1)
    assert got == pytest.approx(4 * (2 * math.pi) ** 2.5, rel=1e-12)
    # index dependence: (2 pi / N)^{3/2} and e^{N phi0}
    got4 = vanish_leading_constant(rs, [[1]], 1.0, 0.5, 4)
    assert got4 == pytest.approx(4 * (2 * math.pi) ** 2.5 * 4 ** -1.5
                                 * math.exp(2.0), rel=1e-12)
    with pytest.raises(HypothesisError):
        vanish_leading_constant(rs, [[1]], 1.0, 0.0, 0)


def test_quadratic_form_validation():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        mehta_closed_form(rs, [[1, 0], [0, 2]])      # not equivariant
    with pytest.raises(ValueError):
        mehta_closed_form(rs, [[-2, 1], [1, -2]])    # not positive definite
    with pytest.raises(ValueError):
        mehta_closed_form(rs, [[1]])                 # wrong shape
    assert weyl_equivariant(rs, a_lambda(rs, (2, 1)).matrix)
    assert weyl_equivariant(rs, [[2, -1], [-1, 2]])
    assert not weyl_equivariant(rs, [[2, 1], [1, 3]])


def test_mehta_closed_form_a1():
    rs = build_root_system("A1")
    assert mehta_closed_form(rs, [[1]]) == \
        pytest.approx(4 * math.sqrt(2 * math.pi), rel=1e-13)
    # kappa has degree one here, so scaling the form by c divides the value
    # by c^{3/2}
    assert mehta_closed_form(rs, [[4]]) == \
        pytest.approx(4 * math.sqrt(2 * math.pi) / 8, rel=1e-13)


def test_composition_identity():
    # the one-sided leading term reassembles from the vanishing-order
    # constant evaluated at the critical Hessian scale
    for spec, lam in [("A1", (1,)), ("A1", (3,)), ("A2", (1, 1))]:
        rs = build_root_system(spec)
        a = CycleType((1, 1))
        n = 6
        est = leading_term_I(rs, lam, a, n)
        sm = a_lambda(rs, lam)
        h = [[(2 * math.pi) ** 2 * a.quad * float(x) for x in row]
             for row in sm.matrix]
        dim = weyl_dimension(rs, lam)
        v = vanish_leading_constant(rs, h, 1.0, a.size * math.log(dim), n)
        rebuilt = v / rs.weyl_order * est.pi_sum.real
        assert rebuilt == pytest.approx(est.value, rel=1e-12)


def test_pi_sum_real_for_real_class_functions():
    # conjugate center elements pair up, so the central sum of a real
    # combination of characters has negligible imaginary part
    rs = build_root_system("A2")
    f = ClassFunction((((1, 0), 1.5), ((1, 1), 0.25)))
    est = leading_term_I(rs, (1, 1), CycleType((1,)), 3, f=f)
    assert abs(est.pi_sum.imag) < 1e-14 * max(1.0, abs(est.pi_sum.real))
