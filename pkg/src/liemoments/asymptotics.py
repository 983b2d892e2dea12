"""Closed-form leading-order values for large-power trace moments.

The Laplace analysis of the torus integral concentrates at the center of the
group: every central element contributes a Gaussian peak whose constant is a
Mehta-type integral, weighted by a root of unity determined by the highest
weight and by the value of the test class function there.  This module
assembles those constants exactly where possible (kappa factors and
determinants as Fractions, central phases as exact roots of unity) and in
floats only at the very end.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import rootsys
from .charring import CycleType
from .exactla import (det_fraction, inv_fraction, is_positive_definite,
                      mat_vec)
from .repweights import (a_lambda, check_dominant_integral, is_regular,
                         weyl_dimension)


class HypothesisError(ValueError):
    """An input violates a hypothesis of the asymptotic formulas."""


def cycle_constants(a):
    """(number of factors, total power, quadratic weight) of a cycle type."""
    return a.size, a.weight, a.quad


def _unit_phase(t):
    """exp(2 pi i t) for rational t, exact at the lattice points that matter
    (halves and quarters); cmath otherwise."""
    t = Fraction(t)
    t -= t.__floor__()
    if t.denominator == 1:
        return complex(1, 0)
    if t.denominator == 2:
        return complex(-1, 0)
    if t.denominator == 4:
        return complex(0, 1) if t.numerator == 1 else complex(0, -1)
    return cmath.exp(2j * math.pi * float(t))


def nu_character(rs, lam, m, psi):
    """Phase of the central element ``psi`` on the m-th dilate of ``lam``.

    ``psi`` is a covector representing an element of the center; the value is
    exp(2 pi i m <lam, psi>), a root of unity.
    """
    return _unit_phase(m * rootsys.pairing(lam, psi))


@dataclass(frozen=True)
class ClassFunction:
    """Finite real-coefficient combination of irreducible characters.

    ``terms`` is a tuple of (highest weight, coefficient) pairs.  Only such
    band-limited class functions are supported anywhere in this package.
    """
    terms: tuple

    @staticmethod
    def one(rank):
        """The constant function 1 (the trivial character)."""
        return ClassFunction((((0,) * rank, 1.0),))

    def validated(self, rs):
        for nu, _ in self.terms:
            check_dominant_integral(rs, nu)
        return self

    def is_trivial_one(self):
        return (len(self.terms) == 1
                and all(c == 0 for c in self.terms[0][0])
                and self.terms[0][1] == 1.0)

    def central_value(self, rs, psi):
        """Value at the central element psi: sum c * dim * phase."""
        out = complex(0, 0)
        for nu, c in self.terms:
            phase = _unit_phase(rootsys.pairing(nu, psi))
            out += c * weyl_dimension(rs, nu) * phase
        return out

    def value_at_identity(self, rs):
        return sum(c * weyl_dimension(rs, nu) for nu, c in self.terms)


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Factored leading-order value of a trace-moment sequence at index N.

    value        -- the leading term itself (may be 0 when the central phases
                    cancel, or +-inf past the float range)
    log_dim_power-- N * (number of factors) * log dim
    kappa_term   -- kappa(A^{-1} rho), exact
    det_a        -- det A, exact
    pi_sum       -- complex sum over the center of phase * f value
    prefactor    -- (2 pi)^d / ((2 pi l N)^{dim G / 2} sqrt(det A))
    """
    value: float
    log_dim_power: float
    kappa_term: Fraction
    det_a: Fraction
    pi_sum: complex
    prefactor: float
    N: int

    def log_abs_value(self):
        """log |value| computed in log space; -inf when the value is 0."""
        re = self.pi_sum.real
        if re == 0:
            return float("-inf")
        return (self.log_dim_power + math.log(self.prefactor)
                + _log_fraction(self.kappa_term) + math.log(abs(re)))

    def to_dict(self):
        return {
            "value": self.value,
            "log_abs_value": self.log_abs_value(),
            "log_dim_power": self.log_dim_power,
            "kappa_term": str(self.kappa_term),
            "det_a": str(self.det_a),
            "pi_sum_re": self.pi_sum.real,
            "pi_sum_im": self.pi_sum.imag,
            "prefactor": self.prefactor,
            "N": self.N,
        }


def _log_fraction(fr):
    fr = Fraction(fr)
    if fr <= 0:
        raise ValueError(f"log of non-positive fraction {fr}")
    return math.log(fr.numerator) - math.log(fr.denominator)


def _leading_core(rs, lam, num_factors, l_total, pi_sum, n):
    """Shared assembly for the one- and two-sided leading terms."""
    dim = weyl_dimension(rs, lam)
    sm = a_lambda(rs, lam)
    kap = rootsys.kappa(rs, sm.solve(rs.rho))
    det_a = sm.det
    d = rs.num_positive_roots
    log_dim_power = n * num_factors * math.log(dim)
    prefactor = ((2 * math.pi) ** d
                 / ((2 * math.pi * l_total * n) ** (rs.dim_group / 2)
                    * math.sqrt(det_a)))
    re = pi_sum.real
    try:
        value = math.exp(log_dim_power) * prefactor * float(kap) * re
    except OverflowError:
        value = math.copysign(float("inf"), re) if re else 0.0
    return AsymptoticEstimate(value=value, log_dim_power=log_dim_power,
                              kappa_term=kap, det_a=det_a, pi_sum=pi_sum,
                              prefactor=prefactor, N=n)


def _check_common(rs, lam, n):
    lam = check_dominant_integral(rs, lam)
    if not is_regular(rs, lam):
        raise HypothesisError(
            f"highest weight {lam} is not regular (every coordinate must be "
            f">= 1) — the Laplace peaks would degenerate")
    if n < 1:
        raise HypothesisError(f"index N must be >= 1, got {n}")
    return lam


def leading_term_I(rs, lam, a, n, f=None):
    """Leading term of the one-sided moment with exponents N * a.

    Requires a regular highest weight and gcd 1 on the supported powers of
    the cycle type; ``f`` defaults to the constant class function 1.
    """
    lam = _check_common(rs, lam, n)
    if a.gcd_support != 1:
        raise HypothesisError(
            f"supported powers {a.support()} must have gcd 1, got gcd "
            f"{a.gcd_support}")
    f = (ClassFunction.one(rs.rank) if f is None else f).validated(rs)
    size, k, l = cycle_constants(a)
    pi_sum = complex(0, 0)
    for psi in rs.center.elements:
        pi_sum += (nu_character(rs, lam, n * k, psi)
                   * f.central_value(rs, psi))
    return _leading_core(rs, lam, size, l, pi_sum, n)


def leading_term_K(rs, lam, a, b, n, f=None):
    """Leading term of the two-sided (conjugate-balanced) moment.

    Requires k_a = k_b (else the phases do not cancel and the scaling is
    different) and gcd 1 over the union of supported powers.
    """
    lam = _check_common(rs, lam, n)
    if a.weight != b.weight:
        raise HypothesisError(
            f"total powers must balance: k_a = {a.weight} != k_b = "
            f"{b.weight}")
    g = math.gcd(a.gcd_support, b.gcd_support)
    if g != 1:
        raise HypothesisError(
            f"supported powers {a.support()} u {b.support()} must have "
            f"gcd 1, got gcd {g}")
    f = (ClassFunction.one(rs.rank) if f is None else f).validated(rs)
    pi_sum = complex(0, 0)
    for psi in rs.center.elements:
        pi_sum += f.central_value(rs, psi)
    return _leading_core(rs, lam, a.size + b.size, a.quad + b.quad,
                         pi_sum, n)


def biane_dimension_estimate(rs, lam, n):
    """Leading-order dimension of the invariant subspace of the N-th power.

    Valid for regular highest weights lying in the root lattice (otherwise
    the center characters make the count oscillate in N).
    """
    lam = _check_common(rs, lam, n)
    if not rootsys.in_root_lattice(rs, lam):
        raise HypothesisError(
            f"highest weight {lam} must lie in the root lattice")
    dim = weyl_dimension(rs, lam)
    sm = a_lambda(rs, lam)
    kap = rootsys.kappa(rs, sm.solve(rs.rho))
    log_val = (math.log(rs.center.order) + n * math.log(dim)
               + _log_fraction(kap)
               - (rs.rank / 2) * math.log(2 * math.pi)
               - (rs.dim_group / 2) * math.log(n)
               - _log_fraction(sm.det) / 2)
    try:
        return math.exp(log_val)
    except OverflowError:
        return float("inf")


def weyl_equivariant(rs, h, tol=1e-9):
    """Whether the form ``h`` (covectors -> weights) commutes with the Weyl
    action: h o s_i equals s_i^* o h for every simple reflection.

    In these coordinates the weight-side reflection matrix is the transpose
    of the covector-side one, so the condition is  h S_i = S_i^T h.
    """
    n = rs.rank
    m = np.array([[float(x) for x in row] for row in h], dtype=float)
    scale = max(1.0, float(np.abs(m).max()))
    for i in range(n):
        s = np.eye(n)
        for k in range(n):
            s[i, k] -= rs.cartan[k][i]
        if np.abs(m @ s - s.T @ m).max() > tol * scale:
            return False
    return True


def _quadratic_form_data(rs, h):
    """Normalize a positive definite Weyl-equivariant matrix.

    Returns (kappa_argument_as_covector, sqrt_det) with the covector exact
    when the input was exact.  The closed forms below are identities only
    for forms commuting with the Weyl action (every Hessian produced by the
    theory is a positive multiple of the invariant form per simple factor),
    so anything else is refused.
    """
    rows = [list(r) for r in h]
    n = len(rows)
    if n != rs.rank or any(len(r) != n for r in rows):
        raise ValueError(f"form must be {rs.rank} x {rs.rank}")
    if not weyl_equivariant(rs, rows):
        raise ValueError(
            "form does not commute with the Weyl action; the kappa closed "
            "form does not apply")
    exact = all(isinstance(x, (int, Fraction)) for r in rows for x in r)
    if exact:
        m = [[Fraction(x) for x in r] for r in rows]
        for i in range(n):
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix must be symmetric")
        if not is_positive_definite(m):
            raise ValueError("matrix must be positive definite")
        inv = inv_fraction(m)
        x = mat_vec(inv, [1] * n)
        return x, math.sqrt(det_fraction(m))
    m = np.array(rows, dtype=float)
    if not np.allclose(m, m.T, rtol=1e-12, atol=0):
        raise ValueError("matrix must be symmetric")
    try:
        chol = np.linalg.cholesky(m)
    except np.linalg.LinAlgError:
        raise ValueError("matrix must be positive definite") from None
    x = tuple(np.linalg.solve(m, np.ones(n)))
    return x, float(np.prod(np.diagonal(chol)))


def _kappa_at(rs, x):
    if all(isinstance(c, (int, Fraction)) for c in x):
        return float(rootsys.kappa(rs, x))
    return rootsys.kappa_float(rs, x)


def mehta_closed_form(rs, h):
    """Closed form of the Gaussian integral of kappa^2 with form ``h``:
    (2 pi)^{rank/2} |W| kappa(h^{-1} rho) / sqrt(det h)."""
    x, sqrt_det = _quadratic_form_data(rs, h)
    return ((2 * math.pi) ** (rs.rank / 2) * rs.weyl_order
            * _kappa_at(rs, x) / sqrt_det)


def vanish_leading_constant(rs, h, g0, phi0, n):
    """Leading constant of a torus integral with vanishing-order amplitude.

    For an integrand g * e^{N Phi} whose amplitude vanishes like kappa^2 at
    the peak with Hessian form ``h``, the peak contributes
    (2 pi / N)^{dim G / 2} (2 pi)^d g0 e^{N phi0} |W| kappa(h^{-1} rho)
    / sqrt(det h).
    """
    if n < 1:
        raise HypothesisError(f"index N must be >= 1, got {n}")
    x, sqrt_det = _quadratic_form_data(rs, h)
    d = rs.num_positive_roots
    return ((2 * math.pi / n) ** (rs.dim_group / 2)
            * (2 * math.pi) ** d * g0 * math.exp(n * phi0)
            * rs.weyl_order * _kappa_at(rs, x) / sqrt_det)
