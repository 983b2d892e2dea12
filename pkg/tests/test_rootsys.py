import math
from fractions import Fraction

import numpy as np
import pytest

from liemoments.rootsys import (ConfigurationError, build_root_system,
                                dominant_representative, fundamental_group,
                                in_root_lattice, kappa,
                                order_mod_root_lattice, pairing, parse_group,
                                reflect_covector, reflect_weight, weyl_orbit)

ALL_SIMPLE = ([f"A{n}" for n in range(1, 9)]
              + [f"B{n}" for n in range(2, 9)]
              + [f"C{n}" for n in range(3, 9)]
              + [f"D{n}" for n in range(4, 9)]
              + ["E6", "E7", "E8", "F4", "G2"])


def test_parse_group():
    assert parse_group("a2") == (("A", 2),)
    assert parse_group("A1xA1") == (("A", 1), ("A", 1))
    assert parse_group("A2,B3") == (("A", 2), ("B", 3))
    for bad in ("", "H4", "A0", "C2", "D3", "E5", "B", "2A", "A1yB2"):
        with pytest.raises(ConfigurationError):
            parse_group(bad)


def test_dimension_table_consistency():
    # the builder itself raises if closure and dim table disagree; run all
    for spec in ALL_SIMPLE:
        rs = build_root_system(spec)
        assert 2 * rs.num_positive_roots + rs.rank == rs.dim_group


def test_known_counts():
    rs = build_root_system("A2")
    assert rs.num_positive_roots == 3
    assert rs.weyl_order == 6
    assert build_root_system("B2").num_positive_roots == 4
    assert build_root_system("G2").num_positive_roots == 6
    assert build_root_system("E8").num_positive_roots == 120
    assert build_root_system("F4").num_positive_roots == 24


def test_simple_root_coordinates_are_cartan_columns():
    rs = build_root_system("B2")
    assert rs.simple_roots[0] == (2, -2)
    assert rs.simple_roots[1] == (-1, 2)
    # highest short root e1 and highest root e1+e2 in these coordinates
    assert (1, 0) in rs.positive_roots
    assert (0, 2) in rs.positive_roots


def test_coroots_pair_correctly():
    for spec in ("A3", "B3", "C3", "G2", "F4"):
        rs = build_root_system(spec)
        for alpha, cr in zip(rs.positive_roots, rs.positive_coroots):
            assert pairing(alpha, cr) == 2
            # rho pairs to the height of the coroot
            assert pairing(rs.rho, cr) == sum(cr)


def test_product_group_blocks():
    rs = build_root_system("A1xA1")
    assert rs.rank == 2
    assert rs.dim_group == 6
    assert rs.weyl_order == 4
    assert set(rs.positive_roots) == {(2, 0), (0, 2)}
    assert rs.center.order == 4


def test_kappa_at_rho_covector():
    # for A2 the pairing of rho-covector with each positive root is the
    # height, so kappa = 1 * 1 * 2
    rs = build_root_system("A2")
    assert kappa(rs, rs.rho_covector) == 2
    rs = build_root_system("A1")
    assert kappa(rs, rs.rho_covector) == 1


def test_kappa_antiinvariance():
    rng = np.random.default_rng(42)
    for spec in ("A2", "B2", "G2", "A1xA1"):
        rs = build_root_system(spec)
        for _ in range(10):
            x = tuple(Fraction(int(rng.integers(-9, 10)), 7)
                      for _ in range(rs.rank))
            k = kappa(rs, x)
            for i in range(rs.rank):
                assert kappa(rs, reflect_covector(rs, x, i)) == -k


def test_reflections_preserve_pairing():
    rng = np.random.default_rng(3)
    rs = build_root_system("B3")
    for _ in range(10):
        mu = tuple(int(c) for c in rng.integers(-4, 5, size=3))
        x = tuple(Fraction(int(c), 3) for c in rng.integers(-6, 7, size=3))
        for i in range(3):
            assert pairing(reflect_weight(rs, mu, i),
                           reflect_covector(rs, x, i)) == pairing(mu, x)


def test_weyl_orbit_sizes():
    rs = build_root_system("A2")
    assert len(weyl_orbit(rs, (1, 1))) == 6       # regular: free orbit
    assert len(weyl_orbit(rs, (1, 0))) == 3       # stabilized by one wall
    assert len(weyl_orbit(rs, (0, 0))) == 1
    rs = build_root_system("B2")
    assert len(weyl_orbit(rs, (1, 1))) == 8


def test_dominant_representative():
    rs = build_root_system("A2")
    for mu in weyl_orbit(rs, (2, 1)):
        dom, sign = dominant_representative(rs, mu)
        assert dom == (2, 1)
        assert sign in (-1, 1)
    # signs multiply to the alternating character: sum over a free orbit of
    # sign * w(mu) recovers the antisymmetrized orbit, so the identity
    # element must get +1
    assert dominant_representative(rs, (2, 1)) == ((2, 1), 1)
    # a single reflection flips the sign
    assert dominant_representative(rs, reflect_weight(rs, (2, 1), 0))[1] == -1


def test_center_orders_table():
    expected = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2,
                "D": lambda n: 4, "E": {6: 3, 7: 2, 8: 1}.get,
                "F": lambda n: 1, "G": lambda n: 1}
    for spec in ALL_SIMPLE:
        rs = build_root_system(spec)
        letter, n = rs.factors[0]
        assert rs.center.order == expected[letter](n), spec


def test_center_elements_pair_integrally_with_roots():
    for spec in ("A1", "A2", "A3", "B2", "C3", "D4", "G2"):
        rs = build_root_system(spec)
        fg = fundamental_group(rs)
        assert len(set(fg.elements)) == fg.order
        assert fg.identity == (Fraction(0),) * rs.rank
        for psi in fg.elements:
            assert all(0 <= x < 1 for x in psi)
            for alpha in rs.positive_roots:
                assert pairing(alpha, psi).denominator == 1


def test_a1_center_representative():
    rs = build_root_system("A1")
    assert set(rs.center.elements) == {(Fraction(0),), (Fraction(1, 2),)}
    assert pairing((1,), (Fraction(1, 2),)) == Fraction(1, 2)


def test_root_lattice_membership():
    rs = build_root_system("A1")
    assert not in_root_lattice(rs, (1,))
    assert in_root_lattice(rs, (2,))
    assert order_mod_root_lattice(rs, (1,)) == 2
    rs = build_root_system("A2")
    assert order_mod_root_lattice(rs, (1, 0)) == 3
    assert order_mod_root_lattice(rs, (1, 1)) == 1
    assert in_root_lattice(rs, (1, 1))
