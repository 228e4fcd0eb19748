import numpy as np
import pytest

from plie.double import (DoubleAlgebra, DoubleGroupModel, DoublePoint,
                         LieBialgebraData, dual_bialgebra, pi0, pi0_matrix)
from plie.errors import DimError, MembershipError
from plie.liecore import LieAlgebraData


def test_cocycle_residual_zero_for_shipped_tables(scenarios):
    for s in scenarios.values():
        assert s.bialgebra.cocycle_residual() < 1e-14


def test_cocycle_residual_detects_corruption(su2):
    f = su2.bialgebra.gstar.c.copy()
    f[2, 0, 0] = 2.0
    f[0, 2, 0] = -2.0
    bad = LieBialgebraData(g=su2.bialgebra.g, gstar=LieAlgebraData(3, f))
    assert bad.cocycle_residual() > 1e-2
    with pytest.raises(ValueError):
        bad.validate()


def test_dual_bialgebra_is_involutive(su2):
    b = su2.bialgebra
    bb = dual_bialgebra(dual_bialgebra(b))
    assert np.array_equal(bb.g.c, b.g.c)
    assert np.array_equal(bb.gstar.c, b.gstar.c)


def test_double_algebra_invariants(scenarios):
    for s in scenarios.values():
        d = s.double_algebra
        assert d.jacobi_residual() < 1e-14
        assert d.pairing_invariance_residual() < 1e-14
        assert d.isotropy_residual() == 0.0
        d.validate()


def test_pi0_antisymmetry_and_pairing():
    M = pi0_matrix(3)
    assert np.max(np.abs(M + M.T)) == 0.0
    a = np.array([1.0, 0, 0, 0, 0, 0])   # eps^1 direction
    b = np.array([0, 0, 0, 1.0, 0, 0])   # e_1 direction
    assert pi0(a, b) == 1.0
    with pytest.raises(DimError):
        pi0(np.zeros(3), np.zeros(3))


def test_factorization_roundtrip_and_cross_consistency(scenarios):
    for s in scenarios.values():
        dgm = s.dgm
        rng = np.random.default_rng(5)
        for _ in range(10):
            g = s.sample_G(rng)
            u = s.sample_Gstar(rng)
            d = dgm.compose(g, u)
            g2, u2 = dgm.factorize(d, "GU")
            assert np.max(np.abs(g2 - g)) < 1e-10
            assert np.max(np.abs(u2 - u)) < 1e-10
            u1, g1 = dgm.factorize(d, "UG")
            recomposed = dgm.embed_Gstar(u1) @ dgm.embed_G(g1)
            assert np.max(np.abs(recomposed - d)) < 1e-10


def test_newton_factorization_agrees_with_closed_form(su2):
    dgm = su2.dgm
    newton = DoubleGroupModel(dgm.G, dgm.Gstar, dgm.D, dgm.embed_G,
                              dgm.embed_Gstar, factorization_mode="newton")
    rng = np.random.default_rng(6)
    for _ in range(3):
        d = dgm.compose(su2.sample_G(rng, 0.2), su2.sample_Gstar(rng, 0.2))
        g_c, u_c = dgm.factorize(d, "GU")
        g_n, u_n = newton.factorize(d, "GU")
        assert np.max(np.abs(g_c - g_n)) < 1e-9
        assert np.max(np.abs(u_c - u_n)) < 1e-9


def test_factorize_rejects_non_members(su2):
    with pytest.raises(MembershipError):
        su2.dgm.factorize(2.0 * np.eye(4), "GU")
    with pytest.raises(ValueError):
        su2.dgm.factorize(np.eye(4), "XY")


def test_left_dressing_is_a_left_action(su2):
    dgm = su2.dgm
    rng = np.random.default_rng(7)
    for _ in range(3):
        k1 = su2.sample_G(rng, 0.25)
        k2 = su2.sample_G(rng, 0.25)
        u = su2.sample_Gstar(rng, 0.25)
        one = dgm.dress(k1, dgm.dress(k2, u, "G_on_Gstar", "left"),
                        "G_on_Gstar", "left")
        two = dgm.dress(k1 @ k2, u, "G_on_Gstar", "left")
        assert np.max(np.abs(one - two)) < 1e-10


def test_double_multiply_cross_check_and_associativity(scenarios):
    for s in scenarios.values():
        dgm = s.dgm
        rng = np.random.default_rng(8)
        for _ in range(5):
            pairs = [(s.sample_G(rng, 0.25), s.sample_Gstar(rng, 0.25))
                     for _ in range(3)]
            a, b, c = pairs
            ab_c = dgm.double_multiply(dgm.double_multiply(a, b, cross_check=True), c)
            a_bc = dgm.double_multiply(a, dgm.double_multiply(b, c))
            assert np.max(np.abs(ab_c[0] - a_bc[0])) < 1e-9
            assert np.max(np.abs(ab_c[1] - a_bc[1])) < 1e-9


def test_pi_minus_vanishes_at_identity(scenarios):
    for s in scenarios.values():
        e = np.eye(s.dgm.D.identity.shape[0])
        assert np.max(np.abs(s.dgm.pi_pm(e, -1))) < 1e-13


def test_pi_plus_minus_differ_by_constant(su2):
    dgm = su2.dgm
    rng = np.random.default_rng(9)
    M0 = pi0_matrix(3)
    d = su2.sample_D(rng)
    assert np.max(np.abs(dgm.pi_pm(d, 1) - dgm.pi_pm(d, -1) - M0)) < 1e-12


def test_double_point_cache(su2):
    rng = np.random.default_rng(10)
    d = su2.sample_D(rng)
    p = DoublePoint.from_matrix(su2.dgm, d)
    assert p.cache_residual() == 0.0
    assert np.max(np.abs(p.matrix - d)) < 1e-10
