import numpy as np
import pytest
import scipy.linalg

from plie.errors import DimError, LogDomainError, NotInAlgebra
from plie.liecore import (LieAlgebraData, invariant_one_form, matrix_exp,
                          matrix_log)


def test_matrix_exp_against_scipy(rng):
    for _ in range(10):
        m = rng.uniform(-1.0, 1.0, (4, 4))
        assert np.max(np.abs(matrix_exp(m) - scipy.linalg.expm(m))) < 1e-12


def test_matrix_log_roundtrip(rng):
    for _ in range(10):
        m = rng.uniform(-0.4, 0.4, (3, 3))
        assert np.max(np.abs(matrix_log(matrix_exp(m)) - m)) < 1e-11


def test_matrix_log_domain_error():
    with pytest.raises(LogDomainError):
        matrix_log(np.diag([-1.0, -1.0, 1.0]))


def test_structure_tensor_validation():
    with pytest.raises(DimError):
        LieAlgebraData(2, np.zeros((2, 2, 3)))
    bad = np.zeros((2, 2, 2))
    bad[0, 0, 1] = 1.0  # not antisymmetric
    alg = LieAlgebraData(2, bad)
    with pytest.raises(ValueError):
        alg.validate()


def test_bracket_matches_commutator_through_embedding(su2):
    G = su2.dgm.G
    rng = np.random.default_rng(1)
    for _ in range(5):
        x = rng.uniform(-1.0, 1.0, 3)
        y = rng.uniform(-1.0, 1.0, 3)
        mx, my = G.embed_algebra(x), G.embed_algebra(y)
        comm = mx @ my - my @ mx
        want = G.embed_algebra(G.algebra.bracket(x, y))
        assert np.max(np.abs(comm - want)) < 1e-12


def test_ad_is_a_homomorphism(su2):
    G = su2.dgm.G
    rng = np.random.default_rng(2)
    g = G.exp(rng.uniform(-0.5, 0.5, 3))
    h = G.exp(rng.uniform(-0.5, 0.5, 3))
    assert np.max(np.abs(G.Ad(g @ h) - G.Ad(g) @ G.Ad(h))) < 1e-12


def test_ad_of_exp_matches_exp_of_ad(su2):
    """Independent oracle: Ad(exp X) = expm(ad_X) from the structure tensor."""
    G = su2.dgm.G
    rng = np.random.default_rng(3)
    for _ in range(5):
        x = rng.uniform(-0.8, 0.8, 3)
        ad_x = np.einsum("ijk,i->kj", G.algebra.c, x)
        assert np.max(np.abs(G.Ad(G.exp(x)) - scipy.linalg.expm(ad_x))) < 1e-11


def test_coad_is_inverse_transpose_of_ad(su2):
    G = su2.dgm.G
    g = G.exp(np.array([0.2, -0.3, 0.1]))
    assert np.max(np.abs(G.Coad(g) - np.linalg.inv(G.Ad(g)).T)) < 1e-12


def test_chart_roundtrip(semi):
    G = semi.dgm.G
    rng = np.random.default_rng(4)
    g = G.exp(rng.uniform(-0.5, 0.5, 3))
    v = rng.uniform(-0.4, 0.4, 3)
    back = G.chart_coords(g, G.chart_shift(g, v))
    assert np.max(np.abs(back - v)) < 1e-11


def test_project_algebra_rejects_off_algebra_matrix(su2):
    G = su2.dgm.G
    with pytest.raises(NotInAlgebra):
        G.project_algebra(np.eye(4))  # identity is not traceless/realified-su2


def test_invariant_one_form_sides(su2):
    G = su2.dgm.G
    x = np.array([0.3, -0.1, 0.5])
    u = G.exp(np.array([0.2, 0.4, -0.3]))
    assert np.max(np.abs(invariant_one_form(G, x, "left", u) - x)) == 0.0
    right = invariant_one_form(G, x, "right", u)
    assert np.max(np.abs(right - G.Ad(u).T @ x)) < 1e-12
    with pytest.raises(ValueError):
        invariant_one_form(G, x, "middle", u)
    with pytest.raises(DimError):
        invariant_one_form(G, np.zeros(2), "left", u)
