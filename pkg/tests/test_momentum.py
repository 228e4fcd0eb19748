import numpy as np
import pytest

from plie.momentum import (ActionModel, DualGroupModel, MomentumMapModel,
                           canonical_left_action, canonical_right_action,
                           classical_limit_oracle, equivariance_residual,
                           J_l_via_dressing, lemma32_residuals,
                           momentum_residual, product_action, right_to_left)
from plie.poisson import constant_manifold


def test_additive_dual_group_axioms():
    d = DualGroupModel.additive(2)
    a, b = np.array([1.0, 2.0]), np.array([0.5, -1.0])
    assert np.allclose(d.multiply(a, b), a + b)
    assert np.allclose(d.inverse(a), -a)
    assert np.allclose(d.coords(d.identity, a), a)
    assert np.allclose(d.Ad(a), np.eye(2))


def test_canonical_actions_momentum_residuals(scenarios):
    for s in scenarios.values():
        dgm = s.dgm
        _, Jr = canonical_right_action(dgm, s.sub)
        _, Jl = canonical_left_action(dgm)
        rng = np.random.default_rng(20)
        for _ in range(3):
            d = s.sample_D(rng)
            assert momentum_residual(Jr, rng.uniform(-1, 1, s.sub.H.dim), d) < 1e-7
            assert momentum_residual(Jl, rng.uniform(-1, 1, 3), d) < 1e-7
            assert equivariance_residual(Jl, d) < 1e-7
            assert equivariance_residual(Jr, d) < 1e-7


def test_Jl_two_routes_agree(su2):
    rng = np.random.default_rng(21)
    _, Jl = canonical_left_action(su2.dgm)
    for _ in range(5):
        d = su2.sample_D(rng)
        other = J_l_via_dressing(su2.dgm, d)
        assert np.max(np.abs(np.asarray(Jl.J(d)) - np.asarray(other))) < 1e-11


def test_wrong_sign_convention_is_detected(su2):
    """Flipping the side flag must blow up the defining-equation residual."""
    _, Jr = canonical_right_action(su2.dgm, su2.sub)
    rng = np.random.default_rng(22)
    d = su2.sample_D(rng)
    X = np.array([1.0])
    good = momentum_residual(Jr, X, d)
    Jr.action.side = "left"
    try:
        bad = momentum_residual(Jr, X, d)
    finally:
        Jr.action.side = "right"
    assert good < 1e-7
    assert bad > 1e-3


def test_right_to_left_conversion_preserves_momentum(su2):
    r_action, Jr = canonical_right_action(su2.dgm, su2.sub)
    left, Jm = right_to_left(r_action, Jr, su2.sub.dress_Hstar_on_H)
    assert left.side == "left"
    rng = np.random.default_rng(23)
    for _ in range(3):
        d = su2.sample_D(rng)
        assert momentum_residual(Jm, rng.uniform(-1, 1, 1), d) < 1e-7
    with pytest.raises(ValueError):
        right_to_left(left, Jm, su2.sub.dress_Hstar_on_H)


def test_product_action_momentum(su2):
    r_action, Jr = canonical_right_action(su2.dgm, su2.sub)
    left, Jleft = right_to_left(r_action, Jr, su2.sub.dress_Hstar_on_H)
    sigma, J_P = su2.sigma, su2.J_P
    action, Jm = product_action(sigma, J_P, left, Jleft,
                                su2.sub.dress_Hstar_on_H)
    rng = np.random.default_rng(24)
    for _ in range(3):
        x = (su2.sample_P(rng), su2.sample_D(rng))
        assert momentum_residual(Jm, rng.uniform(-1, 1, 1), x) < 1e-7


def test_lemma_identities_su2(su2):
    rng = np.random.default_rng(25)
    n = 5
    samples = {
        "u": [su2.sample_Gstar(rng) for _ in range(n)],
        "g": [su2.sample_G(rng) for _ in range(n)],
        "Y": [rng.uniform(-1, 1, 1) for _ in range(n)],
        "xi": [rng.uniform(-1, 1, 3) for _ in range(n)],
        "X": [rng.uniform(-1, 1, 3) for _ in range(n)],
    }
    r1, r2, r3 = lemma32_residuals(su2.dgm, su2.sub, samples)
    assert r1 < 1e-7
    assert r2 < 1e-7
    assert r3 < 1e-7


def test_classical_oracle_and_flip_control(semi):
    rng = np.random.default_rng(26)
    cs = [{"g": semi.sample_G(rng), "mu": rng.uniform(-1, 1, 3),
           "h": semi.sample_H(rng), "k": semi.sample_G(rng)} for _ in range(5)]
    assert classical_limit_oracle(semi.dgm, semi.sub, cs) < 1e-12
    assert classical_limit_oracle(semi.dgm, semi.sub, cs, flip_coad=True) > 1e-1


def test_scenario_sigma_momentum(scenarios):
    """The shipped H-action on P with its projection momentum."""
    for s in scenarios.values():
        rng = np.random.default_rng(27)
        for _ in range(3):
            p = s.sample_P(rng)
            assert momentum_residual(s.J_P, rng.uniform(-1, 1, s.sub.H.dim), p) < 1e-9
