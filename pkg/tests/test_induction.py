import numpy as np
import pytest

from plie import induction as ind
from plie.errors import MembershipError, NotDressingInvariant
from plie.momentum import DualGroupModel, SubgroupData, momentum_residual


def test_constraint_project_closed_and_newton_agree(su2):
    model = su2.check_model()
    rng = np.random.default_rng(30)
    x = (su2.sample_P(rng), su2.sample_D(rng))
    y_closed = model.constraint_project(x)
    y_newton = model.constraint_project(x, use_closed=False)
    assert np.max(np.abs(model.constraint_residual(y_closed))) < 1e-10
    assert np.max(np.abs(model.constraint_residual(y_newton))) < 1e-10


def test_gauge_fixes_slice_and_is_idempotent(scenarios):
    for s in scenarios.values():
        model = s.check_model()
        rng = np.random.default_rng(31)
        x = model.constraint_project((s.sample_P(rng), s.sample_D(rng)))
        y = model.gauge(x)
        assert np.max(np.abs(np.asarray(s.slice_fn(y)))) < 1e-10
        assert model.gauge_idempotence_residual(x) < 1e-10
        # gauge stays on the constraint set
        assert np.max(np.abs(model.constraint_residual(y))) < 1e-9


def test_subcharacteristic_requires_constraint_membership(su2):
    model = su2.check_model()
    rng = np.random.default_rng(32)
    off = (su2.sample_P(rng) + 5.0, su2.sample_D(rng))
    with pytest.raises(MembershipError):
        ind.subcharacteristic_basis(model.space, model.constraint_residual, off)


def test_clean_intersection_report_structure(semi):
    model = semi.check_model()
    rng = np.random.default_rng(33)
    pts = [model.canonical((semi.sample_P(rng), semi.sample_D(rng)))
           for _ in range(3)]
    rep = ind.clean_intersection_report(model.space, model.constraint_residual, pts)
    assert not rep["rank_jump"]
    assert all(r["subchar_rank"] == semi.sub.H.dim for r in rep["samples"])


def test_prop42_identities(scenarios):
    for s in scenarios.values():
        model = s.check_model()
        rng = np.random.default_rng(34)
        samples = [{"k": s.sample_G(rng), "h": s.sample_H(rng),
                    "x": model.canonical((s.sample_P(rng), s.sample_D(rng)))}
                   for _ in range(3)]
        r1, r2, r3, r4 = ind.prop42_residuals(model, samples)
        assert max(r1, r2, r3, r4) < 1e-10


def test_induced_bracket_antisymmetric_and_invariant(su2):
    model = su2.check_model()
    rng = np.random.default_rng(35)
    x = model.canonical((su2.sample_P(rng), su2.sample_D(rng)))
    a = rng.uniform(-1, 1, model.space.dim)
    b = rng.uniform(-1, 1, model.space.dim)
    F = lambda y: float(a @ np.asarray(model.space.coords(x, y)))
    G = lambda y: float(b @ np.asarray(model.space.coords(x, y)))
    brFG = ind.induced_bracket_function(model, F, G)
    brGF = ind.induced_bracket_function(model, G, F)
    assert abs(brFG(x) + brGF(x)) < 1e-9
    assert ind.invariance_residual(model, brFG, x) < 1e-4


def test_induced_momentum_pair(semi):
    model = semi.check_model()
    _, Jm = ind.induced_momentum_model(model)
    rng = np.random.default_rng(36)
    x = model.canonical((semi.sample_P(rng), semi.sample_D(rng)))
    assert momentum_residual(Jm, rng.uniform(-1, 1, 3), x) < 1e-6


def test_example1_results(scenarios):
    for s in scenarios.values():
        rng = np.random.default_rng(37)
        res = ind.example1_point_induction(s.dgm, s.sub, s.base["u0"], rng,
                                           n_samples=4)
        assert res["q_relation_residual"] < 1e-7
        assert res["roundtrip_residual"] < 1e-10
        assert res["hcirc_membership_residual"] < 1e-10
        assert res["modification_term_norm"] > 1e-2  # u0 != identity
        res0 = ind.example1_point_induction(s.dgm, s.sub,
                                            np.zeros(s.sub.H.dim), rng,
                                            n_samples=3)
        assert res0["modification_term_norm"] < 1e-12
        assert res0["u0_is_identity"]


def test_example1_rejects_non_invariant_base_point(su2):
    """A generic dual-group point moves under dressing; use the full double
    as the sub-double of the improper subgroup H = G to exercise the guard."""
    dgm = su2.dgm
    fake = SubgroupData(
        H=dgm.G, incl_H=lambda h: h, i_mat=np.eye(3),
        dual=DualGroupModel.additive(3),
        i_star=lambda u: dgm.Gstar.log(u),
        s_star=lambda t: dgm.Gstar.exp(np.asarray(t, dtype=float)),
        hcirc_basis=np.zeros((0, 3)),
        h_structure_zero=False, sub_double=dgm)
    rng = np.random.default_rng(38)
    with pytest.raises(NotDressingInvariant):
        ind.example1_point_induction(dgm, fake, np.array([0.3, 0.2, 0.1]),
                                     rng, n_samples=1)


def test_example2_results(scenarios):
    for s in scenarios.values():
        rng = np.random.default_rng(39)
        res = ind.example2_orbit_induction(s.dgm, s.sub, s.base["v"],
                                           s.base["w"], rng, n_samples=3)
        expected = bool(s.hypotheses["example2_condition_expected"])
        assert res["condition_holds"] == expected
        if expected:
            assert res["orbit_membership_residual"] < 1e-8


def test_example2_rejects_mismatched_base_points(semi):
    rng = np.random.default_rng(40)
    with pytest.raises(MembershipError):
        ind.example2_orbit_induction(semi.dgm, semi.sub,
                                     np.array([9.0, 9.0]), semi.base["w"],
                                     rng, n_samples=1)
