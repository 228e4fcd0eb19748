"""Named verification suites producing deterministic check reports.

Every check is one record: an identifier, a one-line statement of the
identity being tested, the sample count, the worst residual observed, the
tolerance, and the verdict.  Reports with the same scenario and seed are
byte-identical.
"""
from __future__ import annotations

import json

import numpy as np

from . import induction as ind
from .momentum import (canonical_left_action, canonical_right_action,
                       classical_limit_oracle, equivariance_residual,
                       J_l_via_dressing, lemma32_residuals, momentum_residual)
from .numerics import DEFAULT_TOL, ToleranceConfig, subspace_intersection
from .poisson import (PoissonLieGroupModel, jacobi_residual,
                      multiplicativity_residual, poisson_action_residual)
from .scenarios import Scenario

BOOL_TOL = 0.5  # boolean checks report residual 0.0 (ok) or 1.0 (violated)


def _check(cid, statement, samples, residual, tolerance):
    residual = float(residual)
    return {
        "id": cid,
        "statement": statement,
        "samples": int(samples),
        "max_residual": residual,
        "tolerance": float(tolerance),
        "pass": bool(residual < tolerance),
    }


def _bool_check(cid, statement, samples, ok):
    return _check(cid, statement, samples, 0.0 if ok else 1.0, BOOL_TOL)


# ---------------------------------------------------------------------------
def suite_verify_bialgebra(s: Scenario, rng, cfg: ToleranceConfig):
    b = s.bialgebra
    dbl = s.double_algebra
    return [
        _check("bialgebra.antisym-g",
               "structure table of g is antisymmetric in its lower indices",
               1, b.g.antisymmetry_residual(), 1e-12),
        _check("bialgebra.antisym-gstar",
               "structure table of g* is antisymmetric in its lower indices",
               1, b.gstar.antisymmetry_residual(), 1e-12),
        _check("bialgebra.jacobi-g",
               "Jacobi identity for the bracket of g", 1,
               b.g.jacobi_residual(), 1e-12),
        _check("bialgebra.jacobi-gstar",
               "Jacobi identity for the bracket of g*", 1,
               b.gstar.jacobi_residual(), 1e-12),
        _check("bialgebra.cocycle",
               "the cobracket of g is a 1-cocycle for the adjoint action", 1,
               b.cocycle_residual(), 1e-12),
        _check("double.jacobi",
               "Jacobi identity for the mixed bracket on d = g + g*", 1,
               dbl.jacobi_residual(), 1e-12),
        _check("double.pairing-invariance",
               "the symmetric pairing on d is invariant under ad", 1,
               dbl.pairing_invariance_residual(), 1e-12),
        _check("double.isotropy",
               "g and g* are isotropic for the pairing on d", 1,
               dbl.isotropy_residual(), 1e-12),
        _check("double.embedding-commutators",
               "matrix commutators of the D basis reproduce the double table",
               1, s.dgm.D.embedding_commutator_residual(), 1e-12),
    ]


def suite_verify_poisson_lie(s: Scenario, rng, cfg: ToleranceConfig):
    dgm = s.dgm
    n_mult = s.plan.count("multiplicativity", 50)
    n_jac = s.plan.count("jacobi", 50)
    n_rank = s.plan.count("rank", 25)

    d_e = dgm.compose(dgm.G.exp(np.zeros(s.n)), dgm.Gstar.exp(np.zeros(s.n)))
    r_pm_e = float(np.max(np.abs(dgm.pi_pm(d_e, -1))))

    rank_bad = 0.0
    for _ in range(n_rank):
        d = s.sample_D(rng)
        sv = np.linalg.svd(dgm.pi_pm(d, +1), compute_uv=False)
        if sv[-1] <= 1e-9 * max(1.0, sv[0]):
            rank_bad = 1.0
    Gp = PoissonLieGroupModel(dgm.G, dgm.pi_G, name="G")
    Gsp = PoissonLieGroupModel(dgm.Gstar, dgm.pi_Gstar, name="G*")

    r_mult_g = max(multiplicativity_residual(Gp, s.sample_G(rng), s.sample_G(rng))
                   for _ in range(n_mult))
    r_mult_gs = max(multiplicativity_residual(Gsp, s.sample_Gstar(rng), s.sample_Gstar(rng))
                    for _ in range(n_mult))
    r_jac_g = max(jacobi_residual(Gp.manifold(), s.sample_G(rng),
                                  rng.uniform(-1.0, 1.0, (3, s.n)), cfg)
                  for _ in range(n_jac))
    r_jac_gs = max(jacobi_residual(Gsp.manifold(), s.sample_Gstar(rng),
                                   rng.uniform(-1.0, 1.0, (3, s.n)), cfg)
                   for _ in range(n_jac))
    r_mult_d = max(multiplicativity_residual(
        PoissonLieGroupModel(dgm.D, lambda d: dgm.pi_pm(d, -1), name="D"),
        s.sample_D(rng), s.sample_D(rng)) for _ in range(n_mult))
    return [
        _check("poisson-lie.pi-minus-identity",
               "the multiplicative bivector of the double vanishes at the identity",
               1, r_pm_e, 1e-12),
        _check("poisson-lie.pi-plus-rank",
               "the affine bivector of the double has full rank at sampled points",
               n_rank, rank_bad, BOOL_TOL),
        _check("poisson-lie.multiplicativity-G",
               "the bivector of G is multiplicative for the group law",
               n_mult, r_mult_g, cfg.residual_pass),
        _check("poisson-lie.multiplicativity-Gstar",
               "the bivector of G* is multiplicative for the group law",
               n_mult, r_mult_gs, cfg.residual_pass),
        _check("poisson-lie.multiplicativity-D",
               "the minus-bivector of D is multiplicative for the group law",
               n_mult, r_mult_d, cfg.residual_pass),
        _check("poisson-lie.jacobi-G",
               "the bivector of G satisfies the Jacobi identity",
               n_jac, r_jac_g, cfg.residual_pass),
        _check("poisson-lie.jacobi-Gstar",
               "the bivector of G* satisfies the Jacobi identity",
               n_jac, r_jac_gs, cfg.residual_pass),
    ]


def suite_verify_momentum(s: Scenario, rng, cfg: ToleranceConfig):
    dgm = s.dgm
    n_mom = s.plan.count("momentum", 25)
    _, Jr = canonical_right_action(dgm, s.sub)
    _, Jl = canonical_left_action(dgm)

    r_r = r_l = r_two = r_eq = r_eq_r = 0.0
    for _ in range(n_mom):
        d = s.sample_D(rng)
        X = rng.uniform(-1.0, 1.0, s.sub.H.dim)
        Y = rng.uniform(-1.0, 1.0, s.n)
        r_r = max(r_r, momentum_residual(Jr, X, d, cfg))
        r_l = max(r_l, momentum_residual(Jl, Y, d, cfg))
        r_two = max(r_two, float(np.max(np.abs(
            np.asarray(Jl.J(d)) - np.asarray(J_l_via_dressing(dgm, d))))))
        r_eq = max(r_eq, equivariance_residual(Jl, d, cfg))
        r_eq_r = max(r_eq_r, equivariance_residual(Jr, d, cfg))

    samples = {
        "u": [s.sample_Gstar(rng) for _ in range(n_mom)],
        "g": [s.sample_G(rng) for _ in range(n_mom)],
        "Y": [rng.uniform(-1.0, 1.0, s.sub.H.dim) for _ in range(n_mom)],
        "xi": [rng.uniform(-1.0, 1.0, s.n) for _ in range(n_mom)],
        "X": [rng.uniform(-1.0, 1.0, s.n) for _ in range(n_mom)],
    }
    l1, l2, l3 = lemma32_residuals(dgm, s.sub, samples, cfg)

    checks = [
        _check("momentum.right-action",
               "momentum defining equation for the right H-translation on (D, pi+)",
               n_mom, r_r, 1e-5),
        _check("momentum.left-action",
               "momentum defining equation for the left dressed G-action on (D, pi+)",
               n_mom, r_l, 1e-5),
        _check("momentum.Jl-two-routes",
               "J_l by factorization equals J_l by dressing of the other factor",
               n_mom, r_two, 1e-9),
        _check("momentum.Jl-equivariance",
               "J_l is a Poisson map into the dual group", n_mom, r_eq, 1e-5),
        _check("momentum.Jr-equivariance",
               "J_r is a Poisson map into the subgroup dual", n_mom, r_eq_r, 1e-5),
        _check("momentum.subgroup-coadjoint",
               "the dual projection intertwines the coadjoint actions on h and g",
               n_mom, l1, 1e-5),
        _check("momentum.dressing-sign",
               "right dressing of a coadjoint-translated covector cancels left dressing",
               n_mom, l2, 1e-5),
        _check("momentum.double-adjoint-split",
               "Ad of the double splits g-vectors into dressed part and bivector part",
               n_mom, l3, 1e-5),
    ]
    if s.classical:
        n_cl = s.plan.count("classical", 50)
        cs = [{"g": s.sample_G(rng), "mu": rng.uniform(-1.0, 1.0, s.n),
               "h": s.sample_H(rng), "k": s.sample_G(rng)} for _ in range(n_cl)]
        dev = classical_limit_oracle(dgm, s.sub, cs)
        flipped = classical_limit_oracle(dgm, s.sub, cs, flip_coad=True)
        checks.append(_check(
            "momentum.classical-oracle",
            "canonical double actions match the cotangent-lift closed forms",
            n_cl, dev, 1e-10))
        checks.append(_bool_check(
            "momentum.classical-flip-control",
            "flipping the coadjoint conventions produces large deviations",
            n_cl, flipped > 1e-1))
    return checks


def suite_verify_induction(s: Scenario, rng, cfg: ToleranceConfig):
    model = s.check_model()
    n_pts = s.plan.count("induction", 25)
    n_jac = s.plan.count("induced_jacobi", 10)

    pts = [model.canonical((s.sample_P(rng), s.sample_D(rng)))
           for _ in range(n_pts)]

    samples = [{"k": s.sample_G(rng), "h": s.sample_H(rng), "x": x} for x in pts]
    p1, p2, p3, p4 = ind.prop42_residuals(model, samples)

    r_jcheck = max(momentum_residual(model.J_check,
                                     rng.uniform(-1.0, 1.0, s.sub.H.dim), x, cfg)
                   for x in pts)
    r_gauge = max(model.gauge_idempotence_residual(x) for x in pts[:5])

    report = ind.clean_intersection_report(model.space, model.constraint_residual,
                                           pts, cfg=cfg)
    ranks_ok = (not report["rank_jump"]
                and all(r["subchar_rank"] == s.sub.H.dim for r in report["samples"]))
    gen_ok = True
    for x in pts:
        B = ind.subcharacteristic_basis(model.space, model.constraint_residual, x, cfg)
        Gn = ind.sigma_generators(model, x, cfg)
        gen_ok = gen_ok and subspace_intersection(B, Gn).shape[0] == s.sub.H.dim

    # induced bracket antisymmetry and invariance at a few points
    r_antisym = r_inv = 0.0
    for x in pts[:3]:
        a = rng.uniform(-1.0, 1.0, model.space.dim)
        b = rng.uniform(-1.0, 1.0, model.space.dim)
        F = lambda y, a=a, x=x: float(a @ np.asarray(model.space.coords(x, y)))
        G = lambda y, b=b, x=x: float(b @ np.asarray(model.space.coords(x, y)))
        brFG = ind.induced_bracket_function(model, F, G)
        brGF = ind.induced_bracket_function(model, G, F)
        r_antisym = max(r_antisym, abs(brFG(x) + brGF(x)))
        r_inv = max(r_inv, ind.invariance_residual(model, brFG, x, cfg))

    man = ind.induced_space_manifold(model)
    r_jac = max(jacobi_residual(man, x, rng.uniform(-1.0, 1.0, (3, man.dim)), cfg)
                for x in pts[:n_jac])

    _, Jm = ind.induced_momentum_model(model)
    r_mom = max(momentum_residual(Jm, rng.uniform(-1.0, 1.0, s.n), x, cfg)
                for x in pts[:5])

    return [
        _check("induction.Jr-invariant-left",
               "the right momentum is invariant under the residual left action",
               n_pts, p1, 1e-8),
        _check("induction.Jl-invariant-right",
               "the left momentum is invariant under right H-translation",
               n_pts, p2, 1e-8),
        _check("induction.actions-commute",
               "the residual left action commutes with right H-translation",
               n_pts, p3, 1e-8),
        _check("induction.twisted-diagonal-commutes",
               "the twisted diagonal H-action commutes with the residual left action",
               n_pts, p4, 1e-8),
        _check("induction.Jcheck-momentum",
               "momentum defining equation for the twisted diagonal action on P x D",
               n_pts, r_jcheck, 1e-4),
        _check("induction.gauge-idempotent",
               "gauge fixing is idempotent on the constraint set",
               5, r_gauge, 1e-9),
        _bool_check("induction.clean-intersection",
                    "the sub-characteristic distribution has constant rank dim h",
                    n_pts, ranks_ok),
        _bool_check("induction.subchar-matches-generators",
                    "the sub-characteristic space is spanned by the H-action generators",
                    n_pts, gen_ok),
        _check("induction.bracket-antisym",
               "the induced bracket is antisymmetric", 3, r_antisym, 1e-8),
        _check("induction.bracket-invariant",
               "induced brackets are invariant along the H-orbits", 3, r_inv, 1e-4),
        _check("induction.bracket-jacobi",
               "the induced bivector satisfies the Jacobi identity",
               n_jac, r_jac, 1e-4),
        _check("induction.momentum-pair",
               "momentum defining equation for the induced action and momentum",
               5, r_mom, 1e-4),
    ]


def suite_induce_orbit(s: Scenario, rng, cfg: ToleranceConfig):
    n = s.plan.count("orbit", 20)
    res = ind.example2_orbit_induction(s.dgm, s.sub, s.base["v"], s.base["w"],
                                       rng, n_samples=n, box=s.plan.box, cfg=cfg)
    expected = bool(s.hypotheses.get("example2_condition_expected", True))
    mem_tol = 1e-8 if s.classical else 1e-6
    checks = [
        _bool_check("orbit.condition-status",
                    "empirical status of the orbit condition matches the scenario hypothesis",
                    n, res["condition_holds"] == expected),
    ]
    if res["condition_holds"]:
        checks.append(_check(
            "orbit.condition-residual",
            "the base-point coset is reachable inside the H-dressing orbit",
            n, res["condition_residual"], mem_tol))
        checks.append(_check(
            "orbit.momentum-membership",
            "induced momenta of constraint samples lie on the G-dressing orbit of w",
            n, res["orbit_membership_residual"], mem_tol))
    else:
        checks.append(_bool_check(
            "orbit.condition-fails-honestly",
            "the orbit condition fails for this scenario; membership is not asserted",
            n, not res["orbit_membership_ok"] or res["condition_holds"]))
    return checks


def suite_point_induction(s: Scenario, rng, cfg: ToleranceConfig):
    n = s.plan.count("point", 25)
    res = ind.example1_point_induction(s.dgm, s.sub, s.base["u0"], rng,
                                       n_samples=n, box=s.plan.box, cfg=cfg)
    res0 = ind.example1_point_induction(s.dgm, s.sub,
                                        np.zeros(s.sub.H.dim), rng,
                                        n_samples=n, box=s.plan.box, cfg=cfg)
    fd_floor = 10.0 * cfg.fd_step ** 2
    return [
        _check("point.u0-dressing-invariant",
               "the base point is fixed by the dressing action of H",
               5, res["u0_invariance_residual"], 1e-9),
        _check("point.translation-bivector-relation",
               "translation by the section pushes pi+ to pi+ plus a constant modification",
               n, res["q_relation_residual"], 1e-5),
        _check("point.modification-vanishes-at-identity",
               "the modification term vanishes when the base point is the dual identity",
               n, res0["modification_term_norm"], fd_floor),
        _check("point.constraint-set-roundtrip",
               "the constraint set factors as G times the annihilator subgroup",
               n, max(res["roundtrip_residual"], res["hcirc_membership_residual"]),
               1e-9),
        _check("point.zero-base-relation",
               "the bivector relation also holds at the dual identity base point",
               n, res0["q_relation_residual"], 1e-5),
    ]


SUITES = {
    "verify-bialgebra": suite_verify_bialgebra,
    "verify-poisson-lie": suite_verify_poisson_lie,
    "verify-momentum": suite_verify_momentum,
    "verify-induction": suite_verify_induction,
    "induce-orbit": suite_induce_orbit,
    "point-induction": suite_point_induction,
}


def run_suite(scenario: Scenario, suite: str, seed=None,
              cfg: ToleranceConfig = None) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; available: {sorted(SUITES)}")
    cfg = cfg or scenario.tol or DEFAULT_TOL
    used_seed = scenario.plan.seed if seed is None else int(seed)
    rng = np.random.default_rng(used_seed)
    checks = SUITES[suite](scenario, rng, cfg)
    return {
        "scenario": scenario.name,
        "suite": suite,
        "seed": used_seed,
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: dict) -> str:
    lines = [f"scenario: {report['scenario']}   suite: {report['suite']}   "
             f"seed: {report['seed']}"]
    width = max(len(c["id"]) for c in report["checks"])
    for c in report["checks"]:
        verdict = "PASS" if c["pass"] else "FAIL"
        lines.append(f"  {verdict}  {c['id']:<{width}}  "
                     f"max={c['max_residual']:.3e}  tol={c['tolerance']:.1e}  "
                     f"n={c['samples']}")
    lines.append("result: " + ("all checks passed" if report["all_pass"]
                               else "FAILURES present"))
    return "\n".join(lines) + "\n"
