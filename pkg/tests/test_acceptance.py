"""Acceptance criteria, one test per criterion, printing one verdict line each.

Heavy computations are shared through the session-scoped ``reports`` cache;
every criterion reads the check records produced by the deterministic suites
(or computes directly where no suite covers it).
"""
import numpy as np

from plie.suites import render_json, run_suite

BOTH = ("su2-torus", "semidirect-zero")


def _verdict(num, description, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:02d}: {description}")
    assert ok, f"acceptance criterion {num} failed: {description}"


def _check(report, cid):
    for c in report["checks"]:
        if c["id"] == cid:
            return c
    raise KeyError(f"check {cid!r} missing from report {report['suite']}")


def test_criterion_01_algebraic_substrate(reports):
    ok = True
    for name in BOTH:
        rep = reports(name, "verify-bialgebra")
        ok = ok and rep["all_pass"]
        ok = ok and all(c["tolerance"] <= 1e-12 for c in rep["checks"])
        ok = ok and all(c["max_residual"] < 1e-12 for c in rep["checks"])
    _verdict(1, "bialgebra and double-algebra invariants < 1e-12 on both "
                "scenarios", ok)


def test_criterion_02_poisson_lie_verification(reports):
    rep = reports("su2-torus", "verify-poisson-lie")
    ok = rep["all_pass"]
    for cid in ("poisson-lie.jacobi-G", "poisson-lie.multiplicativity-G"):
        c = _check(rep, cid)
        ok = ok and c["samples"] >= 50 and c["max_residual"] < 1e-6
    ok = ok and _check(rep, "poisson-lie.pi-plus-rank")["samples"] >= 25
    ok = ok and _check(rep, "poisson-lie.pi-plus-rank")["pass"]
    ok = ok and _check(rep, "poisson-lie.pi-minus-identity")["max_residual"] < 1e-12
    ok = ok and reports("semidirect-zero", "verify-poisson-lie")["all_pass"]
    _verdict(2, "pi_G Jacobi/multiplicativity < 1e-6 at 50 points, pi+ full "
                "rank at 25, pi-(e) = 0", ok)


def test_criterion_03_factorization_coherence(scenarios):
    worst_round = worst_assoc = 0.0
    for s in scenarios.values():
        dgm = s.dgm
        rng = s.rng()
        for _ in range(50):
            g, u = s.sample_G(rng), s.sample_Gstar(rng)
            d = dgm.compose(g, u)
            g2, u2 = dgm.factorize(d, "GU")
            worst_round = max(worst_round,
                              float(np.max(np.abs(g2 - g))),
                              float(np.max(np.abs(u2 - u))))
            u1, g1 = dgm.factorize(d, "UG")
            worst_round = max(worst_round, float(np.max(np.abs(
                dgm.embed_Gstar(u1) @ dgm.embed_G(g1) - d))))
        for _ in range(10):
            pairs = [(s.sample_G(rng, 0.25), s.sample_Gstar(rng, 0.25))
                     for _ in range(3)]
            a, b, c = pairs
            ab = dgm.double_multiply(a, b, cross_check=True)  # matrix agreement
            ab_c = dgm.double_multiply(ab, c)
            a_bc = dgm.double_multiply(a, dgm.double_multiply(b, c))
            worst_assoc = max(worst_assoc,
                              float(np.max(np.abs(ab_c[0] - a_bc[0]))),
                              float(np.max(np.abs(ab_c[1] - a_bc[1]))))
    ok = worst_round < 1e-9 and worst_assoc < 1e-8
    _verdict(3, "factorization roundtrips < 1e-9 at 50 points, double law "
                "matrix agreement and associativity < 1e-8", ok)


def test_criterion_04_momentum_maps(reports):
    ok = True
    for name in BOTH:
        rep = reports(name, "verify-momentum")
        for cid in ("momentum.right-action", "momentum.left-action",
                    "momentum.Jl-equivariance", "momentum.Jr-equivariance"):
            c = _check(rep, cid)
            ok = ok and c["samples"] >= 25 and c["max_residual"] < 1e-5
        ok = ok and _check(rep, "momentum.Jl-two-routes")["max_residual"] < 1e-9
    _verdict(4, "canonical momentum residuals and equivariance < 1e-5 at 25 "
                "points, J_l route agreement < 1e-9", ok)


def test_criterion_05_subgroup_lemma(reports):
    rep = reports("su2-torus", "verify-momentum")
    ok = True
    for cid in ("momentum.subgroup-coadjoint", "momentum.dressing-sign",
                "momentum.double-adjoint-split"):
        c = _check(rep, cid)
        ok = ok and c["samples"] >= 25 and c["max_residual"] < 1e-5
    _verdict(5, "all three subgroup/dressing identities < 1e-5 at 25 samples "
                "(su2-torus)", ok)


def test_criterion_06_classical_limit(reports):
    rep = reports("semidirect-zero", "verify-momentum")
    c = _check(rep, "momentum.classical-oracle")
    ok = c["samples"] >= 50 and c["max_residual"] < 1e-10
    ok = ok and _check(rep, "momentum.classical-flip-control")["pass"]
    _verdict(6, "classical closed forms matched < 1e-10 at 50 samples; "
                "sign-flipped control exceeds 1e-1", ok)


def test_criterion_07_invariance_identities(reports):
    ok = True
    for name in BOTH:
        rep = reports(name, "verify-induction")
        for cid in ("induction.Jr-invariant-left", "induction.Jl-invariant-right",
                    "induction.actions-commute",
                    "induction.twisted-diagonal-commutes"):
            c = _check(rep, cid)
            ok = ok and c["samples"] >= 25 and c["max_residual"] < 1e-8
    _verdict(7, "all four commutation/invariance identities < 1e-8 at 25 "
                "samples in both scenarios", ok)


def test_criterion_08_induction_pipeline(reports):
    rep = reports("su2-torus", "verify-induction")
    ok = _check(rep, "induction.Jcheck-momentum")["max_residual"] < 1e-4
    c = _check(rep, "induction.clean-intersection")
    ok = ok and c["pass"] and c["samples"] >= 25
    ok = ok and _check(rep, "induction.subchar-matches-generators")["pass"]
    ok = ok and _check(rep, "induction.bracket-antisym")["max_residual"] < 1e-8
    cj = _check(rep, "induction.bracket-jacobi")
    ok = ok and cj["samples"] >= 10 and cj["max_residual"] < 1e-4
    ok = ok and _check(rep, "induction.momentum-pair")["max_residual"] < 1e-4
    _verdict(8, "check-space momentum, constant rank dim h matching the "
                "generators, induced bracket antisymmetry/Jacobi, induced "
                "momentum pair", ok)


def test_criterion_09_point_induction(reports):
    ok = True
    for name in BOTH:
        rep = reports(name, "point-induction")
        c = _check(rep, "point.translation-bivector-relation")
        ok = ok and c["samples"] >= 25 and c["max_residual"] < 1e-5
        ok = ok and _check(rep, "point.u0-dressing-invariant")["pass"]
        ok = ok and _check(rep, "point.modification-vanishes-at-identity")["pass"]
        ok = ok and _check(rep, "point.constraint-set-roundtrip")["max_residual"] < 1e-9
    _verdict(9, "translation pushforward relation < 1e-5 at 25 points for "
                "invariant u0, modification at fd level for u0 = e*, "
                "roundtrip < 1e-9", ok)


def test_criterion_10_orbit_induction(reports):
    su2_rep = reports("su2-torus", "induce-orbit")
    semi_rep = reports("semidirect-zero", "induce-orbit")
    ok = _check(su2_rep, "orbit.condition-status")["pass"]
    ok = ok and su2_rep["all_pass"]
    ok = ok and _check(semi_rep, "orbit.condition-status")["pass"]
    mem = _check(semi_rep, "orbit.momentum-membership")
    ok = ok and mem["samples"] >= 20 and mem["max_residual"] < 1e-8
    _verdict(10, "orbit condition reported honestly per scenario; classical "
                 "orbit membership < 1e-8 at 20 samples", ok)


def test_criterion_11_determinism(scenarios):
    ok = True
    for name, suite in (("su2-torus", "verify-bialgebra"),
                        ("semidirect-zero", "point-induction")):
        a = render_json(run_suite(scenarios[name], suite))
        b = render_json(run_suite(scenarios[name], suite))
        ok = ok and a == b
    _verdict(11, "repeated runs with the same seed emit byte-identical JSON",
             ok)
