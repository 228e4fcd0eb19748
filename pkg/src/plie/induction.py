"""Leafwise reduction diagnostics and the Poisson induction pipeline.

Ambient points of the check space are pairs (p, d) with p a point of P and
d a carrier matrix of the double.  The induced space is represented
pointwise: canonical representatives are obtained by Newton projection onto
the constraint set followed by gauge fixing along the H-orbit.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .double import DoubleGroupModel
from .errors import InvariantViolation, MembershipError, NotDressingInvariant, RankUnstable
from .liecore import _matrix_of
from .momentum import (ActionModel, DualGroupModel, MomentumMapModel,
                       SubgroupData, canonical_left_action,
                       canonical_right_action, product_action, right_to_left)
from .numerics import (DEFAULT_TOL, RANK_CUTOFF, ToleranceConfig,
                       gauss_newton_least_squares, newton_solve,
                       orthonormal_basis, rank_of, subspace_intersection)
from .poisson import PoissonManifoldModel, chart_gradient, chart_jacobian


def subcharacteristic_basis(M: PoissonManifoldModel, constraint: Callable, x,
                            cfg: ToleranceConfig = DEFAULT_TOL,
                            membership_tol: float = 1e-8):
    """Orthonormal basis of pi^sharp((T_xN)deg) intersect T_xN at x on N.

    N is the zero set of ``constraint``; its annihilator is spanned by the
    rows of the constraint Jacobian and T_xN is that Jacobian's null space.
    """
    c0 = np.asarray(constraint(x), dtype=float)
    if np.max(np.abs(c0)) > membership_tol:
        raise MembershipError(f"point off the constraint set ({np.max(np.abs(c0)):.3e})")
    h = cfg.fd_step
    rows = []
    for j in range(M.dim):
        e = np.zeros(M.dim)
        e[j] = h
        a = np.asarray(constraint(M.shift(x, e)), dtype=float)
        b = np.asarray(constraint(M.shift(x, -e)), dtype=float)
        rows.append((a - b) / (2.0 * h))
    Jc = np.array(rows).T  # (codim) x (dim)
    u, s, vt = np.linalg.svd(Jc)
    if s.size and np.any((s > RANK_CUTOFF) & (s < 10 * RANK_CUTOFF * max(1.0, s[0]))):
        warnings.warn("constraint Jacobian singular values near rank cutoff",
                      RankUnstable)
    r = int(np.sum(s > RANK_CUTOFF * max(1.0, s[0] if s.size else 1.0)))
    ann = vt[:r]               # row space: annihilator of T_xN
    tangent = vt[r:]           # null space: T_xN
    pushed = (M.pi(x) @ ann.T).T
    return subspace_intersection(pushed, tangent)


def clean_intersection_report(M: PoissonManifoldModel, constraint: Callable,
                              samples, leaf_provider: Callable = None,
                              cfg: ToleranceConfig = DEFAULT_TOL):
    """Rank census over samples on N: rank of TN intersect leaf distribution
    and rank of the sub-characteristic distribution; flags rank jumps."""
    if leaf_provider is None:
        leaf_provider = lambda x: M.pi(x).T  # columns of pi span the leaf
    rows = []
    h = cfg.fd_step
    for x in samples:
        cols = []
        for j in range(M.dim):
            e = np.zeros(M.dim)
            e[j] = h
            a = np.asarray(constraint(M.shift(x, e)), dtype=float)
            b = np.asarray(constraint(M.shift(x, -e)), dtype=float)
            cols.append((a - b) / (2.0 * h))
        Jc = np.array(cols).T
        u, s, vt = np.linalg.svd(Jc)
        r = int(np.sum(s > RANK_CUTOFF * max(1.0, s[0] if s.size else 1.0)))
        tangent = vt[r:]
        leaf = orthonormal_basis(leaf_provider(x))
        inter_rank = subspace_intersection(tangent, leaf).shape[0]
        sub_rank = subcharacteristic_basis(M, constraint, x, cfg).shape[0]
        rows.append({"tn_leaf_rank": inter_rank, "subchar_rank": sub_rank})
    ranks1 = {r["tn_leaf_rank"] for r in rows}
    ranks2 = {r["subchar_rank"] for r in rows}
    return {
        "samples": rows,
        "tn_leaf_rank_constant": len(ranks1) <= 1,
        "subchar_rank_constant": len(ranks2) <= 1,
        "rank_jump": len(ranks1) > 1 or len(ranks2) > 1,
    }


def build_check_space(dgm: DoubleGroupModel, sub: SubgroupData,
                      sigma: ActionModel, J_P: MomentumMapModel):
    """Assemble (P x D, pi_P + pi_+) with the twisted diagonal H-action and
    the product momentum map, from the canonical right action on the double."""
    r_action, Jr = canonical_right_action(dgm, sub)
    r_tilde, Jr_left = right_to_left(r_action, Jr, sub.dress_Hstar_on_H)
    action, Jm = product_action(sigma, J_P, r_tilde, Jr_left,
                                sub.dress_Hstar_on_H, name="P x D")
    return action.space, action, Jm


@dataclass
class ConstraintQuotientModel:
    """The constraint set of the product momentum map at the dual identity,
    with Newton retraction and H-orbit gauge fixing."""

    space: PoissonManifoldModel
    sigma_check: ActionModel
    J_check: MomentumMapModel
    sub: SubgroupData
    dgm: DoubleGroupModel
    slice_fn: Callable                 # point -> vector (dim H) gauge residual
    gauge_guess: Callable = None       # point -> H-algebra coords
    project_closed: Callable = None    # optional exact retraction onto the level set
    tol: ToleranceConfig = DEFAULT_TOL

    def constraint_residual(self, x):
        return np.asarray(
            self.J_check.dual.coords(self.J_check.dual.identity, self.J_check.J(x)),
            dtype=float)

    def constraint_project(self, x, use_closed: bool = True):
        res = self.constraint_residual(x)
        if np.max(np.abs(res)) < self.tol.newton_tol:
            return x
        if use_closed and self.project_closed is not None:
            y = self.project_closed(x)
            if np.max(np.abs(self.constraint_residual(y))) < 1e-9:
                return y
        v = newton_solve(lambda v: self.constraint_residual(self.space.shift(x, v)),
                         np.zeros(self.space.dim), self.tol)
        return self.space.shift(x, v)

    def apply_h(self, theta, x):
        return self.sigma_check.act(self.sub.H.exp(theta), x)

    def gauge(self, x):
        guess = (np.asarray(self.gauge_guess(x), dtype=float)
                 if self.gauge_guess is not None else np.zeros(self.sub.H.dim))
        y = self.apply_h(guess, x)
        res = np.asarray(self.slice_fn(y), dtype=float)
        if np.max(np.abs(res)) < self.tol.newton_tol:
            return y
        theta = newton_solve(
            lambda t: np.asarray(self.slice_fn(self.apply_h(t, x)), dtype=float),
            guess, self.tol)
        return self.apply_h(theta, x)

    def canonical(self, x):
        return self.gauge(self.constraint_project(x))

    def gauge_idempotence_residual(self, x):
        y = self.gauge(x)
        z = self.gauge(y)
        return float(np.max(np.abs(self.space.coords(y, z))))


def build_left_residual_action(model: ConstraintQuotientModel,
                               drift_tol: float = 1e-7):
    """The residual left G-action on constraint points, l applied to the
    D-factor, plus the induced momentum J_l of the representative.

    Constraint preservation is asserted, not re-imposed; drift beyond
    ``drift_tol`` signals a convention bug.
    """
    l_action, Jl = canonical_left_action(model.dgm)

    def lcheck(k, x):
        p, d = x
        out = (p, l_action.act(k, d))
        before = model.constraint_residual(x)
        after = model.constraint_residual(out)
        drift = float(np.max(np.abs(after - before)))
        if drift > drift_tol:
            raise InvariantViolation(f"constraint drift {drift:.3e} under the residual action")
        return out

    def induced_momentum(x):
        return Jl.J(x[1])

    return lcheck, induced_momentum


def induced_action_apply(model: ConstraintQuotientModel, lcheck, k, x):
    return model.gauge(lcheck(k, x))


def induced_bracket_function(model: ConstraintQuotientModel, F, G):
    """The bracket of two induced-space functions as an invariant ambient
    function: x -> dF~ pi dG~ at the canonical representative of x, where
    F~ = F o canonical is the H-invariant extension."""
    Ft = lambda y: F(model.canonical(y))
    Gt = lambda y: G(model.canonical(y))

    def bracket(x):
        c = model.canonical(x)
        dF = chart_gradient(model.space, Ft, c, model.tol)
        dG = chart_gradient(model.space, Gt, c, model.tol)
        return float(dF @ model.space.pi(c) @ dG)

    return bracket


def invariance_residual(model: ConstraintQuotientModel, F, x,
                        cfg: ToleranceConfig = DEFAULT_TOL):
    """Max derivative of F along the sigma-check generators of h at x."""
    h = cfg.fd_step
    worst = 0.0
    for i in range(model.sub.H.dim):
        e = np.zeros(model.sub.H.dim)
        e[i] = h
        worst = max(worst, abs(F(model.apply_h(e, x)) - F(model.apply_h(-e, x))) / (2.0 * h))
    return worst


def sigma_generators(model: ConstraintQuotientModel, x,
                     cfg: ToleranceConfig = DEFAULT_TOL):
    """Rows: chart coordinates of the sigma-check infinitesimal generators."""
    h = cfg.fd_step
    rows = []
    for i in range(model.sub.H.dim):
        e = np.zeros(model.sub.H.dim)
        e[i] = h
        a = np.asarray(model.space.coords(x, model.apply_h(e, x)), dtype=float)
        b = np.asarray(model.space.coords(x, model.apply_h(-e, x)), dtype=float)
        rows.append((a - b) / (2.0 * h))
    return np.array(rows)


def prop42_residuals(model: ConstraintQuotientModel, samples):
    """Max residuals of the four commutation identities over samples.

    samples: list of dicts with keys "k" (G carrier), "h" (H carrier),
    "x" (constraint point (p, d)).  Pure factorization arithmetic.
    """
    dgm = model.dgm
    sub = model.sub
    l_action, Jl = canonical_left_action(dgm)
    _, Jr = canonical_right_action(dgm, sub)
    r1 = r2 = r3 = r4 = 0.0
    for s in samples:
        k = _matrix_of(s["k"])
        hm = _matrix_of(s["h"])
        p, d = s["x"]
        d = _matrix_of(d)
        hG = dgm.embed_G(sub.incl_H(hm))

        ld = l_action.act(k, d)
        r1 = max(r1, float(np.max(np.abs(
            np.asarray(Jr.J(ld), dtype=float) - np.asarray(Jr.J(d), dtype=float)))))
        r2 = max(r2, float(np.max(np.abs(Jl.J(d @ hG) - Jl.J(d)))))
        r3 = max(r3, float(np.max(np.abs(l_action.act(k, d @ hG) - ld @ hG))))

        x = (p, d)
        a = model.sigma_check.act(hm, (p, ld))
        pb, db = model.sigma_check.act(hm, x)
        b = (pb, l_action.act(k, db))
        r4 = max(r4, float(np.max(np.abs(model.space.coords(a, b)))))
    return r1, r2, r3, r4


def induced_space_manifold(model: ConstraintQuotientModel) -> PoissonManifoldModel:
    """Local chart model of the induced space around canonical points.

    Canonical representatives are parametrized by their D-factor (the gauge
    slice pins the P-directions along the orbit and the constraint pins the
    momentum direction), so the chart is the D exp-chart with canonical
    re-projection, and the bivector is the pushforward of the ambient one
    through that parametrization.
    """
    dgm = model.dgm
    space = model.space

    def shift(x, y):
        p, d = x
        return model.canonical((p, dgm.D.chart_shift(d, y)))

    def coords(base, x):
        return dgm.D.chart_coords(base[1], x[1])

    def bivector(x):
        chart = lambda z: np.asarray(dgm.D.chart_coords(x[1], model.canonical(z)[1]),
                                     dtype=float)
        h = model.tol.fd_step
        cols = []
        for j in range(space.dim):
            e = np.zeros(space.dim)
            e[j] = h
            cols.append((chart(space.shift(x, e)) - chart(space.shift(x, -e))) / (2.0 * h))
        T = np.array(cols).T
        pi = T @ space.pi(x) @ T.T
        return 0.5 * (pi - pi.T)  # strip fd-level asymmetry noise

    return PoissonManifoldModel(dim=dgm.D.dim, bivector=bivector,
                                shift=shift, coords=coords, name="P_ind")


def induced_momentum_model(model: ConstraintQuotientModel):
    """(l_ind, J_ind) on the induced space: gauge-projected residual action
    with the momentum J_l of the canonical representative."""
    from .poisson import PoissonLieGroupModel

    lcheck, induced_momentum = build_left_residual_action(model)
    manifold = induced_space_manifold(model)
    dgm = model.dgm
    G_poisson = PoissonLieGroupModel(group=dgm.G, bivector=dgm.pi_G, name=dgm.G.name)
    Gstar_dual = DualGroupModel.from_matrix_group(dgm.Gstar, dgm.pi_Gstar)

    action = ActionModel(group=G_poisson, space=manifold,
                         act=lambda k, x: model.gauge(lcheck(k, x)), side="left")
    Jm = MomentumMapModel(action=action, dual=Gstar_dual,
                          J=lambda x: induced_momentum(x))
    return action, Jm


def example1_point_induction(dgm: DoubleGroupModel, sub: SubgroupData, u0,
                             rng: np.random.Generator, n_samples: int = 25,
                             box: float = 0.35,
                             cfg: ToleranceConfig = DEFAULT_TOL):
    """Induction from a point: translation diffeomorphism and the bivector
    pushforward relation for Q(d) = d w0^{-1}, w0 the section of u0."""
    u0 = np.asarray(u0, dtype=float)
    n = dgm.n

    # dressing invariance of u0 under H (precondition)
    inv_res = 0.0
    if sub.sub_double is not None:
        w0_sub = sub.sub_double.Gstar.exp(u0)
        for _ in range(5):
            hm = sub.H.exp(rng.uniform(-box, box, size=sub.H.dim))
            moved = sub.sub_double.dress(hm, w0_sub, "G_on_Gstar", "left")
            inv_res = max(inv_res, float(np.max(np.abs(moved - w0_sub))))
    if inv_res > 1e-9:
        raise NotDressingInvariant(f"u0 moves under H-dressing ({inv_res:.3e})")

    w0 = sub.s_star(u0)
    w0d = dgm.embed_Gstar(w0)
    w0d_inv = np.linalg.inv(w0d)
    pi_minus_w0inv = dgm.pi_pm(w0d_inv, -1)

    Dman = PoissonManifoldModel(dim=dgm.D.dim, bivector=lambda d: dgm.pi_pm(d, +1),
                                shift=dgm.D.chart_shift, coords=dgm.D.chart_coords)
    Q = lambda d: _matrix_of(d) @ w0d_inv

    q_res = 0.0
    for _ in range(n_samples):
        d = dgm.compose(dgm.G.exp(rng.uniform(-box, box, size=n)),
                        dgm.Gstar.exp(rng.uniform(-box, box, size=n)))
        TQ = chart_jacobian(Q, Dman, Dman, d, cfg)
        lhs = TQ @ dgm.pi_pm(d, +1) @ TQ.T
        rhs = dgm.pi_pm(Q(d), +1) + pi_minus_w0inv
        q_res = max(q_res, float(np.max(np.abs(lhs - rhs))))

    modification_norm = float(np.max(np.abs(pi_minus_w0inv)))

    # constraint set (P = point, J = u0) is G x Hcirc via I(gu) = (g, u w0^{-1})
    roundtrip = 0.0
    hcirc_off = 0.0
    for _ in range(n_samples):
        g = dgm.G.exp(rng.uniform(-box, box, size=n))
        hc = dgm.Gstar.exp(rng.uniform(-box, box, size=sub.hcirc_basis.shape[0])
                           @ sub.hcirc_basis)
        d = dgm.compose(g, hc @ w0)
        g1, u1 = dgm.factorize(d, "GU")
        hc1 = u1 @ np.linalg.inv(w0)
        coords = dgm.Gstar.log(hc1)
        off = coords - sub.hcirc_basis.T @ np.linalg.pinv(sub.hcirc_basis.T) @ coords
        hcirc_off = max(hcirc_off, float(np.max(np.abs(off))))
        back = dgm.compose(g1, hc1 @ w0)
        roundtrip = max(roundtrip, float(np.max(np.abs(back - d))))
        roundtrip = max(roundtrip, float(np.max(np.abs(g1 - g))),
                        float(np.max(np.abs(hc1 - hc))))

    return {
        "u0_invariance_residual": inv_res,
        "q_relation_residual": q_res,
        "modification_term_norm": modification_norm,
        "roundtrip_residual": roundtrip,
        "hcirc_membership_residual": hcirc_off,
        "u0_is_identity": bool(np.max(np.abs(u0)) == 0.0),
    }


def example2_orbit_induction(dgm: DoubleGroupModel, sub: SubgroupData, v, w,
                             rng: np.random.Generator, n_samples: int = 20,
                             box: float = 0.35,
                             cfg: ToleranceConfig = DEFAULT_TOL,
                             membership_tol: float = 1e-6):
    """Induction on the dressing orbit of w in G*.

    Reports (a) the empirical status of the condition w Hcirc inside H.w,
    (b) membership of the induced-momentum images of constraint samples in
    the G-dressing orbit of w.  Newton failures are counted, not fatal.
    """
    v = np.asarray(v, dtype=float)
    w = _matrix_of(w)
    n = dgm.n
    iv = np.asarray(sub.i_star(w), dtype=float)
    if float(np.max(np.abs(iv - v))) > 1e-9:
        raise MembershipError("base points violate i*(w) = v")

    def dress_orbit_residual(group_dim, exp_fn, target):
        # least-squares solve for a dressing element reaching the target
        def residual(x):
            moved = dgm.dress(exp_fn(x), w, "G_on_Gstar", "left")
            return dgm.Gstar.chart_coords(target, moved)

        _, final = gauss_newton_least_squares(residual, np.zeros(group_dim), cfg)
        return final

    cond_res = 0.0
    for _ in range(n_samples):
        hc = dgm.Gstar.exp(rng.uniform(-box, box, size=sub.hcirc_basis.shape[0])
                           @ sub.hcirc_basis)
        target = w @ hc
        cond_res = max(cond_res, dress_orbit_residual(
            sub.H.dim, lambda x: sub.incl_H(sub.H.exp(x)), target))
    condition_holds = cond_res < membership_tol

    orbit_res = 0.0
    for _ in range(n_samples):
        g = dgm.G.exp(rng.uniform(-box, box, size=n))
        u = w @ dgm.Gstar.exp(rng.uniform(-box, box, size=sub.hcirc_basis.shape[0])
                              @ sub.hcirc_basis)
        # induced momentum of the class of (g, u): right dressing of g^{-1} on u
        target = dgm.dress(np.linalg.inv(g), u, "G_on_Gstar", "right")
        orbit_res = max(orbit_res, dress_orbit_residual(n, dgm.G.exp, target))

    return {
        "condition_residual": cond_res,
        "condition_holds": condition_holds,
        "orbit_membership_residual": orbit_res,
        "orbit_membership_ok": orbit_res < membership_tol,
    }
