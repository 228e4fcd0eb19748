"""Momentum maps for Poisson actions: defining-equation residuals,
equivariance, right-to-left conversion, products, the canonical actions on
the double, the subgroup dressing identities, and the zero-structure
classical oracle.

Momentum convention, matching the dressing table in ``double``:

    left actions:   sigma(X) =  pi^sharp(J^* X^l)
    right actions:  sigma(X) = -pi^sharp(J^* X^r)

with X^l constant and X^r = Ad(u)^T X in left exp-charts at u = J(x).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .double import DoubleGroupModel
from .liecore import MatrixGroupModel, _matrix_of
from .numerics import DEFAULT_TOL, ToleranceConfig
from .poisson import (PoissonLieGroupModel, PoissonManifoldModel,
                      infinitesimal_dressing, poisson_map_residual)


@dataclass
class DualGroupModel:
    """Target of a momentum map: a group with charts and a canonical bivector.

    Covers both matrix dual groups (G*) and additive duals (H* for a
    zero-structure subgroup); the additive case has trivial Ad and chart.
    """

    dim: int
    identity: object
    multiply: Callable
    inverse: Callable
    coords: Callable
    shift: Callable
    Ad: Callable          # point -> dim x dim matrix
    bivector: Callable
    name: str = ""

    @classmethod
    def from_matrix_group(cls, group: MatrixGroupModel, bivector, name: str = ""):
        return cls(
            dim=group.dim,
            identity=group.identity,
            multiply=lambda a, b: _matrix_of(a) @ _matrix_of(b),
            inverse=lambda a: np.linalg.inv(_matrix_of(a)),
            coords=group.chart_coords,
            shift=group.chart_shift,
            Ad=group.Ad,
            bivector=bivector,
            name=name or group.name,
        )

    @classmethod
    def additive(cls, dim: int, bivector=None, name: str = ""):
        zero = np.zeros((dim, dim))
        bv = bivector if bivector is not None else (lambda x: zero)
        return cls(
            dim=dim,
            identity=np.zeros(dim),
            multiply=lambda a, b: np.asarray(a, dtype=float) + np.asarray(b, dtype=float),
            inverse=lambda a: -np.asarray(a, dtype=float),
            coords=lambda base, x: np.asarray(x, dtype=float) - np.asarray(base, dtype=float),
            shift=lambda x, v: np.asarray(x, dtype=float) + np.asarray(v, dtype=float),
            Ad=lambda u: np.eye(dim),
            bivector=bv,
            name=name,
        )

    def manifold(self) -> PoissonManifoldModel:
        return PoissonManifoldModel(dim=self.dim, bivector=self.bivector,
                                    shift=self.shift, coords=self.coords,
                                    name=self.name)

    def difference_norm(self, a, b) -> float:
        return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


@dataclass
class ActionModel:
    """Action evaluator act(g, x); ``side`` records left/right semantics."""

    group: PoissonLieGroupModel
    space: PoissonManifoldModel
    act: Callable
    side: str  # "left" | "right"

    def generator(self, X, x, cfg: ToleranceConfig = DEFAULT_TOL):
        h = cfg.fd_step
        gp = self.group.group.exp(h * np.asarray(X, dtype=float))
        gm = self.group.group.exp(-h * np.asarray(X, dtype=float))
        a = np.asarray(self.space.coords(x, self.act(gp, x)), dtype=float)
        b = np.asarray(self.space.coords(x, self.act(gm, x)), dtype=float)
        return (a - b) / (2.0 * h)


@dataclass
class MomentumMapModel:
    action: ActionModel
    dual: DualGroupModel
    J: Callable  # space point -> dual point


def momentum_jacobian(Jm: MomentumMapModel, x, cfg: ToleranceConfig = DEFAULT_TOL):
    space = Jm.action.space
    h = cfg.fd_step
    u = Jm.J(x)
    cols = []
    for j in range(space.dim):
        e = np.zeros(space.dim)
        e[j] = h
        a = np.asarray(Jm.dual.coords(u, Jm.J(space.shift(x, e))), dtype=float)
        b = np.asarray(Jm.dual.coords(u, Jm.J(space.shift(x, -e))), dtype=float)
        cols.append((a - b) / (2.0 * h))
    return np.array(cols).T


def momentum_residual(Jm: MomentumMapModel, X, x, cfg: ToleranceConfig = DEFAULT_TOL):
    X = np.asarray(X, dtype=float)
    gen = Jm.action.generator(X, x, cfg)
    TJ = momentum_jacobian(Jm, x, cfg)
    u = Jm.J(x)
    if Jm.action.side == "left":
        alpha = TJ.T @ X
        res = gen - Jm.action.space.pi(x) @ alpha
    else:
        alpha = TJ.T @ (Jm.dual.Ad(u).T @ X)
        res = gen + Jm.action.space.pi(x) @ alpha
    return float(np.max(np.abs(res))) / max(1.0, float(np.linalg.norm(X)))


def equivariance_residual(Jm: MomentumMapModel, x, cfg: ToleranceConfig = DEFAULT_TOL):
    return poisson_map_residual(Jm.J, Jm.action.space, Jm.dual.manifold(), x, cfg)


def right_to_left(action: ActionModel, Jm: MomentumMapModel, dress_left: Callable):
    """Convert a right Poisson action into a left one:

        sigma~(g, x) = sigma(x, lambda_{J(x)}(g)^{-1})

    ``dress_left(w, g)`` is the left dressing of the dual group on the
    acting group; the momentum map is unchanged.
    """
    if action.side != "right":
        raise ValueError("right_to_left expects a right action")

    def act(g, x):
        dressed = dress_left(Jm.J(x), _matrix_of(g))
        return action.act(np.linalg.inv(dressed), x)

    left = ActionModel(group=action.group, space=action.space, act=act, side="left")
    return left, MomentumMapModel(action=left, dual=Jm.dual, J=Jm.J)


def product_space(P1: PoissonManifoldModel, P2: PoissonManifoldModel,
                  name: str = "") -> PoissonManifoldModel:
    n1 = P1.dim

    def bivector(x):
        out = np.zeros((P1.dim + P2.dim, P1.dim + P2.dim))
        out[:n1, :n1] = P1.pi(x[0])
        out[n1:, n1:] = P2.pi(x[1])
        return out

    return PoissonManifoldModel(
        dim=P1.dim + P2.dim,
        bivector=bivector,
        shift=lambda x, v: (P1.shift(x[0], v[:n1]), P2.shift(x[1], v[n1:])),
        coords=lambda b, x: np.concatenate([
            np.asarray(P1.coords(b[0], x[0]), dtype=float),
            np.asarray(P2.coords(b[1], x[1]), dtype=float)]),
        name=name,
    )


def product_action(a1: ActionModel, J1: MomentumMapModel,
                   a2: ActionModel, J2: MomentumMapModel,
                   dress_left: Callable, name: str = ""):
    """Product of two left actions of the same group:

        sigma(g, (p1, p2)) = (sigma1(lambda_{J2(p2)}(g), p1), sigma2(g, p2))

    with momentum the pointwise dual-group product J1(p1) J2(p2).
    """
    if a1.side != "left" or a2.side != "left":
        raise ValueError("product_action expects left actions")
    space = product_space(a1.space, a2.space, name=name)

    def act(g, x):
        p1, p2 = x
        return (a1.act(dress_left(J2.J(p2), _matrix_of(g)), p1), a2.act(g, p2))

    action = ActionModel(group=a1.group, space=space, act=act, side="left")
    Jm = MomentumMapModel(action=action, dual=J1.dual,
                          J=lambda x: J1.dual.multiply(J1.J(x[0]), J2.J(x[1])))
    return action, Jm


@dataclass
class SubgroupData:
    """A Poisson-Lie subgroup H of G with its dual projection and annihilator.

    ``h_structure_zero`` declares pi_H = 0, which makes the dressing of H*
    on H trivial (the only case the shipped scenarios need); otherwise a
    ``sub_double`` must be supplied for that dressing.
    """

    H: MatrixGroupModel
    incl_H: Callable                # H carrier matrix -> G carrier matrix
    i_mat: np.ndarray               # algebra inclusion, (dim G) x (dim H)
    dual: DualGroupModel            # H*
    i_star: Callable                # G* carrier matrix -> H* point
    s_star: Callable                # H* point -> G* carrier matrix (section)
    hcirc_basis: np.ndarray         # rows: coords in g* of the H-degree-zero part
    H_poisson: PoissonLieGroupModel = None
    h_structure_zero: bool = True
    sub_double: DoubleGroupModel = None

    def __post_init__(self):
        self.i_mat = np.asarray(self.i_mat, dtype=float)
        self.hcirc_basis = np.asarray(self.hcirc_basis, dtype=float)
        if self.H_poisson is None:
            zero = np.zeros((self.H.dim, self.H.dim))
            self.H_poisson = PoissonLieGroupModel(group=self.H,
                                                  bivector=lambda g: zero,
                                                  name=self.H.name)

    def dress_Hstar_on_H(self, w, h):
        """Left dressing of H* on H; identity when pi_H = 0."""
        if self.h_structure_zero:
            return _matrix_of(h)
        if self.sub_double is None:
            raise ValueError("nonzero pi_H requires a sub_double for dressing")
        w_carrier = self.sub_double.Gstar.exp(np.asarray(w, dtype=float))
        return self.sub_double.dress(w_carrier, h, "Gstar_on_G", "left")

    def coad_Hstar(self, w):
        """Coadjoint matrix of w in H* acting on the algebra of H."""
        return np.eye(self.H.dim)  # additive duals of the shipped scenarios


def canonical_right_action(dgm: DoubleGroupModel, sub: SubgroupData):
    """r(d, h) = d h on (D, pi_+), with momentum J_r = inversion(i*(u))."""
    space = PoissonManifoldModel(
        dim=dgm.D.dim,
        bivector=lambda d: dgm.pi_pm(d, +1),
        shift=dgm.D.chart_shift,
        coords=dgm.D.chart_coords,
        name=f"({dgm.D.name}, pi+)",
    )
    action = ActionModel(
        group=sub.H_poisson, space=space,
        act=lambda h, d: _matrix_of(d) @ dgm.embed_G(sub.incl_H(h)),
        side="right",
    )

    def J(d):
        u = dgm.factorize(d, "GU")[1]
        return sub.dual.inverse(sub.i_star(u))

    return action, MomentumMapModel(action=action, dual=sub.dual, J=J)


def canonical_left_action(dgm: DoubleGroupModel):
    """l_k(d) = lambda_{J_l(d)}(k) d on (D, pi_+), J_l(d) = UG_1(d)."""
    space = PoissonManifoldModel(
        dim=dgm.D.dim,
        bivector=lambda d: dgm.pi_pm(d, +1),
        shift=dgm.D.chart_shift,
        coords=dgm.D.chart_coords,
        name=f"({dgm.D.name}, pi+)",
    )
    G_poisson = PoissonLieGroupModel(group=dgm.G, bivector=dgm.pi_G,
                                     name=dgm.G.name)
    Gstar_dual = DualGroupModel.from_matrix_group(dgm.Gstar, dgm.pi_Gstar)

    def J(d):
        return dgm.factorize(d, "UG")[0]

    def act(k, d):
        w = J(d)
        dressed = dgm.dress(w, k, "Gstar_on_G", "left")
        return dgm.embed_G(dressed) @ _matrix_of(d)

    action = ActionModel(group=G_poisson, space=space, act=act, side="left")
    return action, MomentumMapModel(action=action, dual=Gstar_dual, J=J)


def J_l_via_dressing(dgm: DoubleGroupModel, d):
    """Alternative route for J_l: GU-factorize d = gu, then the right
    dressing of g^{-1} on u."""
    g, u = dgm.factorize(d, "GU")
    return dgm.dress(np.linalg.inv(g), u, "G_on_Gstar", "right")


def lemma32_residuals(dgm: DoubleGroupModel, sub: SubgroupData, samples,
                      cfg: ToleranceConfig = DEFAULT_TOL):
    """Max residuals of the three subgroup/dressing identities over samples.

    samples: dict with keys "u" (G* matrices), "g" (G matrices),
    "Y" (H-algebra coords), "xi" (g* coords), "X" (g coords).
    """
    G_poisson = PoissonLieGroupModel(group=dgm.G, bivector=dgm.pi_G)
    n = dgm.n
    r1 = r2 = r3 = 0.0

    for u, Y in zip(samples["u"], samples["Y"]):
        w = sub.dual.inverse(sub.i_star(u))
        lhs = sub.i_mat @ (sub.coad_Hstar(sub.dual.inverse(w)) @ np.asarray(Y, dtype=float))
        rhs = dgm.Gstar.Coad(u) @ (sub.i_mat @ np.asarray(Y, dtype=float))
        r1 = max(r1, float(np.max(np.abs(lhs - rhs))))

    for g, xi in zip(samples["g"], samples["xi"]):
        rho = infinitesimal_dressing(G_poisson, dgm.G.Coad(g) @ np.asarray(xi, dtype=float),
                                     "right", g)
        lam = infinitesimal_dressing(G_poisson, xi, "left", g)
        r2 = max(r2, float(np.max(np.abs(rho + lam))))

    h = cfg.fd_step
    for u, X in zip(samples["u"], samples["X"]):
        X = np.asarray(X, dtype=float)
        ud = dgm.embed_Gstar(u)
        lhs = dgm.D.Ad(ud) @ np.concatenate([X, np.zeros(n)])

        def rho_coords(t):
            g = dgm.G.exp(t * X)
            gbar = dgm.factorize(ud @ dgm.embed_G(g), "GU")[0]
            return dgm.G.log(gbar)

        a = (rho_coords(h) - rho_coords(-h)) / (2.0 * h)
        b = -dgm.Gstar.Ad(u) @ (dgm.pi_Gstar(u) @ X)
        r3 = max(r3, float(np.max(np.abs(lhs - np.concatenate([a, b])))))

    return r1, r2, r3


def classical_limit_oracle(dgm: DoubleGroupModel, sub: SubgroupData, samples,
                           flip_coad: bool = False):
    """Compare the canonical double actions and momenta on a zero-structure
    scenario against the cotangent-lift closed forms

        r(d,h) = (gh, Coad(h^{-1}) mu),  l_k(d) = (kg, mu),
        J_r(d) = inverse(i* mu),         J_l(d) = Coad(g) mu,

    where d = (g, mu) through the additive G* = g*.  With flip_coad the
    two Coad oracles use the opposite group element, which must produce
    large deviations (sign-convention guard).

    samples: list of dicts with keys "g", "mu", "h", "k".
    """
    l_action, Jl_m = canonical_left_action(dgm)
    _, Jr_m = canonical_right_action(dgm, sub)
    dev = 0.0
    for s in samples:
        g = _matrix_of(s["g"])
        mu = np.asarray(s["mu"], dtype=float)
        hmat = _matrix_of(s["h"])
        kmat = _matrix_of(s["k"])
        d = dgm.compose(g, dgm.Gstar.exp(mu))

        coad_h = dgm.G.Coad(hmat) if flip_coad else dgm.G.Coad(np.linalg.inv(hmat))
        coad_g = dgm.G.Coad(np.linalg.inv(g)) if flip_coad else dgm.G.Coad(g)

        g1, u1 = dgm.factorize(d @ dgm.embed_G(hmat), "GU")
        dev = max(dev, float(np.max(np.abs(g1 - g @ hmat))))
        dev = max(dev, float(np.max(np.abs(dgm.Gstar.log(u1) - coad_h @ mu))))

        g2, u2 = dgm.factorize(l_action.act(kmat, d), "GU")
        dev = max(dev, float(np.max(np.abs(g2 - kmat @ g))))
        dev = max(dev, float(np.max(np.abs(dgm.Gstar.log(u2) - mu))))

        jr = np.asarray(Jr_m.J(d), dtype=float)
        # closed form -i* mu straight from the coordinates, <i* mu, Y> = <mu, i Y>
        jr_closed = -(sub.i_mat.T @ mu)
        dev = max(dev, float(np.max(np.abs(jr - jr_closed))))

        jl = dgm.Gstar.log(Jl_m.J(d))
        dev = max(dev, float(np.max(np.abs(jl - coad_g @ mu))))
    return dev
