"""Scenario files and the model assembly for the two shipped scenarios.

A scenario file is plain JSON holding the structure-constant tables, the
matrix embeddings as nested arrays, the subgroup block, base points, the
sample plan, and hypothesis flags.  The file carries all numeric content;
this module contributes only the closed-form engines (memberships,
factorizations, exp/log) selected by the scenario's ``kind``:

* ``iwasawa-sl2``: G = SU(2) with the standard structure, G* = SB(2, C),
  D = SL(2, C), all realized as real 4x4 matrices; H is the diagonal torus.
* ``cotangent-semidirect``: a 3-dim G with zero Poisson structure,
  G* = g* additive, D the semidirect product (the classical oracle); H is
  the translation subgroup.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .double import DoubleAlgebra, DoubleGroupModel, LieBialgebraData
from .errors import InvariantFailure, LogDomainError, ParseError
from .induction import ConstraintQuotientModel, build_check_space
from .liecore import LieAlgebraData, MatrixGroupModel
from .momentum import (ActionModel, DualGroupModel, MomentumMapModel,
                       SubgroupData)
from .numerics import DEFAULT_TOL, ToleranceConfig
from .poisson import PoissonManifoldModel, constant_manifold

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
SHIPPED = {
    "semidirect-zero": os.path.join(DATA_DIR, "semidirect_zero.json"),
    "su2-torus": os.path.join(DATA_DIR, "su2_torus.json"),
}


# ---------------------------------------------------------------------------
# real realization of complex 2x2 matrices
def realify(c: np.ndarray) -> np.ndarray:
    """Complex n x n -> real 2n x 2n with [[Re, -Im], [Im, Re]] blocks."""
    c = np.asarray(c, dtype=complex)
    n = c.shape[0]
    out = np.empty((2 * n, 2 * n))
    out[0::2, 0::2] = c.real
    out[1::2, 1::2] = c.real
    out[0::2, 1::2] = -c.imag
    out[1::2, 0::2] = c.imag
    return out


def derealify(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return m[0::2, 0::2] + 1j * m[1::2, 0::2]


def _block_residual(m) -> float:
    return float(np.max(np.abs(m - realify(derealify(m)))))


# closed-form exp/log for realified 2x2 unimodular groups; A^2 = -det(A) I
# for traceless A makes both entire functions of one scalar.
def _exp_traceless_realified(m: np.ndarray) -> np.ndarray:
    A = derealify(m)
    mu2 = -np.linalg.det(A)
    mu = np.sqrt(mu2 + 0j)
    if abs(mu) < 1e-6:
        ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0
        sc = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0
    else:
        ch = np.cosh(mu)
        sc = np.sinh(mu) / mu
    return realify(ch * np.eye(2) + sc * A)


def _log_det1_realified(g: np.ndarray) -> np.ndarray:
    c = derealify(g)
    z = 0.5 * np.trace(c)
    if abs(z + 1.0) < 1e-12:
        raise LogDomainError("antipodal element has no principal logarithm")
    mu = np.log(z + np.sqrt(z - 1.0 + 0j) * np.sqrt(z + 1.0 + 0j))
    if abs(mu) < 1e-6:
        sc = 1.0 + mu * mu / 6.0 + mu ** 4 / 120.0
    else:
        sc = np.sinh(mu) / mu
    return realify((c - np.cosh(mu) * np.eye(2)) / sc)


# global Iwasawa factorizations of SL(2, C), Gram-Schmidt closed forms
def _factor_gu_sl2(d: np.ndarray):
    c = derealify(d)
    a = float(np.linalg.norm(c[:, 0]))
    g0, g1 = c[0, 0] / a, c[1, 0] / a
    g = np.array([[g0, -np.conj(g1)], [g1, np.conj(g0)]])
    u = g.conj().T @ c
    return realify(g), realify(u)


def _factor_ug_sl2(d: np.ndarray):
    c = derealify(d)
    a = 1.0 / float(np.linalg.norm(c[1, :]))
    g0, g1 = c[1, 0] * a, c[1, 1] * a
    g = np.array([[np.conj(g1), -np.conj(g0)], [g0, g1]])
    u = c @ g.conj().T
    return realify(u), realify(g)


# memberships for the realified carriers
def _mem_sl2c(m) -> float:
    c = derealify(m)
    return max(_block_residual(m), abs(np.linalg.det(c) - 1.0))


def _mem_su2(m) -> float:
    c = derealify(m)
    return max(_block_residual(m),
               float(np.max(np.abs(c.conj().T @ c - np.eye(2)))),
               abs(np.linalg.det(c) - 1.0))


def _mem_sb2(m) -> float:
    c = derealify(m)
    return max(_block_residual(m), abs(c[1, 0]),
               abs(c[0, 0].imag), abs(c[1, 1].imag),
               max(0.0, -c[0, 0].real), abs(np.linalg.det(c) - 1.0))


def _mem_torus(m) -> float:
    c = derealify(m)
    return max(_mem_su2(m), abs(c[0, 1]), abs(c[1, 0]))


def _mem_sb_diag(m) -> float:
    c = derealify(m)
    return max(_mem_sb2(m), abs(c[0, 1]))


def _mem_sl2_diag(m) -> float:
    c = derealify(m)
    return max(_mem_sl2c(m), abs(c[0, 1]), abs(c[1, 0]))


# SE(2)-type carriers
_J2 = np.array([[0.0, -1.0], [1.0, 0.0]])


def _mem_se2(m) -> float:
    m = np.asarray(m, dtype=float)
    R = m[:2, :2]
    return max(float(np.max(np.abs(R.T @ R - np.eye(2)))),
               abs(np.linalg.det(R) - 1.0),
               float(np.max(np.abs(m[2] - np.array([0.0, 0.0, 1.0])))))


def _mem_translations(m) -> float:
    return max(_mem_se2(m), float(np.max(np.abs(np.asarray(m)[:2, :2] - np.eye(2)))))


def _mem_gstar_additive(m) -> float:
    m = np.asarray(m, dtype=float)
    return max(float(np.max(np.abs(m[:3, :3] - np.eye(3)))),
               float(np.max(np.abs(m[:3, 3]))), abs(m[3, 3] - 1.0))


def _mem_d_semidirect(m) -> float:
    m = np.asarray(m, dtype=float)
    A = m[:3, :3]
    R = A[1:, 1:]
    return max(abs(A[0, 0] - 1.0), float(np.max(np.abs(A[0, 1:]))),
               float(np.max(np.abs(R.T @ R - np.eye(2)))),
               abs(np.linalg.det(R) - 1.0),
               float(np.max(np.abs(m[:3, 3]))), abs(m[3, 3] - 1.0))


def _se2_Ad(g):
    """Closed-form adjoint of an SE(2) carrier in the (rotation, p1, p2) basis."""
    g = np.asarray(g, dtype=float)
    R = g[:2, :2]
    t = g[:2, 2]
    A = np.eye(3)
    A[1:, 1:] = R
    A[1:, 0] = -_J2 @ t
    return A


def _embed_se2_in_d(g):
    out = np.eye(4)
    out[:3, :3] = _se2_Ad(g)
    return out


def _se2_from_ad(A):
    g = np.eye(3)
    g[:2, :2] = A[1:, 1:]
    g[:2, 2] = _J2 @ A[1:, 0]
    return g


def _gstar_carrier(mu):
    out = np.eye(4)
    out[3, :3] = np.asarray(mu, dtype=float)
    return out


def _factor_gu_semidirect(d):
    d = np.asarray(d, dtype=float)
    return _se2_from_ad(d[:3, :3]), _gstar_carrier(d[3, :3])


def _factor_ug_semidirect(d):
    d = np.asarray(d, dtype=float)
    A = d[:3, :3]
    return _gstar_carrier(np.linalg.solve(A.T, d[3, :3])), _se2_from_ad(A)


# ---------------------------------------------------------------------------
@dataclass
class SamplePlan:
    seed: int = 0
    box: float = 0.35
    counts: dict = field(default_factory=dict)

    def count(self, key: str, default: int) -> int:
        return int(self.counts.get(key, default))


@dataclass
class Scenario:
    """All models of one scenario, assembled and invariant-checked."""

    name: str
    kind: str
    bialgebra: LieBialgebraData
    double_algebra: DoubleAlgebra
    dgm: DoubleGroupModel
    sub: SubgroupData
    P: PoissonManifoldModel
    sigma: ActionModel
    J_P: MomentumMapModel
    base: dict
    plan: SamplePlan
    hypotheses: dict
    classical: bool
    slice_fn: object
    gauge_guess: object
    project_closed_factory: object
    tol: ToleranceConfig = DEFAULT_TOL

    def rng(self, seed=None) -> np.random.Generator:
        return np.random.default_rng(self.plan.seed if seed is None else seed)

    @property
    def n(self) -> int:
        return self.bialgebra.dim

    # -- seeded samplers ----------------------------------------------------
    def sample_G(self, rng, box=None):
        return self.dgm.G.exp(rng.uniform(-(box or self.plan.box), box or self.plan.box, self.n))

    def sample_Gstar(self, rng, box=None):
        return self.dgm.Gstar.exp(rng.uniform(-(box or self.plan.box), box or self.plan.box, self.n))

    def sample_D(self, rng, box=None):
        return self.dgm.compose(self.sample_G(rng, box), self.sample_Gstar(rng, box))

    def sample_H(self, rng, box=None):
        return self.sub.H.exp(rng.uniform(-(box or self.plan.box), box or self.plan.box, self.sub.H.dim))

    def sample_P(self, rng, box=None):
        return rng.uniform(-(box or self.plan.box), box or self.plan.box, self.P.dim)

    # -- induction pipeline ---------------------------------------------------
    def check_model(self) -> ConstraintQuotientModel:
        space, sigma_check, J_check = build_check_space(self.dgm, self.sub,
                                                        self.sigma, self.J_P)
        model = ConstraintQuotientModel(
            space=space, sigma_check=sigma_check, J_check=J_check,
            sub=self.sub, dgm=self.dgm, slice_fn=self.slice_fn,
            gauge_guess=self.gauge_guess, tol=self.tol)
        if self.project_closed_factory is not None:
            model.project_closed = self.project_closed_factory(self)
        return model

    def sample_canonical(self, model: ConstraintQuotientModel, rng, box=None):
        x = (self.sample_P(rng, box), self.sample_D(rng, box))
        return model.canonical(x)


def _require(data: dict, key: str, where: str):
    if key not in data:
        raise ParseError(f"missing required block '{key}' in {where}")
    return data[key]


def _array(data, key, where):
    return np.asarray(_require(data, key, where), dtype=float)


def _validate_tables(bial: LieBialgebraData, dbl: DoubleAlgebra):
    for label, alg in (("g", bial.g), ("gstar", bial.gstar)):
        r = alg.antisymmetry_residual()
        if r != 0.0:
            idx = np.argwhere(alg.c + np.swapaxes(alg.c, 0, 1))[0]
            raise InvariantFailure("antisymmetry", f"table {label} at index {tuple(idx)}")
        r = alg.jacobi_residual()
        if r > 1e-12:
            raise InvariantFailure("jacobi", f"table {label}, residual {r:.3e}")
    r = bial.cocycle_residual()
    if r > 1e-12:
        raise InvariantFailure("cocycle", f"residual {r:.3e}")
    r = dbl.jacobi_residual()
    if r > 1e-12:
        raise InvariantFailure("double-jacobi", f"residual {r:.3e}")
    r = dbl.pairing_invariance_residual()
    if r > 1e-12:
        raise InvariantFailure("pairing-invariance", f"residual {r:.3e}")


def _validate_models(dgm: DoubleGroupModel, dbl: DoubleAlgebra):
    for label, model in (("G", dgm.G), ("Gstar", dgm.Gstar), ("D", dgm.D)):
        r = model.embedding_commutator_residual()
        if r > 1e-12:
            raise InvariantFailure("embedding-commutators",
                                   f"{label} residual {r:.3e}")
    rng = np.random.default_rng(12345)
    for _ in range(3):
        g = dgm.G.exp(rng.uniform(-0.3, 0.3, dgm.n))
        u = dgm.Gstar.exp(rng.uniform(-0.3, 0.3, dgm.n))
        d = dgm.compose(g, u)
        g2, u2 = dgm.factorize(d, "GU")
        err = max(float(np.max(np.abs(g - g2))), float(np.max(np.abs(u - u2))))
        if err > 1e-9:
            raise InvariantFailure("factorization-roundtrip", f"error {err:.3e}")


def load_scenario(path_or_name: str, tol: ToleranceConfig = DEFAULT_TOL) -> Scenario:
    path = SHIPPED.get(path_or_name, path_or_name)
    if not os.path.exists(path):
        raise ParseError(f"scenario file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario file is not valid JSON: {exc}") from exc

    where = os.path.basename(path)
    name = _require(data, "name", where)
    kind = _require(data, "kind", where)
    bial_block = _require(data, "bialgebra", where)
    dim = int(_require(bial_block, "dim", "bialgebra"))
    c = _array(bial_block, "c", "bialgebra")
    f = _array(bial_block, "f", "bialgebra")
    bial = LieBialgebraData(g=LieAlgebraData(dim, c), gstar=LieAlgebraData(dim, f))
    dbl = DoubleAlgebra(bial)
    _validate_tables(bial, dbl)

    emb = _require(data, "embeddings", where)
    basG = _array(emb, "G", "embeddings")
    basGs = _array(emb, "Gstar", "embeddings")
    basD = _array(emb, "D", "embeddings")
    subgroup = _require(data, "subgroup", where)
    space_block = _require(data, "space_P", where)
    base_block = _require(data, "base_points", where)
    plan_block = _require(data, "sample_plan", where)
    hypotheses = _require(data, "hypotheses", where)
    mode = _require(data, "factorization_mode", where)

    if kind == "iwasawa-sl2":
        builder = _build_iwasawa_sl2
    elif kind == "cotangent-semidirect":
        builder = _build_cotangent_semidirect
    else:
        raise ParseError(f"unknown scenario kind {kind!r}")

    scenario = builder(name, bial, dbl, basG, basGs, basD, subgroup,
                       space_block, base_block, hypotheses, mode, tol)
    scenario.plan = SamplePlan(seed=int(plan_block.get("seed", 0)),
                               box=float(plan_block.get("box", 0.35)),
                               counts=dict(plan_block.get("counts", {})))
    _validate_models(scenario.dgm, dbl)
    return scenario


# ---------------------------------------------------------------------------
def _build_iwasawa_sl2(name, bial, dbl, basG, basGs, basD, subgroup,
                       space_block, base_block, hypotheses, mode, tol):
    G = MatrixGroupModel(bial.g, basG, _mem_su2, name="SU(2)",
                         exp_hook=_exp_traceless_realified,
                         log_hook=_log_det1_realified)
    Gstar = MatrixGroupModel(bial.gstar, basGs, _mem_sb2, name="SB(2,C)",
                             exp_hook=_exp_traceless_realified,
                             log_hook=_log_det1_realified)
    Dm = MatrixGroupModel(dbl.algebra, basD, _mem_sl2c, name="SL(2,C)",
                          exp_hook=_exp_traceless_realified,
                          log_hook=_log_det1_realified)
    ident = lambda m: m
    dgm = DoubleGroupModel(G, Gstar, Dm, ident, ident,
                           factor_gu_closed=_factor_gu_sl2,
                           factor_ug_closed=_factor_ug_sl2,
                           factorization_mode=mode, tol=tol)

    i_mat = np.asarray(subgroup["i_mat"], dtype=float)
    hcirc = np.asarray(subgroup["hcirc_basis"], dtype=float)
    h_dim = i_mat.shape[1]
    h_basis = np.array([np.tensordot(i_mat[:, j], basG, axes=(0, 0))
                        for j in range(h_dim)])
    H = MatrixGroupModel(LieAlgebraData(h_dim, np.zeros((h_dim,) * 3)),
                         h_basis, _mem_torus, name="T",
                         exp_hook=_exp_traceless_realified,
                         log_hook=_log_det1_realified)

    def i_star(u):
        return np.array([2.0 * np.log(derealify(u)[0, 0].real)])

    def s_star(t):
        t = float(np.asarray(t, dtype=float).reshape(-1)[0])
        return realify(np.diag([np.exp(0.5 * t), np.exp(-0.5 * t)]))

    # sub-double of (H, H*): complex diagonal unimodular matrices
    hstar_basis = np.array([np.tensordot(row, basGs, axes=(0, 0))
                            for row in np.asarray(subgroup["hstar_in_gstar"], dtype=float)])
    Hstar_m = MatrixGroupModel(LieAlgebraData(h_dim, np.zeros((h_dim,) * 3)),
                               hstar_basis, _mem_sb_diag, name="A",
                               exp_hook=_exp_traceless_realified,
                               log_hook=_log_det1_realified)
    sub_bial = LieBialgebraData(g=LieAlgebraData(h_dim, np.zeros((h_dim,) * 3)),
                                gstar=LieAlgebraData(h_dim, np.zeros((h_dim,) * 3)))
    sub_dbl = DoubleAlgebra(sub_bial)
    DH = MatrixGroupModel(sub_dbl.algebra, np.concatenate([h_basis, hstar_basis]),
                          _mem_sl2_diag, name="TA",
                          exp_hook=_exp_traceless_realified,
                          log_hook=_log_det1_realified)
    sub_double = DoubleGroupModel(H, Hstar_m, DH, ident, ident,
                                  factor_gu_closed=_factor_gu_sl2,
                                  factor_ug_closed=_factor_ug_sl2,
                                  factorization_mode=mode, tol=tol)

    sub = SubgroupData(H=H, incl_H=ident, i_mat=i_mat,
                       dual=DualGroupModel.additive(h_dim, name="H*"),
                       i_star=i_star, s_star=s_star, hcirc_basis=hcirc,
                       h_structure_zero=True, sub_double=sub_double)

    P = constant_manifold(int(space_block["dim"]),
                          np.asarray(space_block["pi"], dtype=float), name="P")

    def torus_angle(h):
        return -2.0 * float(np.angle(derealify(h)[0, 0]))

    sigma = ActionModel(group=sub.H_poisson, space=P,
                        act=lambda h, p: np.array([p[0] + torus_angle(h), p[1]]),
                        side="left")
    J_P = MomentumMapModel(action=sigma, dual=sub.dual,
                           J=lambda p: np.array([p[1]]))

    def project_closed_factory(scn):
        def project(x):
            p, d = x
            u = scn.dgm.factorize(d, "GU")[1]
            return (np.array([p[0], scn.sub.i_star(u)[0]]), d)
        return project

    base = {
        "w": Gstar.exp(np.asarray(base_block["w"], dtype=float)),
        "v": np.asarray(base_block["v"], dtype=float),
        "u0": np.asarray(base_block["u0"], dtype=float),
    }
    return Scenario(
        name=name, kind="iwasawa-sl2", bialgebra=bial, double_algebra=dbl,
        dgm=dgm, sub=sub, P=P, sigma=sigma, J_P=J_P, base=base,
        plan=SamplePlan(), hypotheses=dict(hypotheses), classical=False,
        slice_fn=lambda x: np.array([x[0][0]]),
        gauge_guess=lambda x: np.array([-x[0][0]]),
        project_closed_factory=project_closed_factory, tol=tol)


def _build_cotangent_semidirect(name, bial, dbl, basG, basGs, basD, subgroup,
                                space_block, base_block, hypotheses, mode, tol):
    G = MatrixGroupModel(bial.g, basG, _mem_se2, name="SE(2)")
    Gstar = MatrixGroupModel(bial.gstar, basGs, _mem_gstar_additive, name="g*")
    Dm = MatrixGroupModel(dbl.algebra, basD, _mem_d_semidirect, name="T*G")
    dgm = DoubleGroupModel(G, Gstar, Dm, _embed_se2_in_d, lambda u: u,
                           factor_gu_closed=_factor_gu_semidirect,
                           factor_ug_closed=_factor_ug_semidirect,
                           factorization_mode=mode, tol=tol)

    i_mat = np.asarray(subgroup["i_mat"], dtype=float)
    hcirc = np.asarray(subgroup["hcirc_basis"], dtype=float)
    h_dim = i_mat.shape[1]
    h_basis = np.array([np.tensordot(i_mat[:, j], basG, axes=(0, 0))
                        for j in range(h_dim)])
    H = MatrixGroupModel(LieAlgebraData(h_dim, np.zeros((h_dim,) * 3)),
                         h_basis, _mem_translations, name="R^2")

    def i_star(u):
        return np.asarray(u, dtype=float)[3, 1:3].copy()

    def s_star(nu):
        nu = np.asarray(nu, dtype=float)
        return _gstar_carrier(np.array([0.0, nu[0], nu[1]]))

    # abelian sub-double of (H, H*): 5x5 unipotent carrier
    def _dh_basis():
        out = []
        for j in range(4):
            m = np.zeros((5, 5))
            m[4, j] = 1.0
            out.append(m)
        return np.array(out)

    def _mem_dh(m):
        m = np.asarray(m, dtype=float)
        return max(float(np.max(np.abs(m[:4, :4] - np.eye(4)))),
                   float(np.max(np.abs(m[:4, 4]))), abs(m[4, 4] - 1.0))

    def _mem_hstar(m):
        m = np.asarray(m, dtype=float)
        return max(float(np.max(np.abs(m[:2, :2] - np.eye(2)))),
                   float(np.max(np.abs(m[:2, 2]))), abs(m[2, 2] - 1.0))

    hstar_basis = np.array([[[0, 0, 0], [0, 0, 0], [1, 0, 0]],
                            [[0, 0, 0], [0, 0, 0], [0, 1, 0]]], dtype=float)
    Hstar_m = MatrixGroupModel(LieAlgebraData(2, np.zeros((2, 2, 2))),
                               hstar_basis, _mem_hstar, name="h*")
    sub_bial = LieBialgebraData(g=LieAlgebraData(2, np.zeros((2, 2, 2))),
                                gstar=LieAlgebraData(2, np.zeros((2, 2, 2))))
    DH = MatrixGroupModel(DoubleAlgebra(sub_bial).algebra, _dh_basis(),
                          _mem_dh, name="T*R^2")

    def embed_h_dh(h):
        out = np.eye(5)
        out[4, 0:2] = np.asarray(h, dtype=float)[:2, 2]
        return out

    def embed_hstar_dh(hs):
        out = np.eye(5)
        out[4, 2:4] = np.asarray(hs, dtype=float)[2, :2]
        return out

    def _h_carrier(t):
        out = np.eye(3)
        out[:2, 2] = t
        return out

    def _hstar_carrier(nu):
        out = np.eye(3)
        out[2, :2] = nu
        return out

    def factor_dh(d, order):
        v = np.asarray(d, dtype=float)[4, :4]
        h, hs = _h_carrier(v[:2]), _hstar_carrier(v[2:])
        return (h, hs) if order == "GU" else (hs, h)

    sub_double = DoubleGroupModel(H, Hstar_m, DH, embed_h_dh, embed_hstar_dh,
                                  factor_gu_closed=lambda d: factor_dh(d, "GU"),
                                  factor_ug_closed=lambda d: factor_dh(d, "UG"),
                                  factorization_mode=mode, tol=tol)

    sub = SubgroupData(H=H, incl_H=lambda h: h, i_mat=i_mat,
                       dual=DualGroupModel.additive(h_dim, name="H*"),
                       i_star=i_star, s_star=s_star, hcirc_basis=hcirc,
                       h_structure_zero=True, sub_double=sub_double)

    P = constant_manifold(int(space_block["dim"]),
                          np.asarray(space_block["pi"], dtype=float), name="P")
    sigma = ActionModel(
        group=sub.H_poisson, space=P,
        act=lambda h, y: np.concatenate([y[:2] + np.asarray(h, dtype=float)[:2, 2], y[2:]]),
        side="left")
    J_P = MomentumMapModel(action=sigma, dual=sub.dual, J=lambda y: y[2:].copy())

    def project_closed_factory(scn):
        def project(x):
            p, d = x
            u = scn.dgm.factorize(d, "GU")[1]
            return (np.concatenate([p[:2], scn.sub.i_star(u)]), d)
        return project

    base = {
        "w": Gstar.exp(np.asarray(base_block["w"], dtype=float)),
        "v": np.asarray(base_block["v"], dtype=float),
        "u0": np.asarray(base_block["u0"], dtype=float),
    }
    return Scenario(
        name=name, kind="cotangent-semidirect", bialgebra=bial,
        double_algebra=dbl, dgm=dgm, sub=sub, P=P, sigma=sigma, J_P=J_P,
        base=base, plan=SamplePlan(), hypotheses=dict(hypotheses),
        classical=True,
        slice_fn=lambda x: x[0][:2].copy(),
        gauge_guess=lambda x: -x[0][:2],
        project_closed_factory=project_closed_factory, tol=tol)
