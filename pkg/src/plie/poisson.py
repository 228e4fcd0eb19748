"""Pointwise Poisson geometry in chart coordinates.

A manifold here is anything with a dimension, a chart shift, chart
coordinates, and a bivector evaluator.  Group manifolds use the left
exp-charts of ``liecore``; in those charts T L_g = id and T R_h = Ad(h^{-1}),
which turns multiplicativity and the bivector pushforwards into closed
matrix expressions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvariantViolation
from .liecore import MatrixGroupModel, _matrix_of
from .numerics import DEFAULT_TOL, ToleranceConfig

ANTISYM_TOL = 1e-12


@dataclass
class PoissonManifoldModel:
    """Chart-based Poisson manifold: points are opaque, charts are local."""

    dim: int
    bivector: Callable  # point -> antisymmetric dim x dim matrix
    shift: Callable     # (point, coords) -> point
    coords: Callable    # (base point, point) -> coords of point in chart at base
    name: str = ""

    def pi(self, x) -> np.ndarray:
        m = np.asarray(self.bivector(x), dtype=float)
        skew = float(np.max(np.abs(m + m.T)))
        if skew > ANTISYM_TOL:
            raise InvariantViolation(f"bivector not antisymmetric ({skew:.3e}) on {self.name}")
        return m


@dataclass
class PoissonLieGroupModel:
    """A matrix group together with a multiplicative bivector in exp-charts."""

    group: MatrixGroupModel
    bivector: Callable  # group matrix -> dim x dim matrix in the chart at g
    bialgebra: object = None
    name: str = ""

    @property
    def dim(self) -> int:
        return self.group.dim

    def pi(self, g) -> np.ndarray:
        m = np.asarray(self.bivector(_matrix_of(g)), dtype=float)
        skew = float(np.max(np.abs(m + m.T)))
        if skew > ANTISYM_TOL:
            raise InvariantViolation(f"bivector not antisymmetric ({skew:.3e}) on {self.name}")
        return m

    def manifold(self) -> PoissonManifoldModel:
        return PoissonManifoldModel(
            dim=self.group.dim,
            bivector=self.bivector,
            shift=self.group.chart_shift,
            coords=self.group.chart_coords,
            name=self.name or self.group.name,
        )


def constant_manifold(dim: int, pi_matrix, name: str = "") -> PoissonManifoldModel:
    """R^dim with a constant bivector; points are coordinate vectors."""
    pi_matrix = np.asarray(pi_matrix, dtype=float)
    return PoissonManifoldModel(
        dim=dim,
        bivector=lambda x: pi_matrix,
        shift=lambda x, v: np.asarray(x, dtype=float) + np.asarray(v, dtype=float),
        coords=lambda base, x: np.asarray(x, dtype=float) - np.asarray(base, dtype=float),
        name=name,
    )


def sharp(M: PoissonManifoldModel, alpha, x):
    return M.pi(x) @ np.asarray(alpha, dtype=float)


def chart_gradient(M, F, x, cfg: ToleranceConfig = DEFAULT_TOL):
    """Central-difference differential of F at x in the chart at x."""
    h = cfg.fd_step
    out = np.zeros(M.dim)
    for j in range(M.dim):
        e = np.zeros(M.dim)
        e[j] = h
        out[j] = (F(M.shift(x, e)) - F(M.shift(x, -e))) / (2.0 * h)
    return out


def chart_jacobian(phi, src, tgt, x, cfg: ToleranceConfig = DEFAULT_TOL):
    """Tangent map of phi: src -> tgt at x, chart at x to chart at phi(x)."""
    h = cfg.fd_step
    y = phi(x)
    cols = []
    for j in range(src.dim):
        e = np.zeros(src.dim)
        e[j] = h
        a = np.asarray(tgt.coords(y, phi(src.shift(x, e))), dtype=float)
        b = np.asarray(tgt.coords(y, phi(src.shift(x, -e))), dtype=float)
        cols.append((a - b) / (2.0 * h))
    return np.array(cols).T


def poisson_bracket(M: PoissonManifoldModel, F, G, x, cfg: ToleranceConfig = DEFAULT_TOL):
    dF = chart_gradient(M, F, x, cfg)
    dG = chart_gradient(M, G, x, cfg)
    return float(dF @ M.pi(x) @ dG)


def jacobi_residual(M: PoissonManifoldModel, x, covectors, cfg: ToleranceConfig = DEFAULT_TOL):
    """|cyclic sum of {F,{G,H}}(x)| for chart-affine F, G, H with the given
    differentials, normalized by the covector norms."""
    a, b, c = [np.asarray(v, dtype=float) for v in covectors]

    def affine(alpha):
        return lambda y: float(alpha @ np.asarray(M.coords(x, y), dtype=float))

    F, G, H = affine(a), affine(b), affine(c)

    def nested(f1, f2, f3):
        inner = lambda y: poisson_bracket(M, f2, f3, y, cfg)
        return poisson_bracket(M, f1, inner, x, cfg)

    total = nested(F, G, H) + nested(G, H, F) + nested(H, F, G)
    scale = np.linalg.norm(a) * np.linalg.norm(b) * np.linalg.norm(c)
    return abs(total) / max(scale, 1e-300)


def poisson_map_residual(phi, src: PoissonManifoldModel, tgt: PoissonManifoldModel,
                         x, cfg: ToleranceConfig = DEFAULT_TOL):
    J = chart_jacobian(phi, src, tgt, x, cfg)
    push = J @ src.pi(x) @ J.T
    return float(np.max(np.abs(push - tgt.pi(phi(x)))))


def multiplicativity_residual(Gm: PoissonLieGroupModel, g, h):
    """|pi(gh) - TL_g pi(h) TL_g^T - TR_h pi(g) TR_h^T| in the chart at gh.

    Closed form in left exp-charts: TL_g = id, TR_h = Ad(h^{-1}).
    """
    g = _matrix_of(g)
    h = _matrix_of(h)
    A = Gm.group.Ad(np.linalg.inv(h))
    return float(np.max(np.abs(Gm.pi(g @ h) - Gm.pi(h) - A @ Gm.pi(g) @ A.T)))


def infinitesimal_dressing(Gm: PoissonLieGroupModel, xi, side: str, g):
    """lambda(xi) = pi^sharp(xi^l), rho(xi) = -pi^sharp(xi^r) at g."""
    xi = np.asarray(xi, dtype=float)
    if side == "left":
        return Gm.pi(g) @ xi
    if side == "right":
        return -Gm.pi(g) @ (Gm.group.Ad(g).T @ xi)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def linearization_delta(Gm: PoissonLieGroupModel, X, cfg: ToleranceConfig = DEFAULT_TOL):
    """delta(X) = d/dt|0 of the right-translated bivector along exp(tX).

    Right translation to the identity chart is Ad(g) in left exp-charts.
    Returned as an antisymmetric matrix D with D[j,k] the eps_j^eps_k
    component; for a coboundary-compatible bialgebra D matches f^{jk}_i X^i.
    """
    X = np.asarray(X, dtype=float)
    h = cfg.fd_step

    def translated(t):
        g = Gm.group.exp(t * X)
        A = Gm.group.Ad(g)
        return A @ Gm.pi(g) @ A.T

    return (translated(h) - translated(-h)) / (2.0 * h)


def poisson_action_residual(act, Gm: PoissonLieGroupModel, M: PoissonManifoldModel,
                            X, F, H, x, cfg: ToleranceConfig = DEFAULT_TOL):
    """Residual of the multiplicative-action criterion at x:

        sigma(X){F,H} - {sigma(X)F, H} - {F, sigma(X)H} - (sigma^sigma)delta(X)(dF,dH)

    where act(g, y) evaluates the action and the wedge pairing is
    <a^b, alpha^beta> = alpha(a)beta(b) - alpha(b)beta(a).
    """
    X = np.asarray(X, dtype=float)
    h = cfg.fd_step

    def flow_derivative(fun, y, Y):
        gp = Gm.group.exp(h * Y)
        gm = Gm.group.exp(-h * Y)
        return (fun(act(gp, y)) - fun(act(gm, y))) / (2.0 * h)

    bracketFH = lambda y: poisson_bracket(M, F, H, y, cfg)
    term1 = flow_derivative(bracketFH, x, X)
    sXF = lambda y: flow_derivative(F, y, X)
    sXH = lambda y: flow_derivative(H, y, X)
    term2 = poisson_bracket(M, sXF, H, x, cfg)
    term3 = poisson_bracket(M, F, sXH, x, cfg)

    D = linearization_delta(Gm, X, cfg)
    n = Gm.dim
    basis = np.eye(n)
    sF = np.array([flow_derivative(F, x, basis[i]) for i in range(n)])
    sH = np.array([flow_derivative(H, x, basis[i]) for i in range(n)])
    term4 = float(sF @ D @ sH)

    return abs(term1 - term2 - term3 - term4) / max(1.0, float(np.linalg.norm(X)))
