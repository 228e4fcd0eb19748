"""Deterministic numerical kernels: finite differences, Gauss-Newton, subspaces.

Everything here is pure; seeded generators are owned by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimError, NoConvergence, SingularJacobian, StencilOutOfDomain

RANK_CUTOFF = 1e-9


@dataclass(frozen=True)
class ToleranceConfig:
    fd_step: float = 1e-5
    newton_tol: float = 1e-12
    newton_max_iter: int = 50
    residual_pass: float = 1e-6
    seed: int = 0
    richardson: bool = False

    def __post_init__(self):
        if self.fd_step <= 0:
            raise ValueError("fd_step must be positive")
        if self.newton_tol <= 0:
            raise ValueError("newton_tol must be positive")
        if self.newton_max_iter < 1:
            raise ValueError("newton_max_iter must be at least 1")


DEFAULT_TOL = ToleranceConfig()


def differential(fun, x, cfg: ToleranceConfig = DEFAULT_TOL, step: float | None = None):
    """Central-difference Jacobian of ``fun`` at ``x``.

    Entry (i, j) is (fun_i(x + h e_j) - fun_i(x - h e_j)) / 2h.  With
    cfg.richardson a second evaluation at step h/2 is combined for one
    level of Richardson extrapolation.
    """
    x = np.asarray(x, dtype=float)
    h = cfg.fd_step if step is None else step

    def jac(hh):
        cols = []
        for j in range(x.size):
            e = np.zeros_like(x)
            e[j] = hh
            try:
                fp = np.asarray(fun(x + e), dtype=float)
                fm = np.asarray(fun(x - e), dtype=float)
            except Exception as exc:  # noqa: BLE001 - map evaluation failure
                raise StencilOutOfDomain(
                    f"map evaluation failed at stencil offset {hh} in direction {j}: {exc}"
                ) from exc
            cols.append((fp - fm) / (2.0 * hh))
        return np.array(cols).T

    J = jac(h)
    if cfg.richardson:
        J2 = jac(h / 2.0)
        J = (4.0 * J2 - J) / 3.0
    return J


def newton_solve(residual, guess, cfg: ToleranceConfig = DEFAULT_TOL):
    """Damped Gauss-Newton with pseudoinverse step.

    Solves residual(x) = 0 for residual: R^n -> R^m with m <= n (level-set
    retraction); returns the first iterate with max-norm residual below
    cfg.newton_tol.  The result is re-checked post hoc.
    """
    x = np.asarray(guess, dtype=float).copy()
    r = np.asarray(residual(x), dtype=float)
    if r.ndim == 0:
        raise DimError("residual must return a vector")
    for _ in range(cfg.newton_max_iter):
        if np.max(np.abs(r)) < cfg.newton_tol:
            return x
        J = differential(residual, x, cfg)
        sv = np.linalg.svd(J, compute_uv=False)
        if sv.size == 0 or sv[min(J.shape) - 1] < RANK_CUTOFF * max(1.0, sv[0]):
            raise SingularJacobian(f"rank-deficient Jacobian, singular values {sv}")
        step = np.linalg.pinv(J, rcond=RANK_CUTOFF) @ r
        # damped line search on the residual norm
        lam = 1.0
        base = np.linalg.norm(r)
        for _ in range(12):
            xn = x - lam * step
            rn = np.asarray(residual(xn), dtype=float)
            if np.linalg.norm(rn) < base:
                break
            lam *= 0.5
        else:
            raise NoConvergence("damping failed to reduce the residual")
        x, r = xn, rn
    if np.max(np.abs(r)) < cfg.newton_tol:
        return x
    raise NoConvergence(
        f"residual {np.max(np.abs(r)):.3e} after {cfg.newton_max_iter} iterations"
    )


def gauss_newton_least_squares(residual, guess, cfg: ToleranceConfig = DEFAULT_TOL):
    """Gauss-Newton that tolerates overdetermined / rank-deficient systems.

    Returns (x, final_max_residual) instead of raising; used for orbit
    membership tests where failure to reach zero is an answer, not an error.
    """
    x = np.asarray(guess, dtype=float).copy()
    r = np.asarray(residual(x), dtype=float)
    for _ in range(cfg.newton_max_iter):
        if np.max(np.abs(r)) < cfg.newton_tol:
            break
        J = differential(residual, x, cfg)
        step = np.linalg.pinv(J, rcond=RANK_CUTOFF) @ r
        lam = 1.0
        base = np.linalg.norm(r)
        improved = False
        for _ in range(12):
            xn = x - lam * step
            rn = np.asarray(residual(xn), dtype=float)
            if np.linalg.norm(rn) < base:
                improved = True
                break
            lam *= 0.5
        if not improved:
            break
        x, r = xn, rn
    return x, float(np.max(np.abs(r)))


def orthonormal_basis(vectors, cutoff: float = RANK_CUTOFF):
    """Orthonormal basis of the span of the given vectors (rows or list)."""
    V = np.atleast_2d(np.asarray(vectors, dtype=float))
    if V.size == 0:
        return np.zeros((0, 0))
    u, s, vt = np.linalg.svd(V, full_matrices=False)
    rank = int(np.sum(s > cutoff * max(1.0, s[0] if s.size else 1.0)))
    return vt[:rank]


def subspace_intersection(A, B, cutoff: float = RANK_CUTOFF):
    """Orthonormal basis of span(A) ∩ span(B).

    A and B are lists (or row-stacks) of vectors of equal ambient dimension.
    Empty intersection yields an empty list of rows.
    """
    Qa = orthonormal_basis(A, cutoff)
    Qb = orthonormal_basis(B, cutoff)
    if Qa.size == 0 or Qb.size == 0:
        amb = Qa.shape[1] if Qa.size else (Qb.shape[1] if Qb.size else 0)
        return np.zeros((0, amb))
    if Qa.shape[1] != Qb.shape[1]:
        raise DimError("ambient dimensions differ")
    # x in both spans iff x = Qa^T a = Qb^T b; null space of [Qa^T | -Qb^T]
    M = np.hstack([Qa.T, -Qb.T])
    u, s, vt = np.linalg.svd(M)
    null_mask = np.zeros(vt.shape[0], dtype=bool)
    null_mask[: s.size] = s <= cutoff * max(1.0, s[0])
    null_mask[s.size:] = True
    null = vt[null_mask]
    if null.size == 0:
        return np.zeros((0, Qa.shape[1]))
    vecs = null[:, : Qa.shape[0]] @ Qa
    return orthonormal_basis(vecs, cutoff)


def rank_of(vectors, cutoff: float = RANK_CUTOFF):
    return orthonormal_basis(vectors, cutoff).shape[0]
