"""Lie algebras by structure constants and matrix Lie groups with exp-charts.

Conventions used throughout the toolkit:

* algebra coordinates are with respect to a fixed ordered basis; the
  structure tensor c[i, j, k] is the coefficient of e_k in [e_i, e_j];
* every pointwise object (tangent vector, covector, bivector) at a group
  element g is expressed in the left-translated exp-chart centered at g,
  i.e. the chart x -> g * exp(sum_i x_i E_i).  In these charts the
  differential of left translation is the identity and the differential of
  right translation by h is Ad(h^{-1}).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DimError, LogDomainError, NotInAlgebra

JACOBI_TOL = 1e-12
EMBED_TOL = 1e-12
MEMBERSHIP_TOL = 1e-8


@dataclass(frozen=True)
class LieAlgebraData:
    """Structure constants c[i, j, k] of an n-dimensional real Lie algebra."""

    dim: int
    c: np.ndarray
    basis_labels: tuple = ()

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        if c.shape != (self.dim, self.dim, self.dim):
            raise DimError(f"structure tensor shape {c.shape} != {(self.dim,)*3}")
        object.__setattr__(self, "c", c)

    def antisymmetry_residual(self) -> float:
        return float(np.max(np.abs(self.c + np.swapaxes(self.c, 0, 1)))) if self.dim else 0.0

    def jacobi_residual(self) -> float:
        c = self.c
        # sum_m c[i,j,m] c[m,k,l] + cyclic in (i,j,k)
        t1 = np.einsum("ijm,mkl->ijkl", c, c)
        t2 = np.einsum("jkm,mil->ijkl", c, c)
        t3 = np.einsum("kim,mjl->ijkl", c, c)
        return float(np.max(np.abs(t1 + t2 + t3))) if self.dim else 0.0

    def validate(self):
        if self.antisymmetry_residual() != 0.0:
            raise ValueError("structure constants are not antisymmetric")
        r = self.jacobi_residual()
        if r > JACOBI_TOL:
            raise ValueError(f"Jacobi identity fails, residual {r:.3e}")

    def bracket(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise DimError("bracket operands must match the algebra dimension")
        return np.einsum("ijk,i,j->k", self.c, x, y)


def bracket(algebra: LieAlgebraData, x, y):
    return algebra.bracket(x, y)


def _truncated_exp(m: np.ndarray, order: int = 16) -> np.ndarray:
    out = np.eye(m.shape[0])
    term = np.eye(m.shape[0])
    for k in range(1, order + 1):
        term = term @ m / k
        out = out + term
    return out


def matrix_exp(m: np.ndarray) -> np.ndarray:
    """Scaling-and-squaring with a truncated series (no Pade)."""
    nrm = np.linalg.norm(m, ord=np.inf)
    s = max(0, int(np.ceil(np.log2(nrm))) + 1) if nrm > 0.5 else 0
    out = _truncated_exp(m / (2.0 ** s))
    for _ in range(s):
        out = out @ out
    return out


def matrix_log(g: np.ndarray) -> np.ndarray:
    """Principal logarithm via inverse scaling-and-squaring.

    Requires ||g - I|| < 0.9 in operator norm after square-rooting; the
    antipodal elements of the shipped compact groups fall outside and raise
    LogDomainError.
    """
    a = np.asarray(g, dtype=float)
    n = a.shape[0]
    s = 0
    while np.linalg.norm(a - np.eye(n), 2) > 0.35:
        if s >= 30:
            raise LogDomainError("element outside the log-convergence neighborhood")
        a = scipy.linalg.sqrtm(a)
        if np.iscomplexobj(a):
            if np.max(np.abs(a.imag)) > 1e-10:
                raise LogDomainError("principal square root left the real group")
            a = a.real
        s += 1
    x = a - np.eye(n)
    # Mercator series, order chosen for ||x|| <= 0.35
    term = np.eye(n)
    out = np.zeros_like(x)
    for k in range(1, 40):
        term = term @ x
        out = out + ((-1) ** (k + 1)) * term / k
        if np.linalg.norm(term, ord=np.inf) / k < 1e-17:
            break
    return out * (2.0 ** s)


class MatrixGroupModel:
    """A matrix realization of a Lie group with exp-charts.

    Elements are m x m real matrices (complex groups enter through a real
    realization of doubled size).  ``algebra_embedding`` maps the abstract
    basis to matrices; commutators must reproduce the structure constants.

    ``exp_hook`` / ``log_hook`` let scenarios install exact closed forms
    (e.g. 2x2 complex formulas) on the hot path; the generic series is the
    default and the reference.
    """

    def __init__(self, algebra: LieAlgebraData, algebra_embedding, membership_residual,
                 name: str = "", exp_hook=None, log_hook=None):
        self.algebra = algebra
        self.basis = np.asarray(algebra_embedding, dtype=float)
        if self.basis.shape[0] != algebra.dim:
            raise DimError("embedding basis count must match the algebra dimension")
        self.embed_dim = self.basis.shape[1]
        self.membership_residual = membership_residual
        self.name = name
        self._exp_hook = exp_hook
        self._log_hook = log_hook
        flat = self.basis.reshape(algebra.dim, -1).T
        self._flat = flat
        self._pinv = np.linalg.pinv(flat)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.embed_dim)

    # -- algebra embedding ------------------------------------------------
    def embed_algebra(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise DimError("coordinate vector has wrong dimension")
        return np.tensordot(x, self.basis, axes=(0, 0))

    def project_algebra(self, m: np.ndarray, tol: float = MEMBERSHIP_TOL):
        v = m.reshape(-1)
        x = self._pinv @ v
        res = np.linalg.norm(self._flat @ x - v)
        if res > tol:
            raise NotInAlgebra(f"projection residual {res:.3e} in {self.name}")
        return x

    def embedding_commutator_residual(self) -> float:
        worst = 0.0
        for i in range(self.dim):
            for j in range(self.dim):
                comm = self.basis[i] @ self.basis[j] - self.basis[j] @ self.basis[i]
                want = self.embed_algebra(self.algebra.c[i, j])
                worst = max(worst, float(np.max(np.abs(comm - want))))
        return worst

    # -- group operations -------------------------------------------------
    def exp(self, x) -> np.ndarray:
        m = self.embed_algebra(x)
        if self._exp_hook is not None:
            return self._exp_hook(m)
        return matrix_exp(m)

    def log(self, g) -> np.ndarray:
        g = _matrix_of(g)
        if self._log_hook is not None:
            m = self._log_hook(g)
        else:
            m = matrix_log(g)
        try:
            return self.project_algebra(m)
        except NotInAlgebra as exc:
            raise LogDomainError(str(exc)) from exc

    def inverse(self, g) -> np.ndarray:
        return np.linalg.inv(_matrix_of(g))

    def chart_shift(self, g, v) -> np.ndarray:
        """Point reached from g by exp-chart coordinates v."""
        return _matrix_of(g) @ self.exp(v)

    def chart_coords(self, g, target) -> np.ndarray:
        """Coordinates of ``target`` in the exp-chart centered at g."""
        return self.log(np.linalg.inv(_matrix_of(g)) @ _matrix_of(target))

    def Ad(self, g) -> np.ndarray:
        """Adjoint matrix of g on algebra coordinates."""
        g = _matrix_of(g)
        gi = np.linalg.inv(g)
        conj = np.einsum("ab,jbc,cd->jad", g, self.basis, gi)
        flat = conj.reshape(self.dim, -1).T
        out = self._pinv @ flat
        res = float(np.max(np.abs(self._flat @ out - flat)))
        if res > MEMBERSHIP_TOL:
            raise NotInAlgebra(f"adjoint left the algebra ({res:.3e}) in {self.name}")
        return out

    def Coad(self, g) -> np.ndarray:
        """Coadjoint matrix: <Coad(g) xi, X> = <xi, Ad(g^{-1}) X>."""
        return self.Ad(np.linalg.inv(_matrix_of(g))).T

    def membership(self, g) -> float:
        return float(self.membership_residual(_matrix_of(g)))

    def point(self, matrix) -> "GroupPoint":
        return GroupPoint(self, np.asarray(matrix, dtype=float))


@dataclass
class GroupPoint:
    group: MatrixGroupModel
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=float)

    def __matmul__(self, other: "GroupPoint") -> "GroupPoint":
        return GroupPoint(self.group, self.matrix @ _matrix_of(other))

    def inv(self) -> "GroupPoint":
        return GroupPoint(self.group, np.linalg.inv(self.matrix))

    def membership(self) -> float:
        return self.group.membership(self.matrix)


def _matrix_of(g) -> np.ndarray:
    return g.matrix if isinstance(g, GroupPoint) else np.asarray(g, dtype=float)


def Ad(group: MatrixGroupModel, g, x):
    return group.Ad(g) @ np.asarray(x, dtype=float)


def Coad(group: MatrixGroupModel, g, xi):
    return group.Coad(g) @ np.asarray(xi, dtype=float)


def invariant_one_form(group: MatrixGroupModel, x, side: str, u):
    """Coordinates at u (in the exp-chart at u) of the invariant 1-form whose
    value at the identity is the covector x.

    In left-translated exp-charts the left-invariant form is constant and
    the right-invariant form picks up Ad(u)^T.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (group.dim,):
        raise DimError("covector has wrong dimension")
    if side == "left":
        return x.copy()
    if side == "right":
        return group.Ad(u).T @ x
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
