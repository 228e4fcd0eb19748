"""Lie bialgebras, the double algebra, and factorizable double groups.

The double algebra d = g + g* carries the bracket

    [e_i, e_j]   = c^k_{ij} e_k
    [eps^i, eps^j] = f^{ij}_k eps^k
    [e_i, eps^j] = f^{jk}_i e_k - c^j_{ik} eps^k

which is the unique extension making the symmetric pairing
<X + xi, Y + eta> = xi(Y) + eta(X) invariant with g and g* isotropic.

Dressing conventions (fixed once, validated by the momentum residuals):
with GU(d) = (g, u) and UG(d) = (u1, g1) the two global factorizations,

    lambda_w(g)  = UG_2(g w^{-1})     left dressing of G* on G
    rho_w(g)     = GU_1(w^{-1} g)     right dressing of G* on G
    lambda'_k(u) = GU_2(u k^{-1})     left dressing of G on G*
    rho'_k(u)    = UG_1(k^{-1} u)     right dressing of G on G*

so that lambda(xi) = pi_G^sharp(xi^l) and rho(xi) = -pi_G^sharp(xi^r)
hold in chart coordinates, with pi_G = -(Pi_-)_{gg} and
pi_G* = +(Pi_-)_{g*g*}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimError, MembershipError
from .liecore import LieAlgebraData, MatrixGroupModel, _matrix_of
from .numerics import DEFAULT_TOL, ToleranceConfig, newton_solve

COCYCLE_TOL = 1e-12


@dataclass(frozen=True)
class LieBialgebraData:
    """A pair of structure tables (c on g, f on g*) of equal dimension."""

    g: LieAlgebraData
    gstar: LieAlgebraData

    def __post_init__(self):
        if self.g.dim != self.gstar.dim:
            raise DimError("g and g* must have the same dimension")

    @property
    def dim(self) -> int:
        return self.g.dim

    def cocycle_residual(self) -> float:
        """Residual of the 1-cocycle identity for delta(e_i)^{jk} = f^{jk}_i.

        delta([x,y]) = x.delta(y) - y.delta(x), the adjoint action extended
        to Lambda^2 g.
        """
        c = self.g.c
        f = self.gstar.c
        # delta as a map: d[i, p, q] = f^{pq}_i
        d = np.transpose(f, (2, 0, 1))
        lhs = np.einsum("ijm,mpq->ijpq", c, d)
        act = np.einsum("imp,jmq->ijpq", c, d) + np.einsum("imq,jpm->ijpq", c, d)
        rhs = act - np.swapaxes(act, 0, 1)
        return float(np.max(np.abs(lhs - rhs)))

    def validate(self):
        self.g.validate()
        self.gstar.validate()
        r = self.cocycle_residual()
        if r > COCYCLE_TOL:
            raise ValueError(f"cocycle compatibility fails, residual {r:.3e}")


def dual_bialgebra(b: LieBialgebraData) -> LieBialgebraData:
    """Swap the two constant tables; involutive."""
    return LieBialgebraData(g=b.gstar, gstar=b.g)


class DoubleAlgebra:
    """The Manin double d = g + g* with its bracket and symmetric pairing."""

    def __init__(self, bialgebra: LieBialgebraData):
        self.bialgebra = bialgebra
        n = bialgebra.dim
        self.n = n
        c = bialgebra.g.c
        f = bialgebra.gstar.c
        C = np.zeros((2 * n, 2 * n, 2 * n))
        C[:n, :n, :n] = c
        C[n:, n:, n:] = f
        # [e_i, eps^j] = f^{jk}_i e_k - c^j_{ik} eps^k
        mixed_g = np.einsum("jki->ijk", f)
        mixed_gs = -np.einsum("ikj->ijk", c)
        C[:n, n:, :n] = mixed_g
        C[:n, n:, n:] = mixed_gs
        C[n:, :n, :n] = -np.transpose(mixed_g, (1, 0, 2))
        C[n:, :n, n:] = -np.transpose(mixed_gs, (1, 0, 2))
        self.algebra = LieAlgebraData(dim=2 * n, c=C)
        self.pairing = np.block([[np.zeros((n, n)), np.eye(n)],
                                 [np.eye(n), np.zeros((n, n))]])

    def jacobi_residual(self) -> float:
        return self.algebra.jacobi_residual()

    def pairing_invariance_residual(self) -> float:
        """max |<[z,a], b> + <a, [z,b]>| over basis triples."""
        C = self.algebra.c
        P = self.pairing
        t = np.einsum("zak,kb->zab", C, P) + np.einsum("zbk,ak->zab", C, P)
        return float(np.max(np.abs(t)))

    def isotropy_residual(self) -> float:
        n = self.n
        return float(max(np.max(np.abs(self.pairing[:n, :n])),
                         np.max(np.abs(self.pairing[n:, n:]))))

    def validate(self):
        r = self.jacobi_residual()
        if r > COCYCLE_TOL:
            raise ValueError(f"double-algebra Jacobi fails, residual {r:.3e}")
        r = self.pairing_invariance_residual()
        if r > COCYCLE_TOL:
            raise ValueError(f"pairing is not ad-invariant, residual {r:.3e}")


def pi0_matrix(n: int) -> np.ndarray:
    """pi_0 as a matrix on d* = g* + g: pi_0(xi1+X1, xi2+X2) = xi1(X2) - xi2(X1)."""
    return np.block([[np.zeros((n, n)), np.eye(n)],
                     [-np.eye(n), np.zeros((n, n))]])


def pi0(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1 or a.size % 2:
        raise DimError("pi0 arguments must be equal-length even vectors")
    n = a.size // 2
    return float(a @ pi0_matrix(n) @ b)


class DoubleGroupModel:
    """A factorizable double D = G . G* with matrix carriers.

    ``embed_G`` / ``embed_Gstar`` map carrier matrices of the factors into
    D's carrier; ``factor_gu_closed`` / ``factor_ug_closed`` are optional
    scenario-supplied global factorizers returning factor-carrier matrices.
    Without them factorization falls back to a Newton solve in joint
    exp-chart coordinates (local only).
    """

    def __init__(self, G: MatrixGroupModel, Gstar: MatrixGroupModel,
                 D: MatrixGroupModel, embed_G, embed_Gstar,
                 factor_gu_closed=None, factor_ug_closed=None,
                 factorization_mode: str = "closed_form",
                 tol: ToleranceConfig = DEFAULT_TOL):
        if G.dim != Gstar.dim or D.dim != 2 * G.dim:
            raise DimError("double must satisfy dim D = 2 dim G = 2 dim G*")
        self.G = G
        self.Gstar = Gstar
        self.D = D
        self.embed_G = embed_G
        self.embed_Gstar = embed_Gstar
        self._gu = factor_gu_closed
        self._ug = factor_ug_closed
        self.factorization_mode = factorization_mode
        self.tol = tol
        self.n = G.dim

    # -- factorization -----------------------------------------------------
    def factorize(self, d, order: str):
        """GU returns (g, u) with embed(g) embed(u) = d; UG returns (u1, g1)."""
        d = _matrix_of(d)
        if self.D.membership(d) > 1e-6:
            raise MembershipError(f"matrix fails D membership ({self.D.name})")
        if order == "GU":
            if self._gu is not None and self.factorization_mode == "closed_form":
                return self._gu(d)
            return self._newton_factor(d, "GU")
        if order == "UG":
            if self._ug is not None and self.factorization_mode == "closed_form":
                return self._ug(d)
            return self._newton_factor(d, "UG")
        raise ValueError(f"order must be 'GU' or 'UG', got {order!r}")

    def _newton_factor(self, d, order):
        n = self.n

        def residual(x):
            a = self.G.exp(x[:n])
            b = self.Gstar.exp(x[n:])
            prod = (self.embed_G(a) @ self.embed_Gstar(b) if order == "GU"
                    else self.embed_Gstar(b) @ self.embed_G(a))
            return self.D.chart_coords(prod, d)

        x = newton_solve(residual, np.zeros(2 * n), self.tol)
        g = self.G.exp(x[:n])
        u = self.Gstar.exp(x[n:])
        return (g, u) if order == "GU" else (u, g)

    def compose(self, g, u) -> np.ndarray:
        """D-carrier matrix of the product embed(g) embed(u)."""
        return self.embed_G(_matrix_of(g)) @ self.embed_Gstar(_matrix_of(u))

    # -- dressing ----------------------------------------------------------
    def dress(self, actor, target, kind: str, side: str):
        """Global dressing by multiply-then-refactor, per the module table."""
        a = _matrix_of(actor)
        t = _matrix_of(target)
        ai = np.linalg.inv(a)
        if kind == "Gstar_on_G":
            if side == "left":
                prod = self.embed_G(t) @ self.embed_Gstar(ai)
                return self.factorize(prod, "UG")[1]
            if side == "right":
                prod = self.embed_Gstar(ai) @ self.embed_G(t)
                return self.factorize(prod, "GU")[0]
        elif kind == "G_on_Gstar":
            if side == "left":
                prod = self.embed_Gstar(t) @ self.embed_G(ai)
                return self.factorize(prod, "GU")[1]
            if side == "right":
                prod = self.embed_G(ai) @ self.embed_Gstar(t)
                return self.factorize(prod, "UG")[0]
        raise ValueError(f"unknown dressing kind {kind!r} / side {side!r}")

    # -- group law on pairs -------------------------------------------------
    def double_multiply(self, a, b, cross_check: bool = False):
        """(g, u) . (h, v) = (g rho_{u^{-1}}(h), lambda_{h^{-1}}(u) v).

        Both entries come from one GU factorization of u h.  With
        cross_check the result is compared against matrix product plus
        refactorization.
        """
        g, u = a
        h, v = b
        hbar, ubar = self.factorize(
            self.embed_Gstar(_matrix_of(u)) @ self.embed_G(_matrix_of(h)), "GU")
        out = (_matrix_of(g) @ hbar, ubar @ _matrix_of(v))
        if cross_check:
            prod = self.compose(g, u) @ self.compose(h, v)
            g2, u2 = self.factorize(prod, "GU")
            err = max(np.max(np.abs(out[0] - g2)), np.max(np.abs(out[1] - u2)))
            if err > 1e-8:
                raise MembershipError(f"double law cross-check failed ({err:.3e})")
        return out

    # -- bivectors ----------------------------------------------------------
    def pi_pm(self, d, sign: int) -> np.ndarray:
        """pi_{+/-}(d) = (1/2)(R_d pi_0 +/- L_d pi_0) in the exp-chart at d.

        In left-translated charts T_e L_d = id and T_e R_d = Ad(d^{-1}),
        so the pushforwards are closed-form.
        """
        d = _matrix_of(d)
        M0 = pi0_matrix(self.n)
        Adi = self.D.Ad(np.linalg.inv(d))
        return 0.5 * (Adi @ M0 @ Adi.T + float(sign) * M0)

    def pi_G(self, g) -> np.ndarray:
        """Multiplicative bivector of G at g, in the exp-chart at g."""
        n = self.n
        return -self.pi_pm(self.embed_G(_matrix_of(g)), -1)[:n, :n]

    def pi_Gstar(self, u) -> np.ndarray:
        """Canonical bivector of the dual group at u."""
        n = self.n
        return self.pi_pm(self.embed_Gstar(_matrix_of(u)), -1)[n:, n:]


@dataclass
class DoublePoint:
    """A point of D held as its GU factors with the product cached."""

    model: DoubleGroupModel
    g: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        self.g = np.asarray(self.g, dtype=float)
        self.u = np.asarray(self.u, dtype=float)
        self.matrix = self.model.compose(self.g, self.u)

    @classmethod
    def from_matrix(cls, model: DoubleGroupModel, d) -> "DoublePoint":
        g, u = model.factorize(d, "GU")
        return cls(model, g, u)

    def cache_residual(self) -> float:
        return float(np.max(np.abs(self.matrix - self.model.compose(self.g, self.u))))
