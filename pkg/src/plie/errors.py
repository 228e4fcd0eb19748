"""Exception types shared across the toolkit."""


class PlieError(Exception):
    """Base class for all toolkit errors."""


class DimError(PlieError):
    """Operands have incompatible dimensions."""


class StencilOutOfDomain(PlieError):
    """A finite-difference stencil point left the map's domain."""


class NoConvergence(PlieError):
    """Newton iteration hit the iteration cap without meeting tolerance."""


class SingularJacobian(PlieError):
    """Jacobian lost row rank during a Newton solve."""


class LogDomainError(PlieError):
    """Group element outside the logarithm's convergence neighborhood."""


class NotInAlgebra(PlieError):
    """A matrix expected in the embedded algebra failed to project onto it."""


class MembershipError(PlieError):
    """A matrix failed a group membership residual check."""


class DegenerateColumn(PlieError):
    """Closed-form factorization hit a vanishing normalization."""


class InvariantViolation(PlieError):
    """A structural identity that should hold exactly drifted; indicates a
    convention bug rather than a numerical accident."""


class NotInvariant(PlieError):
    """A function assumed constant on orbits failed its invariance check."""


class NotDressingInvariant(PlieError):
    """A base point required to be dressing-invariant is not."""


class ParseError(PlieError):
    """Scenario file failed to parse or is missing a required block."""


class InvariantFailure(PlieError):
    """A scenario failed one of its load-time algebraic invariants."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"invariant '{invariant}' violated" + (f": {detail}" if detail else ""))


class RankUnstable(Warning):
    """Singular values fell within a decade of the rank cutoff."""
