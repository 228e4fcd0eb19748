"""plie: numerically verified Poisson-Lie structures on matrix groups.

Doubles, dressing actions, momentum maps, leafwise reduction diagnostics,
and Poisson induction, with every identity exposed as a computable residual
on concrete matrix-group scenarios.
"""
from .double import (DoubleAlgebra, DoubleGroupModel, DoublePoint,
                     LieBialgebraData, dual_bialgebra, pi0, pi0_matrix)
from .errors import (DegenerateColumn, DimError, InvariantFailure,
                     InvariantViolation, LogDomainError, MembershipError,
                     NoConvergence, NotDressingInvariant, NotInAlgebra,
                     NotInvariant, ParseError, PlieError, RankUnstable,
                     SingularJacobian, StencilOutOfDomain)
from .liecore import (GroupPoint, LieAlgebraData, MatrixGroupModel, Ad, Coad,
                      bracket, invariant_one_form, matrix_exp, matrix_log)
from .momentum import (ActionModel, DualGroupModel, MomentumMapModel,
                       SubgroupData, canonical_left_action,
                       canonical_right_action, classical_limit_oracle,
                       equivariance_residual, J_l_via_dressing,
                       lemma32_residuals, momentum_residual, product_action,
                       right_to_left)
from .numerics import (DEFAULT_TOL, ToleranceConfig, differential,
                       gauss_newton_least_squares, newton_solve,
                       orthonormal_basis, rank_of, subspace_intersection)
from .poisson import (PoissonLieGroupModel, PoissonManifoldModel,
                      constant_manifold, infinitesimal_dressing,
                      jacobi_residual, linearization_delta, poisson_bracket,
                      multiplicativity_residual, poisson_action_residual,
                      poisson_map_residual, sharp)
from .induction import (ConstraintQuotientModel, build_check_space,
                        clean_intersection_report, example1_point_induction,
                        example2_orbit_induction, induced_bracket_function,
                        induced_momentum_model, induced_space_manifold,
                        prop42_residuals, subcharacteristic_basis)
from .scenarios import Scenario, load_scenario, realify, derealify
from .suites import SUITES, run_suite

__version__ = "0.1.0"
