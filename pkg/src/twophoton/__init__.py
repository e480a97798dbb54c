"""Two-photon Lie bialgebras, their quantum deformations and eigenstates.

Exact (rational and polynomial) computations for the six-generator
two-photon algebra: structure constants, the fifteen-parameter coboundary
bialgebras, truncated boson representations of the deformed algebras,
Hopf-algebra checks on tensor powers and power-series eigenfunctions.
"""

from .algebra import BASIS, LieElement, TensorElement, bracket, jacobi_residual, wedge
from .bialgebra import (BialgebraParams, build_r, classification_residuals, cocommutator,
                        family)
from .eigenstates import EigenProblem, matrix_residual, ode_from_problem, solve_series
from .errors import ConstraintError, DomainError, SingularPointError, VerificationError
from .fockrep import TruncRep, check_relations, make_rep
from .quantum import (CoproductTable, RMatrixSpec, coassoc_check, hom_check, intertwine_check,
                      qybe_check, semiclassical_check)
from .scalars import Poly

__version__ = "0.1.0"
