from weingarten.pde.elliptic import EllipticSolver, SolveReport, quadratic_constant, solve_elliptic
from weingarten.pde.exact import exact_solution
from weingarten.pde.fields import ScalarField2D
from weingarten.pde.hyperbolic import hyperbolic_energy, solve_hyperbolic
from weingarten.pde.operators import OperatorKind, apply_operator
from weingarten.pde.problem import NaturalPDEProblem, pde_residual

__all__ = [
    "EllipticSolver",
    "NaturalPDEProblem",
    "OperatorKind",
    "ScalarField2D",
    "SolveReport",
    "apply_operator",
    "exact_solution",
    "hyperbolic_energy",
    "pde_residual",
    "quadratic_constant",
    "solve_elliptic",
    "solve_hyperbolic",
]
