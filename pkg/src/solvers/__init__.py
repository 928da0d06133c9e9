"""
Collocation solvers: linear and nonlinear FDEs, fractional PDEs and Burgers' equation.
"""

from .base import (
    BurgersProblem,
    LinearFdeProblem,
    NonlinearFdeProblem,
    PdeProblem,
    SolverReport,
    as_function,
    check_initial_exponent,
)
from .newton import NewtonResult, fd_jacobian, newton_solve
from .fde import (
    CauchyEulerCoefficients,
    compare_reductions,
    dense_profile,
    linear_system,
    solve_cauchy_euler,
    solve_linear_fde,
    solve_nonlinear_fde,
    trial_nodeset,
)
from .pde import solve_pde_mol
from .burgers import solve_burgers

__all__ = [
    'BurgersProblem',
    'CauchyEulerCoefficients',
    'LinearFdeProblem',
    'NewtonResult',
    'NonlinearFdeProblem',
    'PdeProblem',
    'SolverReport',
    'as_function',
    'check_initial_exponent',
    'compare_reductions',
    'dense_profile',
    'fd_jacobian',
    'linear_system',
    'newton_solve',
    'solve_burgers',
    'solve_cauchy_euler',
    'solve_linear_fde',
    'solve_nonlinear_fde',
    'solve_pde_mol',
    'trial_nodeset',
]
