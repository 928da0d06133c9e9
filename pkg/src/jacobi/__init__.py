"""
Jacobi polynomial substrate: evaluation, Gauss rules and constants.
"""

from .polynomials import (
    JacobiParams,
    eval_jacobi,
    gamma_n,
    gamma_ratio,
    jacobi_derivative,
    jacobi_explicit_sum,
    jacobi_table,
    jacobi_weight_mass,
)
from .gauss import GaussRule, gauss_jacobi

__all__ = [
    'JacobiParams',
    'GaussRule',
    'eval_jacobi',
    'gauss_jacobi',
    'gamma_n',
    'gamma_ratio',
    'jacobi_derivative',
    'jacobi_explicit_sum',
    'jacobi_table',
    'jacobi_weight_mass',
]
