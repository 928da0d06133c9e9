"""
Differentiation matrices and their diagnostics.
"""

from .fractional import DenseMatrix, ek_dm_direct, ek_dm_stable, ek_u_matrix, v_inverse_closed, vandermonde
from .classical import BasisFamily, dm_power, first_order_dm
from .diagnostics import ConditionReport, condition_number, condition_report

__all__ = [
    'BasisFamily',
    'ConditionReport',
    'DenseMatrix',
    'condition_number',
    'condition_report',
    'dm_power',
    'ek_dm_direct',
    'ek_dm_stable',
    'ek_u_matrix',
    'first_order_dm',
    'v_inverse_closed',
    'vandermonde',
]
