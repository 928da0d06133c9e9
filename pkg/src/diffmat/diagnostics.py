"""
Condition-number diagnostics.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from exceptions import ParameterError

logger = logging.getLogger(__name__)

SVD_LIMIT = 201


@dataclass
class ConditionReport:
    """2-norm condition number (or a 1-norm estimate for large matrices)."""

    cond: float
    singular: bool
    method: str

    def to_dict(self):
        return {'cond': self.cond, 'singular': self.singular, 'method': self.method}


def condition_report(M: np.ndarray) -> ConditionReport:
    """
    Condition number of a square finite matrix.

    Full SVD up to size 201; beyond that the LAPACK 1-norm estimate.

    Raises:
        ParameterError: If M is not square or has non-finite entries
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParameterError(f"condition number needs a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ParameterError("condition number needs finite entries")

    eps = np.finfo(float).eps
    if M.shape[0] <= SVD_LIMIT:
        singular_values = linalg.svd(M, compute_uv=False)
        smax, smin = singular_values[0], singular_values[-1]
        if smin <= eps * smax * M.shape[0]:
            logger.warning("matrix of size %d is singular to working precision", M.shape[0])
            return ConditionReport(float('inf'), True, 'svd')
        return ConditionReport(float(smax / smin), False, 'svd')

    lu, _ = linalg.lu_factor(M)
    rcond, _ = linalg.lapack.dgecon(lu, np.linalg.norm(M, 1), norm='1')
    if rcond <= eps:
        return ConditionReport(float('inf'), True, 'gecon')
    return ConditionReport(float(1.0 / rcond), False, 'gecon')


def condition_number(M: np.ndarray) -> float:
    """Condition number; +inf when M is singular to working precision."""
    return condition_report(M).cond
