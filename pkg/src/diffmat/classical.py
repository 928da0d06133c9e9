"""
First-order differentiation matrices for the power and cutoff families.

PowerBasis:  v_ki = x_k^(sigma beta) P_i(t_k)
CutoffBasis: v_ki = x_k^(sigma eta) (b^sigma - x_k^sigma)^alpha P_i(t_k)

u_ki is the classical derivative of the same function at x_k, and
D1 = U V^-1 with V^-1 in closed form.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from exceptions import ParameterError
from interpolation import MuntzNodeSet
from jacobi import gamma_n, jacobi_table

DenseMatrix = np.ndarray


class BasisFamily(Enum):
    POWER = 'power'
    CUTOFF = 'cutoff'


def _inverse(ns: MuntzNodeSet, prefactor: np.ndarray, poly: np.ndarray) -> DenseMatrix:
    p = ns.params
    norms = p.scale * np.array([gamma_n(k, p.jac) for k in range(ns.N + 1)])
    return poly * (ns.rule.weights / prefactor)[None, :] / norms[:, None]


def first_order_dm(family: BasisFamily, ns: MuntzNodeSet) -> DenseMatrix:
    """
    D1 mapping nodal values to nodal first derivatives of the family's interpolant.

    Raises:
        ParameterError: For an unknown family
    """
    p = ns.params
    x, t = ns.nodes, ns.reference_nodes
    s = p.sigma
    i = np.arange(ns.N + 1, dtype=float)
    poly = jacobi_table(ns.N, p.jac, t)

    if family is BasisFamily.POWER:
        prefactor = x ** (s * p.beta)
        raised = jacobi_table(ns.N, p.jac.shifted(1.0, -1.0), t).T
        u = s * (i + p.beta)[None, :] * (x ** (s * p.beta - 1.0))[:, None] * raised
    elif family is BasisFamily.CUTOFF:
        cutoff = ns.cutoff
        prefactor = x ** (s * p.eta) * cutoff ** p.alpha
        lowered = jacobi_table(ns.N, p.jac.shifted(-1.0, 1.0), t).T
        first = (s * p.eta * x ** (s * p.eta - 1.0) * cutoff ** p.alpha)[:, None] * poly.T
        second = (s * x ** (s * (p.eta + 1.0) - 1.0) * cutoff ** (p.alpha - 1.0))[:, None] \
            * (i + p.alpha)[None, :] * lowered
        u = first - second
    else:
        raise ParameterError(f"unknown basis family {family!r}")
    return u @ _inverse(ns, prefactor, poly)


def dm_power(D: DenseMatrix, n: int) -> DenseMatrix:
    """
    n-fold product D D ... D, folded as D @ (D @ (...)).

    Raises:
        ParameterError: If D is not square or n < 1
    """
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise ParameterError(f"dm_power needs a square matrix, got shape {D.shape}")
    if n < 1:
        raise ParameterError(f"power must be >= 1, got {n}")
    result = D
    for _ in range(n - 1):
        result = D @ result
    return result
