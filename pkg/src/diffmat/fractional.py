"""
Erdelyi-Kober fractional differentiation matrices.

Left matrices act on the first-kind interpolant (NJMI-1), right matrices on
the second-kind one (NJMI-2).  Two constructions are provided:

* stable: D = U V^-1 with the closed-form inverse of the generalized
  Vandermonde matrix and log-gamma factors;
* direct: the entrywise sum d_si = w(x_i)^-1 sum_j a_j^i G_j J~_j(x_s) with the
  Gamma functions evaluated as written.  Its raw Gamma products leave the
  float64 range near N = 97, so it serves as the comparison baseline.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy import special

from exceptions import GammaOverflowError, ParameterError, PreconditionError
from interpolation import MuntzNodeSet
from jacobi import gamma_n, gamma_ratio, jacobi_table
from muntz import Side
from quadrature import MuntzBasisParams

logger = logging.getLogger(__name__)

GAMMA_LIMIT = 1e300
OVERFLOW_POLICIES = ('raise', 'propagate')

DenseMatrix = np.ndarray


def _order_params(ns: MuntzNodeSet, mu: float) -> MuntzBasisParams:
    if not mu > 0:
        raise ParameterError(f"differentiation order must be > 0, got {mu}")
    return ns.params.with_changes(mu=float(mu))


def _check_shift(side: Side, p: MuntzBasisParams, mu: float) -> None:
    if side is Side.LEFT and not p.beta - mu > -1:
        raise PreconditionError(f"beta - mu > -1 violated: {p.beta} - {mu} = {p.beta - mu}")
    if side is Side.RIGHT and not p.alpha - mu > -1:
        raise PreconditionError(f"alpha - mu > -1 violated: {p.alpha} - {mu} = {p.alpha - mu}")


def _node_prefactor(side: Side, ns: MuntzNodeSet, p: MuntzBasisParams) -> np.ndarray:
    """x^(sigma(beta-eta-mu)) (left) or x^(sigma eta)(b^sigma - x^sigma)^alpha (right) at the nodes."""
    if side is Side.LEFT:
        return ns.nodes ** p.left_exponent
    return ns.nodes ** (p.sigma * p.eta) * ns.cutoff ** p.alpha


def _shifted_block(side: Side, ns: MuntzNodeSet, p: MuntzBasisParams, mu: float) -> np.ndarray:
    """J~_i(x_k): basis functions with the shifted parameters, rows = nodes."""
    if side is Side.LEFT:
        poly = jacobi_table(ns.N, p.jac.shifted(mu, -mu), ns.reference_nodes)
        pre = ns.nodes ** p.left_exponent
    else:
        poly = jacobi_table(ns.N, p.jac.shifted(-mu, mu), ns.reference_nodes)
        pre = ns.nodes ** (p.sigma * (p.eta + mu)) * ns.cutoff ** (p.alpha - mu)
    return pre[:, None] * poly.T


def _shift_factors(side: Side, p: MuntzBasisParams, mu: float, N: int) -> np.ndarray:
    j = np.arange(N + 1, dtype=float)
    base = p.beta if side is Side.LEFT else p.alpha
    return gamma_ratio(j + base + 1.0, j + base - mu + 1.0)


def vandermonde(side: Side, ns: MuntzNodeSet) -> DenseMatrix:
    """V with v_ki = J_i(x_k) for the side's basis family."""
    p = ns.params
    poly = jacobi_table(ns.N, p.jac, ns.reference_nodes)
    return _node_prefactor(side, ns, p)[:, None] * poly.T


def v_inverse_closed(side: Side, ns: MuntzNodeSet) -> DenseMatrix:
    """
    Closed-form inverse of ``vandermonde(side, ns)``.

    v^-1_ki = w(x_i)^-1 w_i P_k(t_i) / *gamma_k, exact because the mapped
    rule integrates products of degree <= 2N + 1 exactly.
    """
    p = ns.params
    poly = jacobi_table(ns.N, p.jac, ns.reference_nodes)
    norms = p.scale * np.array([gamma_n(k, p.jac) for k in range(ns.N + 1)])
    columns = ns.rule.weights / _node_prefactor(side, ns, p)
    return (poly * columns[None, :]) / norms[:, None]


def ek_u_matrix(side: Side, ns: MuntzNodeSet, mu: float) -> DenseMatrix:
    """U with u_ki = G_i J~_i(x_k), the closed-form EK derivatives of the basis."""
    p = _order_params(ns, mu)
    _check_shift(side, p, mu)
    return _shifted_block(side, ns, p, mu) * _shift_factors(side, p, mu, ns.N)[None, :]


def ek_dm_stable(side: Side, ns: MuntzNodeSet, mu: float) -> DenseMatrix:
    """
    Stable EK differentiation matrix U V^-1 of order mu.

    For the left side the interpolating family is the first-kind basis with
    parameter mu (nodes do not depend on mu).

    Raises:
        PreconditionError: If beta - mu > -1 (left) or alpha - mu > -1 (right) fails
    """
    p = _order_params(ns, mu)
    _check_shift(side, p, mu)
    basis = MuntzNodeSet(p, ns.N, ns.rule, ns.nodes_sigma, ns.log_denominators, ns.denominator_signs)
    return ek_u_matrix(side, ns, mu) @ v_inverse_closed(side, basis)


def _guard(values: np.ndarray, label: str, on_overflow: str, offset: int = 0) -> np.ndarray:
    bad = ~np.isfinite(values) | (np.abs(values) > GAMMA_LIMIT)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        message = f"raw Gamma factor {label} overflows at column j={k + offset}"
        if on_overflow == 'raise':
            raise GammaOverflowError(message)
        logger.warning(message)
    return values


def _raw_gamma(args: np.ndarray, label: str, on_overflow: str, offset: int = 0) -> np.ndarray:
    return _guard(special.gamma(args), label, on_overflow, offset)


def ek_dm_direct(side: Side, ns: MuntzNodeSet, mu: float, on_overflow: str = 'raise') -> DenseMatrix:
    """
    EK differentiation matrix from the entrywise sum with raw Gamma values.

    Args:
        side: Left (first kind) or right (second kind)
        ns: Node set
        mu: Order (> 0)
        on_overflow: 'raise' to stop at the first overflowing Gamma factor,
            'propagate' to log it and return the (non-finite) matrix

    Raises:
        PreconditionError: On a shifted-parameter violation
        GammaOverflowError: If a Gamma factor exceeds 1e300 and on_overflow is 'raise'
    """
    if on_overflow not in OVERFLOW_POLICIES:
        raise ParameterError(f"on_overflow must be one of {OVERFLOW_POLICIES}, got {on_overflow!r}")
    p = _order_params(ns, mu)
    _check_shift(side, p, mu)
    a, b = p.alpha, p.beta
    j = np.arange(ns.N + 1, dtype=float)

    with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
        numerator = (_raw_gamma(j + a + 1.0, 'Gamma(j+alpha+1)', on_overflow)
                     * _raw_gamma(j + b + 1.0, 'Gamma(j+beta+1)', on_overflow))
        tail = j[1:]
        denominator = np.empty_like(j)
        denominator[0] = special.gamma(a + b + 2.0)
        denominator[1:] = (2.0 * tail + a + b + 1.0) * _raw_gamma(tail + 1.0, "j!", on_overflow, 1) \
            * _raw_gamma(tail + a + b + 1.0, "Gamma(j+alpha+beta+1)", on_overflow, 1)
        _guard(numerator, "Gamma(j+alpha+1) Gamma(j+beta+1)", on_overflow)
        _guard(denominator, "j! Gamma(j+alpha+beta+1)", on_overflow)
        norms = p.scale * 2.0 ** (a + b + 1.0) * numerator / denominator

        base = b if side is Side.LEFT else a
        ratios = (_raw_gamma(j + base + 1.0, 'Gamma(j+shift+1)', on_overflow)
                  / _raw_gamma(j + base - mu + 1.0, 'Gamma(j+shift-mu+1)', on_overflow))

        poly = jacobi_table(ns.N, p.jac, ns.reference_nodes)
        coefficients = ns.rule.weights[None, :] * poly / norms[:, None]
        shifted = _shifted_block(side, ns, p, mu)
        matrix = (shifted * ratios[None, :]) @ coefficients / _node_prefactor(side, ns, p)[None, :]

    if not np.all(np.isfinite(matrix)):
        logger.warning("direct %s EK matrix has non-finite entries at N=%d", side.value, ns.N)
    return matrix
