"""
Gauss-Jacobi rules on [-1, 1].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg, special

from exceptions import ParameterError, QuadratureConvergenceError
from .polynomials import JacobiParams, eval_jacobi, jacobi_derivative, jacobi_weight_mass

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaussRule:
    """(degree + 1)-point Gauss-Jacobi rule; arrays are read-only."""

    nodes: np.ndarray
    weights: np.ndarray
    degree: int
    params: JacobiParams

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def size(self) -> int:
        return self.degree + 1


def _jacobi_matrix(m: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the symmetric Jacobi matrix of size m."""
    k = np.arange(m, dtype=float)
    diag = np.empty(m)
    diag[0] = (b - a) / (a + b + 2.0)
    if m > 1:
        s = 2.0 * k[1:] + a + b
        diag[1:] = (b * b - a * a) / (s * (s + 2.0))

    k = np.arange(1, m, dtype=float)
    s = 2.0 * k + a + b
    off_sq = np.empty(m - 1)
    if m > 1:
        off_sq[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) ** 2 * (3.0 + a + b))
        if m > 2:
            kk, ss = k[1:], s[1:]
            off_sq[1:] = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (ss ** 2 * (ss + 1.0) * (ss - 1.0))
    return diag, np.sqrt(off_sq)


def gauss_jacobi(n: int, p: JacobiParams) -> GaussRule:
    """
    Build the (n+1)-point Gauss-Jacobi rule.

    Nodes come from the Golub-Welsch eigenproblem and get one Newton
    correction each; weights use the derivative formula in log form.

    Args:
        n: Rule degree (n + 1 nodes, exact up to polynomial degree 2n + 1)
        p: Jacobi parameters with alpha, beta > -1

    Returns:
        GaussRule with strictly increasing nodes and positive weights

    Raises:
        ParameterError: If n < 0 or the parameters are invalid
        QuadratureConvergenceError: If the eigen solve or the polish fails
    """
    if n < 0:
        raise ParameterError(f"rule degree must be >= 0, got {n}")
    p.validate()
    a, b = p.alpha, p.beta
    m = n + 1

    if m == 1:
        nodes = np.array([(b - a) / (a + b + 2.0)])
        weights = np.array([jacobi_weight_mass(p)])
        return GaussRule(nodes, weights, n, p)

    diag, off = _jacobi_matrix(m, a, b)
    try:
        nodes = linalg.eigh_tridiagonal(diag, off, eigvals_only=True)
    except linalg.LinAlgError as e:
        raise QuadratureConvergenceError(f"Golub-Welsch eigen solve failed for n={n}: {e}") from e
    nodes = np.sort(nodes)

    values = eval_jacobi(m, p, nodes, check_domain=False)
    slopes = jacobi_derivative(m, p, nodes, check_domain=False)
    step = values / slopes
    gaps = np.diff(nodes)
    room = np.minimum(np.concatenate(([np.inf], gaps)), np.concatenate((gaps, [np.inf])))
    bad = ~np.isfinite(step) | (np.abs(step) > 0.5 * room)
    if np.any(bad):
        index = int(np.flatnonzero(bad)[0])
        raise QuadratureConvergenceError(
            f"Newton polish diverged at node {index} (n={n}, alpha={a}, beta={b})", index=index)
    nodes = nodes - step

    if np.any(np.abs(nodes) >= 1.0) or np.any(np.diff(nodes) <= 0):
        raise QuadratureConvergenceError(f"Gauss-Jacobi nodes not strictly inside (-1, 1) for n={n}")

    slopes = jacobi_derivative(m, p, nodes, check_domain=False)
    log_c = ((a + b + 1.0) * np.log(2.0) + special.gammaln(m + a + 1.0) + special.gammaln(m + b + 1.0)
             - special.gammaln(m + 1.0) - special.gammaln(m + a + b + 1.0))
    weights = np.exp(log_c - np.log1p(-nodes) - np.log1p(nodes) - 2.0 * np.log(np.abs(slopes)))
    logger.debug("gauss_jacobi n=%d (%g, %g): weight sum %.17g", n, a, b, weights.sum())
    return GaussRule(nodes, weights, n, p)
