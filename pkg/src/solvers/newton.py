"""
Damped Newton iteration for square nonlinear systems.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import linalg

from exceptions import ConvergenceError, ParameterError

logger = logging.getLogger(__name__)

Residual = Callable[[np.ndarray], np.ndarray]
Jacobian = Callable[[np.ndarray], np.ndarray]


@dataclass
class NewtonResult:
    x: np.ndarray
    iterations: int
    residual_norm: float
    converged_on_step: bool = False

    def to_dict(self):
        return {
            'iterations': self.iterations,
            'residual_norm': self.residual_norm,
            'converged_on_step': self.converged_on_step,
        }


def fd_jacobian(residual: Residual, x: np.ndarray, r0: Optional[np.ndarray] = None) -> np.ndarray:
    """Forward-difference Jacobian with steps sqrt(eps) (1 + |x_i|)."""
    x = np.asarray(x, dtype=float)
    r0 = residual(x) if r0 is None else r0
    steps = np.sqrt(np.finfo(float).eps) * (1.0 + np.abs(x))
    J = np.empty((r0.size, x.size))
    for i, h in enumerate(steps):
        shifted = x.copy()
        shifted[i] += h
        J[:, i] = (residual(shifted) - r0) / h
    return J


def _direction(J: np.ndarray, r: np.ndarray) -> tuple[np.ndarray, bool]:
    """Newton step and whether J had to be treated as singular."""
    try:
        with warnings.catch_warnings():
            warnings.simplefilter('error', linalg.LinAlgWarning)
            return linalg.solve(J, -r), False
    except (linalg.LinAlgError, linalg.LinAlgWarning, ValueError):
        logger.debug("Newton Jacobian singular; falling back to least squares")
        step, *_ = linalg.lstsq(J, -r)
        return step, True


def newton_solve(residual: Residual, x0: np.ndarray, jacobian: Optional[Jacobian] = None,
                 tol: float = 1e-11, max_iter: int = 50, max_halvings: int = 8,
                 xtol: float = 1e-12) -> NewtonResult:
    """
    Solve residual(x) = 0 by Newton's method with step halving.

    Convergence is declared when max|residual| <= tol, or when the accepted
    step falls below xtol (1 + max|x|), which happens once the residual has
    reached its round-off floor.

    Args:
        residual: Map R^n -> R^n
        x0: Initial guess
        jacobian: Analytic Jacobian; forward differences when omitted
        tol: Residual tolerance in the max norm
        max_iter: Newton iteration cap
        max_halvings: Step halvings allowed per iteration
        xtol: Relative step tolerance

    Returns:
        NewtonResult with the solution and diagnostics

    Raises:
        ConvergenceError: If the iteration cap or the damping limit is hit
    """
    if max_iter < 1 or max_halvings < 0:
        raise ParameterError("max_iter must be >= 1 and max_halvings >= 0")
    x = np.array(x0, dtype=float)
    r = np.asarray(residual(x), dtype=float)
    norm = float(np.max(np.abs(r))) if r.size else 0.0

    for iteration in range(1, max_iter + 1):
        if norm <= tol:
            return NewtonResult(x, iteration - 1, norm)
        J = jacobian(x) if jacobian is not None else fd_jacobian(residual, x, r)
        dx, singular = _direction(np.asarray(J, dtype=float), r)
        if not np.all(np.isfinite(dx)):
            raise ConvergenceError("Newton direction is not finite", residual=norm, iterations=iteration)

        damping = 1.0
        for _ in range(max_halvings + 1):
            trial = x + damping * dx
            r_trial = np.asarray(residual(trial), dtype=float)
            trial_norm = float(np.max(np.abs(r_trial)))
            if np.isfinite(trial_norm) and (trial_norm < norm or trial_norm <= tol):
                break
            damping *= 0.5
        else:
            if singular:
                raise ConvergenceError(
                    "Newton Jacobian is singular and the least-squares step does not reduce the residual",
                    residual=norm, iterations=iteration)
            if np.max(np.abs(dx)) <= xtol * (1.0 + np.max(np.abs(x))):
                return NewtonResult(x, iteration, norm, converged_on_step=True)
            raise ConvergenceError(
                f"Newton damping exhausted after {max_halvings} halvings", residual=norm, iterations=iteration)

        step = damping * dx
        x, r, norm = trial, r_trial, trial_norm
        logger.debug("newton iteration %d: residual %.3e, damping %g", iteration, norm, damping)
        if norm <= tol:
            return NewtonResult(x, iteration, norm)
        if np.max(np.abs(step)) <= xtol * (1.0 + np.max(np.abs(x))):
            return NewtonResult(x, iteration, norm, converged_on_step=True)

    raise ConvergenceError(f"Newton did not converge in {max_iter} iterations", residual=norm, iterations=max_iter)
