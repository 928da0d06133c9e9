"""
Burgers' equation u_t = eps u_xx - u u_x + s on [0, b] with homogeneous Dirichlet data.

Space: collocation on the second-kind family (every basis function vanishes
at both ends) with D1 from the cutoff basis and D2 = D1^2.
Time: implicit trapezoid with a Newton solve per step.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from diffmat import BasisFamily, dm_power, first_order_dm
from exceptions import ConvergenceError, NumericalError
from interpolation import GridFunction, MuntzNodeSet

from .base import BurgersProblem, SolverReport, as_function, sample
from .newton import newton_solve

logger = logging.getLogger(__name__)


class _Stepper:
    def __init__(self, p: BurgersProblem, ns: MuntzNodeSet):
        self.p = p
        self.x = ns.nodes
        self.D1 = first_order_dm(BasisFamily.CUTOFF, ns)
        self.D2 = dm_power(self.D1, 2)
        self.eye = np.eye(ns.size)
        self.newton_iterations = 0
        self.halvings = 0

    def rate(self, u: np.ndarray, t: float) -> np.ndarray:
        return self.p.epsilon * (self.D2 @ u) - u * (self.D1 @ u) + sample(self.p.s, self.x, t)

    def rate_jacobian(self, u: np.ndarray) -> np.ndarray:
        return self.p.epsilon * self.D2 - np.diag(self.D1 @ u) - u[:, None] * self.D1

    def trapezoid(self, u: np.ndarray, t0: float, t1: float) -> np.ndarray:
        h = t1 - t0
        explicit = u + 0.5 * h * self.rate(u, t0)

        def residual(v: np.ndarray) -> np.ndarray:
            return v - explicit - 0.5 * h * self.rate(v, t1)

        def jacobian(v: np.ndarray) -> np.ndarray:
            return self.eye - 0.5 * h * self.rate_jacobian(v)

        result = newton_solve(residual, u + h * self.rate(u, t0), jacobian,
                              tol=self.p.newton_tol, max_iter=self.p.newton_max_iter)
        self.newton_iterations += result.iterations
        return result.x

    def advance(self, u: np.ndarray, t0: float, t1: float, depth: int = 0) -> np.ndarray:
        """Step from t0 to t1, splitting the interval when Newton fails."""
        try:
            return self.trapezoid(u, t0, t1)
        except NumericalError as exc:
            if depth >= self.p.max_halvings:
                raise ConvergenceError(
                    f"trapezoid step at t={t0:g} failed after {depth} halvings: {exc}",
                    residual=getattr(exc, 'residual', float('nan'))) from exc
            self.halvings += 1
            logger.warning("Newton failed on [%g, %g]; halving the step", t0, t1)
            mid = 0.5 * (t0 + t1)
            return self.advance(self.advance(u, t0, mid, depth + 1), mid, t1, depth + 1)


def solve_burgers(p: BurgersProblem, exact: Optional[Callable[[np.ndarray, float], np.ndarray]] = None) -> SolverReport:
    """
    Integrate Burgers' equation to t = T.

    History rows are kept at about ``p.n_records`` equally spaced step
    indices (always including t = 0 and t = T); E_inf is the largest nodal
    error over those rows.

    Raises:
        ConvergenceError: If a step still fails after the allowed halvings
    """
    ns = MuntzNodeSet.build(p.basis, p.N)
    stepper = _Stepper(p, ns)
    n_steps = int(np.ceil(p.T / p.dt - 1e-12))
    stride = max(1, n_steps // max(1, p.n_records - 1))

    u = ns.sample(as_function(p.f)).values
    times, history = [0.0], [u.copy()]
    for k in range(n_steps):
        t0, t1 = k * p.dt, min((k + 1) * p.dt, p.T)
        u = stepper.advance(u, t0, t1)
        if (k + 1) % stride == 0 or k + 1 == n_steps:
            times.append(t1)
            history.append(u.copy())

    times_arr, history_arr = np.array(times), np.array(history)
    e_infty = None
    if exact is not None:
        reference = np.array([sample(exact, ns.nodes, t) for t in times_arr])
        e_infty = float(np.max(np.abs(history_arr - reference)))
    logger.debug("Burgers: %d steps, %d Newton iterations, %d halvings",
                 n_steps, stepper.newton_iterations, stepper.halvings)
    return SolverReport(solution=GridFunction(ns, u), e_infty=e_infty, iterations=stepper.newton_iterations,
                        times=times_arr, history=history_arr,
                        details={'steps': n_steps, 'halvings': stepper.halvings})
