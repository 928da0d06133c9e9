"""
Collocation solvers for fractional ODEs with left EK derivatives.

Unknowns are nodal values Y at the mapped Gauss nodes of the first-kind
family whose parameter mu is the highest order; each D^{mu_k} is the stable
EK matrix on that node set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy import linalg

from diffmat import BasisFamily, condition_number, ek_dm_stable, first_order_dm
from exceptions import ParameterError, SingularSystemError
from interpolation import GridFunction, InterpolantKind, MuntzNodeSet, eval_interpolant
from muntz import Side
from quadrature import MuntzBasisParams

from .base import LinearFdeProblem, NonlinearFdeProblem, SolverReport, as_function, sample
from .newton import newton_solve

logger = logging.getLogger(__name__)


def trial_nodeset(basis: MuntzBasisParams, mu: float, N: int) -> MuntzNodeSet:
    """Node set of the first-kind family carrying the highest order mu."""
    return MuntzNodeSet.build(basis.with_changes(mu=float(mu)), N)


def ek_matrices(ns: MuntzNodeSet, orders: Sequence[float]) -> List[np.ndarray]:
    return [ek_dm_stable(Side.LEFT, ns, mu) for mu in orders]


def _dense_solve(A: np.ndarray, F: np.ndarray) -> tuple[np.ndarray, float]:
    cond = condition_number(A)
    if not np.isfinite(cond):
        raise SingularSystemError("collocation matrix is singular to working precision", cond=cond)
    try:
        Y = linalg.solve(A, F)
    except linalg.LinAlgError as exc:
        raise SingularSystemError(f"collocation solve failed: {exc}", cond=cond) from exc
    return Y, cond


def _finish(ns: MuntzNodeSet, Y: np.ndarray, exact: Optional[Callable], **kwargs) -> SolverReport:
    solution = GridFunction(ns, Y)
    e_infty = solution.max_error(exact) if exact is not None else None
    return SolverReport(solution=solution, e_infty=e_infty, **kwargs)


def linear_system(p: LinearFdeProblem) -> tuple[MuntzNodeSet, np.ndarray, np.ndarray]:
    """
    Assemble (sum_{k>=1} C_k D^{mu_k} + C_0) Y = F.

    Returns:
        Node set, system matrix and right-hand side
    """
    ns = trial_nodeset(p.basis, p.orders[-1], p.N)
    x = ns.nodes
    coefficients = [sample(as_function(c), x) for c in p.coefficients]
    A = np.diag(coefficients[0])
    for c, D in zip(coefficients[1:], ek_matrices(ns, p.orders)):
        A = A + c[:, None] * D
    F = ns.sample(as_function(p.rhs)).values
    return ns, A, F


def solve_linear_fde(p: LinearFdeProblem, exact: Optional[Callable] = None) -> SolverReport:
    """
    Solve a linear multi-term FDE by collocation.

    Args:
        p: Problem definition
        exact: Optional exact solution for E_inf(N)

    Returns:
        SolverReport with the nodal solution and the system condition number

    Raises:
        PreconditionError: If the exponent constraint fails
        SingularSystemError: If the collocation matrix is singular
    """
    ns, A, F = linear_system(p)
    Y, cond = _dense_solve(A, F)
    logger.debug("linear FDE N=%d solved, cond %.3e", p.N, cond)
    return _finish(ns, Y, exact, cond=cond)


def solve_nonlinear_fde(p: NonlinearFdeProblem, exact: Optional[Callable] = None,
                        x0: Optional[np.ndarray] = None, tol: float = 1e-11, max_iter: int = 50,
                        max_halvings: int = 8) -> SolverReport:
    """
    Solve D^{mu_l} y = F(x, y, D^{mu_1} y, ...) by Newton's method on the nodal values.

    ``p.jacobian`` (a full dF/dY) or ``p.partials`` (pointwise derivatives
    of F, chained through the lower-order matrices) give an analytic
    Jacobian; otherwise forward differences are used.

    Raises:
        ConvergenceError: If Newton fails
    """
    ns = trial_nodeset(p.basis, p.orders[-1], p.N)
    x = ns.nodes
    matrices = ek_matrices(ns, p.orders)
    top, lower = matrices[-1], matrices[:-1]

    def arguments(Y: np.ndarray) -> list:
        return [x, Y, *(D @ Y for D in lower)]

    def residual(Y: np.ndarray) -> np.ndarray:
        return top @ Y - sample(p.F, *arguments(Y))

    jacobian = None
    if p.jacobian is not None:
        def jacobian(Y: np.ndarray) -> np.ndarray:
            return top - np.asarray(p.jacobian(*arguments(Y)), dtype=float)
    elif p.partials is not None:
        def jacobian(Y: np.ndarray) -> np.ndarray:
            args = arguments(Y)
            dF = np.diag(sample(p.partials[0], *args))
            for partial, D in zip(p.partials[1:], lower):
                dF = dF + sample(partial, *args)[:, None] * D
            return top - dF

    start = np.zeros(ns.size) if x0 is None else np.asarray(x0, dtype=float)
    if start.shape != (ns.size,):
        raise ParameterError(f"initial guess needs {ns.size} values, got shape {start.shape}")
    result = newton_solve(residual, start, jacobian, tol=tol, max_iter=max_iter, max_halvings=max_halvings)
    logger.debug("nonlinear FDE N=%d: %d Newton iterations, residual %.3e",
                 p.N, result.iterations, result.residual_norm)
    return _finish(ns, result.x, exact, iterations=result.iterations, residual_norm=result.residual_norm,
                   cond=condition_number(top))


@dataclass
class CauchyEulerCoefficients:
    """a2 x^2 y'' + a1 x y' + a0 y: the mu = 2 EK operator plus lambda."""

    a2: float
    a1: float
    a0: float

    @classmethod
    def from_operator(cls, sigma: float, eta: float, lam: float) -> "CauchyEulerCoefficients":
        return cls(1.0 / sigma ** 2, 1.0 / sigma ** 2 + (2.0 * eta + 3.0) / sigma,
                   (eta + 1.0) * (eta + 2.0) + lam)

    @classmethod
    def as_printed(cls, sigma: float, eta: float, lam: float) -> "CauchyEulerCoefficients":
        """The published reduction, kept for comparison."""
        return cls(1.0 / sigma ** 2, (2.0 * eta + 4.0) / sigma,
                   eta ** 2 + 4.0 * eta + 4.0 - (2.0 + eta) / sigma + lam)

    def matches(self, other: "CauchyEulerCoefficients", tol: float = 1e-12) -> bool:
        return all(abs(a - b) <= tol * max(1.0, abs(a)) for a, b in
                   ((self.a2, other.a2), (self.a1, other.a1), (self.a0, other.a0)))

    def to_dict(self) -> Dict[str, float]:
        return {'a2': self.a2, 'a1': self.a1, 'a0': self.a0}


def compare_reductions(sigma: float, eta: float, lam: float) -> tuple[CauchyEulerCoefficients, CauchyEulerCoefficients]:
    """Computed and printed reduction coefficients; warns when they disagree."""
    computed = CauchyEulerCoefficients.from_operator(sigma, eta, lam)
    printed = CauchyEulerCoefficients.as_printed(sigma, eta, lam)
    if not computed.matches(printed):
        logger.warning("Cauchy-Euler reduction at sigma=%g, eta=%g: operator gives %s, printed form gives %s",
                       sigma, eta, computed.to_dict(), printed.to_dict())
    return computed, printed


def solve_cauchy_euler(basis: MuntzBasisParams, N: int, coefficients: CauchyEulerCoefficients,
                       rhs: Callable, exact: Optional[Callable] = None) -> SolverReport:
    """
    Solve a2 x^2 y'' + a1 x y' + a0 y = f with the power-basis D1.

    x^2 y'' = E^2 y - E y with E = diag(x) D1, both exact on the power span.
    The node set matches ``trial_nodeset(basis, 2, N)``.
    """
    ns = trial_nodeset(basis, 2.0, N)
    E = ns.nodes[:, None] * first_order_dm(BasisFamily.POWER, ns)
    c = coefficients
    A = c.a2 * (E @ E - E) + c.a1 * E + c.a0 * np.eye(ns.size)
    Y, cond = _dense_solve(A, ns.sample(rhs).values)
    return _finish(ns, Y, exact, cond=cond, details={'path': 'reduced', **c.to_dict()})


def dense_profile(report: SolverReport, points: np.ndarray,
                  kind: InterpolantKind = InterpolantKind.NJMI1) -> np.ndarray:
    """Evaluate the solution's interpolant on a plotting grid."""
    return np.asarray(eval_interpolant(kind, report.solution, points, limit=True), dtype=float)
