"""
Method of lines for u_t = d(x, t) D^mu u + s(x, t) with a left EK derivative in space.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from diffmat import ek_dm_stable
from exceptions import StiffnessError
from interpolation import GridFunction
from muntz import Side

from .base import PdeProblem, SolverReport, as_function, sample
from .fde import trial_nodeset

logger = logging.getLogger(__name__)


def _coefficient(fn) -> Callable[[np.ndarray, float], np.ndarray]:
    if callable(fn):
        return fn
    constant = float(fn)
    return lambda x, t: np.full(np.shape(x), constant)


def solve_pde_mol(p: PdeProblem, exact: Optional[Callable[[np.ndarray, float], np.ndarray]] = None) -> SolverReport:
    """
    Semi-discretize in space and integrate a' = C(t) D a + s(t), a(0) = F with RK45.

    The report's history has one row of nodal values per output time
    (``p.n_times`` equally spaced times in [0, T]); E_inf is taken over all of them.

    Raises:
        StiffnessError: If the integrator cannot meet the tolerances
    """
    ns = trial_nodeset(p.basis, p.mu, p.N)
    x = ns.nodes
    D = ek_dm_stable(Side.LEFT, ns, p.mu)
    d = _coefficient(p.d)
    s = p.s

    def rhs(t: float, a: np.ndarray) -> np.ndarray:
        return sample(d, x, t) * (D @ a) + sample(s, x, t)

    times = np.linspace(0.0, p.T, p.n_times)
    a0 = ns.sample(as_function(p.f)).values
    result = integrate.solve_ivp(rhs, (0.0, p.T), a0, method='RK45', t_eval=times,
                                 rtol=p.rtol, atol=p.atol)
    if result.status != 0:
        raise StiffnessError(
            f"RK45 stopped at t={result.t[-1] if result.t.size else 0.0:g}: {result.message}; "
            "relax rtol/atol or use a smaller N")
    logger.debug("RK45 used %d right-hand side evaluations", result.nfev)

    history = result.y.T
    e_infty = None
    if exact is not None:
        reference = np.array([sample(exact, x, t) for t in times])
        e_infty = float(np.max(np.abs(history - reference)))
    return SolverReport(solution=GridFunction(ns, history[-1].copy()), e_infty=e_infty,
                        times=times, history=history, details={'nfev': int(result.nfev)})
