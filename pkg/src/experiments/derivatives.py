"""
Conditioning and accuracy of the EK differentiation matrices.

For each N and order mu both constructions are applied to the nodal values
of a Jacobi-Muntz function whose EK derivative is known in closed form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from api.writers import ResultTable
from diffmat import condition_number, ek_dm_direct, ek_dm_stable
from interpolation import MuntzNodeSet
from muntz import JmfKind, JmfSpec, Side, ek_deriv_jmf_closed, eval_jmf
from quadrature import MuntzBasisParams
from utils.parallel import map_ordered

from .base import BaseExperiment

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['N', 'mu', 'approach', 'cond', 'cond_over_2N2mu', 'max_err']
APPROACHES = ('stable', 'direct')


@dataclass
class MatrixSummary:
    N: int
    mu: float
    approach: str
    cond: float
    max_err: float

    @property
    def cond_ratio(self) -> float:
        return self.cond / (2.0 * self.N ** (2.0 * self.mu))

    def row(self) -> tuple:
        return (self.N, self.mu, self.approach, self.cond, self.cond_ratio, self.max_err)


def build_matrix(side: Side, ns: MuntzNodeSet, mu: float, approach: str) -> np.ndarray:
    """Stable or direct matrix; the direct one propagates overflow as non-finite entries."""
    if approach == 'stable':
        return ek_dm_stable(side, ns, mu)
    return ek_dm_direct(side, ns, mu, on_overflow='propagate')


def reproduction_error(side: Side, ns: MuntzNodeSet, D: np.ndarray, mu: float, degree: int) -> float:
    """Max nodal error of D applied to a degree-``degree`` JMF; inf when D is not finite."""
    if not np.all(np.isfinite(D)):
        return float('inf')
    kind = JmfKind.FIRST if side is Side.LEFT else JmfKind.SECOND
    spec = JmfSpec(kind, degree, ns.params.with_changes(mu=float(mu)))
    values = np.asarray(eval_jmf(spec, ns.nodes), dtype=float)
    exact = np.asarray(ek_deriv_jmf_closed(spec, ns.nodes), dtype=float)
    return float(np.max(np.abs(D @ values - exact)))


def summarize(side: Side, params: MuntzBasisParams, N: int, mu: float, approach: str,
              degree: int) -> MatrixSummary:
    ns = MuntzNodeSet.build(params.with_changes(mu=float(mu)), N)
    D = build_matrix(side, ns, mu, approach)
    cond = condition_number(D) if np.all(np.isfinite(D)) else float('nan')
    error = reproduction_error(side, ns, D, mu, min(degree, N))
    logger.debug("%s %s N=%d mu=%g: cond %.4e, error %.3e", side.value, approach, N, mu, cond, error)
    return MatrixSummary(N, float(mu), approach, cond, error)


class _MatrixExperiment(BaseExperiment):
    side = Side.LEFT

    def execute(self, params: Dict[str, Any], sweep: Optional[List[int]]) -> ResultTable:
        basis = self.basis(params)
        cases = [(N, mu, approach) for N in sweep for mu in params['orders'] for approach in APPROACHES]

        def compute(case):
            N, mu, approach = case
            return summarize(self.side, basis, N, mu, approach, int(params['degree']))

        table = ResultTable(f"paper-repro {self.experiment_id}", list(SUMMARY_COLUMNS))
        table.extend(summary.row() for summary in map_ordered(compute, cases, self.threads))
        return table


class LeftMatrixExperiment(_MatrixExperiment):
    """First-kind functions under the left EK matrices."""

    experiment_id = 'ex1'
    side = Side.LEFT


class RightMatrixExperiment(_MatrixExperiment):
    """Second-kind functions under the right EK matrices."""

    experiment_id = 'ex2'
    side = Side.RIGHT
