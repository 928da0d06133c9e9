"""
Custom exceptions for muntz-spectral.

Two families matter to callers: parameter/configuration problems (the
request itself is invalid) and numerical failures (a valid request that
could not be carried out in floating point).
"""

from typing import Optional


class MuntzSpectralError(Exception):
    """Base exception for all library errors."""
    pass


class ParameterError(MuntzSpectralError):
    """Raised when a parameter bundle violates a precondition."""
    pass


class PreconditionError(ParameterError):
    """Raised when a shifted parameter or exponent inequality fails."""
    pass


class DomainError(ParameterError):
    """Raised when an evaluation point lies outside the admissible domain."""
    pass


class SingularEndpointError(DomainError):
    """Raised when a negative power is evaluated at an endpoint."""
    pass


class PoleError(MuntzSpectralError):
    """Raised when a Gamma argument hits a nonpositive integer."""
    pass


class ConfigurationError(MuntzSpectralError):
    """Raised when settings or a run configuration are invalid."""
    pass


class EvaluationError(MuntzSpectralError):
    """Raised when a user function returns a non-finite value."""
    pass


class QuadratureConvergenceError(MuntzSpectralError):
    """Raised when a node solve or adaptive quadrature fails to converge."""

    def __init__(self, message: str, estimate: Optional[float] = None, index: Optional[int] = None):
        super().__init__(message)
        self.estimate = estimate
        self.index = index


class GammaOverflowError(MuntzSpectralError):
    """Raised when a raw Gamma factor leaves the float64 range."""
    pass


class NumericalError(MuntzSpectralError):
    """Base exception for solver failures."""
    pass


class SingularSystemError(NumericalError):
    """Raised when a collocation system is singular to working precision."""

    def __init__(self, message: str, cond: float = float('inf')):
        super().__init__(message)
        self.cond = cond


class ConvergenceError(NumericalError):
    """Raised when an iteration stops without meeting its tolerance."""

    def __init__(self, message: str, residual: float = float('nan'), iterations: int = 0):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class StiffnessError(NumericalError):
    """Raised when the adaptive time integrator collapses its step size."""
    pass


class StepSizeError(NumericalError):
    """Raised when a finite-difference or time step underflows."""
    pass


__all__ = [
    'MuntzSpectralError',
    'ParameterError',
    'PreconditionError',
    'DomainError',
    'SingularEndpointError',
    'PoleError',
    'ConfigurationError',
    'EvaluationError',
    'QuadratureConvergenceError',
    'GammaOverflowError',
    'NumericalError',
    'SingularSystemError',
    'ConvergenceError',
    'StiffnessError',
    'StepSizeError',
]
