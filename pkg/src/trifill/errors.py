"""Exception types raised by trifill."""


class ZeroVectorError(ValueError):
    """All eight amplitudes are zero; no ray can be normalized."""


class NormalizationError(ValueError):
    """Canonical parameters do not satisfy the unit-norm constraint."""


class InvalidPairError(ValueError):
    """A two-qubit marginal was requested for a repeated qubit index."""


class NotUnitaryError(ValueError):
    """A supplied 2x2 matrix fails the unitarity tolerance."""


class NotDensityMatrixError(ValueError):
    """Matrix is not Hermitian, unit-trace and positive semidefinite."""


class TriangleViolationError(ValueError):
    """Edge lengths violate the squared-concurrence triangle inequality
    by more than floating-point leakage; no state can produce them."""


class DomainError(ValueError):
    """Scalar argument lies outside the function's domain."""


class StateFormatError(ValueError):
    """Text form of a state is malformed or has the wrong shape."""
