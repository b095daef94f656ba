"""Exception hierarchy shared by every module of the package."""


class JacobiLieError(Exception):
    """Base class for all errors raised by jacobi_lie."""


class SingularMatrix(JacobiLieError, ArithmeticError):
    """Matrix determinant is too small to invert."""


class DegenerateSystem(JacobiLieError, ArithmeticError):
    """Bi-orthogonal construction collapses (|cos theta| at or below tolerance)."""


class OutOfRange(JacobiLieError, ValueError):
    """Deformation parameter outside [-1, 1]."""


class DomainError(JacobiLieError, ValueError):
    pass


class ModulusOutOfRange(DomainError):
    """Modulus outside the real-nome range 0 <= kappa < 1."""


class StepFailure(JacobiLieError, RuntimeError):
    """Adaptive step controller shrank the step below its floor."""


class ConvergenceError(JacobiLieError, RuntimeError):
    pass
