"""Jacobi's elliptic functions built from a deformed so(2,1) Lie algebra.

Three independent routes to sn, cn, dn are provided: integration of the
vector-field ODE triplet (:mod:`jacobiode`), inversion of the elliptic
integrals (:mod:`ellint`) and the AGM/Landen reference (:mod:`oracle`).
"""

from .errors import (
    ConvergenceError,
    DegenerateSystem,
    DomainError,
    JacobiLieError,
    ModulusOutOfRange,
    OutOfRange,
    SingularMatrix,
    StepFailure,
)
from .jacobiode import cn, dn, integrate, sn

__all__ = [
    "ConvergenceError",
    "DegenerateSystem",
    "DomainError",
    "JacobiLieError",
    "ModulusOutOfRange",
    "OutOfRange",
    "SingularMatrix",
    "StepFailure",
    "cn",
    "dn",
    "integrate",
    "sn",
]
