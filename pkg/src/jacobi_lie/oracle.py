"""Reference sn, cn, dn and K from the arithmetic-geometric mean.

Shares no code with the ODE or quadrature routes on purpose: agreement with
them is only evidence if the computations are unrelated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

MAX_LEVELS = 40
_EPS = 1e-15


@dataclass(frozen=True)
class AgmState:
    a: float
    b: float
    c: float
    level: int


def agm_trace(a: float, b: float) -> list[AgmState]:
    """All AGM levels from ``(a, b)`` until ``c_n <= 1e-15 a_n``.

    ``c_0`` is ``sqrt(a^2 - b^2)`` (the modulus when ``a = 1``); later levels
    carry ``c_n = (a_{n-1} - b_{n-1}) / 2``.
    """
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"agm needs positive finite inputs, got ({a}, {b})")
    if a < b:
        a, b = b, a
    states = [AgmState(a, b, math.sqrt((a - b) * (a + b)), 0)]
    while states[-1].c > _EPS * states[-1].a:
        prev = states[-1]
        if prev.level >= MAX_LEVELS:
            raise ConvergenceError(f"agm({a}, {b}) not converged after {MAX_LEVELS} levels")
        states.append(AgmState(0.5 * (prev.a + prev.b), math.sqrt(prev.a * prev.b),
                               0.5 * (prev.a - prev.b), prev.level + 1))
    return states


def agm(a: float, b: float) -> float:
    return agm_trace(a, b)[-1].a


def complete_K_agm(kappa: float) -> float:
    _check_modulus(kappa)
    return math.pi / (2.0 * agm(1.0, math.sqrt((1.0 - kappa) * (1.0 + kappa))))


def _check_modulus(kappa: float) -> None:
    if not 0.0 <= kappa < 1.0:
        raise DomainError(f"modulus must satisfy 0 <= kappa < 1, got {kappa}")


def jacobi_agm(u: float, kappa: float) -> tuple[float, float, float]:
    """(sn, cn, dn) by descending Landen transformation of the amplitude."""
    _check_modulus(kappa)
    if not math.isfinite(u):
        raise DomainError(f"argument must be finite, got {u}")
    levels = agm_trace(1.0, math.sqrt((1.0 - kappa) * (1.0 + kappa)))
    n = len(levels) - 1
    phi = 2.0 ** n * levels[n].a * u
    for st in reversed(levels[1:]):
        phi = 0.5 * (phi + math.asin(st.c / st.a * math.sin(phi)))
    s = math.sin(phi)
    return s, math.cos(phi), math.sqrt(1.0 - (kappa * s) ** 2)
