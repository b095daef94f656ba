"""Vector-field realization of the deformed generators and its ODE triplet.

With ``T_l = f_l(u) d/du`` the commutation relations become

    f1' = -kappa^2 f2 f3,   f2' = f1 f3,   f3' = -f1 f2,

started from ``(f1, f2, f3)(0) = (-1, 0, -1)``. The solution is
``(f1, f2, f3) = (-dn, sn, -cn)``; the public ``sn``/``cn``/``dn`` return the
usual signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import ellint
from .errors import DomainError, ModulusOutOfRange, StepFailure

Method = Literal["adaptive_rk45", "fixed_rk4"]


@dataclass(frozen=True)
class JacobiTriple:
    u: float
    kappa: float
    f1: float
    f2: float
    f3: float

    @property
    def sn(self) -> float:
        return self.f2

    @property
    def cn(self) -> float:
        return -self.f3

    @property
    def dn(self) -> float:
        return -self.f1

    def invariant_errors(self) -> tuple[float, float]:
        """``(|f2^2 + f3^2 - 1|, |f1^2 + kappa^2 f2^2 - 1|)``."""
        return (abs(self.f2 ** 2 + self.f3 ** 2 - 1.0),
                abs(self.f1 ** 2 + (self.kappa * self.f2) ** 2 - 1.0))


@dataclass(frozen=True)
class IntegratorConfig:
    step: float = 0.05
    tol: float = 1e-11
    method: Method = "adaptive_rk45"
    renormalize: bool = False
    min_step: float = 1e-12

    def __post_init__(self):
        if not (self.step > 0 and self.tol > 0):
            raise ValueError("step and tol must be positive")
        if self.method not in ("adaptive_rk45", "fixed_rk4"):
            raise ValueError(f"unknown method {self.method!r}")


DEFAULT_CONFIG = IntegratorConfig()
INITIAL_STATE = (-1.0, 0.0, -1.0)


def check_modulus(kappa: float) -> None:
    if not (0.0 <= kappa < 1.0):
        raise ModulusOutOfRange(f"modulus must satisfy 0 <= kappa < 1, got {kappa}")


def _field(k2: float, f1: float, f2: float, f3: float) -> tuple[float, float, float]:
    return -k2 * f2 * f3, f1 * f3, -f1 * f2


def vector_field(state: JacobiTriple) -> tuple[float, float, float]:
    """Derivatives ``(f1', f2', f3')`` at ``state``."""
    return _field(state.kappa ** 2, state.f1, state.f2, state.f3)


# Dormand-Prince 5(4) tableau
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
_E = tuple(b5 - b4 for b5, b4 in zip(_B5, _B4))


def _dp_step(k2, y, h, k1):
    ks = [k1]
    for i in range(1, 7):
        yi = [y[n] + h * sum(a * ks[j][n] for j, a in enumerate(_A[i])) for n in range(3)]
        ks.append(_field(k2, *yi))
    # FSAL: stage 7 is evaluated at the 5th-order solution
    y5 = [y[n] + h * sum(b * ks[j][n] for j, b in enumerate(_B5)) for n in range(3)]
    err = max(abs(h * sum(e * ks[j][n] for j, e in enumerate(_E))) for n in range(3))
    return y5, err, ks[6]


def _rk4_step(k2, y, h):
    a = _field(k2, *y)
    b = _field(k2, *(y[n] + 0.5 * h * a[n] for n in range(3)))
    c = _field(k2, *(y[n] + 0.5 * h * b[n] for n in range(3)))
    d = _field(k2, *(y[n] + h * c[n] for n in range(3)))
    return [y[n] + h / 6 * (a[n] + 2 * b[n] + 2 * c[n] + d[n]) for n in range(3)]


def _project(k2, y):
    f1, f2, f3 = y
    r = math.hypot(f2, f3)
    f2, f3 = f2 / r, f3 / r
    f1 = math.copysign(math.sqrt(1.0 - k2 * f2 * f2), f1)
    return [f1, f2, f3]


def trajectory(u_end: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG,
               state=INITIAL_STATE, u_start: float = 0.0) -> list[JacobiTriple]:
    """Every accepted step from ``u_start`` to ``u_end`` (no periodic reduction).

    Integration runs backward when ``u_end < u_start``.
    """
    check_modulus(kappa)
    if not (math.isfinite(u_end) and math.isfinite(u_start)):
        raise DomainError("integration limits must be finite")
    k2 = kappa * kappa
    y = list(state)
    u = u_start
    out = [JacobiTriple(u, kappa, *y)]
    span = u_end - u_start
    if span == 0.0:
        return out
    direction = 1.0 if span > 0 else -1.0

    if cfg.method == "fixed_rk4":
        n = max(1, math.ceil(abs(span) / cfg.step))
        h = span / n
        for i in range(1, n + 1):
            y = _rk4_step(k2, y, h)
            if cfg.renormalize:
                y = _project(k2, y)
            out.append(JacobiTriple(u_start + i * h, kappa, *y))
        return out

    h = direction * min(cfg.step, abs(span))
    k1 = _field(k2, *y)
    while direction * (u_end - u) > 0:
        if direction * (u + h - u_end) > 0:
            h = u_end - u
        y_new, err, k_last = _dp_step(k2, y, h, k1)
        if err <= cfg.tol:
            u = u_end if direction * (u + h - u_end) >= 0 else u + h
            y = _project(k2, y_new) if cfg.renormalize else y_new
            k1 = _field(k2, *y) if cfg.renormalize else k_last
            out.append(JacobiTriple(u, kappa, *y))
        factor = 0.9 * (cfg.tol / err) ** 0.2 if err > 0 else 5.0
        h *= min(5.0, max(0.2, factor))
        if abs(h) < cfg.min_step and direction * (u_end - u) > cfg.min_step:
            raise StepFailure(f"step underflow at u={u} (h={h:.3e})")
    return out


def integrate(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG) -> JacobiTriple:
    """State at ``u``, integrating from 0 after reducing ``u`` into ``[-2K, 2K]``."""
    check_modulus(kappa)
    if not math.isfinite(u):
        raise DomainError(f"argument must be finite, got {u}")
    period = 4.0 * ellint.complete_K(kappa)
    r = u
    if abs(u) > 0.5 * period:
        r = math.remainder(u, period)
    end = trajectory(r, kappa, cfg)[-1]
    return JacobiTriple(u, kappa, end.f1, end.f2, end.f3)


def jacobi(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG) -> tuple[float, float, float]:
    """(sn, cn, dn) from a single integration."""
    t = integrate(u, kappa, cfg)
    return t.sn, t.cn, t.dn


def sn(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG) -> float:
    return integrate(u, kappa, cfg).sn


def cn(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG) -> float:
    return integrate(u, kappa, cfg).cn


def dn(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG) -> float:
    return integrate(u, kappa, cfg).dn


def limit_kappa1(u: float) -> tuple[float, float, float]:
    """Degenerate ``kappa = 1`` values ``(tanh u, sech u, sech u)``."""
    sech = 1.0 / math.cosh(u)
    return math.tanh(u), sech, sech


class CasimirMismatch(AssertionError):
    pass


def casimir_from_generators(state: JacobiTriple) -> tuple[float, float]:
    """Coefficients of ``d^2/du^2`` and ``d/du`` in ``T1^2 - T2^2 - (1-k^2) T3^2``.

    For ``T = f d/du`` one has ``T^2 = f^2 d^2/du^2 + f f' d/du``.
    """
    k2 = state.kappa ** 2
    d1, d2, d3 = vector_field(state)
    f1, f2, f3 = state.f1, state.f2, state.f3
    c2 = f1 * f1 - f2 * f2 - (1.0 - k2) * f3 * f3
    c1 = f1 * d1 - f2 * d2 - (1.0 - k2) * f3 * d3
    return c2, c1


def casimir_closed_form(s: float, c: float, d: float, kappa: float) -> tuple[float, float]:
    """``(kappa^2 (cn^2 - sn^2), -2 kappa^2 sn cn dn)``."""
    k2 = kappa * kappa
    return k2 * (c * c - s * s), -2.0 * k2 * s * c * d


def differential_casimir_coefficients(u: float, kappa: float, cfg: IntegratorConfig = DEFAULT_CONFIG,
                                      tol: float = 1e-9) -> tuple[float, float]:
    """Closed-form Casimir coefficients, after checking them against the generator expansion.

    Raises CasimirMismatch if the two computations differ by more than ``tol``.
    """
    state = integrate(u, kappa, cfg)
    expanded = casimir_from_generators(state)
    closed = casimir_closed_form(state.sn, state.cn, state.dn, kappa)
    gap = max(abs(a - b) for a, b in zip(expanded, closed))
    if gap > tol:
        raise CasimirMismatch(f"generator expansion and closed form differ by {gap:.3e} at u={u}")
    return closed
