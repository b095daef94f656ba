"""Incomplete elliptic integrals of the first kind and their inversion.

All three inverse functions reduce, after a trigonometric change of variable,
to an amplitude integral ``int_0^phi (1 - k^2 sin^2 t)^(-1/2) dt`` whose
integrand is smooth, so the inverse-square-root endpoint singularities never
reach the quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError

# Gauss-Kronrod 7/15 on [-1, 1]: Kronrod abscissae (positive half, descending)
# and weights; the Gauss points are the odd-indexed Kronrod abscissae.
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-14
    max_depth: int = 30

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_QUAD = QuadratureConfig()


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = h * _XK[i]
        s = f(c - dx) + f(c + dx)
        kron += _WK[i] * s
        if i % 2 == 1:
            gauss += _WG[i // 2] * s
    return kron * h, abs((kron - gauss) * h)


def integrate(f, a: float, b: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> tuple[float, float]:
    """Adaptive Gauss-Kronrod quadrature by recursive bisection.

    Returns ``(value, error_estimate)``. A panel is accepted once its
    Kronrod-Gauss difference is below its share of the tolerance.
    """
    if a == b:
        return 0.0, 0.0
    whole, err = _gk15(f, a, b)
    tol = max(cfg.abs_tol, cfg.rel_tol * abs(whole))
    span = b - a

    def refine(lo, hi, val, e, depth):
        if e <= tol * (hi - lo) / span:
            return val, e
        if depth >= cfg.max_depth:
            raise ConvergenceError(f"quadrature on [{lo}, {hi}] exceeded depth {cfg.max_depth}")
        mid = 0.5 * (lo + hi)
        lv, le = _gk15(f, lo, mid)
        rv, re = _gk15(f, mid, hi)
        lv, le = refine(lo, mid, lv, le, depth + 1)
        rv, re = refine(mid, hi, rv, re, depth + 1)
        return lv + rv, le + re

    return refine(a, b, whole, err, 0)


def _check_kappa(kappa: float, allow_zero: bool = True) -> None:
    lo_ok = kappa >= 0.0 if allow_zero else kappa > 0.0
    if not (lo_ok and kappa < 1.0):
        raise DomainError(f"modulus kappa={kappa} outside {'[0' if allow_zero else '(0'}, 1)")


def amplitude_integral(phi: float, kappa: float,
                       cfg: QuadratureConfig = DEFAULT_QUAD) -> tuple[float, float]:
    """``int_0^phi (1 - kappa^2 sin^2 t)^(-1/2) dt`` with its error estimate."""
    k2 = kappa * kappa
    if k2 == 0.0:
        return phi, 0.0
    return integrate(lambda t: 1.0 / math.sqrt(1.0 - k2 * math.sin(t) ** 2), 0.0, phi, cfg)


def _check_unit(x: float, name: str) -> None:
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"{name} argument {x} outside [-1, 1]")


def asn(x: float, kappa: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Inverse sn: ``int_0^x [(1-t^2)(1-k^2 t^2)]^(-1/2) dt`` via ``t = sin s``."""
    _check_unit(x, "asn")
    _check_kappa(kappa)
    return amplitude_integral(math.asin(x), kappa, cfg)[0]


def acn(x: float, kappa: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Inverse cn on the branch ``[0, 2K]``.

    ``int_x^1 [(1-t^2)(1-k^2+k^2 t^2)]^(-1/2) dt`` via ``t = cos s``.
    """
    _check_unit(x, "acn")
    _check_kappa(kappa)
    return amplitude_integral(math.acos(x), kappa, cfg)[0]


def adn(x: float, kappa: float, cfg: QuadratureConfig = DEFAULT_QUAD,
        paper_literal: bool = False) -> float:
    """Inverse dn on ``[sqrt(1-k^2), 1]``.

    Standard form ``int_x^1 [(1-t^2)(t^2-(1-k^2))]^(-1/2) dt``, evaluated with
    ``t^2 = 1 - k^2 sin^2 s``. With ``paper_literal=True`` the integrand
    ``[(1-t^2)(1+k^2 t^2)]^(-1/2)`` is used instead (``t = cos s``); it is not
    an inverse of dn and exists only to measure that discrepancy.
    """
    if paper_literal:
        _check_unit(x, "adn")
        _check_kappa(kappa)
        k2 = kappa * kappa
        return integrate(lambda s: 1.0 / math.sqrt(1.0 + k2 * math.cos(s) ** 2),
                         0.0, math.acos(x), cfg)[0]
    _check_kappa(kappa, allow_zero=False)
    kc = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    if not kc <= x <= 1.0:
        raise DomainError(f"adn argument {x} outside [{kc}, 1]")
    # kappa sin s = sqrt(1 - x^2), kappa cos s = sqrt(x^2 - kc^2); atan2 keeps
    # full precision where asin would lose half the digits near s = pi/2
    amp = math.atan2(math.sqrt((1.0 - x) * (1.0 + x)), math.sqrt((x - kc) * (x + kc)))
    return amplitude_integral(amp, kappa, cfg)[0]


@lru_cache(maxsize=256)
def complete_K(kappa: float) -> float:
    """Quarter period ``K = asn(1, kappa)``."""
    if not 0.0 <= kappa < 1.0:
        raise DomainError(f"complete_K diverges or is undefined at kappa={kappa}")
    return asn(1.0, kappa)


def bracketed_root(f, lo: float, hi: float, xtol: float = 1e-15,
                   bisect_first: int = 4, max_iter: int = 200,
                   endpoint_tol: float = 0.0) -> float:
    """Root of a monotone ``f`` on ``[lo, hi]``: bisection seed, then safeguarded secant.

    The secant runs on the two most recent iterates. A candidate outside the
    bracket, or three steps that fail to halve the bracket, force bisection.
    An endpoint whose ``|f|`` is within ``endpoint_tol`` is accepted as the
    root even when rounding leaves the bracket without a sign change.
    """
    flo, fhi = f(lo), f(hi)
    if abs(flo) <= endpoint_tol:
        return lo
    if abs(fhi) <= endpoint_tol:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError(f"root not bracketed on [{lo}, {hi}]")
    prev, fprev = lo, flo
    cur, fcur = hi, fhi
    checkpoint = hi - lo
    for it in range(max_iter):
        x = 0.5 * (lo + hi)
        if it >= bisect_first and fcur != fprev:
            sec = cur - fcur * (cur - prev) / (fcur - fprev)
            if lo < sec < hi:
                x = sec
        if it % 3 == 2:
            if hi - lo > 0.5 * checkpoint:
                x = 0.5 * (lo + hi)
            checkpoint = hi - lo
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        prev, fprev, cur, fcur = cur, fcur, x, fx
        if hi - lo <= xtol * max(1.0, abs(x)) or abs(fx) <= 1e-16 * max(1.0, abs(x)):
            return lo if abs(flo) < abs(fhi) else hi
    raise ConvergenceError(f"root finding did not converge on [{lo}, {hi}]")


# quadrature rounding at the branch ends
_END_TOL = 1e-13


def invert_asn(u: float, kappa: float) -> float:
    """sn by inverting the integral: the ``x`` in ``[0, 1]`` with ``asn(x) = u``."""
    K = complete_K(kappa)
    if not 0.0 <= u <= K * (1 + 1e-15):
        raise DomainError(f"invert_asn needs 0 <= u <= K={K}, got {u}")
    if u == 0.0:
        return 0.0
    return bracketed_root(lambda x: asn(x, kappa) - u, 0.0, 1.0, endpoint_tol=_END_TOL)


def invert_acn(u: float, kappa: float) -> float:
    """cn on ``[0, 2K]`` by inverting the decreasing ``acn``."""
    K = complete_K(kappa)
    if not 0.0 <= u <= 2 * K * (1 + 1e-15):
        raise DomainError(f"invert_acn needs 0 <= u <= 2K={2 * K}, got {u}")
    if u == 0.0:
        return 1.0
    return bracketed_root(lambda x: acn(x, kappa) - u, -1.0, 1.0, endpoint_tol=_END_TOL)


def invert_adn(u: float, kappa: float) -> float:
    """dn on ``[0, K]`` by inverting ``adn``; ``kappa = 0`` gives 1."""
    if kappa == 0.0:
        return 1.0
    K = complete_K(kappa)
    if not 0.0 <= u <= K * (1 + 1e-15):
        raise DomainError(f"invert_adn needs 0 <= u <= K={K}, got {u}")
    if u == 0.0:
        return 1.0
    kc = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    return bracketed_root(lambda x: adn(x, kappa) - u, kc, 1.0, endpoint_tol=_END_TOL)


def jacobi_integral(u: float, kappa: float) -> tuple[float, float, float]:
    """(sn, cn, dn) for any real ``u`` from the three integral inversions.

    ``u`` is folded into the fundamental intervals with the quarter-period
    symmetries before inverting.
    """
    _check_kappa(kappa)
    if not math.isfinite(u):
        raise DomainError(f"argument must be finite, got {u}")
    sign = -1.0 if u < 0 else 1.0
    K = complete_K(kappa)
    r = math.fmod(abs(u), 4 * K)

    half = r - 2 * K if r > 2 * K else r
    s = invert_asn(min(half, 2 * K - half), kappa)
    if r > 2 * K:
        s = -s
    c = invert_acn(r if r <= 2 * K else 4 * K - r, kappa)
    r2 = math.fmod(r, 2 * K)
    d = invert_adn(min(r2, 2 * K - r2), kappa)
    return sign * s, c, d
