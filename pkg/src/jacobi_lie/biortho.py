"""Auerbach bi-orthogonal system in C^2 and the deformed so(2,1) generators.

The generators are produced two ways: as a sum of outer products
``|phi_j><chi_k|`` weighted by a fixed coefficient table, and directly from
their closed-form matrices. The two must agree, which is checked in the tests
and by ``jacobi-lie verify``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .algebra2 import (
    DEFAULT_TOL,
    IDENTITY,
    Mat2C,
    Vec2C,
    adjugate,
    commutator,
    dagger,
    inverse,
    mat_norm,
    matmul,
    matvec,
    outer,
)
from .errors import DegenerateSystem, OutOfRange

TOL_DEGENERATE = 1e-9
DEFAULT_PHI_ANGLE = -math.pi

# halved Pauli matrices
SIGMA1 = Mat2C(0, 0.5, 0.5, 0)
SIGMA2 = Mat2C(0, -0.5j, 0.5j, 0)

_R2 = 1.0 / math.sqrt(2.0)
BASE_VECTORS = (Vec2C(_R2, _R2), Vec2C(_R2, -_R2))


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def levi_civita(j: int, k: int, l: int) -> int:
    """Permutation symbol on indices 1..3."""
    return (j - k) * (k - l) * (l - j) // 2


def _alpha(m: int, j: int, k: int) -> complex:
    if m == 1:
        return -1j * (1 - _delta(j, k))
    if m == 2:
        return (-1) ** (j - 1) * _delta(j, k)
    if m == 3:
        return 1j * (-1) ** (j - 1) * (1 - _delta(j, k))
    raise IndexError(m)


# ALPHA[m-1][j-1][k-1]
ALPHA: tuple[tuple[tuple[complex, ...], ...], ...] = tuple(
    tuple(tuple(complex(_alpha(m, j, k)) for k in (1, 2)) for j in (1, 2))
    for m in (1, 2, 3)
)


def transform_matrix(theta: float, phi_angle: float = DEFAULT_PHI_ANGLE) -> Mat2C:
    """Hermitian transform ``cos(t/2) 1 + 2 sin(t/2) (cos(p/2) s1 - sin(p/2) s2)``.

    Its determinant is ``cos(theta)`` for every ``phi_angle``.
    """
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    return (IDENTITY * c
            + SIGMA1 * (2 * math.cos(phi_angle / 2) * s)
            - SIGMA2 * (2 * math.sin(phi_angle / 2) * s))


def displayed_phi(theta: float, j: int) -> Vec2C:
    """Closed form ``(e^{-i(3/2-j)t}, (-1)^{j-1} e^{i(3/2-j)t}) / sqrt 2``."""
    a = (1.5 - j) * theta
    return Vec2C(_R2 * cmath.exp(-1j * a), (-1) ** (j - 1) * _R2 * cmath.exp(1j * a))


def displayed_chi(theta: float, j: int) -> Vec2C:
    """Closed form ``(e^{i(3/2-j)t}, (-1)^{j-1} e^{-i(3/2-j)t}) / sqrt 2``."""
    a = (1.5 - j) * theta
    return Vec2C(_R2 * cmath.exp(1j * a), (-1) ** (j - 1) * _R2 * cmath.exp(-1j * a))


@dataclass(frozen=True)
class BiorthoSystem:
    """Base vectors ``v``, their images ``phi = T v`` and the partners ``chi``.

    ``chi`` follows the unnormalized convention ``<phi_j|chi_k> = omega delta_jk``;
    :meth:`dual_chi` gives the strictly dual family with unit overlaps.
    """

    theta: float
    phi_angle: float
    omega: float
    gamma: float
    transform: Mat2C
    v: tuple[Vec2C, Vec2C]
    phi: tuple[Vec2C, Vec2C]
    chi: tuple[Vec2C, Vec2C]

    def dual_chi(self) -> tuple[Vec2C, Vec2C]:
        """``(T^{-1})^dagger v_j``, satisfying ``<phi_j|chi_k> = delta_jk``."""
        t_inv_dag = dagger(inverse(self.transform, tol=TOL_DEGENERATE))
        return tuple(matvec(t_inv_dag, vj) for vj in self.v)


def build_biortho(theta: float, phi_angle: float = DEFAULT_PHI_ANGLE,
                  tol_degenerate: float = TOL_DEGENERATE) -> BiorthoSystem:
    omega = math.cos(theta)
    if abs(omega) <= tol_degenerate:
        raise DegenerateSystem(
            f"|cos theta| = {abs(omega):.3e} <= {tol_degenerate:.1e}: "
            "bi-orthogonality fails at |gamma| = 1")
    t = transform_matrix(theta, phi_angle)
    # adj(T)^dagger = det(T) (T^{-1})^dagger; avoids dividing by omega here
    t_adj_dag = dagger(adjugate(t))
    phi = tuple(matvec(t, vj) for vj in BASE_VECTORS)
    chi = tuple(matvec(t_adj_dag, vj) for vj in BASE_VECTORS)
    return BiorthoSystem(theta=theta, phi_angle=phi_angle, omega=omega,
                         gamma=math.sin(theta), transform=t, v=BASE_VECTORS,
                         phi=phi, chi=chi)


@dataclass(frozen=True)
class GeneratorTriple:
    t1: Mat2C
    t2: Mat2C
    t3: Mat2C
    gamma: float

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))

    def __getitem__(self, m: int) -> Mat2C:
        """1-based access matching the generator labels."""
        return (self.t1, self.t2, self.t3)[m - 1]


def build_generators(sys: BiorthoSystem) -> GeneratorTriple:
    """Operator-sum construction from the bi-orthogonal vectors."""
    if abs(sys.omega) <= TOL_DEGENERATE:
        raise DegenerateSystem("omega vanishes; cannot normalize the third generator")
    mats = []
    for m in (1, 2, 3):
        scale = 0.5 / (sys.omega if m == 3 else 1.0)
        acc = Mat2C(0, 0, 0, 0)
        for j in (1, 2):
            for k in (1, 2):
                a = ALPHA[m - 1][j - 1][k - 1]
                if a:
                    acc = acc + outer(sys.phi[j - 1], sys.chi[k - 1]) * a
        mats.append(acc * scale)
    return GeneratorTriple(*mats, gamma=sys.gamma)


def explicit_generators(gamma: float) -> GeneratorTriple:
    if not abs(gamma) <= 1.0:
        raise OutOfRange(f"|gamma| = {abs(gamma)} exceeds 1")
    g = float(gamma)
    return GeneratorTriple(
        t1=Mat2C(-0.5j, 0.5 * g, 0.5 * g, 0.5j),
        t2=Mat2C(-0.5j * g, 0.5, 0.5, 0.5j * g),
        t3=Mat2C(0, -0.5j, 0.5j, 0),
        gamma=g,
    )


def structure_coefficient(j: int, k: int, l: int, gamma: float) -> float:
    """Coefficient of ``T_l`` in ``[T_j, T_k]``."""
    sign = -1.0 if l == 1 else 1.0
    deform = 1.0 - gamma * gamma if l == 3 else 1.0
    return sign * deform * levi_civita(j, k, l)


@dataclass
class PairResidual:
    j: int
    k: int
    predicted_coeffs: list[float]
    residual: float


@dataclass
class StructureReport:
    gamma: float
    tol: float
    pairs: list[PairResidual] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((p.residual for p in self.pairs), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def coefficient(self, j: int, k: int, l: int) -> float:
        for p in self.pairs:
            if (p.j, p.k) == (j, k):
                return p.predicted_coeffs[l - 1]
        raise KeyError((j, k))

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "pairs": [
                {"j": p.j, "k": p.k, "predicted_coeffs": list(p.predicted_coeffs),
                 "residual": p.residual}
                for p in self.pairs
            ],
            "max_residual": self.max_residual,
            "pass": self.passed,
        }


def verify_structure_constants(g: GeneratorTriple, tol: float = DEFAULT_TOL) -> StructureReport:
    """Residual of ``[T_j, T_k] - sum_l c_jkl T_l`` for every ordered pair ``j != k``."""
    report = StructureReport(gamma=g.gamma, tol=tol)
    for j in (1, 2, 3):
        for k in (1, 2, 3):
            if j == k:
                continue
            coeffs = [structure_coefficient(j, k, l, g.gamma) for l in (1, 2, 3)]
            predicted = Mat2C(0, 0, 0, 0)
            for l, c in zip((1, 2, 3), coeffs):
                if c:
                    predicted = predicted + g[l] * c
            residual = mat_norm(commutator(g[j], g[k]) - predicted)
            report.pairs.append(PairResidual(j, k, coeffs, residual))
    return report


def matrix_casimir(g: GeneratorTriple) -> Mat2C:
    """``T1^2 - T2^2 - (1 - gamma^2) T3^2``."""
    return (matmul(g.t1, g.t1) - matmul(g.t2, g.t2)
            - matmul(g.t3, g.t3) * (1.0 - g.gamma ** 2))
