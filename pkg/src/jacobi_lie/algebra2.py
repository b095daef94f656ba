"""Closed-form complex 2x2 linear algebra.

Scalars are plain Python ``complex`` values. Vectors and matrices are small
immutable dataclasses; every constructor rejects NaN/Inf entries so that no
non-finite value can leak into the algebraic checks built on top.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import SingularMatrix

DEFAULT_TOL = 1e-12

ComplexScalar = complex


def _finite(*values: complex) -> None:
    for z in values:
        if not cmath.isfinite(z):
            raise ValueError(f"non-finite entry {z!r}")


@dataclass(frozen=True)
class Vec2C:
    c1: complex
    c2: complex

    def __post_init__(self):
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        _finite(self.c1, self.c2)

    def __add__(self, other: Vec2C) -> Vec2C:
        return Vec2C(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Vec2C) -> Vec2C:
        return Vec2C(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, s: complex) -> Vec2C:
        return Vec2C(s * self.c1, s * self.c2)

    __rmul__ = __mul__

    def norm(self) -> float:
        """Max absolute component."""
        return max(abs(self.c1), abs(self.c2))


@dataclass(frozen=True)
class Mat2C:
    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        _finite(self.a11, self.a12, self.a21, self.a22)

    @classmethod
    def from_rows(cls, rows) -> Mat2C:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __add__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.a11 + other.a11, self.a12 + other.a12,
                     self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.a11 - other.a11, self.a12 - other.a12,
                     self.a21 - other.a21, self.a22 - other.a22)

    def __neg__(self) -> Mat2C:
        return Mat2C(-self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, s: complex) -> Mat2C:
        return Mat2C(s * self.a11, s * self.a12, s * self.a21, s * self.a22)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Vec2C):
            return matvec(self, other)
        return matmul(self, other)

    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> complex:
        return self.a11 + self.a22

    def is_hermitian(self, tol: float = DEFAULT_TOL) -> bool:
        return mat_norm(self - dagger(self)) <= tol

    def is_invertible(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.det()) > tol


IDENTITY = Mat2C(1, 0, 0, 1)
ZERO = Mat2C(0, 0, 0, 0)


def inner(u: Vec2C, v: Vec2C) -> complex:
    """Inner product, conjugate-linear in the first slot."""
    return u.c1.conjugate() * v.c1 + u.c2.conjugate() * v.c2


def outer(u: Vec2C, v: Vec2C) -> Mat2C:
    """The operator |u><v|."""
    v1, v2 = v.c1.conjugate(), v.c2.conjugate()
    return Mat2C(u.c1 * v1, u.c1 * v2, u.c2 * v1, u.c2 * v2)


def matvec(a: Mat2C, v: Vec2C) -> Vec2C:
    return Vec2C(a.a11 * v.c1 + a.a12 * v.c2, a.a21 * v.c1 + a.a22 * v.c2)


def matmul(a: Mat2C, b: Mat2C) -> Mat2C:
    return Mat2C(
        a.a11 * b.a11 + a.a12 * b.a21,
        a.a11 * b.a12 + a.a12 * b.a22,
        a.a21 * b.a11 + a.a22 * b.a21,
        a.a21 * b.a12 + a.a22 * b.a22,
    )


def commutator(a: Mat2C, b: Mat2C) -> Mat2C:
    """Lie bracket ``ab - ba``."""
    return matmul(a, b) - matmul(b, a)


def dagger(a: Mat2C) -> Mat2C:
    return Mat2C(a.a11.conjugate(), a.a21.conjugate(),
                 a.a12.conjugate(), a.a22.conjugate())


def adjugate(a: Mat2C) -> Mat2C:
    return Mat2C(a.a22, -a.a12, -a.a21, a.a11)


def inverse(a: Mat2C, tol: float = DEFAULT_TOL) -> Mat2C:
    """Adjugate inverse; raises SingularMatrix when ``|det| <= tol``."""
    d = a.det()
    if abs(d) <= tol:
        raise SingularMatrix(f"|det| = {abs(d):.3e} <= {tol:.3e}")
    return adjugate(a) * (1.0 / d)


def mat_norm(a: Mat2C) -> float:
    """Max absolute entry; the norm used for every approximate comparison."""
    return max(abs(a.a11), abs(a.a12), abs(a.a21), abs(a.a22))


def allclose(a: Mat2C, b: Mat2C, tol: float = DEFAULT_TOL) -> bool:
    return mat_norm(a - b) <= tol
