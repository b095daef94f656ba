import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_lie.algebra2 import (
    IDENTITY,
    ZERO,
    Mat2C,
    Vec2C,
    allclose,
    commutator,
    dagger,
    inner,
    inverse,
    mat_norm,
    matmul,
)
from jacobi_lie.biortho import SIGMA1, SIGMA2, explicit_generators, transform_matrix
from jacobi_lie.errors import SingularMatrix

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
scalars = st.builds(complex, finite, finite)
vectors = st.builds(Vec2C, scalars, scalars)
matrices = st.builds(Mat2C, scalars, scalars, scalars, scalars)
unit = st.floats(min_value=-1, max_value=1, allow_nan=False)
unit_matrices = st.builds(Mat2C, *[st.builds(complex, unit, unit)] * 4)
# dyadic rationals: products and sums stay exact in binary floating point
dyadic = st.integers(-64, 64).map(lambda n: n / 8)
exact_matrices = st.builds(Mat2C, *[st.builds(complex, dyadic, dyadic)] * 4)


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        Mat2C(float("nan"), 0, 0, 0)
    with pytest.raises(ValueError):
        Vec2C(0, complex(0, math.inf))


def test_inner_examples():
    assert inner(Vec2C(1, 0), Vec2C(1, 0)) == 1
    r = 2 ** -0.5
    assert abs(inner(Vec2C(r, r), Vec2C(r, -r))) < 1e-15
    assert inner(Vec2C(1j, 0), Vec2C(1, 0)) == -1j


def test_matmul_examples():
    a = Mat2C(1 + 2j, 3, -1j, 0.5)
    assert matmul(IDENTITY, a) == a
    assert allclose(matmul(SIGMA1, SIGMA2), Mat2C(0.25j, 0, 0, -0.25j), 1e-15)
    t = transform_matrix(1.1, 0.4)
    assert allclose(matmul(t, inverse(t)), IDENTITY, 1e-12)


def test_commutator_examples():
    a = Mat2C(1 + 2j, 3, -1j, 0.5)
    assert commutator(a, a) == ZERO
    assert commutator(IDENTITY, a) == ZERO
    g = explicit_generators(0.5)
    assert mat_norm(commutator(g.t1, g.t2) - g.t3 * (1 - 0.25)) < 1e-12


def test_inverse_and_singular():
    t = transform_matrix(math.pi / 3, -math.pi)
    assert abs(t.det() - 0.5) < 1e-12
    assert allclose(matmul(inverse(t), t), IDENTITY)
    with pytest.raises(SingularMatrix):
        inverse(transform_matrix(math.pi / 2, -math.pi))


def test_predicates():
    assert transform_matrix(0.7, 1.3).is_hermitian()
    assert not explicit_generators(0.3).t1.is_hermitian()
    assert IDENTITY.is_invertible()
    assert not Mat2C(1, 2, 2, 4).is_invertible()


@given(matrices)
def test_dagger_involution(a):
    assert dagger(dagger(a)) == a


@given(unit_matrices, unit_matrices, unit_matrices)
@settings(max_examples=300)
def test_jacobi_identity(a, b, c):
    s = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
         + commutator(c, commutator(a, b)))
    assert mat_norm(s) < 1e-12


@given(exact_matrices, exact_matrices)
def test_antisymmetry_exact(a, b):
    assert mat_norm(commutator(a, b) + commutator(b, a)) < 1e-15


@given(vectors, vectors)
def test_inner_hermitian_symmetry(u, v):
    assert abs(inner(u, v) - inner(v, u).conjugate()) <= 1e-15 * max(1.0, abs(inner(u, v)))


@given(vectors, scalars)
def test_inner_sesquilinear(u, s):
    assert inner(u, u).imag == 0 and inner(u, u).real >= 0
    v = Vec2C(1 - 2j, 0.5)
    lhs = inner(u * s, v)
    assert abs(lhs - s.conjugate() * inner(u, v)) <= 1e-12 * max(1.0, abs(lhs))
