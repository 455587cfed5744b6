from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from couplestress.tensor_core import (
    IDENTITY,
    LEVI_CIVITA,
    NotAntisymmetricError,
    NotRotationError,
    anti,
    axl,
    cross,
    decompose,
    det,
    dev,
    diag,
    dot,
    inner,
    is_antisymmetric,
    is_rotation,
    is_symmetric,
    is_zero,
    mat,
    norm2,
    rotate_tensor,
    skew,
    sph,
    sym,
    trace,
    vec,
)

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)
vectors = st.lists(small, min_size=3, max_size=3).map(vec)
matrices = st.lists(small, min_size=9, max_size=9).map(lambda v: mat([v[0:3], v[3:6], v[6:9]]))

Q345 = mat([[Fraction(3, 5), Fraction(-4, 5), 0], [Fraction(4, 5), Fraction(3, 5), 0], [0, 0, 1]])


def eq(a, b):
    return all(x == y for x, y in zip(np.asarray(a).flat, np.asarray(b).flat))


def test_decompose_worked_example():
    dsym, sk, sp_ = decompose(mat([[1, 2, 0], [0, 1, 0], [0, 0, 1]]))
    assert eq(dsym, mat([[0, 1, 0], [1, 0, 0], [0, 0, 0]]))
    assert eq(sk, mat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
    assert eq(sp_, IDENTITY)


def test_decompose_identity_and_antisymmetric():
    d, s, p = decompose(IDENTITY)
    assert is_zero(d) and is_zero(s) and eq(p, IDENTITY)
    A = anti(vec(1, 2, 3))
    d, s, p = decompose(A)
    assert is_zero(d) and is_zero(p) and eq(s, A)


def test_axl_anti_pair():
    A = mat([[0, -3, 2], [3, 0, -1], [-2, 1, 0]])
    assert eq(axl(A), vec(1, 2, 3))
    assert eq(anti(vec(1, 2, 3)), A)
    assert is_zero(axl(mat([[0] * 3] * 3)))
    assert is_zero(anti(vec(0, 0, 0)))


def test_axl_rejects_symmetric_input():
    with pytest.raises(NotAntisymmetricError):
        axl(IDENTITY)


def test_cross_examples():
    assert eq(cross(vec(1, 0, 0), vec(0, 1, 0)), vec(0, 0, 1))
    assert is_zero(cross(vec(1, 2, 3), vec(1, 2, 3)))
    assert eq(cross(vec(1, 2, 3), vec(4, 5, 6)), vec(-3, 6, -3))


def test_rotate_tensor_examples():
    X = mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert eq(rotate_tensor(IDENTITY, X), X)
    out = rotate_tensor(Q345, diag(1, 0, 0))
    F = Fraction
    assert eq(out, mat([[F(9, 25), F(12, 25), 0], [F(12, 25), F(16, 25), 0], [0, 0, 0]]))


def test_rotate_tensor_rejects_non_rotation():
    with pytest.raises(NotRotationError):
        rotate_tensor(diag(1, 1, -1), IDENTITY)
    assert is_rotation(Q345) and not is_rotation(diag(2, 1, 1))


def test_levi_civita_entries():
    assert LEVI_CIVITA[0, 1, 2] == 1 and LEVI_CIVITA[1, 0, 2] == -1 and LEVI_CIVITA[0, 0, 1] == 0


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_decomposition_sums_back(X):
    d, s, p = decompose(X)
    assert eq(d + s + p, X)
    assert trace(d) == 0 and is_symmetric(d) and is_antisymmetric(s)
    assert eq(sym(X), d + p) and eq(dev(X) + sph(X), X)
    assert inner(d, s) == 0 and inner(s, p) == 0 and inner(d, p) == 0


@settings(max_examples=60, deadline=None)
@given(vectors, vectors)
def test_anti_is_cross(a, b):
    assert eq(anti(a) @ b, cross(a, b))
    assert eq(axl(anti(a)), a)
    assert dot(cross(a, b), a) == 0


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_skew_axl_round_trip(X):
    S = skew(X)
    assert eq(anti(axl(S)), S)
    assert norm2(X) == inner(X, X)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rotation_keeps_trace_and_det(X):
    Y = rotate_tensor(Q345, X)
    assert trace(Y) == trace(X) and det(Y) == det(X)
