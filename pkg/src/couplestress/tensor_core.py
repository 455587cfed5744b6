"""Exact second-order tensor and vector algebra in three dimensions.

Vectors are ``(3,)`` and tensors ``(3, 3)`` numpy arrays of ``dtype=object``
holding :class:`~fractions.Fraction` entries.  The projections (``sym``,
``skew``, ``dev``), ``axl``/``anti`` and ``cross`` only use ``+``, ``-`` and
scalar products, so they also accept arrays of :class:`~couplestress.poly.Poly`
entries and are reused unchanged by the field operators.

Index convention: ``X[i, j]`` is the ``i``-th traction component on the plane
with normal ``e_j``, so the traction on a plane is ``t = X @ n``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import as_fraction

__all__ = [
    "LEVI_CIVITA",
    "IDENTITY",
    "vec",
    "mat",
    "zero_vec",
    "zero_mat",
    "diag",
    "trace",
    "sym",
    "skew",
    "dev",
    "sph",
    "decompose",
    "axl",
    "anti",
    "cross",
    "dot",
    "inner",
    "norm2",
    "det",
    "is_zero",
    "is_symmetric",
    "is_antisymmetric",
    "is_rotation",
    "rotate_tensor",
    "NotAntisymmetricError",
    "NotRotationError",
]


class NotAntisymmetricError(ValueError):
    pass


class NotRotationError(ValueError):
    pass


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3), dtype=int)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1
        eps[i, k, j] = -1
    eps.flags.writeable = False
    return eps


LEVI_CIVITA = _levi_civita()


def vec(a1, a2=None, a3=None) -> np.ndarray:
    """Build an exact vector from three scalars or one length-3 sequence."""
    if a2 is None and a3 is None:
        a1, a2, a3 = a1
    return np.array([as_fraction(a1), as_fraction(a2), as_fraction(a3)], dtype=object)


def mat(rows) -> np.ndarray:
    out = np.empty((3, 3), dtype=object)
    rows = list(rows)
    if len(rows) != 3:
        raise ValueError("a 3x3 tensor needs three rows")
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != 3:
            raise ValueError("a 3x3 tensor needs three columns")
        for j, v in enumerate(row):
            out[i, j] = as_fraction(v)
    return out


def zero_vec() -> np.ndarray:
    return vec(0, 0, 0)


def zero_mat() -> np.ndarray:
    return mat([[0] * 3] * 3)


def diag(d1, d2, d3) -> np.ndarray:
    return mat([[d1, 0, 0], [0, d2, 0], [0, 0, d3]])


IDENTITY = diag(1, 1, 1)
IDENTITY.flags.writeable = False


def trace(X: np.ndarray):
    return X[0, 0] + X[1, 1] + X[2, 2]


def sym(X: np.ndarray) -> np.ndarray:
    return (X + X.T) * Fraction(1, 2)


def skew(X: np.ndarray) -> np.ndarray:
    return (X - X.T) * Fraction(1, 2)


def sph(X: np.ndarray) -> np.ndarray:
    """Spherical part ``tr(X)/3 * 1``."""
    t = trace(X) * Fraction(1, 3)
    out = np.empty((3, 3), dtype=object)
    for i in range(3):
        for j in range(3):
            out[i, j] = t if i == j else t * 0
    return out


def dev(X: np.ndarray) -> np.ndarray:
    return X - sph(X)


def decompose(X: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split ``X`` into (deviatoric symmetric, skew, spherical) parts.

    The three parts are mutually orthogonal and sum to ``X`` exactly.
    """
    return dev(sym(X)), skew(X), sph(X)


def is_zero(X) -> bool:
    return all(v == 0 for v in np.asarray(X, dtype=object).flat)


def is_symmetric(X: np.ndarray) -> bool:
    return is_zero(X - X.T)


def is_antisymmetric(X: np.ndarray) -> bool:
    return is_zero(X + X.T)


def axl(A: np.ndarray, check: bool = True) -> np.ndarray:
    """Axial vector ``a_k = -1/2 A_ij eps_ijk`` of an antisymmetric tensor.

    Satisfies ``A @ b == cross(axl(A), b)``.  With ``check=False`` the
    antisymmetric part is used implicitly (``axl(A) == axl(skew(A))``).
    """
    if check and not is_antisymmetric(A):
        raise NotAntisymmetricError("axl() needs an antisymmetric tensor")
    half = Fraction(1, 2)
    return np.array(
        [(A[2, 1] - A[1, 2]) * half, (A[0, 2] - A[2, 0]) * half, (A[1, 0] - A[0, 1]) * half],
        dtype=object,
    )


def anti(a: np.ndarray) -> np.ndarray:
    """Antisymmetric tensor ``A_ab = -eps_abk a_k``, the inverse of :func:`axl`."""
    zero = a[0] * 0
    out = np.empty((3, 3), dtype=object)
    out[0] = [zero, -a[2], a[1]]
    out[1] = [a[2], zero, -a[0]]
    out[2] = [-a[1], a[0], zero]
    return out


def cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.array(
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ],
        dtype=object,
    )


def dot(a: np.ndarray, b: np.ndarray):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def inner(X: np.ndarray, Y: np.ndarray):
    """Frobenius product ``tr(X Y^T)``."""
    total = X[0, 0] * Y[0, 0]
    for i in range(3):
        for j in range(3):
            if i or j:
                total = total + X[i, j] * Y[i, j]
    return total


def norm2(X: np.ndarray):
    """Squared Frobenius norm (exact, so no square root is taken)."""
    return inner(X, X)


def det(X: np.ndarray):
    return (
        X[0, 0] * (X[1, 1] * X[2, 2] - X[1, 2] * X[2, 1])
        - X[0, 1] * (X[1, 0] * X[2, 2] - X[1, 2] * X[2, 0])
        + X[0, 2] * (X[1, 0] * X[2, 1] - X[1, 1] * X[2, 0])
    )


def is_rotation(Q: np.ndarray) -> bool:
    return is_zero(Q.T @ Q - IDENTITY) and det(Q) == 1


def rotate_tensor(Q: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Components ``Q X Q^T`` of ``X`` in the basis rotated by ``Q``."""
    if not is_rotation(Q):
        raise NotRotationError("Q must satisfy Q^T Q = 1 and det Q = +1 exactly")
    return Q @ X @ Q.T
