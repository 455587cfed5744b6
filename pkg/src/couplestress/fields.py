"""Polynomial scalar, vector and tensor fields and their differential operators.

Fields are numpy object arrays of :class:`Poly` with shape ``()`` (scalar,
stored as a bare ``Poly``), ``(3,)``, ``(3, 3)`` or ``(3, 3, 3)``.  Operators
follow the usual component conventions::

    (Grad b)_ij = b_i,j        (GRAD X)_ijk = X_ij,k
    (Div X)_i   = X_ij,j       (DIV m)_ij   = m_ijk,k
    curl v      = -v_a,b eps_abi e_i
    (Curl X)_ij = -X_ia,b eps_abj

so that ``curl v == 2 axl(skew(Grad v))`` and ``(curl v)_3 = v_2,1 - v_1,2``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .poly import Poly, as_fraction
from .tensor_core import LEVI_CIVITA, NotRotationError, is_rotation

__all__ = [
    "X1",
    "X2",
    "X3",
    "position",
    "as_field",
    "zero_field",
    "constant_field",
    "field_degree",
    "evaluate",
    "partial",
    "grad_scalar",
    "grad_vector",
    "grad_tensor",
    "div_vector",
    "div_tensor",
    "div_third",
    "curl_vector",
    "curl_tensor",
    "laplacian",
    "shift_field",
    "compose_linear",
    "pushforward_rotation",
    "fields_equal",
]

X1, X2, X3 = Poly.variables()


def position() -> np.ndarray:
    """The identity field ``x -> x``."""
    return np.array([X1, X2, X3], dtype=object)


def _to_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.constant(as_fraction(v))


def as_field(entries, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Convert nested sequences of polys/scalars into an object array of Poly."""
    arr = np.array(entries, dtype=object)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected field of shape {shape}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = _to_poly(arr[idx])
    return out


def zero_field(shape: tuple[int, ...]) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(shape):
        out[idx] = Poly.zero()
    return out


def constant_field(values) -> np.ndarray:
    return as_field(values)


def field_degree(F) -> int:
    if isinstance(F, Poly):
        return F.degree
    return max((p.degree for p in np.asarray(F).flat), default=-1)


def _map(F, fn):
    if isinstance(F, Poly):
        return fn(F)
    out = np.empty(F.shape, dtype=object)
    for idx in np.ndindex(F.shape):
        out[idx] = fn(F[idx])
    return out


def evaluate(F, point: Sequence):
    """Evaluate a field at a rational point; returns a Fraction or Fraction array."""
    pt = [as_fraction(v) for v in point]
    return _map(F, lambda p: p.evaluate(pt))


def partial(F, axis: int, order: int = 1):
    return _map(F, lambda p: p.diff(axis, order))


def _grad(F: np.ndarray) -> np.ndarray:
    return np.stack([partial(F, k) for k in range(3)], axis=-1)


def grad_scalar(phi: Poly) -> np.ndarray:
    return np.array([phi.diff(k) for k in range(3)], dtype=object)


def grad_vector(b: np.ndarray) -> np.ndarray:
    return _grad(b)


def grad_tensor(X: np.ndarray) -> np.ndarray:
    return _grad(X)


def _div_last(F: np.ndarray):
    """Contract the last index with the derivative index."""
    out = np.empty(F.shape[:-1], dtype=object)
    for idx in np.ndindex(out.shape):
        acc = Poly.zero()
        for k in range(3):
            acc = acc + F[idx + (k,)].diff(k)
        out[idx] = acc
    return out


def div_vector(b: np.ndarray) -> Poly:
    return b[0].diff(0) + b[1].diff(1) + b[2].diff(2)


def div_tensor(X: np.ndarray) -> np.ndarray:
    return _div_last(X)


def div_third(m: np.ndarray) -> np.ndarray:
    return _div_last(m)


def curl_vector(v: np.ndarray) -> np.ndarray:
    return np.array(
        [
            v[2].diff(1) - v[1].diff(2),
            v[0].diff(2) - v[2].diff(0),
            v[1].diff(0) - v[0].diff(1),
        ],
        dtype=object,
    )


def curl_tensor(X: np.ndarray) -> np.ndarray:
    """Row-wise curl, ``(Curl X)_ij = -X_ia,b eps_abj``."""
    out = zero_field((3, 3))
    for i in range(3):
        for j in range(3):
            acc = Poly.zero()
            for a in range(3):
                for b in range(3):
                    e = LEVI_CIVITA[a, b, j]
                    if e:
                        acc = acc - X[i, a].diff(b) * int(e)
            out[i, j] = acc
    return out


def laplacian(F):
    return _map(F, lambda p: p.diff(0, 2) + p.diff(1, 2) + p.diff(2, 2))


def shift_field(F, offset: Sequence):
    """Re-express ``F`` in coordinates centred at ``offset``: ``G(d) = F(offset + d)``."""
    return _map(F, lambda p: p.shift(offset))


def compose_linear(F, M: np.ndarray):
    """Return ``G`` with ``G(xi) = F(M @ xi)`` for a constant matrix ``M``."""
    images = [
        X1 * M[i, 0] + X2 * M[i, 1] + X3 * M[i, 2]
        for i in range(3)
    ]
    return _map(F, lambda p: p.compose(images))


def pushforward_rotation(X: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Rotated components of a tensor field: ``xi -> Q X(Q^T xi) Q^T``."""
    if not is_rotation(Q):
        raise NotRotationError("Q must be an exact rotation")
    Y = compose_linear(X, Q.T)
    return Q @ Y @ Q.T


def fields_equal(F, G) -> bool:
    if isinstance(F, Poly) or isinstance(G, Poly):
        return F == G
    F, G = np.asarray(F, dtype=object), np.asarray(G, dtype=object)
    if F.shape != G.shape:
        return False
    return all(a == b for a, b in zip(F.flat, G.flat))
