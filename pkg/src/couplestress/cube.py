"""Exact integration over an axis-aligned cube and its six faces.

Faces are numbered by their outward normals::

    1: +e1   2: +e2   3: +e3   4: -e1   5: -e2   6: -e3

Every integral is computed by exact monomial antidifferentiation, so results
are Fractions and identities between them can be asserted with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .fields import X1, X2, X3, div_tensor
from .poly import Poly, as_fraction
from .tensor_core import axl, cross, skew, vec, zero_vec

__all__ = [
    "Cube",
    "Face",
    "FACES",
    "face",
    "integrate_face",
    "integrate_volume",
    "integrate_face_field",
    "integrate_volume_field",
    "face_traction",
    "face_traction_sum",
    "face_couple_about_face_center",
    "face_couples",
    "face_couple_about_cube_center",
    "moment_about",
    "divergence_theorem_cross_check",
]


@dataclass(frozen=True)
class Cube:
    """Cube with centre ``x0`` and edge length ``edge`` (the cube length L_c)."""

    center: tuple[Fraction, Fraction, Fraction]
    edge: Fraction

    def __init__(self, center: Sequence = (0, 0, 0), edge=1):
        c = tuple(as_fraction(v) for v in center)
        if len(c) != 3:
            raise ValueError("cube centre needs three coordinates")
        e = as_fraction(edge)
        if e <= 0:
            raise ValueError("cube edge length must be positive")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "edge", e)

    @property
    def x0(self) -> np.ndarray:
        return vec(self.center)

    @property
    def volume(self) -> Fraction:
        return self.edge**3

    @property
    def face_area(self) -> Fraction:
        return self.edge**2

    def bounds(self, axis: int) -> tuple[Fraction, Fraction]:
        h = self.edge / 2
        return self.center[axis] - h, self.center[axis] + h

    def relative_position(self) -> np.ndarray:
        """Lever arm ``x_P = x - x0`` about the cube centre."""
        c = self.center
        return np.array([X1 - c[0], X2 - c[1], X3 - c[2]], dtype=object)


@dataclass(frozen=True)
class Face:
    index: int
    axis: int
    sign: int

    @property
    def normal(self) -> np.ndarray:
        n = [0, 0, 0]
        n[self.axis] = self.sign
        return vec(n)

    def coordinate(self, cube: Cube) -> Fraction:
        return cube.center[self.axis] + self.sign * cube.edge / 2

    def center(self, cube: Cube) -> np.ndarray:
        c = list(cube.center)
        c[self.axis] = self.coordinate(cube)
        return vec(c)

    def lever(self, cube: Cube) -> np.ndarray:
        """Tangential lever arm ``r_i`` from the face centre; ``<r_i, n_i> = 0``."""
        r = cube.relative_position()
        r[self.axis] = Poly.zero()
        return r


FACES: tuple[Face, ...] = tuple(
    Face(index=i + 1, axis=i % 3, sign=1 if i < 3 else -1) for i in range(6)
)


def face(index: int) -> Face:
    if not 1 <= index <= 6:
        raise ValueError("face index must be in 1..6")
    return FACES[index - 1]


def integrate_face(phi: Poly, cube: Cube, face: Face) -> Fraction:
    """Exact value of the surface integral of ``phi`` over one face."""
    p = phi.substitute(face.axis, face.coordinate(cube))
    for axis in range(3):
        if axis != face.axis:
            p = p.integrate(axis, *cube.bounds(axis))
    return p.constant_term


def integrate_volume(phi: Poly, cube: Cube) -> Fraction:
    p = phi
    for axis in range(3):
        p = p.integrate(axis, *cube.bounds(axis))
    return p.constant_term


def integrate_face_field(F: np.ndarray, cube: Cube, face: Face) -> np.ndarray:
    out = np.empty(F.shape, dtype=object)
    for idx in np.ndindex(F.shape):
        out[idx] = integrate_face(F[idx], cube, face)
    return out


def integrate_volume_field(F: np.ndarray, cube: Cube) -> np.ndarray:
    out = np.empty(F.shape, dtype=object)
    for idx in np.ndindex(F.shape):
        out[idx] = integrate_volume(F[idx], cube)
    return out


def face_traction(sigma: np.ndarray, face: Face) -> np.ndarray:
    """Traction field ``sigma . n`` on a face (a signed column of ``sigma``)."""
    col = sigma[:, face.axis]
    return col if face.sign > 0 else -col


def face_traction_sum(sigma: np.ndarray, cube: Cube) -> np.ndarray:
    """Resultant force of all six face tractions."""
    total = zero_vec()
    for f in FACES:
        total = total + integrate_face_field(face_traction(sigma, f), cube, f)
    return total


def face_couple_about_face_center(sigma: np.ndarray, cube: Cube, face: Face) -> np.ndarray:
    """Couple of the face traction about the face centre, ``int r_i x sigma.n_i dA``."""
    return integrate_face_field(cross(face.lever(cube), face_traction(sigma, face)), cube, face)


def face_couples(sigma: np.ndarray, cube: Cube) -> list[np.ndarray]:
    return [face_couple_about_face_center(sigma, cube, f) for f in FACES]


def moment_about(sigma: np.ndarray, cube: Cube, lever: np.ndarray) -> np.ndarray:
    """Total moment ``sum_i int lever x sigma.n_i dA`` of all face tractions."""
    total = zero_vec()
    for f in FACES:
        total = total + integrate_face_field(cross(lever, face_traction(sigma, f)), cube, f)
    return total


def face_couple_about_cube_center(sigma: np.ndarray, cube: Cube) -> np.ndarray:
    """Moment of all face tractions about the cube centre (lever ``x - x0``)."""
    return moment_about(sigma, cube, cube.relative_position())


def divergence_theorem_cross_check(A: np.ndarray, cube: Cube) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of ``int_dV x x A.n dA = int_V 2 axl(skew A) + x x Div A dV``.

    The surface side integrates the face moments with lever ``x`` (absolute
    position); the volume side integrates the divergence form.  Neither side
    is derived from the other.
    """
    x = np.array([X1, X2, X3], dtype=object)
    lhs = moment_about(A, cube, x)
    integrand = axl(skew(A), check=False) * 2 + cross(x, div_tensor(A))
    rhs = integrate_volume_field(integrand, cube)
    return lhs, rhs

