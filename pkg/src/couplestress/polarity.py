"""Second-order Taylor decomposition of a stress field on a cube, and polarity.

The expansion about the cube centre ``x0`` is grouped as::

    sigma(x) ~ sigma0 + D sigma . dx + D2_b sigma . dx^2_b + D2_q sigma . dx^2_q

with ``dx = x - x0``.  The linear term is split into ``np`` (columns varying
along their own normal), ``p1`` (shear components varying along their own
direction of action) and ``p2`` (the rest).  The mixed second-order term is
split into ``b1`` and ``b2``; the pure second-order term is ``q``.

Every piece is returned as a polynomial field in absolute coordinates, so the
cube integrals in :mod:`couplestress.cube` apply to it directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import cube as _cube
from .cube import Cube
from .fields import (
    X1,
    X2,
    X3,
    div_tensor,
    evaluate,
    grad_vector,
    partial,
    shift_field,
    zero_field,
)
from .poly import Poly, as_fraction
from .tensor_core import axl, is_zero, skew, vec, zero_mat

__all__ = [
    "PAIRS",
    "PIECES",
    "Polarity",
    "TaylorDecomposition",
    "PieceReport",
    "PolarityReport",
    "expand",
    "split_linear",
    "split_bilinear",
    "quadratic_term",
    "pieces",
    "classify",
    "criteria",
    "couple_stress_from_gradients",
    "couple_stress_field",
    "split_torsion_bending",
    "chi",
    "psi",
    "angular_balance_residual",
    "angular_balance_residual_from_faces",
    "linear_balance_residual",
    "grad_tr_decomposition",
    "symmetry_conditions_check",
    "rotational_invariance_check",
    "rotational_invariance_faces",
    "analyze",
]

# index pairs (k, l), k < l, of the mixed second derivatives
PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2))

PIECES = ("sigma0", "np", "p1", "p2", "b1", "b2", "q")


class Polarity(str, Enum):
    POLAR = "Polar"
    NONPOLAR = "Nonpolar"
    SEMIPOLAR = "Semipolar"
    BIPOLAR = "Bipolar"


# Class each piece is grouped under in the derivation.  p1 sits in the polar
# group although its face couples vanish; reports show both labels.
NOMINAL: dict[str, Polarity] = {
    "sigma0": Polarity.SEMIPOLAR,
    "np": Polarity.NONPOLAR,
    "p1": Polarity.POLAR,
    "p2": Polarity.POLAR,
    "b1": Polarity.NONPOLAR,
    "b2": Polarity.BIPOLAR,
    "q": Polarity.SEMIPOLAR,
}


def _linear_class(i: int, j: int, k: int) -> str:
    if j == k:
        return "np"
    if i == k:
        return "p1"
    return "p2"


def _bilinear_class(i: int, j: int, pair: int) -> str:
    k, l = PAIRS[pair]
    m = 3 - k - l
    if j in (k, l) and (i == j or i == m):
        return "b2"
    return "b1"


def _fraction_array(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


@dataclass(frozen=True)
class TaylorDecomposition:
    """Exact Taylor data of a stress field at ``x0``.

    ``d1[i, j, k] = sigma_ij,k``; ``d2_mixed[i, j, p] = sigma_ij,kl`` for
    ``(k, l) = PAIRS[p]``; ``d2_pure[i, j, k] = sigma_ij,kk``.
    """

    sigma0: np.ndarray
    d1: np.ndarray
    d2_mixed: np.ndarray
    d2_pure: np.ndarray
    x0: np.ndarray
    L_c: Fraction
    truncation_error: Fraction = Fraction(0)

    @property
    def cube(self) -> Cube:
        return Cube(tuple(self.x0), self.L_c)

    def _dx(self) -> list[Poly]:
        return [X1 - self.x0[0], X2 - self.x0[1], X3 - self.x0[2]]

    def constant_term(self) -> np.ndarray:
        out = zero_field((3, 3))
        for idx in np.ndindex(3, 3):
            out[idx] = Poly.constant(self.sigma0[idx])
        return out

    def linear_term(self, mask: Callable[[int, int, int], bool] | None = None) -> np.ndarray:
        dx = self._dx()
        out = zero_field((3, 3))
        for i, j, k in np.ndindex(3, 3, 3):
            c = self.d1[i, j, k]
            if c and (mask is None or mask(i, j, k)):
                out[i, j] = out[i, j] + dx[k] * c
        return out

    def bilinear_term(self, mask: Callable[[int, int, int], bool] | None = None) -> np.ndarray:
        dx = self._dx()
        out = zero_field((3, 3))
        for i, j, p in np.ndindex(3, 3, 3):
            c = self.d2_mixed[i, j, p]
            if c and (mask is None or mask(i, j, p)):
                k, l = PAIRS[p]
                out[i, j] = out[i, j] + dx[k] * dx[l] * c
        return out

    def quadratic_term(self) -> np.ndarray:
        dx = self._dx()
        out = zero_field((3, 3))
        for i, j, k in np.ndindex(3, 3, 3):
            c = self.d2_pure[i, j, k]
            if c:
                out[i, j] = out[i, j] + dx[k] * dx[k] * (c / 2)
        return out

    def reconstruct(self) -> np.ndarray:
        """The truncated expansion as a polynomial field in ``x``."""
        return self.constant_term() + self.linear_term() + self.bilinear_term() + self.quadratic_term()


def expand(sigma: np.ndarray, x0: Sequence, L_c) -> TaylorDecomposition:
    L = as_fraction(L_c)
    if L <= 0:
        raise ValueError("L_c must be positive")
    x0v = vec(x0)
    shifted = shift_field(sigma, x0v)  # coefficients are Taylor coefficients in dx
    sigma0 = zero_mat()
    d1 = _fraction_array((3, 3, 3))
    d2m = _fraction_array((3, 3, 3))
    d2p = _fraction_array((3, 3, 3))
    trunc = Fraction(0)
    for i, j in np.ndindex(3, 3):
        terms = shifted[i, j].terms
        sigma0[i, j] = terms.get((0, 0, 0), Fraction(0))
        for k in range(3):
            e = [0, 0, 0]
            e[k] = 1
            d1[i, j, k] = terms.get(tuple(e), Fraction(0))
            e[k] = 2
            d2p[i, j, k] = 2 * terms.get(tuple(e), Fraction(0))
        for p, (k, l) in enumerate(PAIRS):
            e = [0, 0, 0]
            e[k] = e[l] = 1
            d2m[i, j, p] = terms.get(tuple(e), Fraction(0))
        trunc = max(trunc, shifted[i, j].max_abs_coefficient(min_degree=3))
    return TaylorDecomposition(sigma0, d1, d2m, d2p, x0v, L, trunc)


def split_linear(t: TaylorDecomposition) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(np, p1, p2)``; their sum is the linear Taylor term."""
    return tuple(
        t.linear_term(lambda i, j, k, name=name: _linear_class(i, j, k) == name)
        for name in ("np", "p1", "p2")
    )  # type: ignore[return-value]


def split_bilinear(t: TaylorDecomposition) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(b1, b2)``; their sum is the mixed second-order term."""
    return tuple(
        t.bilinear_term(lambda i, j, p, name=name: _bilinear_class(i, j, p) == name)
        for name in ("b1", "b2")
    )  # type: ignore[return-value]


def quadratic_term(t: TaylorDecomposition) -> np.ndarray:
    return t.quadratic_term()


def pieces(t: TaylorDecomposition) -> dict[str, np.ndarray]:
    np_, p1, p2 = split_linear(t)
    b1, b2 = split_bilinear(t)
    return {
        "sigma0": t.constant_term(),
        "np": np_,
        "p1": p1,
        "p2": p2,
        "b1": b1,
        "b2": b2,
        "q": t.quadratic_term(),
    }


def criteria(term: np.ndarray, cube: Cube) -> tuple[bool, bool]:
    """(A, B): A = some face couple about its face centre is nonzero,
    B = the total moment about the cube centre is nonzero."""
    a = any(not is_zero(c) for c in _cube.face_couples(term, cube))
    b = not is_zero(_cube.face_couple_about_cube_center(term, cube))
    return a, b


def classify(term: np.ndarray, cube: Cube) -> Polarity:
    a, b = criteria(term, cube)
    if a:
        return Polarity.BIPOLAR if b else Polarity.POLAR
    return Polarity.SEMIPOLAR if b else Polarity.NONPOLAR


def _m_from_gradients(g: Callable[[int, int, int], object], L: Fraction) -> np.ndarray:
    """The couple stress matrix from first stress gradients ``g(i, j, k) = sigma_ij,k``."""
    rows = [
        [g(2, 0, 1) - g(1, 0, 2), -g(1, 1, 2), g(2, 2, 1)],
        [g(0, 0, 2), g(0, 1, 2) - g(2, 1, 0), -g(2, 2, 0)],
        [-g(0, 0, 1), g(1, 1, 0), g(1, 2, 0) - g(0, 2, 1)],
    ]
    s = L * L / 12
    out = np.empty((3, 3), dtype=object)
    for i in range(3):
        for j in range(3):
            out[i, j] = rows[i][j] * s
    return out


def couple_stress_from_gradients(t: TaylorDecomposition) -> np.ndarray:
    """Constant couple stress at ``x0`` from the first stress gradients.

    Column ``i`` times ``L_c**2`` is the couple of the ``p2`` piece on face ``i``.
    """
    return _m_from_gradients(lambda i, j, k: t.d1[i, j, k], t.L_c)


def couple_stress_field(sigma: np.ndarray, L_c) -> np.ndarray:
    """The same formula applied pointwise; a polynomial field one degree lower."""
    grads = [partial(sigma, k) for k in range(3)]
    return _m_from_gradients(lambda i, j, k: grads[k][i, j], as_fraction(L_c))


def split_torsion_bending(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    torsion = np.empty((3, 3), dtype=object)
    bending = np.empty((3, 3), dtype=object)
    for i, j in np.ndindex(3, 3):
        zero = m[i, j] * 0
        torsion[i, j] = m[i, j] if i == j else zero
        bending[i, j] = zero if i == j else m[i, j]
    return torsion, bending


def chi(sigma: np.ndarray, x0: Sequence, L_c) -> np.ndarray:
    """``chi_ik = (L_c^2/12) sigma_ik,kk(x0)``, no sum over ``k``."""
    L = as_fraction(L_c)
    pt = vec(x0)
    out = zero_mat()
    for i, k in np.ndindex(3, 3):
        out[i, k] = sigma[i, k].diff(k, 2).evaluate(pt) * L * L / 12
    return out


def psi(sigma: np.ndarray, L_c) -> np.ndarray:
    """``psi = (L_c^2/24) Grad(2 axl skew sigma)`` as a polynomial field."""
    L = as_fraction(L_c)
    w = axl(skew(sigma), check=False) * 2
    return grad_vector(w) * (L * L / 24)


def linear_balance_residual(sigma: np.ndarray, x0: Sequence, f: Sequence = (0, 0, 0)) -> np.ndarray:
    """``Div sigma(x0) + f``."""
    return evaluate(div_tensor(sigma), x0) + vec(f)


def angular_balance_residual(
    sigma: np.ndarray, cube: Cube, c: Sequence = (0, 0, 0)
) -> np.ndarray:
    """``Div m(x0) + Div psi(x0) + 2 axl skew(sigma0 + chi) + c``."""
    x0 = cube.x0
    L = cube.edge
    m = couple_stress_field(sigma, L)
    div_m = evaluate(div_tensor(m), x0)
    div_psi = evaluate(div_tensor(psi(sigma, L)), x0)
    s0 = evaluate(sigma, x0)
    ch = chi(sigma, x0, L)
    return div_m + div_psi + axl(skew(s0 + ch), check=False) * 2 + vec(c)


def angular_balance_residual_from_faces(
    sigma: np.ndarray, cube: Cube, c: Sequence = (0, 0, 0)
) -> np.ndarray:
    """Same residual from face integrals of the truncated expansion, divided by ``V_c``."""
    t = expand(sigma, cube.center, cube.edge)
    moment = _cube.face_couple_about_cube_center(t.reconstruct(), cube)
    return moment / cube.volume + vec(c)


def grad_tr_decomposition(sigma: np.ndarray, L_c) -> tuple[np.ndarray, np.ndarray]:
    """``Grad tr sigma = Div(Diag sigma) + (24/L_c^2) axl(skew m)`` as two fields."""
    L = as_fraction(L_c)
    div_diag = np.array([sigma[k, k].diff(k) for k in range(3)], dtype=object)
    m = couple_stress_field(sigma, L)
    skew_term = axl(skew(m), check=False) * (24 / (L * L))
    return div_diag, skew_term


def symmetry_conditions_check(sigma: np.ndarray, x0: Sequence = (0, 0, 0)) -> bool:
    """Conditions on normal-stress gradients at ``x0`` that make ``m`` symmetric."""
    g = _gradient_at(sigma, x0)
    return (
        g(0, 0, 2) == -g(1, 1, 2)
        and -g(0, 0, 1) == g(2, 2, 1)
        and g(1, 1, 0) == -g(2, 2, 0)
    )


def rotational_invariance_faces(sigma: np.ndarray, x0: Sequence = (0, 0, 0)) -> tuple[bool, bool, bool]:
    """Per face pair ``i``: are the coplanar shear gradients invariant under
    rotation about ``e_i``?"""
    g = _gradient_at(sigma, x0)
    return (
        g(2, 0, 1) == -g(1, 0, 2),
        g(0, 1, 2) == -g(2, 1, 0),
        g(1, 2, 0) == -g(0, 2, 1),
    )


def rotational_invariance_check(sigma: np.ndarray, x0: Sequence = (0, 0, 0)) -> bool:
    """All three face pairs at once."""
    return all(rotational_invariance_faces(sigma, x0))


def _gradient_at(sigma: np.ndarray, x0: Sequence) -> Callable[[int, int, int], Fraction]:
    pt = vec(x0)
    return lambda i, j, k: sigma[i, j].diff(k).evaluate(pt)


# -- report -----------------------------------------------------------------


@dataclass
class PieceReport:
    name: str
    nominal: Polarity
    computed: Polarity
    face_couples: list[np.ndarray]
    cube_moment: np.ndarray


@dataclass
class PolarityReport:
    x0: np.ndarray
    L_c: Fraction
    truncation_error: Fraction
    pieces: list[PieceReport]
    m: np.ndarray
    m_torsion: np.ndarray
    m_bending: np.ndarray
    chi: np.ndarray
    psi: np.ndarray
    psi_at_x0: np.ndarray
    linear_residual: np.ndarray
    linear_residual_from_faces: np.ndarray
    angular_residual: np.ndarray
    angular_residual_from_faces: np.ndarray
    symmetry_conditions: bool
    rotational_invariance: bool
    merge_psi: bool = False
    m_merged: np.ndarray | None = field(default=None)


def analyze(
    sigma: np.ndarray,
    x0: Sequence = (0, 0, 0),
    L_c=1,
    f: Sequence = (0, 0, 0),
    c: Sequence = (0, 0, 0),
    merge_psi: bool = False,
) -> PolarityReport:
    """Run the full decomposition on ``sigma`` and collect every derived quantity.

    With ``merge_psi`` the report also carries ``m + psi(x0)``; the residuals
    are the same either way.
    """
    t = expand(sigma, x0, L_c)
    cube = t.cube
    piece_reports = []
    for name, term in pieces(t).items():
        couples = _cube.face_couples(term, cube)
        moment = _cube.face_couple_about_cube_center(term, cube)
        a = any(not is_zero(v) for v in couples)
        b = not is_zero(moment)
        computed = (
            (Polarity.BIPOLAR if b else Polarity.POLAR)
            if a
            else (Polarity.SEMIPOLAR if b else Polarity.NONPOLAR)
        )
        piece_reports.append(PieceReport(name, NOMINAL[name], computed, couples, moment))
    m = couple_stress_from_gradients(t)
    torsion, bending = split_torsion_bending(m)
    ps = psi(sigma, t.L_c)
    ps0 = evaluate(ps, t.x0)
    truncated = t.reconstruct()
    return PolarityReport(
        x0=t.x0,
        L_c=t.L_c,
        truncation_error=t.truncation_error,
        pieces=piece_reports,
        m=m,
        m_torsion=torsion,
        m_bending=bending,
        chi=chi(sigma, t.x0, t.L_c),
        psi=ps,
        psi_at_x0=ps0,
        linear_residual=linear_balance_residual(sigma, t.x0, f),
        linear_residual_from_faces=_cube.face_traction_sum(truncated, cube) / cube.volume + vec(f),
        angular_residual=angular_balance_residual(sigma, cube, c),
        angular_residual_from_faces=angular_balance_residual_from_faces(sigma, cube, c),
        symmetry_conditions=symmetry_conditions_check(sigma, t.x0),
        rotational_invariance=rotational_invariance_check(sigma, t.x0),
        merge_psi=merge_psi,
        m_merged=(m + ps0) if merge_psi else None,
    )
