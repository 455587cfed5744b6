"""Linear isotropic couple-stress elasticity on polynomial displacement fields.

Kinematics::

    eps = sym Grad u                    k = Grad axl skew Grad u = 1/2 Grad curl u

Constitutive relations::

    sigma = 2 mu eps + lam tr(eps) 1
    m     = 2 mu L_c^2 (alpha1 dev sym k + alpha2 skew k)
    tau   = -1/2 anti Div m             total stress = sigma + tau

The symmetric-total-stress variant replaces ``k`` by ``Curl eps`` and ``tau``
by ``sym Curl m_hat``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .fields import (
    X1,
    X2,
    X3,
    constant_field,
    curl_tensor,
    div_tensor,
    grad_vector,
    position,
    zero_field,
)
from .poly import Poly, as_fraction
from .tensor_core import (
    IDENTITY,
    NotAntisymmetricError,
    anti,
    axl,
    dev,
    inner,
    is_antisymmetric,
    is_symmetric,
    skew,
    sym,
    trace,
    vec,
)

__all__ = [
    "ModelKind",
    "IsotropicMaterial",
    "ConformalMapParams",
    "NotSymmetricError",
    "NonzeroTraceError",
    "constrained",
    "strain",
    "local_stress",
    "curvature",
    "couple_stress",
    "nonlocal_stress",
    "ghiba_curvature",
    "ghiba_couple_stress",
    "total_stress",
    "model_couple_stress",
    "energies",
    "conformal_map",
    "conformal_displacement",
    "conformal_bulk_energy",
    "balance_residuals",
]


class NotSymmetricError(ValueError):
    pass


class NonzeroTraceError(ValueError):
    pass


class ModelKind(str, Enum):
    INDETERMINATE = "indeterminate"
    MODIFIED_CONFORMAL = "modified"
    SKEW_HD = "skew"
    GHIBA = "ghiba"

    @classmethod
    def parse(cls, name: str) -> "ModelKind":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "indeterminate": cls.INDETERMINATE,
            "modified": cls.MODIFIED_CONFORMAL,
            "modified-conformal": cls.MODIFIED_CONFORMAL,
            "conformal": cls.MODIFIED_CONFORMAL,
            "skew": cls.SKEW_HD,
            "skew-hd": cls.SKEW_HD,
            "ghiba": cls.GHIBA,
        }
        if key not in aliases:
            raise ValueError(f"unknown model kind {name!r}")
        return aliases[key]


@dataclass(frozen=True)
class IsotropicMaterial:
    mu: Fraction
    lam: Fraction
    L_c: Fraction
    alpha1: Fraction = Fraction(0)
    alpha2: Fraction = Fraction(0)
    alpha3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("mu", "lam", "L_c", "alpha1", "alpha2", "alpha3"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.mu <= 0:
            raise ValueError("shear modulus mu must be positive")
        if self.L_c <= 0:
            raise ValueError("characteristic length L_c must be positive")


def constrained(mat: IsotropicMaterial, kind: ModelKind) -> IsotropicMaterial:
    """Material with the parameter constraint of ``kind`` applied."""
    if kind is ModelKind.MODIFIED_CONFORMAL:
        return replace(mat, alpha2=Fraction(0))
    if kind is ModelKind.SKEW_HD:
        return replace(mat, alpha1=Fraction(0))
    return mat


def strain(u: np.ndarray) -> np.ndarray:
    return sym(grad_vector(u))


def local_stress(eps: np.ndarray, mat: IsotropicMaterial) -> np.ndarray:
    if not is_symmetric(eps):
        raise NotSymmetricError("strain must be symmetric")
    tr = trace(eps)
    return eps * (2 * mat.mu) + _spherical(tr * mat.lam)


def _spherical(s) -> np.ndarray:
    out = zero_field((3, 3))
    for i in range(3):
        out[i, i] = out[i, i] + s
    return out


def curvature(u: np.ndarray) -> np.ndarray:
    return grad_vector(axl(skew(grad_vector(u))))


def _m_formula(k: np.ndarray, mat: IsotropicMaterial) -> np.ndarray:
    tr = trace(k)
    if tr != 0:
        raise NonzeroTraceError("curvature tensor must be trace free")
    s = 2 * mat.mu * mat.L_c**2
    m = dev(sym(k)) * (s * mat.alpha1) + skew(k) * (s * mat.alpha2)
    spherical = tr * (mat.mu * mat.L_c**2 * mat.alpha3)
    # the alpha3 channel multiplies tr(k) and can never contribute
    assert spherical == 0
    return m


def couple_stress(
    k: np.ndarray, mat: IsotropicMaterial, kind: ModelKind = ModelKind.INDETERMINATE
) -> np.ndarray:
    return _m_formula(k, constrained(mat, kind))


def nonlocal_stress(m: np.ndarray) -> np.ndarray:
    return anti(div_tensor(m)) * Fraction(-1, 2)


def ghiba_curvature(u: np.ndarray) -> np.ndarray:
    return curl_tensor(strain(u))


def ghiba_couple_stress(u: np.ndarray, mat: IsotropicMaterial) -> np.ndarray:
    return _m_formula(ghiba_curvature(u), mat)


def model_couple_stress(u: np.ndarray, mat: IsotropicMaterial, kind: ModelKind) -> np.ndarray:
    """Couple stress of ``u`` under ``kind`` (``m_hat`` for the symmetric variant)."""
    if kind is ModelKind.GHIBA:
        return ghiba_couple_stress(u, mat)
    return couple_stress(curvature(u), mat, kind)


def total_stress(
    u: np.ndarray, kind: ModelKind, mat: IsotropicMaterial
) -> np.ndarray:
    sigma = local_stress(strain(u), mat)
    m = model_couple_stress(u, mat, kind)
    if kind is ModelKind.GHIBA:
        return sigma + sym(curl_tensor(m))
    return sigma + nonlocal_stress(m)


def energies(
    u: np.ndarray, mat: IsotropicMaterial, kind: ModelKind = ModelKind.INDETERMINATE
) -> tuple[Poly, Poly]:
    """Energy densities ``(W_lin, W_curv)`` as polynomials in ``x``."""
    eps = strain(u)
    tr = trace(eps)
    w_lin = inner(eps, eps) * mat.mu + tr * tr * (mat.lam / 2)
    cm = constrained(mat, kind)
    k = ghiba_curvature(u) if kind is ModelKind.GHIBA else curvature(u)
    ds, sk = dev(sym(k)), skew(k)
    w_curv = (inner(ds, ds) * cm.alpha1 + inner(sk, sk) * cm.alpha2) * (mat.mu * mat.L_c**2)
    return w_lin, w_curv


@dataclass(frozen=True)
class ConformalMapParams:
    W_hat: np.ndarray
    A_hat: np.ndarray
    p_hat: Fraction
    b_hat: np.ndarray

    def __post_init__(self):
        if not is_antisymmetric(self.W_hat):
            raise NotAntisymmetricError("W_hat must be antisymmetric")
        if not is_antisymmetric(self.A_hat):
            raise NotAntisymmetricError("A_hat must be antisymmetric")
        object.__setattr__(self, "p_hat", as_fraction(self.p_hat))
        object.__setattr__(self, "b_hat", vec(self.b_hat))

    @classmethod
    def from_vectors(cls, w=(0, 0, 0), a=(0, 0, 0), p=0, b=(0, 0, 0)) -> "ConformalMapParams":
        return cls(anti(vec(w)), anti(vec(a)), as_fraction(p), vec(b))


def conformal_map(params: ConformalMapParams) -> np.ndarray:
    """``phi(x) = 1/2 (2 <w, x> x - w |x|^2) + (p 1 + A) x + b`` with ``w = axl W``."""
    w = axl(params.W_hat)
    x = position()
    wx = X1 * w[0] + X2 * w[1] + X3 * w[2]
    xx = X1 * X1 + X2 * X2 + X3 * X3
    lin = (IDENTITY * params.p_hat + params.A_hat) @ x
    return x * wx - constant_field(w) * xx * Fraction(1, 2) + lin + constant_field(params.b_hat)


def conformal_displacement(params: ConformalMapParams) -> np.ndarray:
    return conformal_map(params) - position()


def conformal_bulk_energy(u: np.ndarray, mat: IsotropicMaterial) -> Poly:
    """``(3 lam + 2 mu)/6 [tr Grad u]^2``; equals ``W_lin`` whenever ``dev sym Grad u = 0``."""
    tr = trace(grad_vector(u))
    return tr * tr * ((3 * mat.lam + 2 * mat.mu) / 6)


def balance_residuals(
    u: np.ndarray,
    f: Sequence,
    c: Sequence,
    mat: IsotropicMaterial,
    kind: ModelKind = ModelKind.INDETERMINATE,
) -> tuple[np.ndarray, np.ndarray]:
    """``(Div total + f, Div m + 2 axl skew total + c)`` as polynomial fields.

    With ``tau = -1/2 anti Div m`` the angular residual reduces to ``c``.  For
    the symmetric variant ``m_hat`` is used and no such reduction holds.
    """
    total = total_stress(u, kind, mat)
    m = model_couple_stress(u, mat, kind)
    linear = div_tensor(total) + constant_field(vec(f))
    angular = div_tensor(m) + axl(skew(total), check=False) * 2 + constant_field(vec(c))
    return linear, angular
