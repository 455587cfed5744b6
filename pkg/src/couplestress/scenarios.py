"""Worked examples: a symmetric trace-free stress family, a twisted beam,
couples applied to a rigid cantilever, and conformal maps.

Each scenario returns a :class:`~couplestress.reports.RunReport` whose
``data`` holds every computed object and whose ``checks`` list every identity
that was asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import cube as _cube
from .cube import Cube, face
from .fields import X1, X2, X3, as_field, div_tensor, grad_vector, position, zero_field
from .models import (
    ConformalMapParams,
    IsotropicMaterial,
    ModelKind,
    conformal_bulk_energy,
    conformal_displacement,
    conformal_map,
    couple_stress,
    curvature,
    energies,
    local_stress,
    strain,
)
from .poly import Poly, as_fraction
from .polarity import couple_stress_from_gradients, expand, split_torsion_bending
from .reports import Check, RunReport, check_equal, digest
from .tensor_core import (
    anti,
    axl,
    cross,
    diag,
    dev,
    is_antisymmetric,
    is_zero,
    skew,
    sym,
    trace,
    vec,
    zero_mat,
    zero_vec,
)

__all__ = [
    "TraceFreeFamilyParams",
    "TorsionParams",
    "AppliedCouple",
    "basis_a",
    "basis_b",
    "basis_c",
    "trace_free_family",
    "trace_free_scenario",
    "torsion_displacement",
    "torsion_scenario",
    "yang_third_balance",
    "default_cantilever",
    "yang_cantilever_scenario",
    "yang_surface_identity",
    "yang_surface_scenario",
    "couple_translation_invariance",
    "nonassociativity_witness",
    "conformal_scenario",
]


def _mono(*entries) -> np.ndarray:
    return as_field(entries, (3, 3))


def basis_a() -> np.ndarray:
    z, y = X3, X2
    return _mono([0, -z, y], [-z, 0, 0], [y, 0, 0])


def basis_b() -> np.ndarray:
    z, x = X3, X1
    return _mono([0, z, 0], [z, 0, -x], [0, -x, 0])


def basis_c() -> np.ndarray:
    y, x = X2, X1
    return _mono([0, 0, -y], [0, 0, x], [-y, x, 0])


@dataclass(frozen=True)
class TraceFreeFamilyParams:
    a: Fraction
    b: Fraction
    c: Fraction
    L_c: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "c", "L_c"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.L_c <= 0:
            raise ValueError("L_c must be positive")


def _m_from_face_couples(sigma: np.ndarray, cube: Cube) -> np.ndarray:
    """Column i of m is the couple on face i divided by the face area."""
    m = zero_mat()
    for i in range(3):
        m[:, i] = _cube.face_couple_about_face_center(sigma, cube, face(i + 1)) / cube.face_area
    return m


def trace_free_family(p: TraceFreeFamilyParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(sigma, m_integral, m_closed)`` for ``sigma = a B_a + b B_b + c B_c``."""
    sigma = basis_a() * p.a + basis_b() * p.b + basis_c() * p.c
    cube = Cube((0, 0, 0), p.L_c)
    m_integral = _m_from_face_couples(sigma, cube)
    a, b, c = p.a, p.b, p.c
    m_closed = diag(2 * a - b - c, 2 * b - a - c, 2 * c - a - b) * (p.L_c**2 / 12)
    return sigma, m_integral, m_closed


def trace_free_scenario(p: TraceFreeFamilyParams) -> RunReport:
    sigma, m_int, m_closed = trace_free_family(p)
    m_grad = couple_stress_from_gradients(expand(sigma, (0, 0, 0), p.L_c))
    anchor = "symmetric stress family with trace-free couple stress"
    report = RunReport("scenario trace-free", digest({"a": p.a, "b": p.b, "c": p.c, "L_c": p.L_c}))
    report.data = {"params": {"a": p.a, "b": p.b, "c": p.c, "L_c": p.L_c}, "sigma": sigma,
                   "m_integral": m_int, "m_closed": m_closed, "m_from_gradients": m_grad}
    report.extend(
        [
            check_equal("trace_free.div_sigma_zero", anchor, div_tensor(sigma), as_field([0, 0, 0])),
            check_equal("trace_free.m_integral_equals_closed", anchor, m_int, m_closed),
            check_equal("trace_free.m_gradients_equals_closed", anchor, m_grad, m_closed),
            check_equal("trace_free.trace_zero", anchor, trace(m_int), Fraction(0)),
            check_equal("trace_free.m_symmetric", anchor, m_int, m_int.T),
        ]
    )
    return report


# -- torsion -------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionParams:
    alpha_bar: Fraction
    mu: Fraction = Fraction(1)
    L_c: Fraction = Fraction(1)
    alpha1: Fraction = Fraction(1, 12)
    dx: Fraction = Fraction(1)
    lam: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha_bar", "mu", "L_c", "alpha1", "dx", "lam"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.alpha_bar < 0:
            raise ValueError("alpha_bar must be non-negative")
        for name in ("mu", "L_c", "alpha1", "dx"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def material(self) -> IsotropicMaterial:
        return IsotropicMaterial(self.mu, self.lam, self.L_c, self.alpha1)


def torsion_displacement(alpha_bar) -> np.ndarray:
    """Linearised twist about e3: ``u = alpha_bar (-y z, x z, 0)``."""
    a = as_fraction(alpha_bar)
    return as_field([X2 * X3 * (-a), X1 * X3 * a, 0])


def torsion_scenario(p: TorsionParams) -> RunReport:
    anchor = "torsion of a beam, linearised"
    mat = p.material
    u = torsion_displacement(p.alpha_bar)
    grad_u = grad_vector(u)
    eps = strain(u)
    s2 = local_stress(eps, mat)
    k = curvature(u)
    m_const = couple_stress(k, mat, ModelKind.INDETERMINATE)
    cube = Cube((0, 0, 0), p.dx)
    couples = _cube.face_couples(s2, cube)
    m_grad = couple_stress_from_gradients(expand(s2, (0, 0, 0), p.dx))
    a, mu = p.alpha_bar, p.mu
    k0 = np.array([[k[i, j].constant_term for j in range(3)] for i in range(3)], dtype=object)
    m0 = np.array([[m_const[i, j].constant_term for j in range(3)] for i in range(3)], dtype=object)
    face1 = vec(-mu * a * p.dx**4 / 12, 0, 0)
    match = bool(all(x == y for x, y in zip(m0.flat, m_grad.flat)))
    condition = p.L_c**2 * p.alpha1 == p.dx**2 / 12
    family_c = 12 * a * mu * p.alpha1
    _, _, m_family = trace_free_family(TraceFreeFamilyParams(0, 0, family_c, p.L_c))
    torsion, bending = split_torsion_bending(m0)

    report = RunReport(
        "scenario torsion",
        digest({"alpha_bar": a, "mu": mu, "L_c": p.L_c, "alpha1": p.alpha1, "dx": p.dx, "lam": p.lam}),
    )
    report.data = {
        "params": {"alpha_bar": a, "mu": mu, "L_c": p.L_c, "alpha1": p.alpha1, "dx": p.dx},
        "u_lin": u,
        "grad_u": grad_u,
        "strain": eps,
        "S2": s2,
        "div_S2": div_tensor(s2),
        "curvature": k0,
        "m_constitutive": m0,
        "m_torsion": torsion,
        "m_bending": bending,
        "m_from_stress_gradients": m_grad,
        "face_couples": {str(i + 1): c for i, c in enumerate(couples)},
        "matching": {"L_c^2 alpha1": p.L_c**2 * p.alpha1, "dx^2/12": p.dx**2 / 12,
                     "condition_holds": condition, "m_paths_agree": match},
    }
    report.extend(
        [
            check_equal("torsion.grad_u", anchor, grad_u,
                        as_field([[0, -a * X3, -a * X2], [a * X3, 0, a * X1], [0, 0, 0]])),
            check_equal("torsion.div_S2_zero", anchor, div_tensor(s2), as_field([0, 0, 0])),
            check_equal("torsion.S2_is_family_member", anchor, s2, basis_c() * (mu * a)),
            check_equal("torsion.curvature", anchor, k0,
                        diag(-a / 2, -a / 2, a)),
            check_equal("torsion.m_constitutive", anchor, m0,
                        diag(-1, -1, 2) * (a * mu * p.L_c**2 * p.alpha1)),
            check_equal("torsion.m_is_pure_torsion", anchor, bending, zero_mat()),
            check_equal("torsion.face1_couple", anchor, couples[0], face1),
            check_equal("torsion.face3_couple_doubled_reversed", anchor, couples[2], vec(0, 0, -2 * face1[0])),
            check_equal("torsion.opposite_faces_cancel", anchor,
                        np.array(couples[3:]), -np.array(couples[:3])),
            check_equal("torsion.m_gradients", anchor, m_grad,
                        diag(-1, -1, 2) * (mu * a * p.dx**2 / 12)),
            Check("torsion.match_iff_condition", anchor, match == condition, match, condition,
                  "constitutive m equals stress-gradient m exactly when L_c^2 alpha1 = dx^2/12"),
            check_equal("torsion.family_inclusion", anchor, m_family, m0,
                        "trace-free family with a = b = 0, c = 12 alpha_bar mu alpha1"),
        ]
    )
    return report


# -- couples on a rigid body -----------------------------------------------------------


@dataclass(frozen=True)
class AppliedCouple:
    x: np.ndarray
    L: np.ndarray

    def __init__(self, x: Sequence, L: Sequence):
        object.__setattr__(self, "x", vec(x))
        object.__setattr__(self, "L", vec(L))


def yang_third_balance(couples: Sequence[AppliedCouple]) -> np.ndarray:
    """``sum x_i x L_i`` over the applied couples."""
    total = zero_vec()
    for c in couples:
        total = total + cross(c.x, c.L)
    return total


def default_cantilever(length=1, couple=1) -> list[AppliedCouple]:
    """Clamped at the origin, tip couple ``(0, L, 0)`` at ``(length, 0, 0)``."""
    ell, L = as_fraction(length), as_fraction(couple)
    return [AppliedCouple((0, 0, 0), (0, -L, 0)), AppliedCouple((ell, 0, 0), (0, L, 0))]


def yang_cantilever_scenario(length=1, couple=1) -> RunReport:
    anchor = "moment of couples on a rigid cantilever"
    ell, L = as_fraction(length), as_fraction(couple)
    couples = default_cantilever(ell, L)
    resultant = zero_vec()
    for c in couples:
        resultant = resultant + c.L
    third = yang_third_balance(couples)
    at_origin = yang_third_balance([AppliedCouple((0, 0, 0), c.L) for c in couples])
    parallel = yang_third_balance([AppliedCouple(c.x, c.x * 3) for c in couples])
    report = RunReport("scenario yang-cantilever", digest({"length": ell, "couple": L}))
    report.data = {"couples": [{"x": c.x, "L": c.L} for c in couples],
                   "sum_L": resultant, "sum_x_cross_L": third}
    report.extend(
        [
            check_equal("yang.couples_balance", anchor, resultant, zero_vec()),
            check_equal("yang.moment_of_couples", anchor, third, vec(0, 0, ell * L)),
            Check("yang.moment_nonzero", anchor, (not is_zero(third)) == (ell * L != 0), third, None,
                  "the proposed third balance law fails for a body in equilibrium"),
            check_equal("yang.all_at_origin", anchor, at_origin, zero_vec()),
            check_equal("yang.parallel_couples", anchor, parallel, zero_vec()),
        ]
    )
    return report


def yang_surface_identity(m: np.ndarray, cube: Cube) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(surface, volume, skew_only)`` of the cross-product divergence theorem for ``m``."""
    x = position()
    surface = _cube.moment_about(m, cube, x)
    skew_part = axl(skew(m), check=False) * 2
    volume = _cube.integrate_volume_field(cross(x, div_tensor(m)) + skew_part, cube)
    skew_only = _cube.integrate_volume_field(skew_part, cube)
    return surface, volume, skew_only


def yang_surface_scenario(m: np.ndarray | None = None, cube: Cube | None = None) -> RunReport:
    anchor = "surface moment of couple tractions"
    if m is None:
        # symmetric part plus a constant skew part and a linear term
        m = as_field([[X1, 2, X3], [0, -X1, 1], [X2, -1, 0]])
    cube = cube or Cube((1, 0, Fraction(1, 2)), 2)
    surface, volume, skew_only = yang_surface_identity(m, cube)
    expected_skew = _cube.integrate_volume_field(axl(skew(m), check=False) * 2, cube)
    report = RunReport("scenario yang-surface", digest({"m": m, "center": cube.center, "edge": cube.edge}))
    report.data = {"m": m, "cube": {"center": cube.center, "edge": cube.edge},
                   "surface": surface, "volume": volume, "skew_only": skew_only}
    report.extend(
        [
            check_equal("yang_surface.surface_equals_volume", anchor, surface, volume),
            check_equal("yang_surface.skew_residual", anchor, skew_only, expected_skew),
            check_equal(
                "yang_surface.sym_has_no_skew_residual", anchor,
                yang_surface_identity(sym(m), cube)[2], zero_vec(),
            ),
        ]
    )
    return report


def couple_translation_invariance(
    F2: Sequence, x1: Sequence, x2: Sequence, shift: Sequence
) -> tuple[np.ndarray, np.ndarray]:
    """Moment of the force pair ``(-F2 at x1, F2 at x2)`` before and after a rigid shift."""
    F2, x1, x2, s = vec(F2), vec(x1), vec(x2), vec(shift)
    dx = x2 - x1
    if is_zero(dx):
        raise ValueError("application points must differ")
    M = cross(dx, F2)
    M_shifted = cross(x1 + s, -F2) + cross(x2 + s, F2)
    return M, M_shifted


def nonassociativity_witness(dx: Sequence, F2: Sequence) -> tuple[np.ndarray, np.ndarray]:
    """``dx x (dx x F2)`` against ``(dx x dx) x F2``; they differ whenever ``dx x F2 != 0``."""
    dx, F2 = vec(dx), vec(F2)
    if is_zero(cross(dx, F2)):
        raise ValueError("dx and F2 must not be parallel")
    return cross(dx, cross(dx, F2)), cross(cross(dx, dx), F2)


# -- conformal maps ---------------------------------------------------------------


def conformal_scenario(
    params: ConformalMapParams,
    mat: IsotropicMaterial,
    kind: ModelKind = ModelKind.MODIFIED_CONFORMAL,
) -> RunReport:
    anchor = "conformal invariance of curvature energy"
    phi = conformal_map(params)
    u = conformal_displacement(params)
    dsg = dev(sym(grad_vector(phi)))
    k = curvature(u)
    m = couple_stress(k, mat, kind)
    w_lin, w_curv = energies(u, mat, kind)
    w = axl(params.W_hat)
    report = RunReport(
        f"scenario conformal --model {kind.value}",
        digest({"W": params.W_hat, "A": params.A_hat, "p": params.p_hat, "b": params.b_hat,
                "mu": mat.mu, "lam": mat.lam, "L_c": mat.L_c,
                "alpha": [mat.alpha1, mat.alpha2, mat.alpha3], "model": kind.value}),
    )
    report.data = {"phi": phi, "curvature": k, "m": m, "W_lin": w_lin, "W_curv": w_curv,
                   "model": kind.value}
    zero33 = zero_field((3, 3))
    checks = [
        check_equal("conformal.dev_sym_grad_zero", anchor, dsg, zero33),
        check_equal("conformal.curvature_is_anti_w", anchor, k, as_field(anti(w))),
        check_equal("conformal.bulk_energy_only", anchor, w_lin, conformal_bulk_energy(u, mat)),
    ]
    if kind is ModelKind.MODIFIED_CONFORMAL:
        checks += [
            check_equal("conformal.modified_m_zero", anchor, m, zero33),
            check_equal("conformal.modified_energy_zero", anchor, w_curv, Poly.zero()),
        ]
    elif kind is ModelKind.SKEW_HD:
        expected = as_field(anti(w) * (2 * mat.mu * mat.L_c**2 * mat.alpha2))
        checks += [
            check_equal("conformal.skew_m_constant", anchor, m, expected),
            Check("conformal.skew_m_antisymmetric", anchor, is_antisymmetric(m)),
        ]
    report.extend(checks)
    return report
