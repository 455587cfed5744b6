"""Seeded property suites over random rational polynomial fields.

Random numbers come from xorshift64* so that any implementation can replay
the exact stream::

    x ^= x >> 12;  x ^= (x << 25) mod 2^64;  x ^= x >> 27
    output = (x * 0x2545F4914F6CDD1D) mod 2^64

A coefficient takes two outputs: numerator ``o1 mod 7 - 3`` and denominator
``(1, 2, 4)[o2 mod 3]``.  A random polynomial draws one coefficient per
monomial, degrees ascending and, within a degree, exponent triples in
descending lexicographic order.  Each identity runs on its own stream seeded
with the first 8 bytes (big endian) of ``sha256(f"{seed}:{check_id}")``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import cube as _cube
from .cube import Cube, FACES
from .fieldio import FieldDocument, parse_field_document, serialize_field_document
from .fields import (
    curl_vector,
    div_tensor,
    div_vector,
    evaluate,
    fields_equal,
    grad_scalar,
    grad_vector,
    pushforward_rotation,
    zero_field,
)
from .models import (
    ConformalMapParams,
    IsotropicMaterial,
    ModelKind,
    balance_residuals,
    conformal_displacement,
    conformal_map,
    couple_stress,
    curvature,
    energies,
    ghiba_couple_stress,
    nonlocal_stress,
    strain,
    total_stress,
)
from .poly import Poly
from .polarity import (
    angular_balance_residual,
    angular_balance_residual_from_faces,
    chi,
    classify,
    couple_stress_field,
    couple_stress_from_gradients,
    expand,
    grad_tr_decomposition,
    pieces,
    psi,
    split_bilinear,
    split_linear,
    Polarity,
)
from .reports import Check, RunReport, digest
from .scenarios import TraceFreeFamilyParams, trace_free_family, yang_surface_identity
from .tensor_core import (
    anti,
    axl,
    cross,
    decompose,
    det,
    dev,
    dot,
    is_antisymmetric,
    is_symmetric,
    is_zero,
    mat,
    rotate_tensor,
    skew,
    sym,
    trace,
    vec,
    zero_vec,
)

__all__ = [
    "XorShift64Star",
    "ROTATIONS",
    "CUBE_ROTATIONS",
    "random_rational",
    "random_poly",
    "random_vector_field",
    "random_tensor_field",
    "random_symmetric_field",
    "random_vec",
    "random_mat",
    "random_cube",
    "IDENTITY_CHECKS",
    "run_verify",
]

MASK = (1 << 64) - 1
_DENOMS = (1, 2, 4)


class XorShift64Star:
    def __init__(self, seed: int):
        s = seed & MASK
        self.state = s if s else 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK

    def below(self, n: int) -> int:
        return self.next() % n


def random_rational(rng: XorShift64Star) -> Fraction:
    num = rng.below(7) - 3
    return Fraction(num, _DENOMS[rng.below(3)])


def _graded_exponents(max_degree: int):
    for d in range(max_degree + 1):
        for i in range(d, -1, -1):
            for j in range(d - i, -1, -1):
                yield (i, j, d - i - j)


def random_poly(rng: XorShift64Star, max_degree: int) -> Poly:
    return Poly({e: random_rational(rng) for e in _graded_exponents(max_degree)})


def random_vector_field(rng, max_degree: int) -> np.ndarray:
    return np.array([random_poly(rng, max_degree) for _ in range(3)], dtype=object)


def random_tensor_field(rng, max_degree: int) -> np.ndarray:
    out = np.empty((3, 3), dtype=object)
    for idx in np.ndindex(3, 3):
        out[idx] = random_poly(rng, max_degree)
    return out


def random_symmetric_field(rng, max_degree: int) -> np.ndarray:
    out = np.empty((3, 3), dtype=object)
    for i in range(3):
        for j in range(i, 3):
            out[i, j] = out[j, i] = random_poly(rng, max_degree)
    return out


def random_vec(rng) -> np.ndarray:
    return vec(*(random_rational(rng) for _ in range(3)))


def random_mat(rng) -> np.ndarray:
    return mat([[random_rational(rng) for _ in range(3)] for _ in range(3)])


def random_cube(rng) -> Cube:
    edges = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2))
    return Cube(tuple(random_vec(rng)), edges[rng.below(4)])


def _rot(c, s, axis) -> np.ndarray:
    c, s = Fraction(c), Fraction(s)
    m = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    a, b = [k for k in range(3) if k != axis]
    m[a][a], m[a][b], m[b][a], m[b][b] = c, -s, s, c
    return mat(m)


# exact rotations from Pythagorean triples
ROTATIONS: tuple[np.ndarray, ...] = (
    _rot(Fraction(3, 5), Fraction(4, 5), 2),
    _rot(Fraction(5, 13), Fraction(12, 13), 0),
    _rot(Fraction(8, 17), Fraction(-15, 17), 1),
    _rot(Fraction(3, 5), Fraction(4, 5), 2) @ _rot(Fraction(5, 13), Fraction(12, 13), 0),
    mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
)


def _cube_rotations() -> tuple[np.ndarray, ...]:
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            P = mat([[signs[i] if j == perm[i] else 0 for j in range(3)] for i in range(3)])
            if det(P) == 1:
                out.append(P)
    return tuple(out)


# the 24 proper rotations mapping the cube onto itself
CUBE_ROTATIONS = _cube_rotations()


# -- identity suites ----------------------------------------------------------------

Trial = Callable[[XorShift64Star, int], tuple[bool, object, object]]


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    anchor: str
    trial: Trial


def _eq(a, b) -> tuple[bool, object, object]:
    return fields_equal(a, b), a, b


def _zero3() -> np.ndarray:
    return zero_field((3,))


def t_decompose(rng, d):
    X = random_mat(rng)
    ds, sk, sp = decompose(X)
    ok = (
        is_zero(ds + sk + sp - X)
        and trace(ds) == 0
        and is_symmetric(ds)
        and is_antisymmetric(sk)
    )
    return ok, X, ds + sk + sp


def t_axl_anti(rng, d):
    v = random_vec(rng)
    A = anti(v)
    return bool(is_zero(axl(A) - v) and is_zero(anti(axl(A)) - A)), axl(A), v


def t_anti_cross(rng, d):
    a, b = random_vec(rng), random_vec(rng)
    return _eq(anti(a) @ b, cross(a, b))


def t_rotation_trace(rng, d):
    X = random_mat(rng)
    Q = ROTATIONS[rng.below(len(ROTATIONS))]
    return _eq(trace(rotate_tensor(Q, X)), trace(X))


def t_curl_axl(rng, d):
    v = random_vector_field(rng, d)
    return _eq(curl_vector(v), axl(skew(grad_vector(v))) * 2)


def t_div_curl(rng, d):
    v = random_vector_field(rng, d)
    return _eq(div_vector(curl_vector(v)), Poly.zero())


def t_curl_grad(rng, d):
    phi = random_poly(rng, d)
    return _eq(curl_vector(grad_scalar(phi)), _zero3())


def t_tr_grad_curl(rng, d):
    u = random_vector_field(rng, d)
    return _eq(trace(grad_vector(curl_vector(u))), Poly.zero())


def t_second_derivatives(rng, d):
    u = random_vector_field(rng, d)
    eps = strain(u)
    for i, j, k in np.ndindex(3, 3, 3):
        lhs = u[i].diff(j).diff(k)
        rhs = eps[j, i].diff(k) + eps[k, i].diff(j) - eps[j, k].diff(i)
        if lhs != rhs:
            return False, lhs, rhs
    return True, None, None


def t_evaluation(rng, d):
    f, g = random_poly(rng, d), random_poly(rng, d)
    p = random_vec(rng)
    lhs = ((f + g).evaluate(p), (f * g).evaluate(p))
    rhs = (f.evaluate(p) + g.evaluate(p), f.evaluate(p) * g.evaluate(p))
    return lhs == rhs, list(lhs), list(rhs)


def t_gauss(rng, d):
    s = random_tensor_field(rng, d)
    c = random_cube(rng)
    return _eq(_cube.face_traction_sum(s, c), _cube.integrate_volume_field(div_tensor(s), c))


def t_cross_divergence(rng, d):
    A = random_tensor_field(rng, d)
    lhs, rhs = _cube.divergence_theorem_cross_check(A, random_cube(rng))
    return _eq(lhs, rhs)


def _taylor(rng, d, symmetric=False):
    s = random_symmetric_field(rng, d) if symmetric else random_tensor_field(rng, d)
    c = random_cube(rng)
    return s, c, expand(s, c.center, c.edge)


def t_reconstruct(rng, d):
    s, c, t = _taylor(rng, min(d, 2))
    return _eq(t.reconstruct(), s)


def t_reexpand(rng, d):
    s, c, t = _taylor(rng, d)
    r = t.reconstruct()
    t2 = expand(r, c.center, c.edge)
    return _eq(t2.reconstruct(), r)


def t_linear_split(rng, d):
    s, c, t = _taylor(rng, d)
    a, b, e = split_linear(t)
    return _eq(a + b + e, t.linear_term())


def t_bilinear_split(rng, d):
    s, c, t = _taylor(rng, d)
    b1, b2 = split_bilinear(t)
    return _eq(b1 + b2, t.bilinear_term())


def t_higher_no_force(rng, d):
    s, c, t = _taylor(rng, d)
    b1, b2 = split_bilinear(t)
    return _eq(_cube.face_traction_sum(b1 + b2 + t.quadratic_term(), c), zero_vec())


def t_m_columns(rng, d):
    s, c, t = _taylor(rng, d)
    m = couple_stress_from_gradients(t)
    p2 = split_linear(t)[2]
    for i in range(3):
        fc = _cube.face_couple_about_face_center(p2, c, FACES[i])
        if not fields_equal(fc, m[:, i] * c.face_area):
            return False, fc, m[:, i] * c.face_area
    return True, None, None


def t_p_opposite_faces(rng, d):
    s, c, t = _taylor(rng, d)
    _, p1, p2 = split_linear(t)
    p = p1 + p2
    for i in range(3):
        a = _cube.face_couple_about_face_center(p, c, FACES[i])
        b = _cube.face_couple_about_face_center(p, c, FACES[i + 3])
        if not fields_equal(b, -a):
            return False, b, -a
    return True, None, None


def t_p2_neutral(rng, d):
    s, c, t = _taylor(rng, d)
    return _eq(_cube.face_couple_about_cube_center(split_linear(t)[2], c), zero_vec())


def t_p1_no_couples(rng, d):
    s, c, t = _taylor(rng, d)
    p1 = split_linear(t)[1]
    couples = _cube.face_couples(p1, c)
    return all(is_zero(x) for x in couples), couples, None


def t_b1_nonpolar(rng, d):
    s, c, t = _taylor(rng, d)
    cls = classify(split_bilinear(t)[0], c)
    return cls is Polarity.NONPOLAR, cls, Polarity.NONPOLAR


def t_bipolar(rng, d):
    s, c, t = _taylor(rng, d)
    b2 = split_bilinear(t)[1]
    lhs = _cube.face_couple_about_cube_center(b2, c)
    rhs = evaluate(div_tensor(couple_stress_field(s, c.edge)), c.center) * c.volume
    return _eq(lhs, rhs)


def t_semipolar(rng, d):
    s, c, t = _taylor(rng, d)
    lhs = _cube.face_couple_about_cube_center(t.quadratic_term(), c)
    ch = chi(s, c.center, c.edge)
    div_psi = evaluate(div_tensor(psi(s, c.edge)), c.center)
    rhs = (axl(skew(ch)) * 2 + div_psi) * c.volume
    return _eq(lhs, rhs)


def t_trace_free(rng, d):
    s, c, t = _taylor(rng, d, symmetric=True)
    return _eq(trace(couple_stress_from_gradients(t)), Fraction(0))


def t_chi_objective(rng, d):
    # chi sums no index, so it only transforms as a tensor under cube symmetries
    s = random_tensor_field(rng, d)
    Q = CUBE_ROTATIONS[rng.below(len(CUBE_ROTATIONS))]
    L = Fraction(1 + rng.below(3))
    x0 = (0, 0, 0)
    return _eq(chi(pushforward_rotation(s, Q), x0, L), Q @ chi(s, x0, L) @ Q.T)


def t_grad_tr(rng, d):
    s = random_tensor_field(rng, d)
    a, b = grad_tr_decomposition(s, Fraction(1 + rng.below(3)))
    return _eq(a + b, grad_scalar(trace(s)))


def t_angular_paths(rng, d):
    s, c, t = _taylor(rng, d)
    cc = random_vec(rng)
    return _eq(angular_balance_residual(s, c, cc), angular_balance_residual_from_faces(s, c, cc))


def _material(rng) -> IsotropicMaterial:
    pos = lambda: Fraction(1 + rng.below(4), _DENOMS[rng.below(3)])  # noqa: E731
    return IsotropicMaterial(pos(), random_rational(rng), pos(), pos(), pos(), random_rational(rng))


def t_tr_curvature(rng, d):
    return _eq(trace(curvature(random_vector_field(rng, d))), Poly.zero())


def t_tr_m(rng, d):
    u = random_vector_field(rng, d)
    mt = _material(rng)
    k = curvature(u)
    for kind in (ModelKind.INDETERMINATE, ModelKind.MODIFIED_CONFORMAL, ModelKind.SKEW_HD):
        if trace(couple_stress(k, mt, kind)) != 0:
            return False, kind, None
    return _eq(trace(ghiba_couple_stress(u, mt)), Poly.zero())


def t_tau(rng, d):
    m = random_tensor_field(rng, d)
    tau = nonlocal_stress(m)
    ok = is_antisymmetric(tau)
    lhs = div_tensor(m) + axl(tau) * 2
    return ok and fields_equal(lhs, _zero3()), lhs, _zero3()


def t_ghiba_div(rng, d):
    u = random_vector_field(rng, d)
    mt = _material(rng)
    diff = total_stress(u, ModelKind.INDETERMINATE, mt) - total_stress(u, ModelKind.GHIBA, mt)
    return _eq(div_tensor(diff), _zero3())


def t_ghiba_sym(rng, d):
    u = random_vector_field(rng, d)
    s_hat = total_stress(u, ModelKind.GHIBA, _material(rng))
    return is_symmetric(s_hat), s_hat, s_hat.T


def _conformal(rng) -> ConformalMapParams:
    return ConformalMapParams.from_vectors(
        w=random_vec(rng), a=random_vec(rng), p=random_rational(rng), b=random_vec(rng)
    )


def t_conformal_dev(rng, d):
    phi = conformal_map(_conformal(rng))
    return _eq(dev(sym(grad_vector(phi))), zero_field((3, 3)))


def t_conformal_modified(rng, d):
    u = conformal_displacement(_conformal(rng))
    mt = _material(rng)
    m = couple_stress(curvature(u), mt, ModelKind.MODIFIED_CONFORMAL)
    w_curv = energies(u, mt, ModelKind.MODIFIED_CONFORMAL)[1]
    return fields_equal(m, zero_field((3, 3))) and w_curv == 0, m, w_curv


def t_conformal_skew(rng, d):
    params = _conformal(rng)
    mt = _material(rng)
    m = couple_stress(curvature(conformal_displacement(params)), mt, ModelKind.SKEW_HD)
    expected = anti(axl(params.W_hat)) * (2 * mt.mu * mt.L_c**2 * mt.alpha2)
    return _eq(m, zero_field((3, 3)) + expected)


def t_angular_is_c(rng, d):
    u = random_vector_field(rng, d)
    c = random_vec(rng)
    _, ang = balance_residuals(u, zero_vec(), c, _material(rng))
    return _eq(ang, zero_field((3,)) + c)


def t_yang_surface(rng, d):
    m = random_tensor_field(rng, d)
    surface, volume, _ = yang_surface_identity(m, random_cube(rng))
    return _eq(surface, volume)


def t_family(rng, d):
    p = TraceFreeFamilyParams(
        random_rational(rng), random_rational(rng), random_rational(rng),
        Fraction(1 + rng.below(3), _DENOMS[rng.below(3)]),
    )
    sigma, m_int, m_closed = trace_free_family(p)
    ok = fields_equal(m_int, m_closed) and trace(m_int) == 0 and fields_equal(div_tensor(sigma), _zero3())
    return ok, m_int, m_closed


def t_field_roundtrip(rng, d):
    doc = FieldDocument()
    doc.add("sigma", random_tensor_field(rng, d))
    doc.add("u", random_vector_field(rng, d))
    doc.add("phi", random_poly(rng, d))
    text = serialize_field_document(doc)
    again = serialize_field_document(parse_field_document(text))
    return text == again, len(text), len(again)


def t_cross_orthogonal(rng, d):
    a, b = random_vec(rng), random_vec(rng)
    return _eq(dot(cross(a, b), a), Fraction(0))


def t_polarity_pieces(rng, d):
    s, c, t = _taylor(rng, d)
    ps = pieces(t)
    got = classify(ps["q"], c), classify(ps["np"], c)
    ok = got[0] in (Polarity.SEMIPOLAR, Polarity.NONPOLAR) and got[1] is Polarity.NONPOLAR
    return ok, [g.value for g in got], None


_A_FIELD = "vector and tensor identities"
_A_CUBE = "cube integrals and divergence theorems"
_A_TAYLOR = "Taylor split of stress on the cube"
_A_MODEL = "couple-stress constitutive models"

IDENTITY_CHECKS: tuple[IdentityCheck, ...] = (
    IdentityCheck("tensor.decompose_reconstructs", _A_FIELD, t_decompose),
    IdentityCheck("tensor.axl_anti_roundtrip", _A_FIELD, t_axl_anti),
    IdentityCheck("tensor.anti_is_cross", _A_FIELD, t_anti_cross),
    IdentityCheck("tensor.cross_orthogonal", _A_FIELD, t_cross_orthogonal),
    IdentityCheck("tensor.rotation_trace_invariance", _A_FIELD, t_rotation_trace),
    IdentityCheck("field.curl_is_2axl_skew_grad", _A_FIELD, t_curl_axl),
    IdentityCheck("field.div_curl_zero", _A_FIELD, t_div_curl),
    IdentityCheck("field.curl_grad_zero", _A_FIELD, t_curl_grad),
    IdentityCheck("field.tr_grad_curl_zero", _A_FIELD, t_tr_grad_curl),
    IdentityCheck("field.second_derivatives_from_strain", _A_FIELD, t_second_derivatives),
    IdentityCheck("field.evaluation_homomorphism", _A_FIELD, t_evaluation),
    IdentityCheck("cube.gauss_consistency", _A_CUBE, t_gauss),
    IdentityCheck("cube.cross_divergence_theorem", _A_CUBE, t_cross_divergence),
    IdentityCheck("taylor.reconstruction", _A_TAYLOR, t_reconstruct),
    IdentityCheck("taylor.reexpand_idempotent", _A_TAYLOR, t_reexpand),
    IdentityCheck("taylor.linear_split_sum", _A_TAYLOR, t_linear_split),
    IdentityCheck("taylor.bilinear_split_sum", _A_TAYLOR, t_bilinear_split),
    IdentityCheck("taylor.second_order_no_force", _A_TAYLOR, t_higher_no_force),
    IdentityCheck("taylor.m_columns_are_p2_face_couples", _A_TAYLOR, t_m_columns),
    IdentityCheck("taylor.p_opposite_faces_cancel", _A_TAYLOR, t_p_opposite_faces),
    IdentityCheck("taylor.p2_angular_neutral", _A_TAYLOR, t_p2_neutral),
    IdentityCheck("taylor.p1_face_couples_vanish", _A_TAYLOR, t_p1_no_couples),
    IdentityCheck("taylor.b1_nonpolar", _A_TAYLOR, t_b1_nonpolar),
    IdentityCheck("taylor.bipolar_identity", _A_TAYLOR, t_bipolar),
    IdentityCheck("taylor.semipolar_identity", _A_TAYLOR, t_semipolar),
    IdentityCheck("taylor.trace_free_m_symmetric_stress", _A_TAYLOR, t_trace_free),
    IdentityCheck("taylor.chi_cube_rotation_covariance", _A_TAYLOR, t_chi_objective),
    IdentityCheck("taylor.grad_tr_decomposition", _A_TAYLOR, t_grad_tr),
    IdentityCheck("taylor.angular_residual_two_paths", _A_TAYLOR, t_angular_paths),
    IdentityCheck("taylor.np_nonpolar_q_no_face_couples", _A_TAYLOR, t_polarity_pieces),
    IdentityCheck("model.tr_curvature_zero", _A_MODEL, t_tr_curvature),
    IdentityCheck("model.tr_m_zero", _A_MODEL, t_tr_m),
    IdentityCheck("model.nonlocal_stress_balance", _A_MODEL, t_tau),
    IdentityCheck("model.symmetric_variant_same_divergence", _A_MODEL, t_ghiba_div),
    IdentityCheck("model.symmetric_variant_is_symmetric", _A_MODEL, t_ghiba_sym),
    IdentityCheck("model.angular_residual_is_c", _A_MODEL, t_angular_is_c),
    IdentityCheck("conformal.dev_sym_grad_zero", "conformal maps", t_conformal_dev),
    IdentityCheck("conformal.modified_no_response", "conformal maps", t_conformal_modified),
    IdentityCheck("conformal.skew_constant_response", "conformal maps", t_conformal_skew),
    IdentityCheck("scenario.surface_moment_identity", "surface moment of couple tractions", t_yang_surface),
    IdentityCheck("scenario.trace_free_family", "symmetric stress family", t_family),
    IdentityCheck("io.field_document_roundtrip", "field document format", t_field_roundtrip),
)


def check_seed(seed: int, check_id: str) -> int:
    h = hashlib.sha256(f"{seed}:{check_id}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def run_identity(check: IdentityCheck, seed: int, trials: int, max_degree: int) -> Check:
    rng = XorShift64Star(check_seed(seed, check.id))
    for n in range(trials):
        ok, lhs, rhs = check.trial(rng, max_degree)
        if not ok:
            return Check(check.id, check.anchor, False, lhs, rhs, f"failed at trial {n + 1} of {trials}")
    return Check(check.id, check.anchor, True, None, None, f"{trials} trials")


def run_verify(
    seed: int = 42,
    trials: int = 50,
    max_degree: int = 4,
    only: str | None = None,
) -> RunReport:
    """Run every identity suite; ``only`` restricts to ids with that prefix."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    report = RunReport(
        "verify", digest({"seed": seed, "trials": trials, "max_degree": max_degree, "only": only})
    )
    report.data = {"seed": seed, "trials": trials, "max_degree": max_degree}
    for check in IDENTITY_CHECKS:
        if only and not check.id.startswith(only):
            continue
        report.checks.append(run_identity(check, seed, trials, max_degree))
    return report
