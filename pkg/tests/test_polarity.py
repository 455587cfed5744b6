from fractions import Fraction

import numpy as np
import pytest

from couplestress.cube import Cube, face_couple_about_cube_center, face_couple_about_face_center, face_couples, face_traction_sum, FACES
from couplestress.fields import X1, X2, X3, as_field, evaluate, fields_equal, grad_scalar, zero_field
from couplestress.polarity import (
    NOMINAL,
    Polarity,
    analyze,
    angular_balance_residual,
    angular_balance_residual_from_faces,
    chi,
    classify,
    couple_stress_from_gradients,
    expand,
    grad_tr_decomposition,
    linear_balance_residual,
    pieces,
    psi,
    rotational_invariance_check,
    rotational_invariance_faces,
    split_bilinear,
    split_linear,
    split_torsion_bending,
    symmetry_conditions_check,
)
from couplestress.scenarios import basis_a, basis_c
from couplestress.tensor_core import IDENTITY, axl, diag, is_zero, mat, skew, trace, vec
from couplestress.verify import XorShift64Star, random_cube, random_symmetric_field, random_tensor_field

F = Fraction
ORIGIN = (0, 0, 0)


def eq(a, b):
    return all(x == y for x, y in zip(np.asarray(a).flat, np.asarray(b).flat))


def single(i, j, p):
    s = zero_field((3, 3))
    s[i, j] = p
    return s


def test_expand_constant_and_basis_a():
    t = expand(as_field(mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])), ORIGIN, 1)
    assert is_zero(t.d1) and is_zero(t.d2_mixed) and is_zero(t.d2_pure)
    a = F(3)
    t = expand(basis_a() * a, ORIGIN, 1)
    assert is_zero(t.sigma0)
    assert t.d1[0, 1, 2] == -a and t.d1[1, 0, 2] == -a
    assert t.d1[0, 2, 1] == a and t.d1[2, 0, 1] == a
    assert np.count_nonzero([v != 0 for v in t.d1.flat]) == 4
    assert is_zero(t.d2_mixed) and is_zero(t.d2_pure)


def test_expand_mixed_derivative():
    t = expand(single(2, 2, X2 * X3), ORIGIN, 1)
    assert t.d2_mixed[2, 2, 2] == 1  # pair index 2 is (x2, x3)
    assert sum(1 for v in t.d2_mixed.flat if v != 0) == 1


def test_truncation_error_reported():
    assert expand(single(0, 0, X1**2), ORIGIN, 1).truncation_error == 0
    assert expand(single(0, 0, X1**3 * 2), ORIGIN, 1).truncation_error == 2


@pytest.mark.parametrize(
    "i, j, p, piece",
    [(0, 1, X2, 0), (0, 1, X1, 1), (2, 2, X2, 2)],
    ids=["shear_along_own_plane_is_np", "p1_entry", "p2_entry"],
)
def test_linear_split_examples(i, j, p, piece):
    parts = split_linear(expand(single(i, j, p), ORIGIN, 1))
    for n, part in enumerate(parts):
        assert is_zero(part) != (n == piece)


def test_bilinear_split_examples():
    b1, b2 = split_bilinear(expand(single(2, 2, X2 * X3), ORIGIN, 1))
    assert is_zero(b1) and not is_zero(b2)
    b1, b2 = split_bilinear(expand(single(0, 1, X1 * X2), ORIGIN, 1))
    assert not is_zero(b1) and is_zero(b2)
    b1, b2 = split_bilinear(expand(zero_field((3, 3)), ORIGIN, 1))
    assert is_zero(b1) and is_zero(b2)


def test_classify_examples():
    cube = Cube(ORIGIN, 1)
    assert classify(as_field(mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]])), cube) is Polarity.SEMIPOLAR
    rng = XorShift64Star(5)
    t = expand(random_tensor_field(rng, 2), ORIGIN, 1)
    assert classify(split_linear(t)[0], cube) is Polarity.NONPOLAR
    b2 = split_bilinear(expand(single(2, 2, X2 * X3), ORIGIN, 1))[1]
    assert classify(b2, cube) is Polarity.BIPOLAR
    q = expand(single(2, 1, X2 * X2), ORIGIN, 1).quadratic_term()
    assert classify(q, cube) is Polarity.SEMIPOLAR


def test_nominal_grouping():
    assert NOMINAL["p1"] is Polarity.POLAR and NOMINAL["q"] is Polarity.SEMIPOLAR


def test_couple_stress_examples():
    for L in (F(1), F(2, 3)):
        a = F(5)
        m = couple_stress_from_gradients(expand(basis_a() * a, ORIGIN, L))
        assert eq(m, diag(2 * a, -a, -a) * (L**2 / 12))
        m = couple_stress_from_gradients(expand(single(2, 2, X2), ORIGIN, L))
        expected = mat([[0, 0, L**2 / 12], [0, 0, 0], [0, 0, 0]])
        assert eq(m, expected)


@pytest.mark.parametrize("seed", range(10))
def test_symmetric_fields_give_trace_free_m(seed):
    rng = XorShift64Star(seed)
    cube = random_cube(rng)
    t = expand(random_symmetric_field(rng, 3), cube.center, cube.edge)
    assert trace(couple_stress_from_gradients(t)) == 0


@pytest.mark.parametrize("seed", range(6))
def test_piece_properties(seed):
    rng = XorShift64Star(200 + seed)
    cube = random_cube(rng)
    s = random_tensor_field(rng, 2)
    t = expand(s, cube.center, cube.edge)
    parts = pieces(t)
    total = sum(parts.values(), zero_field((3, 3)))
    assert fields_equal(total, s)
    assert is_zero(face_traction_sum(parts["b1"] + parts["b2"] + parts["q"], cube))
    assert is_zero(face_couple_about_cube_center(parts["p2"], cube))
    assert all(is_zero(c) for c in face_couples(parts["p1"], cube))
    m = couple_stress_from_gradients(t)
    for i in range(3):
        assert eq(face_couple_about_face_center(parts["p2"], cube, FACES[i]), m[:, i] * cube.edge**2)


def test_split_torsion_bending():
    m = diag(1, 2, -3)
    tor, ben = split_torsion_bending(m)
    assert eq(tor, m) and is_zero(ben)
    off = mat([[0, 1, 2], [3, 0, 4], [5, 6, 0]])
    tor, ben = split_torsion_bending(off)
    assert is_zero(tor) and eq(ben, off)


def test_chi_examples():
    L = F(2)
    ch = chi(single(2, 1, X2 * X2), ORIGIN, L)
    expected = mat([[0, 0, 0], [0, 0, 0], [0, L**2 / 6, 0]])
    assert eq(ch, expected)
    assert eq(axl(skew(ch), check=False) * 2, vec(L**2 / 6, 0, 0))
    rng = XorShift64Star(3)
    assert is_zero(chi(random_tensor_field(rng, 1), (1, 2, 3), L))


def test_psi_examples():
    L = F(3)
    assert fields_equal(psi(random_symmetric_field(XorShift64Star(4), 3), L), zero_field((3, 3)))
    assert fields_equal(psi(as_field(mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]])), L), zero_field((3, 3)))
    p = psi(single(1, 0, X1 * X1), L)
    assert p[2, 0] == X1 * (L**2 / 12)


def test_angular_residual_examples():
    cube = Cube(ORIGIN, 2)
    s = random_symmetric_field(XorShift64Star(8), 1)
    assert is_zero(angular_balance_residual(s, cube))
    assert is_zero(angular_balance_residual(basis_a() * 4, cube))
    r = angular_balance_residual(single(2, 2, X2 * X3), cube)
    assert eq(r, vec(cube.edge**2 / 12, 0, 0))
    c = vec(1, 2, 3)
    assert eq(angular_balance_residual(basis_a(), cube, c), c)


@pytest.mark.parametrize("seed", range(6))
def test_angular_residual_two_paths(seed):
    rng = XorShift64Star(300 + seed)
    cube = random_cube(rng)
    s = random_tensor_field(rng, 2)
    assert eq(angular_balance_residual(s, cube), angular_balance_residual_from_faces(s, cube))


def test_linear_residual():
    assert eq(linear_balance_residual(single(0, 0, X1), ORIGIN, (-1, 0, 0)), vec(0, 0, 0))


def test_grad_tr_decomposition():
    L = F(2)
    d, k = grad_tr_decomposition(as_field(IDENTITY) * X1, L)
    assert fields_equal(d + k, as_field([3, 0, 0]))
    d, k = grad_tr_decomposition(single(0, 0, X2), L)
    assert fields_equal(d, zero_field((3,)))
    assert fields_equal(d + k, grad_scalar(X2))


def test_grad_tr_with_spherical_linear_field_is_not_split_trivially():
    # Only the diagonal gradients sigma_kk,k enter the first summand.
    d, k = grad_tr_decomposition(as_field(IDENTITY) * X1, 1)
    assert fields_equal(d, as_field([1, 0, 0]))
    assert fields_equal(k, as_field([2, 0, 0]))


def test_symmetry_predicates():
    # B_a is invariant about e1 only (sigma_31,2 = 1, sigma_21,3 = -1); B_c about e3 only
    assert rotational_invariance_faces(basis_a()) == (True, False, False)
    assert not rotational_invariance_check(basis_a())
    S2 = basis_c()
    assert rotational_invariance_faces(S2) == (False, False, True)
    assert symmetry_conditions_check(S2)
    assert not symmetry_conditions_check(single(0, 0, X3))
    from couplestress.scenarios import basis_b

    balanced = basis_a() + basis_b() + basis_c()
    assert rotational_invariance_check(balanced) and symmetry_conditions_check(balanced)


def test_analyze_basis_a():
    rep = analyze(basis_a(), ORIGIN, 1)
    assert eq(rep.m, diag(F(2, 12), F(-1, 12), F(-1, 12)))
    assert is_zero(rep.linear_residual) and is_zero(rep.angular_residual)
    assert rep.m_merged is None
    merged = analyze(basis_a(), ORIGIN, 1, merge_psi=True)
    assert eq(merged.m_merged, merged.m + merged.psi_at_x0)
    assert eq(merged.angular_residual, rep.angular_residual)


def test_analyze_constant_nonsymmetric():
    C = mat([[1, 2, 0], [-1, 3, 0], [0, 0, 0]])
    rep = analyze(as_field(C), ORIGIN, 1)
    s0 = next(p for p in rep.pieces if p.name == "sigma0")
    assert s0.computed is Polarity.SEMIPOLAR
    assert eq(rep.angular_residual, axl(skew(C), check=False) * 2)
