from fractions import Fraction

import numpy as np
import pytest

from couplestress.cube import Cube
from couplestress.fields import X1, X2, X3, as_field, fields_equal, zero_field
from couplestress.models import ConformalMapParams, IsotropicMaterial, ModelKind
from couplestress.scenarios import (
    AppliedCouple,
    TorsionParams,
    TraceFreeFamilyParams,
    basis_a,
    couple_translation_invariance,
    conformal_scenario,
    default_cantilever,
    nonassociativity_witness,
    torsion_scenario,
    trace_free_family,
    trace_free_scenario,
    yang_cantilever_scenario,
    yang_surface_identity,
    yang_surface_scenario,
    yang_third_balance,
)
from couplestress.tensor_core import anti, diag, dot, is_zero, mat, vec

F = Fraction


def eq(a, b):
    return all(x == y for x, y in zip(np.asarray(a).flat, np.asarray(b).flat))


def failed(report):
    return [c.id for c in report.failures]


@pytest.mark.parametrize("L", [F(1), F(3, 2)])
def test_family_single_basis(L):
    _, m_int, m_closed = trace_free_family(TraceFreeFamilyParams(1, 0, 0, L))
    assert eq(m_int, diag(2, -1, -1) * (L**2 / 12)) and eq(m_closed, m_int)


def test_family_balanced_and_scenario():
    _, m_int, _ = trace_free_family(TraceFreeFamilyParams(1, 1, 1))
    assert is_zero(m_int)
    rep = trace_free_scenario(TraceFreeFamilyParams(F(2), F(-1, 2), F(3), F(2)))
    assert rep.passed, failed(rep)
    with pytest.raises(ValueError):
        TraceFreeFamilyParams(1, 0, 0, 0)


@pytest.mark.parametrize(
    "alpha1, agree",
    [(F(1, 12), True), (F(1, 10), False), (F(1, 6), False)],
    ids=["matching_length", "shorter_length", "longer_length"],
)
def test_torsion_matching(alpha1, agree):
    rep = torsion_scenario(TorsionParams(F(1, 100), 1, 1, alpha1, 1))
    assert rep.passed, failed(rep)
    assert rep.data["matching"]["m_paths_agree"] is agree
    assert rep.data["matching"]["condition_holds"] is agree


def test_torsion_values():
    a, mu, dx = F(1, 20), F(5), F(2)
    rep = torsion_scenario(TorsionParams(a, mu, F(1, 2), F(1, 3), dx))
    assert rep.passed, failed(rep)
    assert eq(rep.data["face_couples"]["1"], vec(-mu * a * dx**4 / 12, 0, 0))
    assert eq(rep.data["face_couples"]["3"], vec(0, 0, mu * a * dx**4 / 6))


def test_torsion_zero_twist():
    rep = torsion_scenario(TorsionParams(0, 1, 1, F(1, 12), 1))
    assert rep.passed
    assert fields_equal(rep.data["S2"], zero_field((3, 3)))
    assert all(is_zero(c) for c in rep.data["face_couples"].values())


def test_torsion_rejects_nonpositive_values():
    with pytest.raises(ValueError):
        TorsionParams(F(1, 100), 1, 1, F(1, 12), 0)


def test_cantilever():
    couples = default_cantilever(3, 2)
    assert eq(yang_third_balance(couples), vec(0, 0, 6))
    assert is_zero(yang_third_balance([AppliedCouple((0, 0, 0), c.L) for c in couples]))
    parallel = [AppliedCouple((1, 2, 3), (2, 4, 6)), AppliedCouple((0, 1, 0), (0, -5, 0))]
    assert is_zero(yang_third_balance(parallel))
    rep = yang_cantilever_scenario(F(5, 2), -1)
    assert rep.passed, failed(rep)


def test_surface_identity_examples():
    cube = Cube((1, -1, 0), 2)
    sym_const = as_field(mat([[1, 2, 0], [2, 0, 3], [0, 3, 1]]))
    assert is_zero(yang_surface_identity(sym_const, cube)[2])
    c = vec(1, 2, -1)
    surface, volume, skew_only = yang_surface_identity(as_field(anti(c)), cube)
    assert eq(skew_only, c * 2 * cube.volume) and eq(surface, volume)
    assert yang_surface_scenario().passed


def test_couple_translation():
    M, Ms = couple_translation_invariance((-1, 0, 0), (0, 0, 0), (0, 1, 0), (3, -2, F(1, 2)))
    assert eq(M, vec(0, 0, 1)) and eq(Ms, M)
    M, Ms = couple_translation_invariance((0, 2, 0), (0, 0, 0), (0, 1, 0), (0, 0, 0))
    assert is_zero(M) and eq(M, Ms)
    with pytest.raises(ValueError):
        couple_translation_invariance((1, 0, 0), (1, 1, 1), (1, 1, 1), (0, 0, 0))


def test_nonassociativity():
    dx, F2 = vec(0, 1, 0), vec(-1, 0, 0)
    lhs, rhs = nonassociativity_witness(dx, F2)
    assert eq(lhs, dx * dot(dx, F2) - F2 * dot(dx, dx))
    assert eq(lhs, vec(1, 0, 0)) and is_zero(rhs)
    assert dot(lhs, lhs) == dot(dx, dx) ** 2 * dot(F2, F2)
    with pytest.raises(ValueError):
        nonassociativity_witness((1, 2, 3), (2, 4, 6))


@pytest.mark.parametrize("kind", [ModelKind.MODIFIED_CONFORMAL, ModelKind.SKEW_HD, ModelKind.INDETERMINATE])
def test_conformal_scenario(kind):
    params = ConformalMapParams.from_vectors(w=(0, 0, 1), a=(1, 0, 0), p=F(1, 3), b=(1, 1, 1))
    rep = conformal_scenario(params, IsotropicMaterial(1, 1, 1, F(1, 2), F(1, 3)), kind)
    assert rep.passed, failed(rep)
