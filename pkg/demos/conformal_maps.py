"""
Conformal maps carry no curvature energy in the modified model
==============================================================

An infinitesimal conformal map is locally a rotation plus a dilatation.
The modified model gives it no couple stress at all; the skew model gives
a constant skew couple stress.
"""

from fractions import Fraction

from couplestress.models import ConformalMapParams, IsotropicMaterial, ModelKind
from couplestress.scenarios import conformal_scenario

params = ConformalMapParams.from_vectors(w=(0, 0, 1), p=Fraction(1, 2))
material = IsotropicMaterial(mu=1, lam=2, L_c=Fraction(1, 2), alpha1=1, alpha2=Fraction(1, 3))

for kind in (ModelKind.MODIFIED_CONFORMAL, ModelKind.SKEW_HD):
    rep = conformal_scenario(params, material, kind)
    print(kind.value, "checks:", "pass" if rep.passed else "fail")
    for row in rep.data["m"]:
        print("   ", [str(v) for v in row])
