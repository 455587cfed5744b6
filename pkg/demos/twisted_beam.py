"""
A twisted beam and the length scale it fixes
============================================

A linearised twist u = abar (-y z, x z, 0) gives a constant curvature and
a constant couple stress.  The same couple stress can be read off the
linear shear stress on a cube of edge dx.  Both routes agree only when
L_c^2 alpha1 = dx^2 / 12.
"""

from fractions import Fraction

from couplestress.scenarios import TorsionParams, torsion_scenario

for alpha1 in (Fraction(1, 12), Fraction(1, 10)):
    rep = torsion_scenario(TorsionParams(alpha_bar=Fraction(1, 100), mu=1, L_c=1, alpha1=alpha1, dx=1))
    match = rep.data["matching"]
    print(f"alpha1 = {alpha1}: L_c^2 alpha1 = {match['L_c^2 alpha1']}, dx^2/12 = {match['dx^2/12']}, "
          f"routes agree: {match['m_paths_agree']}")

# %%
# The couples on the six faces.  Faces 4 to 6 mirror faces 1 to 3, and
# the e3 couple is twice the e1 couple with the opposite sign.
for face, couple in rep.data["face_couples"].items():
    print(f"face {face}: {[str(v) for v in couple]}")

print("all checks passed:", rep.passed)
