"""
Which parts of a stress field twist a small cube?
=================================================

A smooth stress field is expanded about the centre of a cube and cut into
seven pieces.  Each piece is then classified from two exact integrals: the
couple on every face about that face's centre, and the total moment about
the cube centre.
"""

from fractions import Fraction

from couplestress import Cube, as_field, expand, X1, X2, X3
from couplestress.cube import face_couple_about_cube_center, face_couples
from couplestress.polarity import NOMINAL, classify, couple_stress_from_gradients, pieces

# A quadratic, nonsymmetric stress.  Coefficients are exact rationals.
sigma = as_field([
    [X1 * X2, X3, X2 * X2],
    [Fraction(1, 2) + X1, X2 * X3, 0],
    [X2, X1 * X1, X2 * X3],
])

cube = Cube(center=(0, 0, 0), edge=Fraction(1, 2))
t = expand(sigma, cube.center, cube.edge)

# %%
# Classify every piece.  ``NOMINAL`` is the grouping used when the pieces
# are first introduced; ``classify`` recomputes it from the integrals.
for name, term in pieces(t).items():
    couples = face_couples(term, cube)
    nonzero = sum(any(v != 0 for v in c) for c in couples)
    moment = face_couple_about_cube_center(term, cube)
    print(f"{name:7s} nominal={NOMINAL[name].value:9s} computed={classify(term, cube).value:9s} "
          f"faces with a couple={nonzero}  moment={[str(v) for v in moment]}")

# %%
# The couple stress is read off the first stress gradients.  Column i times
# the face area is the couple of the p2 piece on face i.
m = couple_stress_from_gradients(t)
print("m =")
for row in m:
    print("   ", [str(v) for v in row])
