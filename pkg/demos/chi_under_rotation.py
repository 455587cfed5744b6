"""
How chi transforms under rotations
==================================

chi collects the pure second derivatives sigma_ik,kk with no sum over k.
Such an expression only transforms like a tensor under rotations that map
the coordinate axes onto each other.  A 3-4-5 rotation about e3 shows the
difference.
"""

from fractions import Fraction

from couplestress.fields import X2, pushforward_rotation, zero_field
from couplestress.polarity import chi
from couplestress.tensor_core import mat
from couplestress.verify import CUBE_ROTATIONS

sigma = zero_field((3, 3))
sigma[0, 0] = X2 * X2

Q = mat([[Fraction(3, 5), Fraction(-4, 5), 0], [Fraction(4, 5), Fraction(3, 5), 0], [0, 0, 1]])
lhs = chi(pushforward_rotation(sigma, Q), (0, 0, 0), 1)
rhs = Q @ chi(sigma, (0, 0, 0), 1) @ Q.T
print("chi of rotated field:", [[str(v) for v in row] for row in lhs])
print("rotated chi:         ", [[str(v) for v in row] for row in rhs])

# %%
# For the 24 rotations of the cube onto itself the two sides agree.
agree = sum(
    all(a == b for a, b in zip(chi(pushforward_rotation(sigma, R), (0, 0, 0), 1).flat,
                                 (R @ chi(sigma, (0, 0, 0), 1) @ R.T).flat))
    for R in CUBE_ROTATIONS
)
print(f"cube rotations where chi transforms as a tensor: {agree}/{len(CUBE_ROTATIONS)}")
