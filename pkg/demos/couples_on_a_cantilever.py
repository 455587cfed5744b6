"""
Moments of couples on a rigid cantilever
========================================

A cantilever clamped at the origin carries a tip couple.  The wall answers
with the opposite couple, so the body is in equilibrium.  Summing x cross L
over the couples, as a proposed extra balance law would require, still
gives a nonzero vector.
"""

from fractions import Fraction

from couplestress.scenarios import AppliedCouple, default_cantilever, yang_third_balance

ell, L = Fraction(2), Fraction(3)
couples = default_cantilever(ell, L)
for c in couples:
    print("couple", [str(v) for v in c.L], "at", [str(v) for v in c.x])

print("sum of couples:   ", [str(sum(c.L[i] for c in couples)) for i in range(3)])
print("sum of x cross L: ", [str(v) for v in yang_third_balance(couples)])

# Moving every couple to the origin leaves the body unchanged but the sum vanishes.
moved = [AppliedCouple((0, 0, 0), c.L) for c in couples]
print("after moving to the origin:", [str(v) for v in yang_third_balance(moved)])
