"""Evaluate each polynomial basis and check its structural properties.

Walks through the four basis families on [0, 1], prints a few exact
values, and demonstrates partition of unity and endpoint behaviour.
"""

from fractions import Fraction as F

from tpbases import BasisFamily, BasisSpec, eval_basis_row

x = F(1, 5)
for family in BasisFamily:
    spec = BasisSpec(family, 3)
    row = eval_basis_row(spec, x)
    print(f"{family.value:>10} degree 3 at x = {x}: "
          + "  ".join(str(v) for v in row))
    print(f"{'':>10} sum = {sum(row)}")

# the three normalized families sum to one everywhere; the monomial
# basis does not
print()
for family in (BasisFamily.BERNSTEIN, BasisFamily.SAID_BALL, BasisFamily.DP):
    spec = BasisSpec(family, 5)
    assert all(sum(eval_basis_row(spec, F(k, 17))) == 1 for k in range(18))
    print(f"{family.value}: partition of unity verified at 18 points")

# endpoint interpolation: first function is 1 at x=0, last is 1 at x=1
spec = BasisSpec(BasisFamily.DP, 4)
print()
print("DP degree 4 at x=0:", eval_basis_row(spec, F(0)))
print("DP degree 4 at x=1:", eval_basis_row(spec, F(1)))
