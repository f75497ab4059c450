"""Noetherian operators from truncated dual spaces.

For an ideal primary to the maximal ideal of a point, membership can be
rewritten as a finite list of differential conditions at that point:
f lies in the ideal exactly when every operator kills f there.  The
operators fall out of the Macaulay dual space of the ideal.
"""

from noethops import QQ, PolyRing, ideal, noetherian_operators, sol_membership, truncated_dual
from noethops.poly import monomials_up_to

R = PolyRing(QQ, ["x", "y"])
ORIGIN = (QQ.zero(), QQ.zero())

for gens in [("x^2", "y"), ("x^2", "x*y", "y^2"), ("x^3", "y"), ("x^2", "y + x")]:
    I = ideal(R, *gens)
    print("=" * 64)
    print("I = (" + ", ".join(gens) + ") at the origin")

    res = noetherian_operators(I, ORIGIN)
    print("colength:", res.colength, " truncation order:", res.truncation_order)
    print("dual basis functionals:")
    for lam in res.dual_basis:
        print("   ", lam)
    print("operators:", ", ".join(str(op) for op in res.operators))
    print("witness outside the ideal:", res.witness_outside_ideal)

    # the operators characterize membership exactly
    sample = [R.monomial(m) for m in monomials_up_to(2, 3)]
    agree = all(
        sol_membership(res.operators, res.target, f) == I.contains(f) for f in sample
    )
    print("operator test == Groebner membership on all monomials of deg <= 3:", agree)
    print()

print("=" * 64)
print("Dual spaces grow with the truncation degree until they stabilize:")
I = ideal(R, "x^3", "y")
for k in range(4):
    D = truncated_dual(I, ORIGIN, k)
    print(f"  dim D_{k} =", D.dimension)
