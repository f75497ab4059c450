"""The containment chain between the three powers of a prime.

symbolic  <=  solution-set differential  <=  classical differential,
with equalities under separability and smoothness.  Checked here on the
maximal ideal of the origin (everything collapses) and on the twisted
cubic curve in affine 4-space, where the saturation-based symbolic
square is compared monomial by monomial against the derivative-based
membership predicate.
"""

from noethops import (
    Ideal,
    PolyRing,
    PrimeData,
    QQ,
    diff_power_classical_graded,
    diff_power_classical_member,
    diff_power_new_point,
    ideal,
    ideal_equal,
    ideal_power,
    symbolic_power,
)
from noethops.poly import monomials_up_to

R = PolyRing(QQ, ["x", "y"])
ORIGIN = (QQ.zero(), QQ.zero())
p = PrimeData.rational_point(R, ORIGIN)
m = ideal(R, "x", "y")

print("p = (x, y) in Q[x, y]: computing all three powers independently")
for n in (1, 2, 3, 4):
    sym = symbolic_power(p, n)
    new = diff_power_new_point(Ideal(R, []), ORIGIN, n)
    cls = diff_power_classical_graded(m, n, n + 1)
    collapse = ideal_equal(sym, new) and ideal_equal(sym, cls) and ideal_equal(sym, ideal_power(m, n))
    print(f"  n = {n}: symbolic = solution-set = classical = m^{n}:", collapse)

print()
R4 = PolyRing(QQ, ["x", "y", "z", "w"])
cubic = ideal(R4, "x*z - y^2", "y*w - z^2", "x*w - y*z")
prime = PrimeData.with_witness(cubic, R4.var(0))
print("twisted cubic in Q[x, y, z, w], n = 2, saturation witness x")
sym = symbolic_power(prime, 2)
print("symbolic square basis size:", len(sym.groebner_basis))

disagreements = 0
count = 0
for mono in monomials_up_to(4, 6):
    f = R4.monomial(mono)
    count += 1
    if sym.contains(f) != diff_power_classical_member(cubic, 2, f):
        disagreements += 1
print(f"saturation vs derivative membership on {count} monomials of deg <= 6:",
      f"{disagreements} disagreements")
