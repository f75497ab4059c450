"""Tour of the exact-arithmetic core: coefficient fields, sparse
polynomials, and the Groebner engine (normal forms, intersections,
saturations).
"""

from noethops import GF, QQ, PolyRing, RatFuncField, ideal, intersect, saturate

print("=" * 64)
print("Coefficient fields")
print("=" * 64)

F5 = GF(5)
print("inverse of 3 in F_5:", F5.from_int(3).inverse())

K = RatFuncField(GF(2), "t")
t = K.generator()
a = t / (t + 1)
print("a = t/(t+1) in F_2(t), 1/a =", a.inverse())

print()
print("=" * 64)
print("Polynomials: parsing, calculus, evaluation")
print("=" * 64)

R = PolyRing(QQ, ["x", "y"])
f = R.parse("(x + y)^3 - 2*x*y")
print("f =", f)
print("df/dx =", f.diff(0))
print("f(1, 2) =", f.evaluate([1, 2]))
print("f shifted to (1, 1):", f.translate([1, 1]))

print()
print("=" * 64)
print("Groebner bases and ideal arithmetic")
print("=" * 64)

I = ideal(R, "x^2 + y^2", "x*y")
print("I = (x^2 + y^2, x*y)")
print("reduced basis:", [str(g) for g in I.groebner_basis])
print("normal form of y^3 mod I:", I.normal_form(R.parse("y^3")))
print("is y^3 in I?", I.contains(R.parse("y^3")))

A, B = ideal(R, "x^2", "x*y"), ideal(R, "y")
C = intersect(A, B)
print("(x^2, x*y) intersect (y) =", [str(g) for g in C.groebner_basis])

S = saturate(ideal(R, "x^2*y"), R.var(1))
print("(x^2*y : y^infinity) =", [str(g) for g in S.groebner_basis])
