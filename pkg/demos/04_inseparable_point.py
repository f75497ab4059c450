"""An inseparable point where symbolic and differential powers split.

Over k = F_p(t) the prime p = (x^p - t) in k[x] has residue field
k(t^(1/p)), an inseparable extension.  The solution-set differential
power with n = 2 collapses all the way down to p, while the symbolic
power is p^2: the two notions genuinely differ without separability.
The separable control case (x^2 - 2 over Q) shows no such collapse.
"""

import json

from noethops import GF, QQ, PolyRing, PrimeData, RatFuncField, chain_check

for p in (2, 3, 5):
    K = RatFuncField(GF(p), "t")
    S = PolyRing(K, ["x"])
    prime = PrimeData.univariate(S.parse(f"x^{p} - t"))
    report = chain_check(prime, 2)
    print("=" * 64)
    print(f"k = F_{p}(t), prime = (x^{p} - t), n = 2")
    print("symbolic power:", report.to_json()["symbolic"])
    print("solution-set power:", report.to_json()["new_diff"])
    strict = report.find("symbolic", "new_diff")
    print("strict inclusion:", strict.holds, " witness:", strict.witness)
    print("classical power:", report.classical_note)
    print()

print("=" * 64)
print("separable control: (x^2 - 2) over Q, n = 2")
S = PolyRing(QQ, ["x"])
prime = PrimeData.univariate(S.parse("x^2 - 2"))
report = chain_check(prime, 2)
print(json.dumps(report.to_json(), indent=2))
