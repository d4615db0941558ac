"""
Explicit isomorphisms
=====================

Some algebras appear in two guises. An isomorphism psi is checked by
pushing every bracket of the source through psi.
"""
from frobenius_masa.catalog import build, gn2_to_hn2, y6_to_gprime4, y_witnesses
from frobenius_masa.lie import fingerprint, verify_isomorphism

ws = [gn2_to_hn2(n) for n in range(3, 7)] + [y6_to_gprime4()] + list(y_witnesses())
for w in ws:
    print(f"{w.name:<32} {verify_isomorphism(w.psi, w.source, w.target)}")

# Y8: the listed generators do not commute; the corrected ones give D01(4)
bad = build("Y", {"i": 8, "corrected": False})
gens = bad.matrix_generators
print()
print("Y8 as listed commutes:",
      all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:]))
good = build("Y", {"i": 8})
d01 = build("D01", {"n": 4})
print("corrected Y8 ~ D01(4):",
      fingerprint(good.algebra).key() == fingerprint(d01.algebra).key())
