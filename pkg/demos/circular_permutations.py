"""
Circular permutations and their semidirect sums
===============================================

The cyclic shift C_n is nonderogatory with eigenvalues the n-th roots of
unity, so R[C_n] ⋉ R^n splits into one aff(R) per real root and one aff(C)
per conjugate pair.
"""
from frobenius_masa.nonderog import circular_permutation, classify_G_phi, eigen_signature

for n in range(2, 9):
    C = circular_permutation(n)
    sig = eigen_signature(C)
    print(f"n={n}  signature={sig.to_json()}")
    print(f"      {classify_G_phi(C)}")
