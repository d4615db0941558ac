"""
Transition matrices into real Jordan form
=========================================

For a companion block with a complex pair r ± is, the transition matrix P
has a determinant that is a monomial in s. We compute it symbolically and
compare with the closed form q_n.
"""
from frobenius_masa.nonderog import corrected_q, published_q, symbolic_complex_det

# det P for p11 = 1, p12 = 0
for n in (2, 4, 6, 8, 10):
    d = symbolic_complex_det(n)
    print(f"n={n:2d}  det P = {d}")

# the closed form agrees except at n = 8
print()
print(" n   q_n (closed form)   q_n (recomputed)")
for n in (4, 6, 8, 10, 12):
    print(f"{n:2d}   {published_q(n):>17}   {corrected_q(n):>16}")
