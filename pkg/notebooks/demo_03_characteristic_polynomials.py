"""
Characteristic polynomials and Hermite-Pade order
=================================================

q_n is the characteristic polynomial of the n x n truncation, and q_{n,k} the one
with the first k rows and columns removed.  The ratios q_{n,k}/q_n approximate
the resolvent series simultaneously.
"""

from lukas_vcf import CoeffTable, char_poly_by_determinant, char_polys, hp_defect_order

sym = CoeffTable.symbolic(2)

# %%
pair = char_polys(3, sym)
print("q_3   =", pair.q_n)
print("q_3,1 =", pair.q_nk[1])
print("q_3,2 =", pair.q_nk[2])

# %%
# The recurrence and a direct determinant agree.
assert pair.q_n == char_poly_by_determinant(3, sym)
assert pair.q_nk[1] == char_poly_by_determinant(3, sym, drop=1)

# %%
# The defect  q_n A_k - (polynomial part)  vanishes to order floor((n-k)/p)+1.
table = CoeffTable.random(2, seed=1, window=(-5, 30))
for n in range(1, 9):
    orders = [hp_defect_order(n, k, n + 6, table) for k in range(2)]
    bounds = [(n - k) // 2 + 1 for k in range(2)]
    print(f"n={n}: order {orders}, bound {bounds}")
