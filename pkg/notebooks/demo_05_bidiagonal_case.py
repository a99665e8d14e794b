"""
The bi-diagonal case
====================

With only the main superdiagonal and the lowest diagonal nonzero, the paths are
p-Dyck paths and the weights have nested-sum closed forms.
"""

from lukas_vcf import (
    CoeffTable,
    FamilySpec,
    akv_expansion,
    genetic_sum,
    reflect_var,
    verify_akv,
    verify_bidiagonal,
    weight_polynomial,
)

bi = CoeffTable.symbolic(2, bidiagonal=True)

# %%
# Nested sums against enumeration, m = 2 long drops.
closed = genetic_sum("S", 2, 2, 0, 0, bi)
print("S, m=2:", closed)
assert closed == weight_polynomial(FamilySpec("S", 2, 6, 0), bi)

# %%
# Reflected paths: relabel a_k -> a_{-p-k}.
lhs = weight_polynomial(FamilySpec("Shat", 2, 6, 0), bi)
rhs = weight_polynomial(FamilySpec("S", 2, 6, 0), bi).substitute(reflect_var)
print("reflection holds:", lhs == rhs)

# %%
# Relations among S, T and R.
for r in verify_bidiagonal(9, bi):
    print(r)

# %%
# A second branched fraction whose agreement grows with its depth.
for depth in range(1, 5):
    print(depth, verify_akv(depth, 12, bi).checked_to)
print(akv_expansion(2, 6, bi)[0])
