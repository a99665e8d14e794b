"""
Lattice paths and their weights
===============================

A path is a word of rises: +1 for an upstep, -i for a downstep of size i.
A downstep of size i that leaves height m weighs ``a_{m-i}^(i)``.
"""

from lukas_vcf import CoeffTable, FamilySpec, LatticePath, count, enumerate_paths, path_weight, weight_polynomial

# %%
# The one Dyck-type path of length 3 for p = 2: two upsteps and a drop of two.
spec = FamilySpec("S", p=2, n=3, j=0)
for path in enumerate_paths(spec):
    print(path.encode(), path.rises)

# %%
# Weights are polynomials in symbols a_n^(k).
sym = CoeffTable.symbolic(2)
path = LatticePath.decode("UUD2")
print("weight of UUD2:", path_weight(path, sym))

# %%
# Summing over a whole family gives the weight polynomial.  For p = 1 these are
# the moments of a Jacobi matrix.
one = CoeffTable.symbolic(1)
for n in range(1, 5):
    print(f"s_{n} =", weight_polynomial(FamilySpec("D", 1, n, 0), one))

# %%
# The same polynomial evaluated on a seeded random table.
table = CoeffTable.random(1, seed=0, window=(-5, 5))
print("s_4 on a random table:", weight_polynomial(FamilySpec("D", 1, 4, 0), table))

# %%
# Path counts: all paths with m long drops, and those staying nonnegative.
for m in range(5):
    n = 3 * m
    print(m, count(FamilySpec("R", 2, n, 0)), count(FamilySpec("S", 2, n, 0)))
