"""
Generating series and operator moments
======================================

Weight polynomials of length n become the coefficient of z^-(n+1) in a Laurent
series.  The same numbers are the moments of a banded Hessenberg operator.
"""

from lukas_vcf import CoeffTable, TWO_SIDED, forward, moment, resolvent_series, series_from_family, truncation

sym = CoeffTable.symbolic(2)

# %%
# The first few terms of A_0 for p = 2, valid through z^-5.
A0 = series_from_family("A", 0, 0, 5, sym)
for e, c in A0.items():
    print(f"z^-{e}:", c)
print("valid through z^-%d" % A0.valid_to)

# %%
# The operator picture: a lower Hessenberg matrix with p diagonals below the main
# one.  Here is its 4 x 4 truncation.
for row in truncation(forward(0), 4, sym):
    print(["%s" % x for x in row])

# %%
# Moments of the forward operator agree with the path-enumeration series.
for n in range(5):
    assert moment(forward(0), n, 0, sym) == A0.coeff(n + 1)
print("moments agree with path sums")

# %%
# The two-sided operator gives the W family, which also allows negative heights.
W = resolvent_series(TWO_SIDED, 0, 4, sym)
print("W_0 through z^-4:", [str(W.coeff(e)) for e in range(1, 5)])
