"""
The vector continued fraction
=============================

Each stage is a pair (c_k, d_k) of p-vectors.  Folding n stages over the tail v_n
reproduces (A_0, ..., A_{p-1}) exactly.  Without a tail the fold is the ratio of
characteristic polynomials.
"""

from lukas_vcf import (
    CoeffTable,
    cf_term,
    char_polys,
    convergent_polys,
    eval_finite_cf,
    series_from_family,
    tail_vector,
    verify_kalyagin,
    verify_lemma_lft,
)

sym = CoeffTable.symbolic(2)

# %%
# The numerators switch from 1 to -a^(p) once k > p.
for k in range(1, 5):
    t = cf_term(k, sym)
    print(f"stage {k}: c = {[str(c) for c in t.c]}, d = {[str(d) for d in t.d]}")

# %%
# Three stages over the tail v_3 give back A_0 and A_1.
N = 7
terms = [cf_term(k, sym) for k in range(1, 4)]
out = eval_finite_cf(terms, tail_vector(3, N, sym), N)
for j in range(2):
    assert out[j].agrees_with(series_from_family("A", j, 0, N, sym))
print("finite fraction with tail matches A_0, A_1")

# %%
# The exact convergent without a tail.
numer, denom = convergent_polys(terms)
pair = char_polys(3, sym)
assert denom == pair.q_n and numer == (pair.q_nk[1], pair.q_nk[2])
print("convergent denominator is q_3")

# %%
# The same checks as reports.
print(verify_lemma_lft(2, 8, sym))
for r in verify_kalyagin(4, 8, CoeffTable.random(3, seed=2, window=(-40, 30))):
    print(r)
