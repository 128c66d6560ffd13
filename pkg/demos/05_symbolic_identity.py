# %% [markdown]
# # The product formula as an identity of rational functions
#
# Entries are kept as unreduced quotients of integer polynomials in a_1..a_k;
# equality is checked by cross-multiplication.

# %%
from minorsum import build_symbolic_matrix, reduction_check, symbolic_pfaffian, verify_identity
from minorsum.symbolic import product_formula, reduced_matrix

M = build_symbolic_matrix(3)
print(M)
print("Pf       =", symbolic_pfaffian(M))
print("formula  =", product_formula(3))

# %%
for k in range(1, 6):
    print(k, "identity", verify_identity(k), "reduction", reduction_check(k) if k > 1 else "-")

# %% [markdown]
# Scaling the row and column carrying a_1 by a_1 and then setting a_1 = 0
# gives back the matrix for k - 1.

# %%
R = reduced_matrix(4)
for i in range(R.dim):
    for j in range(i + 1, R.dim):
        print(i, j, R[i, j])
