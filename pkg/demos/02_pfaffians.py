# %% [markdown]
# # Two ways to compute a Pfaffian
#
# The definition sums over perfect matchings, (2m-1)!! terms.  Elimination on
# 2x2 pivot blocks gets the same number in O(m^3).

# %%
from fractions import Fraction

import numpy as np

from minorsum import SkewMatrix, determinant, perfect_matchings, pfaffian_combinatorial, pfaffian_eliminate

for pairs, sign in perfect_matchings(4):
    print(f"{sign:+d}", pairs)

# %%
rng = np.random.default_rng(1)
vals = {(i, j): Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))
        for i in range(6) for j in range(i + 1, 6)}
S = SkewMatrix.from_upper(6, lambda i, j: vals[i, j])
pf = pfaffian_eliminate(S)
print("elimination  :", pf)
print("matchings    :", pfaffian_combinatorial(S))
print("Pf^2 == det  :", pf * pf == determinant(S))

# %% [markdown]
# Floats work through the same code; pivots are chosen by magnitude.

# %%
A = rng.normal(size=(10, 10))
F = SkewMatrix((A - A.T).tolist())
print(pfaffian_eliminate(F) ** 2, np.linalg.det(F.to_numpy()))
