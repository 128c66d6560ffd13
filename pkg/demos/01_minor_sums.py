# %% [markdown]
# # Summing maximal minors with one Pfaffian
#
# An n x k matrix has C(n, k) maximal minors.  Adding them all up by brute
# force costs C(n, k) determinants; the Pfaffian route needs one k x k skew
# matrix of column-pair sums and a single Pfaffian.

# %%
import time

import numpy as np

from minorsum import Matrix, build_S, minor_sum_bruteforce, minor_sum_okada
from minorsum.okada import augment_odd, column_sums

rng = np.random.default_rng(0)
C = Matrix(rng.integers(-5, 6, size=(7, 4)).tolist())
print(C.to_json())

# %% [markdown]
# `S[i, j]` adds the 2x2 minors built from columns i and j over every row pair.

# %%
S = build_S(C)
for row in S.tolist():
    print(" ".join(f"{int(x):6d}" for x in row))

# %%
print("pfaffian route :", minor_sum_okada(C))
print("brute force    :", minor_sum_bruteforce(C))

# %% [markdown]
# Odd k: border S with the column sums and take the Pfaffian of the bigger
# matrix.

# %%
C3 = Matrix(rng.integers(-5, 6, size=(6, 3)).tolist())
bordered = augment_odd(build_S(C3), column_sums(C3))
print(bordered.tolist())
print(minor_sum_okada(C3).value, minor_sum_bruteforce(C3).value)

# %% [markdown]
# The brute-force sum grows with C(n, k); the Pfaffian route stays cheap.

# %%
for n in (10, 16, 22):
    C = Matrix(rng.integers(-3, 4, size=(n, 6)).tolist())
    t0 = time.perf_counter()
    fast = minor_sum_okada(C).value
    t1 = time.perf_counter()
    slow = minor_sum_bruteforce(C).value
    t2 = time.perf_counter()
    print(f"n={n:3d}  equal={fast == slow}  pfaffian {t1 - t0:.4f}s  brute {t2 - t1:.4f}s")
