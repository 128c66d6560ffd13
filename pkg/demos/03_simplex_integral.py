# %% [markdown]
# # The simplex integral of det(x_i^(a_j - 1))
#
# Over 0 < x_1 < ... < x_k < 1 the integral equals
# prod_{i<j}(a_j - a_i) / (prod a_i * prod_{i<j}(a_i + a_j)).
# Three independent evaluations are compared below.

# %%
from fractions import Fraction

from minorsum import (
    closed_form_matrix,
    elkies_howe_case,
    iterated_integral_oracle,
    lhs_pfaffian,
    rhs_product,
)

for a in [(1, 2), (1, 2, 3), (Fraction(1, 2), 2, Fraction(7, 3)), (1, 3, 4, 9)]:
    print(a, lhs_pfaffian(a), rhs_product(a), iterated_integral_oracle(a))

# %% [markdown]
# Odd k uses a bordered matrix whose first row holds 1/a_i.

# %%
for row in closed_form_matrix((1, 2, 3)).tolist():
    print(["{:>7}".format(str(x)) for x in row])

# %% [markdown]
# With a_j = j the integrand is the plain Vandermonde product.

# %%
for k in range(1, 8):
    print(k, elkies_howe_case(k))
