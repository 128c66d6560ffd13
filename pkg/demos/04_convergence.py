# %% [markdown]
# # Riemann sums converge to the exact value
#
# Sample x^(a_j - 1) on n+1 equally spaced nodes, weight each by h = 1/n and
# sum the maximal minors through the Pfaffian route.  For exponents >= 1 the
# error falls like 1/n (n*err settles); an exponent below 1 makes the integrand
# blow up at 0 and convergence drops to about n**-0.5.

# %%
from minorsum import convergence_table

for a in [(1, 2), (1, 2, 3), (0.5, 2)]:
    print("a =", a)
    for row in convergence_table(a, [10, 100, 1000, 10000]):
        print(f"  n={row.n:6d}  approx={row.approx:.8f}  exact={float(row.exact):.8f}  "
              f"err={row.abs_error:.2e}  n*err={row.n * row.abs_error:.4f}")
