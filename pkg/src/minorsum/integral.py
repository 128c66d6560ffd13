"""The ordered-simplex integral of a generalized Vandermonde determinant.

For positive exponents ``a = (a_1, ..., a_k)`` this module evaluates

    I(a) = integral over 0 < x_1 < ... < x_k < 1 of det(x_i ** (a_j - 1))

three independent ways:

* :func:`lhs_pfaffian` -- Pfaffian of the closed-form one- and two-point
  integrals (bordered when ``k`` is odd);
* :func:`rhs_product` -- the product formula
  ``prod_{i<j}(a_j - a_i) / (prod_i a_i * prod_{i<j}(a_i + a_j))``;
* :func:`iterated_integral_oracle` -- expansion of the determinant and exact
  antidifferentiation one variable at a time.

:func:`approx_integral` realizes the Riemann-sum limit in floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import format_rational, to_exact
from .errors import DomainError, ResourceLimitError
from .linalg import Matrix, SkewMatrix, pfaffian_eliminate
from .okada import minor_sum_okada

MAX_ORACLE_K = 7


def exponent_vector(values: Iterable) -> tuple[Fraction, ...]:
    """Validate and convert exponents to exact positive rationals."""
    a = tuple(to_exact(v) for v in values)
    for v in a:
        if v <= 0:
            raise DomainError(f"exponents must be positive, got {format_rational(v)}")
    return a


def parse_exponents(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,2,5/2"``; the empty string means ``k = 0``."""
    text = text.strip()
    if not text:
        return ()
    return exponent_vector(part.strip() for part in text.split(","))


def closed_I_i(a_i) -> Fraction:
    """Integral of ``x ** (a_i - 1)`` over (0, 1)."""
    (a_i,) = exponent_vector([a_i])
    return 1 / a_i


def closed_I_ij(a_i, a_j) -> Fraction:
    """Integral over ``0 < x < y < 1`` of ``f_i(x) f_j(y) - f_j(x) f_i(y)``."""
    a_i, a_j = exponent_vector([a_i, a_j])
    return (a_j - a_i) / (a_i * a_j * (a_i + a_j))


def closed_form_matrix(a: Sequence) -> SkewMatrix:
    """Skew matrix whose Pfaffian is ``I(a)``.

    Even ``k``: entries ``closed_I_ij``.  Odd ``k``: index 0 is a border row
    ``(0, 1/a_1, ..., 1/a_k)`` and the ``closed_I_ij`` block sits at 1..k.
    """
    a = exponent_vector(a)
    k = len(a)
    if k % 2 == 0:
        return SkewMatrix.from_upper(k, lambda i, j: closed_I_ij(a[i], a[j]))

    def upper(i, j):
        if i == 0:
            return closed_I_i(a[j - 1])
        return closed_I_ij(a[i - 1], a[j - 1])

    return SkewMatrix.from_upper(k + 1, upper)


def lhs_pfaffian(a: Sequence) -> Fraction:
    return Fraction(pfaffian_eliminate(closed_form_matrix(a)))


def rhs_product(a: Sequence) -> Fraction:
    a = exponent_vector(a)
    num = Fraction(1)
    den = math.prod(a, start=Fraction(1))
    for i, j in itertools.combinations(range(len(a)), 2):
        num *= a[j] - a[i]
        den *= a[i] + a[j]
    return num / den


def elkies_howe_case(k: int) -> Fraction:
    """``I(1, 2, ..., k)``: the simplex integral of the Vandermonde product."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return rhs_product(range(1, k + 1))


class PowerSum:
    """Finite sum ``sum_e c_e x**e`` with exact rational exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Fraction, Fraction] | None = None):
        self.terms = {Fraction(e): Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls) -> PowerSum:
        return cls({Fraction(0): Fraction(1)})

    def __add__(self, other: PowerSum) -> PowerSum:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PowerSum(out)

    def scaled(self, c) -> PowerSum:
        return PowerSum({e: c * v for e, v in self.terms.items()})

    def times_power(self, e) -> PowerSum:
        return PowerSum({x + e: c for x, c in self.terms.items()})

    def antiderivative(self) -> PowerSum:
        """Integral from 0 to x; every exponent must exceed -1."""
        out = {}
        for e, c in self.terms.items():
            if e <= -1:
                raise DomainError(f"x^{format_rational(e)} is not integrable at 0")
            out[e + 1] = c / (e + 1)
        return PowerSum(out)

    def at_one(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self):
        return f"PowerSum({self.terms!r})"


def iterated_integral_oracle(a: Sequence) -> Fraction:
    """Evaluate ``I(a)`` from its definition, independent of any Pfaffian.

    The Leibniz expansion of ``det(x_i ** (a_j - 1))`` is integrated over
    ``x_1`` from 0 to ``x_2``, then ``x_2`` from 0 to ``x_3``, and so on.
    Permutations sharing the set of columns already assigned are merged, so
    the state is one :class:`PowerSum` per column subset.
    """
    a = exponent_vector(a)
    k = len(a)
    if k > MAX_ORACLE_K:
        raise ResourceLimitError(f"iterated oracle limited to k <= {MAX_ORACLE_K}")
    # bitmask of used columns -> signed partial integral in the next variable
    layer = {0: PowerSum.one()}
    for _ in range(k):
        nxt: dict[int, PowerSum] = {}
        for used, ps in layer.items():
            for j in range(k):
                if used >> j & 1:
                    continue
                later_used = bin(used >> (j + 1)).count("1")
                piece = ps.times_power(a[j] - 1).antiderivative()
                if later_used % 2:
                    piece = piece.scaled(-1)
                key = used | 1 << j
                nxt[key] = nxt[key] + piece if key in nxt else piece
        layer = nxt
    return layer[(1 << k) - 1].at_one()


def _sample_power(x: np.ndarray, exponent: float) -> np.ndarray:
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(exponent * np.log(x[pos]))
    if exponent == 0:
        out[~pos] = 1.0
    # at x = 0 with exponent > 0 the value is 0; with exponent < 0 the sample is dropped
    return out


def riemann_matrix(a: Sequence, n: int, interval: tuple[float, float] = (0.0, 1.0)) -> Matrix:
    """``(n+1) x k`` matrix with row ``i`` equal to ``h * f_j(lo + h*i)``.

    ``f_j(x) = x ** (a_j - 1)``; a sample at ``x = 0`` where ``f_j`` is
    unbounded is set to 0.
    """
    a = exponent_vector(a)
    if n < 1:
        raise ValueError("n must be at least 1")
    lo, hi = map(float, interval)
    if lo < 0 or hi <= lo:
        raise ValueError("interval must satisfy 0 <= lo < hi")
    h = (hi - lo) / n
    x = lo + h * np.arange(n + 1, dtype=float)
    cols = [h * _sample_power(x, float(aj) - 1.0) for aj in a]
    if not cols:
        return Matrix([[] for _ in range(n + 1)], cols=0)
    return Matrix.from_numpy(np.column_stack(cols))


def approx_integral(a: Sequence, n: int) -> float:
    """Okada minor sum of :func:`riemann_matrix` in floating point."""
    a = exponent_vector(a)
    if n < len(a):
        raise ValueError(f"need n >= k, got n={n}, k={len(a)}")
    return float(minor_sum_okada(riemann_matrix(a, n)).value)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    approx: float
    exact: Fraction
    abs_error: float

    def as_dict(self) -> dict:
        d = asdict(self)
        d["exact"] = format_rational(self.exact)
        return d


def convergence_table(a: Sequence, grid: Sequence[int]) -> list[ConvergenceRow]:
    a = exponent_vector(a)
    grid = list(grid)
    if not grid:
        raise ValueError("grid must be nonempty")
    if any(m >= n for m, n in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    exact = lhs_pfaffian(a)
    rows = []
    for n in grid:
        approx = approx_integral(a, n)
        rows.append(ConvergenceRow(n, approx, exact, abs(approx - float(exact))))
    return rows


def tail_is_monotone(rows: Sequence[ConvergenceRow]) -> bool:
    """Whether the error did not grow between the last two grid points."""
    return len(rows) < 2 or rows[-1].abs_error <= rows[-2].abs_error
