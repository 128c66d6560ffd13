"""Exact rational-function checks of the product formula for fixed small ``k``.

The Pfaffian matrix of one- and two-point integrals is built with entries in
the field of rational functions of ``a_1, ..., a_k``.  Its Pfaffian is compared
with ``N / D`` where ``N = prod_{i<j}(a_j - a_i)`` and
``D = prod_i a_i * prod_{i<j}(a_i + a_j)``.  :func:`reduction_check`
replays the inductive step: scale the row and column carrying ``a_1`` by
``a_1``, set ``a_1 = 0`` and recover the matrix for ``k - 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .algebra import MultiPoly, RationalFunction
from .errors import ResourceLimitError
from .linalg import SkewMatrix, pfaffian_combinatorial

MAX_SYMBOLIC_K = 5


@dataclass(frozen=True)
class SymbolicPfaffianMatrix:
    k: int
    parity: Literal["even", "odd-augmented"]
    entries: SkewMatrix

    @property
    def dim(self) -> int:
        return self.entries.dim

    def __str__(self):
        lines = [f"k={self.k} parity={self.parity} dim={self.dim}"]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lines.append(f"  [{i},{j}] {self.entries[i, j]}")
        return "\n".join(lines)


def _var(i: int, k: int) -> MultiPoly:
    return MultiPoly.variable(i, k)


def one_point(i: int, k: int) -> RationalFunction:
    """``1 / a_i`` (0-based ``i``)."""
    return RationalFunction(MultiPoly.constant(1, k), factors=[(_var(i, k), 1)])


def two_point(i: int, j: int, k: int) -> RationalFunction:
    """``(a_j - a_i) / (a_i a_j (a_i + a_j))`` as an unreduced quotient."""
    ai, aj = _var(i, k), _var(j, k)
    return RationalFunction(aj - ai, factors=[(ai, 1), (aj, 1), (ai + aj, 1)])


def _check_k(k: int, low: int = 1) -> None:
    if not low <= k:
        raise ValueError(f"k must be at least {low}, got {k}")
    if k > MAX_SYMBOLIC_K:
        raise ResourceLimitError(f"symbolic checks limited to k <= {MAX_SYMBOLIC_K}")


def build_symbolic_matrix(k: int) -> SymbolicPfaffianMatrix:
    _check_k(k)
    if k % 2 == 0:
        entries = SkewMatrix.from_upper(k, lambda i, j: two_point(i, j, k))
        return SymbolicPfaffianMatrix(k, "even", entries)

    def upper(i, j):
        if i == 0:
            return one_point(j - 1, k)
        return two_point(i - 1, j - 1, k)

    return SymbolicPfaffianMatrix(k, "odd-augmented", SkewMatrix.from_upper(k + 1, upper))


def symbolic_pfaffian(M: SymbolicPfaffianMatrix) -> RationalFunction:
    if M.dim > 6:
        raise ResourceLimitError("symbolic Pfaffian limited to dim <= 6")
    return pfaffian_combinatorial(M.entries)


def product_numerator(k: int) -> MultiPoly:
    N = MultiPoly.constant(1, k)
    for i, j in itertools.combinations(range(k), 2):
        N = N * (_var(j, k) - _var(i, k))
    return N


def product_denominator(k: int) -> MultiPoly:
    D = MultiPoly.constant(1, k)
    for i in range(k):
        D = D * _var(i, k)
    for i, j in itertools.combinations(range(k), 2):
        D = D * (_var(i, k) + _var(j, k))
    return D


def product_formula(k: int) -> RationalFunction:
    return RationalFunction(product_numerator(k), product_denominator(k))


def verify_identity(k: int) -> bool:
    _check_k(k)
    return symbolic_pfaffian(build_symbolic_matrix(k)) == product_formula(k)


def reduced_matrix(k: int) -> SkewMatrix:
    """Apply the inductive scaling and ``a_1 = 0`` to the size-``k`` matrix.

    Even ``k`` scales index 0; the result is directly the bordered matrix for
    ``k - 1``.  Odd ``k`` scales index 1, after which rows 0 and 1 become
    ``(0, 1, 1/a_2, ...)`` and ``(-1, 0, 1/a_2, ...)``; subtracting row and
    column 1 from row and column 0 (a congruence with determinant 1) splits
    off a ``[[0, 1], [-1, 0]]`` block, and the remaining block on indices
    ``2..k`` is returned.  Variables are relabelled ``a_{i+1} -> a_i``.
    """
    _check_k(k, low=2)
    M = build_symbolic_matrix(k).entries
    a1 = _var(0, k)
    pivot = 0 if k % 2 == 0 else 1
    n = M.dim
    cells = [
        [M[p, q].times_factor(a1) if (p == pivot) != (q == pivot) else M[p, q]
         for q in range(n)]
        for p in range(n)
    ]
    cells = [[x.substitute(0, 0) for x in row] for row in cells]
    if k % 2 == 1:
        for q in range(n):
            cells[0][q] = cells[0][q] - cells[1][q]
        for p in range(n):
            cells[p][0] = cells[p][0] - cells[p][1]
        if cells[0][1] != 1 or any(cells[0][q] != 0 for q in range(2, n)):
            raise ArithmeticError("odd-k reduction did not split off a unit block")
        cells = [row[2:] for row in cells[2:]]
    return SkewMatrix([[x.drop_variable(0) for x in row] for row in cells])


def reduction_check(k: int) -> bool:
    reduced = reduced_matrix(k)
    target = build_symbolic_matrix(k - 1).entries
    return reduced == target
