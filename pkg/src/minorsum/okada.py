"""Sums of maximal minors through Okada's Pfaffian formula.

For an ``n x k`` matrix ``C`` let ``S[i, j]`` be the sum of the 2x2 minors
taken from columns ``i`` and ``j`` over all row pairs ``t < u``.  When ``k`` is
even the sum of the ``k x k`` minors of ``C`` equals ``Pf(S)``.  When ``k`` is
odd, ``S`` is bordered by a leading row and column holding the column sums of
``C`` and the Pfaffian of the enlarged matrix gives the minor sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Literal, Sequence

from .errors import ResourceLimitError
from .linalg import (
    Matrix,
    SkewMatrix,
    determinant,
    enumerate_row_subsets,
    pfaffian_eliminate,
)

MAX_BRUTE_FORCE_SUBSETS = 10**6

Method = Literal["pfaffian-even", "pfaffian-augmented-odd", "brute-force"]


@dataclass(frozen=True)
class MinorSumReport:
    value: Any
    method: Method
    minor_count: int | None = None


def build_S(C: Matrix) -> SkewMatrix:
    """Skew matrix of column-pair 2x2 minor sums, in ``O(n k^2)``.

    Uses ``S[i, j] = sum_u (P_i(u) C[u, j] - P_j(u) C[u, i])`` where ``P_i(u)``
    is the sum of column ``i`` over rows before ``u``.
    """
    n, k = C.shape
    prefix = [0] * k
    S = [[0] * k for _ in range(k)]
    for u in range(n):
        row = C.row(u)
        for i in range(k):
            pi, ci = prefix[i], row[i]
            for j in range(i + 1, k):
                S[i][j] = S[i][j] + pi * row[j] - prefix[j] * ci
        for i in range(k):
            prefix[i] = prefix[i] + row[i]
    return SkewMatrix.from_upper(k, lambda i, j: S[i][j])


def build_S_pairwise(C: Matrix) -> SkewMatrix:
    """Same as :func:`build_S` by the direct double loop over row pairs."""
    n, k = C.shape

    def entry(i, j):
        total = 0
        for t in range(n):
            for u in range(t + 1, n):
                total = total + (C[t, i] * C[u, j] - C[t, j] * C[u, i])
        return total

    return SkewMatrix.from_upper(k, entry)


def column_sums(C: Matrix) -> list:
    return [sum(C.column(j), 0) for j in range(C.cols)]


def augment_odd(S: SkewMatrix, colsums: Sequence) -> SkewMatrix:
    """Border an odd-dimensional ``S`` with a new index 0 carrying ``colsums``."""
    k = S.dim
    if k % 2 == 0:
        raise ValueError(f"augmentation applies to odd dimension only, got {k}")
    if len(colsums) != k:
        raise ValueError(f"need {k} column sums, got {len(colsums)}")

    def upper(i, j):
        if i == 0:
            return colsums[j - 1]
        return S[i - 1, j - 1]

    return SkewMatrix.from_upper(k + 1, upper)


def minor_sum_okada(C: Matrix) -> MinorSumReport:
    """Sum of all ``k x k`` minors of ``C`` via a single Pfaffian."""
    k = C.cols
    S = build_S(C)
    if k % 2 == 0:
        return MinorSumReport(pfaffian_eliminate(S), "pfaffian-even")
    bordered = augment_odd(S, column_sums(C))
    return MinorSumReport(pfaffian_eliminate(bordered), "pfaffian-augmented-odd")


def minor_sum_bruteforce(C: Matrix) -> MinorSumReport:
    """Sum of all ``k x k`` minors of ``C`` by enumerating row subsets."""
    n, k = C.shape
    count = math.comb(n, k) if k <= n else 0
    if count > MAX_BRUTE_FORCE_SUBSETS:
        raise ResourceLimitError(
            f"C({n},{k}) = {count} subsets exceeds {MAX_BRUTE_FORCE_SUBSETS}; "
            "use minor_sum_okada"
        )
    if k > n:
        return MinorSumReport(0, "brute-force", 0)
    total = 0
    for rows in enumerate_row_subsets(n, k):
        total = total + determinant(C.select_rows(rows))
    return MinorSumReport(total, "brute-force", count)
