"""Dense matrices over an arbitrary field, determinants and Pfaffians.

Entries may be ints, :class:`~fractions.Fraction`, floats, or any object
supporting ``+ - *`` (for instance :class:`~minorsum.algebra.RationalFunction`).
Algorithms that need division or pivot magnitudes pick a strategy from the
entry type: exact fields pivot on the first nonzero entry, floats on the
largest magnitude.
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np

from .algebra import format_rational, to_exact
from .errors import ResourceLimitError

#: combinatorial Pfaffian is an oracle; 10395 matchings at dim 12
MAX_COMBINATORIAL_DIM = 12
SKEW_ATOL = 1e-12


def _is_float(x) -> bool:
    return isinstance(x, (float, np.floating))


def _zero_like(x):
    return x * 0


class Matrix:
    """Immutable row-major ``rows x cols`` matrix."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[Any]], cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, rows have {width}")
        else:
            width = cols or 0
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> Matrix:
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        return cls((entries[i * cols:(i + 1) * cols] for i in range(rows)), cols=cols)

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> Matrix:
        array = np.asarray(array)
        if array.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls(array.tolist(), cols=array.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.tolist(), dtype=dtype).reshape(self.rows, self.cols)

    def transpose(self) -> Matrix:
        return Matrix(zip(*self._data), cols=self.rows) if self.rows else Matrix((), cols=0)

    def map(self, fn: Callable) -> Matrix:
        return Matrix(([fn(x) for x in r] for r in self._data), cols=self.cols)

    def select_rows(self, indices: Iterable[int]) -> Matrix:
        return Matrix((self._data[i] for i in indices), cols=self.cols)

    def replace_column(self, j: int, values: Sequence) -> Matrix:
        if len(values) != self.rows:
            raise ValueError("column length mismatch")
        return Matrix(
            (r[:j] + (v,) + r[j + 1:] for r, v in zip(self._data, values)), cols=self.cols
        )

    def swap_columns(self, i: int, j: int) -> Matrix:
        perm = list(range(self.cols))
        perm[i], perm[j] = perm[j], perm[i]
        return Matrix(([r[p] for p in perm] for r in self._data), cols=self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"

    def to_json(self) -> str:
        def lit(x):
            if isinstance(x, (int, Fraction)):
                return format_rational(x)
            return float(x)

        return json.dumps(
            {"rows": self.rows, "cols": self.cols,
             "entries": [[lit(x) for x in r] for r in self._data]}
        )

    @classmethod
    def from_json(cls, text: str | dict) -> Matrix:
        """Read ``{"rows": n, "cols": k, "entries": [[...], ...]}``; entries become exact."""
        obj = json.loads(text) if isinstance(text, str) else text
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError):
            raise ValueError("matrix JSON needs 'rows', 'cols' and 'entries'") from None
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entries do not form a {rows}x{cols} array")
        return cls(([to_exact(x) for x in r] for r in entries), cols=cols)


class SkewMatrix(Matrix):
    """Square matrix with ``S[i, j] == -S[j, i]``.

    The input is checked (exactly, or within ``atol`` for floats) and then
    rebuilt from its strict upper triangle so antisymmetry holds exactly.
    """

    __slots__ = ()

    def __init__(self, data: Iterable[Iterable[Any]], *, atol: float = SKEW_ATOL):
        m = Matrix(data)
        if not m.is_square():
            raise ValueError(f"skew matrix must be square, got {m.rows}x{m.cols}")
        n = m.rows
        for i in range(n):
            for j in range(i, n):
                a, b = m[i, j], m[j, i]
                if _is_float(a) or _is_float(b):
                    ok = abs(a + b) <= atol
                else:
                    ok = a == -b
                if not ok:
                    raise ValueError(f"not skew-symmetric at ({i}, {j})")
        forced = [
            [m[i, j] if i < j else (_zero_like(m[i, i]) if i == j else -m[j, i])
             for j in range(n)]
            for i in range(n)
        ]
        super().__init__(forced, cols=n)

    @classmethod
    def from_upper(cls, n: int, upper: Callable[[int, int], Any]) -> SkewMatrix:
        """Build from a function giving entries ``(i, j)`` with ``i < j``."""
        cells = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = upper(i, j)
                cells[i][j] = v
                cells[j][i] = -v
            cells[i][i] = 0
        if n:
            sample = cells[0][1] if n > 1 else 0
            for i in range(n):
                cells[i][i] = _zero_like(sample)
        return cls(cells)

    @property
    def dim(self) -> int:
        return self.rows

    def swap(self, i: int, j: int) -> SkewMatrix:
        """Simultaneously swap rows and columns ``i`` and ``j``."""
        perm = list(range(self.dim))
        perm[i], perm[j] = perm[j], perm[i]
        return SkewMatrix([[self[p, q] for q in perm] for p in perm])

    def scale(self, i: int, factor) -> SkewMatrix:
        """Multiply row ``i`` and column ``i`` by ``factor``."""
        n = self.dim
        return SkewMatrix(
            [[self[p, q] * factor if (p == i) != (q == i) else self[p, q]
              for q in range(n)] for p in range(n)]
        )


def as_skew(m: Matrix | Sequence[Sequence]) -> SkewMatrix:
    if isinstance(m, SkewMatrix):
        return m
    return SkewMatrix(m.tolist() if isinstance(m, Matrix) else m)


def permutation_sign(perm: Sequence[int]) -> int:
    """Signature of a permutation given in one-line notation, by inversion count."""
    inversions = sum(
        1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def determinant_leibniz(M: Matrix):
    """Determinant as the signed sum over all permutations.  Used as an oracle."""
    if not M.is_square():
        raise ValueError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    total = None
    for perm in itertools.permutations(range(n)):
        term = permutation_sign(perm)
        for i, p in enumerate(perm):
            term = term * M[i, p]
        total = term if total is None else total + term
    return 1 if total is None else total


def _is_integral(x) -> bool:
    if isinstance(x, bool):
        return False
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def _det_bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    a = [r[:] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_gauss(rows: list[list], floating: bool):
    n = len(rows)
    a = [r[:] for r in rows]
    det = 1
    for k in range(n):
        if floating:
            p = max(range(k, n), key=lambda i: abs(a[i][k]))
            if a[p][k] == 0:
                return 0.0
        else:
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k + 1, n):
                    a[i][j] = a[i][j] - f * a[k][j]
    return det


def determinant(M: Matrix):
    """Exact (or floating) determinant of a square matrix.

    Integer-valued entries use fraction-free Bareiss elimination, other
    rationals plain elimination, floats partial pivoting, and anything else
    falls back to the Leibniz expansion.
    """
    if not M.is_square():
        raise ValueError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    if n == 0:
        return 1
    entries = [x for r in M.tolist() for x in r]
    if all(_is_integral(x) for x in entries):
        value = _det_bareiss([[int(x) for x in r] for r in M.tolist()])
        return Fraction(value) if any(isinstance(x, Fraction) for x in entries) else value
    if all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for x in entries):
        return _det_gauss([[Fraction(x) for x in r] for r in M.tolist()], floating=False)
    if all(isinstance(x, (int, float, np.floating)) for x in entries):
        return float(_det_gauss([[float(x) for x in r] for r in M.tolist()], floating=True))
    return determinant_leibniz(M)


def enumerate_row_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing ``k``-tuples from ``range(n)``, lexicographic."""
    if k < 0 or n < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"cannot choose {k} rows from {n}")
    return itertools.combinations(range(n), k)


def perfect_matchings(m: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """Yield ``(pairs, sign)`` for every perfect matching of ``range(m)``.

    Pairs are ordered so that each pair is increasing and the first elements
    increase; ``sign`` is the signature of the flattened permutation.
    """
    if m % 2:
        raise ValueError(f"no perfect matchings on an odd set (size {m})")

    def rec(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for idx, partner in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1:]):
                yield ((first, partner),) + tail

    for pairs in rec(tuple(range(m))):
        flat = [x for pair in pairs for x in pair]
        yield pairs, permutation_sign(flat)


def double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2))


def pfaffian_combinatorial(S: SkewMatrix):
    """Pfaffian as the signed sum over perfect matchings."""
    S = as_skew(S)
    n = S.dim
    if n % 2:
        raise ValueError(f"Pfaffian needs an even dimension, got {n}")
    if n > MAX_COMBINATORIAL_DIM:
        raise ResourceLimitError(
            f"combinatorial Pfaffian limited to dim <= {MAX_COMBINATORIAL_DIM}; "
            "use pfaffian_eliminate"
        )
    total = None
    for pairs, sign in perfect_matchings(n):
        term = sign
        for i, j in pairs:
            term = term * S[i, j]
        total = term if total is None else total + term
    return 1 if total is None else total


def pfaffian_eliminate(S: SkewMatrix):
    """Pfaffian by skew-symmetric Gaussian elimination on 2x2 pivot blocks.

    Each step brings a nonzero entry to position ``(2t, 2t+1)`` by a
    simultaneous row/column swap (negating the running sign), multiplies the
    pivot into the result and replaces the trailing block by its Schur
    complement.  Requires division, so entries must come from a field.
    """
    S = as_skew(S)
    n = S.dim
    if n % 2:
        raise ValueError(f"Pfaffian needs an even dimension, got {n}")
    if n == 0:
        return 1
    a = S.tolist()
    floating = any(_is_float(x) for r in a for x in r)
    if not floating:
        a = [[x if not isinstance(x, int) else Fraction(x) for x in r] for r in a]
    result = 1.0 if floating else Fraction(1)
    for k in range(0, n - 1, 2):
        candidates = range(k + 1, n)
        if floating:
            p = max(candidates, key=lambda j: abs(a[k][j]))
            if a[k][p] == 0:
                return 0.0
        else:
            p = next((j for j in candidates if a[k][j] != 0), None)
            if p is None:
                return _zero_like(result)
        if p != k + 1:
            q = k + 1
            a[q], a[p] = a[p], a[q]
            for r in a:
                r[q], r[p] = r[p], r[q]
            result = -result
        pivot = a[k][k + 1]
        result = result * pivot
        rk, rk1 = a[k], a[k + 1]
        for i in range(k + 2, n):
            ui, vi = rk[i], rk1[i]
            if not ui and not vi:
                continue
            ri = a[i]
            for j in range(k + 2, n):
                ri[j] = ri[j] + (vi * rk[j] - ui * rk1[j]) / pivot
    return result
