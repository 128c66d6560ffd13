"""Exact scalars, sparse multivariate integer polynomials and rational functions.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator.  Polynomials are immutable maps from exponent
tuples to nonzero integer coefficients.  Rational functions are *not* reduced
to lowest terms; their denominator is kept as a product of factor polynomials
so that sums can use a common multiple of the factor lists instead of the
full product of denominators, and equality is decided by cross-multiplication.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

ExactScalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*([-+]?)(\d+)(?:/(\d+))?\s*$")

_SCALAR_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal such as ``"3"``, ``"-7/4"`` or ``"10/4"``."""
    match = _RATIONAL_RE.match(text.replace("−", "-"))
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, p, q = match.groups()
    if q is not None and int(q) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    value = Fraction(int(p), int(q) if q is not None else 1)
    return -value if sign == "-" else value


def format_rational(x: Fraction | int) -> str:
    """Canonical literal: ``p`` when the denominator is 1, else ``p/q``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_exact(value) -> Fraction:
    """Coerce an int, Fraction, float or literal string to an exact scalar.

    Floats are read through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def scalar_arith(x: Fraction, y: Fraction, op: str) -> Fraction:
    try:
        fn = _SCALAR_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    return fn(Fraction(x), Fraction(y))


class MultiPoly:
    """Sparse polynomial with integer coefficients in ``nvars`` variables.

    Variables are numbered from 0 and printed as ``a1, a2, ...``.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
            if not isinstance(coef, int):
                coef = _as_int(coef)
            if coef:
                clean[exps] = clean.get(exps, 0) + coef
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = dict(sorted((e, c) for e, c in terms.items() if c))
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, nvars: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, index: int, nvars: int) -> MultiPoly:
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(_as_int(other), self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coef in self._terms.items():
            term = Fraction(coef)
            for v, e in zip(point, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, index: int, value: int = 0) -> MultiPoly:
        """Replace variable ``index`` by an integer constant.

        The result keeps ``nvars`` variables; the substituted one has
        exponent 0 in every term.
        """
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range")
        value = _as_int(value)
        out: dict[tuple[int, ...], int] = {}
        for exps, coef in self._terms.items():
            e = exps[index]
            if e and value == 0:
                continue
            key = exps[:index] + (0,) + exps[index + 1 :]
            out[key] = out.get(key, 0) + coef * value**e
        return MultiPoly._raw(self.nvars, out)

    def drop_variable(self, index: int) -> MultiPoly:
        """Remove an absent variable, shifting later variables down by one."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range")
        out = {}
        for exps, coef in self._terms.items():
            if exps[index]:
                raise ValueError(f"polynomial still depends on a{index + 1}")
            out[exps[:index] + exps[index + 1 :]] = coef
        return MultiPoly._raw(self.nvars - 1, out)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, coef in self._terms.items():
            factors = [str(coef)]
            factors += [f"a{i + 1}^{e}" for i, e in enumerate(exps) if e]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self._terms!r})"


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise TypeError(f"integer coefficient required, got {value!r}")


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    if p.nvars != q.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    if op in ("+",):
        return p + q
    if op in ("-", "−"):
        return p - q
    if op in ("*", "×"):
        return p * q
    raise ValueError(f"unknown operator {op!r}")


def poly_substitute(p: MultiPoly, var_index: int, value: int = 0) -> MultiPoly:
    return p.substitute(var_index, value)


class RationalFunction:
    """Quotient of :class:`MultiPoly` values, denominator kept factored.

    ``factors`` is a tuple of ``(polynomial, multiplicity)`` pairs whose
    product is the denominator.  Factors are compared structurally only; no
    polynomial gcd is ever taken.
    """

    __slots__ = ("num", "factors")

    def __init__(self, num: MultiPoly, den: MultiPoly | int | None = None, *,
                 factors: Iterable[tuple[MultiPoly, int]] | None = None):
        if den is not None and factors is not None:
            raise TypeError("give either den or factors, not both")
        k = num.nvars
        collected: dict[MultiPoly, int] = {}
        if factors is not None:
            for f, m in factors:
                if f.nvars != k:
                    raise ValueError("variable count mismatch in denominator")
                if m > 0:
                    collected[f] = collected.get(f, 0) + m
        elif den is not None:
            d = den if isinstance(den, MultiPoly) else MultiPoly.constant(_as_int(den), k)
            if d.nvars != k:
                raise ValueError("variable count mismatch in denominator")
            collected[d] = 1
        one = MultiPoly.constant(1, k)
        collected.pop(one, None)
        for f in collected:
            if f.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            collected = {}
        self.num = num
        self.factors = tuple(collected.items())

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def den(self) -> MultiPoly:
        return _expand(self.factors, self.nvars)

    @classmethod
    def from_poly(cls, p: MultiPoly) -> RationalFunction:
        return cls(p)

    @classmethod
    def constant(cls, c: int, nvars: int) -> RationalFunction:
        return cls(MultiPoly.constant(c, nvars))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(self.num._coerce(other))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction(MultiPoly.constant(_as_int(other), self.nvars))
        return NotImplemented

    def _rescaled(self, target: dict[MultiPoly, int]) -> MultiPoly:
        """Numerator after bringing the denominator up to ``target``."""
        have = dict(self.factors)
        missing = [(f, m - have.get(f, 0)) for f, m in target.items()]
        return self.num * _expand(missing, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        target = dict(self.factors)
        for f, m in other.factors:
            target[f] = max(target.get(f, 0), m)
        num = self._rescaled(target) + other._rescaled(target)
        return RationalFunction(num, factors=target.items())

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, factors=self.factors)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num,
                                factors=self.factors + other.factors)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        inverse = RationalFunction(other.den, factors=[(other.num, 1)])
        return self * inverse

    def times_factor(self, p: MultiPoly) -> RationalFunction:
        """Multiply by ``p``, cancelling one copy of ``p`` from the denominator if present."""
        have = dict(self.factors)
        if have.get(p, 0) > 0:
            have[p] -= 1
            return RationalFunction(self.num, factors=have.items())
        return RationalFunction(self.num * p, factors=self.factors)

    def substitute(self, index: int, value: int = 0) -> RationalFunction:
        """Substitute in numerator and every denominator factor separately."""
        new_factors = []
        for f, m in self.factors:
            g = f.substitute(index, value)
            if g.is_zero():
                raise ZeroDivisionError(
                    f"denominator factor {f} vanishes at a{index + 1} = {value}"
                )
            new_factors.append((g, m))
        return RationalFunction(self.num.substitute(index, value), factors=new_factors)

    def drop_variable(self, index: int) -> RationalFunction:
        return RationalFunction(
            self.num.drop_variable(index),
            factors=[(f.drop_variable(index), m) for f, m in self.factors],
        )

    def evaluate(self, point: Sequence) -> Fraction:
        den = Fraction(1)
        for f, m in self.factors:
            den *= f.evaluate(point) ** m
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(point) / den

    def degree(self) -> int:
        """Numerator degree minus denominator degree (meaningful when homogeneous)."""
        den_deg = sum(f.total_degree() * m for f, m in self.factors)
        return self.num.total_degree() - den_deg

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RationalFunction) else other
        if other is NotImplemented:
            return NotImplemented
        if other.nvars != self.nvars:
            return False
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __str__(self):
        if not self.factors:
            return f"({self.num})"
        den = "*".join(f"({f})" + (f"^{m}" if m > 1 else "") for f, m in self.factors)
        return f"({self.num}) / {den}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _expand(factors, nvars: int) -> MultiPoly:
    powers = [f**m for f, m in factors if m]
    return reduce(operator.mul, powers, MultiPoly.constant(1, nvars))


def ratfun_equal(f: RationalFunction, g: RationalFunction) -> bool:
    if f.nvars != g.nvars:
        raise ValueError(f"variable count mismatch: {f.nvars} vs {g.nvars}")
    return f.num * g.den == g.num * f.den
