"""Exact integer, rational and univariate polynomial arithmetic.

Everything downstream (growth bounds, square obstructions, sieves) runs on
this substrate.  There is no floating point anywhere: integers are Python's
arbitrary-precision ``int``, rationals are ``fractions.Fraction`` (always in
lowest terms, so equality is structural), and polynomials are dense
coefficient tuples of ``Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def isqrt_floor(n: int) -> int:
    """Largest r with r*r <= n.

    Raises ValueError for negative input.
    """
    if n < 0:
        raise ValueError(f"isqrt_floor is undefined for negative input {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    """True iff n is the square of a nonnegative integer."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored densely in ascending order of degree with
    trailing zeros trimmed; the zero polynomial has an empty coefficient
    tuple and degree -inf.  Instances are immutable and hashable, and all
    ring operations are exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "UniPoly":
        return cls([0] * power + [coeff])

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> "int | float":
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self) -> tuple[int, ...]:
        """Ascending coefficients as plain ints; raises if any is fractional."""
        if not self.has_integer_coefficients():
            raise ValueError(f"polynomial has non-integer coefficients: {self}")
        return tuple(c.numerator for c in self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "UniPoly | Scalar") -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly | Scalar") -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = UniPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def square(self) -> "UniPoly":
        return self * self

    @staticmethod
    def _coerce(value: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(value, UniPoly):
            return value
        return UniPoly.constant(value)

    # -- equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- evaluation and composition -------------------------------------------

    def evaluate(self, t: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def evaluate_int(self, t: int) -> int:
        """Evaluate at an integer; raises if the value is not an integer."""
        v = self.evaluate(t)
        if v.denominator != 1:
            raise ValueError(f"value {v} at t={t} is not an integer")
        return v.numerator

    def shift(self, c: int) -> "UniPoly":
        """Composition p(x + c), exact in the coefficients.

        Satisfies p.shift(c).evaluate(t) == p.evaluate(t + c) for all t.
        """
        x_plus_c = UniPoly([c, 1])
        result = UniPoly()
        for coeff in reversed(self.coeffs):
            result = result * x_plus_c + coeff
        return result

    def compose_neg(self) -> "UniPoly":
        """Composition p(-x)."""
        return UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"


class Positivity(Enum):
    PROVED_POSITIVE = "proved-positive"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PositivityCertificate:
    """Outcome of the shifted-coefficient positivity test.

    ``PROVED_POSITIVE`` is sound but not complete: it certifies p(t) > 0 for
    every t >= t_min (real or integer), and ``INCONCLUSIVE`` carries no
    information either way.
    """

    status: Positivity
    t_min: int
    shifted: UniPoly
    failing_power: "int | None" = None

    @property
    def proved(self) -> bool:
        return self.status is Positivity.PROVED_POSITIVE


def eventually_positive(p: UniPoly, t_min: int) -> PositivityCertificate:
    """Certify p(t) > 0 for all t >= t_min, or report Inconclusive.

    The test: expand p(x + t_min) and require every coefficient >= 0 with a
    strictly positive constant term.  Then for x >= 0 the value is at least
    the constant term, which proves positivity on [t_min, infinity).  A
    failure of the test proves nothing, so the result is never a false
    positive.
    """
    shifted = p.shift(t_min)
    if shifted.is_zero() or shifted.coefficient(0) <= 0:
        return PositivityCertificate(Positivity.INCONCLUSIVE, t_min, shifted, 0)
    for i, c in enumerate(shifted.coeffs):
        if c < 0:
            return PositivityCertificate(Positivity.INCONCLUSIVE, t_min, shifted, i)
    return PositivityCertificate(Positivity.PROVED_POSITIVE, t_min, shifted)
