"""Tests for the exact arithmetic substrate."""

import math
import random
from fractions import Fraction

import pytest

from homgeom.exact_arith import (
    NEG_INF,
    Positivity,
    UniPoly,
    eventually_positive,
    is_perfect_square,
    isqrt_floor,
)


def isqrt_bisect(n: int) -> int:
    """Independent oracle: bisection, no math.isqrt."""
    lo, hi = 0, max(1, n)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * mid <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


class TestIsqrtFloor:
    def test_exact_square(self):
        assert isqrt_floor(49) == 7

    def test_one_below_square(self):
        assert isqrt_floor(48) == 6

    def test_large_value_against_bisection_oracle(self):
        assert isqrt_bisect(46801) == 216
        assert isqrt_floor(46801) == 216
        assert 216**2 <= 46801 < 217**2

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            isqrt_floor(-1)

    def test_postcondition_exhaustive_small(self):
        for n in range(10_000):
            r = isqrt_floor(n)
            assert r * r <= n < (r + 1) * (r + 1)

    def test_postcondition_random_big(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randrange(10**30, 10**40)
            r = isqrt_floor(n)
            assert r * r <= n < (r + 1) * (r + 1)

    def test_monotone_on_initial_segment(self):
        prev = 0
        for n in range(1_000_001):
            r = isqrt_floor(n)
            assert r >= prev
            prev = r


class TestIsPerfectSquare:
    def test_simple(self):
        assert is_perfect_square(49)

    def test_negative_never_square(self):
        assert not is_perfect_square(-4)

    def test_between_consecutive_squares(self):
        assert 25**2 < 649 < 26**2
        assert not is_perfect_square(649)

    def test_agrees_with_enumerated_squares(self):
        squares = {k * k for k in range(1001)}
        for n in range(1_000_001):
            assert is_perfect_square(n) == (n in squares)


class TestUniPoly:
    def test_trailing_zeros_trimmed(self):
        assert UniPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))

    def test_zero_degree_sentinel(self):
        assert UniPoly().degree == NEG_INF
        assert UniPoly([0, 0]).is_zero()

    def test_degree(self):
        assert UniPoly([5]).degree == 0
        assert UniPoly([0, 0, 3]).degree == 2

    def test_immutability(self):
        p = UniPoly([1, 2])
        with pytest.raises(AttributeError):
            p.coeffs = ()

    def test_eval_sextic(self):
        p = UniPoly([1, 0, 0, 0, -1, 0, 1])  # x^6 - x^4 + 1
        assert p.evaluate(2) == 49

    def test_eval_zero_poly(self):
        assert UniPoly().evaluate(7) == 0

    def test_eval_term_by_term(self):
        p = UniPoly([0, -2, -2, 0, 2, 2, 1])  # x^6 + 2x^5 + 2x^4 - 2x^2 - 2x
        assert p.evaluate(1) == 1

    def test_completed_square_identity(self):
        g = UniPoly([0, Fraction(-1, 2), 0, 1])  # x^3 - x/2
        h = UniPoly([-1, 0, Fraction(1, 4)])  # x^2/4 - 1
        assert g * g - h == UniPoly([1, 0, 0, 0, -1, 0, 1])

    def test_self_subtraction_is_zero(self):
        p = UniPoly([3, 0, Fraction(1, 2), 7])
        assert (p - p).is_zero()

    def test_shift_binomial(self):
        assert UniPoly([0, 0, 1]).shift(1) == UniPoly([1, 2, 1])

    def test_shift_matches_pointwise(self):
        rng = random.Random(11)
        for _ in range(100):
            p = UniPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 13))])
            c = rng.randint(-20, 20)
            t = rng.randint(-50, 50)
            assert p.shift(c).evaluate(t) == p.evaluate(t + c)

    def test_product_evaluation_homomorphism(self):
        rng = random.Random(23)
        for _ in range(200):
            p = UniPoly([rng.randint(-50, 50) for _ in range(rng.randint(0, 13))])
            q = UniPoly([rng.randint(-50, 50) for _ in range(rng.randint(0, 13))])
            t = rng.randint(-100, 100)
            assert (p * q).evaluate(t) == p.evaluate(t) * q.evaluate(t)
            assert (p + q).evaluate(t) == p.evaluate(t) + q.evaluate(t)

    def test_pow_matches_repeated_multiplication(self):
        p = UniPoly([1, 1])
        assert p**4 == p * p * p * p
        assert p**0 == UniPoly([1])

    def test_square(self):
        p = UniPoly([Fraction(-1, 2), 0, 3])
        assert p.square() == p * p

    def test_compose_neg(self):
        p = UniPoly([1, 2, 3, 4])
        for t in range(-10, 11):
            assert p.compose_neg().evaluate(t) == p.evaluate(-t)

    def test_integer_coefficients(self):
        assert UniPoly([1, -2]).integer_coefficients() == (1, -2)
        with pytest.raises(ValueError):
            UniPoly([Fraction(1, 2)]).integer_coefficients()


def expand_shift_oracle(coeffs: list[int], c: int) -> list[Fraction]:
    """Independent binomial-theorem expansion of p(x + c)."""
    out = [Fraction(0)] * len(coeffs)
    for n, a in enumerate(coeffs):
        for k in range(n + 1):
            out[k] += a * math.comb(n, k) * c ** (n - k)
    while out and out[-1] == 0:
        out.pop()
    return out


class TestEventuallyPositive:
    def test_cubic_proved_at_three(self):
        p = UniPoly([3, -2, -1, 4])  # 4x^3 - x^2 - 2x + 3
        cert = eventually_positive(p, 3)
        assert cert.status is Positivity.PROVED_POSITIVE
        # The shifted polynomial the certificate relies on, via an
        # independent expansion.
        assert list(cert.shifted.coeffs) == expand_shift_oracle([3, -2, -1, 4], 3)

    def test_inconclusive_when_negative_in_range(self):
        cert = eventually_positive(UniPoly([-4, 0, 1]), 1)  # x^2 - 4 at t >= 1
        assert cert.status is Positivity.INCONCLUSIVE
        assert UniPoly([-4, 0, 1]).evaluate(1) == -3

    def test_constant_one(self):
        assert eventually_positive(UniPoly([1]), 0).proved

    def test_zero_constant_term_inconclusive(self):
        assert not eventually_positive(UniPoly([0, 1]), 0).proved

    def test_proved_implies_positive_spot_check(self):
        p = UniPoly([3, -2, -1, 4])
        cert = eventually_positive(p, 3)
        assert cert.proved
        for t in range(3, 3 + 10_001):
            assert p.evaluate(t) > 0
