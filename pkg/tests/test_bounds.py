"""Tests for the spectral quantities and size thresholds."""

from fractions import Fraction

import pytest

from homgeom.bounds import (
    SpectralTriple,
    alpha_route_cap,
    alpha_route_sweep,
    beta_route_cap,
    beta_route_sweep,
    discriminant_shift,
    first_r_exceeding,
    phi_of,
    product_identity_holds,
    psi_of,
    theta_of,
)
from homgeom.parameters import s2_from


def phi_oracle(s1: int, alpha: int) -> int:
    """Direct evaluation of the displayed closed form, term by term."""
    return alpha**2 + s1**2 * (s1 - 1) ** 2 - 2 * alpha * s1 * (s1 + 1)


class TestSpectralQuantities:
    def test_phi_examples(self):
        assert phi_of(3, 6) == phi_oracle(3, 6) == -72
        assert phi_of(4, 2) == phi_oracle(4, 2) == 68
        # 1 + 36 - 24; also (1 - 6)^2 - 12 = 13 through the other form.
        assert phi_of(3, 1) == phi_oracle(3, 1) == 13

    def test_theta_examples(self):
        assert theta_of(3, 6) == 24
        assert theta_of(4, 2) == 2
        assert theta_of(3, 1) == -1

    def test_psi_examples(self):
        assert psi_of(3, 6) == -24
        assert psi_of(4, 2) == 118
        assert psi_of(3, 1) == 31

    def test_psi_acceptance_point(self):
        # The flagged consistency point: both sides of the product identity
        # evaluated independently at (3, 1).
        s1, alpha = 3, 1
        d = alpha - s1 * (s1 - 1)
        lhs = theta_of(s1, alpha) * phi_of(s1, alpha) - 4 * alpha * s1 * psi_of(s1, alpha)
        rhs = d * (theta_of(s1, alpha) * d + 4 * alpha * s1 * s1 * (s1 - 1))
        assert lhs == rhs == -385

    def test_product_identity_on_grid(self):
        assert product_identity_holds()

    def test_product_identity_on_wide_grid(self):
        assert product_identity_holds(range(3, 30), range(1, 30))

    def test_spectral_triple_invariants(self):
        triple = SpectralTriple.from_params(4, 2)
        assert (triple.theta, triple.phi, triple.psi) == (2, 68, 118)
        assert triple.discriminant_d == discriminant_shift(4, 2) == -10

    def test_phi_squared_below_fourth_power(self):
        for s1 in range(3, 25):
            u = s1 * (s1 - 1)
            for alpha in range(2, 120):
                assert phi_of(s1, alpha) ** 2 < (alpha + u) ** 4


class TestAlphaRouteCap:
    def test_cond2_collapse(self):
        assert alpha_route_cap(3, 6) == 1

    def test_big_value(self):
        assert alpha_route_cap(4, 2) == Fraction(61266150332, 32)

    def test_cond2_always_one(self):
        for s1 in range(3, 80):
            assert alpha_route_cap(s1, s1 * (s1 - 1)) == 1

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError):
            alpha_route_cap(3, 0)


class TestBetaRouteCap:
    def test_example(self):
        assert beta_route_cap(3, 3) == 429981696
        assert beta_route_cap(3, 3) == 72**2 * 6**2 * 12**2 * 24**2 // 36

    def test_degenerate_beta_equals_s1_squared(self):
        # The middle factor (s1^2 - beta)^2 vanishes, capping every flat.
        assert beta_route_cap(3, 9) == 0
        assert beta_route_cap(5, 25) == 0

    def test_oracle_recompute(self):
        s1, beta = 3, 6
        a = 4 * beta * s1 + (s1**2 - beta) ** 2
        expected = Fraction(
            a**2 * (s1**2 - beta) ** 2 * (s1**2 + beta) ** 2 * (s1**2 - beta + 2 * s1 * beta) ** 2,
            4 * beta * s1,
        )
        assert beta_route_cap(3, 6) == expected
        assert expected > 0

    def test_beta_zero_rejected(self):
        with pytest.raises(ValueError):
            beta_route_cap(3, 0)


class TestFirstRExceeding:
    def test_examples(self):
        assert first_r_exceeding(4, s2_from(4, 2), alpha_route_cap(4, 2)) == 14
        assert first_r_exceeding(3, 19, 1) == 3
        assert first_r_exceeding(3, s2_from(3, 4), 429981696) == 12

    def test_geometric_growth_oracle(self):
        # bound(r) = 15 * 5^(r-2) for (s1, s2) = (4, 19); first r past 10^6.
        threshold = 10**6
        r = 3
        while 15 * 5 ** (r - 2) <= threshold:
            r += 1
        assert first_r_exceeding(4, 19, threshold) == r

    def test_returned_r_is_minimal(self):
        from homgeom.parameters import growth_lower_bound

        threshold = Fraction(12345678, 7)
        r = first_r_exceeding(3, 15, threshold)
        assert growth_lower_bound(3, 15, r) > threshold
        assert all(growth_lower_bound(3, 15, k) <= threshold for k in range(3, r))

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            first_r_exceeding(3, 3, 1)
        with pytest.raises(ValueError):
            # gap 1 never grows past a large threshold
            first_r_exceeding(3, 4, 10**6)


class TestSweeps:
    def test_alpha_route_small_grid(self):
        result = alpha_route_sweep(12, 300)
        assert result.systems_checked > 0
        assert result.max_first_r <= 20
        assert result.internal_steps_ok

    def test_beta_route_small_grid(self):
        result = beta_route_sweep(12, 300)
        assert result.systems_checked > 0
        assert result.max_first_r <= 17
        assert result.internal_steps_ok

    def test_alpha_sweep_admissibility_filter(self):
        # Only alphas with s1 | alpha^2 are admissible; count them directly.
        result = alpha_route_sweep(3, 30)
        expected = sum(1 for a in range(2, 31) if (a * a) % 3 == 0 and a * a >= 3)
        assert result.systems_checked == expected

    def test_beta_sweep_internal_inequality(self):
        # s2 - s1 >= s1^2 + beta holds throughout the admissible grid.
        for s1 in range(3, 15):
            for beta in range(s1, 200, s1):
                assert s2_from(s1, beta + 1) - s1 >= s1 * s1 + beta
