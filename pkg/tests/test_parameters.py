"""Tests for the parameter model."""

from fractions import Fraction

import pytest

from homgeom.parameters import (
    Condition,
    FlatProfile,
    ModelScopeError,
    ParamSystem,
    alpha_floor_check,
    classify_condition,
    condition_alphas,
    growth_lower_bound,
    growth_step_holds,
    integrality_constraints,
    s2_from,
    s2_of,
)
from homgeom.exact_arith import is_perfect_square

PRIMES = [2, 3, 5, 7, 11]


def projective_profile(n: int, q: int) -> FlatProfile:
    return FlatProfile(tuple((q ** (i + 1) - 1) // (q - 1) for i in range(n + 1)))


def affine_profile(n: int, q: int) -> FlatProfile:
    return FlatProfile(tuple(q**i for i in range(n + 1)))


class TestParamSystem:
    def test_valid(self):
        ps = ParamSystem(3, 6, 0, 23)
        assert (ps.s1, ps.alpha, ps.alpha_prime, ps.dim) == (3, 6, 0, 23)

    def test_rejects_small_s1(self):
        with pytest.raises(ValueError):
            ParamSystem(1, 0)

    def test_rejects_negative_alpha(self):
        with pytest.raises(ValueError):
            ParamSystem(3, -1)

    def test_alpha_prime_out_of_scope_is_distinct_error(self):
        with pytest.raises(ModelScopeError):
            ParamSystem(3, 6, 2)

    def test_beta_defined_only_in_alpha1_regime(self):
        assert ParamSystem(3, 4, 1).beta == 3
        with pytest.raises(ValueError):
            _ = ParamSystem(3, 4, 0).beta
        with pytest.raises(ValueError):
            _ = ParamSystem(3, 0, 1).beta

    def test_record_round_trip(self):
        ps = ParamSystem(7, 42, 1, 23)
        assert ParamSystem.from_record(ps.to_record()) == ps
        assert ParamSystem.from_record({"s1": "7", "alpha": "42", "alphaPrime": "1", "dim": "23"}) == ps


class TestS2:
    def test_examples(self):
        assert s2_from(3, 6) == 19
        assert s2_from(4, 0) == 13  # projective shape at q = 3
        assert s2_from(3, 1) == 9  # affine shape at q = 3

    def test_two_closed_forms_agree(self):
        for s1 in range(2, 40):
            for alpha in range(0, 60):
                assert s2_from(s1, alpha) == 1 + (alpha + s1) * (s1 - 1)

    def test_wrapper(self):
        assert s2_of(ParamSystem(3, 6)) == 19


class TestGrowthLowerBound:
    def test_examples(self):
        assert growth_lower_bound(3, 7, 3) == 8
        assert growth_lower_bound(3, 7, 4) == 16
        assert growth_lower_bound(3, 9, 3) == 18

    def test_exact_rational(self):
        assert growth_lower_bound(4, 7, 4) == Fraction(27, 9)

    def test_r_below_three_rejected(self):
        with pytest.raises(ValueError):
            growth_lower_bound(3, 7, 2)

    def test_classical_profiles_satisfy_bound(self):
        for q in PRIMES:
            for profile in (projective_profile(4, q), affine_profile(4, q)):
                s1, s2 = profile.s(1), profile.s(2)
                for r in range(3, profile.top_dim + 1):
                    assert profile.s(r) >= growth_lower_bound(s1, s2, r)
                    assert growth_step_holds(profile, r)


class TestGrowthStep:
    def test_projective_tight(self):
        assert growth_step_holds(FlatProfile((1, 3, 7, 15)), 3)

    def test_affine_tight(self):
        assert growth_step_holds(FlatProfile((1, 3, 9, 27)), 3)

    def test_synthetic_violation(self):
        assert not growth_step_holds(FlatProfile((1, 3, 7, 10)), 3)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            growth_step_holds(FlatProfile((1, 3, 7)), 3)


class TestIntegrality:
    def test_examples(self):
        assert integrality_constraints(ParamSystem(3, 6, 0))
        assert not integrality_constraints(ParamSystem(3, 2, 0))
        assert integrality_constraints(ParamSystem(3, 4, 1))  # beta = 3

    def test_beta_regime_failure(self):
        assert not integrality_constraints(ParamSystem(3, 5, 1))  # beta = 4

    def test_cond2_always_passes(self):
        for s1 in range(3, 60):
            assert integrality_constraints(ParamSystem(s1, s1 * (s1 - 1), 0))


class TestAlphaFloor:
    def test_examples(self):
        assert alpha_floor_check(ParamSystem(4, 2, 0))
        assert not alpha_floor_check(ParamSystem(9, 2, 0))
        assert alpha_floor_check(ParamSystem(9, 0, 0))

    def test_wrong_regime_rejected(self):
        with pytest.raises(ValueError):
            alpha_floor_check(ParamSystem(3, 4, 1))


class TestClassify:
    def test_cond1_minus(self):
        assert classify_condition(ParamSystem(4, 4, 0)) == {Condition.COND1_MINUS}

    def test_cond2(self):
        assert classify_condition(ParamSystem(3, 6, 0)) == {Condition.COND2}

    def test_cond3(self):
        assert classify_condition(ParamSystem(3, 10, 1)) == {Condition.COND3}

    def test_cond1_requires_square_s1(self):
        # s1 = 5 is not a square, so no condition-1 alpha exists at all.
        assert Condition.COND1_PLUS not in condition_alphas(5)
        tags = classify_condition(ParamSystem(5, 5 * (1 + 1) ** 2, 0))
        assert Condition.COND1_PLUS not in tags

    def test_cond3_needs_alpha_prime_one(self):
        assert classify_condition(ParamSystem(3, 10, 0)) == {Condition.NONE_APPLIES}

    def test_classical_tags(self):
        assert Condition.CLASSICAL_COMPATIBLE in classify_condition(ParamSystem(4, 0, 0))
        assert Condition.CLASSICAL_COMPATIBLE in classify_condition(ParamSystem(4, 0, 1))
        assert Condition.CLASSICAL_COMPATIBLE in classify_condition(ParamSystem(3, 1, 0))
        assert Condition.CLASSICAL_COMPATIBLE not in classify_condition(ParamSystem(3, 1, 1))

    def test_none_applies(self):
        assert classify_condition(ParamSystem(3, 5, 0)) == {Condition.NONE_APPLIES}

    def test_cond1_plus_and_cond2_never_coincide(self):
        # The two alpha equations differ for every square s1 up to 10^4.
        k = 2
        while k * k <= 10_000:
            s1 = k * k
            tags = classify_condition(ParamSystem(s1, s1 * (s1 - 1), 0))
            assert Condition.COND2 in tags
            assert Condition.COND1_PLUS not in tags
            k += 1

    def test_cond2_implies_integrality(self):
        for s1 in range(3, 200):
            ps = ParamSystem(s1, s1 * (s1 - 1), 0)
            if Condition.COND2 in classify_condition(ps):
                assert integrality_constraints(ps)

    def test_cond1_tags_need_square_alpha_match(self):
        tags = classify_condition(ParamSystem(9, 9 * 16, 0))  # 9*(3+1)^2
        assert tags == {Condition.COND1_PLUS}
        assert is_perfect_square(9)


class TestFlatProfile:
    def test_validation(self):
        with pytest.raises(ValueError):
            FlatProfile((2, 3))
        with pytest.raises(ValueError):
            FlatProfile((1, 3, 3))
        with pytest.raises(ValueError):
            FlatProfile(())

    def test_truncate(self):
        profile = FlatProfile((1, 3, 7, 15))
        assert profile.truncate(2) == FlatProfile((1, 3, 7))
        assert profile.truncate(3) == profile

    def test_top_dim(self):
        assert FlatProfile((1, 3, 9, 27)).top_dim == 3
