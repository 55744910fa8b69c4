"""Numerical-invariant model of a locally finite homogeneous geometry.

A geometry enters the analysis only through a handful of integers: the line
size s1, the incidence invariants alpha and alpha', and the dimension.  This
module derives the plane size s2, checks the divisibility and floor
constraints those invariants must satisfy, enforces the inter-flat growth
inequalities, and classifies which (if any) of the three exceptional
parameter families a system belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact_arith import isqrt_floor, is_perfect_square


class ModelScopeError(ValueError):
    """Parameter values outside the modeled range (for example alpha' >= 2)."""


class Condition(Enum):
    """Exceptional parameter families surviving the growth-threshold analysis.

    Cond1Plus / Cond1Minus require s1 to be a perfect square and
    alpha = s1*(sqrt(s1) +/- 1)^2; Cond2 is alpha = s1*(s1-1) with
    alpha' = 0; Cond3 is alpha = s1^2 + 1 with alpha' = 1.
    ClassicalCompatible marks the projective-like (alpha = 0) and
    affine-like (alpha = 1, alpha' = 0) shapes, and is advisory only.
    """

    COND1_PLUS = "Cond1Plus"
    COND1_MINUS = "Cond1Minus"
    COND2 = "Cond2"
    COND3 = "Cond3"
    CLASSICAL_COMPATIBLE = "ClassicalCompatible"
    NONE_APPLIES = "NoneApplies"

    @property
    def family(self) -> int:
        """The condition family index 1, 2 or 3 (0 for the advisory tags)."""
        return _FAMILY[self]


_FAMILY = {
    Condition.COND1_PLUS: 1,
    Condition.COND1_MINUS: 1,
    Condition.COND2: 2,
    Condition.COND3: 3,
    Condition.CLASSICAL_COMPATIBLE: 0,
    Condition.NONE_APPLIES: 0,
}


@dataclass(frozen=True)
class ParamSystem:
    """The numerical invariants (s1, alpha, alpha', dim) of a putative geometry.

    alpha is a nonnegative integer (it counts incidences) and alpha' is
    restricted to {0, 1}; anything else is rejected loudly rather than
    silently passed through the arithmetic.
    """

    s1: int
    alpha: int
    alpha_prime: int = 0
    dim: int = 3

    def __post_init__(self):
        if self.s1 < 2:
            raise ValueError(f"s1 must be at least 2, got {self.s1}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if self.alpha_prime not in (0, 1):
            raise ModelScopeError(
                f"alpha_prime={self.alpha_prime} is outside the modeled range {{0, 1}}"
            )
        if self.dim < 3:
            raise ValueError(f"dim must be at least 3, got {self.dim}")

    @property
    def beta(self) -> int:
        """alpha - 1; defined only in the alpha' = 1 regime with alpha >= 1."""
        if self.alpha_prime != 1 or self.alpha < 1:
            raise ValueError("beta is defined only when alpha_prime = 1 and alpha >= 1")
        return self.alpha - 1

    def to_record(self) -> dict:
        return {
            "s1": self.s1,
            "alpha": self.alpha,
            "alphaPrime": self.alpha_prime,
            "dim": self.dim,
        }

    @classmethod
    def from_record(cls, record: dict) -> "ParamSystem":
        return cls(
            s1=int(record["s1"]),
            alpha=int(record["alpha"]),
            alpha_prime=int(record["alphaPrime"]),
            dim=int(record["dim"]),
        )


@dataclass(frozen=True)
class FlatProfile:
    """Flat sizes s_0 ... s_n of a geometry; strictly increasing with s_0 = 1."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("a flat profile needs at least s_0")
        if self.sizes[0] != 1:
            raise ValueError(f"s_0 must be 1, got {self.sizes[0]}")
        for a, b in zip(self.sizes, self.sizes[1:]):
            if b <= a:
                raise ValueError(f"flat sizes must strictly increase, got {self.sizes}")
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))

    @property
    def top_dim(self) -> int:
        return len(self.sizes) - 1

    def s(self, i: int) -> int:
        return self.sizes[i]

    def truncate(self, rank: int) -> "FlatProfile":
        """Drop all flats above the given rank (prefix truncation)."""
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        return FlatProfile(self.sizes[: rank + 1])


def s2_from(s1: int, alpha: int) -> int:
    """Plane size forced by (s1, alpha): s1 + (s1-1)*alpha + (s1-1)^2."""
    s2 = s1 + (s1 - 1) * alpha + (s1 - 1) ** 2
    # Same value in the product form used by the localization transform.
    assert s2 == 1 + (alpha + s1) * (s1 - 1)
    return s2


def s2_of(ps: ParamSystem) -> int:
    return s2_from(ps.s1, ps.alpha)


def growth_lower_bound(s1: int, s2: int, r: int) -> Fraction:
    """Lower bound (s2-s1)^(r-1) / (s1-1)^(r-2) for the size of an r-flat."""
    if r < 3:
        raise ValueError(f"the growth bound needs r >= 3, got r={r}")
    if s1 < 2 or s2 <= s1:
        raise ValueError(f"need s2 > s1 >= 2, got s1={s1}, s2={s2}")
    return Fraction((s2 - s1) ** (r - 1), (s1 - 1) ** (r - 2))


def growth_step_holds(profile: FlatProfile, r: int) -> bool:
    """Single growth step: s_r - s_(r-1) >= (s_(r-1) - s_(r-2))^2 / (s_(r-2) - s_(r-3))."""
    if not 3 <= r <= profile.top_dim:
        raise ValueError(f"r={r} outside profile range 3..{profile.top_dim}")
    s = profile.sizes
    lhs = (s[r] - s[r - 1]) * (s[r - 2] - s[r - 3])
    rhs = (s[r - 1] - s[r - 2]) ** 2
    return lhs >= rhs


def integrality_alpha0(s1: int, alpha: int) -> bool:
    """Divisibility forced in the alpha' = 0 regime: s1 | alpha^2."""
    # (s1-1)*alpha^2 / s1 must be an integer; gcd(s1, s1-1) = 1 reduces this
    # to s1 dividing alpha^2.
    return (alpha * alpha) % s1 == 0


def integrality_alpha1(s1: int, beta: int) -> bool:
    """Divisibility forced in the alpha' = 1 regime: s1 | beta."""
    return beta % s1 == 0


def integrality_constraints(ps: ParamSystem) -> bool:
    """The divisibility constraint appropriate to the system's regime."""
    if ps.alpha_prime == 0:
        return integrality_alpha0(ps.s1, ps.alpha)
    return integrality_alpha1(ps.s1, ps.beta)


def alpha_floor_check(ps: ParamSystem) -> bool:
    """In the alpha' = 0 regime a positive alpha must satisfy alpha^2 >= s1."""
    if ps.alpha_prime != 0:
        raise ValueError("the alpha floor applies only in the alpha' = 0 regime")
    return ps.alpha == 0 or ps.alpha * ps.alpha >= ps.s1


def condition_alphas(s1: int) -> dict[Condition, int]:
    """The alpha value each exceptional condition forces at this line size."""
    out = {Condition.COND2: s1 * (s1 - 1), Condition.COND3: s1 * s1 + 1}
    if is_perfect_square(s1):
        root = isqrt_floor(s1)
        out[Condition.COND1_PLUS] = s1 * (root + 1) ** 2
        out[Condition.COND1_MINUS] = s1 * (root - 1) ** 2
    return out

def classify_condition(ps: ParamSystem) -> frozenset[Condition]:
    """Tag every condition equation that (s1, alpha, alpha') satisfies.

    Per-flat squareness requirements (s_i square for i >= 3, and so on) are
    not checked here; they only become decidable after localization, where
    the relevant flat sizes are computable.
    """
    tags = set()
    forced = condition_alphas(ps.s1)
    if ps.alpha_prime == 0:
        for cond in (Condition.COND1_PLUS, Condition.COND1_MINUS, Condition.COND2):
            if cond in forced and ps.alpha == forced[cond]:
                tags.add(cond)
    else:
        if ps.alpha == forced[Condition.COND3]:
            tags.add(Condition.COND3)
    if ps.alpha == 0 or (ps.alpha == 1 and ps.alpha_prime == 0):
        tags.add(Condition.CLASSICAL_COMPATIBLE)
    if not tags:
        tags.add(Condition.NONE_APPLIES)
    return frozenset(tags)
