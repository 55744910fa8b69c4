"""The square-obstruction catalog and its impossibility machinery.

Each computable case carries a polynomial f together with a completed-square
decomposition f = g^2 - h.  If f(t) were the square a^2, then with A = 2g
the factorization (A(t) - 2a)(A(t) + 2a) = 4h(t) would follow, and a gap
argument on the size of 4h(t) relative to A(t) rules that out for every
t >= t_min.  The gap argument is certified once per case by the
shifted-coefficient positivity test; a brute-force sieve over an initial
segment of the integers double-checks the same claim independently.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

import numpy as np

from .exact_arith import (
    PositivityCertificate,
    UniPoly,
    eventually_positive,
    is_perfect_square,
)
from .localization import CaseLabel

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class SquareObstruction:
    """One impossibility instance: f = g^2 - h plus the range it covers.

    f has integer coefficients; g and h may carry halves and quarters, but
    2g and 4h are always integral.  known_square_args lists every argument
    in the sieve range where f takes a square value; all sit below t_min.
    """

    label: CaseLabel
    f: UniPoly
    g: UniPoly
    h: UniPoly
    t_min: int
    known_square_args: frozenset[int]

    def sign_flipped(self, label: CaseLabel) -> "SquareObstruction":
        """The obstruction obtained by substituting -t for t."""
        return replace(
            self,
            label=label,
            f=self.f.compose_neg(),
            g=self.g.compose_neg(),
            h=self.h.compose_neg(),
        )


def _b_plus() -> SquareObstruction:
    f = UniPoly([1, 0, 4, 8, -4, -28, -35, -12, 17, 26, 17, 6, 1])
    g = UniPoly([-HALF, -5 * HALF, -5 * HALF, 1, 4, 3, 1])
    h = UniPoly([-3 * QUARTER, 5 * HALF, 19 * QUARTER, 7 * HALF, 5 * QUARTER])
    return SquareObstruction(CaseLabel.B_PLUS, f, g, h, 2, frozenset({0, 1}))


def catalog() -> dict[CaseLabel, SquareObstruction]:
    """The five obstructions, keyed by case label.

    The b- entry is derived from b+ by the sign substitution, which is its
    definition; everything else is entered directly.
    """
    b_plus = _b_plus()
    entries = [
        SquareObstruction(
            CaseLabel.C,
            f=UniPoly([1, 0, 0, 0, -1, 0, 1]),
            g=UniPoly([0, -HALF, 0, 1]),
            h=UniPoly([-1, 0, QUARTER]),
            t_min=3,
            known_square_args=frozenset({0, 1, 2}),
        ),
        SquareObstruction(
            CaseLabel.E,
            f=UniPoly([0, -2, -2, 0, 2, 2, 1]),
            g=UniPoly([-HALF, HALF, 1, 1]),
            h=UniPoly([QUARTER, 3 * HALF, 5 * QUARTER]),
            t_min=2,
            known_square_args=frozenset({0, 1}),
        ),
        SquareObstruction(
            CaseLabel.F,
            f=UniPoly([-2, -3, -1, 1, 3, 2, 1]),
            g=UniPoly([-HALF, 1, 1, 1]),
            h=UniPoly([9 * QUARTER, 2, 1]),
            t_min=2,
            known_square_args=frozenset({1}),
        ),
        b_plus,
        b_plus.sign_flipped(CaseLabel.B_MINUS),
    ]
    return {obs.label: obs for obs in entries}


def verify_identity(obs: SquareObstruction) -> bool:
    """Coefficient-exact check of f = g^2 - h."""
    return obs.f == obs.g * obs.g - obs.h


def factor_equation(obs: SquareObstruction) -> tuple[UniPoly, UniPoly]:
    """The pair (A, 4h) with A = 2g, so that a^2 = f(t) forces
    (A(t) - 2a)(A(t) + 2a) = 4h(t)."""
    if not verify_identity(obs):
        raise ValueError(f"case {obs.label.value}: f = g^2 - h does not hold")
    a_poly = 2 * obs.g
    four_h = 4 * obs.h
    # The factor identity is equivalent to the decomposition: A^2 - 4f = 4h.
    assert a_poly * a_poly - 4 * obs.f == four_h
    return a_poly, four_h


class Impossibility(Enum):
    PROVED_IMPOSSIBLE = "proved-impossible"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NoSquareCertificate:
    """Result of the gap argument for one obstruction.

    PROVED_IMPOSSIBLE means: for every integer t >= t_min, f(t) is not a
    perfect square.  It is granted only when all three positivity checks
    succeed; anything less is INCONCLUSIVE, never a fabricated proof.
    """

    label: CaseLabel
    status: Impossibility
    t_min: int
    upper_gap: PositivityCertificate  # (2A - 1) - 4h > 0
    lower_gap: PositivityCertificate  # 4h + (2A + 1) > 0
    nonzero_side: str | None  # which of 4h / -4h was certified positive
    nonzero: PositivityCertificate | None

    @property
    def proved(self) -> bool:
        return self.status is Impossibility.PROVED_IMPOSSIBLE


def certify_no_square(obs: SquareObstruction) -> NoSquareCertificate:
    """Certify that f(t) is never a square for integer t >= t_min.

    Soundness of the criterion: suppose m^2 = 4f(t) = A(t)^2 - 4h(t) with
    4h(t) != 0.  If 4h(t) > 0 then A(t)^2 > m^2, so |A(t)| >= |m| + 1 and
    4h(t) = A^2 - m^2 >= 2|A(t)| - 1 >= 2A(t) - 1.  If 4h(t) < 0 then
    |m| >= |A(t)| + 1 and -4h(t) >= 2|A(t)| + 1 >= ... > -(2A(t) + 1) is
    violated.  Certifying 4h strictly between -(2A + 1) and 2A - 1, and
    nonzero, therefore excludes every integer solution at once.
    """
    a_poly, four_h = factor_equation(obs)
    upper = eventually_positive(2 * a_poly - 1 - four_h, obs.t_min)
    lower = eventually_positive(four_h + 2 * a_poly + 1, obs.t_min)
    side = None
    nonzero = None
    pos = eventually_positive(four_h, obs.t_min)
    if pos.proved:
        side, nonzero = "positive", pos
    else:
        neg = eventually_positive(-four_h, obs.t_min)
        if neg.proved:
            side, nonzero = "negative", neg
    proved = upper.proved and lower.proved and nonzero is not None
    return NoSquareCertificate(
        label=obs.label,
        status=Impossibility.PROVED_IMPOSSIBLE if proved else Impossibility.INCONCLUSIVE,
        t_min=obs.t_min,
        upper_gap=upper,
        lower_gap=lower,
        nonzero_side=side,
        nonzero=nonzero,
    )


# Modulus for the sieve's square-residue prefilter: 2^6 * 3^2 * 5 * 7 * 11 * 13.
# Fewer than 1% of residues mod this are squares, so almost every t is
# discarded with cheap modular arithmetic before any big-integer work.
_FILTER_MODULUS = 2882880
_RESIDUE_TABLE: np.ndarray | None = None


def _square_residue_table() -> np.ndarray:
    global _RESIDUE_TABLE
    if _RESIDUE_TABLE is None:
        k = np.arange(_FILTER_MODULUS // 2 + 1, dtype=np.int64)
        table = np.zeros(_FILTER_MODULUS, dtype=bool)
        table[(k * k) % _FILTER_MODULUS] = True
        _RESIDUE_TABLE = table
    return _RESIDUE_TABLE


def _eval_int(coeffs_desc: tuple[int, ...], t: int) -> int:
    acc = 0
    for c in coeffs_desc:
        acc = acc * t + c
    return acc


def sieve_naive(obs: SquareObstruction, limit: int) -> list[int]:
    """Reference sieve: full-precision evaluation and square test at every t."""
    coeffs_desc = tuple(reversed(obs.f.integer_coefficients()))
    return [
        t
        for t in range(limit + 1)
        if (v := _eval_int(coeffs_desc, t)) >= 0 and is_perfect_square(v)
    ]


def sieve(obs: SquareObstruction, limit: int, *, chunk: int = 1 << 18) -> list[int]:
    """All t in [0, limit] with f(t) a perfect square.

    A t can only survive if f(t) mod M is a square residue mod M, so a
    vectorized modular Horner pass discards the overwhelming majority of
    arguments; the few remaining candidates are confirmed with exact
    arbitrary-precision evaluation.  Results are identical to sieve_naive.
    """
    if limit < 0:
        raise ValueError("sieve limit must be nonnegative")
    coeffs_desc = tuple(reversed(obs.f.integer_coefficients()))
    mod_coeffs = [c % _FILTER_MODULUS for c in coeffs_desc]
    table = _square_residue_table()
    found: list[int] = []
    for start in range(0, limit + 1, chunk):
        stop = min(start + chunk, limit + 1)
        t = np.arange(start, stop, dtype=np.int64) % _FILTER_MODULUS
        acc = np.zeros(stop - start, dtype=np.int64)
        for c in mod_coeffs:
            acc = (acc * t + c) % _FILTER_MODULUS
        for offset in np.nonzero(table[acc])[0]:
            t_full = start + int(offset)
            v = _eval_int(coeffs_desc, t_full)
            if v >= 0 and is_perfect_square(v):
                found.append(t_full)
    return found
