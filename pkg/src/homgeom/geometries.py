"""Ground truth: projective and affine geometries over prime fields.

These are the classical objects the parameter model is calibrated against.
Points are coordinate tuples, closure is linear (projective) or affine span,
and everything the rest of the package manipulates abstractly (flat-size
profiles, the localization quotient, the derived alpha) is computed here
concretely by enumeration so the abstract relations can be checked against
real geometries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .parameters import FlatProfile

DESK_SCALE_LIMIT = 100_000

Point = tuple[int, ...]


class UnsupportedFieldError(ValueError):
    """Raised for field sizes that are not prime."""


class HomogeneityError(AssertionError):
    """Two flats of the same dimension turned out to have different sizes."""


class ModelMismatchError(ValueError):
    """A profile does not fit the parameter model's relations."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Arithmetic in the field with p elements, p prime."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise UnsupportedFieldError(f"{p} is not prime; only prime fields are supported")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


@dataclass(frozen=True)
class GeometryKind:
    family: str  # "projective" or "affine"
    n: int
    p: int

    def __str__(self) -> str:
        tag = "PG" if self.family == "projective" else "AG"
        return f"{tag}({self.n},{self.p})"


class Geometry:
    """A finite point set with an explicit closure operator.

    For the projective kind, points are the normalized representatives of
    the 1-dimensional subspaces of F_p^(n+1) and closure is linear span;
    for the affine kind, points are the vectors of F_p^n and closure is
    affine span.  Instances are immutable after construction and closures
    are memoized.
    """

    def __init__(self, kind: GeometryKind, points: tuple[Point, ...]):
        self.kind = kind
        self.points = points
        self.field = PrimeField(kind.p)
        self._closure_cache: dict[frozenset, frozenset] = {}

    # -- linear algebra over F_p ----------------------------------------------

    def _reduce(self, vec: list[int], rows: dict[int, tuple[int, ...]]) -> list[int]:
        p = self.kind.p
        for piv, row in rows.items():
            c = vec[piv]
            if c:
                vec = [(v - c * r) % p for v, r in zip(vec, row)]
        return vec

    def _insert(self, vec: list[int], rows: dict[int, tuple[int, ...]]) -> bool:
        """Reduce vec against rows and insert if independent; True if inserted."""
        vec = self._reduce(vec, rows)
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return False
        inv = self.field.inv(vec[piv])
        rows[piv] = tuple((v * inv) % self.kind.p for v in vec)
        return True

    def _span_rows(self, vectors) -> dict[int, tuple[int, ...]]:
        rows: dict[int, tuple[int, ...]] = {}
        for v in vectors:
            self._insert(list(v), rows)
        return rows

    def _in_span(self, vec, rows) -> bool:
        return not any(self._reduce(list(vec), rows))

    # -- the closure operator --------------------------------------------------

    def closure(self, subset) -> frozenset:
        """Smallest flat containing the given points."""
        key = frozenset(subset)
        cached = self._closure_cache.get(key)
        if cached is not None:
            return cached
        if not key:
            result = frozenset()
        elif self.kind.family == "projective":
            rows = self._span_rows(key)
            result = frozenset(x for x in self.points if self._in_span(x, rows))
        else:
            base = min(key)
            p = self.kind.p
            directions = [
                tuple((a - b) % p for a, b in zip(x, base)) for x in key if x != base
            ]
            rows = self._span_rows(directions)
            result = frozenset(
                x
                for x in self.points
                if self._in_span(tuple((a - b) % p for a, b in zip(x, base)), rows)
            )
        self._closure_cache[key] = result
        return result


def build_projective(n: int, p: int) -> Geometry:
    """Projective geometry of dimension n over the p-element field."""
    if not is_prime(p):
        raise UnsupportedFieldError(f"{p} is not prime; only prime fields are supported")
    if not 2 <= n <= 4:
        raise ValueError(f"projective dimension must be in 2..4, got {n}")
    if p ** (n + 1) > DESK_SCALE_LIMIT:
        raise ValueError(f"PG({n},{p}) exceeds the desk-scale limit")
    points = []
    for vec in product(range(p), repeat=n + 1):
        lead = next((i for i, v in enumerate(vec) if v), None)
        if lead is not None and vec[lead] == 1:
            points.append(vec)
    return Geometry(GeometryKind("projective", n, p), tuple(sorted(points)))


def build_affine(n: int, p: int) -> Geometry:
    """Affine geometry of dimension n over the p-element field."""
    if not is_prime(p):
        raise UnsupportedFieldError(f"{p} is not prime; only prime fields are supported")
    if n < 2:
        raise ValueError(f"affine dimension must be at least 2, got {n}")
    if p**n > DESK_SCALE_LIMIT:
        raise ValueError(f"AG({n},{p}) exceeds the desk-scale limit")
    points = tuple(sorted(product(range(p), repeat=n)))
    return Geometry(GeometryKind("affine", n, p), points)


def _flats_by_dim(g) -> list[set[frozenset]]:
    """All flats of the geometry, grouped by dimension, by closing upward."""
    all_points = frozenset(g.points)
    levels = [{g.closure((x,)) for x in g.points}]
    while not (len(levels[-1]) == 1 and next(iter(levels[-1])) == all_points):
        nxt = set()
        for flat in levels[-1]:
            flat_tuple = tuple(flat)
            for x in g.points:
                if x not in flat:
                    nxt.add(g.closure(flat_tuple + (x,)))
        if not nxt or len(levels) > len(g.points) + 1:
            raise HomogeneityError("flat lattice did not terminate at the full point set")
        levels.append(nxt)
    return levels


def flat_profile(g) -> FlatProfile:
    """Flat sizes s_0 ... s_n, verifying same-dimension flats agree in size."""
    sizes = []
    for dim, flats in enumerate(_flats_by_dim(g)):
        observed = {len(f) for f in flats}
        if len(observed) != 1:
            raise HomogeneityError(
                f"flats of dimension {dim} have unequal sizes {sorted(observed)}"
            )
        sizes.append(observed.pop())
    return FlatProfile(tuple(sizes))


def localize_at_point(g, x: Point) -> FlatProfile:
    """Flat profile of the quotient geometry whose points are the lines through x.

    Checked against the quotient identity s_hat_i = (s_(i+1) - 1)/(s_1 - 1)
    on the parent profile.
    """
    parent = flat_profile(g)
    hat_sizes = []
    flat = g.closure((x,))
    for i in range(1, parent.top_dim + 1):
        y = next(pt for pt in g.points if pt not in flat)
        flat = g.closure(tuple(flat) + (y,))
        lines = {g.closure((x, z)) for z in flat if z != x}
        expected_num = parent.s(i) - 1
        denom = parent.s(1) - 1
        assert expected_num % denom == 0
        assert len(lines) == expected_num // denom
        hat_sizes.append(len(lines))
    return FlatProfile(tuple(hat_sizes))


def alpha_from_profile(profile: FlatProfile) -> int:
    """Invert the plane-size relation: alpha = (s2 - s1 - (s1-1)^2) / (s1-1)."""
    if profile.top_dim < 2:
        raise ModelMismatchError("profile needs s_2 to derive alpha")
    s1, s2 = profile.s(1), profile.s(2)
    num = s2 - s1 - (s1 - 1) ** 2
    if num % (s1 - 1) != 0:
        raise ModelMismatchError(f"profile {profile.sizes} has non-integral alpha")
    return num // (s1 - 1)


def alpha_of(g) -> int:
    """The alpha invariant of a built geometry (0 projective, 1 affine)."""
    return alpha_from_profile(flat_profile(g))


def check_closure_axioms(g, *, samples: int = 200, seed: int = 0) -> dict[str, bool]:
    """Test the closure axioms and exchange on a family of subsets.

    The family is every subset of size <= 2 plus `samples` random larger
    ones.  Exchange is the expensive test, so it runs on a capped subfamily.
    """
    rng = random.Random(seed)
    pts = list(g.points)
    subsets: list[tuple[Point, ...]] = [()]
    subsets += [(x,) for x in pts]
    subsets += [(a, b) for i, a in enumerate(pts) for b in pts[i + 1 :]]
    for _ in range(samples):
        k = rng.randint(3, min(5, len(pts)))
        subsets.append(tuple(rng.sample(pts, k)))

    extensive = monotone = idempotent = exchange = True
    exchange_budget = 60
    for subset in subsets:
        closed = g.closure(subset)
        if not set(subset) <= closed:
            extensive = False
        if g.closure(tuple(closed)) != closed:
            idempotent = False
        outside = [y for y in pts if y not in closed]
        for y in rng.sample(outside, min(2, len(outside))):
            bigger = g.closure(subset + (y,))
            if not closed <= bigger:
                monotone = False
            if exchange_budget > 0:
                exchange_budget -= 1
                for x in bigger - closed:
                    if y not in g.closure(subset + (x,)):
                        exchange = False
    return {
        "extensive": extensive,
        "monotone": monotone,
        "idempotent": idempotent,
        "exchange": exchange,
    }
