"""Orchestration: condition-transition automaton, elimination, search, report.

The final argument has the shape of a path problem.  Each of the three
exceptional condition families is a node; an ordered pair (i, j) means
"family i holds in a geometry while family j holds in its point
localization".  Six of the nine pairs are impossible (two by imported
external facts, four by square obstructions computed per instance), and
the surviving pairs admit no directed path of three transitions, which is
what a high-dimensional counterexample would need for its chain of nested
localizations at a point, a line and a plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction

from . import __version__
from .exact_arith import is_perfect_square, isqrt_floor
from .parameters import (
    Condition,
    ParamSystem,
    classify_condition,
    condition_alphas,
    integrality_alpha0,
    integrality_alpha1,
)
from .localization import (
    CaseLabel,
    CaseInstanceVerdict,
    eliminate_case_instance,
    localized_alpha,
)

# -- the automaton -----------------------------------------------------------

STANDARD_FORBIDDEN: frozenset[tuple[int, int]] = frozenset(
    {(1, 1), (1, 2), (2, 2), (3, 1), (3, 2), (3, 3)}
)

# Which case settles each forbidden pair; (1, 2) splits by the sign of the
# outer condition-1 instance.
EDGE_CASES: dict[tuple[int, int], str] = {
    (1, 1): "a",
    (1, 2): "b",
    (2, 2): "c",
    (3, 1): "d",
    (3, 2): "e",
    (3, 3): "f",
}

# The chain a counterexample needs: point inside line inside plane.
LOCALIZATION_CHAIN_DEPTH = 3

# Largest flat dimension compatible with each route's size cap.
ALPHA_ROUTE_MAX_R = 19
BETA_ROUTE_MAX_R = 16


@dataclass(frozen=True)
class TransitionGraph:
    """Directed graph on the condition families with a forbidden-edge set."""

    nodes: tuple[int, ...] = (1, 2, 3)
    forbidden: frozenset[tuple[int, int]] = STANDARD_FORBIDDEN

    def allowed_pairs(self) -> list[tuple[int, int]]:
        return [
            (a, b) for a in self.nodes for b in self.nodes if (a, b) not in self.forbidden
        ]

    def is_forbidden(self, pair: tuple[int, int]) -> bool:
        return pair in self.forbidden

    def with_restored(self, pair: tuple[int, int]) -> "TransitionGraph":
        """The mutated graph with one forbidden edge moved to the allowed set."""
        if pair not in self.forbidden:
            raise ValueError(f"{pair} is not a forbidden edge")
        return TransitionGraph(self.nodes, self.forbidden - {pair})

    def forbidden_cases(self) -> dict[tuple[int, int], str]:
        return {pair: EDGE_CASES[pair] for pair in sorted(self.forbidden)}


def standard_graph() -> TransitionGraph:
    return TransitionGraph()


def longest_condition_chain(graph: TransitionGraph) -> "int | float":
    """Length in edges of the longest simple directed path over allowed edges.

    Returns math.inf when the allowed edges contain a cycle (a cycle allows
    chains of any length).  The standard graph has no cycle and longest
    path 2, strictly below the 3 transitions a counterexample chain needs.
    """
    adjacency: dict[int, list[int]] = {n: [] for n in graph.nodes}
    for a, b in graph.allowed_pairs():
        adjacency[a].append(b)

    # Cycle detection by DFS coloring.
    color = {n: 0 for n in graph.nodes}  # 0 new, 1 on stack, 2 done

    def has_cycle(node: int) -> bool:
        color[node] = 1
        for nxt in adjacency[node]:
            if color[nxt] == 1 or (color[nxt] == 0 and has_cycle(nxt)):
                return True
        color[node] = 2
        return False

    if any(color[n] == 0 and has_cycle(n) for n in graph.nodes):
        return math.inf

    best = 0

    def dfs(node: int, visited: frozenset[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for nxt in adjacency[node]:
            if nxt not in visited:
                dfs(nxt, visited | {nxt}, length + 1)

    for n in graph.nodes:
        dfs(n, frozenset({n}), 0)
    return best


def exceptional_min_dim(
    alpha_route_max_r: int = ALPHA_ROUTE_MAX_R, beta_route_max_r: int = BETA_ROUTE_MAX_R
) -> int:
    """Dimension from which the condition trichotomy is in force.

    One above the largest flat dimension either size cap tolerates.
    """
    return max(alpha_route_max_r, beta_route_max_r) + 1


def required_dimension(
    alpha_route_max_r: int = ALPHA_ROUTE_MAX_R,
    beta_route_max_r: int = BETA_ROUTE_MAX_R,
    chain_depth: int = LOCALIZATION_CHAIN_DEPTH,
) -> int:
    """Dimension needed for the full chain argument.

    The trichotomy must hold in the geometry and in all chain_depth nested
    localizations, each localization dropping the dimension by one.
    """
    return exceptional_min_dim(alpha_route_max_r, beta_route_max_r) + chain_depth


# -- verdicts ----------------------------------------------------------------


class Verdict(Enum):
    CLASSICAL = "Classical"
    ELIMINATED = "Eliminated"
    SURVIVES_SQUARE_TEST = "SurvivesSquareTest"
    OUT_OF_MODELED_SCOPE = "OutOfModeledScope"


@dataclass(frozen=True)
class EliminationVerdict:
    """Outcome for one parameter system, with the full rule trace."""

    subject: ParamSystem
    verdict: Verdict
    trace: tuple[str, ...]
    survivor_chains: tuple[str, ...] = ()
    case_instances: tuple[CaseInstanceVerdict, ...] = ()

    def to_record(self) -> dict:
        return {
            "subject": self.subject.to_record(),
            "verdict": self.verdict.value,
            "trace": list(self.trace),
            "survivorChains": list(self.survivor_chains),
            "caseInstances": [ci.to_record() for ci in self.case_instances],
        }


def normalize_disabled(cases) -> frozenset[CaseLabel]:
    """Accept CaseLabels or letter strings; 'b' expands to both sign variants."""
    out: set[CaseLabel] = set()
    for c in cases:
        if isinstance(c, CaseLabel):
            out.add(c)
        elif c == "b":
            out.update({CaseLabel.B_PLUS, CaseLabel.B_MINUS})
        else:
            out.add(CaseLabel(c))
    return frozenset(out)


_START_ORDER = (
    Condition.COND1_PLUS,
    Condition.COND1_MINUS,
    Condition.COND2,
    Condition.COND3,
)


def _edge_case(parent: Condition, target_family: int) -> CaseLabel:
    letter = EDGE_CASES[(parent.family, target_family)]
    if letter == "b":
        return CaseLabel.B_PLUS if parent is Condition.COND1_PLUS else CaseLabel.B_MINUS
    return CaseLabel(letter)


class _Walk:
    """Depth-first exploration of every hypothesized condition chain."""

    def __init__(self, graph: TransitionGraph, disabled: frozenset[CaseLabel]):
        self.graph = graph
        self.disabled = disabled
        self.trace: list[str] = []
        self.survivors: list[str] = []
        self.instances: list[CaseInstanceVerdict] = []

    def run(self, cond: Condition, s1: int, alpha: int) -> None:
        self.trace.append(f"condition {cond.value} holds at (s1={s1}, alpha={alpha})")
        self._step(cond, s1, alpha, depth=0, chain=f"{cond.value}(s1={s1})")

    def _step(self, cond: Condition, s1: int, alpha: int, depth: int, chain: str) -> None:
        pad = "  " * (depth + 1)
        if depth == LOCALIZATION_CHAIN_DEPTH:
            self.trace.append(f"{pad}chain {chain} completed {depth} transitions: SURVIVOR")
            self.survivors.append(chain)
            return
        fam = cond.family
        for target in (1, 2, 3):
            pair = (fam, target)
            if self.graph.is_forbidden(pair):
                case = _edge_case(cond, target)
                if case in self.disabled:
                    self.trace.append(
                        f"{pad}pair {pair} forbidden by case {case.value}, but that case "
                        "is disabled: continuation cannot be eliminated; SURVIVOR"
                    )
                    self.survivors.append(f"{chain} -> blocked case {case.value} disabled")
                    continue
                if case in (CaseLabel.A, CaseLabel.D):
                    self.trace.append(
                        f"{pad}pair {pair} impossible by imported fact "
                        f"(case {case.value}, external provenance); branch eliminated"
                    )
                    continue
                if case in (CaseLabel.B_PLUS, CaseLabel.B_MINUS):
                    arg = isqrt_floor(s1)
                    assert arg * arg == s1, "condition 1 presupposes a square line size"
                else:
                    arg = s1
                inst = eliminate_case_instance(case, arg)
                self.instances.append(inst)
                if inst.eliminated:
                    self.trace.append(
                        f"{pad}pair {pair} impossible: case {case.value} obstruction "
                        f"{inst.value} at argument {arg} is not a perfect square; "
                        "branch eliminated"
                    )
                else:
                    self.trace.append(
                        f"{pad}pair {pair}: case {case.value} obstruction {inst.value} "
                        f"= {inst.root}^2 IS a perfect square; SURVIVOR"
                    )
                    self.survivors.append(f"{chain} -> case {case.value} survivor at {arg}")
                continue
            # Allowed pair: localize and keep walking.
            s1_hat = alpha + s1
            if target == 1:
                if not is_perfect_square(s1_hat):
                    self.trace.append(
                        f"{pad}pair {pair} allowed, but condition 1 needs a square "
                        f"line size and {s1_hat} is not a square; branch closed"
                    )
                    continue
                children = (Condition.COND1_PLUS, Condition.COND1_MINUS)
            elif target == 2:
                children = (Condition.COND2,)
            else:
                children = (Condition.COND3,)
            for child in children:
                alpha_hat = localized_alpha(child, s1_hat)
                self.trace.append(
                    f"{pad}pair {pair} allowed: localized system "
                    f"(s1_hat={s1_hat}, alpha_hat={alpha_hat}) under {child.value}"
                )
                self._step(
                    child, s1_hat, alpha_hat, depth + 1, f"{chain} -> {child.value}(s1={s1_hat})"
                )


def eliminate(
    ps: ParamSystem,
    *,
    graph: TransitionGraph | None = None,
    disabled_cases: frozenset[CaseLabel] = frozenset(),
) -> EliminationVerdict:
    """Classify-or-eliminate one parameter system.

    Order of rules: classical short-circuit, divisibility and floor
    constraints, condition trichotomy, then the automaton walk in which
    every forbidden continuation must be killed by its case instance.
    """
    if ps.s1 < 3:
        raise ValueError("hypothesis requires at least 3 points on a line (s1 >= 3)")
    if ps.dim < required_dimension():
        raise ValueError(
            f"dim={ps.dim} is below the threshold {required_dimension()} "
            "where the chain argument applies"
        )
    graph = graph or standard_graph()
    tags = classify_condition(ps)
    if Condition.CLASSICAL_COMPATIBLE in tags:
        shape = "projective-like (alpha=0)" if ps.alpha == 0 else "affine-like (alpha=1)"
        return EliminationVerdict(
            ps, Verdict.CLASSICAL, (f"classical-compatible shape: {shape}",)
        )
    trace: list[str] = []
    if ps.alpha_prime == 0:
        if not integrality_alpha0(ps.s1, ps.alpha):
            trace.append(
                f"integrality failure: s1={ps.s1} does not divide alpha^2={ps.alpha**2}"
            )
            return EliminationVerdict(ps, Verdict.ELIMINATED, tuple(trace))
        if ps.alpha > 0 and ps.alpha * ps.alpha < ps.s1:
            trace.append(
                f"alpha-floor failure: 0 < alpha={ps.alpha} but alpha^2 < s1={ps.s1}"
            )
            return EliminationVerdict(ps, Verdict.ELIMINATED, tuple(trace))
    else:
        beta = ps.beta
        if not integrality_alpha1(ps.s1, beta):
            trace.append(f"integrality failure: s1={ps.s1} does not divide beta={beta}")
            return EliminationVerdict(ps, Verdict.ELIMINATED, tuple(trace))
    start_conditions = [c for c in _START_ORDER if c in tags]
    if not start_conditions:
        trace.append(
            "condition trichotomy: alpha matches no exceptional family; "
            "system excluded by the growth-threshold analysis"
        )
        return EliminationVerdict(ps, Verdict.ELIMINATED, tuple(trace))
    walk = _Walk(graph, disabled_cases)
    for cond in start_conditions:
        walk.run(cond, ps.s1, ps.alpha)
    trace.extend(walk.trace)
    if walk.survivors:
        return EliminationVerdict(
            ps,
            Verdict.SURVIVES_SQUARE_TEST,
            tuple(trace),
            tuple(walk.survivors),
            tuple(walk.instances),
        )
    return EliminationVerdict(
        ps, Verdict.ELIMINATED, tuple(trace), (), tuple(walk.instances)
    )


# -- report plumbing ----------------------------------------------------------


@dataclass
class ReportCheck:
    name: str
    status: str  # "pass", "fail" or "gap"
    details: dict = field(default_factory=dict)
    witness: object = None


@dataclass
class Report:
    version: str = __version__
    timestamp: str = ""
    checks: list[ReportCheck] = field(default_factory=list)

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat()

    def add(self, name: str, status: str, details: dict | None = None, witness=None) -> None:
        self.checks.append(ReportCheck(name, status, details or {}, witness))

    @property
    def overall_status(self) -> str:
        statuses = {c.status for c in self.checks}
        if "fail" in statuses:
            return "fail"
        if "gap" in statuses:
            return "gap"
        return "pass"

    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "gap": 2}[self.overall_status]

    def to_json_dict(self) -> dict:
        return _jsonable(
            {
                "version": self.version,
                "timestamp": self.timestamp,
                "overallStatus": self.overall_status,
                "checks": [
                    {
                        "name": c.name,
                        "status": c.status,
                        "details": c.details,
                        **({"witness": c.witness} if c.witness is not None else {}),
                    }
                    for c in self.checks
                ],
            }
        )


def _jsonable(obj):
    """JSON-friendly form with every integer as a decimal string.

    Consumers of the report must not lose precision on the big integers, so
    ints are serialized as strings throughout.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if hasattr(obj, "to_record"):
        return _jsonable(obj.to_record())
    raise TypeError(f"cannot serialize {type(obj)!r}")


# -- the exhaustive search -----------------------------------------------------


def _bulk_category(s1: int, alpha: int, alpha_prime: int, specials: dict[int, Condition]) -> str:
    """Cheap verdict category mirroring eliminate() for non-condition systems.

    Returns one of "classical", "integrality", "alpha-floor", "no-condition"
    or "condition" (the last meaning a full eliminate() walk is needed).
    Kept deliberately parallel to eliminate(); tests compare the two on
    random samples.
    """
    if alpha == 0 or (alpha == 1 and alpha_prime == 0):
        return "classical"
    if alpha_prime == 0:
        sq = alpha * alpha
        if sq % s1 != 0:
            return "integrality"
        if sq < s1:
            return "alpha-floor"
        return "condition" if alpha in specials else "no-condition"
    beta = alpha - 1
    if beta % s1 != 0:
        return "integrality"
    return "condition" if alpha == s1 * s1 + 1 else "no-condition"


def search(
    s1_max: int,
    alpha_max: int,
    *,
    dim: int | None = None,
    graph: TransitionGraph | None = None,
    disabled_cases: frozenset[CaseLabel] = frozenset(),
) -> Report:
    """Enumerate every (s1, alpha, alpha') in range and classify-or-eliminate.

    Fails (with witnesses) if any system survives, which with the full case
    set never happens; fault injection via disabled_cases must produce
    survivors, proving the search exercises each case.
    """
    if s1_max < 3:
        raise ValueError("hypothesis requires at least 3 points on a line (s1_max >= 3)")
    if alpha_max < 0:
        raise ValueError("alpha_max must be nonnegative")
    dim = required_dimension() if dim is None else dim
    graph = graph or standard_graph()
    counts = {
        "classical": 0,
        "integrality": 0,
        "alpha-floor": 0,
        "no-condition": 0,
        "condition-eliminated": 0,
    }
    classical_witnesses: list[dict] = []
    survivors: list[dict] = []
    for s1 in range(3, s1_max + 1):
        specials0 = {
            alpha: cond
            for cond, alpha in condition_alphas(s1).items()
            if cond is not Condition.COND3 and alpha <= alpha_max
        }
        # Fixed enumeration order for reproducible reports:
        # s1 outermost, alpha inner, alpha' innermost.
        for alpha in range(alpha_max + 1):
            for alpha_prime in (0, 1):
                category = _bulk_category(s1, alpha, alpha_prime, specials0)
                if category == "condition":
                    ps = ParamSystem(s1, alpha, alpha_prime, dim)
                    verdict = eliminate(ps, graph=graph, disabled_cases=disabled_cases)
                    if verdict.verdict is Verdict.SURVIVES_SQUARE_TEST:
                        survivors.append(verdict.to_record())
                    else:
                        counts["condition-eliminated"] += 1
                else:
                    counts[category] += 1
                    if category == "classical":
                        classical_witnesses.append(
                            {"s1": s1, "alpha": alpha, "alphaPrime": alpha_prime}
                        )
    report = Report()
    report.add(
        "parameter-search",
        "fail" if survivors else "pass",
        details={
            "s1Max": s1_max,
            "alphaMax": alpha_max,
            "dim": dim,
            "counts": counts,
            "systemsChecked": (s1_max - 2) * (alpha_max + 1) * 2,
            "disabledCases": sorted(c.value for c in disabled_cases),
            "classicalWitnesses": classical_witnesses,
        },
        witness=survivors or None,
    )
    return report
