"""Multi-criteria decision making over picture fuzzy ratings.

The four-step procedure: build a decision matrix of PFN ratings, replace
cost-criterion cells with their complements, aggregate each alternative's
row with one of the interactional operators, and rank the aggregates under
the admissible order.  ``sweep_gamma`` repeats the pipeline across a grid
of t-norm parameters for sensitivity reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .aggregators import OPERATORS, check_weights
from .core import Pfn, ScoreProfile, admissible_key, score_profile
from .errors import EmptyInput, LengthMismatch, ParamOutOfDomain, PfnError
from .interactional import complement
from .tnorms import TnormFamily

KINDS = ("benefit", "cost")


@dataclass(frozen=True)
class Criterion:
    name: str
    kind: str  # "benefit" or "cost"
    weight: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PfnError(
                f"criterion {self.name!r}: kind must be benefit or cost, "
                f"got {self.kind!r}"
            )


@dataclass(frozen=True)
class Alternative:
    name: str
    ratings: tuple[Pfn, ...]


@dataclass(frozen=True)
class DecisionProblem:
    criteria: tuple[Criterion, ...]
    alternatives: tuple[Alternative, ...]

    def __post_init__(self):
        check_weights([c.weight for c in self.criteria])
        names = [c.name for c in self.criteria]
        if len(set(names)) != len(names):
            raise PfnError("criterion names must be unique")
        names = [a.name for a in self.alternatives]
        if len(set(names)) != len(names):
            raise PfnError("alternative names must be unique")
        for alt in self.alternatives:
            if len(alt.ratings) != len(self.criteria):
                raise LengthMismatch(
                    f"alternative {alt.name!r} has {len(alt.ratings)} ratings "
                    f"for {len(self.criteria)} criteria"
                )

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(c.weight for c in self.criteria)


def normalize(problem: DecisionProblem) -> DecisionProblem:
    """Complement cost-criterion cells; all criteria become benefit."""
    cost = [c.kind == "cost" for c in problem.criteria]
    if not any(cost):
        return problem
    alts = tuple(
        Alternative(
            a.name,
            tuple(
                complement(r) if is_cost else r
                for r, is_cost in zip(a.ratings, cost)
            ),
        )
        for a in problem.alternatives
    )
    crits = tuple(replace(c, kind="benefit") for c in problem.criteria)
    return DecisionProblem(crits, alts)


def aggregate(
    problem: DecisionProblem, f: TnormFamily, op: str
) -> list[tuple[str, Pfn]]:
    """One aggregated PFN per alternative, using the criterion weights."""
    try:
        operator = OPERATORS[op]
    except KeyError:
        raise ParamOutOfDomain(
            f"unknown operator {op!r}; expected one of {', '.join(OPERATORS)}"
        ) from None
    w = problem.weights
    return [(a.name, operator(f, w, list(a.ratings))) for a in problem.alternatives]


@dataclass(frozen=True)
class RankedAlternative:
    rank: int
    name: str
    value: Pfn
    profile: ScoreProfile


@dataclass(frozen=True)
class RankingResult:
    entries: tuple[RankedAlternative, ...]
    operator: str
    family: str
    gamma: float | None

    def order(self) -> list[str]:
        return [e.name for e in self.entries]

    def scores(self) -> dict[str, float]:
        return {e.name: e.profile.s for e in self.entries}

    def ranks(self) -> dict[str, int]:
        return {e.name: e.rank for e in self.entries}


def rank(
    aggregates: Sequence[tuple[str, Pfn]],
    operator: str = "",
    family: str = "",
    gamma: float | None = None,
) -> RankingResult:
    """Sort aggregates descending under the admissible order.

    The sort is stable, so alternatives with component-wise equal
    aggregates keep their input order; that is the only possible tie.
    """
    if not aggregates:
        raise EmptyInput("nothing to rank")
    ordered = sorted(
        aggregates,
        key=lambda item: admissible_key(item[1]),
        reverse=True,
    )
    entries = tuple(
        RankedAlternative(i + 1, name, value, score_profile(value))
        for i, (name, value) in enumerate(ordered)
    )
    return RankingResult(entries, operator, family, gamma)


def rank_problem(
    problem: DecisionProblem, f: TnormFamily, op: str
) -> RankingResult:
    """normalize -> aggregate -> rank in one call."""
    aggs = aggregate(normalize(problem), f, op)
    return rank(aggs, operator=op, family=f.name, gamma=f.gamma)


@dataclass(frozen=True)
class SweepRow:
    gamma: float
    scores: dict[str, float]
    ranks: dict[str, int]


@dataclass(frozen=True)
class SweepTable:
    family: str
    operator: str
    alternatives: tuple[str, ...]
    rows: tuple[SweepRow, ...]


def gamma_grid(gamma_min: float, gamma_max: float, steps: int) -> list[float]:
    """``steps`` evenly spaced values including both endpoints."""
    if steps < 2:
        raise ParamOutOfDomain(f"steps must be >= 2, got {steps}")
    if not gamma_min < gamma_max:
        raise ParamOutOfDomain(
            f"need gamma-min < gamma-max, got {gamma_min!r} >= {gamma_max!r}"
        )
    h = (gamma_max - gamma_min) / (steps - 1)
    grid = [gamma_min + i * h for i in range(steps - 1)]
    grid.append(gamma_max)  # exact endpoint, no accumulated rounding
    return grid


def sweep_gamma(
    problem: DecisionProblem,
    family_name: str,
    op: str,
    gamma_min: float,
    gamma_max: float,
    steps: int,
) -> SweepTable:
    """Evaluate scores and ranks on an evenly spaced gamma grid."""
    normalized = normalize(problem)
    names = tuple(a.name for a in problem.alternatives)
    rows = []
    for g in gamma_grid(gamma_min, gamma_max, steps):
        f = TnormFamily(family_name, g)  # raises if g leaves the domain
        result = rank(aggregate(normalized, f, op))
        rows.append(SweepRow(g, result.scores(), result.ranks()))
    return SweepTable(family_name, op, names, tuple(rows))
