"""Picture fuzzy numbers, score profiles, and the orders defined on them.

A picture fuzzy number (PFN) is a triple <mu, eta, nu> of positive,
neutral, and negative membership degrees with mu + eta + nu <= 1.  The
leftover mass pi = 1 - (mu + eta + nu) is the refusal degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import ComponentOutOfRange, EmptyInput, SumExceedsOne

# Slack on the sum constraint.  Exact reals satisfy mu+eta+nu <= 1; floating
# point needs room for one-ulp overshoot in provably closed operations.
EPS_SUM = 1e-9


@dataclass(frozen=True, slots=True)
class Pfn:
    """A picture fuzzy number.  Components are stored unmodified."""

    mu: float
    eta: float
    nu: float

    def __post_init__(self) -> None:
        for name in ("mu", "eta", "nu"):
            c = getattr(self, name)
            if not (-EPS_SUM <= c <= 1.0 + EPS_SUM):
                raise ComponentOutOfRange(f"{name} = {c!r} is outside [0, 1]")
        s = self.mu + self.eta + self.nu
        if s > 1.0 + EPS_SUM:
            raise SumExceedsOne(f"mu + eta + nu = {s!r} exceeds 1")

    @property
    def pi(self) -> float:
        """Refusal degree 1 - (mu + eta + nu)."""
        return 1.0 - (self.mu + self.eta + self.nu)

    def __str__(self) -> str:
        return f"<{self.mu!r},{self.eta!r},{self.nu!r}>"

    def to_json(self) -> list[float]:
        """JSON form: the array [mu, eta, nu]."""
        return [self.mu, self.eta, self.nu]

    @classmethod
    def from_json(cls, data) -> "Pfn":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise ComponentOutOfRange(f"expected [mu, eta, nu], got {data!r}")
        return cls(float(data[0]), float(data[1]), float(data[2]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def make_pfn(mu: float, eta: float, nu: float) -> Pfn:
    """Validate and build a PFN; raises on out-of-range input."""
    return Pfn(mu, eta, nu)


@dataclass(frozen=True, slots=True)
class ScoreProfile:
    """The lexicographic key (s, h1, h2) of the admissible order.

    s = mu - nu, h1 = mu + nu, h2 = mu + eta + nu.  The map is injective:
    the originating PFN is recoverable (see ``to_pfn``).
    """

    s: float
    h1: float
    h2: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.s, self.h1, self.h2)

    def to_pfn(self) -> Pfn:
        """Invert the profile back to its PFN."""
        mu = (self.s + self.h1) / 2.0
        nu = (self.h1 - self.s) / 2.0
        return Pfn(mu, self.h2 - self.h1, nu)


def score_profile(x: Pfn) -> ScoreProfile:
    return ScoreProfile(x.mu - x.nu, x.mu + x.nu, x.mu + x.eta + x.nu)


# Comparison keys are quantized to this decimal grid.  Short-decimal inputs
# like 0.2 - 0.1 vs 0.3 - 0.2 differ by ~1e-17 once stored as doubles; the
# grid absorbs that representation noise so decimal ties are detected.
# Quantizing the key (rather than comparing with a tolerance) keeps the
# relation a genuine total preorder: transitivity cannot break.
QUANT_DECIMALS = 12


def admissible_key(x: Pfn) -> tuple[float, float, float]:
    """The quantized (s, h1, h2) tuple ordered by ``cmp_admissible``."""
    p = score_profile(x)
    return (
        round(p.s, QUANT_DECIMALS),
        round(p.h1, QUANT_DECIMALS),
        round(p.h2, QUANT_DECIMALS),
    )


def cmp_admissible(x: Pfn, y: Pfn) -> int:
    """Total-order comparison: -1, 0, or +1.

    Compares (s, h1, h2) lexicographically on the quantized key.  Returns
    0 only when all three keys agree, which by injectivity means the
    operands are component-wise equal up to the key grid.
    """
    a = admissible_key(x)
    b = admissible_key(y)
    return (a > b) - (a < b)


def cmp_score_accuracy(x: Pfn, y: Pfn) -> int | None:
    """Two-key comparison by score then total accuracy mu + eta + nu.

    Returns -1 / +1, or None when both keys tie.  The tie verdict is kept
    distinct from equality because this relation is not antisymmetric:
    distinct PFNs can share both keys.  Provided for comparison studies;
    use ``cmp_admissible`` for ranking.
    """
    a = (round(x.mu - x.nu, QUANT_DECIMALS), round(x.mu + x.eta + x.nu, QUANT_DECIMALS))
    b = (round(y.mu - y.nu, QUANT_DECIMALS), round(y.mu + y.eta + y.nu, QUANT_DECIMALS))
    if a == b:
        return None
    return 1 if a > b else -1


def leq_componentwise(x: Pfn, y: Pfn) -> bool:
    """Partial order: mu and eta no larger, nu no smaller."""
    return x.mu <= y.mu and x.eta <= y.eta and x.nu >= y.nu


def _sort_key(x: Pfn) -> tuple[float, float, float]:
    return admissible_key(x)


def join_w(xs: Iterable[Pfn]) -> Pfn:
    """Maximum under the admissible order (finite supremum)."""
    xs = list(xs)
    if not xs:
        raise EmptyInput("join of no PFNs")
    return max(xs, key=_sort_key)


def meet_w(xs: Iterable[Pfn]) -> Pfn:
    """Minimum under the admissible order (finite infimum)."""
    xs = list(xs)
    if not xs:
        raise EmptyInput("meet of no PFNs")
    return min(xs, key=_sort_key)


#: Bottom and top of the admissible order.
BOTTOM = Pfn(0.0, 0.0, 1.0)
TOP = Pfn(1.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class LegacyTriple:
    """A raw output triple from a legacy operator.

    Each component lies in [0, 1] (t-norms and t-conorms cannot leave the
    unit interval) but the components need not sum to at most 1; exhibiting
    such violations is the point of carrying this type.
    """

    a: float
    b: float
    c: float

    @property
    def component_sum(self) -> float:
        return self.a + self.b + self.c

    def is_pfn(self) -> bool:
        """Whether the triple satisfies the PFN invariant."""
        ok_range = all(-EPS_SUM <= v <= 1.0 + EPS_SUM for v in (self.a, self.b, self.c))
        return ok_range and self.component_sum <= 1.0 + EPS_SUM

    def to_json(self) -> list[float]:
        return [self.a, self.b, self.c]
