"""Interactional weighted aggregation operators.

``pfiwa`` / ``pfiwg`` are the weighted average and geometric operators
built on the interactional laws; ``pfiowa`` / ``pfiowg`` apply the weights
to operands pre-sorted descending under the admissible order.

``closed_form`` evaluates the per-family algebraic expressions for the six
named families directly, with no generator calls; it exists purely as an
independent cross-check of the generator path.
"""

from __future__ import annotations

import math
from typing import Sequence

from ._extmath import INF, div_ext as _safe_div
from .core import Pfn, admissible_key
from .errors import LengthMismatch, UnsupportedFamily, WeightError
from .interactional import _assemble, n_ary_add, n_ary_mul
from .tnorms import TnormFamily

#: Absolute slack accepted on sum(weights) == 1.
WEIGHT_TOL = 1e-9


def check_weights(w: Sequence[float], n: int | None = None) -> tuple[float, ...]:
    """Validate a weight vector: each w_j in (0, 1], sum within 1e-9 of 1.

    Invalid weights are rejected rather than renormalized; silent
    renormalization would hide data errors.
    """
    w = tuple(float(x) for x in w)
    if n is not None and len(w) != n:
        raise LengthMismatch(f"{len(w)} weights for {n} operands")
    if not w:
        raise WeightError("empty weight vector")
    for j, x in enumerate(w):
        if not 0.0 < x <= 1.0:
            raise WeightError(f"weight {j} = {x!r} is outside (0, 1]")
    total = math.fsum(w)
    if abs(total - 1.0) > WEIGHT_TOL:
        raise WeightError(f"weights sum to {total!r}, not 1")
    return w


def pfiwa(f: TnormFamily, w: Sequence[float], xs: Sequence[Pfn]) -> Pfn:
    """Interactional weighted average: the weighted sum of scalar multiples."""
    w = check_weights(w, len(xs))
    return n_ary_add(f, xs, w)


def pfiwg(f: TnormFamily, w: Sequence[float], xs: Sequence[Pfn]) -> Pfn:
    """Interactional weighted geometric: the weighted product of powers."""
    w = check_weights(w, len(xs))
    return n_ary_mul(f, xs, w)


def _sorted_desc(xs: Sequence[Pfn]) -> list[Pfn]:
    # stable: duplicates keep their input order, so the permutation
    # applied to the weights is deterministic
    return sorted(xs, key=admissible_key, reverse=True)


def pfiowa(f: TnormFamily, w: Sequence[float], xs: Sequence[Pfn]) -> Pfn:
    """Ordered variant of ``pfiwa``: weights align to rank, not position."""
    w = check_weights(w, len(xs))
    return n_ary_add(f, _sorted_desc(xs), w)


def pfiowg(f: TnormFamily, w: Sequence[float], xs: Sequence[Pfn]) -> Pfn:
    """Ordered variant of ``pfiwg``."""
    w = check_weights(w, len(xs))
    return n_ary_mul(f, _sorted_desc(xs), w)


OPERATORS = {
    "pfiwa": pfiwa,
    "pfiwg": pfiwg,
    "pfiowa": pfiowa,
    "pfiowg": pfiowg,
}


# ---------------------------------------------------------------------------
# Per-family closed forms (cross-check oracle; no generator calls)
# ---------------------------------------------------------------------------


def _prodw(values, w, transform):
    return math.prod(transform(v) ** wj for v, wj in zip(values, w))


def _powsum(values, w, g, transform):
    total = 0.0
    for v, wj in zip(values, w):
        t = transform(v)
        if t == INF:
            if g > 0.0:
                return INF
            continue  # inf**negative contributes 0
        if t == 0.0 and g < 0.0:
            return INF
        try:
            term = t**g
        except OverflowError:
            return INF
        if term == INF:
            return INF
        total += wj * term
    return total


def _root(v: float, g: float) -> float:
    if v == INF:
        return INF if g > 0.0 else 0.0
    try:
        return v ** (1.0 / g)
    except OverflowError:
        return INF


def _closed_product(kind, w, mus, etas, nus):
    if kind == "pfiwa":
        mu = 1.0 - _prodw(mus, w, lambda m: 1.0 - m)
        nu = _prodw(nus, w, lambda n: n)
        en = math.prod((e + n) ** wj for e, n, wj in zip(etas, nus, w))
        return mu, en - nu, nu
    mu = _prodw(mus, w, lambda m: m)
    em = math.prod((e + m) ** wj for e, m, wj in zip(etas, mus, w))
    nu = 1.0 - _prodw(nus, w, lambda n: 1.0 - n)
    return mu, em - mu, nu


def _closed_schweizer_sklar(kind, w, mus, etas, nus, g):
    def mean(vals):
        return _root(_powsum(vals, w, g, lambda v: v), g)

    if kind == "pfiwa":
        mu = 1.0 - mean([1.0 - m for m in mus])
        nu = mean(nus)
        en = mean([e + n for e, n in zip(etas, nus)])
        return mu, en - nu, nu
    mu = mean(mus)
    em = mean([e + m for e, m in zip(etas, mus)])
    nu = 1.0 - mean([1.0 - n for n in nus])
    return mu, em - mu, nu


def _closed_hamacher(kind, w, mus, etas, nus, g):
    def big(vals):
        # prod over ((g + (1-g) v) / v)^w
        return math.prod(
            _safe_div(g + (1.0 - g) * v, v) ** wj for v, wj in zip(vals, w)
        )

    def conorm_side(vals):
        p = big([1.0 - v for v in vals])
        if p == INF:
            return 1.0
        return (p - 1.0) / (p - 1.0 + g)

    def norm_side(vals):
        p = big(vals)
        return 0.0 if p == INF else g / (p - 1.0 + g)

    if kind == "pfiwa":
        mu = conorm_side(mus)
        nu = norm_side(nus)
        en = norm_side([e + n for e, n in zip(etas, nus)])
        return mu, en - nu, nu
    mu = norm_side(mus)
    em = norm_side([e + m for e, m in zip(etas, mus)])
    nu = conorm_side(nus)
    return mu, em - mu, nu


def _closed_frank(kind, w, mus, etas, nus, g):
    ln_g = math.log(g)

    def norm_side(vals):
        # log_g(prod (g^v - 1)^w + 1), with the (g - 1) normalizer kept
        # inside the power so bases stay positive for g < 1 as well
        p = math.prod(
            ((g**v - 1.0) / (g - 1.0)) ** wj for v, wj in zip(vals, w)
        )
        return math.log((g - 1.0) * p + 1.0) / ln_g

    def conorm_side(vals):
        return 1.0 - norm_side([1.0 - v for v in vals])

    if kind == "pfiwa":
        mu = conorm_side(mus)
        nu = norm_side(nus)
        en = norm_side([e + n for e, n in zip(etas, nus)])
        return mu, en - nu, nu
    mu = norm_side(mus)
    em = norm_side([e + m for e, m in zip(etas, mus)])
    nu = conorm_side(nus)
    return mu, em - mu, nu


def _closed_dombi(kind, w, mus, etas, nus, g):
    def norm_side(vals):
        r = _root(_powsum(vals, w, g, lambda v: _safe_div(1.0 - v, v)), g)
        return 0.0 if r == INF else 1.0 / (r + 1.0)

    def conorm_side(vals):
        r = _root(_powsum(vals, w, g, lambda v: _safe_div(v, 1.0 - v)), g)
        return 1.0 if r == INF else r / (1.0 + r)

    if kind == "pfiwa":
        mu = conorm_side(mus)
        nu = norm_side(nus)
        en = norm_side([e + n for e, n in zip(etas, nus)])
        return mu, en - nu, nu
    mu = norm_side(mus)
    em = norm_side([e + m for e, m in zip(etas, mus)])
    nu = conorm_side(nus)
    return mu, em - mu, nu


def _closed_aczel_alsina(kind, w, mus, etas, nus, g):
    def neglog(v):
        return INF if v == 0.0 else -math.log(v)

    def norm_side(vals):
        r = _root(_powsum(vals, w, g, neglog), g)
        return 0.0 if r == INF else math.exp(-r)

    def conorm_side(vals):
        return 1.0 - norm_side([1.0 - v for v in vals])

    if kind == "pfiwa":
        mu = conorm_side(mus)
        nu = norm_side(nus)
        en = norm_side([e + n for e, n in zip(etas, nus)])
        return mu, en - nu, nu
    mu = norm_side(mus)
    em = norm_side([e + m for e, m in zip(etas, mus)])
    nu = conorm_side(nus)
    return mu, em - mu, nu


_CLOSED = {
    "product": lambda kind, w, m, e, n, g: _closed_product(kind, w, m, e, n),
    "schweizer-sklar": _closed_schweizer_sklar,
    "hamacher": _closed_hamacher,
    "frank": _closed_frank,
    "dombi": _closed_dombi,
    "aczel-alsina": _closed_aczel_alsina,
}


def closed_form(
    f: TnormFamily, kind: str, w: Sequence[float], xs: Sequence[Pfn]
) -> Pfn:
    """Evaluate the family-specific algebraic form of pfiwa or pfiwg.

    Supports the six named families only; the piecewise demonstration
    generator has no closed form.
    """
    if kind not in ("pfiwa", "pfiwg"):
        raise UnsupportedFamily(f"no closed form for operator {kind!r}")
    try:
        build = _CLOSED[f.name]
    except KeyError:
        raise UnsupportedFamily(f"no closed form for family {f.name!r}") from None
    w = check_weights(w, len(xs))
    mus = [x.mu for x in xs]
    etas = [x.eta for x in xs]
    nus = [x.nu for x in xs]
    mu, eta, nu = build(kind, w, mus, etas, nus, f.gamma)
    return _assemble(mu, eta, nu)
