"""Prior-work picture fuzzy operators that are not closed, plus an auditor.

Every operator here evaluates its published formula literally and returns
a raw :class:`~pfnkit.core.LegacyTriple` with no sum constraint, so invalid
outputs are representable data rather than exceptions.  ``closure_check``
wraps any registered operator (including this library's own interactional
laws, for contrast) into a :class:`ClosureReport` verdict.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from ._extmath import INF, div_ext, pow_ext
from .aggregators import check_weights
from .core import LegacyTriple, Pfn
from .errors import (
    DegenerateComponent,
    LengthMismatch,
    NonIntegerLambda,
    NonPositiveScalar,
    ParamOutOfDomain,
    UnknownOperator,
)
from .interactional import pfn_add, pfn_mul, pfn_pow, scalar_mul
from .tnorms import TnormFamily, piecewise


def _triple(a: float, b: float, c: float) -> LegacyTriple:
    if math.isnan(a) or math.isnan(b) or math.isnan(c):
        raise DegenerateComponent(f"indeterminate component in ({a!r}, {b!r}, {c!r})")
    return LegacyTriple(a, b, c)


def _positive(lam: float) -> float:
    lam = float(lam)
    if not lam > 0.0:
        raise NonPositiveScalar(f"scalar {lam!r} must be positive")
    return lam


# ---------------------------------------------------------------------------
# Generator-per-component laws (every component gets tau or zeta directly)
# ---------------------------------------------------------------------------


def garg_add(f: TnormFamily, x: Pfn, y: Pfn) -> LegacyTriple:
    """t-conorm on mu, t-norm on eta and nu, with no interaction."""
    return _triple(f.tconorm(x.mu, y.mu), f.tnorm(x.eta, y.eta), f.tnorm(x.nu, y.nu))


def garg_mul(f: TnormFamily, x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(f.tnorm(x.mu, y.mu), f.tconorm(x.eta, y.eta), f.tconorm(x.nu, y.nu))


def garg_scalar(f: TnormFamily, lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(
        f.zeta_inv(lam * f.zeta(x.mu)),
        f.tau_inv(lam * f.tau(x.eta)),
        f.tau_inv(lam * f.tau(x.nu)),
    )


def garg_power(f: TnormFamily, lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(
        f.tau_inv(lam * f.tau(x.mu)),
        f.zeta_inv(lam * f.zeta(x.eta)),
        f.zeta_inv(lam * f.zeta(x.nu)),
    )


def ashraf_mul(f: TnormFamily, x: Pfn, y: Pfn) -> LegacyTriple:
    """Variant placing the t-norm on mu and eta, t-conorm on nu."""
    return _triple(f.tnorm(x.mu, y.mu), f.tnorm(x.eta, y.eta), f.tconorm(x.nu, y.nu))


def ashraf_power(f: TnormFamily, lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(
        f.tau_inv(lam * f.tau(x.mu)),
        f.tau_inv(lam * f.tau(x.eta)),
        f.zeta_inv(lam * f.zeta(x.nu)),
    )


# ---------------------------------------------------------------------------
# Dombi-rational laws (boundary components evaluate to their t-norm limits)
# ---------------------------------------------------------------------------


def _dombi_norm(g: float, terms: Sequence[float]) -> float:
    # 1 / (1 + (sum of (1-x)/x ratios ** g) ** (1/g))
    s = 0.0
    for t in terms:
        if t == INF:
            return 0.0
        s += t
    r = pow_ext(s, 1.0 / g)
    return 0.0 if r == INF else 1.0 / (1.0 + r)


def _dombi_conorm(g: float, terms: Sequence[float]) -> float:
    s = 0.0
    for t in terms:
        if t == INF:
            return 1.0
        s += t
    r = pow_ext(s, 1.0 / g)
    return 1.0 if r == INF else 1.0 - 1.0 / (1.0 + r)


def _check_dombi_gamma(g: float) -> float:
    g = float(g)
    if g < 1.0:
        raise ParamOutOfDomain(f"dombi laws require gamma >= 1, got {g!r}")
    return g


def _rn(x: float, g: float) -> float:
    """((1 - x) / x) ** g, the t-norm side ratio."""
    return pow_ext(div_ext(1.0 - x, x), g)


def _rc(x: float, g: float) -> float:
    """(x / (1 - x)) ** g, the t-conorm side ratio."""
    return pow_ext(div_ext(x, 1.0 - x), g)


def dombi_add(g: float, x: Pfn, y: Pfn) -> LegacyTriple:
    g = _check_dombi_gamma(g)
    return _triple(
        _dombi_conorm(g, [_rc(x.mu, g), _rc(y.mu, g)]),
        _dombi_norm(g, [_rn(x.eta, g), _rn(y.eta, g)]),
        _dombi_norm(g, [_rn(x.nu, g), _rn(y.nu, g)]),
    )


def dombi_mul(g: float, x: Pfn, y: Pfn) -> LegacyTriple:
    g = _check_dombi_gamma(g)
    return _triple(
        _dombi_norm(g, [_rn(x.mu, g), _rn(y.mu, g)]),
        _dombi_conorm(g, [_rc(x.eta, g), _rc(y.eta, g)]),
        _dombi_conorm(g, [_rc(x.nu, g), _rc(y.nu, g)]),
    )


def dombi_scalar(g: float, lam: float, x: Pfn) -> LegacyTriple:
    g = _check_dombi_gamma(g)
    lam = _positive(lam)
    return _triple(
        _dombi_conorm(g, [lam * _rc(x.mu, g)]),
        _dombi_norm(g, [lam * _rn(x.eta, g)]),
        _dombi_norm(g, [lam * _rn(x.nu, g)]),
    )


def dombi_power(g: float, lam: float, x: Pfn) -> LegacyTriple:
    g = _check_dombi_gamma(g)
    lam = _positive(lam)
    return _triple(
        _dombi_norm(g, [lam * _rn(x.mu, g)]),
        _dombi_conorm(g, [lam * _rc(x.eta, g)]),
        _dombi_conorm(g, [lam * _rc(x.nu, g)]),
    )


# ---------------------------------------------------------------------------
# Einstein laws
# ---------------------------------------------------------------------------


def einstein_add(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(
        (x.mu + y.mu) / (1.0 + x.mu * y.mu),
        x.eta * y.eta / (1.0 + (1.0 - x.eta) * (1.0 - y.eta)),
        x.nu * y.nu / (1.0 + (1.0 - x.nu) * (1.0 - y.nu)),
    )


def einstein_mul(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(
        x.mu * y.mu / (1.0 + (1.0 - x.mu) * (1.0 - y.mu)),
        (x.eta + y.eta) / (1.0 + x.eta * y.eta),
        (x.nu + y.nu) / (1.0 + x.nu * y.nu),
    )


def _einstein_scale(v: float, lam: float) -> float:
    up = (1.0 + v) ** lam
    dn = (1.0 - v) ** lam
    return (up - dn) / (up + dn)


def _einstein_root(v: float, lam: float) -> float:
    return 2.0 * v**lam / ((2.0 - v) ** lam + v**lam)


def einstein_scalar(lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(
        _einstein_scale(x.mu, lam),
        _einstein_root(x.eta, lam),
        _einstein_root(x.nu, lam),
    )


def einstein_power(lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(
        _einstein_root(x.mu, lam),
        _einstein_scale(x.eta, lam),
        _einstein_scale(x.nu, lam),
    )


# ---------------------------------------------------------------------------
# Plain product/probabilistic-sum laws and the weighted operators over them
# ---------------------------------------------------------------------------


def wei_meet(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(min(x.mu, y.mu), max(x.eta, y.eta), max(x.nu, y.nu))


def wei_join(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(max(x.mu, y.mu), min(x.eta, y.eta), min(x.nu, y.nu))


def wei_add(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(x.mu + y.mu - x.mu * y.mu, x.eta * y.eta, x.nu * y.nu)


def wei_mul(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(
        x.mu * y.mu,
        x.eta + y.eta - x.eta * y.eta,
        x.nu + y.nu - x.nu * y.nu,
    )


def wei_scalar(lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(1.0 - (1.0 - x.mu) ** lam, x.eta**lam, x.nu**lam)


def wei_power(lam: float, x: Pfn) -> LegacyTriple:
    lam = _positive(lam)
    return _triple(x.mu**lam, 1.0 - (1.0 - x.eta) ** lam, 1.0 - (1.0 - x.nu) ** lam)


# triple-level folds used by the averaging and Muirhead operators
def _t_add(p: LegacyTriple, q: LegacyTriple) -> LegacyTriple:
    return LegacyTriple(p.a + q.a - p.a * q.a, p.b * q.b, p.c * q.c)


def _t_mul(p: LegacyTriple, q: LegacyTriple) -> LegacyTriple:
    return LegacyTriple(
        p.a * q.a, p.b + q.b - p.b * q.b, p.c + q.c - p.c * q.c
    )


def _t_scalar(lam: float, p: LegacyTriple) -> LegacyTriple:
    return LegacyTriple(1.0 - (1.0 - p.a) ** lam, p.b**lam, p.c**lam)


def _t_power(lam: float, p: LegacyTriple) -> LegacyTriple:
    return LegacyTriple(p.a**lam, 1.0 - (1.0 - p.b) ** lam, 1.0 - (1.0 - p.c) ** lam)


def wei_pfwa(w: Sequence[float], xs: Sequence[Pfn]) -> LegacyTriple:
    """Weighted average as the literal fold of scalar multiples."""
    w = check_weights(w, len(xs))
    acc = _t_scalar(w[0], LegacyTriple(xs[0].mu, xs[0].eta, xs[0].nu))
    for wj, x in zip(w[1:], xs[1:]):
        acc = _t_add(acc, _t_scalar(wj, LegacyTriple(x.mu, x.eta, x.nu)))
    return _triple(acc.a, acc.b, acc.c)


def wei_pfwg(w: Sequence[float], xs: Sequence[Pfn]) -> LegacyTriple:
    """Weighted geometric in its published product form."""
    w = check_weights(w, len(xs))
    a = math.prod(x.mu**wj for x, wj in zip(xs, w))
    b = 1.0 - math.prod((1.0 - x.eta) ** wj for x, wj in zip(xs, w))
    c = 1.0 - math.prod((1.0 - x.nu) ** wj for x, wj in zip(xs, w))
    return _triple(a, b, c)


# ---------------------------------------------------------------------------
# Hamacher-rational laws
# ---------------------------------------------------------------------------


def _check_hamacher_gamma(g: float) -> float:
    g = float(g)
    if not g > 0.0:
        raise ParamOutOfDomain(f"hamacher laws require gamma > 0, got {g!r}")
    return g


def _ham_conorm(g: float, x: float, y: float) -> float:
    return (x + y - x * y - (1.0 - g) * x * y) / (1.0 - (1.0 - g) * x * y)


def _ham_norm(g: float, x: float, y: float) -> float:
    den = g + (1.0 - g) * (x + y - x * y)
    return x * y / den


def hamacher_add(g: float, x: Pfn, y: Pfn) -> LegacyTriple:
    g = _check_hamacher_gamma(g)
    return _triple(
        _ham_conorm(g, x.mu, y.mu),
        _ham_norm(g, x.eta, y.eta),
        _ham_norm(g, x.nu, y.nu),
    )


def hamacher_mul(g: float, x: Pfn, y: Pfn) -> LegacyTriple:
    g = _check_hamacher_gamma(g)
    return _triple(
        _ham_norm(g, x.mu, y.mu),
        _ham_conorm(g, x.eta, y.eta),
        _ham_conorm(g, x.nu, y.nu),
    )


def _ham_scale(g: float, lam: float, v: float) -> float:
    up = (1.0 + (g - 1.0) * v) ** lam
    dn = (1.0 - v) ** lam
    return (up - dn) / (up + (g - 1.0) * dn)


def _ham_root(g: float, lam: float, v: float) -> float:
    den = (1.0 + (g - 1.0) * (1.0 - v)) ** lam + (g - 1.0) * v**lam
    return g * v**lam / den


def hamacher_scalar(g: float, lam: float, x: Pfn) -> LegacyTriple:
    g = _check_hamacher_gamma(g)
    lam = _positive(lam)
    return _triple(
        _ham_scale(g, lam, x.mu),
        _ham_root(g, lam, x.eta),
        _ham_root(g, lam, x.nu),
    )


def hamacher_power(g: float, lam: float, x: Pfn) -> LegacyTriple:
    g = _check_hamacher_gamma(g)
    lam = _positive(lam)
    return _triple(
        _ham_root(g, lam, x.mu),
        _ham_scale(g, lam, x.eta),
        _ham_scale(g, lam, x.nu),
    )


# ---------------------------------------------------------------------------
# Polynomial interaction laws with natural-number scalars
# ---------------------------------------------------------------------------


def _check_nat(lam) -> int:
    if isinstance(lam, bool) or float(lam) != int(lam) or int(lam) < 1:
        raise NonIntegerLambda(f"exponent {lam!r} must be a natural number")
    return int(lam)


def lin_iol_add(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(
        x.mu + y.mu - x.mu * y.mu,
        x.eta + y.eta - x.eta * y.eta - x.mu * y.eta - x.eta * y.mu,
        x.nu + y.nu - x.nu * y.nu - x.mu * y.nu - x.nu * y.mu,
    )


def lin_iol_mul(x: Pfn, y: Pfn) -> LegacyTriple:
    return _triple(
        x.mu + y.mu - x.mu * y.mu - x.mu * y.nu - x.nu * y.mu,
        x.eta + y.eta - x.eta * y.eta,
        x.nu + y.nu - x.nu * y.nu,
    )


def lin_iol_scalar(lam, x: Pfn) -> LegacyTriple:
    lam = _check_nat(lam)
    base = (1.0 - x.mu) ** lam
    return _triple(
        1.0 - base,
        base - (1.0 - x.mu - x.eta) ** lam,
        base - (1.0 - x.mu - x.nu) ** lam,
    )


def lin_iol_power(lam, x: Pfn) -> LegacyTriple:
    lam = _check_nat(lam)
    return _triple(
        (1.0 - x.nu) ** lam - (1.0 - x.mu - x.nu) ** lam,
        1.0 - (1.0 - x.eta) ** lam,
        1.0 - (1.0 - x.nu) ** lam,
    )


# ---------------------------------------------------------------------------
# Mean-type operators (Muirhead and Bonferroni families)
# ---------------------------------------------------------------------------


def muirhead_mean(params: Sequence[float], xs: Sequence[Pfn]) -> LegacyTriple:
    """Muirhead mean in its published product form over all permutations."""
    n = len(xs)
    if len(params) != n:
        raise LengthMismatch(f"{len(params)} exponents for {n} operands")
    total = math.fsum(params)
    if total == 0.0:
        raise ParamOutOfDomain("Muirhead exponents must not sum to 0")

    def component(values):
        prod = 1.0
        for perm in itertools.permutations(range(n)):
            inner = math.prod(
                pow_ext(values[perm[j]], params[j]) for j in range(n)
            )
            prod *= pow_ext(1.0 - inner, 1.0 / math.factorial(n))
        return pow_ext(1.0 - prod, 1.0 / total)

    a = component([x.mu for x in xs])
    b = 1.0 - component([1.0 - x.eta for x in xs])
    c = 1.0 - component([1.0 - x.nu for x in xs])
    return _triple(a, b, c)


def weighted_muirhead_mean(
    params: Sequence[float], w: Sequence[float], xs: Sequence[Pfn]
) -> LegacyTriple:
    """Weighted Muirhead mean, evaluated by its fold definition."""
    n = len(xs)
    if len(params) != n:
        raise LengthMismatch(f"{len(params)} exponents for {n} operands")
    w = check_weights(w, n)
    total = math.fsum(params)
    if total == 0.0:
        raise ParamOutOfDomain("Muirhead exponents must not sum to 0")
    triples = [LegacyTriple(x.mu, x.eta, x.nu) for x in xs]
    acc = None
    for perm in itertools.permutations(range(n)):
        term = None
        for j, idx in enumerate(perm):
            scaled = _t_scalar(n * w[idx], triples[idx])
            powered = _t_power(params[j], scaled)
            term = powered if term is None else _t_mul(term, powered)
        acc = term if acc is None else _t_add(acc, term)
    acc = _t_scalar(1.0 / math.factorial(n), acc)
    acc = _t_power(1.0 / total, acc)
    return _triple(acc.a, acc.b, acc.c)


def _bonferroni_component(values, p, q, exponent_for_pair):
    prod = 1.0
    n = len(values)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            inner = pow_ext(values[i], p) * pow_ext(values[j], q)
            prod *= pow_ext(1.0 - inner, exponent_for_pair(i, j))
    return pow_ext(1.0 - prod, 1.0 / (p + q))


def bonferroni_mean(p: float, q: float, xs: Sequence[Pfn]) -> LegacyTriple:
    if p < 0.0 or q < 0.0 or p + q <= 0.0:
        raise ParamOutOfDomain(f"need p, q >= 0 with p + q > 0, got {p!r}, {q!r}")
    n = len(xs)
    if n < 2:
        raise LengthMismatch("Bonferroni mean needs at least two operands")
    frac = 1.0 / (n * (n - 1))

    def comp(values):
        return _bonferroni_component(values, p, q, lambda i, j: frac)

    a = comp([x.mu for x in xs])
    b = 1.0 - comp([1.0 - x.eta for x in xs])
    c = 1.0 - comp([1.0 - x.nu for x in xs])
    return _triple(a, b, c)


def normalized_weighted_bonferroni_mean(
    p: float, q: float, w: Sequence[float], xs: Sequence[Pfn]
) -> LegacyTriple:
    if p <= 0.0 or q <= 0.0:
        raise ParamOutOfDomain(f"need p, q > 0, got {p!r}, {q!r}")
    n = len(xs)
    if n < 2:
        raise LengthMismatch("Bonferroni mean needs at least two operands")
    w = check_weights(w, n)

    def comp(values):
        return _bonferroni_component(
            values, p, q, lambda i, j: w[i] * w[j] / (1.0 - w[i])
        )

    a = comp([x.mu for x in xs])
    b = 1.0 - comp([1.0 - x.eta for x in xs])
    c = 1.0 - comp([1.0 - x.nu for x in xs])
    return _triple(a, b, c)


# ---------------------------------------------------------------------------
# Closure auditing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    """One operator evaluation together with its membership verdict."""

    operator_id: str
    inputs: dict
    output: LegacyTriple
    component_sum: float
    is_pfn: bool

    @classmethod
    def build(cls, operator_id: str, inputs: dict, output: LegacyTriple) -> "ClosureReport":
        return cls(operator_id, inputs, output, output.component_sum, output.is_pfn())


@dataclass(frozen=True)
class _Operator:
    op_id: str
    run: Callable[..., LegacyTriple]
    paper_examples: tuple[dict, ...]
    sample: Callable[[random.Random], dict]


def _pfn_args(inputs: dict) -> dict:
    out = dict(inputs)
    if "operands" in out:
        out["operands"] = [Pfn.from_json(v) for v in out["operands"]]
    return out


def _log_uniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def _sample_operands(rng: random.Random, count: int) -> list[list[float]]:
    from .sampling import random_pfn

    return [random_pfn(rng).to_json() for _ in range(count)]


def _sample_weights(rng: random.Random, count: int) -> list[float]:
    raw = [rng.uniform(0.1, 1.0) for _ in range(count)]
    total = math.fsum(raw)
    return [r / total for r in raw]


_REGISTRY: dict[str, _Operator] = {}


def _register(op_id, run, examples, sample):
    _REGISTRY[op_id] = _Operator(op_id, run, tuple(examples), sample)


def registered_operators() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def closure_check(operator_id: str, **inputs) -> ClosureReport:
    """Run one registered operator and report output, sum, and verdict."""
    try:
        op = _REGISTRY[operator_id]
    except KeyError:
        raise UnknownOperator(
            f"unknown operator {operator_id!r}; known: {', '.join(sorted(_REGISTRY))}"
        ) from None
    output = op.run(**_pfn_args(inputs))
    return ClosureReport.build(operator_id, inputs, output)


def paper_example_reports(operator_id: str) -> list[ClosureReport]:
    """Evaluate the bundled counterexample fixtures for one operator."""
    try:
        op = _REGISTRY[operator_id]
    except KeyError:
        raise UnknownOperator(f"unknown operator {operator_id!r}") from None
    return [closure_check(operator_id, **ex) for ex in op.paper_examples]


def fuzz_reports(operator_id: str, samples: int, seed: int) -> list[ClosureReport]:
    """Evaluate one operator on ``samples`` seeded random inputs."""
    try:
        op = _REGISTRY[operator_id]
    except KeyError:
        raise UnknownOperator(f"unknown operator {operator_id!r}") from None
    rng = random.Random(seed)
    return [closure_check(operator_id, **op.sample(rng)) for _ in range(samples)]


# -- registry wiring ---------------------------------------------------------

_PIECEWISE = piecewise()

_HALF = [0.5, 0.25, 0.25]
_BETA = [0.25, 0.5, 0.25]
_ASHRAF = [0.25, 0.25, 0.5]
_OPPOSED = [[0.25, 0.75, 0.0], [0.25, 0.0, 0.75]]
_NEUTRAL_PAIR = [[0.0, 0.9, 0.1], [0.0, 0.1, 0.9]]
_HALF_HALF = [0.0, 0.5, 0.5]


def _family_of(name, gamma) -> TnormFamily:
    if name == "piecewise" and gamma is None:
        return _PIECEWISE
    return TnormFamily(name, gamma)


def _run_garg(variant):
    def run(operands, lam=None, family="piecewise", gamma=None):
        f = _family_of(family, gamma)
        if variant == "add":
            return garg_add(f, *operands)
        if variant == "mul":
            return garg_mul(f, *operands)
        if variant == "scalar":
            return garg_scalar(f, lam, operands[0])
        return garg_power(f, lam, operands[0])

    return run


def _run_ashraf(variant):
    def run(operands, lam=None, family="piecewise", gamma=None):
        f = _family_of(family, gamma)
        if variant == "mul":
            return ashraf_mul(f, *operands)
        return ashraf_power(f, lam, operands[0])

    return run


def _binary_sampler(**extra):
    def sample(rng):
        return {"operands": _sample_operands(rng, 2), **extra}

    return sample


def _scalar_sampler(**extra):
    def sample(rng):
        return {
            "operands": _sample_operands(rng, 1),
            "lam": _log_uniform(rng, 0.1, 10.0),
            **extra,
        }

    return sample


_register(
    "garg-add",
    _run_garg("add"),
    [{"operands": [_HALF, _HALF], "family": "piecewise"}],
    _binary_sampler(family="piecewise"),
)
_register(
    "garg-mul",
    _run_garg("mul"),
    [{"operands": [_HALF, _HALF], "family": "piecewise"}],
    _binary_sampler(family="piecewise"),
)
_register(
    "garg-scalar",
    _run_garg("scalar"),
    [{"operands": [_HALF], "lam": 0.5, "family": "piecewise"}],
    _scalar_sampler(family="piecewise"),
)
_register(
    "garg-power",
    _run_garg("power"),
    [{"operands": [_BETA], "lam": 0.5, "family": "piecewise"}],
    _scalar_sampler(family="piecewise"),
)
_register(
    "ashraf-mul",
    _run_ashraf("mul"),
    [{"operands": [_ASHRAF, _ASHRAF], "family": "piecewise"}],
    _binary_sampler(family="piecewise"),
)
_register(
    "ashraf-power",
    _run_ashraf("power"),
    [{"operands": [_ASHRAF], "lam": 0.5, "family": "piecewise"}],
    _scalar_sampler(family="piecewise"),
)


def _run_dombi(variant):
    def run(operands, gamma=1.0, lam=None):
        if variant == "add":
            return dombi_add(gamma, *operands)
        if variant == "mul":
            return dombi_mul(gamma, *operands)
        if variant == "scalar":
            return dombi_scalar(gamma, lam, operands[0])
        return dombi_power(gamma, lam, operands[0])

    return run


def _dombi_binary_sampler(rng):
    return {"operands": _sample_operands(rng, 2), "gamma": rng.uniform(1.0, 5.0)}


def _dombi_scalar_sampler(rng):
    return {
        "operands": _sample_operands(rng, 1),
        "gamma": rng.uniform(1.0, 5.0),
        "lam": _log_uniform(rng, 0.1, 10.0),
    }


_register(
    "dombi-add",
    _run_dombi("add"),
    [{"operands": _OPPOSED, "gamma": 1.0}],
    _dombi_binary_sampler,
)
_register(
    "dombi-mul",
    _run_dombi("mul"),
    [{"operands": _OPPOSED, "gamma": 1.0}],
    _dombi_binary_sampler,
)
_register(
    "dombi-scalar",
    _run_dombi("scalar"),
    [{"operands": [[0.2, 0.4, 0.3]], "gamma": 1.0, "lam": 0.01}],
    _dombi_scalar_sampler,
)
_register(
    "dombi-power",
    _run_dombi("power"),
    [{"operands": [[0.2, 0.4, 0.3]], "gamma": 1.0, "lam": 100.0}],
    _dombi_scalar_sampler,
)


def _run_einstein(variant):
    def run(operands, lam=None):
        if variant == "add":
            return einstein_add(*operands)
        if variant == "mul":
            return einstein_mul(*operands)
        if variant == "scalar":
            return einstein_scalar(lam, operands[0])
        return einstein_power(lam, operands[0])

    return run


_register("einstein-add", _run_einstein("add"), [{"operands": _OPPOSED}], _binary_sampler())
_register("einstein-mul", _run_einstein("mul"), [{"operands": _OPPOSED}], _binary_sampler())
_register(
    "einstein-scalar",
    _run_einstein("scalar"),
    [{"operands": [_HALF_HALF], "lam": 0.5}],
    _scalar_sampler(),
)
_register(
    "einstein-power",
    _run_einstein("power"),
    [{"operands": [_HALF_HALF], "lam": 2.0}],
    _scalar_sampler(),
)


def _run_wei(variant):
    def run(operands, lam=None):
        if variant in ("meet", "join", "add", "mul"):
            fn = {
                "meet": wei_meet,
                "join": wei_join,
                "add": wei_add,
                "mul": wei_mul,
            }[variant]
            return fn(*operands)
        if variant == "scalar":
            return wei_scalar(lam, operands[0])
        return wei_power(lam, operands[0])

    return run


_register(
    "wei-meet",
    _run_wei("meet"),
    [{"operands": [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]}],
    _binary_sampler(),
)
_register("wei-join", _run_wei("join"), [], _binary_sampler())
_register("wei-add", _run_wei("add"), [], _binary_sampler())
_register("wei-mul", _run_wei("mul"), [{"operands": _OPPOSED}], _binary_sampler())
_register(
    "wei-scalar",
    _run_wei("scalar"),
    [{"operands": [_HALF_HALF], "lam": 0.5}],
    _scalar_sampler(),
)
_register(
    "wei-power",
    _run_wei("power"),
    [{"operands": [_HALF_HALF], "lam": 2.0}],
    _scalar_sampler(),
)


def _weighted_sampler(rng):
    n = rng.randint(2, 4)
    return {"operands": _sample_operands(rng, n), "weights": _sample_weights(rng, n)}


_register(
    "wei-pfwa",
    lambda operands, weights: wei_pfwa(weights, operands),
    [],
    _weighted_sampler,
)
_register(
    "wei-pfwg",
    lambda operands, weights: wei_pfwg(weights, operands),
    [{"operands": _NEUTRAL_PAIR, "weights": [0.5, 0.5]}],
    _weighted_sampler,
)


def _run_hamacher(variant):
    def run(operands, gamma=2.0, lam=None):
        if variant == "add":
            return hamacher_add(gamma, *operands)
        if variant == "mul":
            return hamacher_mul(gamma, *operands)
        if variant == "scalar":
            return hamacher_scalar(gamma, lam, operands[0])
        return hamacher_power(gamma, lam, operands[0])

    return run


def _hamacher_binary_sampler(rng):
    return {"operands": _sample_operands(rng, 2), "gamma": _log_uniform(rng, 0.25, 5.0)}


def _hamacher_scalar_sampler(rng):
    return {
        "operands": _sample_operands(rng, 1),
        "gamma": _log_uniform(rng, 0.25, 5.0),
        "lam": _log_uniform(rng, 0.1, 10.0),
    }


_register("hamacher-add", _run_hamacher("add"), [], _hamacher_binary_sampler)
_register(
    "hamacher-mul",
    _run_hamacher("mul"),
    [{"operands": _OPPOSED, "gamma": 2.0}],
    _hamacher_binary_sampler,
)
_register(
    "hamacher-scalar",
    _run_hamacher("scalar"),
    [{"operands": [[0.2, 0.4, 0.3]], "gamma": 2.0, "lam": 0.01}],
    _hamacher_scalar_sampler,
)
_register("hamacher-power", _run_hamacher("power"), [], _hamacher_scalar_sampler)


def _run_lin(variant):
    def run(operands, lam=None):
        if variant == "add":
            return lin_iol_add(*operands)
        if variant == "mul":
            return lin_iol_mul(*operands)
        if variant == "scalar":
            return lin_iol_scalar(lam, operands[0])
        return lin_iol_power(lam, operands[0])

    return run


def _lin_scalar_sampler(rng):
    return {"operands": _sample_operands(rng, 1), "lam": rng.randint(1, 6)}


_register(
    "lin-iol-add", _run_lin("add"), [{"operands": [_HALF_HALF, _HALF_HALF]}], _binary_sampler()
)
_register(
    "lin-iol-mul", _run_lin("mul"), [{"operands": [_HALF_HALF, _HALF_HALF]}], _binary_sampler()
)
_register(
    "lin-iol-scalar",
    _run_lin("scalar"),
    [{"operands": [_HALF_HALF], "lam": 2}],
    _lin_scalar_sampler,
)
_register(
    "lin-iol-power",
    _run_lin("power"),
    [{"operands": [_HALF_HALF], "lam": 2}],
    _lin_scalar_sampler,
)


def _mean_sampler(kind):
    def sample(rng):
        n = rng.randint(2, 4)
        inputs = {"operands": _sample_operands(rng, n)}
        if kind in ("pfmm", "pfwmm"):
            inputs["params"] = [rng.uniform(0.25, 2.0) for _ in range(n)]
        else:
            inputs["p"] = rng.uniform(0.25, 2.0)
            inputs["q"] = rng.uniform(0.25, 2.0)
        if kind in ("pfwmm", "pfnwbm"):
            inputs["weights"] = _sample_weights(rng, n)
        return inputs

    return sample


_register(
    "pfmm",
    lambda operands, params: muirhead_mean(params, operands),
    [{"operands": _NEUTRAL_PAIR, "params": [0.5, 0.5]}],
    _mean_sampler("pfmm"),
)
_register(
    "pfwmm",
    lambda operands, params, weights: weighted_muirhead_mean(params, weights, operands),
    [{"operands": _NEUTRAL_PAIR, "params": [0.5, 0.5], "weights": [0.5, 0.5]}],
    _mean_sampler("pfwmm"),
)
_register(
    "pfbm",
    lambda operands, p, q: bonferroni_mean(p, q, operands),
    [{"operands": _NEUTRAL_PAIR, "p": 0.5, "q": 0.5}],
    _mean_sampler("pfbm"),
)
_register(
    "pfnwbm",
    lambda operands, p, q, weights: normalized_weighted_bonferroni_mean(
        p, q, weights, operands
    ),
    [{"operands": _NEUTRAL_PAIR, "p": 0.5, "q": 0.5, "weights": [0.5, 0.5]}],
    _mean_sampler("pfnwbm"),
)


def _run_interactional(variant):
    def run(operands, lam=None, family="product", gamma=None):
        f = _family_of(family, gamma)
        if variant == "add":
            out = pfn_add(f, *operands)
        elif variant == "mul":
            out = pfn_mul(f, *operands)
        elif variant == "scalar":
            out = scalar_mul(f, lam, operands[0])
        else:
            out = pfn_pow(f, lam, operands[0])
        return LegacyTriple(out.mu, out.eta, out.nu)

    return run


_register(
    "interactional-add",
    _run_interactional("add"),
    [{"operands": [_HALF, _HALF], "family": "piecewise"}],
    _binary_sampler(family="product"),
)
_register(
    "interactional-mul",
    _run_interactional("mul"),
    [
        {"operands": [_HALF, _HALF], "family": "piecewise"},
        {"operands": _OPPOSED, "family": "product"},
    ],
    _binary_sampler(family="product"),
)
_register(
    "interactional-scalar",
    _run_interactional("scalar"),
    [{"operands": [_HALF_HALF], "lam": 0.5, "family": "product"}],
    _scalar_sampler(family="product"),
)
_register(
    "interactional-power",
    _run_interactional("power"),
    [{"operands": [_HALF_HALF], "lam": 2.0, "family": "product"}],
    _scalar_sampler(family="product"),
)
