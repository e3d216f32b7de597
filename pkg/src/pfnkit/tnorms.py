"""Strict t-norms represented by additive generators.

Every family here is a strict t-norm T with a continuous, strictly
decreasing additive generator tau: [0,1] -> [0, +inf], tau(1) = 0,
tau(0) = +inf, so that

    T(x, y)   = tau_inv(tau(x) + tau(y))
    S(x, y)   = zeta_inv(zeta(x) + zeta(y))   with zeta(u) = tau(1 - u)

+inf is carried as a first-class generator value; nothing is clamped on
the generator side, which keeps behaviour at mu = 0 or 1 exact.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

from ._extmath import INF, log_expm1_abs as _log_expm1_abs, pow_ext as _pow
from .errors import InputOutOfRange, NegativeGeneratorValue, ParamOutOfDomain

# Families exposed through the CLI / JSON interface.
FAMILY_NAMES = (
    "product",
    "schweizer-sklar",
    "hamacher",
    "frank",
    "dombi",
    "aczel-alsina",
    "piecewise",
)

# Slack accepted on unit-interval inputs before raising.
_EPS_IN = 1e-9


def _tau_product(x: float) -> float:
    return INF if x == 0.0 else -math.log(x)


def _tau_inv_product(v: float) -> float:
    return 0.0 if v == INF else math.exp(-v)


def _make_schweizer_sklar(g: float):
    inv_g = 1.0 / g

    def tau(x: float) -> float:
        return INF if x == 0.0 else x**g - 1.0

    def tau_inv(v: float) -> float:
        return 0.0 if v == INF else _pow(1.0 + v, inv_g)

    return tau, tau_inv


def _make_hamacher(g: float):
    def tau(x: float) -> float:
        if x == 0.0:
            return INF
        return math.log((g + (1.0 - g) * x) / x)

    def tau_inv(v: float) -> float:
        if v == INF:
            return 0.0
        # g / (e^v - 1 + g) rewritten via e^-v so that large v cannot overflow
        t = math.exp(-v)
        return g * t / (1.0 - t + g * t)

    return tau, tau_inv


def _make_frank(g: float):
    ln_g = math.log(g)
    log_gm1 = _log_expm1_abs(ln_g)  # log|g - 1|

    def tau(x: float) -> float:
        if x == 0.0:
            return INF
        if x == 1.0:
            return 0.0
        return log_gm1 - _log_expm1_abs(x * ln_g)

    def tau_inv(v: float) -> float:
        if v == INF:
            return 0.0
        # log_g(1 + (g-1) e^-v), written to survive very large g
        t = log_gm1 - v  # log(|g-1| e^-v)
        if g > 1.0:
            if t > 36.0:
                return (t + math.log1p(math.exp(-t))) / ln_g
            return math.log1p(math.exp(t)) / ln_g
        return math.log1p(-math.exp(t)) / ln_g

    return tau, tau_inv


def _make_dombi(g: float):
    inv_g = 1.0 / g

    def tau(x: float) -> float:
        if x == 0.0:
            return INF
        return _pow((1.0 - x) / x, g)

    def tau_inv(v: float) -> float:
        if v == INF:
            return 0.0
        return 1.0 / (1.0 + _pow(v, inv_g))

    return tau, tau_inv


def _make_aczel_alsina(g: float):
    inv_g = 1.0 / g

    def tau(x: float) -> float:
        if x == 0.0:
            return INF
        return _pow(-math.log(x), g)

    def tau_inv(v: float) -> float:
        if v == INF:
            return 0.0
        t = _pow(v, inv_g)
        return 0.0 if t == INF else math.exp(-t)

    return tau, tau_inv


_LOG8 = math.log(8.0)
_THIRD = 1.0 / 3.0


def _tau_piecewise(x: float) -> float:
    # Four-branch generator: logarithmic below 1/8, then piecewise linear.
    # Branch boundaries agree analytically; each boundary point evaluates
    # on the branch that starts (is left-closed) there.
    if x == 0.0:
        return INF
    if x < 0.125:
        return -math.log(x) / _LOG8 - _THIRD
    if x < 0.25:
        return 1.0 - 8.0 * x / 3.0
    if x < 0.5:
        return 5.0 / 12.0 - x / 3.0
    return 0.5 * (1.0 - x)


def _tau_inv_piecewise(v: float) -> float:
    if v == INF:
        return 0.0
    if v < 0.25:
        return 1.0 - 2.0 * v
    if v < _THIRD:
        return (5.0 / 12.0 - v) * 3.0
    if v < 2.0 / 3.0:
        return 3.0 * (1.0 - v) / 8.0
    return _pow(8.0, -(v + _THIRD))


def _check_gamma(name: str, gamma: float | None) -> float:
    if gamma is None:
        raise ParamOutOfDomain(f"family {name!r} requires a gamma parameter")
    gamma = float(gamma)
    if not math.isfinite(gamma):
        raise ParamOutOfDomain(f"gamma = {gamma!r} must be finite")
    return gamma


def _build(name: str, gamma: float | None):
    if name == "product":
        return _tau_product, _tau_inv_product
    if name == "piecewise":
        return _tau_piecewise, _tau_inv_piecewise
    g = _check_gamma(name, gamma)
    if name == "schweizer-sklar":
        if g >= 0.0:
            raise ParamOutOfDomain(f"schweizer-sklar needs gamma < 0, got {g!r}")
        return _make_schweizer_sklar(g)
    if name == "hamacher":
        if g <= 0.0:
            raise ParamOutOfDomain(f"hamacher needs gamma > 0, got {g!r}")
        return _make_hamacher(g)
    if name == "frank":
        if g <= 0.0:
            raise ParamOutOfDomain(f"frank needs gamma > 0, got {g!r}")
        if g == 1.0:
            raise ParamOutOfDomain(
                "frank gamma = 1 is excluded; use the product family, which "
                "is its limit"
            )
        return _make_frank(g)
    if name == "dombi":
        if g <= 0.0:
            raise ParamOutOfDomain(f"dombi needs gamma > 0, got {g!r}")
        return _make_dombi(g)
    if name == "aczel-alsina":
        if g <= 0.0:
            raise ParamOutOfDomain(f"aczel-alsina needs gamma > 0, got {g!r}")
        return _make_aczel_alsina(g)
    raise ParamOutOfDomain(
        f"unknown t-norm family {name!r}; expected one of {', '.join(FAMILY_NAMES)}"
    )


class TnormFamily:
    """A parameterized strict t-norm identified by its additive generator.

    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("name", "gamma", "_tau", "_tau_inv")

    name: str
    gamma: float | None
    _tau: Callable[[float], float]
    _tau_inv: Callable[[float], float]

    def __init__(self, name: str, gamma: float | None = None):
        if name in ("product", "piecewise"):
            if gamma is not None:
                raise ParamOutOfDomain(f"family {name!r} takes no parameter")
        tau, tau_inv = _build(name, gamma)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "gamma", None if gamma is None else float(gamma))
        object.__setattr__(self, "_tau", tau)
        object.__setattr__(self, "_tau_inv", tau_inv)

    def __setattr__(self, *_):
        raise AttributeError("TnormFamily is immutable")

    def __repr__(self) -> str:
        if self.gamma is None:
            return f"TnormFamily({self.name!r})"
        return f"TnormFamily({self.name!r}, gamma={self.gamma!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TnormFamily)
            and self.name == other.name
            and self.gamma == other.gamma
        )

    def __hash__(self) -> int:
        return hash((self.name, self.gamma))

    def to_json(self) -> dict:
        """Wire form: {"family": name} plus "gamma" where parameterized."""
        if self.gamma is None:
            return {"family": self.name}
        return {"family": self.name, "gamma": self.gamma}

    @classmethod
    def from_json(cls, data: dict) -> "TnormFamily":
        try:
            name = data["family"]
        except (KeyError, TypeError):
            raise ParamOutOfDomain(f"family descriptor needs a 'family' key: {data!r}")
        return cls(name, data.get("gamma"))

    # -- generator ---------------------------------------------------------

    @staticmethod
    def _unit(x: float, what: str) -> float:
        if 0.0 <= x <= 1.0:
            return x
        if -_EPS_IN <= x <= 1.0 + _EPS_IN:
            return min(max(x, 0.0), 1.0)
        raise InputOutOfRange(f"{what} = {x!r} is outside [0, 1]")

    def tau(self, x: float) -> float:
        """Generator value; strictly decreasing, tau(1) = 0, tau(0) = +inf."""
        return self._tau(self._unit(x, "generator argument"))

    def tau_inv(self, v: float) -> float:
        """The unique x with tau(x) = v; tau_inv(+inf) = 0."""
        if v < 0.0:
            if v >= -1e-12:
                v = 0.0
            else:
                raise NegativeGeneratorValue(f"generator value {v!r} is negative")
        x = self._tau_inv(v)
        return min(max(x, 0.0), 1.0)

    def zeta(self, u: float) -> float:
        """Dual generator zeta(u) = tau(1 - u); builds the t-conorm."""
        return self._tau(1.0 - self._unit(u, "dual generator argument"))

    def zeta_inv(self, v: float) -> float:
        return 1.0 - self.tau_inv(v)

    # -- t-norm / t-conorm -------------------------------------------------

    def tnorm(self, x: float, y: float) -> float:
        return self.tau_inv(self.tau(x) + self.tau(y))

    def tconorm(self, x: float, y: float) -> float:
        return self.zeta_inv(self.zeta(x) + self.zeta(y))

    def tnorm_n(self, xs: Iterable[float], weights: Sequence[float] | None = None) -> float:
        """n-ary T, optionally with positive exponents on each argument.

        Computes tau_inv(sum w_j tau(x_j)) in one inversion.  An empty
        argument list follows the empty-product convention and yields 1.
        """
        return self.tau_inv(self._gen_sum(self.tau, xs, weights))

    def tconorm_n(self, xs: Iterable[float], weights: Sequence[float] | None = None) -> float:
        return self.zeta_inv(self._gen_sum(self.zeta, xs, weights))

    @staticmethod
    def _gen_sum(gen, xs, weights) -> float:
        xs = list(xs)
        if weights is None:
            terms = [gen(x) for x in xs]
        else:
            if len(weights) != len(xs):
                raise InputOutOfRange(
                    f"{len(weights)} weights for {len(xs)} arguments"
                )
            terms = [w * gen(x) for w, x in zip(weights, xs)]
        if INF in terms:
            return INF
        return math.fsum(terms)


def product() -> TnormFamily:
    return TnormFamily("product")


def schweizer_sklar(gamma: float) -> TnormFamily:
    return TnormFamily("schweizer-sklar", gamma)


def hamacher(gamma: float) -> TnormFamily:
    return TnormFamily("hamacher", gamma)


def frank(gamma: float) -> TnormFamily:
    return TnormFamily("frank", gamma)


def dombi(gamma: float) -> TnormFamily:
    return TnormFamily("dombi", gamma)


def aczel_alsina(gamma: float) -> TnormFamily:
    return TnormFamily("aczel-alsina", gamma)


def piecewise() -> TnormFamily:
    """The four-branch log/linear generator used in closure counterexamples."""
    return TnormFamily("piecewise")
