"""Vectorized twin of the interactional laws for mass closure fuzzing.

Checking closure over millions of operand pairs is far too slow one PFN at
a time, so this module re-expresses the four laws as numpy array programs
over component columns.  It is a second implementation of the same
formulas: tests assert it agrees with the scalar path, and the scalar path
remains the library's source of truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EPS_SUM
from .errors import InternalConsistencyError, ParamOutOfDomain
from .tnorms import TnormFamily

_LOG8 = math.log(8.0)
_THIRD = 1.0 / 3.0


def _np_generators(f: TnormFamily):
    """(tau, tau_inv) acting elementwise on arrays with values in [0, 1]."""
    g = f.gamma
    if f.name == "product":

        def tau(x):
            with np.errstate(divide="ignore"):
                return -np.log(x)

        def tau_inv(v):
            return np.exp(-v)

    elif f.name == "schweizer-sklar":

        def tau(x):
            with np.errstate(divide="ignore"):
                return x**g - 1.0

        def tau_inv(v):
            return (1.0 + v) ** (1.0 / g)

    elif f.name == "hamacher":

        def tau(x):
            with np.errstate(divide="ignore"):
                return np.log((g + (1.0 - g) * x) / x)

        def tau_inv(v):
            t = np.exp(-v)
            return g * t / (1.0 - t + g * t)

    elif f.name == "frank":
        ln_g = math.log(g)
        log_gm1 = math.log(abs(math.expm1(ln_g)))

        def tau(x):
            t = x * ln_g
            with np.errstate(divide="ignore", invalid="ignore"):
                out = np.where(
                    t > 36.0,
                    t + np.log1p(-np.exp(-np.minimum(t, 700.0))),
                    np.log(np.abs(np.expm1(t))),
                )
            return log_gm1 - out

        def tau_inv(v):
            t = log_gm1 - v
            with np.errstate(divide="ignore", invalid="ignore"):
                if g > 1.0:
                    return np.logaddexp(0.0, t) / ln_g
                return np.log1p(-np.exp(t)) / ln_g

    elif f.name == "dombi":

        def tau(x):
            with np.errstate(divide="ignore"):
                return ((1.0 - x) / x) ** g

        def tau_inv(v):
            with np.errstate(invalid="ignore"):
                r = v ** (1.0 / g)
            return np.where(np.isinf(v), 0.0, 1.0 / (1.0 + r))

    elif f.name == "aczel-alsina":

        def tau(x):
            with np.errstate(divide="ignore"):
                return (-np.log(x)) ** g

        def tau_inv(v):
            return np.exp(-(v ** (1.0 / g)))

    elif f.name == "piecewise":

        def tau(x):
            with np.errstate(divide="ignore"):
                log_branch = -np.log(x) / _LOG8 - _THIRD
            return np.select(
                [x < 0.125, x < 0.25, x < 0.5],
                [log_branch, 1.0 - 8.0 * x / 3.0, 5.0 / 12.0 - x / 3.0],
                0.5 * (1.0 - x),
            )

        def tau_inv(v):
            with np.errstate(over="ignore"):
                log_branch = 8.0 ** (-(v + _THIRD))
            return np.select(
                [v < 0.25, v < _THIRD, v < 2.0 / 3.0],
                [1.0 - 2.0 * v, (5.0 / 12.0 - v) * 3.0, 3.0 * (1.0 - v) / 8.0],
                log_branch,
            )

    else:
        raise ParamOutOfDomain(f"no vectorized generators for family {f.name!r}")

    def tau_safe(x):
        return tau(np.clip(x, 0.0, 1.0))

    def tau_inv_safe(v):
        return np.clip(tau_inv(v), 0.0, 1.0)

    return tau_safe, tau_inv_safe


def _columns(pfns) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    arr = np.asarray([(p.mu, p.eta, p.nu) for p in pfns], dtype=float)
    return arr[:, 0], arr[:, 1], arr[:, 2]


@dataclass(frozen=True)
class BulkResult:
    """Component columns of a batch evaluation plus invariant diagnostics."""

    mu: np.ndarray
    eta: np.ndarray
    nu: np.ndarray

    @property
    def worst_component(self) -> float:
        """Largest excursion of any component outside [0, 1]."""
        lo = min(self.mu.min(), self.eta.min(), self.nu.min())
        hi = max(self.mu.max(), self.eta.max(), self.nu.max())
        return max(0.0 - lo, hi - 1.0, 0.0)

    @property
    def worst_sum(self) -> float:
        """Largest excess of mu + eta + nu over 1."""
        return max(float((self.mu + self.eta + self.nu).max()) - 1.0, 0.0)

    def all_valid(self, eps: float = EPS_SUM) -> bool:
        return self.worst_component <= eps and self.worst_sum <= eps


def _finish(mu, mid, nu) -> BulkResult:
    # same policy as the scalar path: clip float dust, never real negatives
    if mid.min() < -1e-12:
        raise InternalConsistencyError(
            f"vectorized middle component fell to {mid.min()!r}"
        )
    return BulkResult(mu, np.maximum(mid, 0.0), nu)


def bulk_add(f: TnormFamily, x_cols, y_cols) -> BulkResult:
    tau, tinv = _np_generators(f)
    mx, ex, nx = x_cols
    my, ey, ny = y_cols
    mu = 1.0 - tinv(tau(1.0 - mx) + tau(1.0 - my))
    nu = tinv(tau(nx) + tau(ny))
    mid = tinv(tau(ex + nx) + tau(ey + ny)) - nu
    return _finish(mu, mid, nu)


def bulk_mul(f: TnormFamily, x_cols, y_cols) -> BulkResult:
    tau, tinv = _np_generators(f)
    mx, ex, nx = x_cols
    my, ey, ny = y_cols
    mu = tinv(tau(mx) + tau(my))
    nu = 1.0 - tinv(tau(1.0 - nx) + tau(1.0 - ny))
    mid = tinv(tau(ex + mx) + tau(ey + my)) - mu
    return _finish(mu, mid, nu)


def bulk_scalar(f: TnormFamily, lam: float, x_cols) -> BulkResult:
    tau, tinv = _np_generators(f)
    mx, ex, nx = x_cols
    mu = 1.0 - tinv(lam * tau(1.0 - mx))
    nu = tinv(lam * tau(nx))
    mid = tinv(lam * tau(ex + nx)) - nu
    return _finish(mu, mid, nu)


def bulk_power(f: TnormFamily, lam: float, x_cols) -> BulkResult:
    tau, tinv = _np_generators(f)
    mx, ex, nx = x_cols
    mu = tinv(lam * tau(mx))
    nu = 1.0 - tinv(lam * tau(1.0 - nx))
    mid = tinv(lam * tau(ex + mx)) - mu
    return _finish(mu, mid, nu)


def columns_from_pfns(pfns) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split a PFN sequence into (mu, eta, nu) arrays for the bulk ops."""
    return _columns(pfns)


def _rejection_rows(rng: np.random.Generator, count: int) -> np.ndarray:
    # uniform over the lower set of the simplex, same rule as the scalar
    # sampler: draw on the cube, keep rows with sum <= 1
    out = np.empty((count, 3))
    filled = 0
    while filled < count:
        batch = rng.random((2 * (count - filled) + 16, 3))
        good = batch[batch.sum(axis=1) <= 1.0]
        take = min(len(good), count - filled)
        out[filled : filled + take] = good[:take]
        filled += take
    return out


def sample_pair_columns(seed: int, count: int):
    """``count`` seeded operand pairs as column arrays.

    Every boundary-pattern pair leads the stream, mirroring
    :func:`pfnkit.sampling.pfn_pairs`.
    """
    from .sampling import BOUNDARY_PATTERNS

    pats = np.asarray([(p.mu, p.eta, p.nu) for p in BOUNDARY_PATTERNS])
    k = len(pats)
    lead_x = np.repeat(pats, k, axis=0)[:count]
    lead_y = np.tile(pats, (k, 1))[:count]
    rest = max(count - len(lead_x), 0)
    rng = np.random.default_rng(seed)
    xs = np.vstack([lead_x, _rejection_rows(rng, rest)])
    ys = np.vstack([lead_y, _rejection_rows(rng, rest)])
    return (
        (xs[:, 0], xs[:, 1], xs[:, 2]),
        (ys[:, 0], ys[:, 1], ys[:, 2]),
    )
