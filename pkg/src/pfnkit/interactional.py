"""Closed interactional operational laws on picture fuzzy numbers.

The neutral degree interacts with the adjacent degree (eta + nu for sums,
eta + mu for products), which is what keeps every law closed: the three
output components always sum to at most 1 for any strict t-norm.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .core import Pfn
from .errors import EmptyInput, InternalConsistencyError, NonPositiveScalar, PfnError
from .tnorms import INF, TnormFamily

# A middle component may come out a hair below zero purely from floating
# point; anything worse than this indicates a bug and is raised, not hidden.
_CLAMP = 1e-12


def _assemble(mu: float, eta: float, nu: float) -> Pfn:
    if eta < 0.0:
        if eta < -_CLAMP:
            raise InternalConsistencyError(
                f"middle component {eta!r} is negative beyond tolerance"
            )
        eta = 0.0
    try:
        return Pfn(mu, eta, nu)
    except PfnError as exc:
        raise InternalConsistencyError(
            f"closed operation produced an invalid triple "
            f"({mu!r}, {eta!r}, {nu!r}): {exc}"
        ) from exc


def complement(x: Pfn) -> Pfn:
    """Swap positive and negative degrees; an involution."""
    return Pfn(x.nu, x.eta, x.mu)


def pfn_add(f: TnormFamily, x: Pfn, y: Pfn) -> Pfn:
    """Interactional sum: <S(mu1,mu2), T(eta1+nu1, eta2+nu2) - T(nu1,nu2), T(nu1,nu2)>."""
    nu = f.tnorm(x.nu, y.nu)
    mid = f.tnorm(x.eta + x.nu, y.eta + y.nu) - nu
    return _assemble(f.tconorm(x.mu, y.mu), mid, nu)


def pfn_mul(f: TnormFamily, x: Pfn, y: Pfn) -> Pfn:
    """Interactional product: <T(mu1,mu2), T(eta1+mu1, eta2+mu2) - T(mu1,mu2), S(nu1,nu2)>."""
    mu = f.tnorm(x.mu, y.mu)
    mid = f.tnorm(x.eta + x.mu, y.eta + y.mu) - mu
    return _assemble(mu, mid, f.tconorm(x.nu, y.nu))


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not lam > 0.0 or math.isnan(lam) or lam == INF:
        raise NonPositiveScalar(f"scalar {lam!r} must be a finite positive number")
    return lam


def scalar_mul(f: TnormFamily, lam: float, x: Pfn) -> Pfn:
    """lam-fold interactional sum, defined for every positive lam."""
    lam = _check_lambda(lam)
    nu = f.tau_inv(lam * f.tau(x.nu))
    mid = f.tau_inv(lam * f.tau(x.eta + x.nu)) - nu
    return _assemble(f.zeta_inv(lam * f.zeta(x.mu)), mid, nu)


def pfn_pow(f: TnormFamily, lam: float, x: Pfn) -> Pfn:
    """lam-th interactional power, defined for every positive lam."""
    lam = _check_lambda(lam)
    mu = f.tau_inv(lam * f.tau(x.mu))
    mid = f.tau_inv(lam * f.tau(x.eta + x.mu)) - mu
    return _assemble(mu, mid, f.zeta_inv(lam * f.zeta(x.nu)))


def n_ary_add(
    f: TnormFamily, xs: Iterable[Pfn], weights: Sequence[float] | None = None
) -> Pfn:
    """Direct n-ary expansion of the interactional sum.

    With ``weights`` this is the weighted sum of scalar multiples,
    computed in generator space with a single inversion per component.
    """
    xs = list(xs)
    if not xs:
        raise EmptyInput("sum of no PFNs")
    mu = f.tconorm_n([x.mu for x in xs], weights)
    nu = f.tnorm_n([x.nu for x in xs], weights)
    mid = f.tnorm_n([x.eta + x.nu for x in xs], weights) - nu
    return _assemble(mu, mid, nu)


def n_ary_mul(
    f: TnormFamily, xs: Iterable[Pfn], weights: Sequence[float] | None = None
) -> Pfn:
    """Direct n-ary expansion of the interactional product."""
    xs = list(xs)
    if not xs:
        raise EmptyInput("product of no PFNs")
    mu = f.tnorm_n([x.mu for x in xs], weights)
    nu = f.tconorm_n([x.nu for x in xs], weights)
    mid = f.tnorm_n([x.eta + x.mu for x in xs], weights) - mu
    return _assemble(mu, mid, nu)
