"""Shared fixtures: seeded PFN sampling and the family/gamma test grids."""

import random

import pytest

from pfnkit import Pfn, TnormFamily
from pfnkit.sampling import BOUNDARY_PATTERNS, random_pfn

# Parameter grids bracketing the sweep ranges used in reporting.
GAMMA_GRIDS = {
    "schweizer-sklar": (-10.0, -5.0, -2.0, -1.0, -0.5),
    "hamacher": (0.5, 1.0, 2.0, 5.0, 10.0),
    "frank": (0.5, 2.0, 5.0, 10.0),
    "dombi": (0.5, 1.0, 2.0, 5.0, 10.0),
    "aczel-alsina": (0.5, 1.0, 2.0, 5.0, 10.0),
}

# One representative instance per family, for per-family property passes.
REPRESENTATIVES = (
    TnormFamily("product"),
    TnormFamily("schweizer-sklar", -2.0),
    TnormFamily("hamacher", 2.0),
    TnormFamily("frank", 2.0),
    TnormFamily("dombi", 2.0),
    TnormFamily("aczel-alsina", 2.0),
    TnormFamily("piecewise"),
)


def all_grid_families():
    """Every (family, gamma) pair on the test grids, plus product."""
    out = [TnormFamily("product")]
    for name, grid in GAMMA_GRIDS.items():
        out.extend(TnormFamily(name, g) for g in grid)
    return out


def pfn_list(seed: int, count: int, boundary: bool = False) -> list[Pfn]:
    rng = random.Random(seed)
    xs = list(BOUNDARY_PATTERNS) if boundary else []
    while len(xs) < count:
        xs.append(random_pfn(rng))
    return xs[:count]


def subset_pair(rng: random.Random) -> tuple[Pfn, Pfn]:
    """A pair (x, y) with x component-wise below y (mu, eta up; nu down)."""
    x = random_pfn(rng)
    nu = x.nu * rng.random()
    slack = 1.0 - (x.mu + x.eta + nu)
    d_mu = slack * rng.random()
    d_eta = (slack - d_mu) * rng.random()
    return x, Pfn(x.mu + d_mu, x.eta + d_eta, nu)


@pytest.fixture(params=REPRESENTATIVES, ids=lambda f: repr(f))
def family(request) -> TnormFamily:
    return request.param


def assert_pfn_close(x: Pfn, y: Pfn, tol: float):
    assert abs(x.mu - y.mu) <= tol, f"{x} vs {y}"
    assert abs(x.eta - y.eta) <= tol, f"{x} vs {y}"
    assert abs(x.nu - y.nu) <= tol, f"{x} vs {y}"
