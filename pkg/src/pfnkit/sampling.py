"""Seeded random PFN generation for property tests and closure fuzzing.

The sampling rule is fixed so test distributions are reproducible from a
seed: draw (a, b, c) uniformly on [0, 1]^3 and reject while a + b + c > 1,
i.e. uniform on the lower set of the simplex.
"""

from __future__ import annotations

import random
from typing import Iterator

from .core import Pfn

#: Corner and edge cases mixed into fuzz streams: every {0, 1} pattern that
#: satisfies the sum constraint, plus midpoints of the boundary faces.
BOUNDARY_PATTERNS: tuple[Pfn, ...] = (
    Pfn(0.0, 0.0, 0.0),
    Pfn(1.0, 0.0, 0.0),
    Pfn(0.0, 1.0, 0.0),
    Pfn(0.0, 0.0, 1.0),
    Pfn(0.5, 0.5, 0.0),
    Pfn(0.5, 0.0, 0.5),
    Pfn(0.0, 0.5, 0.5),
    Pfn(0.5, 0.0, 0.0),
    Pfn(0.0, 0.5, 0.0),
    Pfn(0.0, 0.0, 0.5),
    Pfn(0.25, 0.25, 0.5),
    Pfn(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
)


def random_pfn(rng: random.Random) -> Pfn:
    """One PFN, uniform over {(a, b, c) in [0,1]^3 : a + b + c <= 1}."""
    while True:
        a = rng.random()
        b = rng.random()
        c = rng.random()
        if a + b + c <= 1.0:
            return Pfn(a, b, c)


def pfn_stream(seed: int, include_boundary: bool = True) -> Iterator[Pfn]:
    """Endless seeded PFN stream, leading with the boundary patterns."""
    if include_boundary:
        yield from BOUNDARY_PATTERNS
    rng = random.Random(seed)
    while True:
        yield random_pfn(rng)


def pfn_pairs(seed: int, count: int, include_boundary: bool = True) -> Iterator[tuple[Pfn, Pfn]]:
    """``count`` seeded PFN pairs; boundary patterns are paired up first."""
    produced = 0
    if include_boundary:
        pats = BOUNDARY_PATTERNS
        for i, x in enumerate(pats):
            for y in pats[i:]:
                if produced >= count:
                    return
                yield x, y
                produced += 1
    rng = random.Random(seed)
    while produced < count:
        yield random_pfn(rng), random_pfn(rng)
        produced += 1
