import random

import numpy as np
import pytest

from pfnkit import Pfn, pfn_add, pfn_mul, pfn_pow, piecewise, scalar_mul
from pfnkit.bulk import (
    bulk_add,
    bulk_mul,
    bulk_power,
    bulk_scalar,
    columns_from_pfns,
)
from pfnkit.sampling import BOUNDARY_PATTERNS, pfn_pairs, pfn_stream, random_pfn

from conftest import all_grid_families, pfn_list


class TestSampling:
    def test_random_pfn_is_valid_and_seeded(self):
        a = [random_pfn(random.Random(42)) for _ in range(5)]
        b = [random_pfn(random.Random(42)) for _ in range(5)]
        assert a == b
        for x in a:
            assert 0 <= x.mu <= 1 and 0 <= x.eta <= 1 and 0 <= x.nu <= 1
            assert x.mu + x.eta + x.nu <= 1.0

    def test_stream_leads_with_boundary(self):
        it = pfn_stream(1)
        head = [next(it) for _ in range(len(BOUNDARY_PATTERNS))]
        assert tuple(head) == BOUNDARY_PATTERNS

    def test_pairs_count_and_determinism(self):
        a = list(pfn_pairs(3, 100))
        b = list(pfn_pairs(3, 100))
        assert len(a) == 100
        assert a == b

    def test_boundary_patterns_are_valid(self):
        for x in BOUNDARY_PATTERNS:
            assert isinstance(x, Pfn)


class TestBulkAgreesWithScalarPath:
    def test_binary_ops(self):
        xs = pfn_list(60, 150, boundary=True)
        ys = pfn_list(61, 150, boundary=True)
        ys = ys[3:] + ys[:3]  # misalign so boundary meets random
        xc, yc = columns_from_pfns(xs), columns_from_pfns(ys)
        for f in all_grid_families() + [piecewise()]:
            for bulk_op, scalar_op in ((bulk_add, pfn_add), (bulk_mul, pfn_mul)):
                res = bulk_op(f, xc, yc)
                for i, (x, y) in enumerate(zip(xs, ys)):
                    want = scalar_op(f, x, y)
                    assert res.mu[i] == pytest.approx(want.mu, abs=1e-12), (f, x, y)
                    assert res.eta[i] == pytest.approx(want.eta, abs=1e-12), (f, x, y)
                    assert res.nu[i] == pytest.approx(want.nu, abs=1e-12), (f, x, y)

    def test_scalar_ops(self):
        xs = pfn_list(62, 120, boundary=True)
        xc = columns_from_pfns(xs)
        for f in all_grid_families():
            for lam in (0.1, 1.0, 10.0):
                for bulk_op, scalar_op in (
                    (bulk_scalar, scalar_mul),
                    (bulk_power, pfn_pow),
                ):
                    res = bulk_op(f, lam, xc)
                    for i, x in enumerate(xs):
                        want = scalar_op(f, lam, x)
                        assert res.mu[i] == pytest.approx(want.mu, abs=1e-12)
                        assert res.eta[i] == pytest.approx(want.eta, abs=1e-12)
                        assert res.nu[i] == pytest.approx(want.nu, abs=1e-12)

    def test_validity_summary(self):
        xs = pfn_list(63, 500, boundary=True)
        ys = pfn_list(64, 500, boundary=True)
        xc, yc = columns_from_pfns(xs), columns_from_pfns(ys)
        for f in all_grid_families():
            res = bulk_add(f, xc, yc)
            assert res.all_valid()
            assert res.worst_sum <= 1e-9

    def test_columns_shape(self):
        mu, eta, nu = columns_from_pfns([Pfn(0.1, 0.2, 0.3)])
        assert np.allclose(mu, [0.1]) and np.allclose(eta, [0.2])
        assert np.allclose(nu, [0.3])
