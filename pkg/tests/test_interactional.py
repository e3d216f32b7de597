import math
import random

import pytest

from pfnkit import (
    BOTTOM,
    TOP,
    Pfn,
    complement,
    dombi,
    n_ary_add,
    n_ary_mul,
    pfn_add,
    pfn_mul,
    pfn_pow,
    product,
    scalar_mul,
)
from pfnkit.errors import EmptyInput, NonPositiveScalar
from pfnkit.sampling import BOUNDARY_PATTERNS, random_pfn

from conftest import REPRESENTATIVES, assert_pfn_close, pfn_list


class TestComplement:
    def test_swaps_mu_nu(self):
        assert complement(Pfn(0.6, 0.1, 0.2)) == Pfn(0.2, 0.1, 0.6)

    def test_bottom_top(self):
        assert complement(BOTTOM) == TOP

    def test_involution(self):
        for x in pfn_list(3, 50, boundary=True):
            assert complement(complement(x)) == x


class TestBinaryLaws:
    def test_add_neutral_element(self):
        for f in REPRESENTATIVES:
            for x in pfn_list(4, 10):
                assert_pfn_close(pfn_add(f, x, BOTTOM), x, 1e-12)

    def test_mul_neutral_element(self):
        for f in REPRESENTATIVES:
            for x in pfn_list(5, 10):
                assert_pfn_close(pfn_mul(f, x, TOP), x, 1e-12)

    def test_add_product_value(self):
        got = pfn_add(product(), Pfn(0.25, 0.75, 0.0), Pfn(0.25, 0.0, 0.75))
        assert_pfn_close(got, Pfn(0.4375, 0.5625, 0.0), 1e-12)

    def test_mul_product_value(self):
        got = pfn_mul(product(), Pfn(0.25, 0.75, 0.0), Pfn(0.25, 0.0, 0.75))
        assert_pfn_close(got, Pfn(0.0625, 0.1875, 0.75), 1e-12)

    def test_mul_closes_where_ratio_laws_fail(self):
        # the same operand pair drives several published non-closure cases
        x, y = Pfn(0.25, 0.75, 0.0), Pfn(0.25, 0.0, 0.75)
        for f in (product(), dombi(1.0), dombi(3.0)):
            out = pfn_mul(f, x, y)
            assert out.mu + out.eta + out.nu <= 1.0 + 1e-9

    def test_commutativity(self):
        rng = random.Random(12)
        for f in REPRESENTATIVES:
            for _ in range(25):
                x, y = random_pfn(rng), random_pfn(rng)
                assert pfn_add(f, x, y) == pfn_add(f, y, x)
                assert pfn_mul(f, x, y) == pfn_mul(f, y, x)


class TestScalarLaws:
    def test_identity_scalar(self):
        for f in REPRESENTATIVES:
            for x in pfn_list(6, 10):
                assert_pfn_close(scalar_mul(f, 1.0, x), x, 1e-12)
                assert_pfn_close(pfn_pow(f, 1.0, x), x, 1e-12)

    def test_scalar_double_product(self):
        got = scalar_mul(product(), 2.0, Pfn(0.5, 0.25, 0.25))
        assert_pfn_close(got, Pfn(0.75, 0.1875, 0.0625), 1e-12)

    def test_scalar_half_closes_on_neutral_heavy_input(self):
        got = scalar_mul(product(), 0.5, Pfn(0.0, 0.5, 0.5))
        assert_pfn_close(
            got, Pfn(0.0, 1.0 - 1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)), 1e-12
        )
        assert got.mu + got.eta + got.nu <= 1.0 + 1e-12

    def test_power_square_product(self):
        got = pfn_pow(product(), 2.0, Pfn(0.5, 0.25, 0.25))
        assert_pfn_close(got, Pfn(0.25, 0.3125, 0.4375), 1e-12)

    def test_power_is_complement_conjugate_of_scalar(self):
        rng = random.Random(13)
        for f in REPRESENTATIVES:
            for _ in range(20):
                x = random_pfn(rng)
                lam = rng.uniform(0.2, 3.0)
                direct = pfn_pow(f, lam, x)
                conjugated = complement(scalar_mul(f, lam, complement(x)))
                assert_pfn_close(direct, conjugated, 1e-12)

    @pytest.mark.parametrize("lam", [0.0, -1.0, math.inf, math.nan])
    def test_bad_scalars_rejected(self, lam):
        with pytest.raises(NonPositiveScalar):
            scalar_mul(product(), lam, TOP)
        with pytest.raises(NonPositiveScalar):
            pfn_pow(product(), lam, TOP)

    def test_extreme_scalars_stay_closed(self):
        rng = random.Random(14)
        for f in REPRESENTATIVES:
            for lam in (1e-6, 1e6):
                x = random_pfn(rng)
                for out in (scalar_mul(f, lam, x), pfn_pow(f, lam, x)):
                    assert out.mu + out.eta + out.nu <= 1.0 + 1e-9


class TestNaryLaws:
    def test_two_equals_binary(self):
        rng = random.Random(15)
        for f in REPRESENTATIVES:
            x, y = random_pfn(rng), random_pfn(rng)
            assert n_ary_add(f, [x, y]) == pfn_add(f, x, y)
            assert n_ary_mul(f, [x, y]) == pfn_mul(f, x, y)

    def test_three_way_product_value(self):
        xs = [Pfn(0.5, 0.25, 0.25)] * 3
        got = n_ary_add(product(), xs)
        assert_pfn_close(got, Pfn(0.875, 0.109375, 0.015625), 1e-12)

    def test_matches_binary_fold(self):
        rng = random.Random(16)
        for f in REPRESENTATIVES:
            for _ in range(40):
                xs = [random_pfn(rng) for _ in range(rng.randint(2, 5))]
                fold_add, fold_mul = xs[0], xs[0]
                for x in xs[1:]:
                    fold_add = pfn_add(f, fold_add, x)
                    fold_mul = pfn_mul(f, fold_mul, x)
                assert_pfn_close(n_ary_add(f, xs), fold_add, 1e-12)
                assert_pfn_close(n_ary_mul(f, xs), fold_mul, 1e-12)

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            n_ary_add(product(), [])
        with pytest.raises(EmptyInput):
            n_ary_mul(product(), [])


class TestAlgebraicLaws:
    """Spot checks; the acceptance suite runs these at scale."""

    def scalars(self, rng):
        return rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0)

    def test_associativity(self):
        rng = random.Random(17)
        for f in REPRESENTATIVES:
            for _ in range(15):
                a, b, c = (random_pfn(rng) for _ in range(3))
                assert_pfn_close(
                    pfn_add(f, pfn_add(f, a, b), c),
                    pfn_add(f, a, pfn_add(f, b, c)),
                    1e-9,
                )
                assert_pfn_close(
                    pfn_mul(f, pfn_mul(f, a, b), c),
                    pfn_mul(f, a, pfn_mul(f, b, c)),
                    1e-9,
                )

    def test_scalar_sum_merges(self):
        rng = random.Random(18)
        for f in REPRESENTATIVES:
            for _ in range(15):
                x = random_pfn(rng)
                xi, lam = self.scalars(rng)
                assert_pfn_close(
                    pfn_add(f, scalar_mul(f, xi, x), scalar_mul(f, lam, x)),
                    scalar_mul(f, xi + lam, x),
                    1e-9,
                )
                assert_pfn_close(
                    pfn_mul(f, pfn_pow(f, xi, x), pfn_pow(f, lam, x)),
                    pfn_pow(f, xi + lam, x),
                    1e-9,
                )

    def test_scalar_distributes_over_add(self):
        rng = random.Random(19)
        for f in REPRESENTATIVES:
            for _ in range(15):
                x, y = random_pfn(rng), random_pfn(rng)
                lam = rng.uniform(0.2, 3.0)
                assert_pfn_close(
                    scalar_mul(f, lam, pfn_add(f, x, y)),
                    pfn_add(f, scalar_mul(f, lam, x), scalar_mul(f, lam, y)),
                    1e-9,
                )
                assert_pfn_close(
                    pfn_pow(f, lam, pfn_mul(f, x, y)),
                    pfn_mul(f, pfn_pow(f, lam, x), pfn_pow(f, lam, y)),
                    1e-9,
                )

    def test_scalar_composition_multiplies(self):
        rng = random.Random(20)
        for f in REPRESENTATIVES:
            for _ in range(15):
                x = random_pfn(rng)
                xi, lam = self.scalars(rng)
                assert_pfn_close(
                    scalar_mul(f, xi, scalar_mul(f, lam, x)),
                    scalar_mul(f, xi * lam, x),
                    1e-9,
                )
                assert_pfn_close(
                    pfn_pow(f, xi, pfn_pow(f, lam, x)),
                    pfn_pow(f, lam * xi, x),
                    1e-9,
                )


class TestClosure:
    def test_boundary_patterns_all_ops(self):
        for f in REPRESENTATIVES:
            for x in BOUNDARY_PATTERNS:
                for y in BOUNDARY_PATTERNS:
                    for out in (pfn_add(f, x, y), pfn_mul(f, x, y)):
                        assert out.mu + out.eta + out.nu <= 1.0 + 1e-9
                for lam in (0.1, 0.5, 1.0, 2.0, 10.0):
                    for out in (scalar_mul(f, lam, x), pfn_pow(f, lam, x)):
                        assert out.mu + out.eta + out.nu <= 1.0 + 1e-9

    def test_middle_component_exact_zero_when_eta_zero(self):
        # T(eta + nu, ...) == T(nu, ...) exactly when both etas vanish
        for f in REPRESENTATIVES:
            out = pfn_add(f, Pfn(0.3, 0.0, 0.4), Pfn(0.2, 0.0, 0.5))
            assert out.eta == 0.0


class TestIntuitionisticReduction:
    def test_product_family_matches_classical_forms(self):
        rng = random.Random(21)
        f = product()
        for _ in range(50):
            a, b = rng.random(), rng.random()
            c, d = rng.uniform(0, 1 - a), rng.uniform(0, 1 - b)
            x, y = Pfn(a, 0.0, c), Pfn(b, 0.0, d)
            added = pfn_add(f, x, y)
            assert added.eta == 0.0
            assert added.mu == pytest.approx(a + b - a * b, abs=1e-12)
            assert added.nu == pytest.approx(c * d, abs=1e-12)
            multiplied = pfn_mul(f, x, y)
            assert multiplied.eta == 0.0
            assert multiplied.mu == pytest.approx(a * b, abs=1e-12)
            assert multiplied.nu == pytest.approx(c + d - c * d, abs=1e-12)
