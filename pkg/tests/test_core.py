import json
import random

import pytest
from hypothesis import given, strategies as st

from pfnkit import (
    BOTTOM,
    TOP,
    LegacyTriple,
    Pfn,
    cmp_admissible,
    cmp_score_accuracy,
    join_w,
    leq_componentwise,
    make_pfn,
    meet_w,
    score_profile,
)
from pfnkit.errors import ComponentOutOfRange, EmptyInput, SumExceedsOne

from conftest import pfn_list, subset_pair


def units():
    return st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


pfns = (
    st.tuples(units(), units(), units())
    .filter(lambda t: sum(t) <= 1.0)
    .map(lambda t: Pfn(*t))
)


class TestMakePfn:
    def test_plain_triple(self):
        x = make_pfn(0.5, 0.25, 0.25)
        assert (x.mu, x.eta, x.nu) == (0.5, 0.25, 0.25)

    def test_bottom_boundary(self):
        assert make_pfn(0.0, 0.0, 1.0).pi == 0.0

    def test_sum_above_one_rejected(self):
        with pytest.raises(SumExceedsOne):
            make_pfn(0.81, 0.125, 0.125)

    @pytest.mark.parametrize("bad", [(-0.1, 0, 0), (0, 1.2, 0), (0, 0, -1e-6)])
    def test_component_out_of_range(self, bad):
        with pytest.raises(ComponentOutOfRange):
            make_pfn(*bad)

    def test_sum_slack_accepted_and_stored_unmodified(self):
        x = make_pfn(0.5, 0.3, 0.2 + 5e-10)
        assert x.nu == 0.2 + 5e-10
        assert x.pi < 0.0  # slightly negative refusal is allowed

    def test_sum_slack_limit(self):
        with pytest.raises(SumExceedsOne):
            make_pfn(0.5, 0.3, 0.2 + 5e-9)


class TestScoreProfile:
    def test_top(self):
        assert score_profile(TOP).as_tuple() == (1.0, 1.0, 1.0)

    def test_three_key_example(self):
        p = score_profile(Pfn(0.2, 0.2, 0.1))
        assert p.as_tuple() == pytest.approx((0.1, 0.3, 0.5))

    def test_case_study_score(self):
        assert score_profile(Pfn(0.4229, 0.2492, 0.2232)).s == pytest.approx(0.1997)

    @given(pfns)
    def test_round_trip(self, x):
        back = score_profile(x).to_pfn()
        assert abs(back.mu - x.mu) <= 1e-12
        assert abs(back.eta - x.eta) <= 1e-12
        assert abs(back.nu - x.nu) <= 1e-12

    @given(pfns)
    def test_key_inequalities(self, x):
        p = score_profile(x)
        assert abs(p.s) <= p.h1 + 1e-15
        assert p.h1 <= p.h2 + 1e-15
        assert p.h2 <= 1.0 + 1e-9


class TestAdmissibleOrder:
    def test_first_accuracy_breaks_score_tie(self):
        assert cmp_admissible(Pfn(0.2, 0.2, 0.1), Pfn(0.3, 0.0, 0.2)) == -1

    def test_bottom_below_top(self):
        assert cmp_admissible(BOTTOM, TOP) == -1

    def test_reflexive_equal(self):
        x = Pfn(0.3, 0.1, 0.2)
        assert cmp_admissible(x, Pfn(0.3, 0.1, 0.2)) == 0

    def test_totality_and_antisymmetry(self):
        xs = pfn_list(101, 300, boundary=True)
        for x in xs:
            for y in xs[:50]:
                c, d = cmp_admissible(x, y), cmp_admissible(y, x)
                assert c in (-1, 0, 1)
                assert c == -d
                if c == 0:
                    assert (x.mu, x.eta, x.nu) == (y.mu, y.eta, y.nu)

    def test_transitivity(self):
        rng = random.Random(7)
        xs = pfn_list(11, 600)
        for _ in range(2000):
            a, b, c = rng.sample(xs, 3)
            if cmp_admissible(a, b) <= 0 and cmp_admissible(b, c) <= 0:
                assert cmp_admissible(a, c) <= 0

    def test_refines_componentwise_order(self):
        rng = random.Random(23)
        for _ in range(2000):
            x, y = subset_pair(rng)
            assert leq_componentwise(x, y)
            assert cmp_admissible(x, y) <= 0


class TestScoreAccuracyOrder:
    def test_indistinguishable_pair(self):
        assert cmp_score_accuracy(Pfn(0.2, 0.2, 0.1), Pfn(0.3, 0.0, 0.2)) is None

    def test_score_decides(self):
        assert cmp_score_accuracy(BOTTOM, TOP) == -1

    def test_accuracy_decides(self):
        assert cmp_score_accuracy(Pfn(0.5, 0.0, 0.0), Pfn(0.5, 0.2, 0.0)) == -1


class TestComponentwiseOrder:
    def test_example(self):
        assert leq_componentwise(Pfn(0.1, 0.1, 0.5), Pfn(0.2, 0.3, 0.4))

    def test_incomparable_pair(self):
        assert not leq_componentwise(TOP, Pfn(0.0, 1.0, 0.0))
        assert not leq_componentwise(Pfn(0.0, 1.0, 0.0), TOP)

    @given(pfns)
    def test_reflexive(self, x):
        assert leq_componentwise(x, x)


class TestJoinMeet:
    def test_join_of_incomparables(self):
        assert join_w([TOP, Pfn(0.0, 1.0, 0.0)]) == TOP

    def test_singleton(self):
        x = Pfn(0.2, 0.3, 0.4)
        assert join_w([x]) == x
        assert meet_w([x]) == x

    def test_meet_hits_bottom(self):
        xs = [BOTTOM, Pfn(0.5, 0.2, 0.2), TOP]
        assert meet_w(xs) == BOTTOM

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            join_w([])
        with pytest.raises(EmptyInput):
            meet_w([])

    def test_lattice_laws_on_finite_sets(self):
        xs = pfn_list(31, 40)
        a, b, c = xs[0], xs[1], xs[2]
        assert join_w([a, a]) == a and meet_w([a, a]) == a
        assert join_w([a, b]) == join_w([b, a])
        assert join_w([join_w([a, b]), c]) == join_w([a, join_w([b, c])])
        assert meet_w([meet_w([a, b]), c]) == meet_w([a, meet_w([b, c])])


class TestSerialization:
    def test_json_round_trip(self):
        x = Pfn(0.123456789012345, 0.2, 0.3)
        assert Pfn.from_json(json.loads(x.dumps())) == x

    def test_text_form(self):
        assert str(Pfn(0.5, 0.25, 0.25)) == "<0.5,0.25,0.25>"

    def test_from_json_rejects_bad_shape(self):
        with pytest.raises(ComponentOutOfRange):
            Pfn.from_json([0.1, 0.2])


class TestLegacyTriple:
    def test_sum_and_verdict(self):
        t = LegacyTriple(0.8125, 0.125, 0.125)
        assert t.component_sum == pytest.approx(1.0625)
        assert not t.is_pfn()

    def test_valid_triple(self):
        assert LegacyTriple(0.25, 0.0, 0.75).is_pfn()

    def test_components_may_exceed_sum_only(self):
        # each component in range, joint sum unconstrained
        t = LegacyTriple(1.0, 1.0, 1.0)
        assert t.component_sum == 3.0
        assert not t.is_pfn()
