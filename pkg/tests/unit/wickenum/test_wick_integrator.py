import random
from collections import Counter
from fractions import Fraction

import pytest

from wickenum import (
    EdgeMultiset,
    ExactPoly,
    count_pairings,
    entry_symbol,
    enumerate_pairings,
    integrate,
    integrate_symbolic,
    specialize_dimension,
    trace_power,
    wick_value,
)

from unit.test_util.naive_oracles import NaiveOracles

N = ExactPoly.variable("N")


# noinspection PyMethodMayBeStatic
class TestWickIntegrator:
    def edge_multiset__should_reject_index_outside_dimension(self):
        with pytest.raises(ValueError):
            EdgeMultiset(items=[(0, 1)])
        with pytest.raises(ValueError):
            EdgeMultiset(items=[(1, 4)], dimension=3)

    def edge_multiset__should_build_from_entry_exponents(self):
        multiset = EdgeMultiset.from_entry_exponents({entry_symbol(2, 1): 1, entry_symbol(1, 2): 2})
        assert multiset.items == ((1, 2), (1, 2), (2, 1))
        assert multiset.support() == (1, 2)

    def edge_multiset__should_reject_non_entry_symbol(self):
        with pytest.raises(ValueError):
            EdgeMultiset.from_entry_exponents({"x": 1})

    # fmt: off
    @pytest.mark.parametrize("items, expected", [
        ([(1, 1), (1, 1)], 1),
        ([(1, 1)] * 4, 3),
        ([(1, 1)] * 6, 15),
        ([(1, 2), (2, 1)], 1),
        ([(1, 2), (2, 1)] * 3, 6),
        ([(1, 2), (1, 2)], 0),
        ([(1, 2), (2, 1), (2, 3), (3, 2), (1, 1), (1, 1)], 1),
        ([(1, 2), (2, 1), (1, 2)], 0),
        ([(1, 2), (2, 3), (3, 1)], 0),
    ])
    # fmt: on
    def count_pairings__should_agree_with_naive_matcher(self, items, expected):
        multiset = EdgeMultiset(items=items)
        assert count_pairings(multiset) == expected
        assert NaiveOracles.count_pairings(list(multiset.items)) == expected
        assert len(enumerate_pairings(multiset)) == expected

    def enumerate_pairings__should_produce_proper_distinct_pairings(self):
        multiset = EdgeMultiset(items=[(1, 2), (2, 1), (1, 2), (2, 1), (3, 3), (3, 3)])
        pairings = enumerate_pairings(multiset)
        assert len(pairings) == 2
        assert len(set(pairings)) == 2
        assert all(pairing.is_proper_for(multiset) for pairing in pairings)

    def wick_value__should_scale_pairing_count_by_inverse_power_of_n(self):
        assert wick_value(EdgeMultiset(items=[(1, 1)] * 4)) == ExactPoly.monomial({"N": -2}, 3)
        assert wick_value(EdgeMultiset(items=[(1, 2)] * 2)).is_zero

    @staticmethod
    def random_items(rng: random.Random) -> list[tuple[int, int]]:
        """Half the draws are closed under transposition, so that proper pairings are common."""
        if rng.random() < 0.5:
            return [(rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(0, 8))]
        items = []
        for _ in range(rng.randint(0, 4)):
            i, j = rng.randint(1, 3), rng.randint(1, 3)
            items += [(i, j), (j, i)]
        rng.shuffle(items)
        return items

    @pytest.mark.parametrize("seed", [7, 2024])
    def wick_value__should_match_naive_matcher_on_random_multisets(self, seed):
        rng = random.Random(seed)
        nonzero = 0
        for _ in range(500):
            items = self.random_items(rng)
            multiset = EdgeMultiset(items=items, dimension=3)
            expected = NaiveOracles.count_pairings(list(multiset.items))
            assert count_pairings(multiset) == expected, items
            expected_value = ExactPoly.monomial({"N": -(len(items) // 2)}, expected) if expected else ExactPoly.zero()
            assert wick_value(multiset) == expected_value, items
            monomial = ExactPoly.monomial(Counter(entry_symbol(i, j) for i, j in items))
            assert integrate(monomial) == expected_value, items
            nonzero += expected > 0
        assert nonzero > 100

    def integrate__should_pass_scalar_variables_through(self):
        integrand = ExactPoly.monomial({"x": 1, entry_symbol(1, 2): 1, entry_symbol(2, 1): 1}) + 5
        assert integrate(integrand) == ExactPoly.monomial({"x": 1, "N": -1}) + 5

    def integrate__should_give_exact_fourth_moment_of_trace_at_fixed_dimension(self):
        integral = integrate(trace_power(3, 4))
        assert specialize_dimension(integral, 3) == Fraction(19, 3)

    def integrate_symbolic__should_keep_dimension_symbolic(self):
        integral = integrate_symbolic(trace_power(4, 4), 4)
        assert integral == N * 2 + N ** -1
        assert specialize_dimension(integral, 3) == Fraction(19, 3)

    def integrate_symbolic__should_reject_terms_beyond_reference_dimension(self):
        with pytest.raises(ValueError):
            integrate_symbolic(trace_power(3, 4), 2)
