import logging
import random
from fractions import Fraction
from io import StringIO

import pytest

from wickenum import ExactPoly, LaurentExponent, UnknownVariable, binomial_in, falling_factorial, TRACE_LEVEL

N = ExactPoly.variable("N")
X = ExactPoly.variable("x")
Y = ExactPoly.variable("y")


# noinspection PyMethodMayBeStatic
class TestExactPoly:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        root = logging.getLogger()
        for handler in root.handlers[:]:
            root.removeHandler(handler)

        # noinspection PyAttributeOutsideInit
        self.log_output = StringIO()
        handler = logging.StreamHandler(self.log_output)
        handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logging.basicConfig(level=TRACE_LEVEL, handlers=[handler])

    def multiplication__should_combine_polynomials_over_different_registries(self):
        product = (N + 1) * (X - 1)
        assert product == N * X - N + X - 1
        assert product.used_variables == ("N", "x")

    def multiplication__should_cancel_laurent_powers_of_n(self):
        assert ExactPoly.monomial({"N": -1}) * N == 1

    def addition__should_drop_terms_that_cancel(self):
        difference = (N + X) - X
        assert difference == N
        assert len(difference) == 1

    def constructor__should_reject_negative_exponent_on_non_laurent_variable(self):
        with pytest.raises(LaurentExponent):
            ExactPoly.monomial({"z": -1})

    def constructor__should_allow_negative_exponents_on_n_and_y(self):
        poly = ExactPoly.monomial({"N": -2, "y": -1}, 3)
        assert poly.coefficient({"N": -2, "y": -1}) == 3

    def coefficient__should_raise_unknown_variable_for_name_outside_registry(self):
        with pytest.raises(UnknownVariable):
            (N + 1).coefficient({"x": 1})

    def coefficient__should_return_zero_for_absent_monomial(self):
        assert (N + 1).coefficient({"N": 3}) == 0

    def str__should_format_rational_coefficients_and_exponents(self):
        poly = ExactPoly.monomial({"N": -1, "y": 1}, Fraction(1, 2))
        assert str(poly) == "1/2*N^-1*y"

    def str__should_write_negative_terms_with_a_minus_sign(self):
        assert str(N * N - 1) == "-1 + N^2"
        assert str(ExactPoly.zero()) == "0"

    def falling_factorial__should_expand_descending_product(self):
        assert falling_factorial("N", 2) == N * N - N
        assert falling_factorial("N", 0) == 1

    # fmt: off
    @pytest.mark.parametrize("k, n, expected", [
        (0, 5, 1),
        (1, 5, 5),
        (2, 4, 6),
        (3, 6, 20),
        (4, 3, 0),
    ])
    # fmt: on
    def binomial_in__should_specialize_to_binomial_coefficient(self, k, n, expected):
        assert binomial_in("N", k).specialize("N", n) == expected

    def inverse__should_refuse_polynomials_with_more_than_one_term(self):
        with pytest.raises(ZeroDivisionError):
            (N + 1).inverse()

    def power__should_accept_negative_exponent_for_single_laurent_term(self):
        assert N ** -2 == ExactPoly.monomial({"N": -2})
        assert (N + 1) ** 2 == N * N + N * 2 + 1

    def division__should_divide_by_scalar_and_by_monomial(self):
        assert (N * 4) / 2 == N * 2
        assert (N * N + N) / N == N + 1

    def substitute__should_replace_variable_by_polynomial(self):
        replacement = N * ExactPoly.variable("z") * ExactPoly.monomial({"y": -1})
        substituted = (X * X).substitute("x", replacement)
        assert substituted == ExactPoly.monomial({"N": 2, "z": 2, "y": -2})

    def substitute__should_reject_negative_power_with_multi_term_replacement(self):
        with pytest.raises(LaurentExponent):
            ExactPoly.monomial({"N": -1}).substitute("N", N + 1)

    def specialize__should_evaluate_variable_exactly(self):
        poly = (N * N * 2 + 1).scaled(Fraction(-1, 4))
        assert poly.specialize("N", 3) == Fraction(-19, 4)

    def extract__should_return_coefficient_polynomial_in_remaining_variables(self):
        poly = X * Y + X * X * N * 2 + 7
        assert poly.extract({"x": 1}) == Y
        assert poly.extract({"x": 2}) == N * 2
        assert poly.extract({"x": 0}) == 7

    def extract__should_return_zero_for_variable_absent_from_registry(self):
        assert (N + 1).extract({"z": 2}).is_zero

    def truncate__should_keep_terms_within_group_degree_bounds(self):
        poly = (X + Y + 1) ** 3
        truncated = poly.truncate({("x", "y"): 1})
        assert truncated == X * 3 + Y * 3 + 1

    def mul_truncated__should_equal_truncation_of_full_product(self):
        left = (X + Y * 2 + N) ** 2
        right = (X - Y + 3) ** 2
        bounds = {("x",): 2, ("y",): 1}
        assert left.mul_truncated(right, bounds) == (left * right).truncate(bounds)

    def equality__should_ignore_registry_differences(self):
        wide = ExactPoly.from_terms([({"N": 1, "x": 0}, 2)])
        assert wide == N * 2
        assert hash(wide) == hash(N * 2)

    def json_terms__should_encode_coefficients_as_exact_rationals(self):
        poly = ExactPoly.monomial({"N": -1}, Fraction(-3, 2)) + 1
        encoded = poly.to_json_terms()
        assert encoded == [{"exps": {"N": -1}, "coeff": "-3/2"}, {"exps": {}, "coeff": "1/1"}]
        assert ExactPoly.from_json_terms(encoded) == poly

    @staticmethod
    def random_poly(rng: random.Random, terms: int = 4) -> ExactPoly:
        return ExactPoly.from_terms(
            (
                {"N": rng.randint(-2, 2), "x": rng.randint(0, 3), "z": rng.randint(0, 3)},
                Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
            )
            for _ in range(rng.randint(0, terms))
        )

    @pytest.mark.parametrize("seed", [3, 11, 2024])
    def arithmetic__should_be_associative_and_distributive_on_random_polynomials(self, seed):
        rng = random.Random(seed)
        for _ in range(40):
            a, b, c = (self.random_poly(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert (a - b) + b == a

    @pytest.mark.parametrize("seed", [5, 17])
    def substitute__should_commute_with_multiplication(self, seed):
        rng = random.Random(seed)
        for _ in range(30):
            a, b = self.random_poly(rng), self.random_poly(rng)
            replacement = ExactPoly.from_terms(
                ({"N": rng.randint(-1, 1), "y": rng.randint(0, 2)}, rng.randint(-3, 3)) for _ in range(2)
            )
            assert (a * b).substitute("x", replacement) == a.substitute("x", replacement) * b.substitute(
                "x", replacement
            )

    @pytest.mark.parametrize("seed", [5, 17])
    def truncate__should_be_idempotent_and_agree_with_truncated_multiplication(self, seed):
        rng = random.Random(seed)
        bounds = {("x", "z"): 3}
        for _ in range(30):
            a, b = self.random_poly(rng), self.random_poly(rng)
            once = a.truncate(bounds)
            assert once.truncate(bounds) == once
            assert (a * b).truncate(bounds) == a.mul_truncated(b, bounds)
