from fractions import Fraction

import pytest

from wickenum import ConvergenceVerdict, ExactPoly, IdentityKind, PlanarConvergenceHarness, ScaleExceeded
from wickenum.verification.planar_convergence import log_eta_integral, planar_coefficient, s_of_n

N = ExactPoly.variable("N")


# noinspection PyMethodMayBeStatic
class TestPlanarConvergence:
    # fmt: off
    @pytest.mark.parametrize("selector, n, expected", [
        ("sqrt", 10, 3),
        ("sqrt", 64, 8),
        ("log", 10, 2),
        ("log", 1, 1),
        ("const:3", 100, 3),
    ])
    # fmt: on
    def s_of_n__should_evaluate_growth_selector(self, selector, n, expected):
        assert s_of_n(selector, n) == expected

    def s_of_n__should_reject_unknown_selector(self):
        with pytest.raises(ValueError):
            s_of_n("cube", 8)

    def constructor__should_reject_unknown_selector(self):
        with pytest.raises(ValueError):
            PlanarConvergenceHarness("cube")

    def log_eta_integral__should_have_expected_low_order_coefficients(self):
        logged = log_eta_integral(4)
        assert logged.extract({"z": 1, "y": 0}) == N * (N - 1) / 2
        assert logged.extract({"z": 2, "y": 0}) == -N * (N - 1) / 4
        assert logged.extract({"z": 1, "y": 1}) == (N - 1) * (N - 2) / 2

    def planar_coefficient__should_approach_tree_count_with_order_one_over_n(self):
        coefficient = planar_coefficient(log_eta_integral(4), 2, 1)
        assert coefficient == 1 - ExactPoly.monomial({"N": -1})

    # fmt: off
    @pytest.mark.parametrize("residuals, ratios, sweep_size, expected", [
        ([Fraction(-1, 4)], [], 1, ConvergenceVerdict.INSUFFICIENT_SWEEP),
        ([Fraction(0), Fraction(0)], [None], 2, ConvergenceVerdict.CONVERGING),
        ([Fraction(1), Fraction(1, 2)], [Fraction(1, 2)], 2, ConvergenceVerdict.CONVERGING),
        ([Fraction(1), Fraction(1)], [Fraction(1)], 2, ConvergenceVerdict.NOT_CONVERGING),
        ([Fraction(1), Fraction(1, 10)], [Fraction(1, 10)], 2, ConvergenceVerdict.NOT_CONVERGING),
        ([Fraction(1), Fraction(1, 2)], [None], 2, ConvergenceVerdict.NOT_CONVERGING),
    ])
    # fmt: on
    def classify__should_judge_residual_sequences(self, residuals, ratios, sweep_size, expected):
        assert PlanarConvergenceHarness.classify(residuals, ratios, sweep_size) == expected

    def rows__should_report_residuals_and_ratios_per_planar_row(self):
        harness = PlanarConvergenceHarness()
        rows = harness.rows(4, [4, 6, 8], n_max=3)
        assert [(row.n, row.r, row.edges, row.oracle) for row in rows] == [(1, 1, 0, 1), (2, 1, 1, 1), (3, 1, 2, 3)]
        single, edge, path = rows
        assert single.verdict == ConvergenceVerdict.UNREACHABLE
        assert single.values == {}
        assert edge.residuals == {4: "-1/4", 6: "-1/6", 8: "-1/8"}
        assert edge.ratios == {4: "1/2"}
        assert edge.verdict == ConvergenceVerdict.CONVERGING
        assert path.values == {4: "9/8", 6: "5/3", 8: "63/32"}
        assert path.residuals == {4: "-15/8", 6: "-4/3", 8: "-33/32"}
        assert path.ratios == {4: "11/20"}
        assert path.within_claimed_order == {4: True, 6: True, 8: True}
        assert path.verdict == ConvergenceVerdict.CONVERGING

    def rows__should_skip_rows_beyond_the_edge_bound(self):
        rows = PlanarConvergenceHarness().rows(2, [4, 8], n_max=3)
        assert [(row.n, row.r) for row in rows] == [(1, 1), (2, 1)]

    def rows__should_reject_non_positive_sweep_dimension(self):
        with pytest.raises(ValueError):
            PlanarConvergenceHarness().rows(4, [0, 4])

    def rows__should_raise_scale_exceeded_for_large_sweep_dimension(self):
        with pytest.raises(ScaleExceeded) as raised:
            PlanarConvergenceHarness().rows(4, [4, 128])
        assert raised.value.limit_name == "sweep_dimension"

    def verify__should_pass_when_tree_rows_converge(self):
        report = PlanarConvergenceHarness().verify(4, [4, 8], n_max=3)
        assert report.passed is True
        assert report.identity == IdentityKind.PLANAR_CONVERGENCE
        assert report.degree_bound == 4
        assert report.compared_terms == 3
        assert report.details["sweep"] == [4, 8]
        assert report.details["s_of_n"] == "sqrt"
        assert len(report.details["rows"]) == 3

    def verify__should_fail_on_single_dimension_sweep(self):
        report = PlanarConvergenceHarness().verify(4, [4], n_max=3)
        assert report.passed is False
        assert [mismatch.section for mismatch in report.mismatches] == ["n=2,r=1", "n=3,r=1"]
        assert report.mismatches[1].lhs == "9/8"
        assert report.mismatches[1].rhs == "3"

    def verify__should_fail_when_no_tree_row_fits(self):
        report = PlanarConvergenceHarness().verify(4, [4, 8], n_max=1)
        assert report.passed is False
        assert report.mismatches[0].section == "no tree rows"
