import math
from fractions import Fraction
from functools import lru_cache

from pydantic import BaseModel

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.algebra.truncated_series import TruncatedSeries, series_log
from wickenum.census.planar_graph_oracle import p_distribution
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.convergence_verdict import ConvergenceVerdict
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.verification_report import CoefficientMismatch, VerificationReport
from wickenum.common_util.exact_codec import ExactCodec
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.integrands.integrand_builder import specialize_eta
from wickenum.integrands.integrand_integrator import integrate_spec
from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.verification.verification_report_builder import VerificationReportBuilder

logger = get_logger(__name__)

RATIO_WINDOW = (Fraction(1, 5), Fraction(4, 5))
DEFAULT_CONVERGENCE_MAX_EDGES = 6
DEFAULT_CONVERGENCE_N_MAX = 4


def s_of_n(selector: str, n: int) -> int:
    """Growth function for the claimed range of edge counts: sqrt, log or const:k."""
    match selector.split(":", 1):
        case ["sqrt"]:
            return math.isqrt(n)
        case ["log"]:
            return max(1, math.floor(math.log(n)))
        case ["const", value]:
            return int(value)
    raise ValueError(f"Unknown s(N) selector '{selector}'")


@lru_cache(maxsize=None)
def log_eta_integral(max_edges: int) -> ExactPoly:
    """log of the symbolic-N integral of eta with x -> N z / y, over doubled carriers of at most max_edges edges."""
    DeskScaleLimits.ensure_within("convergence_max_edges", max_edges)
    spec = IntegrandSpec(kind=IntegrandKind.ETA, n=None, max_edges=max_edges, pairable_only=True)
    integral = specialize_eta(integrate_spec(spec))
    return series_log(TruncatedSeries(integral, {("z", "y"): max_edges // 2})).payload


def planar_coefficient(logged: ExactPoly, n: int, r: int) -> ExactPoly:
    """n! [z^r y^(n-2)] (log - N^2) / N^2, as a Laurent polynomial in N."""
    coefficient = logged.extract({"z": r, "y": n - 2})
    return (coefficient * ExactPoly.monomial({"N": -2})).scaled(math.factorial(n))


class ConvergenceRow(BaseModel):
    n: int
    r: int
    edges: int
    oracle: int
    values: dict[int, str]
    residuals: dict[int, str]
    ratios: dict[int, str | None]  # keyed by the smaller N of each (N, 2N) pair
    within_claimed_order: dict[int, bool]
    verdict: ConvergenceVerdict

    @property
    def is_tree_row(self) -> bool:
        return self.r == 1 and self.n >= 2


class PlanarConvergenceHarness:
    def __init__(self, s_of_n_selector: str = "sqrt", log_level: int = None):
        s_of_n(s_of_n_selector, 1)
        self.s_of_n_selector = s_of_n_selector
        self.logger = logger.getChild(self.__class__.__name__)
        if log_level is not None:
            self.logger.setLevel(log_level)

    @staticmethod
    def classify(residuals: list[Fraction], ratios: list[Fraction | None], sweep_size: int) -> ConvergenceVerdict:
        if sweep_size < 2:
            return ConvergenceVerdict.INSUFFICIENT_SWEEP
        if all(residual == 0 for residual in residuals):
            return ConvergenceVerdict.CONVERGING
        magnitudes = [abs(residual) for residual in residuals]
        decreasing = all(later < earlier for earlier, later in zip(magnitudes, magnitudes[1:]))
        in_window = all(ratio is not None and RATIO_WINDOW[0] <= ratio <= RATIO_WINDOW[1] for ratio in ratios)
        if decreasing and in_window:
            return ConvergenceVerdict.CONVERGING
        return ConvergenceVerdict.NOT_CONVERGING

    def rows(self, max_edges: int, sweep: list[int], n_max: int = DEFAULT_CONVERGENCE_N_MAX) -> list[ConvergenceRow]:
        sweep = sorted(set(sweep))
        if any(dimension < 1 for dimension in sweep):
            raise ValueError(f"Swept dimensions must be positive, got {sweep}")
        DeskScaleLimits.ensure_within("sweep_dimension", max(sweep, default=0))
        edge_bound = max_edges // 2
        # noinspection PyUnresolvedReferences
        with self.logger.trace_block(f"planar convergence rows max_edges={max_edges} sweep={sweep}"):
            logged = log_eta_integral(max_edges)
            rows = []
            for n in range(1, n_max + 1):
                for r, oracle in sorted(p_distribution(n).items()):
                    edges = n + r - 2
                    if edges > edge_bound:
                        continue
                    rows.append(self._row(logged, n, r, edges, oracle, sweep))
        return rows

    def _row(self, logged: ExactPoly, n: int, r: int, edges: int, oracle: int, sweep: list[int]) -> ConvergenceRow:
        within = {dimension: edges <= s_of_n(self.s_of_n_selector, dimension) for dimension in sweep}
        if n < 2:
            # no negative power of y occurs in the integral
            return ConvergenceRow(
                n=n,
                r=r,
                edges=edges,
                oracle=oracle,
                values={},
                residuals={},
                ratios={},
                within_claimed_order=within,
                verdict=ConvergenceVerdict.UNREACHABLE,
            )
        coefficient = planar_coefficient(logged, n, r)
        values = {dimension: coefficient.specialize("N", dimension).constant_term for dimension in sweep}
        residuals = {dimension: value - oracle for dimension, value in values.items()}
        ratios: dict[int, Fraction | None] = {}
        for dimension in sweep:
            if 2 * dimension in residuals:
                base = residuals[dimension]
                ratios[dimension] = residuals[2 * dimension] / base if base else None
        verdict = self.classify(list(residuals.values()), list(ratios.values()), len(sweep))
        return ConvergenceRow(
            n=n,
            r=r,
            edges=edges,
            oracle=oracle,
            values={dimension: ExactCodec.encode_rational(value) for dimension, value in values.items()},
            residuals={dimension: ExactCodec.encode_rational(value) for dimension, value in residuals.items()},
            ratios={
                dimension: None if ratio is None else ExactCodec.encode_rational(ratio)
                for dimension, ratio in ratios.items()
            },
            within_claimed_order=within,
            verdict=verdict,
        )

    def verify(self, max_edges: int, sweep: list[int], n_max: int = DEFAULT_CONVERGENCE_N_MAX) -> VerificationReport:
        """Passes when every tree row (r = 1, n >= 2) converges; the other rows are reported only."""
        rows = self.rows(max_edges, sweep, n_max)
        tree_rows = [row for row in rows if row.is_tree_row]
        mismatches = [
            CoefficientMismatch(
                monomial={"z": row.r, "y": row.n - 2},
                lhs=row.values.get(max(sweep), "") if row.values else "",
                rhs=str(row.oracle),
                section=f"n={row.n},r={row.r}",
            )
            for row in tree_rows
            if row.verdict != ConvergenceVerdict.CONVERGING
        ]
        if not tree_rows:
            self.logger.warning(f"No tree row fits within max_edges={max_edges}; nothing to judge")
            mismatches.append(CoefficientMismatch(monomial={}, lhs="", rhs="", section="no tree rows"))
        if mismatches:
            self.logger.warning(f"{len(mismatches)} planar rows failed to converge over sweep {sweep}")
        return VerificationReportBuilder.build_report(
            IdentityKind.PLANAR_CONVERGENCE,
            mismatches,
            len(rows),
            degree_bound=max_edges,
            details={
                "sweep": sorted(set(sweep)),
                "s_of_n": self.s_of_n_selector,
                "rows": [row.model_dump(mode="json") for row in rows],
            },
        )
