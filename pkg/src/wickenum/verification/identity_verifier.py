import asyncio
from typing import Callable

from sympy.utilities.iterables import partitions

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.census.census_rhs import rhs_main2, rhs_main7
from wickenum.common_domain.engine_errors import ScaleExceeded
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.messages.ErrorMessages import ErrorMessages
from wickenum.common_domain.run_config import RunConfig
from wickenum.common_domain.validation_error import WickenumValidationError
from wickenum.common_domain.verification_report import CoefficientMismatch, VerificationReport
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.fatgraph.map_counter import verify_bipz
from wickenum.fatgraph.relevant_pair_enumerator import rhs_main3
from wickenum.iharaselberg.necklaces import coin_lemma_check, witt_product, witt_target
from wickenum.iharaselberg.selberg_product import verify_prr
from wickenum.integrands.integrand_builder import specialize_eta
from wickenum.integrands.integrand_integrator import integrate_spec
from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.verification.planar_convergence import (
    DEFAULT_CONVERGENCE_MAX_EDGES,
    DEFAULT_CONVERGENCE_N_MAX,
    PlanarConvergenceHarness,
)
from wickenum.verification.verification_report_builder import VerificationReportBuilder

logger = get_logger(__name__)

DEFAULT_MAX_EDGES = 4
DEFAULT_BIPZ_DEGREES = [2, 3, 4]
DEFAULT_BIPZ_Z_ORDER = 2
DEFAULT_M_DEGREE = 6
DEFAULT_PRR_DIMENSION = 3
DEFAULT_COIN_TOTALS = (2, 7)
WITT_VARIABLE_COUNTS = (1, 2, 3)

Side = Callable[[], object]


class IdentityVerifier:
    def __init__(self, jobs: int = 1, s_of_n_selector: str = "sqrt", log_level: int = None):
        """
        :param jobs: how many sides of an identity may be computed at once, each in a worker thread.
        :param s_of_n_selector: growth function handed to the planar convergence harness.
        :param log_level: optional parameter for logging. For now really just used for TRACE logging.
        """
        self.jobs = max(1, jobs)
        self.s_of_n_selector = s_of_n_selector
        self.log_level = log_level
        self.logger = logger.getChild(self.__class__.__name__)
        if log_level is not None:
            self.logger.setLevel(log_level)

    async def verify(self, identity: IdentityKind, cfg: RunConfig) -> VerificationReport:
        # noinspection PyUnresolvedReferences
        self.logger.trace(f"Verifying identity {identity}")
        sides, assemble, degree_bound = self.plan(identity, cfg)
        results, errors = await self.compute_sides(sides)
        if errors:
            report = VerificationReportBuilder.build_report(
                identity, [], 0, cfg.n, degree_bound, {"failed_sides": sorted(sides.keys() - results.keys())}, errors
            )
        else:
            report = assemble(results)
        if not report.passed:
            self.logger.warning(f"Identity {identity} failed: {len(report.mismatches)} mismatching coefficients")
        return report

    async def compute_side(self, name: str, compute: Side, semaphore: asyncio.Semaphore):
        async with semaphore:
            # noinspection PyUnresolvedReferences
            async with self.logger.trace_timing(f"Computing side '{name}'"):
                return await asyncio.to_thread(compute)

    # Runs every side concurrently; a side that fails becomes an error entry, a scale violation aborts the run.
    async def compute_sides(self, sides: dict[str, Side]) -> tuple[dict[str, object], list[WickenumValidationError]]:
        semaphore = asyncio.Semaphore(self.jobs)
        names = list(sides)
        outcomes = await asyncio.gather(
            *(self.compute_side(name, sides[name], semaphore) for name in names), return_exceptions=True
        )
        results: dict[str, object] = {}
        errors: list[WickenumValidationError] = []
        for name, outcome in zip(names, outcomes):
            if isinstance(outcome, ScaleExceeded):
                raise outcome
            if isinstance(outcome, Exception):
                error_message = str(outcome) if str(outcome) else outcome.__class__.__name__
                self.logger.error(f"Side '{name}' failed: {error_message}")
                errors.append(WickenumValidationError.create(ErrorMessages.IDENTITY_SIDE_ERROR, name, error_message))
            else:
                results[name] = outcome
        return results, errors

    def plan(self, identity: IdentityKind, cfg: RunConfig) -> tuple[dict[str, Side], Callable, int | None]:
        """The independent computations of an identity, how to turn their results into a report, and its bound."""
        match identity:
            case IdentityKind.MAIN7:
                return self._plan_main7(cfg)
            case IdentityKind.MAIN3:
                return self._plan_main3(cfg)
            case IdentityKind.ICE:
                return self._plan_ice(cfg)
            case IdentityKind.MAIN2:
                return self._plan_main2(cfg)
            case IdentityKind.PRR:
                return self._plan_prr(cfg)
            case IdentityKind.BIPZ:
                return self._plan_bipz(cfg)
            case IdentityKind.COIN:
                return self._plan_coin(cfg)
            case IdentityKind.WITT:
                return self._plan_witt(cfg)
            case IdentityKind.PLANAR_CONVERGENCE:
                return self._plan_planar_convergence(cfg)
        raise ValueError(f"Unsupported identity {identity}")

    @staticmethod
    def _r_values(cfg: RunConfig, max_edges: int) -> list[int]:
        return [cfg.r] if cfg.r is not None else list(range(max_edges // 2 + 1))

    @staticmethod
    def _generating_series(r_values: list[int], side: Callable[[int], ExactPoly]) -> ExactPoly:
        """The side itself for a single r, else the sum over r of x^r times the side."""
        if len(r_values) == 1:
            return side(r_values[0])
        result = ExactPoly.zero()
        for r in r_values:
            result = result + side(r) * ExactPoly.monomial({"x": r})
        return result

    @staticmethod
    def _omega_integral(cfg: RunConfig, r: int, max_edges: int) -> ExactPoly:
        spec = IntegrandSpec(
            kind=IntegrandKind.OMEGA_R, n=cfg.n, r=r, max_edges=max_edges, pairable_only=cfg.pairable_only
        )
        return integrate_spec(spec)

    def _plan_main7(self, cfg: RunConfig):
        max_edges = cfg.max_edges if cfg.max_edges is not None else DEFAULT_MAX_EDGES
        r_values = self._r_values(cfg, max_edges)
        sides = {
            "integral": lambda: self._generating_series(r_values, lambda r: self._omega_integral(cfg, r, max_edges)),
            "census": lambda: self._generating_series(r_values, lambda r: rhs_main7(r, max_edges, cfg.n)),
        }

        def assemble(results):
            return VerificationReportBuilder.compare(
                IdentityKind.MAIN7, results["integral"], results["census"], cfg.n, max_edges, {"r": r_values}
            )

        return sides, assemble, max_edges

    def _plan_main3(self, cfg: RunConfig):
        max_edges = cfg.max_edges if cfg.max_edges is not None else DEFAULT_MAX_EDGES
        r_values = self._r_values(cfg, max_edges)
        sides = {
            "integral": lambda: self._generating_series(r_values, lambda r: self._omega_integral(cfg, r, max_edges)),
            "census": lambda: self._generating_series(r_values, lambda r: rhs_main7(r, max_edges, cfg.n)),
            "fatgraph": lambda: self._generating_series(r_values, lambda r: rhs_main3(r, max_edges, cfg.n)),
        }

        def assemble(results):
            sections = {
                "integral-vs-fatgraph": (results["integral"], results["fatgraph"]),
                "census-vs-fatgraph": (results["census"], results["fatgraph"]),
            }
            return VerificationReportBuilder.compare_sections(
                IdentityKind.MAIN3, sections, cfg.n, max_edges, {"r": r_values}
            )

        return sides, assemble, max_edges

    def _plan_ice(self, cfg: RunConfig):
        max_edges = cfg.max_edges if cfg.max_edges is not None else DEFAULT_MAX_EDGES

        def integral(kind: IntegrandKind) -> ExactPoly:
            spec = IntegrandSpec(kind=kind, n=cfg.n, max_edges=max_edges, pairable_only=cfg.pairable_only)
            return integrate_spec(spec)

        sides = {"zeta": lambda: integral(IntegrandKind.ZETA), "eta": lambda: integral(IntegrandKind.ETA)}

        def assemble(results):
            zeta, eta = results["zeta"], results["eta"]
            sections = {"x": (zeta, eta), "specialized": (specialize_eta(zeta), specialize_eta(eta))}
            return VerificationReportBuilder.compare_sections(IdentityKind.ICE, sections, cfg.n, max_edges)

        return sides, assemble, max_edges

    def _plan_main2(self, cfg: RunConfig):
        n_max = cfg.n_max if cfg.n_max is not None else cfg.n
        if n_max is None:
            raise ValueError("main2 needs n_max when N is symbolic")
        if cfg.n is not None and cfg.n > n_max:
            raise ValueError(f"main2 at N={cfg.n} needs n_max >= N, got {n_max}")

        def integral() -> ExactPoly:
            spec = IntegrandSpec(
                kind=IntegrandKind.XI,
                n=cfg.n,
                max_edges=n_max * (n_max - 1),
                pairable_only=True,
                reference_dimension=n_max,
            )
            return integrate_spec(spec) - 1

        sides = {"integral": integral, "census": lambda: rhs_main2(n_max, cfg.n)}

        def assemble(results):
            return VerificationReportBuilder.compare(
                IdentityKind.MAIN2, results["integral"], results["census"], cfg.n, n_max, {"constant": "excluded"}
            )

        return sides, assemble, n_max

    @staticmethod
    def _plan_prr(cfg: RunConfig):
        n = cfg.n if cfg.n is not None else DEFAULT_PRR_DIMENSION
        max_m_degree = cfg.max_m_degree if cfg.max_m_degree is not None else DEFAULT_M_DEGREE
        sides = {"product": lambda: verify_prr(n, max_m_degree, cfg.split)}
        return sides, lambda results: results["product"], max_m_degree

    @staticmethod
    def _plan_bipz(cfg: RunConfig):
        degrees = cfg.degrees or DEFAULT_BIPZ_DEGREES
        max_z_order = cfg.max_z_order if cfg.max_z_order is not None else DEFAULT_BIPZ_Z_ORDER
        max_m_degree = cfg.max_m_degree if cfg.max_m_degree is not None else DEFAULT_M_DEGREE
        sides = {"maps": lambda: verify_bipz(degrees, max_z_order, max_m_degree, cfg.n)}
        return sides, lambda results: results["maps"], max_m_degree

    @staticmethod
    def _coin_collections(low: int, high: int) -> list[dict[str, int]]:
        collections = []
        for total in range(low, high + 1):
            for partition in partitions(total):
                counts = sorted((part for part, repeat in partition.items() for _ in range(repeat)), reverse=True)
                collections.append({f"c{index}": count for index, count in enumerate(counts, start=1)})
        return collections

    def _plan_coin(self, cfg: RunConfig):
        low, high = cfg.total if cfg.total is not None else DEFAULT_COIN_TOTALS
        if low < 2:
            raise ValueError(f"Coin totals start at 2, got {low}")
        collections = self._coin_collections(low, high)

        def alternating_sums():
            return [coin_lemma_check(coins) for coins in collections]

        def assemble(results):
            mismatches = [
                CoefficientMismatch(monomial=coins, lhs=str(total), rhs="0", section=f"total={sum(coins.values())}")
                for coins, total in zip(collections, results["arrangements"])
                if total != 0
            ]
            return VerificationReportBuilder.build_report(
                IdentityKind.COIN, mismatches, len(collections), degree_bound=high, details={"totals": [low, high]}
            )

        return {"arrangements": alternating_sums}, assemble, high

    @staticmethod
    def _plan_witt(cfg: RunConfig):
        max_degree = cfg.max_m_degree if cfg.max_m_degree is not None else DEFAULT_M_DEGREE
        sides = {f"k={k}": (lambda k=k: witt_product(k, max_degree)) for k in WITT_VARIABLE_COUNTS}

        def assemble(results):
            sections = {name: (results[name], witt_target(k)) for name, k in zip(sides, WITT_VARIABLE_COUNTS)}
            return VerificationReportBuilder.compare_sections(IdentityKind.WITT, sections, degree_bound=max_degree)

        return sides, assemble, max_degree

    def _plan_planar_convergence(self, cfg: RunConfig):
        max_edges = cfg.max_edges if cfg.max_edges is not None else DEFAULT_CONVERGENCE_MAX_EDGES
        n_max = cfg.n_max if cfg.n_max is not None else DEFAULT_CONVERGENCE_N_MAX
        harness = PlanarConvergenceHarness(cfg.s_of_n or self.s_of_n_selector, self.log_level)
        sides = {"harness": lambda: harness.verify(max_edges, cfg.sweep, n_max)}
        return sides, lambda results: results["harness"], max_edges
