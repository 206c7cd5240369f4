from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.algebra.truncated_series import TruncatedSeries, series_log
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.verification_report import VerificationReport
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.fatgraph.fat_graph import FatGraph
from wickenum.fatgraph.relevant_pair_enumerator import perfect_matchings
from wickenum.integrands.integrand_integrator import integrate_spec
from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.verification.verification_report_builder import VerificationReportBuilder

logger = get_logger(__name__)


@lru_cache(maxsize=1024)
def _connected_genus_counts(degrees: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    counts: Counter = Counter()
    for alpha in perfect_matchings(sum(degrees)):
        fat_graph = FatGraph.from_degrees(list(degrees), alpha)
        if fat_graph.component_count() == 1:
            counts[fat_graph.genus()] += 1
    return tuple(sorted(counts.items()))


def map_genus_distribution(degrees: list[int]) -> dict[int, int]:
    """
    Connected pairings of the labelled half-edges of vertices with the given degrees and fixed rotations,
    keyed by genus.
    """
    if not degrees or sum(degrees) % 2:
        return {}
    DeskScaleLimits.ensure_within("map_half_edges", sum(degrees))
    return dict(_connected_genus_counts(tuple(sorted(degrees))))


def map_count(genus: int, degrees: list[int]) -> int:
    return map_genus_distribution(degrees).get(genus, 0)


def one_vertex_genus_distribution(k: int) -> dict[int, int]:
    """Maps with one vertex of degree 2k, by genus."""
    return map_genus_distribution([2 * k])


def _z_monomials(degrees: list[int], max_z_order: int, max_m_degree: int | None):
    distinct = sorted(set(degrees))
    for counts in product(range(max_z_order + 1), repeat=len(distinct)):
        order = sum(counts)
        weighted = sum(degree * count for degree, count in zip(distinct, counts))
        if order == 0 or order > max_z_order or weighted % 2:
            continue
        if max_m_degree is not None and weighted > max_m_degree:
            continue
        yield dict(zip(distinct, counts))


def map_side_log_psi(degrees: list[int], max_z_order: int, max_m_degree: int | None = None) -> ExactPoly:
    """
    Sum over genus g and vertex counts (n_i) of N^(2-2g) prod (-z_i)^n_i / (n_i! i^n_i) times the number of
    connected genus-g maps with n_i vertices of degree i.
    """
    result = ExactPoly.zero()
    for counts in _z_monomials(degrees, max_z_order, max_m_degree):
        vertex_degrees = [degree for degree, count in counts.items() for _ in range(count)]
        weight = Fraction(1)
        for degree, count in counts.items():
            weight *= Fraction((-1) ** count, factorial(count) * degree**count)
        monomial = {f"z_{degree}": count for degree, count in counts.items() if count}
        for genus, maps in map_genus_distribution(vertex_degrees).items():
            result = result + ExactPoly.monomial({**monomial, "N": 2 - 2 * genus}, weight * maps)
    return result


def weighted_z_degree(monomial: dict[str, int]) -> int:
    return sum(int(name.split("_")[1]) * exponent for name, exponent in monomial.items() if name.startswith("z_"))


def log_psi_integral(degrees: list[int], max_z_order: int, max_m_degree: int) -> ExactPoly:
    """log of the symbolic-N integral of psi, keeping only terms of weighted z-degree <= max_m_degree."""
    spec = IntegrandSpec(
        kind=IntegrandKind.PSI, n=None, degrees=degrees, max_z_order=max_z_order, max_edges=max_m_degree
    )
    integral = integrate_spec(spec)
    z_group = tuple(f"z_{degree}" for degree in sorted(set(degrees)))
    logged = series_log(TruncatedSeries(integral, {z_group: max_z_order})).payload
    return ExactPoly.from_terms(
        (monomial, value) for monomial, value in logged.items() if weighted_z_degree(monomial) <= max_m_degree
    )


def verify_bipz(
    degrees: list[int], max_z_order: int, max_m_degree: int, n: int | None = None
) -> VerificationReport:
    """Coefficientwise comparison of the logged matrix integral with the map-count expansion."""
    with logger.trace_block(f"verify_bipz degrees={degrees} z<={max_z_order} m<={max_m_degree}"):
        lhs = log_psi_integral(degrees, max_z_order, max_m_degree)
        rhs = map_side_log_psi(degrees, max_z_order, max_m_degree)
    return VerificationReportBuilder.compare(
        IdentityKind.BIPZ,
        lhs,
        rhs,
        n=n,
        degree_bound=max_m_degree,
        details={"degrees": sorted(set(degrees)), "max_z_order": max_z_order},
    )
