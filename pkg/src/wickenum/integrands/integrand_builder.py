from functools import lru_cache
from itertools import product

from wickenum.algebra.exact_poly import ExactPoly, entry_symbol
from wickenum.algebra.truncated_series import TruncatedSeries, series_exp
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.digraph.cycle_decomposer import count_cycle_decompositions
from wickenum.digraph.edge_set import EdgeSet
from wickenum.digraph.eulerian_enumerator import components, enumerate_eulerian, enumerate_symmetric
from wickenum.digraph.trail_decomposer import trail_decomposition_r_values

logger = get_logger(__name__)


@lru_cache(maxsize=32)
def eulerian_carriers(
    dimension: int, max_edges: int, pairable_only: bool = False, initial_support_only: bool = False
) -> tuple[EdgeSet, ...]:
    """
    The shared carrier pass for omega, zeta and eta, so that every builder sums over the same edge sets.
    """
    DeskScaleLimits.ensure_within("integrand_dimension", dimension)
    DeskScaleLimits.ensure_within("integrand_max_edges", max_edges)
    max_edges = min(max_edges, dimension * (dimension - 1))
    with logger.trace_block(f"carrier pass n={dimension} max_edges={max_edges} pairable_only={pairable_only}"):
        if pairable_only:
            carriers = tuple(enumerate_symmetric(dimension, max_edges, initial_support_only))
        else:
            carriers = tuple(enumerate_eulerian(dimension, max_edges, initial_support_only=initial_support_only))
    logger.debug(f"{len(carriers)} carriers for n={dimension}, max_edges={max_edges}")
    return carriers


def _carrier_term(carrier: EdgeSet, scalars: dict[str, int]) -> dict[str, int]:
    exponents = carrier.entry_exponents()
    exponents.update({name: power for name, power in scalars.items() if power})
    return exponents


def build_omega(
    n: int, r: int, max_edges: int, pairable_only: bool = False, initial_support_only: bool = False
) -> ExactPoly:
    """Sum of y^(|q|/2) prod M_e over carriers q that split into exactly r closed trails."""
    if max_edges % 2:
        raise ValueError(f"max_edges must be even, got {max_edges}")
    if r == 0:
        return ExactPoly.one()
    terms = [
        (_carrier_term(carrier, {"y": len(carrier) // 2}), 1)
        for carrier in eulerian_carriers(n, max_edges, pairable_only, initial_support_only)
        if carrier and r in trail_decomposition_r_values(carrier)
    ]
    return ExactPoly.from_terms(terms)


def build_zeta(n: int, max_edges: int, pairable_only: bool = False, initial_support_only: bool = False) -> ExactPoly:
    terms = []
    for carrier in eulerian_carriers(n, max_edges, pairable_only, initial_support_only):
        for r in sorted(trail_decomposition_r_values(carrier)):
            terms.append((_carrier_term(carrier, {"x": r, "y": len(carrier) // 2}), 1))
    return ExactPoly.from_terms(terms)


def component_weight(carrier: EdgeSet) -> list[int]:
    """Coefficients in x of prod over components C of (x + x^2 + ... + x^(|C|/2))."""
    weight = [1]
    for component in components(carrier):
        factor = [0] + [1] * (len(component) // 2)
        expanded = [0] * (len(weight) + len(factor) - 1)
        for i, a in enumerate(weight):
            if a:
                for j, b in enumerate(factor):
                    expanded[i + j] += a * b
        weight = expanded
    return weight


def build_eta(n: int, max_edges: int, pairable_only: bool = False, initial_support_only: bool = False) -> ExactPoly:
    terms = []
    for carrier in eulerian_carriers(n, max_edges, pairable_only, initial_support_only):
        for power, coefficient in enumerate(component_weight(carrier)):
            if coefficient:
                terms.append((_carrier_term(carrier, {"x": power, "y": len(carrier) // 2}), coefficient))
    return ExactPoly.from_terms(terms)


def specialize_eta(eta: ExactPoly) -> ExactPoly:
    """x -> N z / y."""
    return eta.substitute("x", ExactPoly.monomial({"N": 1, "z": 1, "y": -1}))


def build_xi(
    n: int, max_edges: int | None = None, pairable_only: bool = False, initial_support_only: bool = False
) -> ExactPoly:
    """Sum over even carriers of (number of decompositions into cycles of length >= 3) prod M_e; includes 1."""
    DeskScaleLimits.ensure_within("integrand_dimension", n)
    if max_edges is None:
        max_edges = n * (n - 1)
    max_edges = min(max_edges, n * (n - 1))
    if pairable_only:
        carriers = enumerate_symmetric(n, max_edges, initial_support_only)
    else:
        carriers = enumerate_eulerian(n, max_edges, initial_support_only=initial_support_only)
    terms = []
    with logger.trace_block(f"build_xi n={n} max_edges={max_edges}"):
        for carrier in carriers:
            decompositions = count_cycle_decompositions(carrier) if carrier else 1
            if decompositions:
                terms.append((carrier.entry_exponents(), decompositions))
    return ExactPoly.from_terms(terms)


def trace_power(n: int, degree: int) -> ExactPoly:
    """Tr M^degree as the sum over pointed closed walks of the given length (loops included)."""
    terms: dict[tuple[int, ...], int] = {}
    for walk in product(range(1, n + 1), repeat=degree):
        steps = tuple(sorted(zip(walk, walk[1:] + walk[:1])))
        terms[steps] = terms.get(steps, 0) + 1
    polys = []
    for steps, count in terms.items():
        exponents: dict[str, int] = {}
        for i, j in steps:
            symbol = entry_symbol(i, j)
            exponents[symbol] = exponents.get(symbol, 0) + 1
        polys.append((exponents, count))
    return ExactPoly.from_terms(polys)


def psi_bounds(n: int, degrees: list[int], max_z_order: int, max_m_degree: int | None) -> dict:
    bounds: dict = {tuple(f"z_{degree}" for degree in sorted(set(degrees))): max_z_order}
    if max_m_degree is not None:
        bounds[tuple(entry_symbol(i, j) for i in range(1, n + 1) for j in range(1, n + 1))] = max_m_degree
    return bounds


def build_psi_truncated(n: int, degrees: list[int], max_z_order: int, max_m_degree: int | None = None) -> ExactPoly:
    """exp(-N sum_i z_i Tr(M^i) / i), truncated in total z-order and, optionally, in matrix-entry degree."""
    DeskScaleLimits.ensure_within("integrand_dimension", n)
    DeskScaleLimits.ensure_within("psi_max_m_degree", max_m_degree)
    bounds = psi_bounds(n, degrees, max_z_order, max_m_degree)
    argument = ExactPoly.zero()
    for degree in sorted(set(degrees)):
        if max_m_degree is not None and degree > max_m_degree:
            continue
        coefficient = ExactPoly.monomial({"N": 1, f"z_{degree}": 1}).scaled(-1) / degree
        argument = argument + coefficient * trace_power(n, degree)
    with logger.trace_block(f"build_psi_truncated n={n} degrees={sorted(set(degrees))} z<={max_z_order}"):
        return series_exp(TruncatedSeries(argument, bounds)).payload
