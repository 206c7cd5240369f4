from fractions import Fraction

from wickenum.algebra.exact_poly import ExactPoly, falling_factorial
from wickenum.census.cover_enumerator import dcdc_orbits, tdc_r_values
from wickenum.census.graph_canonizer import automorphism_order
from wickenum.census.graph_generator import generate_graphs_up_to, generate_nimple_by_edges
from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.graph_filter import GraphFilter
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)


def labelled_copy_weight(graph: SimpleGraph, symmetry: int) -> ExactPoly:
    """N(N-1)...(N-|V|+1) / (symmetry * N^e)."""
    return falling_factorial("N", graph.n) * ExactPoly.monomial({"N": -graph.edge_count}, Fraction(1, symmetry))


def _maybe_specialized(poly: ExactPoly, n: int | None) -> ExactPoly:
    return poly if n is None else poly.specialize("N", n)


def rhs_main7(r: int, max_edges: int, n: int | None = None) -> ExactPoly:
    """
    Sum over nimple classes G with a trail double cover of r closed trails and 2 e(G) <= max_edges of
    y^e(G) N(N-1)...(N-|V|+1) / (|Aut G| N^e(G)).
    """
    if r == 0:
        return ExactPoly.one()
    result = ExactPoly.zero()
    for edge_count, classes in generate_nimple_by_edges(max_edges // 2).items():
        if edge_count == 0:
            continue
        for graph in classes:
            if r in tdc_r_values(graph):
                weight = labelled_copy_weight(graph, automorphism_order(graph))
                result = result + weight * ExactPoly.monomial({"y": edge_count})
    return _maybe_specialized(result, n)


def rhs_main2(n_max: int, n: int | None = None) -> ExactPoly:
    """
    Sum over classes of (nimple G with at most n_max vertices, DCDC C) of N(N-1)...(N-|V|+1) / (|Aut(G,C)| N^e).
    The empty graph is excluded, so this is compared against the integral of xi minus its constant 1.
    """
    DeskScaleLimits.ensure_within("rhs_main2_n_max", n_max)
    result = ExactPoly.zero()
    for graph in generate_graphs_up_to(n_max, GraphFilter.NIMPLE):
        for orbit in dcdc_orbits(graph):
            result = result + labelled_copy_weight(graph, orbit.stabilizer_order)
    logger.debug(f"rhs_main2 for n_max={n_max}: {result}")
    return _maybe_specialized(result, n)
