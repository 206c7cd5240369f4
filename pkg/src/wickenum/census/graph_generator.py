from functools import lru_cache

from wickenum.census.graph_canonizer import adjacency_code, canonical_form
from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.graph_filter import GraphFilter
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)


def _class_order(graph: SimpleGraph) -> tuple[int, int]:
    return graph.n, adjacency_code(graph)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[SimpleGraph, ...]:
    # every graph on n vertices is a graph on n - 1 vertices plus one vertex joined to some subset
    if n == 0:
        return (SimpleGraph(n=0),)
    classes: dict[tuple, SimpleGraph] = {}
    with logger.trace_block(f"vertex augmentation to {n} vertices"):
        for base in _all_classes(n - 1):
            for mask in range(1 << (n - 1)):
                edges = base.edges + tuple((vertex, n - 1) for vertex in range(n - 1) if mask >> vertex & 1)
                canonical = canonical_form(SimpleGraph(n=n, edges=edges))
                classes.setdefault(canonical.edges, canonical)
    logger.debug(f"{len(classes)} isomorphism classes on {n} vertices")
    return tuple(sorted(classes.values(), key=_class_order))


def _passes(graph: SimpleGraph, graph_filter: GraphFilter) -> bool:
    match graph_filter:
        case GraphFilter.CONNECTED:
            return graph.is_connected()
        case GraphFilter.NIMPLE:
            return graph.is_nimple()
    return True


def generate_graphs(n: int, graph_filter: GraphFilter = GraphFilter.ALL) -> list[SimpleGraph]:
    """One canonical representative per isomorphism class on exactly n vertices, ordered by canonical code."""
    DeskScaleLimits.ensure_within("census_vertices", n)
    return [graph for graph in _all_classes(n) if _passes(graph, graph_filter)]


def generate_graphs_up_to(n_max: int, graph_filter: GraphFilter = GraphFilter.ALL) -> list[SimpleGraph]:
    DeskScaleLimits.ensure_within("census_vertices", n_max)
    return [graph for n in range(1, n_max + 1) for graph in generate_graphs(n, graph_filter)]


@lru_cache(maxsize=None)
def _nimple_by_edges(edge_count: int) -> tuple[SimpleGraph, ...]:
    # removing an edge from a nimple graph and dropping the vertices it isolates gives a nimple graph with one edge
    # fewer, so adding an edge in all three ways (old-old, old-new, new-new) reaches every class
    if edge_count == 0:
        return (SimpleGraph(n=0),)
    classes: dict[tuple, SimpleGraph] = {}
    for base in _nimple_by_edges(edge_count - 1):
        n = base.n
        present = set(base.edges)
        candidates = [
            SimpleGraph(n=n, edges=base.edges + ((u, v),))
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in present
        ]
        candidates.extend(SimpleGraph(n=n + 1, edges=base.edges + ((u, n),)) for u in range(n))
        candidates.append(SimpleGraph(n=n + 2, edges=base.edges + ((n, n + 1),)))
        for candidate in candidates:
            canonical = canonical_form(candidate)
            classes.setdefault((canonical.n, canonical.edges), canonical)
    return tuple(sorted(classes.values(), key=_class_order))


def generate_nimple_by_edges(max_edge_count: int) -> dict[int, list[SimpleGraph]]:
    """Nimple classes keyed by edge count 0..max_edge_count; the empty graph is the only class with no edges."""
    DeskScaleLimits.ensure_within("census_max_edges", max_edge_count)
    return {edge_count: list(_nimple_by_edges(edge_count)) for edge_count in range(max_edge_count + 1)}
