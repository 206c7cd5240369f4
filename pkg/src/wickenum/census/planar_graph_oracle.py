from collections import Counter
from functools import lru_cache
from math import factorial

from wickenum.census.graph_canonizer import automorphism_order
from wickenum.census.graph_generator import generate_graphs
from wickenum.census.planarity import is_planar
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.graph_filter import GraphFilter


@lru_cache(maxsize=None)
def _planar_distribution(n: int) -> tuple[tuple[int, int], ...]:
    # each class on n vertices has n!/|Aut| labelled copies
    counts: Counter = Counter()
    for graph in generate_graphs(n, GraphFilter.CONNECTED):
        if is_planar(graph):
            counts[graph.edge_count - n + 2] += factorial(n) // automorphism_order(graph)
    return tuple(sorted(counts.items()))


def p_distribution(n: int) -> dict[int, int]:
    """Labelled connected planar graphs on n vertices, keyed by the face count r = e - n + 2."""
    DeskScaleLimits.ensure_within("planar_oracle_vertices", n)
    return dict(_planar_distribution(n))


def p_oracle(n: int, r: int) -> int:
    return p_distribution(n).get(r, 0)


def p_total(n: int) -> int:
    return sum(p_distribution(n).values())
