from typing import Iterator

from pydantic import BaseModel
from sympy.utilities.iterables import multiset_partitions

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.census.census_rhs import labelled_copy_weight
from wickenum.census.graph_canonizer import automorphism_order, canonical_form
from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.fatgraph.fat_graph import FatGraph, contract

logger = get_logger(__name__)


class RelevantClass(BaseModel):
    """An equivalence class of relevant pairs: all pairs whose contracted dual is isomorphic to graph."""

    graph: SimpleGraph  # canonical form of the contracted dual
    pair_count: int  # labelled (fat graph, face partition) pairs in the class
    example_sigma: tuple[int, ...]
    example_alpha: tuple[int, ...]
    example_partition: list[list[int]]


def perfect_matchings(size: int) -> Iterator[tuple[int, ...]]:
    """Fixed-point-free involutions on 0..size-1."""
    if size % 2:
        return
    alpha = [-1] * size

    def extend() -> Iterator[tuple[int, ...]]:
        try:
            first = alpha.index(-1)
        except ValueError:
            yield tuple(alpha)
            return
        for partner in range(first + 1, size):
            if alpha[partner] == -1:
                alpha[first], alpha[partner] = partner, first
                yield from extend()
                alpha[first] = alpha[partner] = -1

    yield from extend()


def _compositions(total: int, parts: int) -> Iterator[list[int]]:
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield [first] + rest


def labelled_fat_graphs(vertex_count: int, edge_count: int) -> Iterator[FatGraph]:
    """Fat graphs on labelled vertices of positive degree with the given number of edges."""
    for degrees in _compositions(2 * edge_count, vertex_count):
        for alpha in perfect_matchings(2 * edge_count):
            yield FatGraph.from_degrees(degrees, alpha)


def enumerate_relevant(r: int, n: int | None, max_edges: int) -> list[RelevantClass]:
    """
    Fat graphs W on r vertices with at most max_edges / 2 edges, paired with a partition Q of their faces into at
    most n classes such that contracting Q in the dual yields a nimple graph; grouped by that graph.
    """
    DeskScaleLimits.ensure_within("relevant_r", r)
    DeskScaleLimits.ensure_within("relevant_max_edges", max_edges)
    classes: dict[tuple, RelevantClass] = {}
    for edge_count in range(1, max_edges // 2 + 1):
        for fat_graph in labelled_fat_graphs(r, edge_count):
            dual = fat_graph.dual()
            for partition in multiset_partitions(list(range(dual.n))):
                if n is not None and len(partition) > n:
                    continue
                contracted = contract(dual, partition)
                if not contracted.is_nimple():
                    continue
                graph = canonical_form(contracted.to_simple_graph())
                key = (graph.n, graph.edges)
                if key in classes:
                    classes[key].pair_count += 1
                else:
                    classes[key] = RelevantClass(
                        graph=graph,
                        pair_count=1,
                        example_sigma=fat_graph.sigma,
                        example_alpha=fat_graph.alpha,
                        example_partition=[list(block) for block in partition],
                    )
    logger.debug(f"{len(classes)} relevant classes for r={r}, max_edges={max_edges}")
    return sorted(
        classes.values(), key=lambda relevant: (relevant.graph.edge_count, relevant.graph.n, relevant.graph.edges)
    )


def rhs_main3(r: int, max_edges: int, n: int | None = None) -> ExactPoly:
    """Sum over relevant classes of y^e N(N-1)...(N-alpha(Q)+1) / (|Aut G_Q(W*)| N^e)."""
    if r == 0:
        return ExactPoly.one()
    result = ExactPoly.zero()
    for relevant in enumerate_relevant(r, n, max_edges):
        weight = labelled_copy_weight(relevant.graph, automorphism_order(relevant.graph))
        result = result + weight * ExactPoly.monomial({"y": relevant.graph.edge_count})
    return result if n is None else result.specialize("N", n)
