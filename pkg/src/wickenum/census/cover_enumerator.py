from collections import Counter

from pydantic import BaseModel, ConfigDict

from wickenum.census.graph_canonizer import automorphisms
from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.engine_errors import InvalidCover
from wickenum.digraph.cycle_decomposer import enumerate_cycle_decompositions
from wickenum.digraph.edge_set import ClosedTrail
from wickenum.digraph.trail_decomposer import transition_cycle_counts


class DirectedCycleDoubleCover(BaseModel):
    """Vertex-simple directed cycles (length >= 3) using every edge once in each direction."""

    model_config = ConfigDict(frozen=True)

    graph: SimpleGraph
    cycles: tuple[ClosedTrail, ...]


class DcdcOrbit(BaseModel):
    representative: DirectedCycleDoubleCover
    orbit_size: int
    stabilizer_order: int


def tdc_distribution(graph: SimpleGraph) -> Counter:
    """
    Trail double covers of the graph keyed by their number of (unpointed) closed trails.

    Every closed trail stays inside one component, so the distribution is the convolution of the component
    distributions; the vertex limit applies per component.
    """
    DeskScaleLimits.ensure_within("tdc_edges", graph.edge_count)
    distribution = Counter({0: 1})
    for component in graph.components():
        DeskScaleLimits.ensure_within("tdc_vertices", component.n)
        component_counts = transition_cycle_counts(component.doubled())
        combined: Counter = Counter()
        for r, count in distribution.items():
            for component_r, component_count in component_counts.items():
                combined[r + component_r] += count * component_count
        distribution = combined
    return distribution


def enumerate_tdc(graph: SimpleGraph, r: int) -> int:
    return tdc_distribution(graph).get(r, 0)


def tdc_r_values(graph: SimpleGraph) -> set[int]:
    return set(tdc_distribution(graph))


def enumerate_dcdc(graph: SimpleGraph) -> list[DirectedCycleDoubleCover]:
    DeskScaleLimits.ensure_within("dcdc_vertices", graph.n)
    if not graph.edges or graph.has_bridge():
        return []
    covers = []
    for decomposition in enumerate_cycle_decompositions(graph.doubled()):
        cycles = [ClosedTrail(edges=[(u - 1, v - 1) for u, v in cycle.edges]) for cycle in decomposition.cycles]
        covers.append(DirectedCycleDoubleCover(graph=graph, cycles=_sorted_cycles(cycles)))
    return covers


def _sorted_cycles(cycles) -> tuple[ClosedTrail, ...]:
    return tuple(sorted(cycles, key=lambda cycle: cycle.edges))


def validate_dcdc(cover: DirectedCycleDoubleCover) -> None:
    graph = cover.graph
    used: Counter = Counter()
    for cycle in cover.cycles:
        if len(cycle) < 3 or not cycle.is_vertex_simple():
            raise InvalidCover(f"cycle {list(cycle.edges)} is not a vertex-simple cycle of length >= 3")
        used.update(cycle.edges)
    expected = Counter({(u, v): 1 for u, v in graph.edges} | {(v, u): 1 for u, v in graph.edges})
    if used != expected:
        raise InvalidCover(f"cycles {[list(cycle.edges) for cycle in cover.cycles]} do not double cover {graph.edges}")


def _mapped(cover: DirectedCycleDoubleCover, mapping: dict[int, int]) -> tuple[ClosedTrail, ...]:
    return _sorted_cycles(
        ClosedTrail(edges=[(mapping[u], mapping[v]) for u, v in cycle.edges]) for cycle in cover.cycles
    )


def aut_order_with_dcdc(graph: SimpleGraph, cover: DirectedCycleDoubleCover) -> int:
    """Automorphisms of the graph that map the set of directed cycles onto itself."""
    if cover.graph != graph:
        raise InvalidCover(f"cover belongs to {cover.graph.edges}, not {graph.edges}")
    validate_dcdc(cover)
    own = _sorted_cycles(cover.cycles)
    return sum(1 for mapping in automorphisms(graph) if _mapped(cover, mapping) == own)


def dcdc_orbits(graph: SimpleGraph) -> list[DcdcOrbit]:
    """DCDCs grouped into orbits of Aut(G); orbit size times stabilizer order is |Aut(G)|."""
    mappings = automorphisms(graph)
    orbits: dict[tuple, list[DirectedCycleDoubleCover]] = {}
    for cover in enumerate_dcdc(graph):
        key = min(tuple(cycle.edges for cycle in _mapped(cover, mapping)) for mapping in mappings)
        orbits.setdefault(key, []).append(cover)
    return [
        DcdcOrbit(
            representative=members[0],
            orbit_size=len(members),
            stabilizer_order=aut_order_with_dcdc(graph, members[0]),
        )
        for _, members in sorted(orbits.items())
    ]
