from pydantic import BaseModel, ConfigDict

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.iharaselberg.transition_digraph import ONE, ZERO, TransitionDigraph

logger = get_logger(__name__)


def least_rotation(sequence: tuple[int, ...]) -> tuple[int, ...]:
    if not sequence:
        return sequence
    return min(sequence[shift:] + sequence[:shift] for shift in range(len(sequence)))


def minimal_period(sequence: tuple[int, ...]) -> int:
    length = len(sequence)
    for period in range(1, length):
        if length % period == 0 and sequence == sequence[period:] + sequence[:period]:
            return period
    return length


class ClosedWalkD(BaseModel):
    """An unpointed closed walk in the transition digraph, stored as its least rotation."""

    model_config = ConfigDict(frozen=True)

    edges: tuple[int, ...]
    entry_exponents: dict[str, int]  # the weight monomial; nonzero walks only
    aperiodic: bool

    @property
    def m_degree(self) -> int:
        return sum(self.entry_exponents.values())

    def weight(self) -> ExactPoly:
        return ExactPoly.monomial(self.entry_exponents)

    def transitions(self) -> list[tuple[int, int]]:
        return list(zip(self.edges, self.edges[1:] + self.edges[:1]))

    def __hash__(self):
        return hash(self.edges)


def walk_weight(dp: TransitionDigraph, edges: tuple[int, ...]) -> dict[str, int] | None:
    """Exponents of the product of transition weights around the walk; None when some transition weighs 0."""
    exponents: dict[str, int] = {}
    for edge_id, successor_id in zip(edges, edges[1:] + edges[:1]):
        weight = dp.weight(edge_id, successor_id)
        if weight == ZERO:
            return None
        if weight != ONE:
            exponents[weight] = exponents.get(weight, 0) + 1
    return exponents


def closed_walk(dp: TransitionDigraph, edges: tuple[int, ...]) -> ClosedWalkD:
    exponents = walk_weight(dp, edges)
    if exponents is None:
        raise ValueError(f"Walk {edges} has a zero-weight transition")
    canonical = least_rotation(tuple(edges))
    return ClosedWalkD(
        edges=canonical, entry_exponents=exponents, aperiodic=minimal_period(canonical) == len(canonical)
    )


def enumerate_aperiodic_walks(dp: TransitionDigraph, max_m_degree: int) -> list[ClosedWalkD]:
    """
    All aperiodic closed walks of nonzero weight whose weight has M-degree at most max_m_degree, sorted by
    (M-degree, canonical edge sequence). Every nonzero walk passes a split edge, so the search starts from those and
    counts split edges as it goes.
    """
    DeskScaleLimits.ensure_within("walk_max_m_degree", max_m_degree)
    successors = {edge.edge_id: dp.nonzero_successors(edge.edge_id) for edge in dp.edges}
    found: dict[tuple[int, ...], ClosedWalkD] = {}

    def extend(start: int, path: list[int], splits: int) -> None:
        for successor in successors[path[-1]]:
            if successor == start:
                canonical = least_rotation(tuple(path))
                if canonical not in found and minimal_period(canonical) == len(canonical):
                    found[canonical] = closed_walk(dp, canonical)
            if dp.is_split(successor):
                if splits == max_m_degree:
                    continue
                extend(start, path + [successor], splits + 1)
            else:
                extend(start, path + [successor], splits)

    with logger.trace_block(f"enumerate_aperiodic_walks n={dp.n} max_m_degree={max_m_degree}"):
        if max_m_degree >= 1:
            for edge in dp.edges:
                if dp.is_split(edge.edge_id):
                    extend(edge.edge_id, [edge.edge_id], 1)
    walks = sorted(found.values(), key=lambda walk: (walk.m_degree, walk.edges))
    logger.debug(f"{len(walks)} aperiodic nonzero walks with M-degree <= {max_m_degree}")
    return walks
