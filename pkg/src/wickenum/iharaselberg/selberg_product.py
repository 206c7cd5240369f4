from itertools import permutations

from pydantic import BaseModel

from wickenum.algebra.exact_poly import ExactPoly, entry_symbol
from wickenum.algebra.truncated_series import TruncatedSeries
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.split_choice import SplitChoice
from wickenum.common_domain.verification_report import VerificationReport
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.iharaselberg.rotation_number import rotation_number
from wickenum.iharaselberg.transition_digraph import FIRST_HALF, SECOND_HALF, TransitionDigraph, build_dprime
from wickenum.iharaselberg.walk_enumerator import ClosedWalkD, closed_walk, enumerate_aperiodic_walks
from wickenum.integrands.integrand_builder import build_xi
from wickenum.verification.verification_report_builder import VerificationReportBuilder

logger = get_logger(__name__)


def entry_group(n: int) -> tuple[str, ...]:
    return tuple(entry_symbol(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)


def truncated_product(
    dp: TransitionDigraph, max_m_degree: int, split: SplitChoice = SplitChoice.FIRST_PAIR
) -> ExactPoly:
    """Product of (1 - rotation * weight) over aperiodic nonzero walks, dropping M-degree above max_m_degree."""
    walks = enumerate_aperiodic_walks(dp, max_m_degree)
    product = TruncatedSeries(ExactPoly.one(), {entry_group(dp.n): max_m_degree})
    factors = 0
    with logger.trace_block(f"truncated_product n={dp.n} max_m_degree={max_m_degree} split={split}"):
        for walk in walks:
            rotation = rotation_number(walk, dp, split)
            if rotation == 0:
                continue
            product = product * (ExactPoly.one() - walk.weight().scaled(rotation))
            factors += 1
    logger.debug(f"{factors} of {len(walks)} walks have nonzero rotation")
    return product.payload


def verify_prr(n: int, max_m_degree: int, split: SplitChoice | None = SplitChoice.FIRST_PAIR) -> VerificationReport:
    """
    The truncated product against the cycle-decomposition sum. With split=None both split choices are compared,
    each in its own section.
    """
    DeskScaleLimits.ensure_within("prr_dimension", n)
    dp = build_dprime(n)
    xi = build_xi(n, max_edges=max_m_degree)
    details = {"walks": len(enumerate_aperiodic_walks(dp, max_m_degree))}
    if split is not None:
        details["split"] = str(split)
        return VerificationReportBuilder.compare(
            IdentityKind.PRR, truncated_product(dp, max_m_degree, split), xi, n, max_m_degree, details
        )
    sections = {str(choice): (truncated_product(dp, max_m_degree, choice), xi) for choice in SplitChoice}
    return VerificationReportBuilder.compare_sections(IdentityKind.PRR, sections, n, max_m_degree, details)


def directed_cycles(n: int) -> list[tuple[int, ...]]:
    """Vertex-simple directed cycles of length >= 3 of the complete digraph, each starting at its least vertex."""
    cycles = []
    for length in range(3, n + 1):
        for arrangement in permutations(range(1, n + 1), length):
            if arrangement[0] == min(arrangement):
                cycles.append(arrangement)
    return sorted(cycles, key=lambda cycle: (len(cycle), cycle))


def cycle_image(dp: TransitionDigraph, cycle: tuple[int, ...]) -> ClosedWalkD:
    edges = []
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        edges.append(dp.split_edge_id(u))
        edges.append(dp.half_edge_id(FIRST_HALF, (u, v)))
        edges.append(dp.half_edge_id(SECOND_HALF, (u, v)))
    return closed_walk(dp, tuple(edges))


class BijectionCheck(BaseModel):
    matched: int
    unmatched_cycles: list[tuple[int, ...]]
    unmatched_walks: list[tuple[int, ...]]
    weight_mismatches: list[tuple[int, ...]]

    @property
    def holds(self) -> bool:
        return not (self.unmatched_cycles or self.unmatched_walks or self.weight_mismatches)


def _uses_nodes_once(dp: TransitionDigraph, walk: ClosedWalkD) -> bool:
    tails = [dp.edges[edge_id].tail for edge_id in walk.edges]
    return len(set(tails)) == len(tails)


def observation_bijection(dp: TransitionDigraph) -> BijectionCheck:
    """
    Matches the directed cycles of length >= 3 with the nonzero walks that use every edge and every joint at most
    once, and checks that matched pairs carry the same monomial.
    """
    cycles = directed_cycles(dp.n)
    walks = [walk for walk in enumerate_aperiodic_walks(dp, dp.n) if _uses_nodes_once(dp, walk)]
    by_edges = {walk.edges: walk for walk in walks}
    matched, unmatched_cycles, weight_mismatches = 0, [], []
    for cycle in cycles:
        image = cycle_image(dp, cycle)
        walk = by_edges.pop(image.edges, None)
        if walk is None:
            unmatched_cycles.append(cycle)
            continue
        expected = {entry_symbol(u, v): 1 for u, v in zip(cycle, cycle[1:] + cycle[:1])}
        if walk.entry_exponents != expected:
            weight_mismatches.append(cycle)
        matched += 1
    return BijectionCheck(
        matched=matched,
        unmatched_cycles=unmatched_cycles,
        unmatched_walks=sorted(by_edges),
        weight_mismatches=weight_mismatches,
    )
