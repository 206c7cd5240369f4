from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from wickenum.digraph.edge_set import ClosedTrail, EdgeSet
from wickenum.digraph.eulerian_enumerator import is_eulerian


def _transition_systems(edges: list[tuple[int, int]]) -> Iterator[list[int]]:
    """
    Successor permutations on edge positions: at every vertex each entering edge is matched with a distinct
    leaving edge. Closed-trail decompositions correspond one to one with these systems.
    """
    entering: dict[int, list[int]] = {}
    leaving: dict[int, list[int]] = {}
    for position, (tail, head) in enumerate(edges):
        leaving.setdefault(tail, []).append(position)
        entering.setdefault(head, []).append(position)
    vertices = sorted(entering)
    choices = [list(permutations(leaving[vertex])) for vertex in vertices]
    successor = [0] * len(edges)
    for assignment in product(*choices):
        for vertex, outs in zip(vertices, assignment):
            for position, out in zip(entering[vertex], outs):
                successor[position] = out
        yield successor


def _cycles_of(successor: list[int]) -> list[list[int]]:
    seen = [False] * len(successor)
    cycles = []
    for start in range(len(successor)):
        if seen[start]:
            continue
        cycle = []
        position = start
        while not seen[position]:
            seen[position] = True
            cycle.append(position)
            position = successor[position]
        cycles.append(cycle)
    return cycles


@lru_cache(maxsize=16384)
def _cycle_count_distribution(dimension: int, bits: int) -> tuple[tuple[int, int], ...]:
    edge_set = EdgeSet(dimension, bits)
    if not edge_set:
        return ((0, 1),)
    if not is_eulerian(edge_set):
        return ()
    counts = Counter(len(_cycles_of(successor)) for successor in _transition_systems(edge_set.edges()))
    return tuple(sorted(counts.items()))


def transition_cycle_counts(edge_set: EdgeSet) -> Counter:
    """Number of decompositions of the edge set into r unpointed closed trails, keyed by r."""
    return Counter(dict(_cycle_count_distribution(edge_set.dimension, edge_set.bits)))


def trail_decomposition_r_values(edge_set: EdgeSet) -> set[int]:
    return set(transition_cycle_counts(edge_set))


def enumerate_trail_decompositions(edge_set: EdgeSet) -> list[tuple[ClosedTrail, ...]]:
    if not edge_set or not is_eulerian(edge_set):
        return []
    edges = edge_set.edges()
    decompositions = []
    for successor in _transition_systems(edges):
        trails = [ClosedTrail(edges=[edges[position] for position in cycle]) for cycle in _cycles_of(successor)]
        decompositions.append(tuple(sorted(trails, key=lambda trail: trail.edges)))
    return decompositions
