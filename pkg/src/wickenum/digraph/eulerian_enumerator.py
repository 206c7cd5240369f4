from itertools import combinations
from typing import Iterator

from wickenum.common_util.trace_level_logger import get_logger
from wickenum.digraph.edge_set import EdgeSet

logger = get_logger(__name__)


def is_eulerian(edge_set: EdgeSet) -> bool:
    out_degree, in_degree = edge_set.degrees()
    return out_degree == in_degree


def components(edge_set: EdgeSet) -> list[EdgeSet]:
    """Maximal weakly connected edge classes, ordered by their least edge."""
    parent: dict[int, int] = {}

    def find(vertex: int) -> int:
        parent.setdefault(vertex, vertex)
        while parent[vertex] != vertex:
            parent[vertex] = parent[parent[vertex]]
            vertex = parent[vertex]
        return vertex

    edges = edge_set.edges()
    for i, j in edges:
        root_i, root_j = find(i), find(j)
        if root_i != root_j:
            parent[max(root_i, root_j)] = min(root_i, root_j)
    grouped: dict[int, list[tuple[int, int]]] = {}
    for i, j in edges:
        grouped.setdefault(find(i), []).append((i, j))
    parts = [EdgeSet.from_edges(edge_set.dimension, group) for group in grouped.values()]
    return sorted(parts, key=lambda part: (part.bits & -part.bits).bit_length())


def enumerate_eulerian(
    dimension: int, max_edges: int, include_loops: bool = False, initial_support_only: bool = False
) -> Iterator[EdgeSet]:
    """
    Every eulerian edge subset with at most max_edges edges, each exactly once, in a deterministic order.

    Vertices are settled in increasing order: the block of vertex v holds the edges between v and later vertices
    (and its loop, when loops are included). Once v's block is chosen no later choice touches v, so v's balance is
    enforced right there. With initial_support_only, only sets touching exactly the vertices 1..k are produced.
    """
    if max_edges > dimension * dimension:
        raise ValueError(f"max_edges {max_edges} exceeds the {dimension * dimension} edges of the complete digraph")
    count = 0

    def settle(vertex: int, bits: int, size: int, balance: list[int], touched: list[bool]) -> Iterator[EdgeSet]:
        nonlocal count
        if vertex > dimension:
            count += 1
            yield EdgeSet(dimension, bits)
            return
        later = range(vertex + 1, dimension + 1)
        surplus = balance[vertex]  # in-degree minus out-degree from settled vertices
        loop_choices = (0, 1) if include_loops else (0,)
        for loop in loop_choices:
            for out_size in range(len(later) + 1):
                in_size = out_size - surplus
                if in_size < 0 or in_size > len(later) or size + loop + out_size + in_size > max_edges:
                    continue
                if initial_support_only and not (touched[vertex] or loop or out_size or in_size):
                    # an untouched vertex ends the support: nothing later may be touched
                    if not any(touched[vertex + 1 :]):
                        count += 1
                        yield EdgeSet(dimension, bits)
                    continue
                for heads in combinations(later, out_size):
                    for tails in combinations(later, in_size):
                        next_bits = bits
                        next_balance = balance[:]
                        next_touched = touched[:]
                        if loop:
                            next_bits |= 1 << EdgeSet.edge_id(dimension, vertex, vertex)
                        for head in heads:
                            next_bits |= 1 << EdgeSet.edge_id(dimension, vertex, head)
                            next_balance[head] += 1
                            next_touched[head] = True
                        for tail in tails:
                            next_bits |= 1 << EdgeSet.edge_id(dimension, tail, vertex)
                            next_balance[tail] -= 1
                            next_touched[tail] = True
                        yield from settle(
                            vertex + 1, next_bits, size + loop + out_size + in_size, next_balance, next_touched
                        )

    yield from settle(1, 0, 0, [0] * (dimension + 2), [False] * (dimension + 2))
    logger.debug(f"enumerated {count} eulerian sets on dimension {dimension} with at most {max_edges} edges")


def enumerate_symmetric(dimension: int, max_edges: int, initial_support_only: bool = False) -> Iterator[EdgeSet]:
    """Doubled simple graphs: edge sets made of opposite pairs (i, j), (j, i), with at most max_edges edges."""
    pairs = list(combinations(range(1, dimension + 1), 2))
    for pair_count in range(min(max_edges // 2, len(pairs)) + 1):
        for chosen in combinations(pairs, pair_count):
            if initial_support_only:
                support = {index for pair in chosen for index in pair}
                if support and max(support) != len(support):
                    continue
            bits = 0
            for i, j in chosen:
                bits |= 1 << EdgeSet.edge_id(dimension, i, j) | 1 << EdgeSet.edge_id(dimension, j, i)
            yield EdgeSet(dimension, bits)
