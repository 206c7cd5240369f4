from typing import Iterator

from wickenum.digraph.edge_set import ClosedTrail, CycleDecomposition, EdgeSet


def _cycle_decompositions(edge_set: EdgeSet, min_len: int) -> Iterator[tuple[tuple[tuple[int, int], ...], ...]]:
    # the least unused edge (a, b) must lie on exactly one cycle of the decomposition: close it by every
    # vertex-simple path from b back to a, then recurse on what is left
    dimension = edge_set.dimension

    def successors(bits: int, vertex: int) -> list[int]:
        row = bits >> ((vertex - 1) * dimension) & ((1 << dimension) - 1)
        heads = []
        while row:
            low = row & -row
            heads.append(low.bit_length())
            row ^= low
        return heads

    def decompose(bits: int, chosen: list) -> Iterator[tuple]:
        if not bits:
            yield tuple(chosen)
            return
        least = (bits & -bits).bit_length() - 1
        start, first_head = least // dimension + 1, least % dimension + 1
        if start == first_head:
            return
        remaining = bits ^ (1 << least)
        path = [start, first_head]

        def close(vertex: int, bits_left: int) -> Iterator[tuple]:
            for head in successors(bits_left, vertex):
                edge_bit = 1 << EdgeSet.edge_id(dimension, vertex, head)
                if head == start:
                    if len(path) >= min_len:
                        cycle = tuple(zip(path, path[1:] + path[:1]))
                        chosen.append(cycle)
                        yield from decompose(bits_left ^ edge_bit, chosen)
                        chosen.pop()
                elif head not in path:
                    path.append(head)
                    yield from close(head, bits_left ^ edge_bit)
                    path.pop()

        yield from close(first_head, remaining)

    yield from decompose(edge_set.bits, [])


def enumerate_cycle_decompositions(edge_set: EdgeSet, min_len: int = 3) -> list[CycleDecomposition]:
    """All unordered partitions of the edge set into vertex-simple directed cycles of length >= min_len."""
    return [
        CycleDecomposition(cycles=[ClosedTrail(edges=cycle) for cycle in cycles])
        for cycles in _cycle_decompositions(edge_set, min_len)
    ]


def count_cycle_decompositions(edge_set: EdgeSet, min_len: int = 3) -> int:
    return sum(1 for _ in _cycle_decompositions(edge_set, min_len))


def is_even(edge_set: EdgeSet) -> bool:
    # the empty set is even: the empty union of cycles
    return next(_cycle_decompositions(edge_set, 3), None) is not None
