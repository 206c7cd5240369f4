from functools import lru_cache

from networkx.algorithms.isomorphism import GraphMatcher

from wickenum.census.simple_graph import SimpleGraph


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> dict[tuple[int, int], int]:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return {pair: 1 << (len(pairs) - 1 - index) for index, pair in enumerate(pairs)}


def adjacency_code(graph: SimpleGraph) -> int:
    """Upper-triangle adjacency bits read row by row, with the pair (0, 1) as the most significant bit."""
    weights = _pair_weights(graph.n)
    return sum(weights[edge] for edge in graph.edges)


def _code_under(graph: SimpleGraph, position: list[int]) -> int:
    weights = _pair_weights(graph.n)
    code = 0
    for u, v in graph.edges:
        a, b = position[u], position[v]
        code += weights[(a, b) if a < b else (b, a)]
    return code


def _refine(adjacency: tuple[frozenset[int], ...], cells: list[list[int]]) -> list[list[int]]:
    # split every cell by the multiset of cells its neighbours lie in, until stable
    while True:
        cell_of = {vertex: index for index, cell in enumerate(cells) for vertex in cell}
        refined = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for vertex in cell:
                signature = tuple(sorted(cell_of[neighbour] for neighbour in adjacency[vertex]))
                groups.setdefault(signature, []).append(vertex)
            changed = changed or len(groups) > 1
            refined.extend(groups[signature] for signature in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _are_twins(adjacency: tuple[frozenset[int], ...], cell: list[int]) -> bool:
    first = cell[0]
    return all(adjacency[first] - {other} == adjacency[other] - {first} for other in cell[1:])


def canonical_form(graph: SimpleGraph) -> SimpleGraph:
    """
    The relabelling with the least adjacency code among the orderings reached by colour refinement and
    individualisation. The candidate orderings depend only on the isomorphism class, so isomorphic graphs get
    identical forms.
    """
    if graph.n <= 1:
        return graph
    adjacency = graph.adjacency
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adjacency, cells)
        target = next((index for index, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            position = [0] * graph.n
            for index, cell in enumerate(cells):
                position[cell[0]] = index
            code = _code_under(graph, position)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, position
            return
        cell = cells[target]
        # swapping twins is an automorphism fixing the partition, so one representative suffices
        candidates = cell[:1] if _are_twins(adjacency, cell) else cell
        for vertex in candidates:
            rest = [other for other in cell if other != vertex]
            search(cells[:target] + [[vertex], rest] + cells[target + 1 :])

    search([list(range(graph.n))])
    return graph.relabeled(best[1])


def is_canonical(graph: SimpleGraph) -> bool:
    return canonical_form(graph) == graph


def automorphisms(graph: SimpleGraph) -> list[dict[int, int]]:
    nx_graph = graph.to_networkx()
    return list(GraphMatcher(nx_graph, nx_graph).isomorphisms_iter())


@lru_cache(maxsize=4096)
def automorphism_order(graph: SimpleGraph) -> int:
    nx_graph = graph.to_networkx()
    return sum(1 for _ in GraphMatcher(nx_graph, nx_graph).isomorphisms_iter())
