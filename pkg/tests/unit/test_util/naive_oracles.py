from collections import Counter
from itertools import combinations

import networkx as nx


class NaiveOracles:
    """Slow reference implementations, small enough to check by eye."""

    @staticmethod
    def count_pairings(items: list[tuple[int, int]]) -> int:
        if not items:
            return 1
        first, rest = items[0], items[1:]
        total = 0
        for position, item in enumerate(rest):
            if item == (first[1], first[0]):
                total += NaiveOracles.count_pairings(rest[:position] + rest[position + 1 :])
        return total

    @staticmethod
    def eulerian_subsets(dimension: int, max_edges: int, include_loops: bool = False) -> set[frozenset]:
        edges = [
            (i, j)
            for i in range(1, dimension + 1)
            for j in range(1, dimension + 1)
            if include_loops or i != j
        ]
        found = set()
        for size in range(max_edges + 1):
            for chosen in combinations(edges, size):
                out_degree = Counter(i for i, _ in chosen)
                in_degree = Counter(j for _, j in chosen)
                if out_degree == in_degree:
                    found.add(frozenset(chosen))
        return found

    @staticmethod
    def labelled_planar_distribution(n: int) -> dict[int, int]:
        pairs = list(combinations(range(n), 2))
        counts = Counter()
        for mask in range(1 << len(pairs)):
            graph = nx.Graph()
            graph.add_nodes_from(range(n))
            graph.add_edges_from(pair for index, pair in enumerate(pairs) if mask >> index & 1)
            if nx.is_connected(graph) and nx.check_planarity(graph)[0]:
                counts[graph.number_of_edges() - n + 2] += 1
        return dict(counts)
