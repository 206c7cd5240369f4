from itertools import combinations

import networkx as nx
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from wickenum.digraph.edge_set import EdgeSet


class SimpleGraph(BaseModel):
    """Simple undirected graph on vertices 0..n-1; edges are stored as sorted pairs (u, v) with u < v."""

    model_config = ConfigDict(frozen=True)

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    # noinspection PyNestedDecorators
    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, value) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(tuple(sorted(edge)) for edge in value))

    @model_validator(mode="after")
    def validate_simple(self) -> "SimpleGraph":
        if self.n < 0:
            raise ValueError(f"Vertex count must be nonnegative, got {self.n}")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError(f"Multi-edges are not allowed: {self.edges}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"Loops are not allowed: ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"Edge ({u}, {v}) is outside 0..{self.n - 1}")
        return self

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n=n, edges=combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n=n, edges=[(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n=n, edges=[(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        order = {node: index for index, node in enumerate(sorted(graph.nodes))}
        return cls(n=len(order), edges=[(order[u], order[v]) for u, v in graph.edges])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(vertex_neighbours) for vertex_neighbours in neighbours)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(neighbours) for neighbours in self.adjacency)

    def is_nimple(self) -> bool:
        """No vertex of degree 0."""
        return all(self.degrees())

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def has_bridge(self) -> bool:
        return nx.has_bridges(self.to_networkx())

    def components(self) -> list["SimpleGraph"]:
        """Connected components that carry at least one edge, each relabeled onto 0..k-1."""
        graph = self.to_networkx()
        return [
            SimpleGraph.from_networkx(graph.subgraph(nodes))
            for nodes in sorted(nx.connected_components(graph), key=min)
            if len(nodes) > 1
        ]

    def relabeled(self, permutation: tuple[int, ...] | list[int]) -> "SimpleGraph":
        """Vertex v becomes permutation[v]."""
        return SimpleGraph(n=self.n, edges=[(permutation[u], permutation[v]) for u, v in self.edges])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def doubled(self) -> EdgeSet:
        """Both orientations of every edge, on the complete digraph with vertex v shifted to v + 1."""
        return EdgeSet.from_edges(
            max(self.n, 1), [(u + 1, v + 1) for u, v in self.edges] + [(v + 1, u + 1) for u, v in self.edges]
        )

    def graph6(self) -> str:
        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode("ascii").strip()
