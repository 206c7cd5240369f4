from typing import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from wickenum.algebra.exact_poly import entry_symbol


class EdgeSet:
    """
    Subset of the n^2 directed edges of the complete digraph on vertices 1..n, held as an int bitset.
    Edge (i, j) has id (i - 1) * n + (j - 1), so ascending ids are lexicographic (i, j) order.
    """

    __slots__ = ("dimension", "bits")

    def __init__(self, dimension: int, bits: int = 0):
        if bits >> (dimension * dimension):
            raise ValueError(f"Bitset {bits:b} has edges outside a dimension-{dimension} digraph")
        self.dimension = dimension
        self.bits = bits

    @classmethod
    def from_edges(cls, dimension: int, edges: Iterable[tuple[int, int]]) -> "EdgeSet":
        bits = 0
        for i, j in edges:
            if not (1 <= i <= dimension and 1 <= j <= dimension):
                raise ValueError(f"Edge ({i}, {j}) is outside 1..{dimension}")
            bits |= 1 << cls.edge_id(dimension, i, j)
        return cls(dimension, bits)

    @staticmethod
    def edge_id(dimension: int, i: int, j: int) -> int:
        return (i - 1) * dimension + (j - 1)

    def edge_of(self, edge_id: int) -> tuple[int, int]:
        return edge_id // self.dimension + 1, edge_id % self.dimension + 1

    def edge_ids(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def edges(self) -> list[tuple[int, int]]:
        return [self.edge_of(edge_id) for edge_id in self.edge_ids()]

    def __iter__(self):
        return iter(self.edges())

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, edge: tuple[int, int]) -> bool:
        i, j = edge
        if not (1 <= i <= self.dimension and 1 <= j <= self.dimension):
            return False
        return bool(self.bits >> self.edge_id(self.dimension, i, j) & 1)

    def _same_dimension(self, other: "EdgeSet") -> None:
        if self.dimension != other.dimension:
            raise ValueError(f"Edge sets of dimensions {self.dimension} and {other.dimension} cannot be combined")

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._same_dimension(other)
        return EdgeSet(self.dimension, self.bits | other.bits)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._same_dimension(other)
        return EdgeSet(self.dimension, self.bits & other.bits)

    def __sub__(self, other: "EdgeSet") -> "EdgeSet":
        self._same_dimension(other)
        return EdgeSet(self.dimension, self.bits & ~other.bits)

    def __eq__(self, other):
        return isinstance(other, EdgeSet) and self.dimension == other.dimension and self.bits == other.bits

    def __hash__(self):
        return hash((self.dimension, self.bits))

    def __lt__(self, other: "EdgeSet") -> bool:
        return (self.dimension, self.bits) < (other.dimension, other.bits)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({index for edge in self.edges() for index in edge}))

    def has_initial_support(self) -> bool:
        """True when the touched vertices are exactly 1..k for some k (vacuously for the empty set)."""
        support = self.vertices()
        return not support or support[-1] == len(support)

    def has_loops(self) -> bool:
        return any(i == j for i, j in self.edges())

    def is_symmetric(self) -> bool:
        return all((j, i) in self for i, j in self.edges())

    def reversed(self) -> "EdgeSet":
        return EdgeSet.from_edges(self.dimension, ((j, i) for i, j in self.edges()))

    def degrees(self) -> tuple[dict[int, int], dict[int, int]]:
        out_degree: dict[int, int] = {}
        in_degree: dict[int, int] = {}
        for i, j in self.edges():
            out_degree[i] = out_degree.get(i, 0) + 1
            in_degree[j] = in_degree.get(j, 0) + 1
        return out_degree, in_degree

    def entry_exponents(self) -> dict[str, int]:
        return {entry_symbol(i, j): 1 for i, j in self.edges()}

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.edges()]

    def __repr__(self):
        return f"EdgeSet({self.dimension}, {self.edges()})"


class ClosedTrail(BaseModel):
    """
    Circular sequence of distinct directed edges, head to tail. Stored in its lexicographically least rotation,
    so equal trails compare equal regardless of starting point.
    """

    model_config = ConfigDict(frozen=True)

    edges: tuple[tuple[int, int], ...]

    # noinspection PyNestedDecorators
    @field_validator("edges", mode="before")
    @classmethod
    def rotate_to_canonical(cls, value) -> tuple[tuple[int, int], ...]:
        sequence = [tuple(edge) for edge in value]
        if not sequence:
            return ()
        return min(tuple(sequence[start:] + sequence[:start]) for start in range(len(sequence)))

    @model_validator(mode="after")
    def validate_trail(self) -> "ClosedTrail":
        if not self.edges:
            raise ValueError("A closed trail has at least one edge")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError(f"Trail {self.edges} repeats an edge")
        for (_, head), (tail, _) in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if head != tail:
                raise ValueError(f"Trail {self.edges} is not head-to-tail consistent")
        return self

    def vertices(self) -> tuple[int, ...]:
        return tuple(tail for tail, _ in self.edges)

    def is_vertex_simple(self) -> bool:
        tails = self.vertices()
        return len(set(tails)) == len(tails)

    def reversed(self) -> "ClosedTrail":
        return ClosedTrail(edges=[(j, i) for i, j in reversed(self.edges)])

    def __len__(self):
        return len(self.edges)


class CycleDecomposition(BaseModel):
    """Edge-disjoint vertex-simple directed cycles, sorted, whose union is the carrier."""

    model_config = ConfigDict(frozen=True)

    cycles: tuple[ClosedTrail, ...]

    # noinspection PyNestedDecorators
    @field_validator("cycles", mode="after")
    @classmethod
    def sort_cycles(cls, value: tuple[ClosedTrail, ...]) -> tuple[ClosedTrail, ...]:
        for cycle in value:
            if not cycle.is_vertex_simple():
                raise ValueError(f"Cycle {cycle.edges} is not vertex-simple")
        return tuple(sorted(value, key=lambda cycle: cycle.edges))

    def carrier(self, dimension: int) -> EdgeSet:
        return EdgeSet.from_edges(dimension, (edge for cycle in self.cycles for edge in cycle.edges))

    def __len__(self):
        return len(self.cycles)
