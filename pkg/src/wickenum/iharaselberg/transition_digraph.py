from pydantic import BaseModel, ConfigDict

from wickenum.algebra.exact_poly import entry_symbol
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)

# node kinds
IN = "in"
OUT = "out"
JOINT = "joint"

# edge kinds
SPLIT = "split"  # e(v): in-copy to out-copy of v
FIRST_HALF = "first_half"  # out-copy of u to the joint of {u, v}
SECOND_HALF = "second_half"  # joint of {u, v} to in-copy of v

ONE = "1"
ZERO = "0"


class TransitionEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge_id: int
    kind: str
    tail: tuple
    head: tuple
    source_edge: tuple[int, int] | None = None  # the edge (u, v) of the complete digraph this half subdivides
    vertex: int | None = None  # split edges only


class TransitionDigraph(BaseModel):
    """
    The vertex-split, edge-subdivided digraph built from the loop-free complete digraph on 1..n.

    Every vertex v becomes an in-copy and an out-copy joined by the split edge e(v); every opposite pair {u, v}
    gets one joint, through which (u, v) runs as out(u) -> joint -> in(v). Edge ids follow the global order: halves
    sorted by (pair, direction, half), split edges last by vertex. Transition weights: along a joint 1, back through
    a joint 0, from the second half of (u, v) into e(v) the entry M_u_v, from e(v) into any first half 1.
    """

    n: int
    edges: list[TransitionEdge]
    weights: dict[tuple[int, int], str]  # (edge id, successor edge id) -> "0", "1" or an entry symbol

    def successors(self, edge_id: int) -> list[int]:
        head = self.edges[edge_id].head
        return [edge.edge_id for edge in self.edges if edge.tail == head]

    def weight(self, edge_id: int, successor_id: int) -> str:
        return self.weights.get((edge_id, successor_id), ZERO)

    def nonzero_successors(self, edge_id: int) -> list[int]:
        return [successor for successor in self.successors(edge_id) if self.weight(edge_id, successor) != ZERO]

    def is_split(self, edge_id: int) -> bool:
        return self.edges[edge_id].kind == SPLIT

    def split_edge_id(self, vertex: int) -> int:
        return next(edge.edge_id for edge in self.edges if edge.kind == SPLIT and edge.vertex == vertex)

    def half_edge_id(self, kind: str, source_edge: tuple[int, int]) -> int:
        return next(edge.edge_id for edge in self.edges if edge.kind == kind and edge.source_edge == source_edge)

    def nodes(self) -> list[tuple]:
        return sorted({edge.tail for edge in self.edges} | {edge.head for edge in self.edges}, key=repr)

    def joints(self) -> list[tuple]:
        return [node for node in self.nodes() if node[0] == JOINT]


def build_dprime(n: int) -> TransitionDigraph:
    if n < 2:
        raise ValueError(f"The construction needs at least 2 vertices, got {n}")
    edges: list[TransitionEdge] = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            joint = (JOINT, (u, v))
            for tail, head in ((u, v), (v, u)):
                edges.append(
                    TransitionEdge(
                        edge_id=len(edges), kind=FIRST_HALF, tail=(OUT, tail), head=joint, source_edge=(tail, head)
                    )
                )
                edges.append(
                    TransitionEdge(
                        edge_id=len(edges), kind=SECOND_HALF, tail=joint, head=(IN, head), source_edge=(tail, head)
                    )
                )
    for v in range(1, n + 1):
        edges.append(TransitionEdge(edge_id=len(edges), kind=SPLIT, tail=(IN, v), head=(OUT, v), vertex=v))

    weights: dict[tuple[int, int], str] = {}
    by_tail: dict[tuple, list[TransitionEdge]] = {}
    for edge in edges:
        by_tail.setdefault(edge.tail, []).append(edge)
    for edge in edges:
        for successor in by_tail.get(edge.head, []):
            match edge.kind:
                case "first_half":
                    weight = ONE if successor.source_edge == edge.source_edge else ZERO
                case "second_half":
                    weight = entry_symbol(*edge.source_edge)
                case _:
                    weight = ONE
            weights[(edge.edge_id, successor.edge_id)] = weight
    logger.debug(f"transition digraph for n={n}: {len(edges)} edges")
    return TransitionDigraph(n=n, edges=edges, weights=weights)
