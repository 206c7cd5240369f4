import networkx as nx
from pydantic import BaseModel

from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.engine_errors import NotConnected

_K5 = nx.complete_graph(5)
_K33 = nx.complete_bipartite_graph(3, 3)


class KuratowskiCertificate(BaseModel):
    kind: str  # "K5" or "K3,3"
    subgraph_edges: list[tuple[int, int]]


def is_planar(graph: SimpleGraph) -> bool:
    """
    Planarity by the left-right test, cross-checked against the edge bound e <= 3n - 6 that every simple planar
    graph on n >= 3 vertices satisfies.
    """
    DeskScaleLimits.ensure_within("planarity_vertices", graph.n)
    planar, _ = nx.check_planarity(graph.to_networkx())
    if planar and graph.n >= 3 and graph.edge_count > 3 * graph.n - 6:
        raise RuntimeError(f"Planarity certificates disagree for {graph.edges}")
    return planar


def faces_if_planar(graph: SimpleGraph) -> int | None:
    """Face count e - n + 2 of a connected planar graph; None when the graph is not planar."""
    if not graph.is_connected():
        raise NotConnected(list(graph.edges))
    if not is_planar(graph):
        return None
    return graph.edge_count - graph.n + 2


def _smoothed(graph: nx.Graph) -> nx.Graph:
    smoothed = nx.Graph(graph)
    smoothed.remove_nodes_from([node for node in list(smoothed.nodes) if smoothed.degree(node) == 0])
    while True:
        candidate = next(
            (
                node
                for node in smoothed.nodes
                if smoothed.degree(node) == 2 and not smoothed.has_edge(*smoothed.neighbors(node))
            ),
            None,
        )
        if candidate is None:
            return smoothed
        left, right = smoothed.neighbors(candidate)
        smoothed.remove_node(candidate)
        smoothed.add_edge(left, right)


def kuratowski_certificate(graph: SimpleGraph) -> KuratowskiCertificate | None:
    """For a non-planar graph, a subgraph that is a subdivision of K5 or K3,3; None for planar graphs."""
    DeskScaleLimits.ensure_within("planarity_vertices", graph.n)
    planar, counterexample = nx.check_planarity(graph.to_networkx(), counterexample=True)
    if planar:
        return None
    core = _smoothed(counterexample)
    edges = sorted(tuple(sorted(edge)) for edge in counterexample.edges)
    if nx.is_isomorphic(core, _K5):
        return KuratowskiCertificate(kind="K5", subgraph_edges=edges)
    if nx.is_isomorphic(core, _K33):
        return KuratowskiCertificate(kind="K3,3", subgraph_edges=edges)
    raise RuntimeError(f"Counterexample {edges} is not a Kuratowski subdivision")
