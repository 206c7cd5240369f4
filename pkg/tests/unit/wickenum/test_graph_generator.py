import pytest

from wickenum import (
    GraphFilter,
    ScaleExceeded,
    SimpleGraph,
    automorphism_order,
    canonical_form,
    generate_graphs,
    generate_graphs_up_to,
    generate_nimple_by_edges,
)
from wickenum.census.graph_canonizer import adjacency_code, is_canonical

from unit.test_util.graph_fixtures import GraphFixtures


# noinspection PyMethodMayBeStatic
class TestGraphGenerator:
    def simple_graph__should_normalize_edge_orientation_and_order(self):
        graph = SimpleGraph(n=3, edges=[(2, 0), (1, 0)])
        assert graph.edges == ((0, 1), (0, 2))
        assert graph.degrees() == (2, 1, 1)

    # fmt: off
    @pytest.mark.parametrize("n, edges", [
        (2, [(0, 0)]),
        (2, [(0, 1), (1, 0)]),
        (2, [(0, 2)]),
        (-1, []),
    ])
    # fmt: on
    def simple_graph__should_reject_non_simple_input(self, n, edges):
        with pytest.raises(ValueError):
            SimpleGraph(n=n, edges=edges)

    def simple_graph__should_report_structural_properties(self):
        assert GraphFixtures.p3().has_bridge()
        assert not GraphFixtures.k3().has_bridge()
        assert GraphFixtures.two_triangles().is_nimple()
        assert not GraphFixtures.two_triangles().is_connected()
        assert not SimpleGraph(n=3, edges=[(0, 1)]).is_nimple()
        assert GraphFixtures.k3().graph6() == "Bw"

    def doubled__should_shift_vertices_and_add_both_orientations(self):
        assert GraphFixtures.k2().doubled().edges() == [(1, 2), (2, 1)]

    def canonical_form__should_agree_on_isomorphic_relabelings(self):
        path = SimpleGraph(n=4, edges=[(0, 1), (1, 2), (2, 3)])
        relabeled = path.relabeled([2, 0, 3, 1])
        assert canonical_form(path) == canonical_form(relabeled)
        assert is_canonical(canonical_form(path))
        assert adjacency_code(canonical_form(GraphFixtures.p3())) == 3

    def canonical_form__should_separate_non_isomorphic_graphs_with_equal_degrees(self):
        hexagon = SimpleGraph.cycle(6)
        assert canonical_form(hexagon) != canonical_form(GraphFixtures.two_triangles())

    # fmt: off
    @pytest.mark.parametrize("graph, expected", [
        (GraphFixtures.k2(), 2),
        (GraphFixtures.p3(), 2),
        (GraphFixtures.k3(), 6),
        (GraphFixtures.c4(), 8),
        (GraphFixtures.k4(), 24),
        (GraphFixtures.k33(), 72),
        (GraphFixtures.two_triangles(), 72),
    ])
    # fmt: on
    def automorphism_order__should_count_graph_symmetries(self, graph, expected):
        assert automorphism_order(graph) == expected

    # fmt: off
    @pytest.mark.parametrize("n, graph_filter, expected", [
        (1, GraphFilter.ALL, 1),
        (2, GraphFilter.ALL, 2),
        (3, GraphFilter.ALL, 4),
        (4, GraphFilter.ALL, 11),
        (5, GraphFilter.ALL, 34),
        (3, GraphFilter.CONNECTED, 2),
        (4, GraphFilter.CONNECTED, 6),
        (5, GraphFilter.CONNECTED, 21),
        (4, GraphFilter.NIMPLE, 7),
    ])
    # fmt: on
    def generate_graphs__should_produce_one_graph_per_isomorphism_class(self, n, graph_filter, expected):
        graphs = generate_graphs(n, graph_filter)
        assert len(graphs) == expected
        assert len({canonical_form(graph) for graph in graphs}) == expected

    def generate_graphs__should_order_by_canonical_code(self):
        graphs = generate_graphs(3, GraphFilter.CONNECTED)
        assert graphs == [canonical_form(GraphFixtures.p3()), GraphFixtures.k3()]

    def generate_graphs_up_to__should_concatenate_vertex_counts(self):
        assert len(generate_graphs_up_to(3)) == 1 + 2 + 4

    def generate_nimple_by_edges__should_count_classes_without_isolated_vertices(self):
        by_edges = generate_nimple_by_edges(3)
        assert {edge_count: len(classes) for edge_count, classes in by_edges.items()} == {0: 1, 1: 1, 2: 2, 3: 5}
        assert all(graph.is_nimple() for graph in by_edges[3])

    def generate_graphs__should_raise_beyond_desk_scale(self):
        with pytest.raises(ScaleExceeded) as raised:
            generate_graphs(9)
        assert raised.value.limit_name == "census_vertices"
