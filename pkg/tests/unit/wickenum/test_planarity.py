import pytest

from wickenum import (
    NotConnected,
    ScaleExceeded,
    SimpleGraph,
    faces_if_planar,
    is_planar,
    kuratowski_certificate,
    p_distribution,
    p_oracle,
    p_total,
)

from unit.test_util.graph_fixtures import GraphFixtures
from unit.test_util.naive_oracles import NaiveOracles


# noinspection PyMethodMayBeStatic
class TestPlanarity:
    # fmt: off
    @pytest.mark.parametrize("graph, expected", [
        (GraphFixtures.k3(), True),
        (GraphFixtures.k4(), True),
        (GraphFixtures.k5(), False),
        (GraphFixtures.k33(), False),
        (SimpleGraph(n=0), True),
    ])
    # fmt: on
    def is_planar__should_classify_small_graphs(self, graph, expected):
        assert is_planar(graph) is expected

    def faces_if_planar__should_apply_euler_formula(self):
        assert faces_if_planar(GraphFixtures.k4()) == 4
        assert faces_if_planar(GraphFixtures.p3()) == 1
        assert faces_if_planar(GraphFixtures.k5()) is None

    def faces_if_planar__should_raise_for_disconnected_graph(self):
        with pytest.raises(NotConnected):
            faces_if_planar(GraphFixtures.two_triangles())

    def kuratowski_certificate__should_name_the_obstruction(self):
        assert kuratowski_certificate(GraphFixtures.k4()) is None
        assert kuratowski_certificate(GraphFixtures.k5()).kind == "K5"
        certificate = kuratowski_certificate(GraphFixtures.k33())
        assert certificate.kind == "K3,3"
        assert len(certificate.subgraph_edges) == 9

    def kuratowski_certificate__should_find_subdivision_inside_larger_graph(self):
        subdivided = SimpleGraph(n=6, edges=[(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])
        subdivided = SimpleGraph(n=6, edges=list(subdivided.edges) + [(0, 5), (5, 1)])
        assert kuratowski_certificate(subdivided).kind == "K5"

    # fmt: off
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    # fmt: on
    def p_distribution__should_match_brute_force_over_labelled_graphs(self, n):
        assert p_distribution(n) == NaiveOracles.labelled_planar_distribution(n)

    def p_oracle__should_give_known_counts(self):
        assert p_oracle(3, 1) == 3
        assert p_oracle(3, 2) == 1
        assert p_oracle(3, 5) == 0
        assert p_total(4) == 38
        assert [p_oracle(n, 1) for n in range(2, 7)] == [n ** (n - 2) for n in range(2, 7)]

    def p_distribution__should_raise_beyond_desk_scale(self):
        with pytest.raises(ScaleExceeded):
            p_distribution(8)
