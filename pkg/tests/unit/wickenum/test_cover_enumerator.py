import os

import pytest

from wickenum import (
    ClosedTrail,
    DirectedCycleDoubleCover,
    InvalidCover,
    ScaleExceeded,
    SimpleGraph,
    aut_order_with_dcdc,
    automorphism_order,
    dcdc_orbits,
    enumerate_dcdc,
    enumerate_tdc,
)
from wickenum.census.cover_enumerator import tdc_distribution, validate_dcdc

from unit.test_util.graph_fixtures import GraphFixtures


# noinspection PyMethodMayBeStatic
class TestCoverEnumerator:
    def tdc_distribution__should_count_trail_double_covers_by_trail_number(self):
        assert tdc_distribution(GraphFixtures.k3()) == {1: 3, 2: 4, 3: 1}
        assert enumerate_tdc(GraphFixtures.k3(), 2) == 4
        assert enumerate_tdc(GraphFixtures.k3(), 4) == 0

    def tdc_distribution__should_allow_two_trails_for_a_doubled_path(self):
        assert tdc_distribution(GraphFixtures.p3()) == {1: 1, 2: 1}

    # fmt: off
    @pytest.mark.parametrize("graph, expected", [
        (SimpleGraph(n=0), {0: 1}),
        (SimpleGraph(n=8, edges=[(0, 1), (2, 3), (4, 5), (6, 7)]), {4: 1}),
        (SimpleGraph(n=7, edges=[(0, 1), (1, 2), (3, 4), (5, 6)]), {3: 1, 4: 1}),
        (GraphFixtures.two_triangles(), {2: 9, 3: 24, 4: 22, 5: 8, 6: 1}),
    ])
    # fmt: on
    def tdc_distribution__should_combine_components_of_disconnected_graphs(self, graph, expected):
        assert tdc_distribution(graph) == expected

    def tdc_distribution__should_apply_vertex_limit_per_component(self, mocker):
        mocker.patch.dict(os.environ, {"WICKENUM_SCALE_OVERRIDE": ""})
        star = SimpleGraph(n=7, edges=[(0, leaf) for leaf in range(1, 7)])
        with pytest.raises(ScaleExceeded) as raised:
            tdc_distribution(star)
        assert raised.value.limit_name == "tdc_vertices"

    def components__should_relabel_edge_carrying_components(self):
        graph = SimpleGraph(n=6, edges=[(3, 5), (0, 2)])
        assert graph.components() == [SimpleGraph(n=2, edges=[(0, 1)]), SimpleGraph(n=2, edges=[(0, 1)])]
        assert GraphFixtures.k3().components() == [GraphFixtures.k3()]

    def enumerate_dcdc__should_return_nothing_for_graphs_with_bridges(self):
        assert enumerate_dcdc(GraphFixtures.p3()) == []
        assert enumerate_dcdc(GraphFixtures.k2()) == []

    def enumerate_dcdc__should_cover_every_edge_once_in_each_direction(self):
        covers = enumerate_dcdc(GraphFixtures.k4())
        assert covers
        for cover in covers:
            validate_dcdc(cover)

    # fmt: off
    @pytest.mark.parametrize("graph, expected", [
        (GraphFixtures.k3(), 6),
        (GraphFixtures.c4(), 8),
    ])
    # fmt: on
    def aut_order_with_dcdc__should_keep_symmetries_of_the_single_cover_of_a_cycle(self, graph, expected):
        (cover,) = enumerate_dcdc(graph)
        assert aut_order_with_dcdc(graph, cover) == expected

    def aut_order_with_dcdc__should_reject_cover_of_another_graph(self):
        (cover,) = enumerate_dcdc(GraphFixtures.k3())
        with pytest.raises(InvalidCover):
            aut_order_with_dcdc(GraphFixtures.c4(), cover)

    def validate_dcdc__should_reject_short_or_incomplete_cycles(self):
        k3 = GraphFixtures.k3()
        short = DirectedCycleDoubleCover(
            graph=k3,
            cycles=[
                ClosedTrail(edges=[(0, 1), (1, 0)]),
                ClosedTrail(edges=[(1, 2), (2, 1)]),
                ClosedTrail(edges=[(0, 2), (2, 0)]),
            ],
        )
        with pytest.raises(InvalidCover):
            validate_dcdc(short)
        partial = DirectedCycleDoubleCover(graph=k3, cycles=[ClosedTrail(edges=[(0, 1), (1, 2), (2, 0)])])
        with pytest.raises(InvalidCover):
            validate_dcdc(partial)

    def dcdc_orbits__should_satisfy_orbit_stabilizer(self):
        k4 = GraphFixtures.k4()
        orbits = dcdc_orbits(k4)
        assert sum(orbit.orbit_size for orbit in orbits) == len(enumerate_dcdc(k4))
        for orbit in orbits:
            assert orbit.orbit_size * orbit.stabilizer_order == automorphism_order(k4)
