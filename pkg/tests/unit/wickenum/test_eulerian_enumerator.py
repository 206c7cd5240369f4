import pytest

from wickenum import EdgeSet, components, enumerate_eulerian, enumerate_symmetric, is_eulerian

from unit.test_util.naive_oracles import NaiveOracles


# noinspection PyMethodMayBeStatic
class TestEulerianEnumerator:
    # fmt: off
    @pytest.mark.parametrize("dimension, max_edges, include_loops", [
        (2, 2, False),
        (3, 6, False),
        (4, 4, False),
        (2, 4, True),
        (3, 3, True),
    ])
    # fmt: on
    def enumerate_eulerian__should_match_brute_force_subsets(self, dimension, max_edges, include_loops):
        produced = [
            frozenset(edge_set.edges()) for edge_set in enumerate_eulerian(dimension, max_edges, include_loops)
        ]
        assert len(produced) == len(set(produced))
        assert set(produced) == NaiveOracles.eulerian_subsets(dimension, max_edges, include_loops)

    def enumerate_eulerian__should_restrict_to_initial_support_when_asked(self):
        produced = {frozenset(s.edges()) for s in enumerate_eulerian(4, 4, initial_support_only=True)}
        expected = {
            subset
            for subset in NaiveOracles.eulerian_subsets(4, 4)
            if EdgeSet.from_edges(4, subset).has_initial_support()
        }
        assert produced == expected
        assert frozenset() in produced
        assert frozenset({(2, 3), (3, 2)}) not in produced

    def enumerate_eulerian__should_reject_bound_beyond_complete_digraph(self):
        with pytest.raises(ValueError):
            list(enumerate_eulerian(2, 5))

    def enumerate_eulerian__should_yield_only_eulerian_sets(self):
        assert all(is_eulerian(edge_set) for edge_set in enumerate_eulerian(4, 6))

    def enumerate_symmetric__should_yield_doubled_simple_graphs(self):
        produced = list(enumerate_symmetric(3, 4))
        assert len(produced) == 7
        assert all(edge_set.is_symmetric() and not edge_set.has_loops() for edge_set in produced)

    def components__should_split_disjoint_cycles_in_order_of_least_edge(self):
        edge_set = EdgeSet.from_edges(4, [(3, 4), (4, 3), (1, 2), (2, 1)])
        parts = components(edge_set)
        assert [part.edges() for part in parts] == [[(1, 2), (2, 1)], [(3, 4), (4, 3)]]

    def edge_set__should_support_set_operations_within_one_dimension(self):
        first = EdgeSet.from_edges(3, [(1, 2), (2, 3)])
        second = EdgeSet.from_edges(3, [(2, 3), (3, 1)])
        assert (first | second).edges() == [(1, 2), (2, 3), (3, 1)]
        assert (first & second).edges() == [(2, 3)]
        assert (first - second).edges() == [(1, 2)]
        assert (1, 2) in first and (3, 1) not in first
        with pytest.raises(ValueError):
            first | EdgeSet.from_edges(4, [(1, 2)])

    def edge_set__should_reject_edges_outside_dimension(self):
        with pytest.raises(ValueError):
            EdgeSet.from_edges(2, [(1, 3)])

    def edge_set__should_report_degrees_and_support(self):
        edge_set = EdgeSet.from_edges(4, [(1, 3), (3, 1), (1, 2)])
        out_degree, in_degree = edge_set.degrees()
        assert out_degree == {1: 2, 3: 1}
        assert in_degree == {1: 1, 2: 1, 3: 1}
        assert edge_set.has_initial_support()
        assert not is_eulerian(edge_set)
        assert not EdgeSet.from_edges(4, [(1, 3), (3, 1)]).has_initial_support()
