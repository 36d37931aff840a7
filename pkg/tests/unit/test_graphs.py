"""Unit tests for the graph layer."""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satlab.graphs.bit import (
    bit_digraph,
    bit_edge,
    bit_graph,
    check_saturation,
    fast_witness,
    minimal_witness,
    out_closure,
    out_set,
    realize_out_set,
    saturated_random_graph,
    saturation_witness,
    scan_witness,
)
from satlab.graphs.colouring import (
    brute_force_colouring_number,
    colouring_number,
    complement_scan,
    is_acyclic,
    orient_down,
)
from satlab.graphs.redirect import RedirectResult, Reversal, check_redirection, redirect
from satlab.graphs.structures import (
    ColOrdering,
    FiniteDigraph,
    FiniteGraph,
    format_digraph,
    format_graph,
    parse_digraph,
    parse_graph,
)
from satlab.utils.exceptions import (
    GrammarError,
    GraphError,
    IncompleteOrdering,
    InvariantViolation,
    LoopQuery,
    MalformedDigraph,
    MalformedGraph,
    NoAdmissibleVertex,
    TooLarge,
)

small_sets = st.frozensets(st.integers(min_value=0, max_value=9), max_size=3)


class TestBit:
    """Tests for the BIT predicate and its witnesses."""

    def test_edges(self):
        assert bit_edge(0, 1)
        assert bit_edge(2, 1)
        assert not bit_edge(0, 2)
        assert bit_edge(2, 4) and bit_edge(4, 2)

    def test_loop(self):
        with pytest.raises(LoopQuery):
            bit_edge(3, 3)

    def test_out_sets(self):
        assert out_set(0) == frozenset()
        assert out_set(6) == {1, 2}
        assert realize_out_set({1, 2}) == 6
        assert out_closure([6]) == {0, 1, 2, 6}

    def test_bit_graph_and_digraph(self):
        g = bit_graph(4)
        assert g.edges == {(0, 1), (1, 2), (0, 3), (1, 3)}
        d = bit_digraph([0, 1, 2, 6])
        assert d.out_set(6) == {1, 2}
        assert d.out_set(2) == {1}

    def test_minimal_witnesses(self):
        assert saturation_witness({0, 1}, {2}) == 3
        assert saturation_witness({2}, {0, 1}) == 4
        assert saturation_witness(set(), set()) == 0

    def test_fast_witness(self):
        assert fast_witness({0, 1}, {2}) == 11
        assert saturation_witness({0, 1}, {2}, fast=True) == 11

    def test_overlapping_sides(self):
        with pytest.raises(GraphError):
            saturation_witness({1, 2}, {2})

    def test_bit_cap(self):
        assert minimal_witness({10}, set()) == 1
        assert minimal_witness(range(7), set(), max_bits=5) is None
        assert minimal_witness(range(7), set(), max_bits=7) == 127

    @given(small_sets, small_sets)
    @settings(max_examples=200)
    @pytest.mark.property_based
    def test_minimal_matches_scan(self, a, b):
        b = b - a
        assert minimal_witness(a, b) == scan_witness(a, b)

    def test_scan_crosses_blocks(self):
        assert scan_witness({12}, {2, 3}) == 4096
        assert scan_witness({0, 1}, {2}) == 3
        assert scan_witness(set(), set()) == 0

    def test_scan_wide_points(self):
        assert scan_witness({70}, set()) == 1
        assert scan_witness({70}, {0}) == 2

    def test_saturation_of_segment(self):
        assert check_saturation(bit_graph(8), 2, 1).saturated

    def test_saturation_counterexample(self):
        result = check_saturation(FiniteGraph(3), 2, 1)
        assert not result.saturated
        assert result.counterexample == (frozenset({0}), frozenset())

    def test_saturation_bad_bounds(self):
        with pytest.raises(GraphError):
            check_saturation(bit_graph(4), 0, 1)

    def test_saturated_random_graph(self):
        graph = saturated_random_graph(64, 2, 2, seed=0)
        assert graph.n == 64
        assert check_saturation(graph, 2, 2).saturated
        assert saturated_random_graph(64, 2, 2, seed=0) == graph

    def test_saturated_random_graph_gives_up(self):
        with pytest.raises(GraphError):
            saturated_random_graph(4, 3, 3, attempts=2)


class TestStructures:
    """Tests for graphs, digraphs and their text formats."""

    def test_graph_invariants(self):
        with pytest.raises(MalformedGraph):
            FiniteGraph(3, frozenset({(1, 0)}))
        with pytest.raises(MalformedGraph):
            FiniteGraph.build(3, [(1, 1)])

    def test_digraph_invariants(self):
        with pytest.raises(MalformedDigraph):
            FiniteDigraph.build([0, 1], [(0, 1), (1, 0)])
        with pytest.raises(MalformedDigraph):
            FiniteDigraph.build([0, 1], [(0, 5)])

    def test_complement(self):
        assert FiniteGraph.cycle(4).complement().edges == {(0, 2), (1, 3)}

    def test_random_graph(self):
        graph = FiniteGraph.random(12, 5)
        assert FiniteGraph.random(12, 5) == graph
        assert FiniteGraph.random(6, 1, density=1.0) == FiniteGraph.complete(6)
        assert not FiniteGraph.random(6, 1, density=0.0).edges
        with pytest.raises(MalformedGraph):
            FiniteGraph.random(6, 1, density=1.5)

    def test_adjacency_table(self):
        table = FiniteGraph.cycle(5).adjacency_table()
        assert table.shape == (5, 5)
        assert (table == table.T).all()
        assert not table.diagonal().any()
        assert table.sum() == 10
        assert table[0, 4] and not table[0, 2]

    def test_parse_graph(self):
        g = parse_graph("# path\n3\n0 1\n2 1\n")
        assert g.edges == {(0, 1), (1, 2)}
        assert parse_graph(format_graph(g)) == g

    def test_parse_graph_errors(self):
        with pytest.raises(GrammarError):
            parse_graph("")
        with pytest.raises(GrammarError):
            parse_graph("3\n0 x\n")

    def test_parse_digraph(self):
        d = parse_digraph("vertices: 0 1 3\n3 > 1\n1 > 0\n")
        assert d.vertices == (0, 1, 3)
        assert d.out_set(3) == {1}
        assert format_digraph(d) == "vertices: 0 1 3\n1 > 0\n3 > 1\n"

    def test_ordering(self):
        ordering = ColOrdering.for_graph(FiniteGraph.complete(3), [2, 0, 1])
        assert ordering.bound == 3
        with pytest.raises(IncompleteOrdering):
            ColOrdering.for_graph(FiniteGraph.complete(3), [0, 1])


class TestColouring:
    """Tests for colouring numbers and orientation."""

    @pytest.mark.parametrize(
        "graph, expected",
        [
            (FiniteGraph.complete(4), 4),
            (FiniteGraph.cycle(5), 3),
            (FiniteGraph(3), 1),
            (FiniteGraph(0), 0),
        ],
    )
    def test_known_values(self, graph, expected):
        k, ordering = colouring_number(graph)
        assert k == expected
        assert ordering.holds_for(graph)
        assert brute_force_colouring_number(graph) == expected

    def test_matches_degeneracy(self):
        g = nx.petersen_graph()
        k, _ = colouring_number(FiniteGraph.from_networkx(g))
        assert k == max(nx.core_number(g).values()) + 1

    def test_brute_force_limit(self):
        with pytest.raises(TooLarge):
            brute_force_colouring_number(FiniteGraph(10))

    def test_orient_down(self):
        d = orient_down(FiniteGraph.complete(3), ColOrdering((0, 1, 2), 3))
        assert d.arcs == {(1, 0), (2, 0), (2, 1)}
        assert is_acyclic(d)

    def test_complement_scan(self):
        rows = complement_scan(4)
        assert len(rows) == 11
        assert all(1 <= r.col <= 4 and 1 <= r.col_complement <= 4 for r in rows)

    def test_scan_sample_is_seeded(self):
        assert complement_scan(8, seed=3, sample_size=4) == complement_scan(8, seed=3, sample_size=4)

    def test_scan_limit(self):
        with pytest.raises(TooLarge):
            complement_scan(9)


class TestRedirect:
    """Tests for redirection of downward orientations."""

    def _segment(self, n):
        graph = bit_graph(n)
        return graph, ColOrdering.for_graph(graph, range(n))

    def test_two_targets(self):
        graph, ordering = self._segment(8)
        result = redirect(graph, ordering, [{0}, {1}])
        assert result.assignment == [1, 2]
        assert result.digraph.out_set(1) == {0}
        assert result.digraph.out_set(2) == {1}
        assert is_acyclic(result.digraph)

    def test_no_admissible_vertex(self):
        graph, ordering = self._segment(2)
        with pytest.raises(NoAdmissibleVertex) as exc:
            redirect(graph, ordering, [{1}])
        assert exc.value.index == 0
        assert exc.value.partial.assignment == []

    def test_target_out_of_range(self):
        graph, ordering = self._segment(4)
        with pytest.raises(MalformedGraph):
            redirect(graph, ordering, [{7}])

    def test_ordering_must_hold(self):
        graph, _ = self._segment(4)
        with pytest.raises(GraphError):
            redirect(graph, ColOrdering((0, 1, 2, 3), 1), [{0}])

    @pytest.mark.parametrize(
        "alt, targets",
        [
            (False, [{0, 1}, {2}, {0, 2}]),
            (True, [{0, 1}, {0, 1, 2}, {0}]),
        ],
    )
    def test_segment_completes(self, alt, targets):
        graph, ordering = self._segment(1024)
        result = redirect(graph, ordering, targets, alt_cond3=alt)
        assert len(result.assignment) == 3
        for x, c in zip(result.assignment, targets):
            assert result.digraph.out_set(x) == c
        check_redirection(graph, ordering, result)

    def test_alternative_condition_stops(self):
        graph, ordering = self._segment(1024)
        with pytest.raises(NoAdmissibleVertex) as exc:
            redirect(graph, ordering, [{0, 1}, {2}, {0, 2}], alt_cond3=True)
        assert exc.value.index == 2
        partial = exc.value.partial
        assert len(partial.assignment) == 2
        assert partial.digraph.out_set(partial.assignment[1]) == {2}
        check_redirection(graph, ordering, partial)

    def test_rejects_double_reversal(self):
        graph, ordering = self._segment(4)
        digraph = orient_down(graph, ordering)
        bad = RedirectResult(
            digraph, [1, 3], [Reversal(0, 1, ((1, 0),)), Reversal(1, 3, ((1, 0),))]
        )
        with pytest.raises(InvariantViolation):
            check_redirection(graph, ordering, bad)
