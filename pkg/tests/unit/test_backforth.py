"""Unit tests for presentations and the back-and-forth engine."""

import itertools

import pytest

from satlab.backforth.engine import (
    PartialIso,
    Selection,
    bf_run,
    bf_step,
    pending_request,
    verify_partial_iso,
)
from satlab.backforth.presentation import (
    TABLE_VERTICES,
    ElementType,
    RelationKind,
    graph_presentation,
    make_bit_digraph_presentation,
    make_bit_presentation,
    make_dlo_presentation,
    make_table_presentation,
    order_presentation,
    parse_presentation,
    shuffled,
    table_presentation,
)
from satlab.graphs.bit import minimal_witness
from satlab.graphs.structures import FiniteGraph
from satlab.orders.descriptors import Finite, TernaryFinSupp, TernTerm
from satlab.utils.exceptions import (
    BackForthError,
    ExtenderExhausted,
    GrammarError,
    InvariantViolation,
)


class TestPresentations:
    """Tests for presentation construction and types."""

    def test_parse(self):
        assert parse_presentation("dlo").name == "dlo:0"
        assert parse_presentation("bit:3").name == "bit:3"
        assert parse_presentation("bitdigraph", default_seed=5).name == "bitdigraph:5"
        assert parse_presentation("bit").kind is RelationKind.ADJACENCY

    @pytest.mark.parametrize("text", ["foo", "dlo:x", "bit:-1"])
    def test_parse_errors(self, text):
        with pytest.raises(GrammarError):
            parse_presentation(text)

    def test_shuffle_permutes_blocks(self):
        first = list(itertools.islice(shuffled(lambda k: k, 3), 64))
        assert sorted(first) == list(range(64))
        assert first != list(range(64))
        assert list(itertools.islice(shuffled(lambda k: k, 0), 70)) == list(range(70))

    def test_order_type(self):
        dlo = make_dlo_presentation()
        below, above = TernTerm(((0, -1),)), TernTerm(((0, 1),))
        wanted = dlo.type_of(TernTerm(), frozenset({below, above}))
        assert wanted == ElementType(frozenset({below}), frozenset({above}))

    def test_arc_type(self):
        digraph = make_bit_digraph_presentation()
        assert digraph.type_of(3, frozenset({0, 1, 4})) == ElementType(
            frozenset({0, 1}), frozenset()
        )
        assert digraph.type_of(1, frozenset({0, 3})) == ElementType(
            frozenset({0}), frozenset({3})
        )

    def test_realize_checks_extender(self):
        bit = make_bit_presentation()
        assert bit.realize(ElementType(frozenset({0, 1}), frozenset({2})), frozenset({0, 1, 2})) == 3

    def test_bit_digraph_refuses_in_arcs(self):
        digraph = make_bit_digraph_presentation()
        with pytest.raises(ExtenderExhausted):
            digraph.realize(ElementType(frozenset(), frozenset({1})), frozenset({1}))

    def test_infinite_order_presentation(self):
        with pytest.raises(BackForthError):
            order_presentation(TernaryFinSupp())

    def test_table_relation_and_extender(self):
        cycle = table_presentation(FiniteGraph.cycle(4))
        assert cycle.relation(0, 1) and not cycle.relation(0, 2)
        assert list(cycle.elements()) == [0, 1, 2, 3]
        assert cycle.realize(ElementType(frozenset({0, 2}), frozenset()), frozenset({0, 2})) == 1
        with pytest.raises(ExtenderExhausted):
            cycle.realize(ElementType(frozenset({0}), frozenset({2})), frozenset({0, 2}))

    def test_table_enumeration_is_seeded(self):
        graph = FiniteGraph.cycle(8)
        first, again = table_presentation(graph, 3), table_presentation(graph, 3)
        assert sorted(first.elements()) == list(range(8))
        assert list(first.elements()) == list(again.elements())

    def test_random_table(self):
        table = parse_presentation("table:2")
        assert table.name == "table:2"
        assert len(list(table.elements())) == TABLE_VERTICES
        for v in range(4):
            over = frozenset({v})
            for wanted in (ElementType(over, frozenset()), ElementType(frozenset(), over)):
                assert table.realizes(table.realize(wanted, over), wanted, over)


class TestPartialIso:
    """Tests for the partial isomorphism container."""

    def test_extend(self):
        p = PartialIso()
        p.extend(0, "a")
        assert len(p) == 1
        assert p.backward == {"a": 0}
        with pytest.raises(InvariantViolation):
            p.extend(0, "b")

    def test_copy_is_independent(self):
        p = PartialIso()
        p.extend(0, 0)
        q = p.copy()
        q.extend(1, 1)
        assert len(p) == 1

    def test_verify_rejects_broken_maps(self):
        bit = make_bit_presentation()
        assert not verify_partial_iso(bit, bit, PartialIso({0: 0, 1: 2}, {0: 0, 2: 1}))
        assert not verify_partial_iso(bit, bit, PartialIso({0: 0}, {}))


class TestEngine:
    """Tests for bf_step and bf_run."""

    def test_first_step_maps_least_elements(self):
        dlo = make_dlo_presentation()
        p = bf_step(dlo, dlo, PartialIso(), 0)
        assert p.forward == {TernTerm(): TernTerm()}

    def test_dense_orders(self):
        left, right = make_dlo_presentation(1), make_dlo_presentation(2)
        p = bf_run(left, right, 40)
        assert len(p) == 40
        assert verify_partial_iso(left, right, p)
        assert all(e in p.forward for e in itertools.islice(left.elements(), 20))
        assert all(e in p.backward for e in itertools.islice(right.elements(), 20))

    @pytest.mark.parametrize("right_seed", [1, 2, 3, 5])
    def test_shifted_bit_enumerations(self, right_seed):
        left, right = make_bit_presentation(0), make_bit_presentation(right_seed)
        p = bf_run(left, right, 20)
        assert len(p) == 20
        assert verify_partial_iso(left, right, p)
        assert all(e in p.forward for e in itertools.islice(left.elements(), 10))
        assert all(e in p.backward for e in itertools.islice(right.elements(), 10))

    @pytest.mark.slow
    def test_long_shifted_bit_run(self):
        left, right = make_bit_presentation(0), make_bit_presentation(1)
        p = bf_run(left, right, 50)
        assert len(p) == 50
        assert verify_partial_iso(left, right, p)

    def test_grounded_bit_digraph(self):
        digraph = make_bit_digraph_presentation()
        p = bf_run(digraph, digraph, 10, Selection.GROUNDED)
        assert p.forward == {i: i for i in range(10)}

    def test_grounded_needs_out_sets(self):
        dlo = make_dlo_presentation()
        with pytest.raises(BackForthError):
            bf_run(dlo, dlo, 2, Selection.GROUNDED)

    def test_finite_graphs(self):
        cycle = graph_presentation(FiniteGraph.cycle(4))
        p = bf_run(cycle, cycle, 8)
        assert len(p) == 4
        assert verify_partial_iso(cycle, cycle, p)

    def test_exhausted_extender(self):
        left, right = make_bit_presentation(0), make_bit_presentation(0, max_bits=2)
        with pytest.raises(ExtenderExhausted) as exc:
            bf_run(left, right, 10)
        assert exc.value.step == 4
        assert len(exc.value.partial) == 4
        assert verify_partial_iso(left, right, exc.value.partial)

    def test_table_against_bit(self):
        left, right = make_table_presentation(1), make_bit_presentation()
        p = bf_run(left, right, 3)
        assert len(p) == 3
        assert verify_partial_iso(left, right, p)
        try:
            p = bf_run(left, right, 12)
        except ExtenderExhausted as exc:
            assert exc.step >= 3
            assert verify_partial_iso(left, right, exc.partial)
            target, wanted, over = pending_request(left, right, exc.partial, exc.step)
            if target is left:
                assert not any(left.realizes(v, wanted, over) for v in left.elements())
        else:
            assert len(p) == 12
            assert verify_partial_iso(left, right, p)

    def test_pending_request_names_the_failing_side(self):
        left, right = make_bit_presentation(0), make_bit_presentation(0, max_bits=2)
        with pytest.raises(ExtenderExhausted) as exc:
            bf_run(left, right, 10)
        target, wanted, over = pending_request(left, right, exc.value.partial, exc.value.step)
        assert target is right
        assert over == frozenset(exc.value.partial.backward)
        assert minimal_witness(wanted.first, wanted.second, max_bits=2) is None

    def test_pending_request_when_both_sides_are_mapped(self):
        single = graph_presentation(FiniteGraph(1))
        p = bf_run(single, single, 1)
        assert pending_request(single, single, p, 1) is None

    def test_finite_order_into_dense_order(self):
        with pytest.raises(ExtenderExhausted) as exc:
            bf_run(order_presentation(Finite(2)), make_dlo_presentation(), 4)
        assert exc.value.step == 1

    def test_negative_steps(self):
        dlo = make_dlo_presentation()
        with pytest.raises(BackForthError):
            bf_run(dlo, dlo, -1)
