"""Unit tests for hereditarily finite sets and collapses."""

import itertools

import networkx as nx
import pytest

from satlab.graphs.bit import bit_digraph, out_closure
from satlab.graphs.structures import FiniteDigraph, parse_digraph
from satlab.hf.collapse import (
    BitRealizer,
    DigraphRealizer,
    epsilon_embed,
    epsilon_map,
    iso_extensional,
    mostowski_collapse,
)
from satlab.hf.sets import (
    DECODE_CACHE_SIZE,
    HFSet,
    decode,
    encode,
    from_codes,
    hf_sets_of_rank,
    parse_braces,
    rank,
    to_braces,
    transitive_closure,
)
from satlab.utils.exceptions import (
    CyclicInput,
    GrammarError,
    HFError,
    NotExtensional,
    RealizerFailure,
)

ORDINAL_3 = parse_digraph("3\n1 > 0\n2 > 0\n2 > 1\n")


class TestHFSet:
    """Tests for Ackermann coding and brace notation."""

    def test_small_codes(self):
        empty = HFSet.empty()
        assert decode(0) == empty
        assert decode(1) == HFSet.of(empty)
        assert decode(3) == HFSet.of(empty, HFSet.of(empty))

    def test_encode_inverts_decode(self):
        assert all(encode(decode(n)) == n for n in range(512))

    def test_of_deduplicates(self):
        empty = HFSet.empty()
        assert HFSet.of(empty, empty) == decode(1)
        assert len(HFSet.of(empty, empty)) == 1

    def test_membership_and_rank(self):
        two = decode(3)
        assert decode(0) in two
        assert decode(2) not in two
        assert rank(two) == 2
        assert transitive_closure(two) == {decode(0), decode(1)}

    def test_inconsistent_code(self):
        with pytest.raises(HFError):
            HFSet((), 5)
        with pytest.raises(HFError):
            decode(-1)

    def test_braces(self):
        assert to_braces(decode(0)) == "{}"
        assert to_braces(decode(3)) == "{{},{{}}}"
        assert to_braces(decode(3), max_rank=1) == "{{},#1}"

    def test_parse_braces(self):
        assert encode(parse_braces("{{},{{}}}")) == 3
        assert encode(parse_braces(" { {} , {{}} } ")) == 3
        assert encode(parse_braces("{#5,{}}")) == 33
        assert parse_braces("{{},{}}") == decode(1)

    @pytest.mark.parametrize("text", ["", "{", "{}}", "{#}", "{{},x}"])
    def test_bad_braces(self, text):
        with pytest.raises(GrammarError):
            parse_braces(text)

    def test_sets_of_rank(self):
        assert [len(hf_sets_of_rank(r)) for r in range(5)] == [0, 1, 2, 4, 16]
        assert all(rank(x) < 4 for x in hf_sets_of_rank(4))
        with pytest.raises(HFError):
            hf_sets_of_rank(6)

    def test_from_codes(self):
        assert from_codes([0, 1]) == decode(3)

    def test_decode_cache_is_bounded(self):
        for n in range(3 * DECODE_CACHE_SIZE):
            decode(n)
        info = decode.cache_info()
        assert info.maxsize == DECODE_CACHE_SIZE
        assert info.currsize <= DECODE_CACHE_SIZE


class TestCollapse:
    """Tests for the Mostowski collapse and the membership embedding."""

    def test_collapse(self):
        collapse = mostowski_collapse(ORDINAL_3)
        assert [encode(collapse[v]) for v in range(3)] == [0, 1, 3]
        assert collapse.injective

    def test_collapse_bit_closure(self):
        for n in (6, 11, 200):
            collapse = mostowski_collapse(bit_digraph(out_closure([n])))
            assert collapse[n] == decode(n)

    def test_cyclic_input(self):
        with pytest.raises(CyclicInput):
            mostowski_collapse(FiniteDigraph.build([0, 1, 2], [(0, 1), (1, 2), (2, 0)]))

    def test_non_injective(self):
        assert not mostowski_collapse(FiniteDigraph.build([0, 1], [])).injective

    def test_epsilon_is_the_code(self):
        for x in hf_sets_of_rank(4):
            assert epsilon_embed(x) == encode(x)

    def test_epsilon_map_realizes_members(self):
        x = decode(11)
        realizer = BitRealizer()
        phi = epsilon_map(x, realizer)
        for y, vertex in phi.items():
            assert realizer.out_set(vertex) == {phi[c] for c in y}

    def test_digraph_realizer(self):
        realizer = DigraphRealizer(ORDINAL_3)
        assert epsilon_embed(decode(3), realizer) == 2
        with pytest.raises(RealizerFailure):
            realizer(frozenset({2}))
        with pytest.raises(RealizerFailure):
            epsilon_embed(decode(2), realizer)


class TestIsomorphism:
    """Tests for isomorphism of extensional digraphs."""

    def test_relabelled(self):
        other = parse_digraph("vertices: 5 7 9\n7 > 5\n9 > 5\n9 > 7\n")
        result = iso_extensional(ORDINAL_3, other)
        assert result.isomorphic
        assert result.mapping == {0: 5, 1: 7, 2: 9}

    def test_not_isomorphic(self):
        chain = parse_digraph("3\n1 > 0\n2 > 1\n")
        result = iso_extensional(ORDINAL_3, chain)
        assert not result.isomorphic
        assert result.mapping is None

    def test_not_extensional(self):
        with pytest.raises(NotExtensional):
            iso_extensional(ORDINAL_3, FiniteDigraph.build([0, 1], []))

    @pytest.mark.parametrize("a, b", list(itertools.combinations_with_replacement(range(12), 2)))
    def test_agrees_with_networkx(self, a, b):
        first = bit_digraph(out_closure([a]))
        second = bit_digraph(out_closure([b]))
        second = second.relabel({v: 100 + v for v in second.vertices})
        result = iso_extensional(first, second)
        assert result.isomorphic == nx.is_isomorphic(first.to_networkx(), second.to_networkx())
        assert result.isomorphic == (a == b)
