"""Unit tests for the linear-order kernel."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satlab.orders.cuts import Cut, glb_product, lub_product, make_cut, patches_check, realize_cut
from satlab.orders.descriptors import (
    Finite,
    LexPower,
    LexTerm,
    Ordering,
    Product,
    Reverse,
    Side,
    Sum,
    SumTerm,
    TernaryFinSupp,
    TernTerm,
    canonical_term,
    cmp,
    is_dense_without_endpoints,
    lex_power,
)
from satlab.orders.embeddings import (
    embed_into_power,
    embed_search,
    grow_binary,
    ldim,
    merge_union_embedding,
    term_stream,
)
from satlab.orders.grammar import format_desc, format_term, parse_desc, parse_term
from satlab.orders.ordinals import OrdinalCNF
from satlab.utils.exceptions import (
    BaseTooSmall,
    BoundTooSmall,
    EmptySet,
    GrammarError,
    InvalidTerm,
    MalformedCut,
    MalformedInterval,
    NotDense,
    NotSubset,
    OrderError,
)

TERN = TernaryFinSupp()
DENSE_POWER = LexPower(Finite(3), OrdinalCNF.omega_power(1), 1)

tern_terms = st.dictionaries(
    st.integers(min_value=0, max_value=6), st.sampled_from([-1, 1]), max_size=4
).map(TernTerm.from_map)


def _t(values):
    return TernTerm.from_map(values)


def _lex(values, default=1):
    return LexTerm.from_map({OrdinalCNF.finite(p): v for p, v in values.items()}, default)


class TestOrdinalCNF:
    """Tests for ordinals in Cantor normal form."""

    def test_parse_and_print(self):
        assert str(OrdinalCNF.parse("w^2*3+w+4")) == "w^2*3+w+4"
        assert str(OrdinalCNF.parse("0")) == "0"

    def test_left_absorption(self):
        assert OrdinalCNF.parse("3+w") == OrdinalCNF.omega_power(1)
        assert OrdinalCNF.finite(3) + OrdinalCNF.omega_power(1) == OrdinalCNF.omega_power(1)

    def test_order(self):
        assert OrdinalCNF.finite(5) < OrdinalCNF.omega_power(1)
        assert OrdinalCNF.omega_power(1) < OrdinalCNF.parse("w+3")
        assert OrdinalCNF.parse("w*5") < OrdinalCNF.omega_power(2)

    def test_limit_and_successor(self):
        assert OrdinalCNF.omega_power(1).is_limit
        assert not OrdinalCNF.parse("w+1").is_limit
        assert not OrdinalCNF.zero().is_limit
        assert OrdinalCNF.finite(2).successor() == OrdinalCNF.finite(3)

    def test_positions_of_finite(self):
        assert list(OrdinalCNF.finite(3).positions()) == [OrdinalCNF.finite(i) for i in range(3)]

    def test_infinite_has_no_int(self):
        with pytest.raises(OrderError):
            OrdinalCNF.omega_power(1).as_int()

    def test_bad_terms(self):
        with pytest.raises(OrderError):
            OrdinalCNF(((1, 1), (1, 2)))
        with pytest.raises(GrammarError):
            OrdinalCNF.parse("x+1")
        with pytest.raises(GrammarError):
            OrdinalCNF.parse("")


class TestDescriptors:
    """Tests for descriptors and cmp."""

    def test_finite(self):
        assert cmp(Finite(5), 1, 3) == Ordering.LT
        assert cmp(Finite(5), 3, 3) == Ordering.EQ
        assert Finite(5).size() == 5

    def test_finite_needs_an_element(self):
        with pytest.raises(OrderError):
            Finite(0)

    def test_reverse(self):
        assert cmp(Reverse(Finite(3)), 0, 2) == Ordering.GT
        assert list(Reverse(Finite(3)).elements()) == [2, 1, 0]

    def test_sum(self):
        desc = Sum(Finite(2), Finite(3))
        assert cmp(desc, SumTerm(Side.RIGHT, 0), SumTerm(Side.LEFT, 1)) == Ordering.GT
        assert desc.size() == 5
        assert next(desc.elements()) == SumTerm(Side.LEFT, 0)

    def test_product_is_lexicographic(self):
        desc = Product(Finite(2), Finite(3))
        assert cmp(desc, (0, 2), (1, 0)) == Ordering.LT
        assert cmp(desc, (1, 0), (1, 2)) == Ordering.LT
        assert desc.size() == 6

    def test_lex_power_elements_ascend(self):
        power = lex_power(Finite(2), 3)
        elements = list(power.elements())
        assert len(elements) == power.size() == 8
        assert power.sorted_terms(elements) == elements
        assert power.to_tuple(elements[5]) == (1, 0, 1)
        assert power.from_tuple((1, 0, 1)) == elements[5]

    def test_lex_power_infinite_exponent(self):
        assert DENSE_POWER.size() is None
        assert cmp(DENSE_POWER, _lex({0: 0}), LexTerm()) == Ordering.LT

    def test_invalid_terms(self):
        with pytest.raises(InvalidTerm):
            cmp(Finite(3), 0, 3)
        with pytest.raises(InvalidTerm):
            cmp(Finite(3), True, 0)
        with pytest.raises(InvalidTerm):
            TERN.validate(TernTerm(((0, 2),)))
        with pytest.raises(InvalidTerm):
            lex_power(Finite(2), 2).validate(LexTerm(((OrdinalCNF.zero(), 0),)))
        with pytest.raises(InvalidTerm):
            lex_power(Finite(2), 2).validate(LexTerm(((OrdinalCNF.finite(2), 1),)))

    def test_canonical_terms(self):
        assert canonical_term(0) == TernTerm()
        assert canonical_term(1) == _t({0: -1})
        assert canonical_term(2) == _t({0: 1})
        assert canonical_term(3) == _t({1: -1})
        assert len({canonical_term(k) for k in range(243)}) == 243

    def test_density(self):
        assert is_dense_without_endpoints(TERN)
        assert is_dense_without_endpoints(Reverse(TERN))
        assert is_dense_without_endpoints(DENSE_POWER)
        assert not is_dense_without_endpoints(Finite(4))
        assert not is_dense_without_endpoints(LexPower(Finite(3), OrdinalCNF.omega_power(1), 0))
        assert not is_dense_without_endpoints(lex_power(Finite(3), 3, 1))

    @given(tern_terms, tern_terms)
    @pytest.mark.property_based
    def test_ternary_comparison_is_antisymmetric(self, x, y):
        assert TERN.compare(x, y) == -TERN.compare(y, x)
        assert (TERN.compare(x, y) == 0) == (x == y)


class TestCuts:
    """Tests for cut realization and patching."""

    def test_empty_cut(self):
        assert realize_cut(TERN, Cut()) == TernTerm()

    def test_one_sided_cuts(self):
        assert realize_cut(TERN, make_cut(TERN, [TernTerm()], [])) == _t({0: 1})
        assert realize_cut(TERN, make_cut(TERN, [], [TernTerm()])) == _t({0: -1})

    def test_two_sided_cut(self):
        z = realize_cut(TERN, make_cut(TERN, [_t({0: -1})], [TernTerm()]))
        assert z == _t({0: -1, 1: 1})

    def test_reverse(self):
        z = realize_cut(Reverse(TERN), make_cut(Reverse(TERN), [TernTerm()], []))
        assert Reverse(TERN).compare(TernTerm(), z) < 0

    def test_lex_power(self):
        z = realize_cut(DENSE_POWER, make_cut(DENSE_POWER, [LexTerm()], []))
        assert z == _lex({0: 2})

    def test_not_dense(self):
        with pytest.raises(NotDense):
            realize_cut(Finite(5), Cut())

    def test_malformed(self):
        with pytest.raises(MalformedCut) as exc:
            make_cut(Finite(5), [3], [1])
        assert exc.value.lower == 3
        assert exc.value.upper == 1

    @given(tern_terms, tern_terms)
    @pytest.mark.property_based
    def test_realized_point_is_strictly_inside(self, x, y):
        if x == y:
            return
        lo, hi = (x, y) if TERN.compare(x, y) < 0 else (y, x)
        z = realize_cut(TERN, make_cut(TERN, [lo], [hi]))
        assert TERN.compare(lo, z) < 0 < TERN.compare(hi, z)

    def test_patched(self):
        assert patches_check(Finite(10), range(10), [2, 5]).patched

    def test_inner_gap(self):
        result = patches_check(Finite(10), [1, 2, 3, 4], [2, 3])
        assert not result.patched
        assert result.counterexample == Cut(frozenset({2}), frozenset({3}))

    def test_strict_gaps(self):
        result = patches_check(Finite(10), [2, 3, 4], [2, 4])
        assert result.counterexample == Cut(frozenset(), frozenset({2}))
        assert patches_check(Finite(10), [2, 3, 4], [2, 4], strict_gaps=True).patched

    def test_not_subset(self):
        with pytest.raises(NotSubset):
            patches_check(Finite(10), [1, 2], [2, 7])

    def test_product_bounds(self):
        assert lub_product(Finite(3), Finite(2), [(0, 1), (1, 0)]) == (1, 0)
        assert glb_product(Finite(3), Finite(2), [(0, 1), (1, 0)]) == (0, 1)

    def test_product_bounds_of_empty_set(self):
        with pytest.raises(EmptySet):
            lub_product(Finite(3), Finite(2), [])


class TestEmbeddings:
    """Tests for embedding search, L-dimension, merging and growth."""

    def test_search_into_small_order(self):
        assert embed_search(Finite(3), Finite(2), 10) is None

    def test_search_into_finite_order(self):
        found = embed_search(Finite(3), Finite(5), 10)
        assert found.pairs == ((0, 0), (1, 1), (2, 2))

    def test_search_into_infinite_order(self):
        found = embed_search(Finite(3), TERN, 50)
        assert len(found) == 3
        assert found.is_order_preserving()

    def test_search_bound(self):
        with pytest.raises(BoundTooSmall):
            embed_search(Finite(3), TERN, 2)

    def test_ldim(self):
        assert ldim(Finite(1), Finite(2)) == 0
        assert ldim(Finite(5), Finite(2)) == 3
        assert ldim(Finite(9), Finite(3)) == 2
        assert ldim(lex_power(Finite(2), 3), Finite(2)) == 3

    def test_ldim_errors(self):
        with pytest.raises(BaseTooSmall):
            ldim(Finite(3), Finite(1))
        with pytest.raises(OrderError):
            ldim(Finite(3), TERN)
        with pytest.raises(BoundTooSmall):
            ldim(Finite(100), Finite(2), max_exponent=3)

    def test_term_stream_is_injective(self):
        terms = []
        for term in term_stream(Product(Finite(2), TERN)):
            terms.append(term)
            if len(terms) == 20:
                break
        assert len(set(terms)) == 20

    def test_embed_into_power(self):
        ia = embed_into_power(Finite(6), [4, 0, 2], Finite(3), 1)
        assert ia.codomain == lex_power(Finite(3), 1, 1)
        assert ia[0] == _lex({0: 0})
        assert ia[2] == LexTerm()
        assert ia[4] == _lex({0: 2})

    def test_merge(self):
        ambient = Finite(6)
        a, b = [0, 2, 4], [1, 3, 5]
        ia = embed_into_power(ambient, a, Finite(3), 1)
        ib = embed_into_power(ambient, b, Finite(3), 1)
        merged = merge_union_embedding(ambient, a, b, ia, ib)
        assert merged.codomain.exponent == OrdinalCNF.finite(3)
        assert len(merged) == 6
        assert merged.is_order_preserving()
        assert all(merged[x] == ia[x] for x in a)
        assert merged[1] == _lex({0: 0, 1: 2, 2: 0})
        assert merged[3] == _lex({1: 2})
        assert merged[5] == _lex({0: 2, 1: 2, 2: 2})

    def test_merge_needs_disjoint_sets(self):
        ambient = Finite(4)
        ia = embed_into_power(ambient, [0, 1], Finite(3), 1)
        ib = embed_into_power(ambient, [1, 2], Finite(3), 1)
        with pytest.raises(OrderError):
            merge_union_embedding(ambient, [0, 1], [1, 2], ia, ib)

    def test_grow(self):
        a0, a1 = _t({0: -1}), _t({0: 1})
        grown = grow_binary(TERN, a0, a1, 2)
        assert len(grown) == 4
        assert grown.is_order_preserving()
        assert all(TERN.compare(a0, y) < 0 < TERN.compare(a1, y) for _, y in grown.pairs)

    def test_grow_depth_zero(self):
        grown = grow_binary(TERN, _t({0: -1}), _t({0: 1}), 0)
        assert [y for _, y in grown.pairs] == [_t({0: -1, 1: 1})]

    def test_grow_malformed_interval(self):
        with pytest.raises(MalformedInterval):
            grow_binary(TERN, _t({0: 1}), _t({0: 1}), 1)


class TestGrammar:
    """Tests for descriptor and term text."""

    def test_descriptors(self):
        assert parse_desc("lexpow(fin:3,w,1)") == DENSE_POWER
        assert parse_desc("sum(fin:2, tern)") == Sum(Finite(2), TERN)
        assert format_desc(parse_desc("prod(rev(fin:3),tern)")) == "prod(rev(fin:3),tern)"

    @pytest.mark.parametrize("text", ["fin:0", "foo", "fin:3 x", "sum(fin:2)", "lexpow(fin:3,w,5)"])
    def test_bad_descriptors(self, text):
        with pytest.raises(GrammarError):
            parse_desc(text)

    def test_terms(self):
        assert parse_term(TERN, "tern{0:+,2:-}") == _t({0: 1, 2: -1})
        assert parse_term(TERN, "{0:+}") == _t({0: 1})
        assert parse_term(Sum(Finite(2), TERN), "r:tern{1:-}") == SumTerm(Side.RIGHT, _t({1: -1}))
        assert parse_term(Product(Finite(3), Finite(2)), "(2,1)") == (2, 1)

    def test_lex_power_terms(self):
        term = parse_term(DENSE_POWER, "[0:2, w:0]")
        assert term == LexTerm(((OrdinalCNF.zero(), 2), (OrdinalCNF.omega_power(1), 0)))
        assert format_term(DENSE_POWER, term) == "[0:2,w:0]"

    def test_out_of_range_term(self):
        with pytest.raises(InvalidTerm):
            parse_term(Finite(3), "5")

    @given(tern_terms)
    @pytest.mark.property_based
    def test_ternary_text(self, x):
        assert parse_term(TERN, format_term(TERN, x)) == x
