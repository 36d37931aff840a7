"""Unit tests for the Boolean algebra layer."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from satlab.ba.elements import BAElem, format_elem, join_all, meet_all, parse_elem
from satlab.ba.finite import FREE, BAEmbedding, FiniteBA, XBounds, random_bounds
from satlab.ba.separation import (
    embed_chain,
    embed_into_atomless,
    extend_one,
    find_extension_value,
    ideal_below,
    interpolate,
)
from satlab.utils.exceptions import (
    BooleanAlgebraError,
    GrammarError,
    InvariantViolation,
    Rejected,
    SeparationFailure,
)

V0, V1, V2 = (BAElem.var(k) for k in range(3))

tables = st.integers(min_value=0, max_value=255).map(lambda t: BAElem.make((0, 1, 2), t))


class TestElements:
    """Tests for free algebra elements."""

    def test_canonical_support(self):
        assert (V0 | (V0 & V1)) == V0
        assert (V0 & ~V0) == BAElem.zero()
        assert (V1 | ~V1) == BAElem.one()
        assert BAElem.make((0, 1), 0b1010) == V0

    def test_order(self):
        assert (V0 & V1).lt(V0)
        assert V0.leq(V0)
        assert not V0.lt(V0)
        assert not V0.leq(V1)

    def test_evaluate(self):
        x = V0 & ~V1
        assert x.evaluate({0: True})
        assert not x.evaluate({0: True, 1: True})

    def test_format(self):
        assert format_elem(BAElem.zero()) == "0"
        assert format_elem(BAElem.one()) == "1"
        assert format_elem(V0) == "v0"
        assert format_elem(~V0) == "~v0"
        assert format_elem(V0 & V1) == "v0 & v1"

    def test_parse(self):
        assert parse_elem("v0 & ~(v1 | v2)") == V0 & ~(V1 | V2)
        assert parse_elem("v0 | v1 & v2") == V0 | (V1 & V2)
        assert parse_elem("~~v2") == V2

    @pytest.mark.parametrize("text", ["", "v", "v0 &", "(v0", "x1"])
    def test_bad_terms(self, text):
        with pytest.raises(GrammarError):
            parse_elem(text)

    def test_unsorted_support(self):
        with pytest.raises(BooleanAlgebraError):
            BAElem.make((1, 0), 1)

    def test_folds(self):
        assert join_all([]) == BAElem.zero()
        assert meet_all([]) == BAElem.one()
        assert join_all([V0, V1]) == V0 | V1

    @given(tables)
    @pytest.mark.property_based
    def test_format_parses_back(self, x):
        assert parse_elem(format_elem(x)) == x


class TestFiniteAlgebras:
    """Tests for finite algebras and their extensions."""

    def test_extend_splits_atoms(self):
        extended, images = FiniteBA(2).extend(XBounds(0, 0b01))
        assert extended.n == 3
        assert images == [0b011, 0b100]
        assert FiniteBA(2).x_in_extension(XBounds(0, 0b01)) == 0b001

    def test_bounds_must_be_ordered(self):
        with pytest.raises(BooleanAlgebraError):
            XBounds(0b01, 0b10).check(FiniteBA(2))

    def test_embedding_needs_one_image_per_atom(self):
        with pytest.raises(BooleanAlgebraError):
            BAEmbedding(FiniteBA(2), FREE, (V0,))

    def test_is_embedding(self):
        assert BAEmbedding(FiniteBA(2), FREE, (V0, ~V0)).is_embedding()
        assert not BAEmbedding(FiniteBA(2), FREE, (V0, V1)).is_embedding()
        with pytest.raises(InvariantViolation):
            BAEmbedding(FiniteBA(2), FREE, (V0, BAElem.one())).verify()

    def test_random_bounds(self):
        rng = np.random.default_rng(0)
        algebra = FiniteBA(4)
        for _ in range(20):
            bounds = random_bounds(algebra, rng)
            bounds.check(algebra)
            assert not bounds.degenerate


class TestSeparation:
    """Tests for interpolation, extension and ideals."""

    def test_interpolate(self):
        a = interpolate([V0], [V0 | V1])
        assert a == V0 | (V1 & V2 & ~V0)
        assert V0.lt(a) and a.lt(V0 | V1)

    def test_interpolate_empty_sides(self):
        assert interpolate([], []) == V0

    def test_interpolate_failures(self):
        with pytest.raises(SeparationFailure) as exc:
            interpolate([V0], [V0])
        assert exc.value.lower == V0
        assert exc.value.upper == V0
        with pytest.raises(SeparationFailure):
            interpolate([V0], [V1])
        with pytest.raises(SeparationFailure):
            interpolate([V0, V1], [V0 | V1])

    def test_embed_into_atomless(self):
        assert embed_into_atomless(FiniteBA(1)).atom_images == (BAElem.one(),)
        assert embed_into_atomless(FiniteBA(2)).atom_images == (V0, ~V0)
        assert embed_into_atomless(FiniteBA(5)).is_embedding()

    def test_extend_one(self):
        f = embed_into_atomless(FiniteBA(2))
        g = extend_one(f, XBounds(0, 0b01), V0 & V1)
        assert g.domain.n == 3
        assert g.atom_images == (V0 & V1, V0 & ~V1, ~V0)

    def test_extend_one_rejects(self):
        f = embed_into_atomless(FiniteBA(2))
        with pytest.raises(Rejected):
            extend_one(f, XBounds(0, 0b01), V0)
        with pytest.raises(Rejected) as exc:
            extend_one(f, XBounds(0, 0b01), V1)
        assert (exc.value.lower, exc.value.upper) == (0, 0b01)
        assert exc.value.atom is None

    @pytest.mark.parametrize("y", [BAElem.zero(), V0])
    def test_extend_one_names_split_atom(self, y):
        f = embed_into_atomless(FiniteBA(2))
        with pytest.raises(Rejected) as exc:
            extend_one(f, XBounds(0, 0b01), y)
        assert exc.value.atom == 0b01
        assert exc.value.lower is None and exc.value.upper is None

    def test_find_extension_value(self):
        f = embed_into_atomless(FiniteBA(2))
        assert find_extension_value(f, XBounds(0, 0b01)) == V0 & V1
        assert find_extension_value(f, XBounds(0b01, 0b01)) == V0

    def test_ideal_principal(self):
        f = embed_into_atomless(FiniteBA(2))
        result = ideal_below(f, V0 | V1)
        assert result.principal
        assert result.generators == (1,)
        assert result.members == (0, 1)

    def test_ideal_not_principal(self):
        f = embed_into_atomless(FiniteBA(2))
        result = ideal_below(f, BAElem.one())
        assert not result.principal
        assert result.generators == (1, 2)

    def test_chain(self):
        stages = embed_chain(FiniteBA(2), [XBounds(0, 0b01)])
        assert len(stages) == 2
        assert stages[1].algebra.n == 3
        assert stages[1].value == V0 & V1
        assert stages[1].embedding.restricts_to(stages[0].embedding, stages[1].inclusion)

    def test_seeded_chain(self):
        rng = np.random.default_rng(7)
        algebra, steps = FiniteBA(3), []
        for _ in range(6):
            bounds = random_bounds(algebra, rng)
            steps.append(bounds)
            algebra, _ = algebra.extend(bounds)
        stages = embed_chain(FiniteBA(3), steps)
        assert stages[-1].algebra == algebra
        assert all(s.embedding.is_embedding() for s in stages)
