"""Order embeddings: search, L-dimension, union merging and binary trees in intervals."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Mapping, Optional

from satlab.orders.cuts import Cut, neighbour, realize_cut
from satlab.orders.descriptors import (
    Finite,
    LexPower,
    LexTerm,
    OrderDesc,
    Product,
    Reverse,
    Sum,
    SumTerm,
    Side,
    TernaryFinSupp,
    canonical_term,
    lex_power,
)
from satlab.orders.ordinals import OrdinalCNF
from satlab.utils.exceptions import (
    BaseTooSmall,
    BoundTooSmall,
    EmptyOrderBetween,
    InvariantViolation,
    MalformedInterval,
    NoSeparatingPoint,
    OrderError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderEmbedding:
    """A finite strictly increasing map from terms of ``domain`` to terms of ``codomain``."""
    domain: OrderDesc
    codomain: OrderDesc
    pairs: tuple[tuple[Any, Any], ...]

    @classmethod
    def from_map(
        cls, domain: OrderDesc, codomain: OrderDesc, mapping: Mapping[Any, Any]
    ) -> OrderEmbedding:
        keys = domain.sorted_terms(mapping)
        return cls(domain, codomain, tuple((k, mapping[k]) for k in keys))

    @property
    def mapping(self) -> dict[Any, Any]:
        return dict(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, term: Any) -> Any:
        return self.mapping[term]

    def is_order_preserving(self) -> bool:
        """Consecutive images increase (the pairs are kept in domain order)."""
        for x, y in self.pairs:
            self.domain.validate(x)
            self.codomain.validate(y)
        return all(
            self.domain.compare(x0, x1) < 0 and self.codomain.compare(y0, y1) < 0
            for (x0, y0), (x1, y1) in zip(self.pairs, self.pairs[1:])
        )

    def verify(self) -> OrderEmbedding:
        if not self.is_order_preserving():
            raise InvariantViolation("map is not strictly order preserving")
        return self


def term_stream(desc: OrderDesc) -> Iterator[Any]:
    """Injective enumeration of terms, exhaustive for finite descriptors."""
    if desc.is_finite():
        yield from desc.elements()
    elif isinstance(desc, TernaryFinSupp):
        for k in itertools.count():
            yield canonical_term(k)
    elif isinstance(desc, Reverse):
        yield from term_stream(desc.inner)
    elif isinstance(desc, Sum):
        streams = [
            (Side.LEFT, term_stream(desc.left)),
            (Side.RIGHT, term_stream(desc.right)),
        ]
        while streams:
            for entry in list(streams):
                side, stream = entry
                try:
                    yield SumTerm(side, next(stream))
                except StopIteration:
                    streams.remove(entry)
    elif isinstance(desc, Product):
        outer_seen: list[Any] = []
        inner_seen: list[Any] = []
        outer_it, inner_it = term_stream(desc.outer), term_stream(desc.inner)
        for diagonal in itertools.count():
            for seen, it in ((outer_seen, outer_it), (inner_seen, inner_it)):
                if len(seen) <= diagonal:
                    seen.extend(itertools.islice(it, 1))
            emitted = False
            for i in range(diagonal + 1):
                j = diagonal - i
                if i < len(outer_seen) and j < len(inner_seen):
                    emitted = True
                    yield (outer_seen[i], inner_seen[j])
            if not emitted:
                return
    elif isinstance(desc, LexPower):
        yield LexTerm()
        values = (v for v in term_stream(desc.base) if v != desc.default)
        if desc.base.is_finite():
            # supports on finite positions only; the exponent is infinite here
            digits = [desc.default] + list(values)
            for k in itertools.count(1):
                entries: dict[OrdinalCNF, Any] = {}
                position = 0
                while k:
                    k, d = divmod(k, len(digits))
                    entries[OrdinalCNF.finite(position)] = digits[d]
                    position += 1
                yield LexTerm.from_map(entries, desc.default)
        else:
            for v in values:
                yield LexTerm(((OrdinalCNF.zero(), v),))


def embed_search(x: OrderDesc, y: OrderDesc, size_bound: int) -> Optional[OrderEmbedding]:
    """Lexicographically least embedding of the finite order ``x`` into ``y``.

    For a finite codomain this maps the i-th element of ``x`` to the i-th
    element of ``y``. For an infinite codomain the first ``size_bound``
    terms of its canonical stream are sorted and used instead.

    Returns:
        The embedding, or None when ``y`` is too small.

    Raises:
        BoundTooSmall: If the enumeration bound stops the search before a decision.
    """
    if not x.is_finite():
        raise OrderError("embed_search needs a finite domain")
    xs = list(x.elements())
    y_size = y.size()
    if y_size is not None and y_size < len(xs):
        return None
    if len(xs) > size_bound:
        raise BoundTooSmall(f"need {len(xs)} codomain elements, bound is {size_bound}")
    if y_size is not None:
        ys = list(itertools.islice(y.elements(), len(xs)))
    else:
        ys = y.sorted_terms(itertools.islice(term_stream(y), size_bound))[: len(xs)]
    return OrderEmbedding(x, y, tuple(zip(xs, ys))).verify()


def ldim(x: OrderDesc, base: OrderDesc, max_exponent: int = 16) -> int:
    """Least k with ``x`` embeddable into the finite lexicographic power base^k.

    Raises:
        BaseTooSmall: If the base has fewer than two elements.
        BoundTooSmall: If no exponent up to ``max_exponent`` works.
    """
    b = base.size()
    if b is None:
        raise OrderError("ldim needs a finite base")
    if b < 2:
        raise BaseTooSmall(f"base of size {b} has only one power")
    for k in range(max_exponent + 1):
        power = lex_power(base, k)
        if embed_search(x, power, size_bound=b**k) is not None:
            logger.debug("ldim found at exponent %d", k)
            return k
    raise BoundTooSmall(f"no embedding up to exponent {max_exponent}")


def embed_into_power(
    ambient: OrderDesc,
    terms: Iterable[Any],
    base: OrderDesc,
    default: Any | None = None,
    max_exponent: int = 16,
) -> OrderEmbedding:
    """Send the sorted ``terms`` to the least elements of the least power base^k holding them.

    Raises:
        BaseTooSmall: If the base has fewer than two elements.
        BoundTooSmall: If ``max_exponent`` is too small.
    """
    ordered = ambient.sorted_terms(terms)
    k = ldim(Finite(len(ordered)), base, max_exponent) if ordered else 0
    power = lex_power(base, k, default)
    images = itertools.islice(power.elements(), len(ordered))
    return OrderEmbedding(ambient, power, tuple(zip(ordered, images))).verify()


def _shift(term: LexTerm, offset: OrdinalCNF) -> dict[OrdinalCNF, Any]:
    return {offset + p: v for p, v in term.support}


def _separator(
    power: LexPower,
    block: OrdinalCNF,
    below: Optional[LexTerm],
    above: Optional[LexTerm],
) -> LexTerm:
    """Point of base^(block+1) strictly between the padded images ``below`` and ``above``."""
    if below is None and above is None:
        return LexTerm()
    candidates: list[LexTerm] = []
    for anchor, upward in ((below, True), (above, False)):
        if anchor is None:
            continue
        try:
            value = neighbour(power.base, power.default, above=upward)
        except EmptyOrderBetween:
            continue
        candidates.append(LexTerm.from_map({**anchor.as_map(), block: value}, power.default))

    def inside(z: LexTerm) -> bool:
        return (below is None or power.compare(below, z) < 0) and (
            above is None or power.compare(z, above) < 0
        )

    for z in candidates:
        if inside(z):
            return z
    if block.is_finite and power.base.is_finite():
        for z in lex_power(power.base, block.as_int() + 1, power.default).elements():
            if inside(z):
                return z
    raise NoSeparatingPoint(f"no room between {below} and {above} at position {block}")


def merge_union_embedding(
    ambient: OrderDesc,
    a_terms: Iterable[Any],
    b_terms: Iterable[Any],
    ia: OrderEmbedding,
    ib: OrderEmbedding,
) -> OrderEmbedding:
    """Combine A -> L^a and B -> L^b into an embedding of A u B into L^(a+1+b).

    B is split into runs with no point of A between them; one representative
    per run gets a block at position a lying strictly between the images of
    the neighbouring points of A, and every point of the run is sent to that
    block followed by its own B-image. Points of A keep their images.

    Raises:
        NoSeparatingPoint: If the power has no room for some block.
    """
    pa, pb = ia.codomain, ib.codomain
    if not (isinstance(pa, LexPower) and isinstance(pb, LexPower)):
        raise OrderError("both embeddings must land in lexicographic powers")
    if pa.base != pb.base or pa.default != pb.default:
        raise OrderError("both powers must share base and default")
    a_sorted = ambient.sorted_terms(a_terms)
    b_sorted = ambient.sorted_terms(b_terms)
    if set(a_sorted) & set(b_sorted):
        raise OrderError("A and B must be disjoint")
    if set(ia.mapping) != set(a_sorted) or set(ib.mapping) != set(b_sorted):
        raise OrderError("embedding domains must equal A and B")
    ia.verify()
    ib.verify()

    block = pa.exponent
    offset = block.successor()
    target = LexPower(pa.base, offset + pb.exponent, pa.default)
    a_images, b_images = ia.mapping, ib.mapping

    blocks: dict[tuple[Any, Any], LexTerm] = {}
    result: dict[Any, Any] = {a: a_images[a] for a in a_sorted}
    for b in b_sorted:
        below = next((a for a in reversed(a_sorted) if ambient.compare(a, b) < 0), None)
        above = next((a for a in a_sorted if ambient.compare(b, a) < 0), None)
        run = (below, above)
        if run not in blocks:
            blocks[run] = _separator(
                target,
                block,
                None if below is None else a_images[below],
                None if above is None else a_images[above],
            )
        head = blocks[run].as_map()
        result[b] = LexTerm.from_map({**head, **_shift(b_images[b], offset)}, pa.default)

    logger.debug("merged %d + %d points using %d blocks", len(a_sorted), len(b_sorted), len(blocks))
    return OrderEmbedding.from_map(ambient, target, result).verify()


def grow_binary(desc: OrderDesc, a0: Any, a1: Any, depth: int) -> OrderEmbedding:
    """Embed the lexicographic 2^depth into the open interval (a0, a1).

    Stage by stage, i(x0) = i(x) and i(x1) is a fresh point strictly between
    i(x) and the next image above it (or a1).

    Raises:
        MalformedInterval: If a0 is not below a1.
    """
    desc.validate(a0)
    desc.validate(a1)
    if desc.compare(a0, a1) >= 0:
        raise MalformedInterval("interval endpoints must increase")
    if depth < 0:
        raise OrderError("depth must be natural")

    stage: list[tuple[tuple[int, ...], Any]] = [
        ((), realize_cut(desc, Cut(frozenset({a0}), frozenset({a1}))))
    ]
    for _ in range(depth):
        grown: list[tuple[tuple[int, ...], Any]] = []
        for i, (word, image) in enumerate(stage):
            ceiling = stage[i + 1][1] if i + 1 < len(stage) else a1
            fresh = realize_cut(desc, Cut(frozenset({image}), frozenset({ceiling})))
            grown.append((word + (0,), image))
            grown.append((word + (1,), fresh))
        stage = grown

    domain = lex_power(Finite(2), depth, 0)
    mapping = {domain.from_tuple(word): image for word, image in stage}
    return OrderEmbedding.from_map(domain, desc, mapping).verify()
