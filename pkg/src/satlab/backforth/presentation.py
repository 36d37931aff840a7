"""Presentations: enumerations of a structure with a relation oracle and an extender.

Types of a new element over a finite set S are pairs of subsets of S:

- order:     (strictly lower, strictly upper)
- adjacency: (adjacent, non-adjacent)
- arc:       (out-neighbours, in-neighbours); the rest of S is unrelated
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Callable, Hashable, Iterator, Mapping, Optional, Sequence

import numpy as np

from satlab.graphs.bit import (
    bit_edge,
    minimal_witness,
    out_set,
    realize_out_set,
    saturated_random_graph,
)
from satlab.graphs.structures import FiniteDigraph, FiniteGraph
from satlab.orders.cuts import Cut, realize_cut
from satlab.orders.descriptors import OrderDesc, TernaryFinSupp, canonical_term
from satlab.utils.exceptions import (
    BackForthError,
    ExtenderExhausted,
    GrammarError,
    InvariantViolation,
)

logger = logging.getLogger(__name__)

SHUFFLE_BLOCK = 64
TABLE_VERTICES = 64
TABLE_SATURATION = (2, 2)


class RelationKind(str, Enum):
    ORDER = "order"
    ADJACENCY = "adjacency"
    ARC = "arc"


@dataclass(frozen=True)
class ElementType:
    """Relational type over a finite set, as two disjoint subsets of it."""
    first: frozenset = frozenset()
    second: frozenset = frozenset()

    def transport(self, mapping: Mapping[Any, Any]) -> ElementType:
        return ElementType(
            frozenset(mapping[s] for s in self.first),
            frozenset(mapping[s] for s in self.second),
        )


Extender = Callable[[ElementType, frozenset], Hashable]


@dataclass(frozen=True)
class Presentation:
    """An enumerated structure.

    ``relation(a, b)`` answers the atomic relation between distinct elements:
    a comparison sign for orders, a bool for adjacency, and for arcs 1 when
    a -> b, -1 when b -> a and 0 otherwise.
    """
    name: str
    kind: RelationKind
    stream: Callable[[], Iterator[Hashable]]
    relation: Callable[[Any, Any], Any]
    extender: Extender
    out_set: Optional[Callable[[Any], frozenset]] = None

    def elements(self) -> Iterator[Hashable]:
        return self.stream()

    def type_of(self, element: Any, over: frozenset) -> ElementType:
        if self.kind is RelationKind.ORDER:
            signs = {s: self.relation(s, element) for s in over}
            return ElementType(
                frozenset(s for s, v in signs.items() if v < 0),
                frozenset(s for s, v in signs.items() if v > 0),
            )
        if self.kind is RelationKind.ADJACENCY:
            adjacent = frozenset(s for s in over if self.relation(s, element))
            return ElementType(adjacent, over - adjacent)
        arcs = {s: self.relation(element, s) for s in over}
        return ElementType(
            frozenset(s for s, v in arcs.items() if v == 1),
            frozenset(s for s, v in arcs.items() if v == -1),
        )

    def realizes(self, element: Any, wanted: ElementType, over: frozenset) -> bool:
        return element not in over and self.type_of(element, over) == wanted

    def realize(self, wanted: ElementType, over: frozenset) -> Hashable:
        """Ask the extender for an element of type ``wanted`` over ``over`` and check it.

        Raises:
            ExtenderExhausted: If the extender has no such element.
            InvariantViolation: If the extender answers with a wrong element.
        """
        element = self.extender(wanted, over)
        if not self.realizes(element, wanted, over):
            raise InvariantViolation(f"{self.name} extender returned {element!r} of the wrong type")
        return element


def shuffled(canonical: Callable[[int], Hashable], seed: int, block: int = SHUFFLE_BLOCK) -> Iterator[Hashable]:
    """The canonical enumeration with each block of indices permuted; seed 0 keeps it."""
    for b in itertools.count():
        order = (
            range(block)
            if seed == 0
            else np.random.default_rng([seed, b]).permutation(block).tolist()
        )
        for i in order:
            yield canonical(b * block + i)


def make_dlo_presentation(seed: int = 0) -> Presentation:
    """The ternary dense order; its extender realizes cuts."""
    desc = TernaryFinSupp()

    def extend(wanted: ElementType, over: frozenset) -> Hashable:
        return realize_cut(desc, Cut(wanted.first, wanted.second))

    return Presentation(
        name=f"dlo:{seed}",
        kind=RelationKind.ORDER,
        stream=lambda: shuffled(canonical_term, seed),
        relation=desc.compare,
        extender=extend,
    )


def make_bit_presentation(seed: int = 0, max_bits: int = 4096) -> Presentation:
    """The BIT graph; its extender is the least saturation witness."""

    def extend(wanted: ElementType, over: frozenset) -> Hashable:
        found = minimal_witness(wanted.first, wanted.second, max_bits=max_bits)
        if found is None:
            raise ExtenderExhausted(f"no BIT witness below 2^{max_bits}")
        return found

    return Presentation(
        name=f"bit:{seed}",
        kind=RelationKind.ADJACENCY,
        stream=lambda: shuffled(lambda k: k, seed),
        relation=bit_edge,
        extender=extend,
    )


def _bit_arc(a: int, b: int) -> int:
    if a > b and (a >> b) & 1:
        return 1
    if b > a and (b >> a) & 1:
        return -1
    return 0


def make_bit_digraph_presentation(seed: int = 0) -> Presentation:
    """The BIT digraph; realizes an out-set A by sum of 2^a when nothing points in."""

    def extend(wanted: ElementType, over: frozenset) -> Hashable:
        if wanted.second:
            raise ExtenderExhausted("BIT digraph extender only realizes types without in-arcs")
        return realize_out_set(wanted.first)

    return Presentation(
        name=f"bitdigraph:{seed}",
        kind=RelationKind.ARC,
        stream=lambda: shuffled(lambda k: k, seed),
        relation=_bit_arc,
        extender=extend,
        out_set=out_set,
    )


def make_finite_presentation(
    name: str,
    kind: RelationKind,
    elements: Sequence[Hashable],
    relation: Callable[[Any, Any], Any],
    out_set: Optional[Callable[[Any], frozenset]] = None,
) -> Presentation:
    """A finite structure whose extender searches every element in order."""
    items = tuple(elements)

    def refuse(wanted: ElementType, over: frozenset) -> Hashable:
        raise ExtenderExhausted(f"{name} has no element of the requested type")

    bare = Presentation(name, kind, lambda: iter(items), relation, refuse, out_set)

    def extend(wanted: ElementType, over: frozenset) -> Hashable:
        for e in items:
            if bare.realizes(e, wanted, over):
                return e
        return refuse(wanted, over)

    return replace(bare, extender=extend)


def graph_presentation(graph: FiniteGraph, name: str = "graph") -> Presentation:
    return make_finite_presentation(
        name, RelationKind.ADJACENCY, range(graph.n), graph.has_edge
    )


def table_presentation(graph: FiniteGraph, seed: int = 0, name: str = "table") -> Presentation:
    """``graph`` read through its boolean adjacency matrix, enumerated in a seeded order.

    The extender answers with the first vertex of the enumeration whose row
    matches the wanted type; seed 0 enumerates 0..n-1.
    """
    table = graph.adjacency_table()
    order = np.arange(graph.n) if seed == 0 else np.random.default_rng(seed).permutation(graph.n)
    items = tuple(int(v) for v in order)

    def relation(a: int, b: int) -> bool:
        return bool(table[a, b])

    def extend(wanted: ElementType, over: frozenset) -> Hashable:
        fits = np.ones(graph.n, dtype=bool)
        if wanted.first:
            fits &= table[:, sorted(wanted.first)].all(axis=1)
        if wanted.second:
            fits &= ~table[:, sorted(wanted.second)].any(axis=1)
        if over:
            fits[sorted(over)] = False
        hits = np.flatnonzero(fits[order])
        if not hits.size:
            raise ExtenderExhausted(f"{name} has no vertex of the requested type")
        return items[int(hits[0])]

    return Presentation(
        name=name,
        kind=RelationKind.ADJACENCY,
        stream=lambda: iter(items),
        relation=relation,
        extender=extend,
    )


def make_table_presentation(
    seed: int = 0, n: int = TABLE_VERTICES, saturation: tuple[int, int] = TABLE_SATURATION
) -> Presentation:
    """A seeded random graph accepted by ``check_saturation(., *saturation)``, as a table."""
    graph = saturated_random_graph(n, *saturation, seed=seed)
    return table_presentation(graph, seed, name=f"table:{seed}")


def order_presentation(desc: OrderDesc, name: str = "order") -> Presentation:
    if not desc.is_finite():
        raise BackForthError("finite order presentations need a finite descriptor")
    return make_finite_presentation(name, RelationKind.ORDER, list(desc.elements()), desc.compare)


def digraph_presentation(digraph: FiniteDigraph, name: str = "digraph") -> Presentation:
    def arc(a: int, b: int) -> int:
        if (a, b) in digraph.arcs:
            return 1
        return -1 if (b, a) in digraph.arcs else 0

    return make_finite_presentation(
        name, RelationKind.ARC, digraph.vertices, arc, digraph.out_set
    )


def parse_presentation(text: str, default_seed: int = 0, max_bits: int = 4096) -> Presentation:
    """Read ``dlo[:SEED]``, ``bit[:SEED]``, ``bitdigraph[:SEED]`` or ``table[:SEED]``.

    Raises:
        GrammarError: On an unknown name or a bad seed.
    """
    name, _, seed_text = text.strip().partition(":")
    try:
        seed = int(seed_text) if seed_text else default_seed
    except ValueError as exc:
        raise GrammarError(f"bad seed in {text!r}") from exc
    if seed < 0:
        raise GrammarError("seeds are natural numbers")
    if name == "dlo":
        return make_dlo_presentation(seed)
    if name == "bit":
        return make_bit_presentation(seed, max_bits)
    if name == "bitdigraph":
        return make_bit_digraph_presentation(seed)
    if name == "table":
        return make_table_presentation(seed)
    raise GrammarError(f"unknown presentation {name!r}")
