"""Mostowski collapse of acyclic digraphs, membership-preserving embeddings, isomorphism."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Protocol

import networkx as nx

from satlab.graphs.bit import out_set as bit_out_set
from satlab.graphs.bit import realize_out_set
from satlab.graphs.structures import FiniteDigraph
from satlab.hf.sets import HFSet, transitive_closure
from satlab.utils.exceptions import (
    CyclicInput,
    InvariantViolation,
    NotExtensional,
    RealizerFailure,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollapseMap:
    """collapse(v) = {collapse(w) : v -> w} for every vertex of a digraph."""
    values: dict[int, HFSet]
    injective: bool

    def __getitem__(self, vertex: int) -> HFSet:
        return self.values[vertex]

    def image(self) -> set[HFSet]:
        return set(self.values.values())


def mostowski_collapse(digraph: FiniteDigraph) -> CollapseMap:
    """Collapse ``digraph``, sinks first along a topological order.

    Raises:
        CyclicInput: If the digraph has a directed cycle.
    """
    try:
        order = list(nx.topological_sort(digraph.to_networkx()))
    except nx.NetworkXUnfeasible as exc:
        raise CyclicInput("collapse needs an acyclic digraph") from exc
    values: dict[int, HFSet] = {}
    for v in reversed(order):
        values[v] = HFSet.of(*(values[w] for w in digraph.out_set(v)))
    injective = len(set(values.values())) == len(values)
    logger.debug("collapsed %d vertices, injective=%s", len(values), injective)
    return CollapseMap(values, injective)


class Realizer(Protocol):
    """Maps a finite set of vertices to a vertex with exactly that out-set."""

    def __call__(self, members: frozenset[int]) -> int: ...

    def out_set(self, vertex: int) -> frozenset[int]: ...


class BitRealizer:
    """The BIT digraph realizer A -> sum of 2^a."""

    def __call__(self, members: frozenset[int]) -> int:
        return realize_out_set(members)

    def out_set(self, vertex: int) -> frozenset[int]:
        return bit_out_set(vertex)


@dataclass
class DigraphRealizer:
    """Table-based realizer over a finite digraph; the least matching vertex wins."""
    digraph: FiniteDigraph
    table: dict[frozenset[int], int] = field(init=False)

    def __post_init__(self) -> None:
        self.table = {}
        for v in self.digraph.vertices:
            self.table.setdefault(self.digraph.out_set(v), v)

    def __call__(self, members: frozenset[int]) -> int:
        try:
            return self.table[members]
        except KeyError:
            raise RealizerFailure(f"no vertex has out-set {sorted(members)}") from None

    def out_set(self, vertex: int) -> frozenset[int]:
        return self.digraph.out_set(vertex)


def epsilon_map(x: HFSet, realizer: Realizer) -> dict[HFSet, int]:
    """phi on x and its transitive closure, with N_z(phi(y)) = phi[y].

    Members always have smaller codes than their sets, so code order is an
    order of the recursion.

    Raises:
        RealizerFailure: If the realizer cannot produce some vertex, or returns
            one whose out-set is wrong.
    """
    phi: dict[HFSet, int] = {}
    for y in sorted(transitive_closure(x) | {x}, key=lambda s: s.code):
        wanted = frozenset(phi[c] for c in y.children)
        vertex = realizer(wanted)
        if realizer.out_set(vertex) != wanted:
            raise RealizerFailure(f"vertex {vertex} does not realize {sorted(wanted)}")
        phi[y] = vertex
    return phi


def epsilon_embed(x: HFSet, realizer: Optional[Realizer] = None) -> int:
    """Image of ``x`` under the membership-preserving embedding (BIT realizer by default)."""
    return epsilon_map(x, realizer or BitRealizer())[x]


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: Optional[dict[int, int]] = None


def iso_extensional(first: FiniteDigraph, second: FiniteDigraph) -> IsoResult:
    """Decide isomorphism of two extensional acyclic digraphs by comparing collapses.

    Raises:
        CyclicInput: If either digraph has a cycle.
        NotExtensional: If either collapse is not injective.
    """
    c1, c2 = mostowski_collapse(first), mostowski_collapse(second)
    for name, c in (("first", c1), ("second", c2)):
        if not c.injective:
            raise NotExtensional(f"{name} digraph has two vertices with the same collapse")
    if c1.image() != c2.image():
        return IsoResult(False)
    back = {s: v for v, s in c2.values.items()}
    mapping = {v: back[s] for v, s in c1.values.items()}
    if first.relabel(mapping).arcs != second.arcs:
        raise InvariantViolation("collapse bijection is not a digraph isomorphism")
    return IsoResult(True, mapping)
