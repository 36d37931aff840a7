"""Redirecting a downward orientation so that prescribed sets become out-sets.

Starting from the downward orientation of a graph along a colouring ordering,
targets C_0, C_1, ... are handled in turn. For target C_i a vertex x_i is
chosen (least vertex id first) satisfying, with N the undirected
neighbourhood, "earlier" taken in the ordering and A(b) the vertices reachable
from b by paths that decrease in the ordering (b included):

1. x_i is not an earlier x_j.
2. C_i is contained in the earlier neighbours of x_i.
3. N(x_i) misses A(b) minus C_i for every b in C_0 u ... u C_i.
4. N(x_i) minus C_i misses the earlier neighbours of every earlier x_j.
5. x_i is not an earlier neighbour of any earlier x_j.
6. N(x_i) misses every earlier x_j outside C_i.

Then every arc from x_i into an earlier neighbour outside C_i is reversed.
A(b) is recomputed on the current digraph at each step. With ``alt_cond3``
condition 3 subtracts C_j from the A(b) terms with b in C_j instead of C_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from satlab.graphs.colouring import is_acyclic, orient_down
from satlab.graphs.structures import ColOrdering, FiniteDigraph, FiniteGraph
from satlab.utils.exceptions import (
    GraphError,
    InvariantViolation,
    MalformedGraph,
    NoAdmissibleVertex,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reversal:
    step: int
    vertex: int
    arcs: tuple[tuple[int, int], ...]


@dataclass
class RedirectResult:
    """Final (or partial) state of a redirection run."""
    digraph: FiniteDigraph
    assignment: list[int] = field(default_factory=list)
    log: list[Reversal] = field(default_factory=list)


class _Redirector:
    def __init__(
        self,
        graph: FiniteGraph,
        ordering: ColOrdering,
        targets: list[frozenset[int]],
        alt_cond3: bool,
    ) -> None:
        self.graph = graph
        self.ordering = ordering
        self.pos = ordering.position
        self.targets = targets
        self.alt_cond3 = alt_cond3
        self.arcs: set[tuple[int, int]] = set(orient_down(graph, ordering).arcs)
        self.chosen: list[int] = []
        self.log: list[Reversal] = []

    def earlier(self, v: int) -> frozenset[int]:
        return self.ordering.earlier_neighbours(self.graph, v)

    def reach_down(self, start: int) -> set[int]:
        """A(start): vertices reachable along arcs that decrease in the ordering."""
        down: dict[int, list[int]] = {}
        for u, v in self.arcs:
            if self.pos[v] < self.pos[u]:
                down.setdefault(u, []).append(v)
        seen = {start}
        stack = [start]
        while stack:
            for v in down.get(stack.pop(), ()):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def forbidden_by_cond3(self, i: int) -> set[int]:
        forbidden: set[int] = set()
        for j in range(i + 1):
            cut = self.targets[j] if self.alt_cond3 else self.targets[i]
            for b in self.targets[j]:
                forbidden |= self.reach_down(b) - cut
        return forbidden

    def admissible(self, x: int, i: int, cond3: set[int], taken: set[int]) -> bool:
        target = self.targets[i]
        nbrs = self.graph.neighbours(x)
        if x in self.chosen:
            return False
        if not target <= self.earlier(x):
            return False
        if nbrs & cond3:
            return False
        if (nbrs - target) & taken:
            return False
        if x in taken:
            return False
        return not (nbrs & (set(self.chosen) - target))

    def step(self, i: int) -> int:
        cond3 = self.forbidden_by_cond3(i)
        taken: set[int] = set()
        for y in self.chosen:
            taken |= self.earlier(y)
        for x in range(self.graph.n):
            if self.admissible(x, i, cond3, taken):
                break
        else:
            raise NoAdmissibleVertex(i, self.snapshot())
        flips = tuple(
            sorted((x, c) for c in self.earlier(x) - self.targets[i] if (x, c) in self.arcs)
        )
        for x_, c in flips:
            self.arcs.discard((x_, c))
            self.arcs.add((c, x_))
        self.chosen.append(x)
        self.log.append(Reversal(i, x, flips))
        logger.debug("target %d -> vertex %d, reversed %d arcs", i, x, len(flips))
        return x

    def snapshot(self) -> RedirectResult:
        return RedirectResult(
            FiniteDigraph.build(range(self.graph.n), self.arcs),
            list(self.chosen),
            list(self.log),
        )


def check_redirection(graph: FiniteGraph, ordering: ColOrdering, result: RedirectResult) -> None:
    """Check the redirection invariants on a (possibly partial) result.

    Raises:
        InvariantViolation: If an arc was reversed twice, two reversed sets
            overlap, an increasing two-arc path exists, or a cycle exists.
    """
    pos = ordering.position
    digraph = result.digraph

    seen_edges: set[frozenset[int]] = set()
    reversed_from: set[int] = set()
    for entry in result.log:
        heads = {c for _, c in entry.arcs}
        if heads & reversed_from:
            raise InvariantViolation(f"reversed sets overlap at step {entry.step}")
        reversed_from |= heads
        for arc in entry.arcs:
            edge = frozenset(arc)
            if edge in seen_edges:
                raise InvariantViolation(f"arc {arc} reversed twice")
            seen_edges.add(edge)

    for u, v in digraph.arcs:
        if pos[u] < pos[v]:
            for w in digraph.out_set(v):
                if pos[v] < pos[w]:
                    raise InvariantViolation(f"increasing path {u} -> {v} -> {w}")

    if not is_acyclic(digraph):
        cycle = nx.find_cycle(digraph.to_networkx())
        raise InvariantViolation(f"cycle {cycle}")


def redirect(
    graph: FiniteGraph,
    ordering: ColOrdering,
    targets: Sequence[frozenset[int] | set[int]],
    alt_cond3: bool = False,
) -> RedirectResult:
    """Orient ``graph`` downwards, then realize each target as an out-set.

    Raises:
        NoAdmissibleVertex: When no vertex meets the conditions for a target;
            the error's ``partial`` holds the result up to the previous target.
        InvariantViolation: If a final check fails.
    """
    ordering.check_covers(graph.n)
    if not ordering.holds_for(graph):
        raise GraphError(f"ordering does not satisfy its bound {ordering.bound}")
    sets = [frozenset(c) for c in targets]
    for c in sets:
        if any(not 0 <= v < graph.n for v in c):
            raise MalformedGraph(f"target {sorted(c)} leaves the vertex range")

    runner = _Redirector(graph, ordering, sets, alt_cond3)
    for i in range(len(sets)):
        runner.step(i)
    result = runner.snapshot()

    for x, c in zip(result.assignment, sets):
        if result.digraph.out_set(x) != c:
            raise InvariantViolation(f"out-set of {x} is not {sorted(c)}")
    check_redirection(graph, ordering, result)
    logger.info("redirected %d targets with %d reversals", len(sets), sum(len(e.arcs) for e in result.log))
    return result
