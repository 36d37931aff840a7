"""Finite graphs, digraphs and vertex orderings, with their text formats.

Edge-list format: a header line ``n`` followed by one ``u v`` pair per line.
Digraph format: a header line ``n`` (vertices 0..n-1) or ``vertices: 0 1 3``
followed by one ``u > v`` arc per line. Blank lines and ``#`` comments are
ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx
import numpy as np

from satlab.utils.exceptions import (
    GrammarError,
    IncompleteOrdering,
    MalformedDigraph,
    MalformedGraph,
)


@dataclass(frozen=True)
class FiniteGraph:
    """Undirected loopless graph on vertices 0..n-1; edges stored as (u, v) with u < v."""
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise MalformedGraph("vertex count must be natural")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise MalformedGraph(f"edge ({u}, {v}) is a loop, unsorted or out of range")

    @classmethod
    def build(cls, n: int, pairs: Iterable[tuple[int, int]]) -> FiniteGraph:
        edges = set()
        for u, v in pairs:
            if u == v:
                raise MalformedGraph(f"loop at {u}")
            edges.add((min(u, v), max(u, v)))
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> FiniteGraph:
        return cls.build(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> FiniteGraph:
        return cls.build(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def random(cls, n: int, seed: int | list[int], density: float = 0.5) -> FiniteGraph:
        """Each pair is an edge independently with probability ``density``."""
        if not 0.0 <= density <= 1.0:
            raise MalformedGraph(f"edge density {density} is not a probability")
        upper = np.triu(np.random.default_rng(seed).random((n, n)) < density, k=1)
        return cls.build(n, ((int(u), int(v)) for u, v in zip(*np.nonzero(upper))))

    def adjacency_table(self) -> np.ndarray:
        """The symmetric boolean adjacency matrix."""
        table = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            us, vs = np.array(sorted(self.edges)).T
            table[us, vs] = table[vs, us] = True
        return table

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> FiniteGraph:
        index = {v: i for i, v in enumerate(sorted(graph.nodes))}
        return cls.build(len(index), ((index[u], index[v]) for u, v in graph.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def complement(self) -> FiniteGraph:
        return FiniteGraph.build(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)),
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class FiniteDigraph:
    """Loopless digraph without 2-cycles on an arbitrary finite set of natural labels."""
    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if list(self.vertices) != sorted(set(self.vertices)):
            raise MalformedDigraph("vertices must be sorted and distinct")
        labels = set(self.vertices)
        for u, v in self.arcs:
            if u == v:
                raise MalformedDigraph(f"loop at {u}")
            if u not in labels or v not in labels:
                raise MalformedDigraph(f"arc ({u}, {v}) leaves the vertex set")
            if (v, u) in self.arcs:
                raise MalformedDigraph(f"arcs ({u}, {v}) and ({v}, {u}) coexist")

    @classmethod
    def build(cls, vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> FiniteDigraph:
        return cls(tuple(sorted(set(vertices))), frozenset(arcs))

    @cached_property
    def _out(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return {v: frozenset(s) for v, s in out.items()}

    def out_set(self, v: int) -> frozenset[int]:
        """N_z(v): heads of the arcs leaving v."""
        return self._out[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return graph

    def relabel(self, mapping: dict[int, int]) -> FiniteDigraph:
        return FiniteDigraph.build(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in self.arcs),
        )


@dataclass(frozen=True)
class ColOrdering:
    """A vertex ordering with a strict bound on earlier-neighbour counts."""
    order: tuple[int, ...]
    bound: int

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def check_covers(self, n: int) -> None:
        if sorted(self.order) != list(range(n)):
            raise IncompleteOrdering(f"ordering {self.order} is not a permutation of 0..{n - 1}")

    def earlier_neighbours(self, graph: FiniteGraph, v: int) -> frozenset[int]:
        here = self.position[v]
        return frozenset(u for u in graph.neighbours(v) if self.position[u] < here)

    @classmethod
    def for_graph(cls, graph: FiniteGraph, order: Iterable[int]) -> ColOrdering:
        """The ordering with the least bound it satisfies on ``graph``."""
        draft = cls(tuple(order), 0)
        draft.check_covers(graph.n)
        worst = max((len(draft.earlier_neighbours(graph, v)) for v in draft.order), default=-1)
        return cls(draft.order, worst + 1)

    def holds_for(self, graph: FiniteGraph) -> bool:
        return all(len(self.earlier_neighbours(graph, v)) < self.bound for v in self.order)


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_graph(text: str) -> FiniteGraph:
    """Read the edge-list format.

    Raises:
        GrammarError: On malformed lines.
    """
    lines = _content_lines(text)
    if not lines:
        raise GrammarError("edge list needs an 'n' header line")
    try:
        n = int(lines[0])
        pairs = []
        for line in lines[1:]:
            u, v = line.split()
            pairs.append((int(u), int(v)))
    except ValueError as exc:
        raise GrammarError(f"bad edge list: {exc}") from exc
    return FiniteGraph.build(n, pairs)


def format_graph(graph: FiniteGraph) -> str:
    body = [str(graph.n)] + [f"{u} {v}" for u, v in sorted(graph.edges)]
    return "\n".join(body) + "\n"


def parse_digraph(text: str) -> FiniteDigraph:
    """Read the digraph format.

    Raises:
        GrammarError: On malformed lines.
    """
    lines = _content_lines(text)
    if not lines:
        raise GrammarError("digraph needs a header line")
    try:
        header = lines[0]
        if header.startswith("vertices:"):
            vertices = [int(tok) for tok in header[len("vertices:"):].split()]
        else:
            vertices = list(range(int(header)))
        arcs = []
        for line in lines[1:]:
            u, v = line.split(">")
            arcs.append((int(u), int(v)))
    except ValueError as exc:
        raise GrammarError(f"bad digraph: {exc}") from exc
    return FiniteDigraph.build(vertices, arcs)


def format_digraph(digraph: FiniteDigraph) -> str:
    if digraph.vertices == tuple(range(len(digraph.vertices))):
        header = str(len(digraph.vertices))
    else:
        header = "vertices: " + " ".join(map(str, digraph.vertices))
    return "\n".join([header] + [f"{u} > {v}" for u, v in sorted(digraph.arcs)]) + "\n"
