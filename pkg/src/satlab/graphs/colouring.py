"""Colouring numbers, downward orientation and the complement scan."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from satlab.graphs.structures import ColOrdering, FiniteDigraph, FiniteGraph
from satlab.utils.exceptions import TooLarge

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 9
SCAN_ATLAS_LIMIT = 7
SCAN_LIMIT = 8


def colouring_number(graph: FiniteGraph) -> tuple[int, ColOrdering]:
    """Least k admitting an ordering with fewer than k earlier neighbours per vertex.

    Repeatedly removes a vertex of minimum remaining degree (smallest id on
    ties); listing the removed vertices in reverse gives the ordering.
    """
    remaining = {v: set(graph.neighbours(v)) for v in range(graph.n)}
    removed: list[int] = []
    while remaining:
        v = min(remaining, key=lambda u: (len(remaining[u]), u))
        for u in remaining.pop(v):
            remaining[u].discard(v)
        removed.append(v)
    ordering = ColOrdering.for_graph(graph, reversed(removed))
    logger.debug("colouring number %d via %s", ordering.bound, ordering.order)
    return ordering.bound, ordering


def brute_force_colouring_number(graph: FiniteGraph) -> int:
    """Minimum over all vertex orderings; exponential, for cross-checks.

    Raises:
        TooLarge: Above ``BRUTE_FORCE_LIMIT`` vertices.
    """
    if graph.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{graph.n} vertices is beyond the brute-force limit")
    return min(
        (ColOrdering.for_graph(graph, perm).bound for perm in itertools.permutations(range(graph.n))),
        default=0,
    )


def orient_down(graph: FiniteGraph, ordering: ColOrdering) -> FiniteDigraph:
    """Direct every edge from its later endpoint to its earlier one.

    Raises:
        IncompleteOrdering: If the ordering misses a vertex.
    """
    ordering.check_covers(graph.n)
    pos = ordering.position
    arcs = ((u, v) if pos[u] > pos[v] else (v, u) for u, v in graph.edges)
    return FiniteDigraph.build(range(graph.n), arcs)


def is_acyclic(digraph: FiniteDigraph) -> bool:
    return nx.is_directed_acyclic_graph(digraph.to_networkx())


@dataclass(frozen=True)
class ScanRow:
    graph_id: int
    col: int
    col_complement: int


def complement_scan(n: int, seed: int = 0, sample_size: int = 64) -> list[ScanRow]:
    """Colouring numbers of graphs on ``n`` vertices and of their complements.

    Up to seven vertices every isomorphism class is listed, identified by its
    index in the networkx graph atlas. For eight vertices a seeded sample of
    G(8, 1/2) graphs is used and ids are sample indices.

    Raises:
        TooLarge: If ``n`` exceeds 8.
    """
    if n > SCAN_LIMIT:
        raise TooLarge(f"complement scan supports at most {SCAN_LIMIT} vertices")
    if n <= SCAN_ATLAS_LIMIT:
        catalogue = [
            (i, FiniteGraph.from_networkx(g))
            for i, g in enumerate(nx.graph_atlas_g())
            if g.number_of_nodes() == n
        ]
    else:
        rng = np.random.default_rng(seed)
        pairs = list(itertools.combinations(range(n), 2))
        catalogue = []
        for i in range(sample_size):
            keep = rng.random(len(pairs)) < 0.5
            catalogue.append((i, FiniteGraph.build(n, (p for p, k in zip(pairs, keep) if k))))

    rows = [
        ScanRow(gid, colouring_number(g)[0], colouring_number(g.complement())[0])
        for gid, g in catalogue
    ]
    logger.info("scanned %d graphs on %d vertices", len(rows), n)
    return rows
