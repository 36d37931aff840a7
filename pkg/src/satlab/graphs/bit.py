"""The BIT predicate graph and its saturation witnesses.

Vertices are naturals; m < n are adjacent iff bit m of n is 1. Directing each
edge from the larger vertex to the smaller gives the BIT digraph, whose
out-set N_z(n) is the set of bit positions of n. Each finite set is realized
as an out-set exactly once (the digraph is extensional), so no multiplicity
parameter exists here.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from satlab.graphs.structures import FiniteDigraph, FiniteGraph
from satlab.utils.exceptions import GraphError, InvariantViolation, LoopQuery

logger = logging.getLogger(__name__)

_WORD_BITS = 62
_SCAN_BLOCK = 256


def bit_edge(m: int, n: int) -> bool:
    """Adjacency in the BIT graph.

    Raises:
        LoopQuery: If ``m == n``.
    """
    if m == n:
        raise LoopQuery(f"vertex {m} queried against itself")
    low, high = min(m, n), max(m, n)
    return (high >> low) & 1 == 1


def out_set(n: int) -> frozenset[int]:
    """N_z(n) in the BIT digraph: the positions of the 1 bits of n."""
    return frozenset(i for i in range(n.bit_length()) if (n >> i) & 1)


def realize_out_set(members: Iterable[int]) -> int:
    """The unique vertex whose BIT out-set is ``members``."""
    return sum(1 << a for a in set(members))


def out_closure(vertices: Iterable[int]) -> frozenset[int]:
    """The least set containing ``vertices`` and closed under BIT out-sets."""
    seen = set(vertices)
    stack = list(seen)
    while stack:
        for m in out_set(stack.pop()):
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return frozenset(seen)


def bit_graph(n: int) -> FiniteGraph:
    """The BIT graph restricted to 0..n-1."""
    return FiniteGraph.build(n, ((a, b) for b in range(n) for a in out_set(b)))


def bit_digraph(vertices: Iterable[int]) -> FiniteDigraph:
    """The BIT digraph induced on ``vertices``."""
    labels = set(vertices)
    return FiniteDigraph.build(
        labels, ((v, a) for v in labels for a in out_set(v) if a in labels)
    )


def _is_witness(v: int, a: frozenset[int], b: frozenset[int]) -> bool:
    if v in a or v in b:
        return False
    return all(bit_edge(v, x) for x in a) and not any(bit_edge(v, x) for x in b)


def fast_witness(a: Iterable[int], b: Iterable[int]) -> int:
    """Constructive witness: bits exactly at A plus one fresh bit above A u B."""
    a, b = frozenset(a), frozenset(b)
    if not a and not b:
        return 0
    return realize_out_set(a) + (1 << (max(a | b) + 1))


def _least_with_bits(lo: int, ones: int, zeros: int) -> int:
    """Least w >= lo with every bit of ``ones`` set and every bit of ``zeros`` clear."""
    if lo & ones == ones and lo & zeros == 0:
        return lo
    width = max(lo.bit_length(), ones.bit_length(), zeros.bit_length()) + 1
    for p in range(width + 1):
        bit = 1 << p
        if lo & bit or zeros & bit:
            continue
        high = (lo >> (p + 1)) << (p + 1)
        if high & zeros or (ones & ~(bit - 1) & ~bit) & ~high:
            continue
        return high | bit | (ones & (bit - 1))
    raise InvariantViolation("bit pattern search ran past its width")  # pragma: no cover


def minimal_witness(
    a: Iterable[int], b: Iterable[int], max_bits: Optional[int] = None
) -> Optional[int]:
    """Least witness for (A, B), searched interval by interval between the points of A u B.

    Inside an interval the points below w fix bits of w, and the points above
    w must have bit w set (for A) or clear (for B). When some point of A lies
    above, the candidates are its bit positions; otherwise the least w with
    the fixed bits is taken, skipping the finitely many bit positions of the
    B points above.

    Returns:
        The witness, or None when every witness needs more than ``max_bits`` bits.
    """
    a, b = frozenset(a), frozenset(b)
    points = sorted(a | b)
    cap = None if max_bits is None else 1 << max_bits
    for j in range(len(points) + 1):
        lo = points[j - 1] + 1 if j else 0
        hi = points[j] if j < len(points) else None
        if cap is not None and lo >= cap:
            return None
        below, above = points[:j], points[j:]
        if max_bits is not None and any(s in a and s >= max_bits for s in below):
            return None
        ones = sum(1 << s for s in below if s in a)
        zeros = sum(1 << s for s in below if s in b and (max_bits is None or s < max_bits))
        upper_a = [s for s in above if s in a]
        if upper_a:
            candidates = set.intersection(*(set(out_set(s)) for s in upper_a))
            for w in sorted(candidates):
                if w >= lo and (hi is None or w < hi) and _is_witness(w, a, b):
                    return w
            continue
        bad = set().union(*(out_set(s) for s in above))
        w = lo
        while True:
            w = _least_with_bits(w, ones, zeros)
            if (hi is not None and w >= hi) or (cap is not None and w >= cap):
                break
            if w not in bad:
                return w
            w += 1
    return None


def saturation_witness(a: Iterable[int], b: Iterable[int], fast: bool = False) -> int:
    """A vertex outside A u B adjacent to all of A and none of B.

    By default the least such vertex is returned; with ``fast`` the
    constructive witness is returned instead. Either way the result is
    re-checked.

    Raises:
        GraphError: If A and B intersect.
    """
    a, b = frozenset(a), frozenset(b)
    if a & b:
        raise GraphError(f"A and B share {sorted(a & b)}")
    found = fast_witness(a, b) if fast else minimal_witness(a, b)
    if found is None or not _is_witness(found, a, b):
        raise InvariantViolation(f"{found} does not witness ({sorted(a)}, {sorted(b)})")
    logger.debug("witness for (%s, %s) is %d", sorted(a), sorted(b), found)
    return found


def scan_witness(a: Iterable[int], b: Iterable[int]) -> int:
    """Least witness by a linear scan up to the constructive one; exponential, for cross-checks.

    Candidates are tested in numpy blocks of doubling length while every point
    of A u B fits in a machine word, and one at a time otherwise.
    """
    a, b = frozenset(a), frozenset(b)
    bound = fast_witness(a, b) + 1
    points = sorted(a | b)
    if points and points[-1] >= _WORD_BITS:
        return next(v for v in range(bound) if _is_witness(v, a, b))
    xs = np.array(points, dtype=np.int64)
    wanted = np.array([x in a for x in points], dtype=bool)
    start = 0
    while start < bound:
        stop = min(bound, max(2 * start, _SCAN_BLOCK))
        v = np.arange(start, stop, dtype=np.int64)[:, None]
        edges = np.where(v > xs, (v >> xs) & 1, (xs >> np.minimum(v, _WORD_BITS)) & 1) == 1
        hits = np.flatnonzero((edges == wanted).all(axis=1) & (v != xs).all(axis=1))
        if hits.size:
            return start + int(hits[0])
        start = stop
    raise InvariantViolation(f"no witness for ({points}) below the constructive one")  # pragma: no cover


@dataclass(frozen=True)
class SaturationResult:
    """Outcome of a finite saturation check; the counterexample is the first failing pair."""
    saturated: bool
    counterexample: Optional[tuple[frozenset[int], frozenset[int]]] = None


def _subsets_below(pool: list[int], size_limit: int) -> Iterable[frozenset[int]]:
    for size in range(min(size_limit, len(pool) + 1)):
        for combo in itertools.combinations(pool, size):
            yield frozenset(combo)


def check_saturation(graph: FiniteGraph, s: int, t: int) -> SaturationResult:
    """Check that every disjoint A, B with |A| < s and |B| < t has a witness in ``graph``.

    Pairs are enumerated by the size of A, then A lexicographically, then the
    same for B among the remaining vertices.
    """
    if s < 1 or t < 1:
        raise GraphError("s and t must be at least 1")
    vertices = list(range(graph.n))
    for a in _subsets_below(vertices, s):
        rest = [v for v in vertices if v not in a]
        for b in _subsets_below(rest, t):
            if not any(
                v not in a
                and v not in b
                and a <= graph.neighbours(v)
                and not (b & graph.neighbours(v))
                for v in vertices
            ):
                logger.info("saturation fails at A=%s B=%s", sorted(a), sorted(b))
                return SaturationResult(False, (a, b))
    return SaturationResult(True)


def saturated_random_graph(n: int, s: int, t: int, seed: int = 0, attempts: int = 16) -> FiniteGraph:
    """A seeded random graph on ``n`` vertices that ``check_saturation(., s, t)`` accepts.

    Draws with seeds (seed, 0), (seed, 1), ... until one passes.

    Raises:
        GraphError: If no draw passes within ``attempts``.
    """
    for attempt in range(attempts):
        graph = FiniteGraph.random(n, [seed, attempt])
        result = check_saturation(graph, s, t)
        if result.saturated:
            logger.info("random graph on %d vertices passed (%d, %d) at attempt %d", n, s, t, attempt)
            return graph
        logger.debug("attempt %d fails at %s", attempt, result.counterexample)
    raise GraphError(f"no random graph on {n} vertices passed ({s}, {t}) in {attempts} attempts")
