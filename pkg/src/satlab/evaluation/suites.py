"""Oracle suites for ``satlab selftest``.

Every suite drives one part of the library over a batch of generated
instances and compares the answers with an independent checker: a linear
scan, a brute-force search, a networkx routine or a direct recomputation
from the definitions. Suites run at two scales; ``quick`` keeps the whole
run to a few seconds, ``full`` uses the sizes of the acceptance runs.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable

import networkx as nx
import numpy as np

from satlab.ba.elements import BAElem, format_elem, parse_elem
from satlab.ba.finite import BAEmbedding, FiniteBA, XBounds, random_bounds
from satlab.ba.separation import embed_chain, extend_one, interpolate
from satlab.backforth.engine import (
    PartialIso,
    Selection,
    bf_run,
    pending_request,
    verify_partial_iso,
)
from satlab.backforth.presentation import (
    Presentation,
    make_bit_digraph_presentation,
    make_bit_presentation,
    make_dlo_presentation,
    make_table_presentation,
)
from satlab.evaluation.metrics import SelftestReport, SuiteResult
from satlab.graphs.bit import (
    bit_digraph,
    bit_edge,
    bit_graph,
    out_closure,
    out_set,
    realize_out_set,
    saturation_witness,
    scan_witness,
)
from satlab.graphs.colouring import brute_force_colouring_number, colouring_number
from satlab.graphs.redirect import RedirectResult, check_redirection, redirect
from satlab.graphs.structures import ColOrdering, FiniteGraph
from satlab.hf.collapse import epsilon_embed, mostowski_collapse
from satlab.hf.sets import decode, encode, hf_sets_of_rank, parse_braces, to_braces
from satlab.orders.descriptors import Finite, TernaryFinSupp, canonical_term, lex_power
from satlab.orders.embeddings import (
    OrderEmbedding,
    grow_binary,
    ldim,
    merge_union_embedding,
    term_stream,
)
from satlab.orders.grammar import format_desc, format_term, parse_desc, parse_term
from satlab.utils.exceptions import (
    ExtenderExhausted,
    NoAdmissibleVertex,
    Rejected,
    SatlabError,
    SeparationFailure,
)

logger = logging.getLogger(__name__)

# enumeration seeds whose BIT maps stay below the default bit cap; the first pair for 50 steps
BIT_SEED_PAIRS = ((0, 1), (0, 2), (0, 3), (0, 5))
# steps a table run must complete before its extender may give up
TABLE_SURE_STEPS = 3


class Scale(str, Enum):
    QUICK = "quick"
    FULL = "full"


@dataclass
class Outcome:
    """Case tally collected by a suite."""
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)


SuiteRunner = Callable[[Scale, int], Outcome]


@dataclass
class OracleSuite:
    """A single oracle suite.

    Attributes:
        suite_id: Unique identifier (e.g., 'bit_extension').
        name: Human-readable name.
        description: What is checked and against which oracle.
        category: Module exercised.
        run: Callable taking the scale and the seed.
    """
    suite_id: str
    name: str
    description: str
    category: str
    run: SuiteRunner = field(repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite_id": self.suite_id,
            "name": self.name,
            "description": self.description,
            "category": self.category,
        }

    def execute(self, scale: Scale, seed: int = 0) -> SuiteResult:
        """Run the suite and convert its tally into a ``SuiteResult``."""
        start = time.perf_counter()
        result = SuiteResult(self.suite_id, self.name, self.category)
        try:
            outcome = self.run(scale, seed)
        except Exception as exc:
            logger.exception("suite %s crashed", self.suite_id)
            result.error = f"{type(exc).__name__}: {exc}"
        else:
            result.cases = outcome.cases
            result.failures = len(outcome.failures)
            result.passed = not outcome.failures
            result.detail = "; ".join(outcome.failures[:1] + outcome.notes)
        result.elapsed_seconds = time.perf_counter() - start
        logger.info(
            "%s: %s (%d cases, %.2fs)",
            self.suite_id,
            "pass" if result.passed else "FAIL",
            result.cases,
            result.elapsed_seconds,
        )
        return result


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, salt])


def _subsets(pool: Iterable[int], max_size: int) -> Iterable[frozenset[int]]:
    items = list(pool)
    for size in range(max_size + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


# ── Graphs ───────────────────────────────────────────────────────────


def _independent_witness(v: int, a: frozenset[int], b: frozenset[int]) -> bool:
    return (
        v not in a
        and v not in b
        and all(bit_edge(x, v) for x in a)
        and not any(bit_edge(y, v) for y in b)
    )


def run_bit_extension(scale: Scale, seed: int) -> Outcome:
    """Every disjoint pair gets a witness; minimal witnesses match a linear scan."""
    out = Outcome()
    limit, size = (8, 2) if scale is Scale.QUICK else (16, 3)
    for a in _subsets(range(limit), size):
        for b in _subsets((v for v in range(limit) if v not in a), size):
            w = saturation_witness(a, b)
            out.check(_independent_witness(w, a, b), f"{w} is no witness for {sorted(a)}/{sorted(b)}")
            fast = saturation_witness(a, b, fast=True)
            out.check(_independent_witness(fast, a, b), f"constructive {fast} fails {sorted(a)}/{sorted(b)}")
            oracle = scan_witness(a, b)
            out.check(w == oracle, f"minimal witness {w} != scan {oracle} for {sorted(a)}/{sorted(b)}")
    return out


def run_realization(scale: Scale, seed: int) -> Outcome:
    """Each subset of 0..k-1 is the out-set of exactly one n < 2^k."""
    out = Outcome()
    k = 8 if scale is Scale.QUICK else 12
    owners: dict[int, frozenset[int]] = {}
    for mask in range(1 << k):
        members = frozenset(i for i in range(k) if (mask >> i) & 1)
        n = realize_out_set(members)
        out.check(out_set(n) == members, f"out-set of {n} is not {sorted(members)}")
        owners[n] = members
    out.check(sorted(owners) == list(range(1 << k)), "realization is not a bijection onto 0..2^k-1")
    return out


def run_colouring(scale: Scale, seed: int) -> Outcome:
    """Peeling agrees with brute force on small atlas graphs and with k-cores on seven vertices."""
    out = Outcome()
    brute_limit = 5 if scale is Scale.QUICK else 6
    for index, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        graph = FiniteGraph.from_networkx(g)
        col, ordering = colouring_number(graph)
        out.check(ordering.holds_for(graph), f"atlas {index}: ordering breaks its bound")
        if n <= brute_limit:
            expected = brute_force_colouring_number(graph)
            out.check(col == expected, f"atlas {index}: peeling {col} != brute force {expected}")
        elif n > 0 and (scale is Scale.FULL or index % 25 == 0):
            expected = max(nx.core_number(g).values()) + 1
            out.check(col == expected, f"atlas {index}: peeling {col} != degeneracy + 1 {expected}")

    if scale is Scale.FULL:
        rng = _rng(seed, 6)
        sevens = [i for i, g in enumerate(nx.graph_atlas_g()) if g.number_of_nodes() == 7]
        for index in rng.choice(sevens, size=20, replace=False):
            graph = FiniteGraph.from_networkx(nx.graph_atlas(int(index)))
            col, expected = colouring_number(graph)[0], brute_force_colouring_number(graph)
            out.check(col == expected, f"atlas {index}: peeling {col} != brute force {expected}")
    return out


def _check_redirect_result(
    out: Outcome, label: str, graph: FiniteGraph, ordering: ColOrdering,
    targets: list[frozenset[int]], result: RedirectResult,
) -> None:
    try:
        check_redirection(graph, ordering, result)
    except SatlabError as exc:
        out.check(False, f"{label}: {exc}")
        return
    out.check(nx.is_directed_acyclic_graph(result.digraph.to_networkx()), f"{label}: cyclic output")
    for x, c in zip(result.assignment, targets):
        out.check(result.digraph.out_set(x) == c, f"{label}: out-set of {x} is not {sorted(c)}")
    edges = [frozenset(arc) for entry in result.log for arc in entry.arcs]
    out.check(len(edges) == len(set(edges)), f"{label}: an arc was reversed twice")


def run_redirect(scale: Scale, seed: int) -> Outcome:
    """Seeded redirections over BIT segments 0..2^m-1 with m >= 10 and targets inside {0, 1, 2}.

    At most three targets are drawn, which keeps a target's bits plus one fresh
    position in 4..m-1 admissible at every step, so no instance may stop
    early. An alternative-condition instance that must stop is checked too.
    """
    out = Outcome()
    count = 10 if scale is Scale.QUICK else 100
    segments: dict[int, tuple[FiniteGraph, ColOrdering]] = {}

    def segment(m: int) -> tuple[FiniteGraph, ColOrdering]:
        if m not in segments:
            graph = bit_graph(1 << m)
            segments[m] = (graph, ColOrdering.for_graph(graph, range(1 << m)))
        return segments[m]

    for i in range(count):
        rng = _rng(seed, 700 + i)
        m = int(rng.integers(10, 12))
        graph, ordering = segment(m)
        targets = [
            frozenset(int(v) for v in rng.choice(3, size=int(rng.integers(1, 3)), replace=False))
            for _ in range(int(rng.integers(1, 4)))
        ]
        label = f"instance {i} (m={m}, targets {[sorted(c) for c in targets]})"
        try:
            result = redirect(graph, ordering, targets)
        except NoAdmissibleVertex as exc:
            out.check(False, f"{label}: no admissible vertex for target {exc.index}")
            continue
        _check_redirect_result(out, label, graph, ordering, targets, result)

    graph, ordering = segment(10)
    targets = [frozenset({0, 1}), frozenset({2}), frozenset({0, 2})]
    try:
        redirect(graph, ordering, targets, alt_cond3=True)
    except NoAdmissibleVertex as exc:
        out.check(exc.index == 2, f"alternative condition stopped at target {exc.index}, not 2")
        _check_redirect_result(out, "alternative condition (partial)", graph, ordering, targets, exc.partial)
    else:
        out.check(False, "alternative condition found a vertex for a target its closure forbids")
    return out


# ── Hereditarily finite sets ─────────────────────────────────────────


def run_collapse(scale: Scale, seed: int) -> Outcome:
    """Collapsing the BIT digraph below n gives back the set coded by n."""
    out = Outcome()
    bound = 1 << (6 if scale is Scale.QUICK else 10)
    for n in range(bound):
        collapse = mostowski_collapse(bit_digraph(out_closure([n])))
        out.check(collapse[n] == decode(n), f"collapse of {n} is {collapse[n]}")
        out.check(collapse.injective, f"closure of {n} collapses non-injectively")
    return out


def run_epsilon(scale: Scale, seed: int) -> Outcome:
    """The membership embedding into BIT is the Ackermann code."""
    out = Outcome()
    for x in hf_sets_of_rank(4 if scale is Scale.QUICK else 5):
        got = epsilon_embed(x)
        out.check(got == encode(x), f"epsilon({to_braces(x)}) = {got}")
    return out


# ── Back-and-forth ───────────────────────────────────────────────────


def _check_fair(
    out: Outcome, left: Presentation, right: Presentation, steps: int, p: PartialIso
) -> None:
    for k, e in enumerate(itertools.islice(left.elements(), (steps + 1) // 2)):
        out.check(e in p.forward, f"left element {k} unmapped after {steps} steps")
    for k, e in enumerate(itertools.islice(right.elements(), steps // 2)):
        out.check(e in p.backward, f"right element {k} unmapped after {steps} steps")


def _check_table_exhaustion(
    out: Outcome, left: Presentation, right: Presentation, exc: ExtenderExhausted
) -> None:
    partial, step = exc.partial, exc.step
    out.check(step is not None and step >= TABLE_SURE_STEPS, f"table run gave up at step {step}")
    out.check(verify_partial_iso(left, right, partial), "table partial map broke adjacency")
    request = pending_request(left, right, partial, step or 0)
    if request is None:
        out.check(False, f"table run gave up at step {step} with nothing to map")
        return
    target, wanted, over = request
    if target is left:
        out.check(
            not any(left.realizes(v, wanted, over) for v in left.elements()),
            f"table gave up at step {step} on a type one of its vertices realizes",
        )
    out.notes.append(f"table run ended after {len(partial)} pairs")


def run_backforth(scale: Scale, seed: int) -> Outcome:
    """Dense orders, BIT graphs and a random table: verified maps, fair in both directions.

    The BIT runs use enumeration seeds whose least witnesses stay below the
    bit cap for the whole run. The table realizes every type over one vertex,
    so a run against BIT lasts at least three steps and may only end later
    on a type none of its vertices realizes.
    """
    out = Outcome()
    dlo_steps = 60 if scale is Scale.QUICK else 200
    left, right = make_dlo_presentation(seed + 1), make_dlo_presentation(seed + 2)
    p = bf_run(left, right, dlo_steps)
    out.check(len(p) == dlo_steps, f"dense order map has {len(p)} pairs")
    out.check(verify_partial_iso(left, right, p), "dense order map is not order preserving")
    _check_fair(out, left, right, dlo_steps, p)

    long_steps = 20 if scale is Scale.QUICK else 50
    for a, b in BIT_SEED_PAIRS:
        steps = long_steps if (a, b) == BIT_SEED_PAIRS[0] else 20
        left, right = make_bit_presentation(a), make_bit_presentation(b)
        try:
            p = bf_run(left, right, steps)
        except ExtenderExhausted as exc:
            out.check(False, f"BIT {a}/{b} map exhausted at step {exc.step}")
            continue
        out.check(len(p) == steps, f"BIT {a}/{b} map has {len(p)} pairs")
        out.check(verify_partial_iso(left, right, p), f"BIT {a}/{b} map does not preserve adjacency")
        _check_fair(out, left, right, steps, p)

    left, right = make_bit_digraph_presentation(seed + 1), make_bit_digraph_presentation(seed + 2)
    p = bf_run(left, right, long_steps, Selection.GROUNDED)
    out.check(len(p) == long_steps, f"grounded BIT digraph map has {len(p)} pairs")
    out.check(verify_partial_iso(left, right, p), "grounded map does not preserve arcs")

    left, right = make_table_presentation(seed), make_bit_presentation(0)
    table_steps = 8 if scale is Scale.QUICK else 16
    try:
        p = bf_run(left, right, table_steps)
    except ExtenderExhausted as exc:
        _check_table_exhaustion(out, left, right, exc)
    else:
        out.check(len(p) == table_steps, f"table map has {len(p)} pairs")
        _check_fair(out, left, right, table_steps, p)
    return out


# ── Orders ───────────────────────────────────────────────────────────


def run_ldim(scale: Scale, seed: int) -> Outcome:
    """L-dimension of finite chains and of materialized binary powers over a two-element base."""
    out = Outcome()
    two = Finite(2)
    top_n, top_k = (16, 4) if scale is Scale.QUICK else (64, 6)
    for n in range(1, top_n + 1):
        got = ldim(Finite(n), two)
        out.check(got == math.ceil(math.log2(n)), f"ldim of a {n}-chain is {got}")
    for k in range(top_k + 1):
        got = ldim(lex_power(two, k), two)
        out.check(got == k, f"ldim of 2^{k} is {got}")
    return out


def _pairwise_increasing(embedding: OrderEmbedding) -> bool:
    pairs = embedding.pairs
    return all(
        embedding.domain.compare(x0, x1) < 0 and embedding.codomain.compare(y0, y1) < 0
        for i, (x0, y0) in enumerate(pairs)
        for x1, y1 in pairs[i + 1:]
    )


def run_merge_grow(scale: Scale, seed: int) -> Outcome:
    """Seeded merges and binary growth pass pairwise order verification."""
    out = Outcome()
    count = 50 if scale is Scale.QUICK else 500
    for i in range(count):
        rng = _rng(seed, 900 + i)
        m = int(rng.integers(2, 13))
        ambient = Finite(m)
        in_a = rng.random(m) < 0.5
        a_terms = [t for t in range(m) if in_a[t]]
        b_terms = [t for t in range(m) if not in_a[t]]
        ia = _embedding_into_power(ambient, a_terms, rng)
        ib = _embedding_into_power(ambient, b_terms, rng)
        merged = merge_union_embedding(ambient, a_terms, b_terms, ia, ib)
        out.check(len(merged) == m, f"merge {i}: {len(merged)} of {m} points mapped")
        out.check(_pairwise_increasing(merged), f"merge {i}: not order preserving")
        out.check(
            all(merged[a] == ia[a] for a in a_terms), f"merge {i}: points of A moved"
        )

    tern = TernaryFinSupp()
    for i in range(count):
        rng = _rng(seed, 5000 + i)
        x, y = (canonical_term(int(v)) for v in rng.choice(200, size=2, replace=False))
        a0, a1 = (x, y) if tern.compare(x, y) < 0 else (y, x)
        depth = int(rng.integers(0, 4 if scale is Scale.QUICK else 5))
        grown = grow_binary(tern, a0, a1, depth)
        out.check(len(grown) == 2**depth, f"grow {i}: {len(grown)} images")
        out.check(_pairwise_increasing(grown), f"grow {i}: not order preserving")
        out.check(
            all(tern.compare(a0, v) < 0 < tern.compare(a1, v) for _, v in grown.pairs),
            f"grow {i}: image leaves the interval",
        )
    return out


def _embedding_into_power(
    ambient: Finite, terms: list[int], rng: np.random.Generator
) -> OrderEmbedding:
    """A random increasing map from ``terms`` into the least power 3^k with room for them."""
    k = 0
    while 3**k < len(terms):
        k += 1
    power = lex_power(Finite(3), k, 1)
    ordered = list(power.elements())
    chosen = sorted(int(j) for j in rng.choice(len(ordered), size=len(terms), replace=False))
    return OrderEmbedding(ambient, power, tuple(zip(terms, (ordered[j] for j in chosen))))


# ── Boolean algebras ─────────────────────────────────────────────────


def _rows(elems: list[BAElem]) -> list[dict[int, bool]]:
    generators = sorted({g for e in elems for g in e.support})
    return [
        {g: bool((row >> j) & 1) for j, g in enumerate(generators)}
        for row in range(1 << len(generators))
    ]


def _semantic_lt(x: BAElem, y: BAElem) -> bool:
    rows = _rows([x, y])
    below = all(y.evaluate(r) for r in rows if x.evaluate(r))
    return below and any(x.evaluate(r) != y.evaluate(r) for r in rows)


def _separable(lows: list[BAElem], highs: list[BAElem]) -> bool:
    if not all(_semantic_lt(x, y) for x in lows for y in highs):
        return False
    rows = _rows(lows + highs)
    f = [any(x.evaluate(r) for x in lows) for r in rows]
    g = [all(y.evaluate(r) for y in highs) for r in rows]
    return all(b for a, b in zip(f, g) if a) and f != g


def run_interpolation(scale: Scale, seed: int) -> Outcome:
    """interpolate answers exactly when the sides are strictly separable, and separates strictly."""
    out = Outcome()
    rng = _rng(seed, 10)
    count = 200 if scale is Scale.QUICK else 3000
    for i in range(count):
        sides = [
            [BAElem.make((0, 1, 2), int(rng.integers(256))) for _ in range(int(rng.integers(0, 4)))]
            for _ in range(2)
        ]
        lows, highs = sides
        expected = _separable(lows, highs)
        try:
            a = interpolate(lows, highs)
        except SeparationFailure:
            out.check(not expected, f"pair {i}: separable sides rejected")
            continue
        out.check(expected, f"pair {i}: non-separable sides accepted")
        out.check(
            all(_semantic_lt(x, a) for x in lows) and all(_semantic_lt(a, y) for y in highs),
            f"pair {i}: {format_elem(a)} does not separate strictly",
        )
    return out


def _embeddings(domain: FiniteBA, codomain: FiniteBA) -> Iterable[BAEmbedding[int]]:
    """Every embedding, as an onto assignment of codomain atoms to domain atoms."""
    for owner in itertools.product(range(domain.n), repeat=codomain.n):
        if len(set(owner)) == domain.n:
            images = [0] * domain.n
            for j, i in enumerate(owner):
                images[i] |= 1 << j
            yield BAEmbedding(domain, codomain, tuple(images))


def _brute_extension(
    f: BAEmbedding[int], bounds: XBounds, y: int
) -> BAEmbedding[int] | None:
    """Search every way of sending the split halves to codomain atoms."""
    extended, inclusion = f.domain.extend(bounds)
    x_mask = f.domain.x_in_extension(bounds)
    codomain = f.codomain
    for choice in itertools.product((0, 1), repeat=codomain.n):
        images = [0] * extended.n
        for j in range(codomain.n):
            i = next(a for a in range(f.domain.n) if (f.atom_images[a] >> j) & 1)
            slot = inclusion[i] & -inclusion[i]
            if inclusion[i] != slot and choice[j]:
                slot <<= 1
            images[slot.bit_length() - 1] |= 1 << j
        g = BAEmbedding(extended, codomain, tuple(images))
        if g.is_embedding() and g.restricts_to(f, inclusion) and g.apply(x_mask) == y:
            return g
    return None


def run_extension(scale: Scale, seed: int) -> Outcome:
    """extend_one accepts exactly when some homomorphism extends, and returns it."""
    out = Outcome()
    max_domain, max_codomain = (2, 3) if scale is Scale.QUICK else (3, 4)
    for n in range(1, max_domain + 1):
        domain = FiniteBA(n)
        bounds_list = [
            XBounds(lo, hi) for hi in domain.elements() for lo in domain.elements() if lo & ~hi == 0
        ]
        for m in range(n, max_codomain + 1):
            codomain = FiniteBA(m)
            for f in _embeddings(domain, codomain):
                for bounds in bounds_list:
                    for y in codomain.elements():
                        expected = _brute_extension(f, bounds, y)
                        try:
                            g = extend_one(f, bounds, y)
                        except Rejected:
                            out.check(expected is None, f"{f.atom_images} {bounds} y={y}: wrongly rejected")
                            continue
                        out.check(
                            expected is not None and g.atom_images == expected.atom_images,
                            f"{f.atom_images} {bounds} y={y}: wrongly accepted",
                        )
    return out


def run_chain(scale: Scale, seed: int) -> Outcome:
    """Six-stage extension chains embed into the atomless algebra stage by stage."""
    out = Outcome()
    chains = 5 if scale is Scale.QUICK else 30
    for c in range(chains):
        rng = _rng(seed, 1100 + c)
        base = FiniteBA(int(rng.integers(1, 4)))
        algebra = base
        steps = []
        for _ in range(6):
            bounds = random_bounds(algebra, rng)
            steps.append(bounds)
            algebra, _ = algebra.extend(bounds)
        stages = embed_chain(base, steps)
        out.check(len(stages) == 7, f"chain {c}: {len(stages)} stages")
        for k, stage in enumerate(stages):
            out.check(stage.embedding.is_embedding(), f"chain {c} stage {k}: not an embedding")
            if k:
                out.check(
                    stage.embedding.restricts_to(stages[k - 1].embedding, stage.inclusion or []),
                    f"chain {c} stage {k}: does not extend stage {k - 1}",
                )
    return out


# ── Grammars ─────────────────────────────────────────────────────────

DESCRIPTOR_CORPUS = (
    "fin:5",
    "rev(fin:3)",
    "sum(fin:2,tern)",
    "prod(fin:3,fin:2)",
    "lexpow(fin:2,3,0)",
    "lexpow(fin:3,w,1)",
    "tern",
)


def run_grammars(scale: Scale, seed: int) -> Outcome:
    """Printers and parsers of every grammar round-trip."""
    out = Outcome()
    per_desc = 40 if scale is Scale.QUICK else 400
    for text in DESCRIPTOR_CORPUS:
        desc = parse_desc(text)
        out.check(format_desc(desc) == text, f"descriptor {text!r} prints as {format_desc(desc)!r}")
        for term in itertools.islice(term_stream(desc), per_desc):
            printed = format_term(desc, term)
            out.check(parse_term(desc, printed) == term, f"term {printed!r} of {text} does not round-trip")

    for code in range(256 if scale is Scale.QUICK else 4096):
        x = decode(code)
        for depth in (1, 6):
            printed = to_braces(x, depth)
            out.check(parse_braces(printed) == x, f"{printed!r} does not parse back to #{code}")

    rng = _rng(seed, 11)
    for _ in range(100 if scale is Scale.QUICK else 1000):
        x = BAElem.make((0, 1, 2, 3), int(rng.integers(1 << 16)))
        printed = format_elem(x)
        out.check(parse_elem(printed) == x, f"{printed!r} does not round-trip")
    return out


@dataclass
class SelftestPlan:
    """A collection of oracle suites.

    Example:
        >>> plan = SelftestPlan.builtin_all()
        >>> report = plan.run(Scale.QUICK, seed=0)
        >>> print(report.summary())
    """
    name: str
    description: str
    suites: list[OracleSuite] = field(default_factory=list)

    def filter_by_category(self, category: str) -> list[OracleSuite]:
        return [s for s in self.suites if s.category == category]

    def select(self, suite_ids: Iterable[str]) -> SelftestPlan:
        wanted = set(suite_ids)
        return SelftestPlan(self.name, self.description, [s for s in self.suites if s.suite_id in wanted])

    def run(self, scale: Scale = Scale.QUICK, seed: int = 0) -> SelftestReport:
        report = SelftestReport(scale=scale.value, seed=seed)
        for suite in self.suites:
            report.add_result(suite.execute(scale, seed))
        return report

    # ── Built-in Suites ──────────────────────────────────────────────

    @classmethod
    def builtin_graphs(cls) -> SelftestPlan:
        return cls(
            name="graphs",
            description="BIT saturation, realization, colouring and redirection",
            suites=[
                OracleSuite(
                    "bit_extension", "BIT extension property",
                    "witnesses for disjoint pairs, minimal ones against a linear scan",
                    "graphs", run_bit_extension,
                ),
                OracleSuite(
                    "realization", "Extensional realization",
                    "each finite set is the out-set of exactly one vertex",
                    "graphs", run_realization,
                ),
                OracleSuite(
                    "colouring", "Colouring number",
                    "peeling against brute force and networkx k-cores over the graph atlas",
                    "graphs", run_colouring,
                ),
                OracleSuite(
                    "redirect", "Redirection",
                    "acyclic output, realized targets and single reversals on BIT segments",
                    "graphs", run_redirect,
                ),
            ],
        )

    @classmethod
    def builtin_hf(cls) -> SelftestPlan:
        return cls(
            name="hf",
            description="Ackermann codes, collapse and the membership embedding",
            suites=[
                OracleSuite(
                    "collapse_fixpoint", "Collapse fixpoint",
                    "collapsing the BIT digraph below n returns decode(n)",
                    "hf", run_collapse,
                ),
                OracleSuite(
                    "epsilon_embed", "Membership embedding",
                    "epsilon_embed equals encode on every set of small rank",
                    "hf", run_epsilon,
                ),
            ],
        )

    @classmethod
    def builtin_orders(cls) -> SelftestPlan:
        return cls(
            name="orders",
            description="L-dimension, union merging and binary growth",
            suites=[
                OracleSuite(
                    "ldim", "L-dimension",
                    "ceil(log2 n) for chains and k for materialized 2^k",
                    "orders", run_ldim,
                ),
                OracleSuite(
                    "merge_grow", "Merge and grow",
                    "pairwise order verification of seeded merges and binary trees",
                    "orders", run_merge_grow,
                ),
            ],
        )

    @classmethod
    def builtin_backforth(cls) -> SelftestPlan:
        return cls(
            name="backforth",
            description="Back-and-forth between seeded presentations",
            suites=[
                OracleSuite(
                    "backforth", "Back-and-forth",
                    "verified fair partial isomorphisms of dense orders, BIT graphs and digraphs",
                    "backforth", run_backforth,
                ),
            ],
        )

    @classmethod
    def builtin_ba(cls) -> SelftestPlan:
        return cls(
            name="ba",
            description="Strict separation, one-point extension and chains",
            suites=[
                OracleSuite(
                    "interpolate", "Strict separation",
                    "interpolate against truth-table separability",
                    "ba", run_interpolation,
                ),
                OracleSuite(
                    "extend_one", "One-point extension",
                    "extend_one against brute-force homomorphism search",
                    "ba", run_extension,
                ),
                OracleSuite(
                    "chain", "Chain embedding",
                    "six-stage chains into the atomless algebra",
                    "ba", run_chain,
                ),
            ],
        )

    @classmethod
    def builtin_grammars(cls) -> SelftestPlan:
        return cls(
            name="grammars",
            description="Printer and parser round-trips",
            suites=[
                OracleSuite(
                    "grammars", "Grammar round-trip",
                    "order, HF and Boolean printers parse back to equal values",
                    "grammars", run_grammars,
                ),
            ],
        )

    @classmethod
    def builtin_all(cls) -> SelftestPlan:
        parts = [
            cls.builtin_graphs(),
            cls.builtin_hf(),
            cls.builtin_backforth(),
            cls.builtin_orders(),
            cls.builtin_ba(),
            cls.builtin_grammars(),
        ]
        return cls(
            name="all",
            description="Every oracle suite",
            suites=[s for p in parts for s in p.suites],
        )
