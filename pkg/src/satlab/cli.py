"""Command-line interface for satlab.

Every operation of the library is one subcommand. Text output goes through a
themed rich console; ``--json`` prints one ``CommandResult`` object per line
with sorted keys instead. Exit codes: 0 on success, 1 on a domain error,
2 on a usage error.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterable, Optional, TypeVar

import click
import numpy as np
from pydantic import BaseModel, Field
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

from satlab import __version__
from satlab.ba.elements import BAElem, format_elem, parse_elem
from satlab.ba.finite import FREE, BAEmbedding, FiniteBA, XBounds, random_bounds
from satlab.ba.separation import (
    embed_chain,
    embed_into_atomless,
    extend_one,
    find_extension_value,
    ideal_below,
    interpolate,
)
from satlab.backforth.engine import PartialIso, Selection, bf_run, verify_partial_iso
from satlab.backforth.presentation import parse_presentation
from satlab.evaluation.suites import Scale, SelftestPlan
from satlab.graphs.bit import (
    bit_digraph,
    bit_edge,
    bit_graph,
    check_saturation,
    out_closure,
    saturation_witness,
)
from satlab.graphs.colouring import colouring_number, complement_scan, is_acyclic, orient_down
from satlab.graphs.redirect import redirect
from satlab.graphs.structures import (
    ColOrdering,
    FiniteDigraph,
    FiniteGraph,
    format_digraph,
    parse_digraph,
    parse_graph,
)
from satlab.hf.collapse import iso_extensional, mostowski_collapse
from satlab.hf.sets import HFSet, decode, encode, parse_braces, to_braces
from satlab.orders.cuts import make_cut, patches_check, realize_cut
from satlab.orders.descriptors import (
    LexPower,
    OrderDesc,
    Ordering,
    TernaryFinSupp,
    TernTerm,
    cmp,
    lex_power,
)
from satlab.orders.embeddings import (
    OrderEmbedding,
    embed_into_power,
    embed_search,
    grow_binary,
    ldim,
    merge_union_embedding,
)
from satlab.orders.grammar import format_desc, format_term, parse_desc, parse_term
from satlab.utils.config import LogLevel, SatlabConfig, get_config
from satlab.utils.exceptions import (
    ExtenderExhausted,
    GrammarError,
    InvalidTerm,
    NoAdmissibleVertex,
    SatlabError,
)
from satlab.utils.log import setup_logging

THEME = Theme({
    "satlab.ok": "green bold",
    "satlab.error": "red bold",
    "satlab.info": "blue",
    "satlab.dim": "dim",
})

console = Console(theme=THEME)
err_console = Console(theme=THEME, stderr=True)

DESC_GRAMMAR = "fin:N | rev(D) | sum(D,D) | prod(D,D) | lexpow(D,ORDINAL,T) | tern"
TERM_GRAMMAR = "N | l:T | r:T | (T,T) | [ORDINAL:T,...] | tern{K:+,K:-,...}"
HF_GRAMMAR = "{} | {X,Y,...} | #CODE"
BA_GRAMMAR = "v<k> | 0 | 1 | ~t | t & t | t | t | (t)"
PRESENTATION_GRAMMAR = "dlo[:SEED] | bit[:SEED] | bitdigraph[:SEED] | table[:SEED]"


class CommandResult(BaseModel):
    """One line of ``--json`` output."""

    command: str
    status: str = "ok"
    payload: dict[str, Any] = Field(default_factory=dict)
    verification: dict[str, Any] = Field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))


@dataclass
class Session:
    """Per-invocation state shared by the subcommands."""
    config: SatlabConfig
    as_json: bool = False


def emit(session: Session, result: CommandResult, text: Any) -> None:
    """Print ``result`` as JSON, or ``text`` (a string or a rich renderable) otherwise."""
    if session.as_json:
        click.echo(result.to_json())
    elif isinstance(text, str):
        console.print(text, markup=False, highlight=False, soft_wrap=True)
    else:
        console.print(text)


def _error_payload(exc: SatlabError) -> dict[str, Any]:
    payload: dict[str, Any] = {"message": str(exc)}
    if isinstance(exc, NoAdmissibleVertex):
        payload["index"] = exc.index
        if exc.partial is not None:
            payload["assignment"] = list(exc.partial.assignment)
    elif isinstance(exc, ExtenderExhausted):
        payload["step"] = exc.step
        if isinstance(exc.partial, PartialIso):
            payload["pairs"] = len(exc.partial)
    for name in ("lower", "upper"):
        value = getattr(exc, name, None)
        if value is not None:
            payload[name] = _show(value)
    return payload


F = TypeVar("F", bound=Callable[..., Any])


def domain_command(fn: F) -> F:
    """Report ``SatlabError`` as a failed ``CommandResult`` and exit with code 1."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return fn(*args, **kwargs)
        except SatlabError as exc:
            ctx = click.get_current_context()
            session: Session = ctx.find_object(Session) or Session(get_config())
            result = CommandResult(
                command=_command_name(ctx), status=exc.code, payload=_error_payload(exc)
            )
            if session.as_json:
                click.echo(result.to_json())
            else:
                err_console.print(f"[satlab.error]error ({exc.code})[/]: {escape(str(exc))}")
            ctx.exit(1)

    return wrapper  # type: ignore[return-value]


def _command_name(ctx: click.Context) -> str:
    return " ".join(ctx.command_path.split()[1:])


# ── Parameter types ──────────────────────────────────────────────────


class GrammarParam(click.ParamType):
    """A parameter read by one of the satlab text grammars."""

    def __init__(self, name: str, parser: Callable[[str], Any], grammar: str) -> None:
        self.name = name
        self.parser = parser
        self.grammar = grammar

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Any:
        if not isinstance(value, str):
            return value
        try:
            return self.parser(value)
        except GrammarError as exc:
            self.fail(f"{exc}; expected {self.grammar}", param, ctx)


def _naturals(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        items = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise GrammarError(f"{text!r} is not a comma-separated list of naturals") from exc
    if any(i < 0 for i in items):
        raise GrammarError("vertices are natural numbers")
    return items


DESC = GrammarParam("descriptor", parse_desc, DESC_GRAMMAR)
HF = GrammarParam("hf-set", parse_braces, HF_GRAMMAR)
BA = GrammarParam("ba-term", parse_elem, BA_GRAMMAR)
INTS = GrammarParam("ints", lambda t: frozenset(_naturals(t)), "comma-separated naturals, e.g. 0,1,2")
ORDER = GrammarParam("order", lambda t: tuple(_naturals(t)), "comma-separated vertices, e.g. 2,0,1")


def _term(desc: OrderDesc, text: str, hint: str) -> Any:
    try:
        return parse_term(desc, text)
    except (GrammarError, InvalidTerm) as exc:
        raise click.BadParameter(f"{exc}; terms look like {TERM_GRAMMAR}", param_hint=hint) from exc


def _terms(desc: OrderDesc, texts: Iterable[str], hint: str) -> list[Any]:
    return [_term(desc, t, hint) for t in texts]


def _show(value: Any) -> Any:
    """Printable form of a presentation element or error attachment."""
    if isinstance(value, TernTerm):
        return format_term(TernaryFinSupp(), value)
    if isinstance(value, (int, str, bool)):
        return value
    if isinstance(value, BAElem):
        return format_elem(value)
    if isinstance(value, HFSet):
        return to_braces(value)
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    return str(value)


def _read_graph(path: Optional[str], bit: Optional[int]) -> FiniteGraph:
    if (path is None) == (bit is None):
        raise click.UsageError("give exactly one of --graph PATH and --bit N")
    if bit is not None:
        return bit_graph(bit)
    try:
        return parse_graph(Path(path).read_text())  # type: ignore[arg-type]
    except GrammarError as exc:
        raise click.BadParameter(
            f"{exc}; expected a header line 'n' then 'u v' lines", param_hint="--graph"
        ) from exc


def _read_digraph(path: str, hint: str) -> FiniteDigraph:
    try:
        return parse_digraph(Path(path).read_text())
    except GrammarError as exc:
        raise click.BadParameter(
            f"{exc}; expected a header 'n' or 'vertices: ...' then 'u > v' lines",
            param_hint=hint,
        ) from exc


def graph_source(fn: F) -> F:
    fn = click.option("--bit", type=click.IntRange(min=0), default=None, help="Use the BIT graph on 0..N-1")(fn)
    fn = click.option(
        "--graph", "graph_path", type=click.Path(exists=True, dir_okay=False), default=None,
        help="Edge-list file",
    )(fn)
    return fn


def _ordering(graph: FiniteGraph, order: Optional[tuple[int, ...]]) -> ColOrdering:
    if order is None:
        return colouring_number(graph)[1]
    return ColOrdering.for_graph(graph, order)


# ── Root ─────────────────────────────────────────────────────────────


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--json", "as_json", is_flag=True, help="Print one JSON object per line")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed for every seeded procedure")
@click.option("--verbose", "-v", is_flag=True, help="Log search progress to stderr")
@click.version_option(__version__, prog_name="satlab")
@click.pass_context
def main(ctx: click.Context, as_json: bool, seed: Optional[int], verbose: bool) -> None:
    """satlab: saturated orders, graphs, HF sets and Boolean algebras, computed and checked."""
    config = get_config()

    # Apply CLI overrides
    if seed is not None:
        config.seed = seed
    if verbose:
        config.log_level = LogLevel.DEBUG

    setup_logging(config.log_level.value)
    ctx.obj = Session(config, as_json)


# ── order ────────────────────────────────────────────────────────────


@main.group()
def order() -> None:
    """Linear orders: comparison, cuts, dimension, merging and patching."""


@order.command("cmp")
@click.argument("desc", type=DESC)
@click.argument("x")
@click.argument("y")
@click.pass_obj
@domain_command
def order_cmp(session: Session, desc: OrderDesc, x: str, y: str) -> None:
    """Compare two terms of DESC."""
    a, b = _term(desc, x, "X"), _term(desc, y, "Y")
    result = cmp(desc, a, b)
    swapped = cmp(desc, b, a)
    emit(
        session,
        CommandResult(
            command="order cmp",
            payload={
                "desc": format_desc(desc),
                "x": format_term(desc, a),
                "y": format_term(desc, b),
                "ordering": result.value,
            },
            verification={"antisymmetric": swapped is Ordering.from_sign(-desc.compare(a, b))},
        ),
        result.value,
    )


@order.command("cut")
@click.argument("desc", type=DESC)
@click.option("--lower", "-l", multiple=True, help="Term on the lower side (repeatable)")
@click.option("--upper", "-u", multiple=True, help="Term on the upper side (repeatable)")
@click.pass_obj
@domain_command
def order_cut(session: Session, desc: OrderDesc, lower: tuple[str, ...], upper: tuple[str, ...]) -> None:
    """Realize the cut (LOWER, UPPER) in a dense order DESC."""
    lows, highs = _terms(desc, lower, "--lower"), _terms(desc, upper, "--upper")
    z = realize_cut(desc, make_cut(desc, lows, highs))
    inside = all(desc.compare(t, z) < 0 for t in lows) and all(desc.compare(z, t) < 0 for t in highs)
    printed = format_term(desc, z)
    emit(
        session,
        CommandResult(command="order cut", payload={"term": printed}, verification={"inside": inside}),
        printed,
    )


@order.command("ldim")
@click.argument("desc", type=DESC)
@click.option("--base", type=DESC, default="fin:2", show_default=True, help="Finite base order")
@click.option("--max-exponent", type=click.IntRange(min=0), default=None, help="Largest exponent tried")
@click.pass_obj
@domain_command
def order_ldim(session: Session, desc: OrderDesc, base: OrderDesc, max_exponent: Optional[int]) -> None:
    """Least k with the finite order DESC embeddable into BASE^k."""
    if max_exponent is not None:
        session.config.ldim_max_exponent = max_exponent
    k = ldim(desc, base, session.config.ldim_max_exponent)
    size = base.size() or 0
    witness = embed_search(desc, lex_power(base, k), size**k)
    emit(
        session,
        CommandResult(
            command="order ldim",
            payload={"desc": format_desc(desc), "base": format_desc(base), "exponent": k},
            verification={"embeds": witness is not None},
        ),
        str(k),
    )


def _pairs_payload(embedding: OrderEmbedding) -> list[list[str]]:
    return [
        [format_term(embedding.domain, x), format_term(embedding.codomain, y)]
        for x, y in embedding.pairs
    ]


def _pairs_text(pairs: list[list[str]]) -> str:
    return "\n".join(f"{x} -> {y}" for x, y in pairs)


@order.command("merge")
@click.argument("ambient", type=DESC)
@click.option("--a", "a_texts", multiple=True, help="Term of A (repeatable)")
@click.option("--b", "b_texts", multiple=True, help="Term of B (repeatable)")
@click.option("--base", type=DESC, default="fin:3", show_default=True, help="Base of the powers")
@click.option("--default", "default_text", default="1", show_default=True, help="Default base value")
@click.pass_obj
@domain_command
def order_merge(
    session: Session,
    ambient: OrderDesc,
    a_texts: tuple[str, ...],
    b_texts: tuple[str, ...],
    base: OrderDesc,
    default_text: str,
) -> None:
    """Embed A u B into BASE^(a+1+b) from the least power embeddings of A and B."""
    a_terms, b_terms = _terms(ambient, a_texts, "--a"), _terms(ambient, b_texts, "--b")
    default = _term(base, default_text, "--default")
    limit = session.config.ldim_max_exponent
    ia = embed_into_power(ambient, a_terms, base, default, limit)
    ib = embed_into_power(ambient, b_terms, base, default, limit)
    merged = merge_union_embedding(ambient, a_terms, b_terms, ia, ib)
    pairs = _pairs_payload(merged)
    target = merged.codomain
    exponent = str(target.exponent) if isinstance(target, LexPower) else ""
    emit(
        session,
        CommandResult(
            command="order merge",
            payload={"exponent": exponent, "pairs": pairs},
            verification={"order_preserving": merged.is_order_preserving()},
        ),
        _pairs_text(pairs),
    )


@order.command("grow")
@click.argument("desc", type=DESC)
@click.argument("a0")
@click.argument("a1")
@click.option("--depth", type=click.IntRange(min=0), default=2, show_default=True)
@click.pass_obj
@domain_command
def order_grow(session: Session, desc: OrderDesc, a0: str, a1: str, depth: int) -> None:
    """Embed the lexicographic 2^DEPTH into the open interval (A0, A1) of DESC."""
    lo, hi = _term(desc, a0, "A0"), _term(desc, a1, "A1")
    grown = grow_binary(desc, lo, hi, depth)
    domain = grown.domain
    pairs = [
        ["".join(map(str, domain.to_tuple(x))) if isinstance(domain, LexPower) else str(x),
         format_term(desc, y)]
        for x, y in grown.pairs
    ]
    inside = all(desc.compare(lo, y) < 0 < desc.compare(hi, y) for _, y in grown.pairs)
    emit(
        session,
        CommandResult(
            command="order grow",
            payload={"depth": depth, "pairs": pairs},
            verification={"order_preserving": grown.is_order_preserving(), "inside": inside},
        ),
        _pairs_text(pairs),
    )


@order.command("patch")
@click.argument("desc", type=DESC)
@click.option("--patching", "-b", multiple=True, help="Term of the patching set B (repeatable)")
@click.option("--patched", "-a", multiple=True, help="Term of the patched set A (repeatable)")
@click.option("--strict-gaps", is_flag=True, help="Ignore the partitions with an empty side")
@click.pass_obj
@domain_command
def order_patch(
    session: Session,
    desc: OrderDesc,
    patching: tuple[str, ...],
    patched: tuple[str, ...],
    strict_gaps: bool,
) -> None:
    """Check that every gap of PATCHED is filled by a point of PATCHING."""
    if strict_gaps:
        session.config.strict_gaps = True
    result = patches_check(
        desc,
        _terms(desc, patching, "--patching"),
        _terms(desc, patched, "--patched"),
        session.config.strict_gaps,
    )
    payload: dict[str, Any] = {"patched": result.patched}
    text = "patched"
    if result.counterexample is not None:
        gap = {
            side: [format_term(desc, t) for t in desc.sorted_terms(getattr(result.counterexample, side))]
            for side in ("lower", "upper")
        }
        payload["gap"] = gap
        text = f"gap between {gap['lower'] or '-'} and {gap['upper'] or '-'}"
    emit(session, CommandResult(command="order patch", payload=payload), text)


# ── graph ────────────────────────────────────────────────────────────


@main.group()
def graph() -> None:
    """BIT graph saturation, colouring orderings and redirection."""


@graph.command("witness")
@click.option("--a", "a_set", type=INTS, default="", help="Vertices to be adjacent to, e.g. 0,1")
@click.option("--b", "b_set", type=INTS, default="", help="Vertices to avoid, e.g. 2")
@click.option("--fast", is_flag=True, help="Constructive witness instead of the least one")
@click.pass_obj
@domain_command
def graph_witness(session: Session, a_set: frozenset[int], b_set: frozenset[int], fast: bool) -> None:
    """A BIT vertex adjacent to every vertex of A and to none of B."""
    if fast:
        session.config.fast_witness = True
    w = saturation_witness(a_set, b_set, fast=session.config.fast_witness)
    emit(
        session,
        CommandResult(
            command="graph witness",
            payload={
                "a": sorted(a_set),
                "b": sorted(b_set),
                "witness": w,
                "method": "fast" if session.config.fast_witness else "minimal",
            },
            verification={
                "adjacent_to_a": all(bit_edge(x, w) for x in a_set),
                "avoids_b": not any(bit_edge(y, w) for y in b_set),
            },
        ),
        str(w),
    )


@graph.command("sat")
@graph_source
@click.option("--s", "s", type=click.IntRange(min=1), required=True, help="|A| < S")
@click.option("--t", "t", type=click.IntRange(min=1), required=True, help="|B| < T")
@click.pass_obj
@domain_command
def graph_sat(session: Session, graph_path: Optional[str], bit: Optional[int], s: int, t: int) -> None:
    """Check that every disjoint A, B with |A| < S and |B| < T has a witness."""
    g = _read_graph(graph_path, bit)
    result = check_saturation(g, s, t)
    payload: dict[str, Any] = {"n": g.n, "s": s, "t": t, "saturated": result.saturated}
    text = "saturated"
    if result.counterexample is not None:
        a, b = result.counterexample
        payload["counterexample"] = {"a": sorted(a), "b": sorted(b)}
        text = f"no witness for A={sorted(a)} B={sorted(b)}"
    emit(session, CommandResult(command="graph sat", payload=payload), text)


@graph.command("col")
@graph_source
@click.pass_obj
@domain_command
def graph_col(session: Session, graph_path: Optional[str], bit: Optional[int]) -> None:
    """Colouring number and a witnessing ordering."""
    g = _read_graph(graph_path, bit)
    k, ordering = colouring_number(g)
    emit(
        session,
        CommandResult(
            command="graph col",
            payload={"colouring_number": k, "ordering": list(ordering.order)},
            verification={"holds": ordering.holds_for(g)},
        ),
        f"{k}\n{' '.join(map(str, ordering.order))}",
    )


@graph.command("orient")
@graph_source
@click.option("--order", "order", type=ORDER, default=None, help="Vertex ordering (default: peeling)")
@click.pass_obj
@domain_command
def graph_orient(
    session: Session, graph_path: Optional[str], bit: Optional[int], order: Optional[tuple[int, ...]]
) -> None:
    """Direct every edge from its later endpoint to its earlier one."""
    g = _read_graph(graph_path, bit)
    ordering = _ordering(g, order)
    digraph = orient_down(g, ordering)
    emit(
        session,
        CommandResult(
            command="graph orient",
            payload={"ordering": list(ordering.order), "arcs": sorted(map(list, digraph.arcs))},
            verification={"acyclic": is_acyclic(digraph)},
        ),
        format_digraph(digraph).rstrip("\n"),
    )


@graph.command("redirect")
@graph_source
@click.option("--target", "targets", type=INTS, multiple=True, help="Target out-set (repeatable)")
@click.option("--order", "order", type=ORDER, default=None, help="Vertex ordering (default: peeling)")
@click.option("--alt-cond3", is_flag=True, help="Subtract each target's own set in condition 3")
@click.pass_obj
@domain_command
def graph_redirect(
    session: Session,
    graph_path: Optional[str],
    bit: Optional[int],
    targets: tuple[frozenset[int], ...],
    order: Optional[tuple[int, ...]],
    alt_cond3: bool,
) -> None:
    """Reverse arcs so each TARGET becomes the out-set of a chosen vertex."""
    if alt_cond3:
        session.config.alt_cond3 = True
    g = _read_graph(graph_path, bit)
    ordering = _ordering(g, order)
    result = redirect(g, ordering, list(targets), alt_cond3=session.config.alt_cond3)
    log = [
        {"target": e.step, "vertex": e.vertex, "reversed": [list(arc) for arc in e.arcs]}
        for e in result.log
    ]
    table = Table(title="Redirection", show_lines=False)
    table.add_column("Target", style="satlab.info")
    table.add_column("Vertex", justify="right")
    table.add_column("Reversed arcs")
    for c, entry in zip(targets, result.log):
        table.add_row(
            "{" + ",".join(map(str, sorted(c))) + "}",
            str(entry.vertex),
            " ".join(f"{u}>{v}" for u, v in entry.arcs) or "-",
        )
    emit(
        session,
        CommandResult(
            command="graph redirect",
            payload={
                "ordering": list(ordering.order),
                "assignment": result.assignment,
                "log": log,
                "arcs": sorted(map(list, result.digraph.arcs)),
            },
            verification={
                "acyclic": is_acyclic(result.digraph),
                "realized": all(
                    result.digraph.out_set(x) == c for x, c in zip(result.assignment, targets)
                ),
            },
        ),
        table,
    )


@graph.command("scan")
@click.argument("n", type=click.IntRange(min=0))
@click.option("--sample-size", type=click.IntRange(min=1), default=None, help="Graphs sampled at 8 vertices")
@click.pass_obj
@domain_command
def graph_scan(session: Session, n: int, sample_size: Optional[int]) -> None:
    """Colouring numbers of all graphs on N vertices and of their complements."""
    if sample_size is not None:
        session.config.scan_sample_size = sample_size
    rows = complement_scan(n, seed=session.config.seed, sample_size=session.config.scan_sample_size)
    table = Table(title=f"Complement scan, n = {n}")
    table.add_column("Graph", justify="right", style="satlab.info")
    table.add_column("col(G)", justify="right")
    table.add_column("col(~G)", justify="right")
    for row in rows:
        table.add_row(str(row.graph_id), str(row.col), str(row.col_complement))
    emit(
        session,
        CommandResult(
            command="graph scan",
            payload={"n": n, "rows": [[r.graph_id, r.col, r.col_complement] for r in rows]},
        ),
        table,
    )


# ── hf ───────────────────────────────────────────────────────────────


@main.group()
def hf() -> None:
    """Hereditarily finite sets: Ackermann codes, collapse and isomorphism."""


@hf.command("encode")
@click.argument("x", type=HF)
@click.pass_obj
@domain_command
def hf_encode(session: Session, x: HFSet) -> None:
    """Ackermann code of the set X written in brace notation."""
    code = encode(x)
    emit(
        session,
        CommandResult(command="hf encode", payload={"code": code}, verification={"decodes": decode(code) == x}),
        str(code),
    )


@hf.command("decode")
@click.argument("code", type=click.IntRange(min=0))
@click.option("--max-rank", type=click.IntRange(min=0), default=None, help="Deepest rank printed in full")
@click.pass_obj
@domain_command
def hf_decode(session: Session, code: int, max_rank: Optional[int]) -> None:
    """The set with Ackermann code CODE."""
    if max_rank is not None:
        session.config.hf_print_max_rank = max_rank
    x = decode(code)
    printed = to_braces(x, session.config.hf_print_max_rank)
    emit(
        session,
        CommandResult(
            command="hf decode",
            payload={"set": printed},
            verification={"round_trip": parse_braces(printed) == x},
        ),
        printed,
    )


@hf.command("collapse")
@click.option("--digraph", "digraph_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--bit-closure", type=click.IntRange(min=0), default=None, help="BIT digraph below N")
@click.pass_obj
@domain_command
def hf_collapse(
    session: Session, digraph_path: Optional[str], bit_closure: Optional[int]
) -> None:
    """Mostowski collapse of an acyclic digraph."""
    if (digraph_path is None) == (bit_closure is None):
        raise click.UsageError("give exactly one of --digraph PATH and --bit-closure N")
    if digraph_path is not None:
        digraph = _read_digraph(digraph_path, "--digraph")
    else:
        digraph = bit_digraph(out_closure([bit_closure]))  # type: ignore[list-item]
    collapse = mostowski_collapse(digraph)
    rank = session.config.hf_print_max_rank
    rows = [[v, to_braces(collapse[v], rank)] for v in digraph.vertices]
    table = Table(title="Collapse")
    table.add_column("Vertex", justify="right", style="satlab.info")
    table.add_column("Set")
    for v, s in rows:
        table.add_row(str(v), escape(s))
    emit(
        session,
        CommandResult(
            command="hf collapse",
            payload={"values": rows, "injective": collapse.injective},
        ),
        table,
    )


@hf.command("iso")
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@domain_command
def hf_iso(session: Session, first: str, second: str) -> None:
    """Decide isomorphism of two extensional acyclic digraphs."""
    result = iso_extensional(_read_digraph(first, "FIRST"), _read_digraph(second, "SECOND"))
    mapping = sorted(result.mapping.items()) if result.mapping else []
    text = "isomorphic" if result.isomorphic else "not isomorphic"
    if mapping:
        text += "\n" + "\n".join(f"{u} -> {v}" for u, v in mapping)
    emit(
        session,
        CommandResult(
            command="hf iso",
            payload={"isomorphic": result.isomorphic, "mapping": [list(p) for p in mapping]},
        ),
        text,
    )


# ── bf ───────────────────────────────────────────────────────────────


@main.group()
def bf() -> None:
    """Back-and-forth between countable presentations."""


@bf.command("run")
@click.argument("left")
@click.argument("right")
@click.option("--steps", type=click.IntRange(min=0), default=None, help="Number of steps")
@click.option("--grounded", is_flag=True, help="Map the least element whose out-set is mapped")
@click.option("--max-bits", type=click.IntRange(min=1), default=None, help="Largest BIT witness size")
@click.pass_obj
@domain_command
def bf_run_command(
    session: Session,
    left: str,
    right: str,
    steps: Optional[int],
    grounded: bool,
    max_bits: Optional[int],
) -> None:
    """Run the back-and-forth between presentations LEFT and RIGHT."""
    config = session.config
    if steps is not None:
        config.bf_steps = steps
    if max_bits is not None:
        config.bf_max_bits = max_bits
    sides = []
    for text, hint in ((left, "LEFT"), (right, "RIGHT")):
        try:
            sides.append(parse_presentation(text, config.seed, config.bf_max_bits))
        except GrammarError as exc:
            raise click.BadParameter(f"{exc}; expected {PRESENTATION_GRAMMAR}", param_hint=hint) from exc
    selection = Selection.GROUNDED if grounded else Selection.LEAST
    p = bf_run(sides[0], sides[1], config.bf_steps, selection)
    pairs = [[_show(a), _show(b)] for a, b in p.pairs()]
    table = Table(title=f"{sides[0].name} / {sides[1].name}: {len(p)} pairs")
    table.add_column("Left", style="satlab.info")
    table.add_column("Right")
    for a, b in pairs:
        table.add_row(escape(str(a)), escape(str(b)))
    emit(
        session,
        CommandResult(
            command="bf run",
            payload={
                "left": sides[0].name,
                "right": sides[1].name,
                "steps": config.bf_steps,
                "selection": selection.value,
                "pairs": pairs,
            },
            verification={"partial_isomorphism": verify_partial_iso(sides[0], sides[1], p)},
        ),
        table,
    )


# ── ba ───────────────────────────────────────────────────────────────


@main.group()
def ba() -> None:
    """Boolean algebras: separation, one-point extension, ideals and embeddings."""


def _embedding(atoms: int, images: tuple[BAElem, ...]) -> BAEmbedding[BAElem]:
    algebra = FiniteBA(atoms)
    if not images:
        return embed_into_atomless(algebra)
    if len(images) != atoms:
        raise click.BadParameter(f"need {atoms} images, got {len(images)}", param_hint="--image")
    return BAEmbedding(algebra, FREE, images).verify()


@ba.command("interp")
@click.option("--lower", "-l", type=BA, multiple=True, help="Element of F (repeatable)")
@click.option("--upper", "-u", type=BA, multiple=True, help="Element of G (repeatable)")
@click.pass_obj
@domain_command
def ba_interp(session: Session, lower: tuple[BAElem, ...], upper: tuple[BAElem, ...]) -> None:
    """An element strictly above every LOWER and strictly below every UPPER."""
    a = interpolate(lower, upper)
    printed = format_elem(a)
    emit(
        session,
        CommandResult(
            command="ba interp",
            payload={"element": printed},
            verification={
                "strict": all(x.lt(a) for x in lower) and all(a.lt(y) for y in upper),
            },
        ),
        printed,
    )


@ba.command("extend")
@click.option("--atoms", type=click.IntRange(min=1), required=True, help="Atoms of the finite algebra")
@click.option("--image", "images", type=BA, multiple=True, help="Image of each atom (default: cells)")
@click.option("--lower", type=click.IntRange(min=0), default=0, show_default=True, help="Mask below x")
@click.option("--upper", type=click.IntRange(min=0), required=True, help="Mask above x")
@click.option("--value", type=BA, default=None, help="Candidate image of x (default: interpolated)")
@click.pass_obj
@domain_command
def ba_extend(
    session: Session,
    atoms: int,
    images: tuple[BAElem, ...],
    lower: int,
    upper: int,
    value: Optional[BAElem],
) -> None:
    """Extend an embedding of a finite algebra to a new element x with LOWER <= x <= UPPER."""
    f = _embedding(atoms, images)
    bounds = XBounds(lower, upper)
    y = value if value is not None else find_extension_value(f, bounds)
    g = extend_one(f, bounds, y)
    printed = [format_elem(e) for e in g.atom_images]
    emit(
        session,
        CommandResult(
            command="ba extend",
            payload={"value": format_elem(y), "atoms": g.domain.n, "images": printed},
            verification={"embedding": g.is_embedding()},
        ),
        "\n".join([f"x -> {format_elem(y)}"] + [f"atom {i} -> {e}" for i, e in enumerate(printed)]),
    )


@ba.command("ideal")
@click.option("--atoms", type=click.IntRange(min=1), required=True, help="Atoms of the finite algebra")
@click.option("--image", "images", type=BA, multiple=True, help="Image of each atom (default: cells)")
@click.option("--below", type=BA, required=True, help="Element b of the codomain")
@click.pass_obj
@domain_command
def ba_ideal(
    session: Session, atoms: int, images: tuple[BAElem, ...], below: BAElem
) -> None:
    """The elements a with f(a) strictly below BELOW, by their maximal members."""
    f = _embedding(atoms, images)
    result = ideal_below(f, below)
    kind = "principal" if result.principal else "not principal"
    emit(
        session,
        CommandResult(
            command="ba ideal",
            payload={
                "principal": result.principal,
                "generators": list(result.generators),
                "members": list(result.members),
            },
        ),
        f"{kind}: {' '.join(map(str, result.generators))}",
    )


@ba.command("embed")
@click.option("--atoms", type=click.IntRange(min=1), required=True, help="Atoms of the base algebra")
@click.option("--chain", type=click.IntRange(min=0), default=0, show_default=True, help="Seeded extension stages")
@click.pass_obj
@domain_command
def ba_embed(session: Session, atoms: int, chain: int) -> None:
    """Embed a finite algebra, and a seeded chain of extensions of it, into the atomless algebra."""
    rng = np.random.default_rng(session.config.seed)
    base = FiniteBA(atoms)
    algebra, steps = base, []
    for _ in range(chain):
        bounds = random_bounds(algebra, rng)
        steps.append(bounds)
        algebra, _ = algebra.extend(bounds)
    stages = embed_chain(base, steps)
    table = Table(title="Embedding chain")
    table.add_column("Stage", justify="right", style="satlab.info")
    table.add_column("Atoms", justify="right")
    table.add_column("x ->")
    rows = []
    for i, stage in enumerate(stages):
        value = format_elem(stage.value) if stage.value is not None else "-"
        rows.append({
            "atoms": stage.algebra.n,
            "value": value,
            "images": [format_elem(e) for e in stage.embedding.atom_images],
        })
        table.add_row(str(i), str(stage.algebra.n), escape(value))
    emit(
        session,
        CommandResult(
            command="ba embed",
            payload={"stages": rows},
            verification={"embeddings": all(s.embedding.is_embedding() for s in stages)},
        ),
        table,
    )


# ── selftest ─────────────────────────────────────────────────────────


@main.command()
@click.option("--full", is_flag=True, help="Run at acceptance scale")
@click.option("--suite", "suite_ids", multiple=True, help="Run only these suites (repeatable)")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Save the report as JSON")
@click.pass_obj
@domain_command
def selftest(session: Session, full: bool, suite_ids: tuple[str, ...], output: Optional[str]) -> None:
    """Run the oracle suites."""
    plan = SelftestPlan.builtin_all()
    if suite_ids:
        known = {s.suite_id for s in plan.suites}
        unknown = sorted(set(suite_ids) - known)
        if unknown:
            raise click.BadParameter(
                f"unknown suites {unknown}; choose from {sorted(known)}", param_hint="--suite"
            )
        plan = plan.select(suite_ids)
    scale = Scale.FULL if full else Scale.QUICK
    report = plan.run(scale, session.config.seed)
    if output:
        report.save_json(output)

    if session.as_json:
        click.echo(
            CommandResult(
                command="selftest",
                status="ok" if report.ok else "failed",
                payload=report.to_dict(),
            ).to_json()
        )
    else:
        table = Table(title=f"Selftest ({scale.value})")
        table.add_column("Suite", style="satlab.info")
        table.add_column("Category")
        table.add_column("Result")
        table.add_column("Cases", justify="right")
        table.add_column("Time", justify="right")
        for r in report.results:
            mark = "[satlab.ok]pass[/]" if r.passed else "[satlab.error]FAIL[/]"
            table.add_row(r.name, r.category, mark, str(r.cases), f"{r.elapsed_seconds:.2f}s")
        console.print(table)
        for r in report.failed():
            console.print(f"[satlab.error]{r.suite_id}[/]: {escape(r.error or r.detail)}")
        console.print(
            Panel(
                f"{len(report.results)} suites, {report.total_cases} cases, "
                f"{report.pass_rate:.0%} passed in {report.total_time:.1f}s",
                title="Result",
                border_style="green" if report.ok else "red",
            )
        )
    if not report.ok:
        click.get_current_context().exit(1)


if __name__ == "__main__":
    main()
