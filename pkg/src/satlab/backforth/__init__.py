"""Back-and-forth engine over presentations with extension oracles."""

from satlab.backforth.engine import (
    PartialIso,
    Selection,
    bf_run,
    bf_step,
    pending_request,
    verify_partial_iso,
)
from satlab.backforth.presentation import (
    ElementType,
    Presentation,
    RelationKind,
    digraph_presentation,
    graph_presentation,
    make_bit_digraph_presentation,
    make_bit_presentation,
    make_dlo_presentation,
    make_finite_presentation,
    make_table_presentation,
    order_presentation,
    parse_presentation,
    shuffled,
    table_presentation,
)

__all__ = [
    "PartialIso",
    "Selection",
    "bf_run",
    "bf_step",
    "pending_request",
    "verify_partial_iso",
    "ElementType",
    "Presentation",
    "RelationKind",
    "digraph_presentation",
    "graph_presentation",
    "make_bit_digraph_presentation",
    "make_bit_presentation",
    "make_dlo_presentation",
    "make_finite_presentation",
    "make_table_presentation",
    "order_presentation",
    "parse_presentation",
    "shuffled",
    "table_presentation",
]
