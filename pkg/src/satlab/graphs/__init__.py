"""Graph layer: BIT graph, saturation, colouring orderings and redirection."""

from satlab.graphs.bit import (
    SaturationResult,
    bit_digraph,
    bit_edge,
    bit_graph,
    check_saturation,
    saturated_random_graph,
    fast_witness,
    minimal_witness,
    out_closure,
    out_set,
    realize_out_set,
    saturation_witness,
    scan_witness,
)
from satlab.graphs.colouring import (
    ScanRow,
    brute_force_colouring_number,
    colouring_number,
    complement_scan,
    is_acyclic,
    orient_down,
)
from satlab.graphs.redirect import RedirectResult, Reversal, check_redirection, redirect
from satlab.graphs.structures import (
    ColOrdering,
    FiniteDigraph,
    FiniteGraph,
    format_digraph,
    format_graph,
    parse_digraph,
    parse_graph,
)

__all__ = [
    "SaturationResult",
    "bit_digraph",
    "bit_edge",
    "bit_graph",
    "check_saturation",
    "saturated_random_graph",
    "fast_witness",
    "minimal_witness",
    "out_closure",
    "out_set",
    "realize_out_set",
    "saturation_witness",
    "scan_witness",
    "ScanRow",
    "brute_force_colouring_number",
    "colouring_number",
    "complement_scan",
    "is_acyclic",
    "orient_down",
    "RedirectResult",
    "Reversal",
    "check_redirection",
    "redirect",
    "ColOrdering",
    "FiniteDigraph",
    "FiniteGraph",
    "format_digraph",
    "format_graph",
    "parse_digraph",
    "parse_graph",
]
