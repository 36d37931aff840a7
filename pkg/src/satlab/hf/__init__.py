"""Hereditarily finite sets, Ackermann coding and collapses."""

from satlab.hf.collapse import (
    BitRealizer,
    CollapseMap,
    DigraphRealizer,
    IsoResult,
    Realizer,
    epsilon_embed,
    epsilon_map,
    iso_extensional,
    mostowski_collapse,
)
from satlab.hf.sets import (
    HFSet,
    decode,
    encode,
    from_codes,
    hf_sets_of_rank,
    parse_braces,
    rank,
    to_braces,
    transitive_closure,
)

__all__ = [
    "BitRealizer",
    "CollapseMap",
    "DigraphRealizer",
    "IsoResult",
    "Realizer",
    "epsilon_embed",
    "epsilon_map",
    "iso_extensional",
    "mostowski_collapse",
    "HFSet",
    "decode",
    "encode",
    "from_codes",
    "hf_sets_of_rank",
    "parse_braces",
    "rank",
    "to_braces",
    "transitive_closure",
]
