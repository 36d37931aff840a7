"""Linear-order kernel: descriptors, cuts, patching, dimension and embeddings."""

from satlab.orders.cuts import (
    Cut,
    PatchResult,
    glb_product,
    lub_product,
    make_cut,
    patches_check,
    realize_cut,
)
from satlab.orders.descriptors import (
    Finite,
    LexPower,
    LexTerm,
    OrderDesc,
    Ordering,
    Product,
    Reverse,
    Side,
    Sum,
    SumTerm,
    TernaryFinSupp,
    TernTerm,
    canonical_term,
    cmp,
    is_dense_without_endpoints,
    lex_power,
)
from satlab.orders.embeddings import (
    OrderEmbedding,
    embed_into_power,
    embed_search,
    grow_binary,
    ldim,
    merge_union_embedding,
    term_stream,
)
from satlab.orders.grammar import format_desc, format_term, parse_desc, parse_term
from satlab.orders.ordinals import OrdinalCNF

__all__ = [
    "Cut",
    "PatchResult",
    "glb_product",
    "lub_product",
    "make_cut",
    "patches_check",
    "realize_cut",
    "Finite",
    "LexPower",
    "LexTerm",
    "OrderDesc",
    "Ordering",
    "Product",
    "Reverse",
    "Side",
    "Sum",
    "SumTerm",
    "TernaryFinSupp",
    "TernTerm",
    "canonical_term",
    "cmp",
    "is_dense_without_endpoints",
    "lex_power",
    "OrderEmbedding",
    "embed_into_power",
    "embed_search",
    "grow_binary",
    "ldim",
    "merge_union_embedding",
    "term_stream",
    "format_desc",
    "format_term",
    "parse_desc",
    "parse_term",
    "OrdinalCNF",
]
