"""Boolean algebras: free algebra elements, finite algebras, separation and embeddings."""

from satlab.ba.elements import (
    BAElem,
    complement,
    format_elem,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    parse_elem,
)
from satlab.ba.finite import (
    FREE,
    Algebra,
    BAEmbedding,
    FiniteBA,
    FreeAlgebra,
    XBounds,
    random_bounds,
)
from satlab.ba.separation import (
    ChainStage,
    IdealResult,
    embed_chain,
    embed_into_atomless,
    extend_one,
    find_extension_value,
    ideal_below,
    interpolate,
)

__all__ = [
    "BAElem",
    "complement",
    "format_elem",
    "join",
    "join_all",
    "leq",
    "meet",
    "meet_all",
    "parse_elem",
    "FREE",
    "Algebra",
    "BAEmbedding",
    "FiniteBA",
    "FreeAlgebra",
    "XBounds",
    "random_bounds",
    "ChainStage",
    "IdealResult",
    "embed_chain",
    "embed_into_atomless",
    "extend_one",
    "find_extension_value",
    "ideal_below",
    "interpolate",
]
