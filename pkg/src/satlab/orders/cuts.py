"""Cuts: realization in dense orders, patching, and bounds in finite products."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from satlab.orders.descriptors import (
    LexPower,
    LexTerm,
    OrderDesc,
    Product,
    Reverse,
    TernaryFinSupp,
    TernTerm,
    is_dense_without_endpoints,
)
from satlab.orders.ordinals import OrdinalCNF
from satlab.utils.exceptions import (
    EmptyOrderBetween,
    EmptySet,
    InvariantViolation,
    MalformedCut,
    NotDense,
    NotSubset,
    OrderError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cut:
    """A pair of finite sets with every lower element below every upper one."""
    lower: frozenset = field(default_factory=frozenset)
    upper: frozenset = field(default_factory=frozenset)


def make_cut(desc: OrderDesc, lower: Iterable[Any] = (), upper: Iterable[Any] = ()) -> Cut:
    """Build a cut, checking that it is well formed.

    Raises:
        MalformedCut: If some lower element is not strictly below some upper one.
    """
    cut = Cut(frozenset(lower), frozenset(upper))
    _bounds(desc, cut)
    return cut


def _bounds(desc: OrderDesc, cut: Cut) -> tuple[Optional[Any], Optional[Any]]:
    """Maximum of the lower side and minimum of the upper side."""
    lower = desc.sorted_terms(cut.lower)
    upper = desc.sorted_terms(cut.upper)
    top = lower[-1] if lower else None
    bottom = upper[0] if upper else None
    if top is not None and bottom is not None and desc.compare(top, bottom) >= 0:
        raise MalformedCut("cut sides overlap", lower=top, upper=bottom)
    return top, bottom


def _ternary_between(top: Optional[TernTerm], bottom: Optional[TernTerm]) -> TernTerm:
    if top is None and bottom is None:
        return TernTerm()
    fresh = 1 + max(t.top for t in (top, bottom) if t is not None)
    if top is not None:
        return TernTerm.from_map({**top.as_map(), fresh: 1})
    return TernTerm.from_map({**bottom.as_map(), fresh: -1})


def neighbour(base: OrderDesc, value: Any, above: bool) -> Any:
    """Nearest base element above (below) ``value``; any realizer for dense bases."""
    if base.is_finite():
        ordered = list(base.elements())
        i = ordered.index(value) + (1 if above else -1)
        if not 0 <= i < len(ordered):
            raise EmptyOrderBetween(f"{value!r} is an endpoint of the base")
        return ordered[i]
    cut = Cut(frozenset({value}), frozenset()) if above else Cut(frozenset(), frozenset({value}))
    return realize_cut(base, cut)


def _lex_between(desc: LexPower, top: Optional[LexTerm], bottom: Optional[LexTerm]) -> LexTerm:
    if top is None and bottom is None:
        return LexTerm()
    positions = [p for t in (top, bottom) if t is not None for p, _ in t.support]
    fresh = max(positions).successor() if positions else OrdinalCNF.zero()
    if top is not None:
        value = neighbour(desc.base, desc.default, above=True)
        return LexTerm.from_map({**top.as_map(), fresh: value}, desc.default)
    value = neighbour(desc.base, desc.default, above=False)
    return LexTerm.from_map({**bottom.as_map(), fresh: value}, desc.default)


def realize_cut(desc: OrderDesc, cut: Cut) -> Any:
    """Return a term strictly between the two sides of ``cut``.

    The result is deterministic: the value just above the lower maximum is
    placed at the least position past every support in sight (+1 for the
    ternary order); with no lower side, the value just below the upper
    minimum is used instead.

    Raises:
        NotDense: If ``desc`` is not dense without endpoints.
        MalformedCut: If the cut is not well formed.
    """
    if not is_dense_without_endpoints(desc):
        raise NotDense(f"{desc} is not a dense order without endpoints")
    if isinstance(desc, Reverse):
        return realize_cut(desc.inner, Cut(cut.upper, cut.lower))
    top, bottom = _bounds(desc, cut)
    if isinstance(desc, TernaryFinSupp):
        z = _ternary_between(top, bottom)
    elif isinstance(desc, LexPower):
        z = _lex_between(desc, top, bottom)
    else:  # pragma: no cover - is_dense_without_endpoints admits nothing else
        raise NotDense(f"{desc} is not supported")
    if (top is not None and desc.compare(top, z) >= 0) or (
        bottom is not None and desc.compare(z, bottom) >= 0
    ):
        raise InvariantViolation(f"realized point {z} is not inside the cut")
    logger.debug("realized cut (%s, %s) by %s", top, bottom, z)
    return z


@dataclass(frozen=True)
class PatchResult:
    """Outcome of a patching check; ``counterexample`` is None when patched."""
    patched: bool
    counterexample: Optional[Cut] = None


def patches_check(
    desc: OrderDesc,
    patching: Iterable[Any],
    patched: Iterable[Any],
    strict_gaps: bool = False,
) -> PatchResult:
    """Check that every partition a0 < a1 of ``patched`` is filled by a point of ``patching``.

    Partitions are enumerated by the size of a0, from the empty lower side
    up to the empty upper side; ``strict_gaps`` drops those two endpoint
    partitions. A counterexample is reported by the nearest points around
    the gap (max a0, min a1).

    Raises:
        NotSubset: If ``patched`` is not contained in ``patching``.
    """
    b_terms = desc.sorted_terms(patching)
    a_terms = desc.sorted_terms(patched)
    missing = set(a_terms) - set(b_terms)
    if missing:
        raise NotSubset(f"{sorted(map(str, missing))} not in the patching set")

    for i in range(len(a_terms) + 1):
        if strict_gaps and (i == 0 or i == len(a_terms)):
            continue
        top = a_terms[i - 1] if i > 0 else None
        bottom = a_terms[i] if i < len(a_terms) else None
        filled = any(
            (top is None or desc.compare(top, b) < 0)
            and (bottom is None or desc.compare(b, bottom) < 0)
            for b in b_terms
        )
        if not filled:
            gap = Cut(
                frozenset() if top is None else frozenset({top}),
                frozenset() if bottom is None else frozenset({bottom}),
            )
            return PatchResult(False, gap)
    return PatchResult(True)


def _verify_least_upper_bound(desc: OrderDesc, terms: list[Any], candidate: Any) -> None:
    for t in terms:
        if desc.compare(t, candidate) > 0:
            raise InvariantViolation(f"{candidate} is not an upper bound")
    for u in desc.elements():
        if desc.compare(u, candidate) < 0 and all(desc.compare(t, u) <= 0 for t in terms):
            raise InvariantViolation(f"{u} is a smaller upper bound than {candidate}")


def _supremum(desc: OrderDesc, terms: list[Any]) -> Any:
    """Least element of a finite order above every term, found by scanning."""
    for u in desc.elements():
        if all(desc.compare(t, u) <= 0 for t in terms):
            return u
    raise EmptySet("no upper bound")


def lub_product(outer: OrderDesc, inner: OrderDesc, terms: Iterable[Any]) -> tuple[Any, Any]:
    """Least upper bound of a finite set in the lexicographic product outer x inner.

    Follows the successor case split: when the outer projection has a
    maximum s, the answer is (s, lub of the fibre over s); when it has only
    a supremum, the answer is (sup, least inner element). A finite projection
    always has its maximum, so the second branch only matters for orders
    where suprema are not attained.

    Raises:
        EmptySet: If ``terms`` is empty.
    """
    if not outer.is_finite() or not inner.is_finite():
        raise OrderError("lub_product needs finite factors")
    desc = Product(outer, inner)
    ordered = desc.sorted_terms(terms)
    if not ordered:
        raise EmptySet("least upper bound of the empty set")

    projection = outer.sorted_terms(t[0] for t in ordered)
    sup_outer = _supremum(outer, projection)
    if sup_outer not in projection:
        result = (sup_outer, inner.minimum())
    else:
        fibre = inner.sorted_terms(t[1] for t in ordered if t[0] == sup_outer)
        result = (sup_outer, fibre[-1])
    _verify_least_upper_bound(desc, ordered, result)
    return result


def glb_product(outer: OrderDesc, inner: OrderDesc, terms: Iterable[Any]) -> tuple[Any, Any]:
    """Greatest lower bound, as the least upper bound in the reversed product."""
    return lub_product(Reverse(outer), Reverse(inner), terms)
