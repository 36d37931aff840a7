"""The back-and-forth engine.

Even steps extend the map forward from the least-enumerated unmapped left
element, odd steps extend it backward from the right. The engine never
backtracks: an extender failure ends the run and the error carries the map
built so far.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from satlab.backforth.presentation import ElementType, Presentation
from satlab.utils.exceptions import BackForthError, ExtenderExhausted, InvariantViolation

logger = logging.getLogger(__name__)


class Selection(str, Enum):
    """How a step picks the element to map next."""
    LEAST = "least"
    # least element whose out-set is already mapped
    GROUNDED = "grounded"


@dataclass
class PartialIso:
    """A finite bijection between elements of two presentations."""
    forward: dict[Any, Any] = field(default_factory=dict)
    backward: dict[Any, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.forward)

    def copy(self) -> PartialIso:
        return PartialIso(dict(self.forward), dict(self.backward))

    def extend(self, left: Any, right: Any) -> None:
        if left in self.forward or right in self.backward:
            raise InvariantViolation(f"pair ({left!r}, {right!r}) collides with the map")
        self.forward[left] = right
        self.backward[right] = left

    def pairs(self) -> list[tuple[Any, Any]]:
        return list(self.forward.items())


def verify_partial_iso(left: Presentation, right: Presentation, p: PartialIso) -> bool:
    """Independent check that ``p`` is a bijection preserving and reflecting the relation."""
    if len(p.forward) != len(p.backward):
        return False
    if any(p.backward.get(b) != a for a, b in p.forward.items()):
        return False
    items = p.pairs()
    for i, (a, fa) in enumerate(items):
        for b, fb in items[i + 1:]:
            if left.relation(a, b) != right.relation(fa, fb):
                return False
            if left.relation(b, a) != right.relation(fb, fa):
                return False
    return True


def _pick(source: Presentation, mapped: dict[Any, Any], selection: Selection) -> Optional[Any]:
    for element in source.elements():
        if element in mapped:
            continue
        if selection is Selection.GROUNDED:
            if source.out_set is None:
                raise BackForthError(f"{source.name} has no out-sets for grounded selection")
            if not source.out_set(element) <= mapped.keys():
                continue
        return element
    return None


def _extend(
    source: Presentation,
    target: Presentation,
    mapping: dict[Any, Any],
    selection: Selection,
) -> Optional[tuple[Any, Any]]:
    element = _pick(source, mapping, selection)
    if element is None:
        return None
    over = frozenset(mapping)
    wanted = source.type_of(element, over).transport(mapping)
    image = target.realize(wanted, frozenset(mapping.values()))
    for s in over:
        if source.relation(s, element) != target.relation(mapping[s], image) or source.relation(
            element, s
        ) != target.relation(image, mapping[s]):
            raise InvariantViolation(f"{element!r} -> {image!r} breaks the relation with {s!r}")
    return element, image


def pending_request(
    left: Presentation,
    right: Presentation,
    p: PartialIso,
    step_index: int,
    selection: Selection = Selection.LEAST,
) -> Optional[tuple[Presentation, ElementType, frozenset]]:
    """What step ``step_index`` asks of ``p``: the presentation, the wanted type and the set it is over.

    Used to re-examine an ``ExtenderExhausted``; None when neither side has
    an element left to map.
    """
    sides = [(left, right, p.forward), (right, left, p.backward)]
    if step_index % 2:
        sides.reverse()
    for source, target, mapping in sides:
        element = _pick(source, mapping, selection)
        if element is not None:
            over = frozenset(mapping)
            return target, source.type_of(element, over).transport(mapping), frozenset(mapping.values())
    return None


def bf_step(
    left: Presentation,
    right: Presentation,
    p: PartialIso,
    step_index: int,
    selection: Selection = Selection.LEAST,
) -> PartialIso:
    """One back-and-forth step; returns a new map one pair larger.

    When the side whose turn it is has no element left to map (finite
    presentations only), the other side is used; when both are exhausted
    the map is returned unchanged.

    Raises:
        ExtenderExhausted: If the other side cannot realize the type.
    """
    result = p.copy()
    sides = [(left, right, result.forward, False), (right, left, result.backward, True)]
    if step_index % 2:
        sides.reverse()
    for source, target, mapping, backwards in sides:
        try:
            found = _extend(source, target, mapping, selection)
        except ExtenderExhausted as exc:
            exc.partial = p
            exc.step = step_index
            raise
        if found is None:
            continue
        element, image = found
        pair = (image, element) if backwards else (element, image)
        result.extend(*pair)
        logger.debug("step %d: %r <-> %r", step_index, *pair)
        return result
    return result


def bf_run(
    left: Presentation,
    right: Presentation,
    steps: int,
    selection: Selection = Selection.LEAST,
) -> PartialIso:
    """Fold ``bf_step`` over ``steps`` steps.

    With least selection, element k of each enumeration is mapped once step
    2k has run.

    Raises:
        ExtenderExhausted: With ``partial`` set to the map before the failing step.
    """
    if steps < 0:
        raise BackForthError("steps must be natural")
    p = PartialIso()
    for i in range(steps):
        p = bf_step(left, right, p, i, selection)
    if not verify_partial_iso(left, right, p):
        raise InvariantViolation("back-and-forth result is not a partial isomorphism")
    logger.info("back-and-forth %s / %s: %d pairs after %d steps", left.name, right.name, len(p), steps)
    return p
