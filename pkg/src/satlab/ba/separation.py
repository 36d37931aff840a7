"""Strict separation, one-element embedding extension and chains into the atomless algebra."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from satlab.ba.elements import BAElem, join_all, meet_all
from satlab.ba.finite import FREE, BAEmbedding, FiniteBA, XBounds
from satlab.utils.exceptions import (
    InvariantViolation,
    Rejected,
    SeparationFailure,
)

logger = logging.getLogger(__name__)


def interpolate(
    lower: Iterable[BAElem], upper: Iterable[BAElem], beyond: int = -1
) -> BAElem:
    """An element strictly above every member of ``lower`` and strictly below every member of ``upper``.

    With f the join of ``lower`` and g the meet of ``upper`` (0 and 1 for empty
    sides) the answer is f | (v_k & g & ~f), where k is the least index above
    every support in sight and above ``beyond``.

    Raises:
        SeparationFailure: If some pair is not strictly ordered, or f is not
            strictly below g. The offending pair is attached.
    """
    lows, highs = sorted(set(lower)), sorted(set(upper))
    for x in lows:
        for y in highs:
            if not x.lt(y):
                raise SeparationFailure(f"{x} is not strictly below {y}", lower=x, upper=y)
    f, g = join_all(lows), meet_all(highs)
    if not f.lt(g):
        raise SeparationFailure(f"join {f} is not strictly below meet {g}", lower=f, upper=g)

    k = max([beyond] + [e.top_generator for e in lows + highs]) + 1
    a = f | (BAElem.var(k) & g & ~f)
    if not all(x.lt(a) for x in lows) or not all(a.lt(y) for y in highs) or not (f.lt(a) and a.lt(g)):
        raise InvariantViolation(f"{a} does not separate strictly")
    logger.debug("interpolated with fresh generator v%d", k)
    return a


def _top_generator(f: BAEmbedding[BAElem]) -> int:
    return max((img.top_generator for img in f.atom_images), default=-1)


def extend_one(f: BAEmbedding[Any], bounds: XBounds, y: Any) -> BAEmbedding[Any]:
    """Extend ``f`` to the algebra generated by its domain and x, sending x to ``y``.

    Two checks decide acceptance. The first is f(lower) <= y <= f(upper),
    the condition that a <= x <= a' implies f(a) <= y <= f(a') over the whole
    domain. The second keeps the extension injective: each atom that x
    splits (an atom below ``upper`` and not below ``lower``) must have an
    image that y meets and does not cover.

    Raises:
        Rejected: With the witnessing pair (a, a') of domain elements when
            the first check fails, or with the offending ``atom`` when y
            misses or covers the image of a split atom.
    """
    algebra = f.domain
    cod = f.codomain
    bounds.check(algebra)
    lo_image, hi_image = f.apply(bounds.lower), f.apply(bounds.upper)
    if cod.meet(lo_image, y) != lo_image or cod.meet(y, hi_image) != y:
        raise Rejected("candidate is outside the image of the bounds", bounds.lower, bounds.upper)

    extended, inclusion = algebra.extend(bounds)
    images: list[Any] = []
    zero = cod.zero()
    for atom, image in zip(algebra.atoms(), f.atom_images):
        if not bounds.splits(atom):
            images.append(image)
            continue
        inside, outside = cod.meet(image, y), cod.meet(image, cod.complement(y))
        if inside == zero:
            raise Rejected("candidate misses the image of a split atom", atom=atom)
        if outside == zero:
            raise Rejected("candidate covers the image of a split atom", atom=atom)
        images.extend([inside, outside])

    g = BAEmbedding(extended, cod, tuple(images)).verify()
    if not g.restricts_to(f, inclusion):
        raise InvariantViolation("extension does not restrict to the original embedding")
    if g.apply(algebra.x_in_extension(bounds)) != y:
        raise InvariantViolation("extension does not send x to the candidate")
    return g


def find_extension_value(f: BAEmbedding[BAElem], bounds: XBounds) -> BAElem:
    """A value for x that ``extend_one`` accepts, for an embedding into the atomless algebra.

    Degenerate bounds (x already in the domain) map through ``f``.
    """
    bounds.check(f.domain)
    if bounds.degenerate:
        return f.apply(bounds.lower)
    try:
        return interpolate(
            [f.apply(bounds.lower)], [f.apply(bounds.upper)], beyond=_top_generator(f)
        )
    except SeparationFailure as exc:
        raise InvariantViolation(f"embedding into the atomless algebra failed to separate: {exc}") from exc


@dataclass(frozen=True)
class IdealResult:
    """{a : f(a) < b}, described by its maximal elements."""
    principal: bool
    generators: tuple[int, ...]
    members: tuple[int, ...]


def ideal_below(f: BAEmbedding[Any], b: Any) -> IdealResult:
    """The domain elements whose image is strictly below ``b``.

    The set is principal when it has a maximum; otherwise its maximal
    elements are returned. An empty set is reported as principal with
    generator 0.
    """
    cod = f.codomain
    members = tuple(
        a for a, image in f.table() if cod.meet(image, b) == image and image != b
    )
    if not members:
        return IdealResult(True, (0,), ())
    algebra = f.domain
    maximal = tuple(
        a for a in members if not any(a != c and algebra.leq(a, c) for c in members)
    )
    return IdealResult(len(maximal) == 1, maximal, members)


def _cell(index: int, width: int) -> BAElem:
    """Cell ``index`` of the partition by v0..v{width-1}; cell 0 sets every generator."""
    cell = BAElem.one()
    for j in range(width):
        v = BAElem.var(j)
        cell = cell & (~v if (index >> (width - 1 - j)) & 1 else v)
    return cell


def embed_into_atomless(algebra: FiniteBA) -> BAEmbedding[BAElem]:
    """Send the atoms to the cells of ceil(log2 n) generators, the last atom taking the surplus."""
    width = math.ceil(math.log2(algebra.n)) if algebra.n > 1 else 0
    cells = [_cell(i, width) for i in range(1 << width)]
    images = cells[: algebra.n - 1] + [join_all(cells[algebra.n - 1:])]
    return BAEmbedding(algebra, FREE, tuple(images)).verify()


@dataclass
class ChainStage:
    algebra: FiniteBA
    embedding: BAEmbedding[BAElem]
    inclusion: Optional[list[int]] = None
    value: Optional[BAElem] = None


def embed_chain(base: FiniteBA, steps: Sequence[XBounds]) -> list[ChainStage]:
    """Embed a chain of one-element extensions into the atomless algebra, stage by stage.

    Raises:
        InvariantViolation: If a stage does not restrict to the previous one.
    """
    f = embed_into_atomless(base)
    stages = [ChainStage(base, f)]
    for i, bounds in enumerate(steps):
        y = find_extension_value(f, bounds)
        g = extend_one(f, bounds, y)
        _, inclusion = f.domain.extend(bounds)
        if not g.restricts_to(f, inclusion):
            raise InvariantViolation(f"stage {i + 1} does not extend stage {i}")
        stages.append(ChainStage(g.domain, g, inclusion, y))
        logger.debug("stage %d: %d atoms", i + 1, g.domain.n)
        f = g
    return stages
