"""Hereditarily finite sets with Ackermann coding.

A set is stored with its children sorted by code, so structural equality is
extensional equality. code(x) = sum of 2^code(y) over the members y of x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from satlab.utils.exceptions import GrammarError, HFError
from satlab.utils.text import TextReader

DEFAULT_PRINT_RANK = 6
DECODE_CACHE_SIZE = 4096
# |V_0|, |V_1|, ... |V_5|: the number of sets of rank below r
_STAGE_SIZES = (0, 1, 2, 4, 16, 65536)


@dataclass(frozen=True, eq=False)
class HFSet:
    """A hereditarily finite set; build with ``HFSet.of`` or ``decode``."""
    children: tuple[HFSet, ...] = ()
    code: int = field(default=0, repr=False)

    def __post_init__(self) -> None:
        codes = [c.code for c in self.children]
        if any(a >= b for a, b in zip(codes, codes[1:])):
            raise HFError("children must be distinct and sorted by code")
        if self.code != sum(1 << c for c in codes):
            raise HFError(f"code {self.code} does not match the children")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HFSet) and other.code == self.code

    def __hash__(self) -> int:
        return hash(self.code)

    @classmethod
    def of(cls, *members: HFSet) -> HFSet:
        unique = {m.code: m for m in members}
        children = tuple(unique[c] for c in sorted(unique))
        return cls(children, sum(1 << c for c in unique))

    @classmethod
    def empty(cls) -> HFSet:
        return cls()

    def __iter__(self) -> Iterator[HFSet]:
        return iter(self.children)

    def __len__(self) -> int:
        return len(self.children)

    def __contains__(self, item: object) -> bool:
        return isinstance(item, HFSet) and item in self.children

    def __str__(self) -> str:
        return to_braces(self)


def encode(x: HFSet) -> int:
    return x.code


@lru_cache(maxsize=DECODE_CACHE_SIZE)
def decode(code: int) -> HFSet:
    """The set whose members are the decodings of the 1-bit positions of ``code``."""
    if code < 0:
        raise HFError("codes are natural numbers")
    members = [decode(i) for i in range(code.bit_length()) if (code >> i) & 1]
    return HFSet(tuple(members), code)


def rank(x: HFSet) -> int:
    """0 for the empty set, otherwise one more than the largest member rank."""
    return max((rank(y) + 1 for y in x.children), default=0)


def transitive_closure(x: HFSet) -> set[HFSet]:
    closure: set[HFSet] = set()
    stack = list(x.children)
    while stack:
        y = stack.pop()
        if y not in closure:
            closure.add(y)
            stack.extend(y.children)
    return closure


def hf_sets_of_rank(r: int) -> list[HFSet]:
    """All sets of rank below ``r``, in code order.

    Raises:
        HFError: If ``r`` is above 5 (there are 2^65536 sets of rank 5).
    """
    if not 0 <= r < len(_STAGE_SIZES):
        raise HFError(f"enumeration of rank below {r} is not supported")
    return [decode(c) for c in range(_STAGE_SIZES[r])]


def to_braces(x: HFSet, max_rank: int = DEFAULT_PRINT_RANK) -> str:
    """Brace notation; members nested deeper than ``max_rank`` print as ``#<code>``."""
    if not x.children:
        return "{}"
    if max_rank <= 0:
        return f"#{x.code}"
    return "{" + ",".join(to_braces(y, max_rank - 1) for y in x.children) + "}"


def _read_set(r: TextReader) -> HFSet:
    if r.accept("#"):
        return decode(r.number())
    r.expect("{")
    members: list[HFSet] = []
    if not r.accept("}"):
        members.append(_read_set(r))
        while r.accept(","):
            members.append(_read_set(r))
        r.expect("}")
    return HFSet.of(*members)


def parse_braces(text: str) -> HFSet:
    """Read brace notation such as ``{{},{{}}}`` or ``{#5,{}}``.

    Raises:
        GrammarError: On malformed input.
    """
    r = TextReader(text)
    if not r.peek():
        raise GrammarError("empty input")
    x = _read_set(r)
    r.done()
    return x


def from_codes(codes: Iterable[int]) -> HFSet:
    return HFSet.of(*(decode(c) for c in codes))
