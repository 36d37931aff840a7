"""Elements of the free (countable atomless) Boolean algebra on generators v0, v1, ...

An element is a truth table over its support, the generators it depends on.
Bit i of ``table`` is the value under assignment i, where bit j of i is the
value given to ``support[j]``. Every constructor canonicalizes to the minimal
support, so equality is semantic equality.

Term grammar, loosest binding first::

    t ::= t | t   |   t & t   |   ~t   |   (t)   |   v<k>   |   0   |   1
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from satlab.utils.exceptions import BooleanAlgebraError, GrammarError
from satlab.utils.text import TextReader


def _full(width: int) -> int:
    return (1 << (1 << width)) - 1


def _lift(support: tuple[int, ...], table: int, target: tuple[int, ...]) -> int:
    """Re-express a table over the larger sorted support ``target``."""
    where = [target.index(g) for g in support]
    lifted = 0
    for row in range(1 << len(target)):
        src = 0
        for j, p in enumerate(where):
            if (row >> p) & 1:
                src |= 1 << j
        if (table >> src) & 1:
            lifted |= 1 << row
    return lifted


def _drop(table: int, width: int, p: int) -> int:
    """Table of the same function without variable ``p`` (assumed irrelevant)."""
    out = 0
    for row in range(1 << (width - 1)):
        low = row & ((1 << p) - 1)
        src = low | ((row >> p) << (p + 1))
        if (table >> src) & 1:
            out |= 1 << row
    return out


def _depends(table: int, width: int, p: int) -> bool:
    for row in range(1 << width):
        if not (row >> p) & 1 and ((table >> row) & 1) != ((table >> (row | 1 << p)) & 1):
            return True
    return False


@dataclass(frozen=True, order=True)
class BAElem:
    support: tuple[int, ...] = ()
    table: int = 0

    @classmethod
    def make(cls, support: Iterable[int], table: int) -> BAElem:
        """Canonical element for a table over ``support`` (which must be sorted and distinct)."""
        sup = tuple(support)
        if list(sup) != sorted(set(sup)):
            raise BooleanAlgebraError("support must be sorted and distinct")
        table &= _full(len(sup))
        p = len(sup) - 1
        while p >= 0:
            if not _depends(table, len(sup), p):
                table = _drop(table, len(sup), p)
                sup = sup[:p] + sup[p + 1:]
            p -= 1
        return cls(sup, table)

    @classmethod
    def zero(cls) -> BAElem:
        return cls((), 0)

    @classmethod
    def one(cls) -> BAElem:
        return cls((), 1)

    @classmethod
    def var(cls, k: int) -> BAElem:
        if k < 0:
            raise BooleanAlgebraError("generator indices are natural")
        return cls((k,), 0b10)

    def _binary(self, other: BAElem, op: str) -> BAElem:
        sup = tuple(sorted(set(self.support) | set(other.support)))
        a = _lift(self.support, self.table, sup)
        b = _lift(other.support, other.table, sup)
        return BAElem.make(sup, a & b if op == "&" else a | b)

    def __and__(self, other: BAElem) -> BAElem:
        return self._binary(other, "&")

    def __or__(self, other: BAElem) -> BAElem:
        return self._binary(other, "|")

    def __invert__(self) -> BAElem:
        return BAElem(self.support, self.table ^ _full(len(self.support)))

    def leq(self, other: BAElem) -> bool:
        return (self & other) == self

    def lt(self, other: BAElem) -> bool:
        return self != other and self.leq(other)

    def is_zero(self) -> bool:
        return self == BAElem.zero()

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        row = sum(1 << j for j, g in enumerate(self.support) if assignment.get(g, False))
        return bool((self.table >> row) & 1)

    @property
    def top_generator(self) -> int:
        """Largest generator index in the support, -1 for constants."""
        return self.support[-1] if self.support else -1

    def __str__(self) -> str:
        return format_elem(self)


def meet(x: BAElem, y: BAElem) -> BAElem:
    return x & y


def join(x: BAElem, y: BAElem) -> BAElem:
    return x | y


def complement(x: BAElem) -> BAElem:
    return ~x


def leq(x: BAElem, y: BAElem) -> bool:
    return x.leq(y)


def join_all(items: Iterable[BAElem]) -> BAElem:
    out = BAElem.zero()
    for x in items:
        out = out | x
    return out


def meet_all(items: Iterable[BAElem]) -> BAElem:
    out = BAElem.one()
    for x in items:
        out = out & x
    return out


def format_elem(x: BAElem) -> str:
    """Disjunctive normal form over the support, rows in increasing order."""
    if x.table == 0:
        return "0"
    if x.table == _full(len(x.support)):
        return "1"
    clauses = []
    for row in range(1 << len(x.support)):
        if (x.table >> row) & 1:
            literals = [
                f"v{g}" if (row >> j) & 1 else f"~v{g}" for j, g in enumerate(x.support)
            ]
            clauses.append(" & ".join(literals))
    return " | ".join(clauses)


def _read_join(r: TextReader) -> BAElem:
    x = _read_meet(r)
    while r.accept("|"):
        x = x | _read_meet(r)
    return x


def _read_meet(r: TextReader) -> BAElem:
    x = _read_atom(r)
    while r.accept("&"):
        x = x & _read_atom(r)
    return x


def _read_atom(r: TextReader) -> BAElem:
    if r.accept("~"):
        return ~_read_atom(r)
    if r.accept("("):
        x = _read_join(r)
        r.expect(")")
        return x
    if r.accept("v"):
        return BAElem.var(r.number())
    if r.accept("0"):
        return BAElem.zero()
    if r.accept("1"):
        return BAElem.one()
    raise GrammarError(f"unexpected {r.peek()!r} at {r.pos} in {r.text!r}")


def parse_elem(text: str) -> BAElem:
    """Parse a Boolean term such as ``v0 & ~(v1 | v2)``.

    Raises:
        GrammarError: On malformed input.
    """
    r = TextReader(text)
    x = _read_join(r)
    r.done()
    return x
