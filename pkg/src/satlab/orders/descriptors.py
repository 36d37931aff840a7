"""Algebraic descriptions of linear orders and their elements.

A descriptor is a finite tree built from finite chains, reversal, ordered
sum, lexicographic product, finite-support lexicographic powers and the
ternary finite-support order (sequences over {-1, 0, +1} with default 0).

Terms are plain immutable values:

    Finite        int index
    Reverse       a term of the inner order, unchanged
    Sum           SumTerm(side, term)
    Product       (outer term, inner term)
    LexPower      LexTerm(support)   support: ((position, base term), ...)
    TernaryFinSupp TernTerm(support) support: ((position, +1 or -1), ...)
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Any, Hashable, Iterable, Iterator, Mapping

from satlab.orders.ordinals import OrdinalCNF
from satlab.utils.exceptions import InvalidTerm, OrderError

OrderTerm = Hashable


class Ordering(str, Enum):
    """Result of a comparison."""
    LT = "LT"
    EQ = "EQ"
    GT = "GT"

    @classmethod
    def from_sign(cls, sign: int) -> Ordering:
        if sign < 0:
            return cls.LT
        return cls.GT if sign > 0 else cls.EQ


class Side(str, Enum):
    """Summand of an ordered sum."""
    LEFT = "l"
    RIGHT = "r"


@dataclass(frozen=True)
class SumTerm:
    side: Side
    term: Any


@dataclass(frozen=True)
class LexTerm:
    """Element of a lexicographic power; positions absent from support hold the default."""
    support: tuple[tuple[OrdinalCNF, Any], ...] = ()

    @classmethod
    def from_map(cls, values: Mapping[OrdinalCNF, Any], default: Any) -> LexTerm:
        return cls(tuple(sorted((p, v) for p, v in values.items() if v != default)))

    def as_map(self) -> dict[OrdinalCNF, Any]:
        return dict(self.support)

    def get(self, position: OrdinalCNF, default: Any) -> Any:
        for p, v in self.support:
            if p == position:
                return v
        return default


@dataclass(frozen=True)
class TernTerm:
    """Element of the ternary finite-support order; absent positions hold 0."""
    support: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, values: Mapping[int, int]) -> TernTerm:
        return cls(tuple(sorted((p, v) for p, v in values.items() if v != 0)))

    def as_map(self) -> dict[int, int]:
        return dict(self.support)

    @property
    def top(self) -> int:
        """Largest support position, -1 for the all-default term."""
        return self.support[-1][0] if self.support else -1


def _sign(a: Any, b: Any) -> int:
    return (a > b) - (a < b)


class OrderDesc(ABC):
    """Descriptor of a linear order."""

    @abstractmethod
    def validate(self, term: Any) -> None:
        """Raise InvalidTerm unless ``term`` is an element of this order."""

    @abstractmethod
    def compare(self, x: Any, y: Any) -> int:
        """Sign of x - y for already validated terms."""

    @abstractmethod
    def size(self) -> int | None:
        """Number of elements, None when infinite."""

    @abstractmethod
    def elements(self) -> Iterator[Any]:
        """Ascending enumeration of a finite order."""

    def is_finite(self) -> bool:
        return self.size() is not None

    def sorted_terms(self, terms: Iterable[Any]) -> list[Any]:
        """Terms in ascending order without duplicates."""
        out = list(dict.fromkeys(terms))
        for t in out:
            self.validate(t)
        out.sort(key=cmp_to_key(self.compare))
        return out

    def minimum(self) -> Any:
        return next(self.elements())

    def maximum(self) -> Any:
        last = None
        for last in self.elements():
            pass
        return last

    def _require_finite(self) -> None:
        if self.size() is None:
            raise InvalidTerm(f"{type(self).__name__} is infinite; cannot enumerate")


@dataclass(frozen=True)
class Finite(OrderDesc):
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OrderError("Finite(n) needs n >= 1")

    def validate(self, term: Any) -> None:
        if not isinstance(term, int) or isinstance(term, bool) or not 0 <= term < self.n:
            raise InvalidTerm(f"{term!r} is not an index below {self.n}")

    def compare(self, x: Any, y: Any) -> int:
        return _sign(x, y)

    def size(self) -> int | None:
        return self.n

    def elements(self) -> Iterator[Any]:
        return iter(range(self.n))


@dataclass(frozen=True)
class Reverse(OrderDesc):
    inner: OrderDesc

    def validate(self, term: Any) -> None:
        self.inner.validate(term)

    def compare(self, x: Any, y: Any) -> int:
        return -self.inner.compare(x, y)

    def size(self) -> int | None:
        return self.inner.size()

    def elements(self) -> Iterator[Any]:
        self._require_finite()
        return iter(list(self.inner.elements())[::-1])


@dataclass(frozen=True)
class Sum(OrderDesc):
    left: OrderDesc
    right: OrderDesc

    def validate(self, term: Any) -> None:
        if not isinstance(term, SumTerm):
            raise InvalidTerm(f"{term!r} is not a sum term")
        (self.left if term.side is Side.LEFT else self.right).validate(term.term)

    def compare(self, x: Any, y: Any) -> int:
        if x.side is not y.side:
            return -1 if x.side is Side.LEFT else 1
        part = self.left if x.side is Side.LEFT else self.right
        return part.compare(x.term, y.term)

    def size(self) -> int | None:
        a, b = self.left.size(), self.right.size()
        return None if a is None or b is None else a + b

    def elements(self) -> Iterator[Any]:
        self._require_finite()
        for t in self.left.elements():
            yield SumTerm(Side.LEFT, t)
        for t in self.right.elements():
            yield SumTerm(Side.RIGHT, t)


@dataclass(frozen=True)
class Product(OrderDesc):
    """Lexicographic product: the outer coordinate is compared first."""
    outer: OrderDesc
    inner: OrderDesc

    def validate(self, term: Any) -> None:
        if not isinstance(term, tuple) or len(term) != 2:
            raise InvalidTerm(f"{term!r} is not a pair")
        self.outer.validate(term[0])
        self.inner.validate(term[1])

    def compare(self, x: Any, y: Any) -> int:
        return self.outer.compare(x[0], y[0]) or self.inner.compare(x[1], y[1])

    def size(self) -> int | None:
        a, b = self.outer.size(), self.inner.size()
        return None if a is None or b is None else a * b

    def elements(self) -> Iterator[Any]:
        self._require_finite()
        return iter(itertools.product(list(self.outer.elements()), list(self.inner.elements())))


@dataclass(frozen=True)
class LexPower(OrderDesc):
    """Sequences base^exponent with finitely many non-default entries."""
    base: OrderDesc
    exponent: OrdinalCNF
    default: Any

    def __post_init__(self) -> None:
        self.base.validate(self.default)

    def validate(self, term: Any) -> None:
        if not isinstance(term, LexTerm):
            raise InvalidTerm(f"{term!r} is not a lexicographic power term")
        previous = None
        for position, value in term.support:
            if not position < self.exponent:
                raise InvalidTerm(f"position {position} not below exponent {self.exponent}")
            if previous is not None and not previous < position:
                raise InvalidTerm("support positions must be strictly increasing")
            previous = position
            self.base.validate(value)
            if value == self.default:
                raise InvalidTerm(f"support entry at {position} equals the default")

    def compare(self, x: Any, y: Any) -> int:
        xs, ys = x.as_map(), y.as_map()
        for position in sorted(set(xs) | set(ys)):
            c = self.base.compare(xs.get(position, self.default), ys.get(position, self.default))
            if c:
                return c
        return 0

    def size(self) -> int | None:
        if self.exponent.is_zero:
            return 1
        b = self.base.size()
        if b == 1:
            return 1
        if b is None or not self.exponent.is_finite:
            return None
        return b ** self.exponent.as_int()

    def elements(self) -> Iterator[Any]:
        self._require_finite()
        positions = list(self.exponent.positions()) if self.exponent.is_finite else []
        values = list(self.base.elements())
        for combo in itertools.product(values, repeat=len(positions)):
            yield LexTerm.from_map(dict(zip(positions, combo)), self.default)

    def from_tuple(self, values: Iterable[Any]) -> LexTerm:
        """Term from its values at positions 0, 1, ... (finite exponents)."""
        return LexTerm.from_map(
            {OrdinalCNF.finite(i): v for i, v in enumerate(values)}, self.default
        )

    def to_tuple(self, term: LexTerm) -> tuple[Any, ...]:
        return tuple(term.get(p, self.default) for p in self.exponent.positions())


@dataclass(frozen=True)
class TernaryFinSupp(OrderDesc):
    """Finite-support sequences over {-1, 0, +1} indexed by naturals, default 0."""

    def validate(self, term: Any) -> None:
        if not isinstance(term, TernTerm):
            raise InvalidTerm(f"{term!r} is not a ternary term")
        previous = -1
        for position, value in term.support:
            if not isinstance(position, int) or position <= previous:
                raise InvalidTerm("ternary support positions must be strictly increasing naturals")
            if value not in (-1, 1):
                raise InvalidTerm(f"ternary value {value!r} must be -1 or +1")
            previous = position

    def compare(self, x: Any, y: Any) -> int:
        xs, ys = x.as_map(), y.as_map()
        for position in sorted(set(xs) | set(ys)):
            c = _sign(xs.get(position, 0), ys.get(position, 0))
            if c:
                return c
        return 0

    def size(self) -> int | None:
        return None

    def elements(self) -> Iterator[Any]:
        self._require_finite()
        return iter(())


def canonical_term(k: int) -> TernTerm:
    """The k-th ternary term: base-3 digits of k, 0 = default, 1 = -1, 2 = +1.

    The map is a bijection between naturals and ternary terms.
    """
    values: dict[int, int] = {}
    position = 0
    while k:
        k, digit = divmod(k, 3)
        if digit:
            values[position] = -1 if digit == 1 else 1
        position += 1
    return TernTerm.from_map(values)


def cmp(desc: OrderDesc, x: Any, y: Any) -> Ordering:
    """Compare two terms of ``desc``.

    Raises:
        InvalidTerm: If either term violates the descriptor.
    """
    desc.validate(x)
    desc.validate(y)
    return Ordering.from_sign(desc.compare(x, y))


def lex_power(base: OrderDesc, k: int, default: Any | None = None) -> LexPower:
    """The finite lexicographic power base^k (default: least base element)."""
    return LexPower(base, OrdinalCNF.finite(k), base.minimum() if default is None else default)


def is_dense_without_endpoints(desc: OrderDesc) -> bool:
    """Orders on which cuts are always realizable."""
    if isinstance(desc, TernaryFinSupp):
        return True
    if isinstance(desc, Reverse):
        return is_dense_without_endpoints(desc.inner)
    if isinstance(desc, LexPower):
        if not desc.exponent.is_limit:
            return False
        if desc.base.is_finite():
            return desc.default not in (desc.base.minimum(), desc.base.maximum())
        return is_dense_without_endpoints(desc.base)
    return False
