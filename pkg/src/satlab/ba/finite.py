"""Finite Boolean algebras as atom bitmasks, one-element extensions, and embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Generic, Iterator, Protocol, TypeVar

import numpy as np

from satlab.ba.elements import BAElem
from satlab.utils.exceptions import BooleanAlgebraError, InvariantViolation

T = TypeVar("T")


class Algebra(Protocol[T]):
    """The operations an embedding codomain must offer."""

    def zero(self) -> T: ...

    def one(self) -> T: ...

    def meet(self, x: T, y: T) -> T: ...

    def join(self, x: T, y: T) -> T: ...

    def complement(self, x: T) -> T: ...


class FreeAlgebra:
    """The countable atomless algebra of ``BAElem`` values."""

    def zero(self) -> BAElem:
        return BAElem.zero()

    def one(self) -> BAElem:
        return BAElem.one()

    def meet(self, x: BAElem, y: BAElem) -> BAElem:
        return x & y

    def join(self, x: BAElem, y: BAElem) -> BAElem:
        return x | y

    def complement(self, x: BAElem) -> BAElem:
        return ~x


FREE = FreeAlgebra()


@dataclass(frozen=True)
class FiniteBA:
    """The algebra of subsets of ``n`` atoms; element i is the set of atoms in bitmask i."""
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BooleanAlgebraError("a Boolean algebra has at least one atom")

    @property
    def top(self) -> int:
        return (1 << self.n) - 1

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return self.top

    def meet(self, x: int, y: int) -> int:
        return x & y

    def join(self, x: int, y: int) -> int:
        return x | y

    def complement(self, x: int) -> int:
        return self.top ^ x

    def leq(self, x: int, y: int) -> bool:
        return x & ~y == 0

    def elements(self) -> range:
        return range(1 << self.n)

    def atoms(self) -> list[int]:
        return [1 << i for i in range(self.n)]

    def check(self, x: int) -> int:
        if not 0 <= x <= self.top:
            raise BooleanAlgebraError(f"{x} is not an element of the {self.n}-atom algebra")
        return x

    def extend(self, bounds: XBounds) -> tuple[FiniteBA, list[int]]:
        """The algebra generated by this one and a new x described by ``bounds``.

        Atoms inside ``bounds.lower`` and outside ``bounds.upper`` are kept;
        each atom between them is split into a half inside x and a half
        outside. The new atoms are numbered in order of the old atoms, the
        inside half first.

        Returns:
            The new algebra and the images of the old atoms under the inclusion.
        """
        bounds.check(self)
        images: list[int] = []
        index = 0
        for atom in self.atoms():
            if bounds.splits(atom):
                images.append(0b11 << index)
                index += 2
            else:
                images.append(1 << index)
                index += 1
        return FiniteBA(index), images

    def x_in_extension(self, bounds: XBounds) -> int:
        """The mask of x in ``self.extend(bounds)``."""
        mask = 0
        index = 0
        for atom in self.atoms():
            if bounds.splits(atom):
                mask |= 1 << index
                index += 2
            else:
                if atom & bounds.lower:
                    mask |= 1 << index
                index += 1
        return mask


@dataclass(frozen=True)
class XBounds:
    """Position of a new element x over a finite algebra: lower <= x <= upper, tightest."""
    lower: int
    upper: int

    def check(self, algebra: FiniteBA) -> None:
        algebra.check(self.lower)
        algebra.check(self.upper)
        if not algebra.leq(self.lower, self.upper):
            raise BooleanAlgebraError(f"lower {self.lower} is not below upper {self.upper}")

    def splits(self, atom: int) -> bool:
        return bool(atom & self.upper) and not atom & self.lower

    @property
    def degenerate(self) -> bool:
        return self.lower == self.upper

    def below(self, algebra: FiniteBA, a: int) -> bool:
        """a <= x."""
        return algebra.leq(a, self.lower)

    def above(self, algebra: FiniteBA, a: int) -> bool:
        """x <= a."""
        return algebra.leq(self.upper, a)


@dataclass(frozen=True)
class BAEmbedding(Generic[T]):
    """A homomorphism out of a finite algebra, given by the images of its atoms."""
    domain: FiniteBA
    codomain: Any
    atom_images: tuple[T, ...]

    def __post_init__(self) -> None:
        if len(self.atom_images) != self.domain.n:
            raise BooleanAlgebraError("need exactly one image per atom")

    def apply(self, a: int) -> T:
        self.domain.check(a)
        out = self.codomain.zero()
        for i, image in enumerate(self.atom_images):
            if (a >> i) & 1:
                out = self.codomain.join(out, image)
        return out

    def is_embedding(self) -> bool:
        """Atom images nonzero, pairwise disjoint and joining to 1."""
        cod = self.codomain
        zero = cod.zero()
        if any(img == zero for img in self.atom_images):
            return False
        for i, x in enumerate(self.atom_images):
            for y in self.atom_images[i + 1:]:
                if cod.meet(x, y) != zero:
                    return False
        return self.apply(self.domain.top) == cod.one()

    def verify(self) -> BAEmbedding[T]:
        if not self.is_embedding():
            raise InvariantViolation("atom images do not form an embedding")
        return self

    def restricts_to(self, other: BAEmbedding[T], inclusion: list[int]) -> bool:
        """self composed with the inclusion (given on atoms) equals ``other``."""
        return all(
            self.apply(image) == other.apply(1 << i) for i, image in enumerate(inclusion)
        )

    def table(self) -> Iterator[tuple[int, T]]:
        for a in self.domain.elements():
            yield a, self.apply(a)


def random_bounds(algebra: FiniteBA, rng: np.random.Generator, max_split: int = 2) -> XBounds:
    """Seeded non-degenerate bounds splitting between one and ``max_split`` atoms."""
    count = int(rng.integers(1, min(max_split, algebra.n) + 1))
    split = [int(i) for i in rng.choice(algebra.n, size=count, replace=False)]
    rest = [i for i in range(algebra.n) if i not in split]
    lower = sum(1 << i for i in rest if rng.random() < 0.5)
    upper = lower | sum(1 << i for i in split)
    return XBounds(lower, upper)
