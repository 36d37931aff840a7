"""Ordinals below omega^omega in Cantor normal form.

Used as exponents of lexicographic powers and as support positions of
their elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from satlab.utils.exceptions import GrammarError, OrderError

_TERM_RE = re.compile(r"^(?:(?P<w>w)(?:\^(?P<exp>\d+))?(?:\*(?P<coef>\d+))?|(?P<nat>\d+))$")


@dataclass(frozen=True, order=True)
class OrdinalCNF:
    """An ordinal sum of ``w^e * c`` terms with strictly decreasing ``e``.

    Tuple order on ``terms`` coincides with ordinal order, so the generated
    comparison methods are the ordinal comparison.
    """
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        previous = None
        for exp, coef in self.terms:
            if exp < 0 or coef <= 0:
                raise OrderError(f"bad CNF term w^{exp}*{coef}")
            if previous is not None and exp >= previous:
                raise OrderError("CNF exponents must strictly decrease")
            previous = exp

    @classmethod
    def zero(cls) -> OrdinalCNF:
        return cls(())

    @classmethod
    def finite(cls, n: int) -> OrdinalCNF:
        if n < 0:
            raise OrderError("finite ordinal must be natural")
        return cls(((0, n),)) if n else cls(())

    @classmethod
    def omega_power(cls, exp: int, coef: int = 1) -> OrdinalCNF:
        return cls(((exp, coef),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_limit(self) -> bool:
        """Nonzero and without a last element."""
        return bool(self.terms) and self.terms[-1][0] > 0

    def as_int(self) -> int:
        if not self.is_finite:
            raise OrderError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def successor(self) -> OrdinalCNF:
        return self + OrdinalCNF.finite(1)

    def __add__(self, other: OrdinalCNF) -> OrdinalCNF:
        if not other.terms:
            return self
        lead_exp, lead_coef = other.terms[0]
        kept = [t for t in self.terms if t[0] > lead_exp]
        same = [c for e, c in self.terms if e == lead_exp]
        head = (lead_exp, lead_coef + (same[0] if same else 0))
        return OrdinalCNF(tuple(kept) + (head,) + other.terms[1:])

    def positions(self) -> Iterator[OrdinalCNF]:
        """Ascending positions below a finite ordinal."""
        for i in range(self.as_int()):
            yield OrdinalCNF.finite(i)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.terms:
            if exp == 0:
                parts.append(str(coef))
                continue
            base = "w" if exp == 1 else f"w^{exp}"
            parts.append(base if coef == 1 else f"{base}*{coef}")
        return "+".join(parts)

    @classmethod
    def parse(cls, text: str) -> OrdinalCNF:
        """Parse ``w^2*3+w+4`` style notation; non-normal sums are normalized."""
        result = cls.zero()
        source = text.replace(" ", "")
        if not source:
            raise GrammarError("empty ordinal")
        for chunk in source.split("+"):
            match = _TERM_RE.match(chunk)
            if match is None:
                raise GrammarError(f"bad ordinal term {chunk!r} in {text!r}")
            if match.group("nat") is not None:
                result = result + cls.finite(int(match.group("nat")))
                continue
            exp = int(match.group("exp")) if match.group("exp") else 1
            coef = int(match.group("coef")) if match.group("coef") else 1
            if coef:
                result = result + cls.omega_power(exp, coef)
        return result
