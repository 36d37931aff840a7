"""Text grammar for order descriptors and their terms.

Descriptors::

    fin:5   rev(D)   sum(D,D)   prod(D,D)   lexpow(D,w^2,T)   tern

Terms are read against a descriptor::

    fin        3
    rev        the inner term
    sum        l:T  or  r:T
    prod       (T,T)
    lexpow     [0:T, w+1:T]      (position:value pairs, defaults omitted)
    tern       tern{0:+,2:-}     (the ``tern`` prefix is optional)
"""

from __future__ import annotations

from typing import Any

from satlab.orders.descriptors import (
    Finite,
    LexPower,
    LexTerm,
    OrderDesc,
    Product,
    Reverse,
    Side,
    Sum,
    SumTerm,
    TernaryFinSupp,
    TernTerm,
)
from satlab.orders.ordinals import OrdinalCNF
from satlab.utils.exceptions import GrammarError, InvalidTerm
from satlab.utils.text import TextReader


def _read_desc(r: TextReader) -> OrderDesc:
    name = r.word()
    if name == "fin":
        r.expect(":")
        n = r.number()
        if n < 1:
            raise GrammarError("fin:n needs n >= 1")
        return Finite(n)
    if name == "tern":
        return TernaryFinSupp()
    r.expect("(")
    if name == "rev":
        inner = _read_desc(r)
        r.expect(")")
        return Reverse(inner)
    if name in ("sum", "prod"):
        left = _read_desc(r)
        r.expect(",")
        right = _read_desc(r)
        r.expect(")")
        return Sum(left, right) if name == "sum" else Product(left, right)
    if name == "lexpow":
        base = _read_desc(r)
        r.expect(",")
        exponent = OrdinalCNF.parse(r.until(","))
        r.expect(",")
        default = _read_term(base, r)
        r.expect(")")
        try:
            return LexPower(base, exponent, default)
        except InvalidTerm as exc:
            raise GrammarError(str(exc)) from exc
    raise GrammarError(f"unknown order constructor {name!r}")


def _read_term(desc: OrderDesc, r: TextReader) -> Any:
    if isinstance(desc, Finite):
        return r.number()
    if isinstance(desc, Reverse):
        return _read_term(desc.inner, r)
    if isinstance(desc, Sum):
        side = Side.LEFT if r.accept("l") else Side.RIGHT if r.accept("r") else None
        if side is None:
            raise GrammarError(f"sum term must start with l: or r: in {r.text!r}")
        r.expect(":")
        return SumTerm(side, _read_term(desc.left if side is Side.LEFT else desc.right, r))
    if isinstance(desc, Product):
        r.expect("(")
        outer = _read_term(desc.outer, r)
        r.expect(",")
        inner = _read_term(desc.inner, r)
        r.expect(")")
        return (outer, inner)
    if isinstance(desc, LexPower):
        r.expect("[")
        values: dict[OrdinalCNF, Any] = {}
        while not r.accept("]"):
            position = OrdinalCNF.parse(r.until(":"))
            r.expect(":")
            values[position] = _read_term(desc.base, r)
            if not r.accept(","):
                r.expect("]")
                break
        return LexTerm(tuple(sorted(values.items())))
    if isinstance(desc, TernaryFinSupp):
        r.accept("tern")
        r.expect("{")
        entries: dict[int, int] = {}
        while not r.accept("}"):
            position = r.number()
            r.expect(":")
            if r.accept("+"):
                sign = 1
            elif r.accept("-"):
                sign = -1
            else:
                raise GrammarError(f"ternary value must be + or - in {r.text!r}")
            r.accept("1")
            entries[position] = sign
            if not r.accept(","):
                r.expect("}")
                break
        return TernTerm(tuple(sorted(entries.items())))
    raise GrammarError(f"no term grammar for {type(desc).__name__}")


def parse_desc(text: str) -> OrderDesc:
    """Parse a descriptor.

    Raises:
        GrammarError: On malformed input.
    """
    r = TextReader(text)
    desc = _read_desc(r)
    r.done()
    return desc


def parse_term(desc: OrderDesc, text: str) -> Any:
    """Parse and validate a term of ``desc``.

    Raises:
        GrammarError: On malformed input.
        InvalidTerm: If the parsed value is not an element of ``desc``.
    """
    r = TextReader(text)
    term = _read_term(desc, r)
    r.done()
    desc.validate(term)
    return term


def format_desc(desc: OrderDesc) -> str:
    if isinstance(desc, Finite):
        return f"fin:{desc.n}"
    if isinstance(desc, TernaryFinSupp):
        return "tern"
    if isinstance(desc, Reverse):
        return f"rev({format_desc(desc.inner)})"
    if isinstance(desc, Sum):
        return f"sum({format_desc(desc.left)},{format_desc(desc.right)})"
    if isinstance(desc, Product):
        return f"prod({format_desc(desc.outer)},{format_desc(desc.inner)})"
    if isinstance(desc, LexPower):
        default = format_term(desc.base, desc.default)
        return f"lexpow({format_desc(desc.base)},{desc.exponent},{default})"
    raise GrammarError(f"no printer for {type(desc).__name__}")


def format_term(desc: OrderDesc, term: Any) -> str:
    if isinstance(desc, Finite):
        return str(term)
    if isinstance(desc, Reverse):
        return format_term(desc.inner, term)
    if isinstance(desc, Sum):
        part = desc.left if term.side is Side.LEFT else desc.right
        return f"{term.side.value}:{format_term(part, term.term)}"
    if isinstance(desc, Product):
        return f"({format_term(desc.outer, term[0])},{format_term(desc.inner, term[1])})"
    if isinstance(desc, LexPower):
        body = ",".join(f"{p}:{format_term(desc.base, v)}" for p, v in term.support)
        return f"[{body}]"
    if isinstance(desc, TernaryFinSupp):
        body = ",".join(f"{p}:{'+' if v > 0 else '-'}" for p, v in term.support)
        return f"tern{{{body}}}"
    raise GrammarError(f"no printer for {type(desc).__name__}")
