"""Shared cursor for the small hand-written grammars."""

from __future__ import annotations

from satlab.utils.exceptions import GrammarError


class TextReader:
    """Cursor over a source string with whitespace skipping."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self._skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            raise GrammarError(f"expected {token!r} at {self.pos} in {self.text!r}")

    def word(self) -> str:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def number(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise GrammarError(f"expected a number at {start} in {self.text!r}")
        return int(self.text[start:self.pos])

    def until(self, stops: str) -> str:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            self.pos += 1
        return self.text[start:self.pos].strip()

    def done(self) -> None:
        if self.peek():
            raise GrammarError(f"trailing input at {self.pos} in {self.text!r}")
