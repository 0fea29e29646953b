from __future__ import annotations


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Cursor:
    """Character cursor shared by the formula parsers."""

    def __init__(self, text: str, error=FormulaSyntaxError):
        self.text = text
        self.pos = 0
        self.error = error

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, k: int = 1) -> str:
        self.skip()
        return self.text[self.pos:self.pos + k]

    def at_word(self, word: str) -> bool:
        """``word`` follows and is not glued to a further identifier char."""
        self.skip()
        if not self.text.startswith(word, self.pos):
            return False
        nxt = self.text[self.pos + len(word):self.pos + len(word) + 1]
        return not (nxt.isalnum() or nxt == "_")

    def take(self, s: str) -> None:
        self.skip()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {s!r}, found {found!r}", self.pos)
        self.pos += len(s)

    def done(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)
