"""Tokenizer for the statement language."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

__all__ = ["Token", "tokenize", "KEYWORDS"]

KEYWORDS = frozenset(
    ["forall", "exists", "in", "and", "or", "not", "div", "mod"]
)

# Longest match first.
_SYMBOLS = [
    "<->",
    "->",
    "\\/",
    "/\\",
    "..",
    "<=",
    ">=",
    "<>",
    "(",
    ")",
    "[",
    "]",
    ",",
    "=",
    "<",
    ">",
    "|",
    "+",
    "-",
    "*",
    "^",
    "~",
]


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "kw" | "sym" | "eof"
    text: str
    line: int
    col: int

    @property
    def end_col(self) -> int:
        return self.col + len(self.text)


def tokenize(source: str) -> list[Token]:
    """Token list for ``source``, ending with an ``eof`` token.

    Raises:
        ParseError: on characters outside the language.
    """
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            kind = "kw" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        for sym in _SYMBOLS:
            if source.startswith(sym, i):
                tokens.append(Token("sym", sym, line, col))
                col += len(sym)
                i += len(sym)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens
