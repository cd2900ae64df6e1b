from dataclasses import dataclass
from typing import List, Literal

from pyquartet.errors import LexError

TokenKind = Literal["ident", "number", "punct", "keyword", "eof"]

KEYWORDS = {"vars", "assert", "show"}
TWO_CHAR_PUNCTS = {"==", "!="}
ONE_CHAR_PUNCTS = set("(),;=+-*/^")


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    col: int

    def __str__(self):
        if self.kind == "eof":
            return "end of input"
        return f"{self.kind} {self.text!r}"


def _is_name_first(c: str) -> bool:
    return c.isascii() and (c.isalpha() or c == "_")


def _is_name_rest(c: str) -> bool:
    return c.isascii() and (c.isalnum() or c == "_")


def tokenize(source: str) -> List[Token]:
    """Longest-match scan; ``#`` comments run to the end of the line."""
    tokens = []
    pos, line, col = 0, 1, 1
    size = len(source)

    def advance(count: int):
        nonlocal pos, line, col
        for _ in range(count):
            if source[pos] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            pos += 1

    while pos < size:
        c = source[pos]
        if c in " \t\r\n":
            advance(1)
        elif c == "#":
            while pos < size and source[pos] != "\n":
                advance(1)
        elif _is_name_first(c):
            end = pos + 1
            while end < size and _is_name_rest(source[end]):
                end += 1
            text = source[pos:end]
            tokens.append(Token("keyword" if text in KEYWORDS else "ident", text, line, col))
            advance(end - pos)
        elif c.isascii() and c.isdigit():
            end = pos + 1
            while end < size and source[end].isascii() and source[end].isdigit():
                end += 1
            # a slash directly followed by a digit continues the number: 1/2 is one token
            if end + 1 < size and source[end] == "/" and source[end + 1].isascii() \
                    and source[end + 1].isdigit():
                end += 2
                while end < size and source[end].isascii() and source[end].isdigit():
                    end += 1
            tokens.append(Token("number", source[pos:end], line, col))
            advance(end - pos)
        elif source[pos:pos + 2] in TWO_CHAR_PUNCTS:
            tokens.append(Token("punct", source[pos:pos + 2], line, col))
            advance(2)
        elif c in ONE_CHAR_PUNCTS:
            tokens.append(Token("punct", c, line, col))
            advance(1)
        else:
            raise LexError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens
