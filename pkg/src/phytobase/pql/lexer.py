"""PQL lexer.

Spans are (start, end) character offsets into the source text; they are
non-overlapping and cover every non-whitespace character, which lets the
UI underline the exact offending lexeme on errors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import LexError

KEYWORDS = frozenset(
    {
        "SELECT",
        "FROM",
        "WHERE",
        "AND",
        "OR",
        "NOT",
        "CONTAINS",
        "IN",
        "ORDER",
        "BY",
        "ASC",
        "DESC",
        "LIMIT",
    }
)

SYMBOLS = ("!=", "=", "*", ",", "(", ")")


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    STRING = "string"
    INTEGER = "integer"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Token:
    """One lexeme: kind, verbatim text, span, and the decoded value.

    value is the uppercased keyword, the unescaped string body, the
    integer, or the raw text for identifiers and symbols.
    """

    kind: TokenKind
    text: str
    span: tuple[int, int]
    value: object


def _is_ident_start(ch: str) -> bool:
    return ch.isascii() and (ch.isalpha() or ch == "_")


def _is_ident_part(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch == "_")


def tokenize(text: str) -> list[Token]:
    """Tokenize PQL source; raises LexError with a span on bad input."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue

        if _is_ident_start(ch):
            start = i
            while i < n and _is_ident_part(text[i]):
                i += 1
            word = text[start:i]
            if word.upper() in KEYWORDS:
                tokens.append(Token(TokenKind.KEYWORD, word, (start, i), word.upper()))
            else:
                tokens.append(Token(TokenKind.IDENTIFIER, word, (start, i), word))
            continue

        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            word = text[start:i]
            tokens.append(Token(TokenKind.INTEGER, word, (start, i), int(word)))
            continue

        if ch in ("'", '"'):
            quote = ch
            start = i
            i += 1
            body: list[str] = []
            while i < n:
                c = text[i]
                if c == "\\" and i + 1 < n and text[i + 1] in (quote, "\\"):
                    body.append(text[i + 1])
                    i += 2
                    continue
                if c == quote:
                    i += 1
                    tokens.append(
                        Token(TokenKind.STRING, text[start:i], (start, i), "".join(body))
                    )
                    break
                body.append(c)
                i += 1
            else:
                raise LexError("unterminated string literal", span=(start, n))
            continue

        matched = False
        for symbol in SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(
                    Token(TokenKind.SYMBOL, symbol, (i, i + len(symbol)), symbol)
                )
                i += len(symbol)
                matched = True
                break
        if matched:
            continue

        raise LexError(f"illegal character {ch!r}", span=(i, i + 1))

    return tokens
