"""Tolerant Java lexer.

Produces a flat token stream with exact source offsets. Nothing is ever
dropped: unterminated literals and stray characters become tokens too, so the
parser can mark them as error regions while the rest of the file still lexes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class TokenType(enum.Enum):
    IDENT = "ident"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING = "string"
    CHAR = "char"
    OP = "op"
    COMMENT = "comment"
    EOF = "eof"


KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

# Longest first so maximal munch works with a simple scan.
OPERATORS = sorted(
    [
        ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||",
        "<=", ">=", "==", "!=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
        "<<", ">>", "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|",
        "^", "?", ":", ";", ",", ".", "(", ")", "{", "}", "[", "]", "@",
    ],
    key=len,
    reverse=True,
)


@dataclass(frozen=True)
class Token:
    type: TokenType
    text: str
    start: int
    end: int

    @property
    def is_trivia(self) -> bool:
        return self.type is TokenType.COMMENT


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def tokenize(source: str) -> list[Token]:
    """Lex ``source`` into tokens (comments included, whitespace skipped)."""
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch in " \t\r\n\f":
            i += 1
            continue
        start = i
        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            tokens.append(Token(TokenType.COMMENT, source[start:i], start, i))
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "*":
            i += 2
            while i < n and not (source[i - 1] == "*" and source[i] == "/"):
                i += 1
            i = min(i + 1, n)
            tokens.append(Token(TokenType.COMMENT, source[start:i], start, i))
            continue
        if _is_ident_start(ch):
            while i < n and _is_ident_part(source[i]):
                i += 1
            text = source[start:i]
            ttype = TokenType.KEYWORD if text in KEYWORDS else TokenType.IDENT
            tokens.append(Token(ttype, text, start, i))
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            i = _scan_number(source, i)
            tokens.append(Token(TokenType.NUMBER, source[start:i], start, i))
            continue
        if ch == '"':
            i = _scan_quoted(source, i, '"')
            tokens.append(Token(TokenType.STRING, source[start:i], start, i))
            continue
        if ch == "'":
            i = _scan_quoted(source, i, "'")
            tokens.append(Token(TokenType.CHAR, source[start:i], start, i))
            continue
        for op in OPERATORS:
            if source.startswith(op, i):
                i += len(op)
                tokens.append(Token(TokenType.OP, op, start, i))
                break
        else:
            # Unknown character: emit it as a one-char OP token and move on.
            i += 1
            tokens.append(Token(TokenType.OP, ch, start, i))
    tokens.append(Token(TokenType.EOF, "", n, n))
    return tokens


def _scan_number(source: str, i: int) -> int:
    n = len(source)
    if source.startswith(("0x", "0X"), i):
        i += 2
        while i < n and (source[i] in "abcdefABCDEF_" or source[i].isdigit()):
            i += 1
    elif source.startswith(("0b", "0B"), i):
        i += 2
        while i < n and source[i] in "01_":
            i += 1
    else:
        while i < n and (source[i].isdigit() or source[i] in "._"):
            # A dot only continues the number when a digit follows (method
            # calls like 1 .toString() are not worth supporting).
            if source[i] == "." and not (i + 1 < n and source[i + 1].isdigit()):
                break
            i += 1
        if i < n and source[i] in "eE":
            j = i + 1
            if j < n and source[j] in "+-":
                j += 1
            if j < n and source[j].isdigit():
                i = j
                while i < n and source[i].isdigit():
                    i += 1
    if i < n and source[i] in "lLfFdD":
        i += 1
    return i


def _scan_quoted(source: str, i: int, quote: str) -> int:
    n = len(source)
    i += 1
    while i < n:
        if source[i] == "\\" and i + 1 < n:
            i += 2
            continue
        if source[i] == quote:
            return i + 1
        if source[i] == "\n":
            return i  # unterminated: stop at the line break
        i += 1
    return n
