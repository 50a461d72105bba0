"""Source parsing front end: tolerant Java lexing, tree building, line lookup."""

from .lexer import Token, TokenType, tokenize
from .locate import enclosing_method, line_content_range, method_of_node, statement_at
from .model import (
    LiteralKind,
    NodeKind,
    ParsedUnit,
    SourcePosition,
    Span,
    STATEMENT_KINDS,
    SyntaxNode,
)
from .parser import parse

__all__ = [
    "LiteralKind",
    "NodeKind",
    "ParsedUnit",
    "SourcePosition",
    "Span",
    "STATEMENT_KINDS",
    "SyntaxNode",
    "Token",
    "TokenType",
    "enclosing_method",
    "line_content_range",
    "method_of_node",
    "parse",
    "statement_at",
    "tokenize",
]
