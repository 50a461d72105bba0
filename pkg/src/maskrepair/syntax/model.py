"""Syntax tree model: positions, spans, node kinds, parsed units.

The tree is a lossless view over the source text: every node's ``text`` is the
exact slice of the file its span covers, and the root span covers the whole
file. Offsets index the decoded source text (identical to byte offsets for
ASCII files; UTF-8 input is decoded before lexing).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional


class NodeKind(enum.Enum):
    METHOD_INVOCATION = "MethodInvocation"
    INFIX_EXPRESSION = "InfixExpression"
    PREFIX_EXPRESSION = "PrefixExpression"
    CONDITIONAL_EXPRESSION = "ConditionalExpression"  # any boolean-valued expression
    CAST_EXPRESSION = "CastExpression"
    INSTANCEOF_EXPRESSION = "InstanceofExpression"
    VARIABLE_DECLARATION = "VariableDeclaration"
    ASSIGNMENT = "Assignment"
    LITERAL = "Literal"
    RETURN_STATEMENT = "ReturnStatement"
    IF_STATEMENT = "IfStatement"
    STATEMENT = "Statement"  # generic statement-like construct
    SIMPLE_NAME = "SimpleName"
    ARRAY_ACCESS = "ArrayAccess"
    METHOD_DECLARATION = "MethodDeclaration"
    BLOCK = "Block"
    OPERATOR = "Operator"
    TYPE_NAME = "TypeName"
    ARGUMENT_LIST = "ArgumentList"
    EXPRESSION = "Expression"  # generic expression-like construct


class LiteralKind(enum.Enum):
    NUMBER = "number"
    STRING = "string"
    CHAR = "char"
    BOOLEAN = "boolean"
    NULL = "null"


#: Node kinds that behave as statements for line-to-statement resolution.
STATEMENT_KINDS = frozenset(
    {
        NodeKind.STATEMENT,
        NodeKind.RETURN_STATEMENT,
        NodeKind.IF_STATEMENT,
        NodeKind.VARIABLE_DECLARATION,
        NodeKind.BLOCK,
    }
)


@dataclass(frozen=True)
class SourcePosition:
    line: int  # 1-based
    column: int  # 0-based

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 0:
            raise ValueError(f"invalid position {self.line}:{self.column}")


@dataclass(frozen=True)
class Span:
    start: SourcePosition
    end: SourcePosition
    byte_start: int
    byte_end: int

    def __post_init__(self) -> None:
        if self.byte_start > self.byte_end:
            raise ValueError(f"inverted span [{self.byte_start}, {self.byte_end})")

    def contains(self, other: "Span") -> bool:
        return self.byte_start <= other.byte_start and other.byte_end <= self.byte_end

    def contains_offset(self, offset: int) -> bool:
        return self.byte_start <= offset < self.byte_end


@dataclass(eq=False)
class SyntaxNode:
    """One node of the parse tree.

    ``role`` records the node's position in its parent ("condition",
    "callee", "type", "name", ...) so later passes do not have to guess from
    child order. ``is_error`` marks regions the parser could not understand;
    their text is preserved verbatim.
    """

    kind: NodeKind
    span: Span
    children: list["SyntaxNode"] = field(default_factory=list)
    role: Optional[str] = None  # position within the parent ("condition", "arg", ...)
    flavor: Optional[str] = None  # sub-shape of generic nodes ("paren", "new", ...)
    is_error: bool = False
    literal_kind: Optional[LiteralKind] = None
    operator: Optional[str] = None  # set on OPERATOR nodes
    parent: Optional["SyntaxNode"] = field(default=None, repr=False)
    _source: str = field(default="", repr=False)

    @property
    def text(self) -> str:
        return self._source[self.span.byte_start : self.span.byte_end]

    def walk(self) -> Iterator["SyntaxNode"]:
        """Depth-first pre-order traversal of this subtree."""
        yield self
        for child in self.children:
            yield from child.walk()

    def find(self, kind: NodeKind) -> Iterator["SyntaxNode"]:
        return (node for node in self.walk() if node.kind is kind)

    def child_with_role(self, role: str) -> Optional["SyntaxNode"]:
        for child in self.children:
            if child.role == role:
                return child
        return None

    def ancestors(self) -> Iterator["SyntaxNode"]:
        node = self.parent
        while node is not None:
            yield node
            node = node.parent

    def __repr__(self) -> str:  # keep pytest diffs readable
        preview = self.text if len(self.text) <= 40 else self.text[:37] + "..."
        return f"<{self.kind.value} {self.span.byte_start}:{self.span.byte_end} {preview!r}>"


@dataclass
class ParsedUnit:
    """A parsed source file. Immutable after construction; safe to share."""

    source: str
    root: SyntaxNode
    line_starts: list[int]
    language: str = "java"
    comment_spans: list[tuple[int, int]] = field(default_factory=list)

    @property
    def line_count(self) -> int:
        return len(self.line_starts)

    def line_span(self, line: int) -> tuple[int, int]:
        """Offsets [start, end) of a 1-based line, excluding the newline."""
        if not 1 <= line <= self.line_count:
            raise IndexError(f"line {line} out of range 1..{self.line_count}")
        start = self.line_starts[line - 1]
        if line < self.line_count:
            end = self.line_starts[line] - 1
        else:
            end = len(self.source)
            if self.source.endswith("\n"):
                end -= 1
        return start, max(start, end)

    def line_text(self, line: int) -> str:
        start, end = self.line_span(line)
        return self.source[start:end]

    def position_at(self, offset: int) -> SourcePosition:
        lo, hi = 0, len(self.line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return SourcePosition(line=lo + 1, column=offset - self.line_starts[lo])


def compute_line_starts(source: str) -> list[int]:
    starts = [0]
    for i, ch in enumerate(source):
        if ch == "\n" and i + 1 < len(source):
            starts.append(i + 1)
    return starts
