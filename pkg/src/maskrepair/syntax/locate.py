"""Resolve source lines to statements and enclosing method declarations."""

from __future__ import annotations

from ..errors import NoEnclosingMethod, NoStatementAtLine
from .model import NodeKind, ParsedUnit, STATEMENT_KINDS, SyntaxNode


def line_content_range(unit: ParsedUnit, line: int) -> tuple[int, int] | None:
    """Offsets of the line's first and last meaningful character, skipping
    whitespace and comment-covered regions. None for blank/comment-only lines.
    """
    start, end = unit.line_span(line)
    covered = [
        (max(cs, start), min(ce, end))
        for cs, ce in unit.comment_spans
        if cs < end and ce > start
    ]

    def is_meaningful(offset: int) -> bool:
        ch = unit.source[offset]
        if ch in " \t\r\f":
            return False
        return not any(cs <= offset < ce for cs, ce in covered)

    meaningful = [i for i in range(start, end) if is_meaningful(i)]
    if not meaningful:
        return None
    return meaningful[0], meaningful[-1] + 1


def statement_at(unit: ParsedUnit, line: int) -> SyntaxNode:
    """Smallest statement-kind node for a 1-based line.

    Prefers the first (in document order) innermost statement that starts on
    the line; when nothing starts there (the middle or tail of a multi-line
    statement), falls back to the innermost statement covering the line's
    content. Blank and comment-only lines raise NoStatementAtLine.
    """
    content = line_content_range(unit, line)
    if content is None:
        raise NoStatementAtLine(line)
    c_start, c_end = content

    candidates = [
        node
        for node in unit.root.walk()
        if node.kind in STATEMENT_KINDS
        and node.role != "unit"
        and node.span.byte_start < c_end
        and node.span.byte_end > c_start
    ]
    if not candidates:
        raise NoStatementAtLine(line, "no statement intersects the line")

    starters = [n for n in candidates if c_start <= n.span.byte_start < c_end]
    if starters:
        # First in document order wins (`foo(); bar();` resolves to foo();
        # `if (cond) {` resolves to the if, not its body block); same-offset
        # ties go to the smallest node.
        starters.sort(key=lambda n: (n.span.byte_start, n.span.byte_end - n.span.byte_start))
        return starters[0]

    coverers = [
        n
        for n in candidates
        if n.span.byte_start <= c_start and n.span.byte_end >= c_end
    ]
    if coverers:
        return min(coverers, key=lambda n: n.span.byte_end - n.span.byte_start)
    raise NoStatementAtLine(line, "no statement covers the line")


def enclosing_method(unit: ParsedUnit, line: int) -> SyntaxNode:
    """Innermost MethodDeclaration node covering a 1-based line."""
    content = line_content_range(unit, line)
    if content is None:
        # fall back to the raw line span so blank lines inside a method still
        # resolve to that method
        content = unit.line_span(line)
    c_start, c_end = content
    methods = [
        node
        for node in unit.root.walk()
        if node.kind is NodeKind.METHOD_DECLARATION
        and node.span.byte_start <= c_start
        and node.span.byte_end >= c_end
    ]
    if not methods:
        raise NoEnclosingMethod(line)
    return min(methods, key=lambda n: n.span.byte_end - n.span.byte_start)


def method_of_node(unit: ParsedUnit, node: SyntaxNode) -> SyntaxNode | None:
    for anc in node.ancestors():
        if anc.kind is NodeKind.METHOD_DECLARATION:
            return anc
    return None
