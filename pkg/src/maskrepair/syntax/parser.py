"""Error-tolerant recursive-descent parser for Java source.

The goal is not full language fidelity: the template engine consumes the
NodeKind abstraction, so this parser only has to classify the constructs the
fix templates care about (invocations, infix/conditional expressions, casts,
declarations, returns, ifs, blocks, ...) and map everything else onto generic
Statement/Expression nodes. Regions it cannot understand become error-marked
nodes; the surrounding file still parses.
"""

from __future__ import annotations

from typing import Optional

from ..errors import UnreadableSource, UnsupportedLanguage
from .lexer import Token, TokenType, tokenize
from .model import (
    LiteralKind,
    NodeKind,
    ParsedUnit,
    Span,
    SyntaxNode,
    compute_line_starts,
)

MODIFIER_KEYWORDS = frozenset(
    """public private protected static final abstract native synchronized
    transient volatile strictfp default""".split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char short int long float double void".split()
)

ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)

BOOLEAN_INFIX_OPS = frozenset(["&&", "||", "==", "!=", "<", ">", "<=", ">="])

# precedence table for binary operators, loosest first
_BINARY_LEVELS: list[tuple[str, ...]] = [
    ("||",),
    ("&&",),
    ("|",),
    ("^",),
    ("&",),
    ("==", "!="),
    ("<", ">", "<=", ">=", "instanceof"),
    ("<<", ">>", ">>>"),
    ("+", "-"),
    ("*", "/", "%"),
]


class _ParseFailure(Exception):
    """Internal signal for statement/member level recovery."""


def parse(source: str | bytes, language: str = "java") -> ParsedUnit:
    """Parse ``source`` into a :class:`ParsedUnit`.

    Raises UnsupportedLanguage for anything but Java and UnreadableSource for
    bytes that do not decode as UTF-8. Files with localized syntax errors
    still yield a full tree with error-marked regions.
    """
    if language.lower() != "java":
        raise UnsupportedLanguage(language)
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise UnreadableSource(str(exc)) from exc
    if not source:
        raise ValueError("source must be non-empty")
    parser = _Parser(source)
    root = parser.parse_unit()
    unit = ParsedUnit(
        source=source,
        root=root,
        line_starts=compute_line_starts(source),
        language="java",
        comment_spans=[(t.start, t.end) for t in parser.comments],
    )
    _finalize(root, source)
    return unit


def _finalize(root: SyntaxNode, source: str) -> None:
    root._source = source
    for node in root.walk():
        node._source = source
        for child in node.children:
            child.parent = node


class _Parser:
    MAX_EXPR_DEPTH = 40
    MAX_STMT_DEPTH = 80

    def __init__(self, source: str):
        self.source = source
        self.line_starts = compute_line_starts(source)
        all_tokens = tokenize(source)
        self.comments = [t for t in all_tokens if t.is_trivia]
        self.tokens = [t for t in all_tokens if not t.is_trivia]
        self.pos = 0
        self.expr_depth = 0
        self.stmt_depth = 0

    # --- token helpers -------------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        idx = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[idx]

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().type is not TokenType.EOF

    def at_type(self, ttype: TokenType) -> bool:
        return self.peek().type is ttype

    def at_end(self) -> bool:
        return self.peek().type is TokenType.EOF

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.type is not TokenType.EOF:
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise _ParseFailure(f"expected {text!r}, found {self.peek().text!r}")
        return self.advance()

    def _pos_of(self, offset: int):
        from .model import SourcePosition

        lo, hi = 0, len(self.line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return SourcePosition(line=lo + 1, column=offset - self.line_starts[lo])

    def span(self, start: int, end: int) -> Span:
        return Span(self._pos_of(start), self._pos_of(end), start, end)

    def node(
        self,
        kind: NodeKind,
        start: int,
        end: int,
        children: Optional[list[SyntaxNode]] = None,
        **attrs,
    ) -> SyntaxNode:
        return SyntaxNode(
            kind=kind,
            span=self.span(start, end),
            children=[c for c in (children or []) if c is not None],
            **attrs,
        )

    def node_from_tokens(self, kind: NodeKind, first: Token, last: Token, children=None, **attrs) -> SyntaxNode:
        return self.node(kind, first.start, last.end, children, **attrs)

    # --- compilation unit ----------------------------------------------------

    def parse_unit(self) -> SyntaxNode:
        children: list[SyntaxNode] = []
        while not self.at_end():
            start_pos = self.pos
            try:
                children.append(self.parse_top_level())
            except _ParseFailure:
                children.append(self.recover_statement(self.tokens[start_pos].start, start_pos))
            if self.pos == start_pos:  # safety: always make progress
                tok = self.advance()
                children.append(self.node(NodeKind.STATEMENT, tok.start, tok.end, is_error=True))
        return self.node(NodeKind.BLOCK, 0, len(self.source), children, role="unit")

    def parse_top_level(self) -> SyntaxNode:
        if self.at("package") or self.at("import"):
            first = self.advance()
            last = first
            while not self.at(";") and not self.at_end():
                last = self.advance()
            if self.at(";"):
                last = self.advance()
            return self.node_from_tokens(NodeKind.STATEMENT, first, last, flavor="directive")
        if self.at(";"):
            tok = self.advance()
            return self.node(NodeKind.STATEMENT, tok.start, tok.end)
        return self.parse_member()

    # --- class members -------------------------------------------------------

    def parse_member(self) -> SyntaxNode:
        first = self.peek()
        self.skip_modifiers()
        if self.at("class") or self.at("interface") or self.at("enum"):
            return self.parse_type_decl(first)
        if self.at("{"):  # static/instance initializer
            block = self.parse_block()
            return self.node(NodeKind.STATEMENT, first.start, block.span.byte_end, [block])
        return self.parse_method_or_field(first)

    def skip_modifiers(self) -> None:
        while True:
            if self.peek().text in MODIFIER_KEYWORDS:
                self.advance()
            elif self.at("@"):
                self.advance()
                if self.at_type(TokenType.IDENT) or self.at_type(TokenType.KEYWORD):
                    self.advance()
                    while self.at("."):
                        self.advance()
                        if self.at_type(TokenType.IDENT):
                            self.advance()
                    if self.at("("):
                        self.skip_balanced("(", ")")
            else:
                return

    def skip_balanced(self, open_text: str, close_text: str) -> Token:
        depth = 0
        last = self.peek()
        while not self.at_end():
            tok = self.advance()
            last = tok
            if tok.text == open_text:
                depth += 1
            elif tok.text == close_text:
                depth -= 1
                if depth == 0:
                    return last
        return last

    def parse_type_decl(self, first: Token) -> SyntaxNode:
        self.advance()  # class / interface / enum
        children: list[SyntaxNode] = []
        if self.at_type(TokenType.IDENT):
            name_tok = self.advance()
            children.append(
                self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="name")
            )
        # type parameters / extends / implements: skip to the body
        while not self.at("{") and not self.at_end():
            self.advance()
        last_end = self.peek().end
        unclosed = False
        if self.at("{"):
            self.expect("{")
            while not self.at("}") and not self.at_end():
                start_pos = self.pos
                # tolerate enum constant lists: IDENT [args] (',' ...)* ';'
                try:
                    children.append(self.parse_member())
                except _ParseFailure:
                    children.append(self.recover_statement(self.tokens[start_pos].start, start_pos))
                if self.pos == start_pos:
                    tok = self.advance()
                    children.append(self.node(NodeKind.STATEMENT, tok.start, tok.end, is_error=True))
            unclosed = not self.at("}")
            last = self.advance() if self.at("}") else self.peek()
            last_end = last.end
        return self.node(
            NodeKind.STATEMENT, first.start, last_end, children, flavor="type-decl", is_error=unclosed
        )

    def parse_method_or_field(self, first: Token) -> SyntaxNode:
        # constructor: Name '('
        if self.at_type(TokenType.IDENT) and self.peek(1).text == "(":
            return self.parse_method(first, return_type=None)
        type_node = self.try_parse_type()
        if type_node is None:
            raise _ParseFailure(f"unrecognized member at {self.peek().text!r}")
        if self.at_type(TokenType.IDENT) and self.peek(1).text == "(":
            type_node.role = "return-type"
            return self.parse_method(first, return_type=type_node)
        if self.at_type(TokenType.IDENT):
            return self.parse_variable_declaration(first, type_node, role="field")
        raise _ParseFailure(f"unrecognized member at {self.peek().text!r}")

    def parse_method(self, first: Token, return_type: Optional[SyntaxNode]) -> SyntaxNode:
        name_tok = self.advance()
        name = self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="name")
        params = self.parse_parameter_list()
        children = ([return_type] if return_type else []) + [name] + params
        while self.at("throws") or self.at(","):
            self.advance()
            t = self.try_parse_type()
            if t is None:
                break
        if self.at("{"):
            body = self.parse_block()
            body.role = "body"
            children.append(body)
            end = body.span.byte_end
        elif self.at(";"):
            end = self.advance().end
        else:
            raise _ParseFailure("expected method body or ';'")
        return self.node(NodeKind.METHOD_DECLARATION, first.start, end, children)

    def parse_parameter_list(self) -> list[SyntaxNode]:
        self.expect("(")
        params: list[SyntaxNode] = []
        while not self.at(")") and not self.at_end():
            start_tok = self.peek()
            self.skip_modifiers()
            ptype = self.try_parse_type()
            if ptype is None:
                self.advance()
                continue
            if self.at("..."):
                self.advance()
            if self.at_type(TokenType.IDENT):
                name_tok = self.advance()
                pname = self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="decl-name")
                params.append(
                    self.node(
                        NodeKind.VARIABLE_DECLARATION,
                        start_tok.start,
                        name_tok.end,
                        [ptype, pname],
                        role="param",
                    )
                )
            if self.at(","):
                self.advance()
        if self.at(")"):
            self.advance()
        return params

    # --- types ----------------------------------------------------------------

    def try_parse_type(self) -> Optional[SyntaxNode]:
        """Parse a type reference; returns None (without consuming) if the
        cursor is not at something type-shaped."""
        save = self.pos
        first = self.peek()
        if first.text in PRIMITIVE_TYPES:
            self.advance()
        elif first.type is TokenType.IDENT:
            self.advance()
            while self.at(".") and self.peek(1).type is TokenType.IDENT:
                self.advance()
                self.advance()
            if self.at("<") and not self.try_skip_type_args():
                self.pos = save
                return None
        else:
            return None
        end = self.tokens[self.pos - 1].end
        while self.at("[") and self.peek(1).text == "]":
            self.advance()
            end = self.advance().end
        return self.node(NodeKind.TYPE_NAME, first.start, end, role="type")

    def try_skip_type_args(self) -> bool:
        """Consume a balanced generic argument list if one starts here."""
        save = self.pos
        depth = 0
        steps = 0
        while not self.at_end() and steps < 200:
            tok = self.peek()
            if tok.text == "<":
                depth += 1
            elif tok.text in (">", ">>", ">>>"):
                depth -= len(tok.text)
                if depth <= 0:
                    self.advance()
                    return True
            elif tok.text in (";", "{", "}", ")") or tok.type in (TokenType.STRING, TokenType.CHAR):
                break
            elif depth == 0:
                break
            self.advance()
            steps += 1
        self.pos = save
        return False

    def looks_like_declaration(self) -> bool:
        save = self.pos
        try:
            self.skip_modifiers()
            t = self.try_parse_type()
            if t is None:
                return False
            if not self.at_type(TokenType.IDENT):
                return False
            nxt = self.peek(1).text
            return nxt in ("=", ";", ",", ":", "[")
        finally:
            self.pos = save

    # --- statements ------------------------------------------------------------

    def parse_block(self) -> SyntaxNode:
        first = self.expect("{")
        children: list[SyntaxNode] = []
        while not self.at("}") and not self.at_end():
            start_pos = self.pos
            try:
                children.append(self.parse_statement())
            except _ParseFailure:
                children.append(self.recover_statement(self.tokens[start_pos].start, start_pos))
            if self.pos == start_pos:
                tok = self.advance()
                children.append(self.node(NodeKind.STATEMENT, tok.start, tok.end, is_error=True))
        if self.at("}"):
            last = self.advance()
            return self.node(NodeKind.BLOCK, first.start, last.end, children)
        # ran off the end of the file: the block is unbalanced
        return self.node(NodeKind.BLOCK, first.start, self.peek().end, children, is_error=True)

    def recover_statement(self, start: int, start_pos: int) -> SyntaxNode:
        """Consume to the next statement boundary (';', braces, or the end of
        the line) and mark the region as an error node."""
        self.pos = max(self.pos, start_pos)
        start_line = self._pos_of(start).line
        last_end = start
        while not self.at_end():
            if self.at("}") or self._pos_of(self.peek().start).line > start_line:
                break
            tok = self.advance()
            last_end = tok.end
            if tok.text in (";", "{"):
                break
        return self.node(NodeKind.STATEMENT, start, max(last_end, start), is_error=True)

    def parse_statement(self) -> SyntaxNode:
        self.stmt_depth += 1
        try:
            if self.stmt_depth > self.MAX_STMT_DEPTH:
                raise _ParseFailure("statement nesting too deep")
            return self._parse_statement_inner()
        finally:
            self.stmt_depth -= 1

    def _parse_statement_inner(self) -> SyntaxNode:
        tok = self.peek()
        text = tok.text
        if text == "{":
            return self.parse_block()
        if text == ";":
            t = self.advance()
            return self.node(NodeKind.STATEMENT, t.start, t.end)
        if text == "if":
            return self.parse_if()
        if text == "while":
            return self.parse_while(tok)
        if text == "do":
            return self.parse_do(tok)
        if text == "for":
            return self.parse_for(tok)
        if text == "return":
            return self.parse_return(tok)
        if text in ("break", "continue"):
            self.advance()
            end = tok.end
            if self.at_type(TokenType.IDENT):
                end = self.advance().end
            if self.at(";"):
                end = self.advance().end
            return self.node(NodeKind.STATEMENT, tok.start, end, flavor=text)
        if text == "throw":
            self.advance()
            expr = self.parse_expression()
            end = self.expect(";").end
            return self.node(NodeKind.STATEMENT, tok.start, end, [expr], flavor="throw")
        if text == "try":
            return self.parse_try(tok)
        if text == "switch":
            return self.parse_switch(tok)
        if text == "synchronized" and self.peek(1).text == "(":
            self.advance()
            self.expect("(")
            expr = self.parse_expression()
            self.expect(")")
            body = self.parse_block()
            return self.node(NodeKind.STATEMENT, tok.start, body.span.byte_end, [expr, body], flavor="synchronized")
        if text == "assert":
            self.advance()
            children = [self.parse_expression()]
            if self.at(":"):
                self.advance()
                children.append(self.parse_expression())
            end = self.expect(";").end
            return self.node(NodeKind.STATEMENT, tok.start, end, children, flavor="assert")
        if tok.type is TokenType.IDENT and self.peek(1).text == ":" and self.peek(2).text != ":":
            label = self.advance()
            self.advance()
            inner = self.parse_statement()
            return self.node(NodeKind.STATEMENT, label.start, inner.span.byte_end, [inner], flavor="labeled")
        if self.looks_like_declaration():
            first = self.peek()
            self.skip_modifiers()
            type_node = self.try_parse_type()
            if type_node is not None and self.at_type(TokenType.IDENT):
                return self.parse_variable_declaration(first, type_node, role="local")
            raise _ParseFailure("malformed declaration")
        expr = self.parse_expression()
        if not self.at(";"):
            raise _ParseFailure(f"expected ';' after expression, found {self.peek().text!r}")
        end = self.advance().end
        return self.node(NodeKind.STATEMENT, expr.span.byte_start, end, [expr], flavor="expr-stmt")

    def parse_variable_declaration(self, first: Token, type_node: SyntaxNode, role: str) -> SyntaxNode:
        children: list[SyntaxNode] = [type_node]
        while True:
            name_tok = self.advance()
            children.append(self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="decl-name"))
            end = name_tok.end
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                end = self.advance().end
            if self.at("="):
                self.advance()
                init = self.parse_expression()
                init.role = "init"
                children.append(init)
                end = init.span.byte_end
            if self.at(",") and self.peek(1).type is TokenType.IDENT:
                self.advance()
                continue
            break
        if self.at(";"):
            end = self.advance().end
        elif not (self.at(")") or self.at(":")):  # for-header declarations
            raise _ParseFailure("expected ';' after declaration")
        return self.node(NodeKind.VARIABLE_DECLARATION, first.start, end, children, role=role)

    def parse_if(self) -> SyntaxNode:
        first = self.expect("if")
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        then_stmt = self.parse_statement()
        then_stmt.role = "then"
        children = [cond, then_stmt]
        end = then_stmt.span.byte_end
        if self.at("else"):
            self.advance()
            else_stmt = self.parse_statement()
            else_stmt.role = "else"
            children.append(else_stmt)
            end = else_stmt.span.byte_end
        return self.node(NodeKind.IF_STATEMENT, first.start, end, children)

    def parse_while(self, first: Token) -> SyntaxNode:
        self.advance()
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        body = self.parse_statement()
        body.role = "body"
        return self.node(NodeKind.STATEMENT, first.start, body.span.byte_end, [cond, body], flavor="while")

    def parse_do(self, first: Token) -> SyntaxNode:
        self.advance()
        body = self.parse_statement()
        body.role = "body"
        self.expect("while")
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        end = self.expect(";").end
        return self.node(NodeKind.STATEMENT, first.start, end, [body, cond], flavor="do")

    def parse_for(self, first: Token) -> SyntaxNode:
        self.advance()
        self.expect("(")
        children: list[SyntaxNode] = []
        # enhanced for: (Type name : iterable)
        save = self.pos
        enhanced = False
        self.skip_modifiers()
        etype = self.try_parse_type()
        if etype is not None and self.at_type(TokenType.IDENT) and self.peek(1).text == ":":
            name_tok = self.advance()
            self.advance()  # ':'
            iterable = self.parse_expression()
            children = [
                self.node(
                    NodeKind.VARIABLE_DECLARATION,
                    etype.span.byte_start,
                    name_tok.end,
                    [etype, self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="decl-name")],
                    role="for-var",
                ),
                iterable,
            ]
            enhanced = True
        else:
            self.pos = save
        if not enhanced:
            if not self.at(";"):
                if self.looks_like_declaration():
                    f = self.peek()
                    self.skip_modifiers()
                    t = self.try_parse_type()
                    children.append(self.parse_variable_declaration(f, t, role="for-init"))
                else:
                    init = self.parse_expression()
                    init.role = "for-init-expr"
                    children.append(init)
                    while self.at(","):
                        self.advance()
                        extra = self.parse_expression()
                        extra.role = "for-init-expr"
                        children.append(extra)
            if self.at(";"):
                self.advance()
            if not self.at(";"):
                cond = self.parse_expression()
                cond.role = "condition"
                children.append(cond)
            if self.at(";"):
                self.advance()
            while not self.at(")") and not self.at_end():
                update = self.parse_expression()
                update.role = "for-update"
                children.append(update)
                if self.at(","):
                    self.advance()
                else:
                    break
        if self.at(")"):
            self.advance()
        body = self.parse_statement()
        body.role = "body"
        children.append(body)
        return self.node(NodeKind.STATEMENT, first.start, body.span.byte_end, children, flavor="for")

    def parse_return(self, first: Token) -> SyntaxNode:
        self.advance()
        children: list[SyntaxNode] = []
        if not self.at(";"):
            expr = self.parse_expression()
            expr.role = "value"
            children.append(expr)
        if not self.at(";"):
            raise _ParseFailure(f"expected ';' after return, found {self.peek().text!r}")
        end = self.advance().end
        return self.node(NodeKind.RETURN_STATEMENT, first.start, end, children)

    def parse_try(self, first: Token) -> SyntaxNode:
        self.advance()
        children: list[SyntaxNode] = []
        if self.at("("):
            self.skip_balanced("(", ")")
        body = self.parse_block()
        body.role = "body"
        children.append(body)
        end = body.span.byte_end
        while self.at("catch"):
            self.advance()
            if self.at("("):
                self.skip_balanced("(", ")")
            handler = self.parse_block()
            handler.role = "catch"
            children.append(handler)
            end = handler.span.byte_end
        if self.at("finally"):
            self.advance()
            fin = self.parse_block()
            fin.role = "finally"
            children.append(fin)
            end = fin.span.byte_end
        return self.node(NodeKind.STATEMENT, first.start, end, children, flavor="try")

    def parse_switch(self, first: Token) -> SyntaxNode:
        self.advance()
        self.expect("(")
        selector = self.parse_expression()
        self.expect(")")
        open_tok = self.expect("{")
        children: list[SyntaxNode] = [selector]
        while not self.at("}") and not self.at_end():
            start_pos = self.pos
            if self.at("case") or self.at("default"):
                label_first = self.advance()
                label_children: list[SyntaxNode] = []
                if label_first.text == "case":
                    label_children.append(self.parse_expression())
                end = label_first.end
                if self.at(":") or self.at("->"):
                    end = self.advance().end
                children.append(
                    self.node(NodeKind.STATEMENT, label_first.start, end, label_children, flavor="switch-label")
                )
            else:
                try:
                    children.append(self.parse_statement())
                except _ParseFailure:
                    children.append(self.recover_statement(self.tokens[start_pos].start, start_pos))
            if self.pos == start_pos:
                tok = self.advance()
                children.append(self.node(NodeKind.STATEMENT, tok.start, tok.end, is_error=True))
        last = self.advance() if self.at("}") else self.peek()
        return self.node(NodeKind.STATEMENT, first.start, last.end, children, flavor="switch")

    # --- expressions -------------------------------------------------------------

    def parse_expression(self) -> SyntaxNode:
        # depth guard: absurd nesting becomes an error region, not a crash
        self.expr_depth += 1
        try:
            if self.expr_depth > self.MAX_EXPR_DEPTH:
                raise _ParseFailure("expression nesting too deep")
            return self.parse_assignment()
        finally:
            self.expr_depth -= 1

    def parse_assignment(self) -> SyntaxNode:
        left = self.parse_ternary()
        if self.peek().text in ASSIGN_OPS:
            op_tok = self.advance()
            op = self.node(NodeKind.OPERATOR, op_tok.start, op_tok.end, role="op", operator=op_tok.text)
            right = self.parse_assignment()
            return self.node(
                NodeKind.ASSIGNMENT, left.span.byte_start, right.span.byte_end, [left, op, right]
            )
        return left

    def parse_ternary(self) -> SyntaxNode:
        cond = self.parse_binary(0)
        if self.at("?"):
            self.advance()
            cond.role = "condition"
            then_expr = self.parse_expression()
            self.expect(":")
            else_expr = self.parse_ternary()
            return self.node(
                NodeKind.EXPRESSION,
                cond.span.byte_start,
                else_expr.span.byte_end,
                [cond, then_expr, else_expr],
                flavor="ternary",
            )
        return cond

    def parse_binary(self, level: int) -> SyntaxNode:
        if level >= len(_BINARY_LEVELS):
            return self.parse_unary()
        ops = _BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        while self.peek().text in ops:
            # '<' could open a generic type argument list in rare spots; the
            # expression grammar treats it as less-than, which is right for
            # statement-position code.
            op_tok = self.advance()
            if op_tok.text == "instanceof":
                type_node = self.try_parse_type()
                if type_node is None:
                    raise _ParseFailure("expected type after instanceof")
                left = self.node(
                    NodeKind.INSTANCEOF_EXPRESSION,
                    left.span.byte_start,
                    type_node.span.byte_end,
                    [left, type_node],
                )
                continue
            right = self.parse_binary(level + 1)
            kind = (
                NodeKind.CONDITIONAL_EXPRESSION
                if op_tok.text in BOOLEAN_INFIX_OPS
                else NodeKind.INFIX_EXPRESSION
            )
            op = self.node(NodeKind.OPERATOR, op_tok.start, op_tok.end, role="op", operator=op_tok.text)
            left = self.node(kind, left.span.byte_start, right.span.byte_end, [left, op, right])
        return left

    def parse_unary(self) -> SyntaxNode:
        self.expr_depth += 1
        try:
            if self.expr_depth > self.MAX_EXPR_DEPTH:
                raise _ParseFailure("expression nesting too deep")
            return self._parse_unary_inner()
        finally:
            self.expr_depth -= 1

    def _parse_unary_inner(self) -> SyntaxNode:
        tok = self.peek()
        if tok.text in ("+", "-", "!", "~", "++", "--"):
            self.advance()
            op = self.node(NodeKind.OPERATOR, tok.start, tok.end, role="op", operator=tok.text)
            operand = self.parse_unary()
            return self.node(
                NodeKind.PREFIX_EXPRESSION, tok.start, operand.span.byte_end, [op, operand]
            )
        if tok.text == "(" and self.looks_like_cast():
            open_tok = self.advance()
            type_node = self.try_parse_type()
            self.expect(")")
            operand = self.parse_unary()
            type_node.role = "cast-type"
            return self.node(
                NodeKind.CAST_EXPRESSION, open_tok.start, operand.span.byte_end, [type_node, operand]
            )
        return self.parse_postfix()

    def looks_like_cast(self) -> bool:
        """Heuristic '(' Type ')' unary-start disambiguation."""
        save = self.pos
        try:
            if not self.at("("):
                return False
            self.advance()
            t = self.try_parse_type()
            if t is None or not self.at(")"):
                return False
            primitive = t.text.rstrip("[] ") in PRIMITIVE_TYPES
            follow = self.peek(1)
            if primitive:
                return follow.text not in (")", ";", ",", "]")
            return (
                follow.type in (TokenType.IDENT, TokenType.NUMBER, TokenType.STRING, TokenType.CHAR)
                or follow.text in ("(", "new", "this", "!", "~")
            )
        finally:
            self.pos = save

    def looks_like_lambda(self) -> bool:
        if self.peek().type is TokenType.IDENT and self.peek(1).text == "->":
            return True
        if not self.at("("):
            return False
        depth = 0
        ahead = 0
        while ahead < 80:
            tok = self.peek(ahead)
            if tok.type is TokenType.EOF:
                return False
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
                if depth == 0:
                    return self.peek(ahead + 1).text == "->"
            elif tok.text in (";", "{"):
                return False
            ahead += 1
        return False

    def parse_postfix(self) -> SyntaxNode:
        node = self.parse_primary()
        while True:
            if self.at("."):
                dot = self.advance()
                if not (self.at_type(TokenType.IDENT) or self.at("this") or self.at("class") or self.at("new")):
                    raise _ParseFailure("expected member name after '.'")
                name_tok = self.advance()
                if self.at("("):
                    callee = self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="callee")
                    args = self.parse_argument_list()
                    node.role = node.role or "qualifier"
                    node = self.node(
                        NodeKind.METHOD_INVOCATION,
                        node.span.byte_start,
                        args.span.byte_end,
                        [node, callee, args],
                    )
                else:
                    member = self.node(NodeKind.SIMPLE_NAME, name_tok.start, name_tok.end, role="member")
                    node.role = node.role or "qualifier"
                    node = self.node(
                        NodeKind.EXPRESSION,
                        node.span.byte_start,
                        name_tok.end,
                        [node, member],
                        flavor="member-access",
                    )
            elif self.at("["):
                self.advance()
                index = self.parse_expression()
                index.role = "index"
                end_tok = self.expect("]")
                node.role = node.role or "array"
                node = self.node(
                    NodeKind.ARRAY_ACCESS, node.span.byte_start, end_tok.end, [node, index]
                )
            elif self.at("++") or self.at("--"):
                op_tok = self.advance()
                op = self.node(NodeKind.OPERATOR, op_tok.start, op_tok.end, role="op", operator=op_tok.text)
                node = self.node(
                    NodeKind.EXPRESSION, node.span.byte_start, op_tok.end, [node, op], flavor="postfix"
                )
            elif self.at("::"):
                self.advance()
                if self.at_type(TokenType.IDENT) or self.at("new"):
                    ref_tok = self.advance()
                    node = self.node(
                        NodeKind.EXPRESSION, node.span.byte_start, ref_tok.end, [node], flavor="method-ref"
                    )
                else:
                    raise _ParseFailure("expected name after '::'")
            else:
                return node

    def parse_argument_list(self) -> SyntaxNode:
        open_tok = self.expect("(")
        args: list[SyntaxNode] = []
        while not self.at(")") and not self.at_end():
            arg = self.parse_expression()
            arg.role = "arg"
            args.append(arg)
            if self.at(","):
                self.advance()
            elif not self.at(")"):
                raise _ParseFailure(f"expected ',' or ')' in arguments, found {self.peek().text!r}")
        close_tok = self.expect(")")
        return self.node(NodeKind.ARGUMENT_LIST, open_tok.start, close_tok.end, args)

    def parse_primary(self) -> SyntaxNode:
        tok = self.peek()
        if tok.type is TokenType.NUMBER:
            self.advance()
            return self.node(NodeKind.LITERAL, tok.start, tok.end, literal_kind=LiteralKind.NUMBER)
        if tok.type is TokenType.STRING:
            self.advance()
            return self.node(NodeKind.LITERAL, tok.start, tok.end, literal_kind=LiteralKind.STRING)
        if tok.type is TokenType.CHAR:
            self.advance()
            return self.node(NodeKind.LITERAL, tok.start, tok.end, literal_kind=LiteralKind.CHAR)
        if tok.text in ("true", "false"):
            self.advance()
            return self.node(NodeKind.LITERAL, tok.start, tok.end, literal_kind=LiteralKind.BOOLEAN)
        if tok.text == "null":
            self.advance()
            return self.node(NodeKind.LITERAL, tok.start, tok.end, literal_kind=LiteralKind.NULL)
        if self.looks_like_lambda():
            return self.parse_lambda()
        if tok.text == "(":
            self.advance()
            inner = self.parse_expression()
            close_tok = self.expect(")")
            return self.node(NodeKind.EXPRESSION, tok.start, close_tok.end, [inner], flavor="paren")
        if tok.text == "new":
            return self.parse_creation(tok)
        if tok.text == "{":  # array initializer
            open_tok = self.advance()
            items: list[SyntaxNode] = []
            while not self.at("}") and not self.at_end():
                items.append(self.parse_expression())
                if self.at(","):
                    self.advance()
            close_tok = self.advance() if self.at("}") else self.peek()
            return self.node(NodeKind.EXPRESSION, open_tok.start, close_tok.end, items, flavor="array-init")
        if tok.text in ("this", "super"):
            self.advance()
            if self.at("("):
                callee = self.node(NodeKind.SIMPLE_NAME, tok.start, tok.end, role="callee")
                args = self.parse_argument_list()
                return self.node(
                    NodeKind.METHOD_INVOCATION, tok.start, args.span.byte_end, [callee, args]
                )
            return self.node(NodeKind.SIMPLE_NAME, tok.start, tok.end, flavor="ref")
        if tok.type is TokenType.IDENT:
            self.advance()
            if self.at("("):
                callee = self.node(NodeKind.SIMPLE_NAME, tok.start, tok.end, role="callee")
                args = self.parse_argument_list()
                return self.node(
                    NodeKind.METHOD_INVOCATION, tok.start, args.span.byte_end, [callee, args]
                )
            return self.node(NodeKind.SIMPLE_NAME, tok.start, tok.end, flavor="ref")
        if tok.type is TokenType.KEYWORD and tok.text in PRIMITIVE_TYPES:
            # e.g. int.class — rare; treat as a name-ish expression
            self.advance()
            return self.node(NodeKind.SIMPLE_NAME, tok.start, tok.end, flavor="ref")
        raise _ParseFailure(f"unexpected token {tok.text!r} in expression")

    def parse_lambda(self) -> SyntaxNode:
        first = self.peek()
        if first.type is TokenType.IDENT:
            self.advance()
        else:
            self.skip_balanced("(", ")")
        self.expect("->")
        if self.at("{"):
            body = self.parse_block()
        else:
            body = self.parse_expression()
        return self.node(NodeKind.EXPRESSION, first.start, body.span.byte_end, [body], flavor="lambda")

    def parse_creation(self, first: Token) -> SyntaxNode:
        self.advance()  # new
        type_node = self.try_parse_type()
        if type_node is None:
            raise _ParseFailure("expected type after 'new'")
        children: list[SyntaxNode] = [type_node]
        end = type_node.span.byte_end
        if self.at("("):
            args = self.parse_argument_list()
            children.append(args)
            end = args.span.byte_end
            if self.at("{"):  # anonymous class body: parse members for methods
                open_tok = self.advance()
                while not self.at("}") and not self.at_end():
                    start_pos = self.pos
                    try:
                        children.append(self.parse_member())
                    except _ParseFailure:
                        children.append(self.recover_statement(self.tokens[start_pos].start, start_pos))
                    if self.pos == start_pos:
                        self.advance()
                close_tok = self.advance() if self.at("}") else self.peek()
                end = close_tok.end
        else:
            while self.at("["):
                self.advance()
                if not self.at("]"):
                    dim = self.parse_expression()
                    children.append(dim)
                if self.at("]"):
                    end = self.advance().end
            if self.at("{"):
                init = self.parse_primary()  # array initializer
                children.append(init)
                end = init.span.byte_end
        return self.node(NodeKind.EXPRESSION, first.start, end, children, flavor="new")
