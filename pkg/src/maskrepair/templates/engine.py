"""Template matching and masked-candidate instantiation.

``select_templates`` walks the buggy statement's subtree depth-first (pruning
nested blocks, whose contents are independent statements) and emits one match
site per (template, node) pair. ``instantiate`` rewrites the file for one
site, producing candidates that are byte-identical to the original outside
the edit region. Both are pure functions of their inputs.
"""

from __future__ import annotations

import enum
import textwrap
from dataclasses import dataclass, field
from typing import Optional

from .. import MASK_TOKEN
from ..errors import NotApplicable
from ..syntax import (
    LiteralKind,
    NodeKind,
    ParsedUnit,
    SyntaxNode,
    statement_at,
)
from ..syntax.scan import declared_var_types, is_reference_type
from .catalog import TemplateId, TemplateOrder, UNIVERSAL_MAJORS

LOGICAL_OPS = ("&&", "||")
COMPOUND_ASSIGN_OPS = frozenset(
    ["+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)

#: Hard cap on instantiations for one (template, node) site.
MAX_CANDIDATES_PER_SITE = 50

WRAP_INDENT = "    "


class EditKind(enum.Enum):
    REPLACE = "Replace"
    INSERT_BEFORE = "InsertBefore"
    INSERT_AFTER = "InsertAfter"
    WRAP = "Wrap"
    DELETE = "Delete"
    MOVE = "Move"


@dataclass(frozen=True)
class MatchSite:
    template: TemplateId
    node: SyntaxNode
    anchor_line: int


@dataclass(frozen=True)
class MaskedCandidate:
    template: TemplateId
    edit_kind: EditKind
    masked_line_text: str
    mask_count: int
    patched_unit_text: str
    mask_token: str = MASK_TOKEN
    #: original-file line ranges a diff may legally touch
    regions: tuple[tuple[int, int], ...] = ()
    #: original 1-based lines replaced by masked_line_text; an empty range
    #: (f, f-1) means pure insertion before line f
    replace_range: tuple[int, int] = (0, -1)
    site: Optional[MatchSite] = None
    mask_node: Optional[SyntaxNode] = field(default=None, compare=False)


# --- text edit plumbing --------------------------------------------------------


@dataclass(frozen=True)
class _Edit:
    start: int
    end: int
    replacement: str


def _apply_edits(source: str, edits: list[_Edit]) -> str:
    edits = sorted(edits, key=lambda e: e.start)
    for a, b in zip(edits, edits[1:]):
        if a.end > b.start:
            raise ValueError("overlapping edits")
    out = []
    cursor = 0
    for edit in edits:
        out.append(source[cursor : edit.start])
        out.append(edit.replacement)
        cursor = edit.end
    out.append(source[cursor:])
    return "".join(out)


def _node_lines(unit: ParsedUnit, node: SyntaxNode) -> tuple[int, int]:
    first = unit.position_at(node.span.byte_start).line
    last = unit.position_at(max(node.span.byte_start, node.span.byte_end - 1)).line
    return first, last


def _whole_line_range(unit: ParsedUnit, first: int, last: int) -> tuple[int, int]:
    """Char range covering full lines first..last including trailing newline."""
    start = unit.line_starts[first - 1]
    _, last_end = unit.line_span(last)
    if last_end < len(unit.source) and unit.source[last_end] == "\n":
        last_end += 1
    return start, last_end


def _indent_of(unit: ParsedUnit, line: int) -> str:
    text = unit.line_text(line)
    return text[: len(text) - len(text.lstrip())]


def _stmt_block_text(unit: ParsedUnit, node: SyntaxNode) -> str:
    first, last = _node_lines(unit, node)
    start, end = _whole_line_range(unit, first, last)
    return unit.source[start:end]


def _dedent_block(text: str) -> str:
    return textwrap.dedent(text).rstrip("\n")


def _reindent(block: str, indent: str, extra: str = "") -> str:
    out = []
    for line in _dedent_block(block).split("\n"):
        out.append(indent + extra + line if line.strip() else line)
    return "\n".join(out)


class _Builder:
    """Assembles MaskedCandidates for one site."""

    def __init__(self, unit: ParsedUnit, site: MatchSite, stmt: SyntaxNode):
        self.unit = unit
        self.site = site
        self.stmt = stmt  # statement the universal/wrapping edits apply to
        self.out: list[MaskedCandidate] = []

    def _finish(
        self,
        edits: list[_Edit],
        edit_kind: EditKind,
        masked_block: str,
        regions: tuple[tuple[int, int], ...],
        replace_range: tuple[int, int],
        mask_node: Optional[SyntaxNode] = None,
    ) -> None:
        if len(self.out) >= MAX_CANDIDATES_PER_SITE:
            return
        patched = _apply_edits(self.unit.source, edits)
        masked_line_text = _dedent_block(masked_block) if masked_block else ""
        self.out.append(
            MaskedCandidate(
                template=self.site.template,
                edit_kind=edit_kind,
                masked_line_text=masked_line_text,
                mask_count=masked_line_text.count(MASK_TOKEN),
                patched_unit_text=patched,
                regions=regions,
                replace_range=replace_range,
                site=self.site,
                mask_node=mask_node,
            )
        )

    # - node-text replacement within the statement's lines -

    def replace_node(self, node: SyntaxNode, replacement: str, mask_node=None) -> None:
        unit = self.unit
        first, last = _node_lines(unit, node)
        line_start, line_end = _whole_line_range(unit, first, last)
        patched_block = (
            unit.source[line_start : node.span.byte_start]
            + replacement
            + unit.source[node.span.byte_end : line_end]
        )
        self._finish(
            [_Edit(node.span.byte_start, node.span.byte_end, replacement)],
            EditKind.REPLACE,
            patched_block,
            regions=((first, last),),
            replace_range=(first, last),
            mask_node=mask_node or node,
        )

    # - whole-statement edits -

    def _stmt_bounds(self) -> tuple[int, int, int, int, str]:
        first, last = _node_lines(self.unit, self.stmt)
        start, end = _whole_line_range(self.unit, first, last)
        return first, last, start, end, _indent_of(self.unit, first)

    def _require_line_ownership(self, *, head: bool = True, tail: bool = True) -> None:
        """Whole-line statement edits are only sound when the statement is the
        sole occupant of its first/last line (a `} else {` block or a method
        body that opens on the signature line is not)."""
        first, last = _node_lines(self.unit, self.stmt)
        if head:
            line_start, _ = self.unit.line_span(first)
            before = self.unit.source[line_start : self.stmt.span.byte_start]
            if before.strip():
                raise NotApplicable("statement does not start its line")
        if tail:
            _, line_end = self.unit.line_span(last)
            after = self.unit.source[self.stmt.span.byte_end : line_end]
            if after.strip():
                raise NotApplicable("statement does not end its line")

    def _require_method_context(self) -> None:
        if not any(
            anc.kind is NodeKind.METHOD_DECLARATION for anc in self.stmt.ancestors()
        ):
            raise NotApplicable("statement-level edit outside any method body")

    def insert_before(self, new_lines: str, mask_node=None) -> None:
        """Insert a block (already indented, newline-terminated) above the statement."""
        self._require_line_ownership(tail=False)
        self._require_method_context()
        first, _last, start, _end, _ind = self._stmt_bounds()
        self._finish(
            [_Edit(start, start, new_lines)],
            EditKind.INSERT_BEFORE,
            new_lines,
            regions=((first, first),),
            replace_range=(first, first - 1),
            mask_node=mask_node,
        )

    def wrap(self, header: str, footer_lines: list[str], mask_node=None) -> None:
        self._require_line_ownership()
        self._require_method_context()
        first, last, start, end, ind = self._stmt_bounds()
        body = _reindent(self.unit.source[start:end], ind, WRAP_INDENT)
        block = f"{ind}{header}\n{body}\n" + "".join(f"{ind}{line}\n" for line in footer_lines)
        self._finish(
            [_Edit(start, end, block)],
            EditKind.WRAP,
            block,
            regions=((first, last),),
            replace_range=(first, last),
            mask_node=mask_node,
        )

    def delete_stmt(self) -> None:
        self._require_line_ownership()
        self._require_method_context()
        first, last, start, end, _ind = self._stmt_bounds()
        self._finish(
            [_Edit(start, end, "")],
            EditKind.DELETE,
            "",
            regions=((first, last),),
            replace_range=(first, last),
        )

    def move_stmt(self, dest_offset: int, dest_line: int, dest_indent: str) -> None:
        self._require_line_ownership()
        self._require_method_context()
        first, last, start, end, _ind = self._stmt_bounds()
        block = _reindent(self.unit.source[start:end], dest_indent) + "\n"
        # A line diff of a move may equally show the complement move (the
        # skipped-over lines shifting the other way), so the implied edit
        # region is the whole corridor between source and destination.
        corridor = (min(first, dest_line), max(last, dest_line))
        self._finish(
            [_Edit(start, end, ""), _Edit(dest_offset, dest_offset, block)],
            EditKind.MOVE,
            block,
            regions=(corridor,),
            replace_range=(first, last),
        )


# --- matching -------------------------------------------------------------------


def _region_nodes(stmt: SyntaxNode) -> list[SyntaxNode]:
    """Depth-first nodes of the statement subtree, not descending into nested
    blocks (their contents are separate statements)."""
    out: list[SyntaxNode] = []

    def visit(node: SyntaxNode) -> None:
        out.append(node)
        if node.kind is NodeKind.BLOCK:
            return
        for child in node.children:
            visit(child)

    visit(stmt)
    return out


def _skip_parens_up(node: SyntaxNode) -> Optional[SyntaxNode]:
    parent = node.parent
    while parent is not None and parent.flavor == "paren":
        parent = parent.parent
    return parent


def _skip_parens_down(node: SyntaxNode) -> SyntaxNode:
    while node.kind is NodeKind.EXPRESSION and node.flavor == "paren":
        if not node.children:
            break
        node = node.children[0]
    return node


def _is_boolean_expr(node: SyntaxNode) -> bool:
    return node.kind is NodeKind.CONDITIONAL_EXPRESSION or node.role == "condition"


def _is_maximal_boolean(node: SyntaxNode) -> bool:
    if node.role == "condition":
        return True
    parent = _skip_parens_up(node)
    return parent is None or parent.kind is not NodeKind.CONDITIONAL_EXPRESSION


def _logical_operands(node: SyntaxNode) -> Optional[tuple[SyntaxNode, SyntaxNode, str]]:
    if node.kind is not NodeKind.CONDITIONAL_EXPRESSION:
        return None
    op = node.child_with_role("op")
    if op is None or op.operator not in LOGICAL_OPS:
        return None
    return node.children[0], node.children[2], op.operator


def _object_valued_expressions(unit: ParsedUnit, region: list[SyntaxNode]) -> list[SyntaxNode]:
    """Expressions in the region that may legally be null: qualifiers of
    member accesses, array-access bases, and names declared with a reference
    type in this file. Deduplicated by text, document order."""
    var_types = declared_var_types(unit)
    found: list[SyntaxNode] = []
    for node in region:
        if node.kind is NodeKind.METHOD_INVOCATION and len(node.children) == 3:
            found.append(node.children[0])
        elif node.kind is NodeKind.ARRAY_ACCESS:
            found.append(node.children[0])
        elif node.kind is NodeKind.EXPRESSION and len(node.children) == 2 and (
            node.children[1].role == "member"
        ):
            found.append(node.children[0])
        elif node.kind is NodeKind.SIMPLE_NAME and node.flavor == "ref":
            dtype = var_types.get(node.text)
            if dtype is not None and is_reference_type(dtype):
                found.append(node)
    seen: set[str] = set()
    unique = []
    for node in sorted(found, key=lambda n: (n.span.byte_start, -n.span.byte_end)):
        if node.kind is NodeKind.LITERAL or node.text in seen:
            continue
        seen.add(node.text)
        unique.append(node)
    return unique


def _matches(template: TemplateId, node: SyntaxNode) -> bool:
    major, sub = template.major, template.sub
    kind = node.kind
    if major == "T1":
        return kind is NodeKind.CAST_EXPRESSION
    if major == "T2":
        if not _is_boolean_expr(node):
            return False
        if sub in ("remove", "update"):
            return _logical_operands(node) is not None
        return _is_maximal_boolean(node)
    if template.sub == "decl" and major == "T3":
        return kind is NodeKind.VARIABLE_DECLARATION and node.child_with_role("type") is not None
    if template.sub == "cast" and major == "T3":
        return kind is NodeKind.CAST_EXPRESSION
    if major == "T4":
        return kind is NodeKind.LITERAL
    if major == "T5":
        if sub == "name":
            return kind is NodeKind.METHOD_INVOCATION
        return kind is NodeKind.ARGUMENT_LIST
    if major == "T7":
        if kind in (NodeKind.INFIX_EXPRESSION, NodeKind.CONDITIONAL_EXPRESSION):
            return True
        if kind is NodeKind.ASSIGNMENT:
            op = node.child_with_role("op")
            return op is not None and op.operator in COMPOUND_ASSIGN_OPS
        return False
    if major == "T8":
        return kind is NodeKind.ARRAY_ACCESS
    if major == "T9":
        return kind is NodeKind.RETURN_STATEMENT and bool(node.children)
    if major == "T12":
        return kind is NodeKind.SIMPLE_NAME and node.flavor == "ref"
    return False


def select_templates(
    unit: ParsedUnit, buggy_line: int, order: Optional[TemplateOrder] = None
) -> list[MatchSite]:
    """Enumerate match sites for the statement at ``buggy_line``.

    Universal templates (T10, T11, T13) always match the statement itself;
    the rest require their node kinds inside the statement's line-level
    subtree. Output order is template priority, then document order.
    """
    order = order or TemplateOrder.default()
    stmt = statement_at(unit, buggy_line)
    region = _region_nodes(stmt)
    # T6 sites are per object-valued expression, not per node kind
    objecty = _object_valued_expressions(unit, region)

    sites: list[MatchSite] = []
    for template in order:
        if template.major in UNIVERSAL_MAJORS:
            sites.append(MatchSite(template, stmt, buggy_line))
        elif template.major == "T6":
            sites.extend(MatchSite(template, node, buggy_line) for node in objecty)
        else:
            for node in region:
                if _matches(template, node):
                    sites.append(MatchSite(template, node, buggy_line))
    return sites


# --- instantiation ----------------------------------------------------------------


def instantiate(site: MatchSite, unit: ParsedUnit) -> list[MaskedCandidate]:
    """Produce the masked/complete candidate edits for one match site.

    Raises NotApplicable when the matched node lacks the structure the
    sub-template needs (e.g. T7.priority on a single-operator expression).
    """
    stmt = statement_at(unit, site.anchor_line)
    b = _Builder(unit, site, stmt)
    template = site.template
    node = site.node
    handler = _HANDLERS.get((template.major, template.sub))
    if handler is None:
        raise NotApplicable(f"no handler for {template}")
    handler(b, node)
    if not b.out:
        raise NotApplicable(f"{template} produced no candidates at {node!r}")
    return b.out


def _h_t1(b: _Builder, node: SyntaxNode) -> None:
    type_node = node.child_with_role("cast-type")
    operand = node.children[1] if len(node.children) > 1 else None
    if type_node is None or operand is None:
        raise NotApplicable("cast without type/operand")
    b.wrap(f"if ({operand.text} instanceof {type_node.text}) {{", ["}"], mask_node=node)


def _h_t2_remove(b: _Builder, node: SyntaxNode) -> None:
    parts = _logical_operands(node)
    if parts is None:
        raise NotApplicable("not a logical infix")
    left, right, _op = parts
    b.replace_node(node, left.text)
    b.replace_node(node, right.text)


def _h_t2_update(b: _Builder, node: SyntaxNode) -> None:
    parts = _logical_operands(node)
    if parts is None:
        raise NotApplicable("not a logical infix")
    left, right, op = parts
    b.replace_node(node, f"{left.text} {op} {MASK_TOKEN}", mask_node=right)
    b.replace_node(node, f"{MASK_TOKEN} {op} {right.text}", mask_node=left)


def _h_t2_add(b: _Builder, node: SyntaxNode) -> None:
    b.replace_node(node, f"{node.text} {MASK_TOKEN}", mask_node=node)


def _h_t2_replace_whole(b: _Builder, node: SyntaxNode) -> None:
    b.replace_node(node, MASK_TOKEN, mask_node=node)


def _h_t3_decl(b: _Builder, node: SyntaxNode) -> None:
    type_node = node.child_with_role("type")
    if type_node is None:
        raise NotApplicable("declaration without explicit type")
    b.replace_node(type_node, MASK_TOKEN)


def _h_t3_cast(b: _Builder, node: SyntaxNode) -> None:
    type_node = node.child_with_role("cast-type")
    if type_node is None:
        raise NotApplicable("cast without type")
    b.replace_node(type_node, MASK_TOKEN)


def _h_t4(b: _Builder, node: SyntaxNode) -> None:
    b.replace_node(node, MASK_TOKEN)


def _h_t5_name(b: _Builder, node: SyntaxNode) -> None:
    callee = node.child_with_role("callee")
    if callee is None:
        raise NotApplicable("invocation without resolvable callee name")
    b.replace_node(callee, MASK_TOKEN)


def _args_of(node: SyntaxNode) -> list[SyntaxNode]:
    return [child for child in node.children if child.role == "arg"]


def _h_t5_arg_insert(b: _Builder, node: SyntaxNode) -> None:
    args = _args_of(node)
    insert_at = node.span.byte_end - 1  # before ')'
    first, last = _node_lines(b.unit, node)
    line_start, line_end = _whole_line_range(b.unit, first, last)
    addition = f", {MASK_TOKEN}" if args else MASK_TOKEN
    patched_block = (
        b.unit.source[line_start:insert_at] + addition + b.unit.source[insert_at:line_end]
    )
    b._finish(
        [_Edit(insert_at, insert_at, addition)],
        EditKind.REPLACE,
        patched_block,
        regions=((first, last),),
        replace_range=(first, last),
        mask_node=node,
    )


def _h_t5_arg_remove(b: _Builder, node: SyntaxNode) -> None:
    args = _args_of(node)
    if not args:
        raise NotApplicable("no arguments to remove")
    for i, arg in enumerate(args):
        if len(args) == 1:
            start, end = arg.span.byte_start, arg.span.byte_end
        elif i == 0:
            start, end = arg.span.byte_start, args[1].span.byte_start
        else:
            start, end = args[i - 1].span.byte_end, arg.span.byte_end
        first, last = _node_lines(b.unit, node)
        line_start, line_end = _whole_line_range(b.unit, first, last)
        patched_block = b.unit.source[line_start:start] + b.unit.source[end:line_end]
        b._finish(
            [_Edit(start, end, "")],
            EditKind.REPLACE,
            patched_block,
            regions=((first, last),),
            replace_range=(first, last),
            mask_node=arg,
        )


def _h_t5_arg_replace(b: _Builder, node: SyntaxNode) -> None:
    args = _args_of(node)
    if not args:
        raise NotApplicable("no arguments to replace")
    for arg in args:
        b.replace_node(arg, MASK_TOKEN, mask_node=arg)


def _guard_insert(b: _Builder, exp: SyntaxNode, body_line: str) -> None:
    first, _last = _node_lines(b.unit, b.stmt)
    ind = _indent_of(b.unit, first)
    block = (
        f"{ind}if ({exp.text} == null) {{\n"
        f"{ind}{WRAP_INDENT}{body_line}\n"
        f"{ind}}}\n"
    )
    b.insert_before(block, mask_node=exp)


def _h_t6_skip(b: _Builder, node: SyntaxNode) -> None:
    b.wrap(f"if ({node.text} != null) {{", ["}"], mask_node=node)


def _h_t6_return(b: _Builder, node: SyntaxNode) -> None:
    _guard_insert(b, node, f"return {MASK_TOKEN};")


def _h_t6_continue(b: _Builder, node: SyntaxNode) -> None:
    _guard_insert(b, node, "continue;")


def _h_t6_throw(b: _Builder, node: SyntaxNode) -> None:
    _guard_insert(b, node, "throw new IllegalArgumentException();")


def _h_t6_reassign(b: _Builder, node: SyntaxNode) -> None:
    _guard_insert(b, node, f"{node.text} = {MASK_TOKEN};")


def _h_t7_priority(b: _Builder, node: SyntaxNode) -> None:
    if node.kind not in (NodeKind.INFIX_EXPRESSION, NodeKind.CONDITIONAL_EXPRESSION):
        raise NotApplicable("not an infix expression")
    op2 = node.child_with_role("op")
    left = _skip_parens_down(node.children[0])
    if op2 is None or left.kind not in (
        NodeKind.INFIX_EXPRESSION,
        NodeKind.CONDITIONAL_EXPRESSION,
    ):
        raise NotApplicable("not a two-operator chain")
    op1 = left.child_with_role("op")
    if op1 is None:
        raise NotApplicable("missing inner operator")
    exp1, exp2 = left.children[0], left.children[2]
    exp3 = node.children[2]
    b.replace_node(
        node,
        f"{exp1.text} {op1.operator} ({exp2.text} {op2.operator} {exp3.text})",
        mask_node=node,
    )


def _h_t7_operator(b: _Builder, node: SyntaxNode) -> None:
    op = node.child_with_role("op")
    if op is None:
        raise NotApplicable("no operator to mask")
    if node.kind is NodeKind.ASSIGNMENT and op.operator not in COMPOUND_ASSIGN_OPS:
        raise NotApplicable("plain assignment operator is not mutated")
    b.replace_node(op, MASK_TOKEN, mask_node=op)


def _h_t8(b: _Builder, node: SyntaxNode) -> None:
    array, index = node.children[0], node.children[1]
    b.wrap(f"if ({index.text} < {array.text}.length) {{", ["}"], mask_node=node)


def _h_t9(b: _Builder, node: SyntaxNode) -> None:
    value = node.children[0] if node.children else None
    if value is None:
        raise NotApplicable("bare return")
    b.replace_node(value, MASK_TOKEN, mask_node=value)


def _h_t10_return(b: _Builder, node: SyntaxNode) -> None:
    first, _last = _node_lines(b.unit, node)
    ind = _indent_of(b.unit, first)
    b.insert_before(f"{ind}return {MASK_TOKEN};\n")


def _h_t10_trycatch(b: _Builder, node: SyntaxNode) -> None:
    b.wrap("try {", ["} catch (Exception e) {", "}"])


def _h_t10_if_wrap(b: _Builder, node: SyntaxNode) -> None:
    b.wrap(f"if ({MASK_TOKEN}) {{", ["}"])


def _h_t10_simple(b: _Builder, node: SyntaxNode) -> None:
    first, _last = _node_lines(b.unit, node)
    ind = _indent_of(b.unit, first)
    b.insert_before(f"{ind}{MASK_TOKEN};\n")


def _h_t11(b: _Builder, node: SyntaxNode) -> None:
    b.delete_stmt()


def _h_t12(b: _Builder, node: SyntaxNode) -> None:
    b.replace_node(node, MASK_TOKEN)


def _h_t13(b: _Builder, node: SyntaxNode) -> None:
    block = node.parent
    if block is None or block.kind is not NodeKind.BLOCK:
        raise NotApplicable("statement is not a direct child of a block")
    siblings = [child for child in block.children if child is not node]
    if not siblings:
        raise NotApplicable("no other position in the block")
    original_index = block.children.index(node)
    for target_index in range(len(siblings) + 1):
        if target_index == original_index:
            continue  # same position after removal
        if target_index < len(siblings):
            dest = siblings[target_index]
            dest_line = _node_lines(b.unit, dest)[0]
            dest_offset = _whole_line_range(b.unit, dest_line, dest_line)[0]
        else:
            dest = siblings[-1]
            dest_line = _node_lines(b.unit, dest)[1]
            dest_offset = _whole_line_range(b.unit, dest_line, dest_line)[1]
            dest_line += 1
        dest_indent = _indent_of(b.unit, _node_lines(b.unit, dest)[0])
        b.move_stmt(dest_offset, dest_line, dest_indent)


_HANDLERS = {
    ("T1", None): _h_t1,
    ("T2", "remove"): _h_t2_remove,
    ("T2", "update"): _h_t2_update,
    ("T2", "add"): _h_t2_add,
    ("T2", "replace-whole"): _h_t2_replace_whole,
    ("T3", "decl"): _h_t3_decl,
    ("T3", "cast"): _h_t3_cast,
    ("T4", None): _h_t4,
    ("T5", "name"): _h_t5_name,
    ("T5", "arg-insert"): _h_t5_arg_insert,
    ("T5", "arg-remove"): _h_t5_arg_remove,
    ("T5", "arg-replace"): _h_t5_arg_replace,
    ("T6", "skip"): _h_t6_skip,
    ("T6", "return"): _h_t6_return,
    ("T6", "continue"): _h_t6_continue,
    ("T6", "throw"): _h_t6_throw,
    ("T6", "reassign"): _h_t6_reassign,
    ("T7", "priority"): _h_t7_priority,
    ("T7", "operator"): _h_t7_operator,
    ("T8", None): _h_t8,
    ("T9", None): _h_t9,
    ("T10", "return"): _h_t10_return,
    ("T10", "trycatch"): _h_t10_trycatch,
    ("T10", "if-wrap"): _h_t10_if_wrap,
    ("T10", "simple"): _h_t10_simple,
    ("T11", None): _h_t11,
    ("T12", None): _h_t12,
    ("T13", None): _h_t13,
}
