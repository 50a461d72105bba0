"""Same-file symbol scans: declared types, method signatures, token pools."""

from __future__ import annotations

from .model import NodeKind, ParsedUnit, SyntaxNode

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())


def is_reference_type(type_text: str) -> bool:
    """Arrays count as reference types; bare primitives do not."""
    text = type_text.strip()
    if text.endswith("]"):
        return True
    return text not in PRIMITIVES


def declared_var_types(unit: ParsedUnit) -> dict[str, str]:
    """Map variable name -> declared type text (first declaration wins)."""
    table: dict[str, str] = {}
    for decl in unit.root.find(NodeKind.VARIABLE_DECLARATION):
        type_node = decl.child_with_role("type")
        if type_node is None:
            continue
        for child in decl.children:
            if child.role == "decl-name" and child.text not in table:
                table[child.text] = type_node.text
    return table


def declared_methods(unit: ParsedUnit) -> list[tuple[str, str | None, SyntaxNode]]:
    """(name, return type text or None for constructors, node) per declaration."""
    out = []
    for method in unit.root.find(NodeKind.METHOD_DECLARATION):
        name = method.child_with_role("name")
        if name is None:
            continue
        rtype = method.child_with_role("return-type")
        out.append((name.text, rtype.text if rtype else None, method))
    return out


def invocation_callees(unit: ParsedUnit) -> list[SyntaxNode]:
    """Callee SimpleName nodes of every invocation, in document order."""
    nodes = [
        node.child_with_role("callee")
        for node in unit.root.find(NodeKind.METHOD_INVOCATION)
    ]
    return [n for n in nodes if n is not None]


def variable_references(unit: ParsedUnit) -> list[SyntaxNode]:
    """SimpleName nodes used as variable references, in document order."""
    return [
        node
        for node in unit.root.walk()
        if node.kind is NodeKind.SIMPLE_NAME and (node.flavor == "ref" or node.role == "decl-name")
    ]


def literal_nodes(unit: ParsedUnit) -> list[SyntaxNode]:
    return list(unit.root.find(NodeKind.LITERAL))


def operator_nodes(unit: ParsedUnit) -> list[SyntaxNode]:
    """Operator nodes of infix/conditional expressions, in document order."""
    out = []
    for node in unit.root.walk():
        if node.kind in (NodeKind.INFIX_EXPRESSION, NodeKind.CONDITIONAL_EXPRESSION):
            op = node.child_with_role("op")
            if op is not None:
                out.append(op)
    return out


def expected_invocation_type(invocation: SyntaxNode) -> str | None:
    """Best-effort expected result type of an invocation, from its immediate
    syntactic use: a declaration initializer or a return value inside a method
    whose return type is declared in this file."""
    node = invocation
    parent = node.parent
    while parent is not None and parent.flavor == "paren":
        node, parent = parent, parent.parent
    if parent is None:
        return None
    if parent.kind is NodeKind.VARIABLE_DECLARATION and node.role == "init":
        type_node = parent.child_with_role("type")
        return type_node.text if type_node else None
    if parent.kind is NodeKind.RETURN_STATEMENT:
        for anc in parent.ancestors():
            if anc.kind is NodeKind.METHOD_DECLARATION:
                rtype = anc.child_with_role("return-type")
                return rtype.text if rtype else None
    return None
