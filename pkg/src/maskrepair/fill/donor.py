"""Local donor retrieval: fill masks with tokens already present in the file.

This is the classic template-repair strategy. It cannot produce a token that
never occurs in the buggy file, which is exactly the failure mode the remote
backends exist to avoid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import EmptyPool
from ..syntax import LiteralKind, NodeKind, ParsedUnit, SyntaxNode
from ..syntax.scan import (
    declared_methods,
    invocation_callees,
    expected_invocation_type,
    literal_nodes,
    operator_nodes,
    variable_references,
)
from .base import FillCandidate, FillRequest

OPERATOR_FAMILIES: dict[str, tuple[str, ...]] = {
    "arithmetic": ("+", "-", "*", "/", "%"),
    "relational": ("==", "!=", "<", ">", "<=", ">="),
    "logical": ("&&", "||"),
    "bitwise": ("&", "|", "^", "<<", ">>", ">>>"),
}


def operator_family(op: str) -> str | None:
    for family, members in OPERATOR_FAMILIES.items():
        if op in members:
            return family
    return None


@dataclass
class DonorPool:
    """Tokens found in the local file, in first-occurrence order.

    Types are attached where a same-file declaration provides them; None
    means unknown (and unknown is compatible with everything).
    """

    method_names: list[tuple[str, str | None]] = field(default_factory=list)
    variables: list[tuple[str, str | None]] = field(default_factory=list)
    literals: dict[LiteralKind, list[str]] = field(default_factory=dict)
    operators: dict[str, list[str]] = field(default_factory=dict)


def build_pool(unit: ParsedUnit) -> DonorPool:
    pool = DonorPool()

    # method names: declared methods carry return types; bare callees do not
    occurrences: list[tuple[int, str, str | None]] = []
    for name, rtype, node in declared_methods(unit):
        occurrences.append((node.span.byte_start, name, rtype))
    for callee in invocation_callees(unit):
        occurrences.append((callee.span.byte_start, callee.text, None))
    known_types: dict[str, str] = {}
    for _off, name, rtype in occurrences:
        if rtype is not None and name not in known_types:
            known_types[name] = rtype
    seen: set[str] = set()
    for _off, name, _rtype in sorted(occurrences, key=lambda t: t[0]):
        if name not in seen:
            seen.add(name)
            pool.method_names.append((name, known_types.get(name)))

    var_types: dict[str, str] = {}
    var_order: list[str] = []
    for ref in variable_references(unit):
        if ref.text not in var_order:
            var_order.append(ref.text)
    for node in unit.root.find(NodeKind.VARIABLE_DECLARATION):
        type_node = node.child_with_role("type")
        if type_node is None:
            continue
        for child in node.children:
            if child.role == "decl-name" and child.text not in var_types:
                var_types[child.text] = type_node.text
    pool.variables = [(name, var_types.get(name)) for name in var_order]

    for lit in literal_nodes(unit):
        kind = lit.literal_kind
        bucket = pool.literals.setdefault(kind, [])
        if lit.text not in bucket:
            bucket.append(lit.text)

    for op_node in operator_nodes(unit):
        family = operator_family(op_node.operator)
        if family is None:
            continue
        bucket = pool.operators.setdefault(family, [])
        if op_node.operator not in bucket:
            bucket.append(op_node.operator)

    return pool


def _compatible(declared: str | None, wanted: str | None) -> bool:
    return declared is None or wanted is None or declared == wanted


def donor_fill(request: FillRequest, pool: DonorPool, site) -> list[FillCandidate]:
    """Rank pool tokens compatible with the masked node's kind.

    Raises EmptyPool when no compatible donor exists; the caller records that
    per candidate and moves on.
    """
    if request.mask_count != 1:
        raise EmptyPool("donor retrieval fills exactly one mask")
    template = str(site.template)
    node: SyntaxNode = site.node

    if template == "T5.name":
        wanted = expected_invocation_type(node)
        names = [n for n, rtype in pool.method_names if _compatible(rtype, wanted)]
    elif template == "T12":
        declared = dict(pool.variables).get(node.text)
        names = [n for n, dtype in pool.variables if _compatible(dtype, declared)]
    elif template == "T4":
        names = list(pool.literals.get(node.literal_kind, []))
    elif template == "T7.operator":
        op = node.child_with_role("op")
        family = operator_family(op.operator) if op is not None else None
        names = list(pool.operators.get(family, [])) if family else []
    else:
        raise EmptyPool(f"donor retrieval does not support {template}")

    if not names:
        raise EmptyPool(f"no compatible donors for {template}")
    names = names[: request.beam_size]
    return [
        FillCandidate(fills=(name,), score=-float(rank), backend="donor")
        for rank, name in enumerate(names)
    ]
