"""The closed catalog of mask fix templates and their enumeration order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class TemplateId:
    major: str
    sub: Optional[str] = None

    def __str__(self) -> str:
        return self.major if self.sub is None else f"{self.major}.{self.sub}"

    @classmethod
    def parse(cls, text: str) -> "TemplateId":
        major, _, sub = text.partition(".")
        tid = cls(major, sub or None)
        if tid not in _CATALOG_SET:
            raise ValueError(f"unknown template id: {text!r}")
        return tid


def _t(text: str) -> TemplateId:
    major, _, sub = text.partition(".")
    return TemplateId(major, sub or None)


#: Every template in the catalog, in canonical (major, sub) declaration order.
CATALOG: tuple[TemplateId, ...] = tuple(
    _t(s)
    for s in [
        "T1",
        "T2.remove", "T2.update", "T2.add", "T2.replace-whole",
        "T3.decl", "T3.cast",
        "T4",
        "T5.name", "T5.arg-insert", "T5.arg-remove", "T5.arg-replace",
        "T6.skip", "T6.return", "T6.continue", "T6.throw", "T6.reassign",
        "T7.priority", "T7.operator",
        "T8",
        "T9",
        "T10.return", "T10.trycatch", "T10.if-wrap", "T10.simple",
        "T11",
        "T12",
        "T13",
    ]
)

_CATALOG_SET = frozenset(CATALOG)

#: Templates applied to every statement regardless of its node kinds.
UNIVERSAL_MAJORS = frozenset({"T10", "T11", "T13"})

DESCRIPTIONS: dict[TemplateId, str] = {
    _t("T1"): "guard a cast by wrapping the statement in an instanceof check",
    _t("T2.remove"): "drop one operand of a logical (&&/||) conditional",
    _t("T2.update"): "mask one operand of a logical (&&/||) conditional",
    _t("T2.add"): "append a masked clause to a boolean expression",
    _t("T2.replace-whole"): "mask an entire boolean expression",
    _t("T3.decl"): "mask the declared type of a variable",
    _t("T3.cast"): "mask the target type of a cast",
    _t("T4"): "mask one literal",
    _t("T5.name"): "mask the callee name of a method invocation",
    _t("T5.arg-insert"): "append a masked argument to a call",
    _t("T5.arg-remove"): "drop one argument of a call",
    _t("T5.arg-replace"): "mask one argument of a call",
    _t("T6.skip"): "wrap the statement in a null guard",
    _t("T6.return"): "insert a masked return when an expression is null",
    _t("T6.continue"): "insert a continue when an expression is null",
    _t("T6.throw"): "insert a throw when an expression is null",
    _t("T6.reassign"): "insert a masked reassignment when an expression is null",
    _t("T7.priority"): "re-associate a two-operator chain",
    _t("T7.operator"): "mask one infix (or compound-assignment) operator",
    _t("T8"): "wrap an array access in a bounds check",
    _t("T9"): "mask the returned expression",
    _t("T10.return"): "insert a masked return before the statement",
    _t("T10.trycatch"): "wrap the statement in try/catch",
    _t("T10.if-wrap"): "wrap the statement in a masked if",
    _t("T10.simple"): "insert a masked statement before the statement",
    _t("T11"): "delete the statement",
    _t("T12"): "mask one variable occurrence",
    _t("T13"): "move the statement within its block",
}

#: Major-template priority: replacement-style templates first, deletion last.
DEFAULT_MAJOR_ORDER: tuple[str, ...] = (
    "T5", "T2", "T12", "T4", "T7", "T9", "T3", "T6", "T1", "T8", "T10", "T13", "T11",
)


class TemplateOrder:
    """A permutation of the full catalog defining enumeration priority."""

    def __init__(self, ids: Iterable[TemplateId]):
        ids = tuple(ids)
        if sorted(map(str, ids)) != sorted(map(str, CATALOG)):
            raise ValueError("template order must be a permutation of the catalog")
        self.ids = ids
        self._index = {tid: i for i, tid in enumerate(ids)}

    def index(self, tid: TemplateId) -> int:
        return self._index[tid]

    def __iter__(self):
        return iter(self.ids)

    @classmethod
    def from_majors(cls, majors: Iterable[str]) -> "TemplateOrder":
        majors = list(majors)
        ids = []
        for major in majors:
            ids.extend(tid for tid in CATALOG if tid.major == major)
        return cls(ids)

    @classmethod
    def default(cls) -> "TemplateOrder":
        return cls.from_majors(DEFAULT_MAJOR_ORDER)
