"""Interpreter for the small Java subset the bundled micro-benchmark uses.

Enough Java to run single-class algorithm exercises and their checking
mains: static methods and fields, int (32-bit wrapping) / boolean / char /
String / double values, int arrays, the classic control statements, string
builtins, Math/System/Integer helpers. Deliberately NOT a general Java
runtime: anything outside the subset raises InterpError, which the test
driver reports as a failure (a conservative answer for candidate patches
that wander into unsupported territory, e.g. try/catch wrappers).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from .syntax import LiteralKind, NodeKind, ParsedUnit, SyntaxNode

INT_MIN, INT_MAX = -(2**31), 2**31 - 1


class InterpError(Exception):
    pass


class ExitSignal(Exception):
    def __init__(self, code: int):
        self.code = code


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


class JavaThrow(InterpError):
    """A `throw` statement fired (there is no catch in the subset)."""


def wrap32(value: int) -> int:
    return ((value + 2**31) % 2**32) - 2**31


def jdiv(a: int, b: int) -> int:
    if b == 0:
        raise InterpError("division by zero")
    q = abs(a) // abs(b)
    return wrap32(-q if (a < 0) != (b < 0) else q)


def jmod(a: int, b: int) -> int:
    if b == 0:
        raise InterpError("modulo by zero")
    return wrap32(a - jdiv(a, b) * b)


class JChar:
    """A Java char: distinct from String, numeric in arithmetic."""

    __slots__ = ("ch",)

    def __init__(self, ch: str):
        self.ch = ch

    def __eq__(self, other):
        return isinstance(other, JChar) and self.ch == other.ch

    def __hash__(self):
        return hash(("JChar", self.ch))

    def __repr__(self):
        return f"JChar({self.ch!r})"


def to_java_string(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, JChar):
        return value.ch
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class JavaClass:
    name: str
    fields: dict[str, SyntaxNode] = field(default_factory=dict)  # name -> decl node
    field_inits: list[tuple[str, Optional[SyntaxNode]]] = field(default_factory=list)
    methods: dict[str, list[SyntaxNode]] = field(default_factory=dict)
    statics: dict[str, Any] = field(default_factory=dict)


class Program:
    def __init__(self, units: list[ParsedUnit]):
        self.classes: dict[str, JavaClass] = {}
        for unit in units:
            self._load_unit(unit)

    def _load_unit(self, unit: ParsedUnit) -> None:
        for type_decl in unit.root.children:
            if type_decl.flavor != "type-decl":
                continue
            name_node = type_decl.child_with_role("name")
            if name_node is None:
                continue
            cls = JavaClass(name=name_node.text)
            for member in type_decl.children:
                if member.kind is NodeKind.METHOD_DECLARATION:
                    mname = member.child_with_role("name")
                    if mname is not None:
                        cls.methods.setdefault(mname.text, []).append(member)
                elif member.kind is NodeKind.VARIABLE_DECLARATION and member.role == "field":
                    decl_names = [c for c in member.children if c.role == "decl-name"]
                    inits = [c for c in member.children if c.role == "init"]
                    for i, dn in enumerate(decl_names):
                        cls.fields[dn.text] = member
                        cls.field_inits.append(
                            (dn.text, inits[i] if i < len(inits) else None)
                        )
            self.classes[cls.name] = cls


class Interpreter:
    def __init__(self, program: Program, max_steps: int = 2_000_000, stdout=None):
        self.program = program
        self.max_steps = max_steps
        self.steps = 0
        self.stdout = stdout or sys.stdout

    # --- bookkeeping -----------------------------------------------------------

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.max_steps:
            raise InterpError(f"step budget exceeded ({self.max_steps})")

    def initialize_statics(self) -> None:
        for cls in self.program.classes.values():
            for name, _init in cls.field_inits:
                cls.statics[name] = None
        for cls in self.program.classes.values():
            for name, init in cls.field_inits:
                cls.statics[name] = self.eval(init, _Frame(cls)) if init is not None else 0

    def run_main(self, class_name: str) -> int:
        cls = self.program.classes.get(class_name)
        if cls is None or "main" not in cls.methods:
            raise InterpError(f"no main method in class {class_name!r}")
        self.initialize_statics()
        try:
            self.call_method(cls, "main", [[]])
        except ExitSignal as exc:
            return exc.code
        return 0

    # --- calls ----------------------------------------------------------------

    def call_method(self, cls: JavaClass, name: str, args: list):
        overloads = cls.methods.get(name, [])
        matching = [m for m in overloads if self._arity(m) == len(args)]
        if not matching:
            raise InterpError(f"no method {cls.name}.{name}/{len(args)}")
        method = matching[0]
        frame = _Frame(cls)
        for param, value in zip(self._params(method), args):
            frame.locals[param] = value
        body = method.child_with_role("body")
        if body is None:
            raise InterpError(f"method {cls.name}.{name} has no body")
        try:
            self.exec_block(body, frame)
        except _Return as ret:
            return ret.value
        return None

    @staticmethod
    def _params(method: SyntaxNode) -> list[str]:
        out = []
        for child in method.children:
            if child.role == "param":
                name = child.child_with_role("decl-name")
                if name is not None:
                    out.append(name.text)
        return out

    def _arity(self, method: SyntaxNode) -> int:
        return len(self._params(method))

    # --- statements -------------------------------------------------------------

    def exec_block(self, block: SyntaxNode, frame: "_Frame") -> None:
        for stmt in block.children:
            self.exec(stmt, frame)

    def exec(self, node: SyntaxNode, frame: "_Frame") -> None:
        self.tick()
        kind, flavor = node.kind, node.flavor
        if node.is_error:
            raise InterpError(f"cannot execute malformed code: {node.text[:60]!r}")
        if kind is NodeKind.BLOCK:
            self.exec_block(node, frame)
        elif kind is NodeKind.VARIABLE_DECLARATION:
            decl_names = [c for c in node.children if c.role == "decl-name"]
            inits = {c.span.byte_start: c for c in node.children if c.role == "init"}
            ordered = sorted(
                [c for c in node.children if c.role in ("decl-name", "init")],
                key=lambda c: c.span.byte_start,
            )
            pending: Optional[str] = None
            for child in ordered:
                if child.role == "decl-name":
                    if pending is not None:
                        frame.locals[pending] = 0
                    pending = child.text
                else:
                    frame.locals[pending] = self.eval(child, frame)
                    pending = None
            if pending is not None:
                frame.locals[pending] = 0
        elif kind is NodeKind.RETURN_STATEMENT:
            value = self.eval(node.children[0], frame) if node.children else None
            raise _Return(value)
        elif kind is NodeKind.IF_STATEMENT:
            cond = node.child_with_role("condition")
            if self.truthy(self.eval(cond, frame)):
                self.exec(node.child_with_role("then"), frame)
            elif node.child_with_role("else") is not None:
                self.exec(node.child_with_role("else"), frame)
        elif flavor == "while":
            cond = node.child_with_role("condition")
            body = node.child_with_role("body")
            while self.truthy(self.eval(cond, frame)):
                self.tick()
                try:
                    self.exec(body, frame)
                except _Break:
                    break
                except _Continue:
                    continue
        elif flavor == "do":
            cond = node.child_with_role("condition")
            body = node.child_with_role("body")
            while True:
                self.tick()
                try:
                    self.exec(body, frame)
                except _Break:
                    break
                except _Continue:
                    pass
                if not self.truthy(self.eval(cond, frame)):
                    break
        elif flavor == "for":
            self._exec_for(node, frame)
        elif flavor == "expr-stmt":
            self.eval(node.children[0], frame)
        elif flavor == "throw":
            value = self.eval(node.children[0], frame) if node.children else None
            raise JavaThrow(f"uncaught exception: {to_java_string(value)}")
        elif flavor == "break":
            raise _Break()
        elif flavor == "continue":
            raise _Continue()
        elif flavor == "assert":
            ok = self.truthy(self.eval(node.children[0], frame))
            if not ok:
                label = ""
                if len(node.children) > 1:
                    label = to_java_string(self.eval(node.children[1], frame))
                raise InterpError(f"assertion failed: {label}")
        elif kind is NodeKind.STATEMENT and not node.children:
            pass  # empty statement
        else:
            raise InterpError(f"unsupported statement: {node.text.splitlines()[0][:60]!r}")

    def _exec_for(self, node: SyntaxNode, frame: "_Frame") -> None:
        body = node.child_with_role("body")
        cond = node.child_with_role("condition")
        for_var = next((c for c in node.children if c.role == "for-var"), None)
        if for_var is not None:  # enhanced for over an array
            iterable = self.eval(node.children[1], frame)
            if not isinstance(iterable, list):
                raise InterpError("enhanced for requires an array")
            name = for_var.child_with_role("decl-name").text
            for item in iterable:
                self.tick()
                frame.locals[name] = item
                try:
                    self.exec(body, frame)
                except _Break:
                    break
                except _Continue:
                    continue
            return
        updates = [c for c in node.children if c.role == "for-update"]
        for init in node.children:
            if init.role == "for-init":
                self.exec(init, frame)
            elif init.role == "for-init-expr":
                self.eval(init, frame)
        while cond is None or self.truthy(self.eval(cond, frame)):
            self.tick()
            try:
                self.exec(body, frame)
            except _Break:
                break
            except _Continue:
                pass
            for update in updates:
                self.eval(update, frame)

    # --- expressions ---------------------------------------------------------------

    def truthy(self, value) -> bool:
        if isinstance(value, bool):
            return value
        raise InterpError(f"condition is not boolean: {value!r}")

    def eval(self, node: SyntaxNode, frame: "_Frame"):
        self.tick()
        if node.is_error:
            raise InterpError(f"cannot evaluate malformed code: {node.text[:60]!r}")
        kind = node.kind
        if kind is NodeKind.LITERAL:
            return self._literal(node)
        if kind is NodeKind.SIMPLE_NAME:
            return self._name(node.text, frame)
        if kind is NodeKind.EXPRESSION:
            return self._expression(node, frame)
        if kind in (NodeKind.INFIX_EXPRESSION, NodeKind.CONDITIONAL_EXPRESSION):
            return self._infix(node, frame)
        if kind is NodeKind.PREFIX_EXPRESSION:
            return self._prefix(node, frame)
        if kind is NodeKind.ASSIGNMENT:
            return self._assign(node, frame)
        if kind is NodeKind.METHOD_INVOCATION:
            return self._invoke(node, frame)
        if kind is NodeKind.ARRAY_ACCESS:
            array = self.eval(node.children[0], frame)
            index = self.eval(node.children[1], frame)
            return self._array_get(array, index)
        if kind is NodeKind.CAST_EXPRESSION:
            return self._cast(node, frame)
        if kind is NodeKind.INSTANCEOF_EXPRESSION:
            value = self.eval(node.children[0], frame)
            return self._instanceof(value, node.children[1].text)
        raise InterpError(f"unsupported expression: {node.text[:60]!r}")

    def _literal(self, node: SyntaxNode):
        text = node.text
        lk = node.literal_kind
        if lk is LiteralKind.NULL:
            return None
        if lk is LiteralKind.BOOLEAN:
            return text == "true"
        if lk is LiteralKind.STRING:
            return _unescape(text[1:-1])
        if lk is LiteralKind.CHAR:
            value = _unescape(text[1:-1])
            if len(value) != 1:
                raise InterpError(f"bad char literal {text}")
            return JChar(value)
        clean = text.replace("_", "").rstrip("lL")
        if clean.lower().startswith("0x"):
            return wrap32(int(clean, 16))
        if clean.lower().startswith("0b"):
            return wrap32(int(clean, 2))
        if any(c in clean for c in ".eE") or clean[-1] in "fFdD":
            return float(clean.rstrip("fFdD"))
        return wrap32(int(clean))

    def _name(self, name: str, frame: "_Frame"):
        if name in frame.locals:
            return frame.locals[name]
        if name in frame.cls.statics:
            return frame.cls.statics[name]
        raise InterpError(f"undefined name {name!r}")

    def _expression(self, node: SyntaxNode, frame: "_Frame"):
        flavor = node.flavor
        if flavor == "paren":
            return self.eval(node.children[0], frame)
        if flavor == "ternary":
            cond, then_e, else_e = node.children
            return self.eval(then_e if self.truthy(self.eval(cond, frame)) else else_e, frame)
        if flavor == "postfix":
            operand, op = node.children
            old = self.eval(operand, frame)
            self._store(operand, wrap32(old + (1 if op.operator == "++" else -1)), frame)
            return old
        if flavor == "array-init":
            return [self.eval(child, frame) for child in node.children]
        if flavor == "new":
            return self._new(node, frame)
        if len(node.children) == 2 and node.children[1].role == "member":
            return self._member(node, frame)
        raise InterpError(f"unsupported expression form: {node.text[:60]!r}")

    def _member(self, node: SyntaxNode, frame: "_Frame"):
        qualifier, member = node.children
        mname = member.text
        if qualifier.kind is NodeKind.SIMPLE_NAME:
            qname = qualifier.text
            if qname == "Integer":
                constants = {"MAX_VALUE": INT_MAX, "MIN_VALUE": INT_MIN}
                if mname in constants:
                    return constants[mname]
                _fail_member(node)
            if qname == "System" and mname == "out":
                return _PRINT_STREAM
            target_cls = self.program.classes.get(qname)
            if target_cls is not None and mname in target_cls.statics:
                return target_cls.statics[mname]
        value = self.eval(qualifier, frame)
        if isinstance(value, list) and mname == "length":
            return len(value)
        raise InterpError(f"unsupported member access: {node.text[:60]!r}")

    def _new(self, node: SyntaxNode, frame: "_Frame"):
        type_node = node.children[0]
        type_text = type_node.text
        rest = node.children[1:]
        if type_text.endswith("[]") or (rest and rest[0].kind is not NodeKind.ARGUMENT_LIST):
            init = next((c for c in rest if c.flavor == "array-init"), None)
            if init is not None:
                return [self.eval(c, frame) for c in init.children]
            dims = [c for c in rest if c.flavor != "array-init"]
            if not dims:
                raise InterpError("array creation without a size")
            size = self.eval(dims[0], frame)
            if not isinstance(size, int) or size < 0:
                raise InterpError(f"bad array size {size!r}")
            base = type_text.replace("[", " ").replace("]", " ").strip()
            fill: Any = 0 if base in ("int", "long", "short", "byte", "double", "float") else None
            if base == "boolean":
                fill = False
            elif base == "char":
                fill = JChar("\0")
            return [fill] * size
        if type_text.endswith("Exception") or type_text.endswith("Error"):
            args = rest[0] if rest else None
            detail = ""
            if args is not None and args.children:
                detail = to_java_string(self.eval(args.children[0], frame))
            return _ExceptionValue(type_text, detail)
        raise InterpError(f"unsupported construction: new {type_text}")

    def _infix(self, node: SyntaxNode, frame: "_Frame"):
        left_node, op_node, right_node = node.children
        op = op_node.operator
        if op == "&&":
            return self.truthy(self.eval(left_node, frame)) and self.truthy(
                self.eval(right_node, frame)
            )
        if op == "||":
            return self.truthy(self.eval(left_node, frame)) or self.truthy(
                self.eval(right_node, frame)
            )
        left = self.eval(left_node, frame)
        right = self.eval(right_node, frame)
        return self._binary(op, left, right)

    def _binary(self, op: str, left, right):
        if op == "+" and (isinstance(left, str) or isinstance(right, str)):
            return to_java_string(left) + to_java_string(right)
        if op in ("==", "!="):
            if isinstance(left, list) or isinstance(right, list):
                same = left is right
            elif left is None or right is None:
                same = left is None and right is None
            elif isinstance(left, JChar) or isinstance(right, JChar):
                if isinstance(left, JChar) and isinstance(right, JChar):
                    same = left == right
                else:  # char vs int comparison is numeric in Java
                    same = self._numeric(left) == self._numeric(right)
            else:
                same = type(left) is type(right) and left == right
            return same if op == "==" else not same
        lnum, rnum = self._numeric(left), self._numeric(right)
        if op in ("+", "-", "*", "/", "%", "<<", ">>", ">>>", "&", "|", "^"):
            return self._arith(op, lnum, rnum)
        if op in ("<", ">", "<=", ">="):
            return {
                "<": lnum < rnum,
                ">": lnum > rnum,
                "<=": lnum <= rnum,
                ">=": lnum >= rnum,
            }[op]
        raise InterpError(f"unsupported operator {op!r}")

    def _numeric(self, value):
        if isinstance(value, bool):
            raise InterpError("boolean used in numeric context")
        if isinstance(value, (int, float)):
            return value
        if isinstance(value, JChar):
            return ord(value.ch)
        raise InterpError(f"not a number: {value!r}")

    def _arith(self, op: str, a, b):
        if isinstance(a, float) or isinstance(b, float):
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0:
                    raise InterpError("division by zero")
                return a / b
            if op == "%":
                return a % b
            raise InterpError(f"unsupported float operator {op!r}")
        if op == "+":
            return wrap32(a + b)
        if op == "-":
            return wrap32(a - b)
        if op == "*":
            return wrap32(a * b)
        if op == "/":
            return jdiv(a, b)
        if op == "%":
            return jmod(a, b)
        if op == "<<":
            return wrap32(a << (b & 31))
        if op == ">>":
            return wrap32(a >> (b & 31))
        if op == ">>>":
            return wrap32((a & 0xFFFFFFFF) >> (b & 31))
        if op == "&":
            return wrap32(a & b)
        if op == "|":
            return wrap32(a | b)
        if op == "^":
            return wrap32(a ^ b)
        raise InterpError(f"unsupported int operator {op!r}")

    def _prefix(self, node: SyntaxNode, frame: "_Frame"):
        op_node, operand = node.children
        op = op_node.operator
        if op == "!":
            return not self.truthy(self.eval(operand, frame))
        if op == "-":
            value = self._numeric(self.eval(operand, frame))
            return -value if isinstance(value, float) else wrap32(-value)
        if op == "+":
            return self._numeric(self.eval(operand, frame))
        if op == "~":
            return wrap32(~self._numeric(self.eval(operand, frame)))
        if op in ("++", "--"):
            old = self._numeric(self.eval(operand, frame))
            new = wrap32(old + (1 if op == "++" else -1))
            self._store(operand, new, frame)
            return new
        raise InterpError(f"unsupported prefix operator {op!r}")

    def _assign(self, node: SyntaxNode, frame: "_Frame"):
        target, op_node, value_node = node.children
        op = op_node.operator
        value = self.eval(value_node, frame)
        if op != "=":
            current = self.eval(target, frame)
            value = self._binary(op[:-1], current, value)
        self._store(target, value, frame)
        return value

    def _store(self, target: SyntaxNode, value, frame: "_Frame") -> None:
        if target.kind is NodeKind.SIMPLE_NAME:
            name = target.text
            if name in frame.locals:
                frame.locals[name] = value
            elif name in frame.cls.statics:
                frame.cls.statics[name] = value
            else:
                raise InterpError(f"assignment to undefined name {name!r}")
            return
        if target.kind is NodeKind.ARRAY_ACCESS:
            array = self.eval(target.children[0], frame)
            index = self.eval(target.children[1], frame)
            if not isinstance(array, list):
                raise InterpError("indexed assignment on a non-array")
            if not isinstance(index, int) or not 0 <= index < len(array):
                raise InterpError(f"array index {index!r} out of bounds for length {len(array)}")
            array[index] = value
            return
        if target.kind is NodeKind.EXPRESSION and len(target.children) == 2:
            qualifier, member = target.children
            if qualifier.kind is NodeKind.SIMPLE_NAME:
                target_cls = self.program.classes.get(qualifier.text)
                if target_cls is not None and member.text in target_cls.statics:
                    target_cls.statics[member.text] = value
                    return
        if target.flavor == "paren":
            self._store(target.children[0], value, frame)
            return
        raise InterpError(f"unsupported assignment target: {target.text[:60]!r}")

    def _array_get(self, array, index):
        if not isinstance(array, list):
            if array is None:
                raise InterpError("null array dereference")
            raise InterpError("indexing a non-array")
        if not isinstance(index, int) or not 0 <= index < len(array):
            raise InterpError(f"array index {index!r} out of bounds for length {len(array)}")
        return array[index]

    def _cast(self, node: SyntaxNode, frame: "_Frame"):
        type_text = node.children[0].text
        value = self.eval(node.children[1], frame)
        if type_text == "int":
            if isinstance(value, float):
                return wrap32(int(value))
            return wrap32(self._numeric(value))
        if type_text == "char":
            return JChar(chr(int(self._numeric(value)) & 0xFFFF))
        if type_text == "double":
            return float(self._numeric(value))
        return value  # reference casts are unchecked in the subset

    def _instanceof(self, value, type_text: str) -> bool:
        if value is None:
            return False
        if type_text == "String":
            return isinstance(value, str)
        if type_text.endswith("[]"):
            return isinstance(value, list)
        return True

    # --- invocation ------------------------------------------------------------------

    def _invoke(self, node: SyntaxNode, frame: "_Frame"):
        children = node.children
        if len(children) == 2:  # name(args) on the current class
            callee, args_node = children
            args = [self.eval(a, frame) for a in args_node.children]
            return self.call_method(frame.cls, callee.text, args)
        qualifier, callee, args_node = children
        args = [self.eval(a, frame) for a in args_node.children]
        mname = callee.text
        if qualifier.kind is NodeKind.SIMPLE_NAME:
            qname = qualifier.text
            if qname == "Math":
                return self._math(mname, args)
            if qname == "System":
                if mname == "exit":
                    raise ExitSignal(int(args[0]))
                raise InterpError(f"unsupported System.{mname}")
            if qname == "Integer":
                if mname == "parseInt":
                    try:
                        return wrap32(int(args[0]))
                    except ValueError as exc:
                        raise InterpError(f"NumberFormatException: {args[0]!r}") from exc
                if mname == "toString":
                    return to_java_string(args[0])
                raise InterpError(f"unsupported Integer.{mname}")
            if qname == "String" and mname == "valueOf":
                return to_java_string(args[0])
            target_cls = self.program.classes.get(qname)
            if target_cls is not None and mname in target_cls.methods:
                return self.call_method(target_cls, mname, args)
        receiver = self.eval(qualifier, frame)
        return self._instance_call(receiver, mname, args, node)

    def _math(self, name: str, args: list):
        if name == "abs":
            return abs(args[0]) if isinstance(args[0], float) else wrap32(abs(args[0]))
        if name == "max":
            return max(args)
        if name == "min":
            return min(args)
        if name == "floorDiv":
            return wrap32(args[0] // args[1]) if args[1] else _zero_div()
        if name == "floorMod":
            return wrap32(args[0] % args[1]) if args[1] else _zero_div()
        if name == "pow":
            return float(args[0]) ** float(args[1])
        if name == "sqrt":
            return float(args[0]) ** 0.5
        raise InterpError(f"unsupported Math.{name}")

    def _instance_call(self, receiver, mname: str, args: list, node: SyntaxNode):
        if receiver is _PRINT_STREAM:
            if mname in ("println", "print"):
                text = to_java_string(args[0]) if args else ""
                self.stdout.write(text + ("\n" if mname == "println" else ""))
                return None
            raise InterpError(f"unsupported PrintStream.{mname}")
        if receiver is None:
            raise InterpError(f"null dereference calling .{mname}() at {node.text[:50]!r}")
        if isinstance(receiver, str):
            return self._string_call(receiver, mname, args)
        raise InterpError(f"unsupported receiver for .{mname}(): {receiver!r}")

    def _string_call(self, receiver: str, mname: str, args: list):
        args = [a.ch if isinstance(a, JChar) else a for a in args]
        if mname == "length":
            return len(receiver)
        if mname == "charAt":
            index = args[0]
            if not 0 <= index < len(receiver):
                raise InterpError(f"string index {index} out of bounds")
            return JChar(receiver[index])
        if mname == "indexOf":
            return receiver.find(args[0], *args[1:])
        if mname == "lastIndexOf":
            return receiver.rfind(args[0], *([0, args[1] + 1] if len(args) > 1 else []))
        if mname == "substring":
            lo = args[0]
            hi = args[1] if len(args) > 1 else len(receiver)
            if not 0 <= lo <= hi <= len(receiver):
                raise InterpError(f"substring({args}) out of bounds for length {len(receiver)}")
            return receiver[lo:hi]
        if mname == "equals":
            return receiver == args[0]
        if mname == "isEmpty":
            return len(receiver) == 0
        if mname == "startsWith":
            return receiver.startswith(args[0])
        if mname == "endsWith":
            return receiver.endswith(args[0])
        if mname == "contains":
            return args[0] in receiver
        if mname == "trim":
            return receiver.strip()
        if mname == "toUpperCase":
            return receiver.upper()
        if mname == "toLowerCase":
            return receiver.lower()
        if mname == "compareTo":
            return (receiver > args[0]) - (receiver < args[0])
        raise InterpError(f"unsupported String.{mname}")


@dataclass
class _Frame:
    cls: JavaClass
    locals: dict[str, Any] = field(default_factory=dict)


class _PrintStream:
    pass


_PRINT_STREAM = _PrintStream()


@dataclass
class _ExceptionValue:
    type_name: str
    detail: str

    def __str__(self) -> str:
        return f"{self.type_name}({self.detail})" if self.detail else self.type_name


def _fail_member(node) -> None:
    raise InterpError(f"unsupported member: {node.text[:60]!r}")


def _zero_div():
    raise InterpError("division by zero")


_ESCAPES = {
    "n": "\n",
    "t": "\t",
    "r": "\r",
    "b": "\b",
    "f": "\f",
    "0": "\0",
    "'": "'",
    '"': '"',
    "\\": "\\",
}


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "u" and i + 5 < len(text):
                out.append(chr(int(text[i + 2 : i + 6], 16)))
                i += 6
                continue
            out.append(_ESCAPES.get(nxt, nxt))
            i += 2
            continue
        out.append(ch)
        i += 1
    return "".join(out)
