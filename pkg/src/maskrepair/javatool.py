"""Compile-check and test-run commands for micro-benchmark Java projects.

    python -m maskrepair.javatool compile FILE [FILE ...]
    python -m maskrepair.javatool test FILE [FILE ...] --main CLASS [--max-steps N]

``compile`` parses every file and rejects error regions, unbalanced blocks,
and unreachable statements (the checks a real compiler would make that matter
for filtering candidate patches). ``test`` interprets the files and runs the
named class's main; checking mains print `FAIL <name>` per failing check and
exit non-zero, which the validation layer parses.

Exit codes: 0 ok, 1 compile/test failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import RepairError
from .microjava import ExitSignal, InterpError, Interpreter, Program
from .syntax import NodeKind, SyntaxNode, parse

TERMINAL_ROLES = ("throw", "break", "continue")


def compile_errors(source: str) -> list[str]:
    try:
        unit = parse(source)
    except (RepairError, ValueError) as exc:
        return [f"unparseable: {exc}"]
    problems: list[str] = []
    for node in unit.root.walk():
        if node.is_error:
            line = unit.position_at(node.span.byte_start).line
            snippet = node.text.splitlines()[0][:60] if node.text else ""
            problems.append(f"line {line}: syntax error near {snippet!r}")
    problems.extend(_unreachable(unit))
    return problems


def _unreachable(unit) -> list[str]:
    problems = []
    for block in unit.root.find(NodeKind.BLOCK):
        terminated_at: SyntaxNode | None = None
        for stmt in block.children:
            if terminated_at is not None:
                line = unit.position_at(stmt.span.byte_start).line
                problems.append(f"line {line}: unreachable statement")
                break
            if stmt.kind is NodeKind.RETURN_STATEMENT or stmt.flavor in TERMINAL_ROLES:
                terminated_at = stmt
    return problems


def cmd_compile(paths: list[str]) -> int:
    status = 0
    for path in paths:
        text = Path(path).read_text()
        problems = compile_errors(text)
        for problem in problems:
            print(f"{path}: {problem}")
        if problems:
            status = 1
    return status


def cmd_test(paths: list[str], main_class: str, max_steps: int) -> int:
    units = []
    for path in paths:
        problems = compile_errors(Path(path).read_text())
        if problems:
            for problem in problems:
                print(f"{path}: {problem}")
            return 1
        units.append(parse(Path(path).read_text()))
    program = Program(units)
    interp = Interpreter(program, max_steps=max_steps)
    try:
        return interp.run_main(main_class)
    except InterpError as exc:
        print(f"FAIL runtime: {exc}")
        return 1
    except ExitSignal as exc:
        return exc.code


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="maskrepair.javatool")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="parse files and report compile problems")
    p_compile.add_argument("files", nargs="+")

    p_test = sub.add_parser("test", help="interpret files and run a checking main")
    p_test.add_argument("files", nargs="+")
    p_test.add_argument("--main", required=True, help="class whose main() to run")
    p_test.add_argument("--max-steps", type=int, default=2_000_000)

    args = parser.parse_args(argv)
    if args.command == "compile":
        return cmd_compile(args.files)
    return cmd_test(args.files, args.main, args.max_steps)


if __name__ == "__main__":
    sys.exit(main())
