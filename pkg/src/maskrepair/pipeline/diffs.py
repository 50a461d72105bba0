"""Unified diffs and whitespace/comment-insensitive source equality."""

from __future__ import annotations

import difflib

from ..syntax import TokenType, tokenize


def unified_diff(original: str, patched: str, path: str = "a") -> str:
    lines = difflib.unified_diff(
        original.splitlines(keepends=True),
        patched.splitlines(keepends=True),
        fromfile=f"a/{path}",
        tofile=f"b/{path}",
    )
    out = []
    for line in lines:
        out.append(line if line.endswith("\n") else line + "\n\\ No newline at end of file\n")
    return "".join(out)


def apply_unified_diff(original: str, diff: str) -> str:
    """Re-apply a diff produced by :func:`unified_diff` (used to check the
    candidate/diff consistency invariant)."""
    original_lines = original.splitlines(keepends=True)
    out: list[str] = []
    cursor = 0
    prev_op = ""
    for line in diff.splitlines(keepends=True):
        if line.startswith(("---", "+++")):
            continue
        if line.startswith("@@"):
            old_range = line.split()[1].lstrip("-")
            old_start, _, old_len = old_range.partition(",")
            # a zero-length old range anchors AFTER the named line
            target = int(old_start) if old_len == "0" else max(int(old_start) - 1, 0)
            out.extend(original_lines[cursor:target])
            cursor = target
            prev_op = "@"
            continue
        if line.startswith("\\"):
            # "no newline" marker: undo the newline on the line just emitted
            if prev_op in ("+", " ") and out and out[-1].endswith("\n"):
                out[-1] = out[-1][:-1]
            continue
        if line.startswith("-"):
            cursor += 1
        elif line.startswith("+"):
            out.append(line[1:])
        elif line.startswith(" "):
            out.append(original_lines[cursor])
            cursor += 1
        prev_op = line[0] if line else ""
    out.extend(original_lines[cursor:])
    return "".join(out)


def normalized_tokens(source: str) -> list[str]:
    return [
        tok.text
        for tok in tokenize(source)
        if tok.type not in (TokenType.COMMENT, TokenType.EOF)
    ]


def tokens_equal(a: str, b: str) -> bool:
    """Whitespace- and comment-insensitive equality of two source texts."""
    return normalized_tokens(a) == normalized_tokens(b)
