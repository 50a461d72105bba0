"""Prompt context construction: commented buggy line + enclosing method."""

from __future__ import annotations

from ..errors import NoEnclosingMethod
from ..syntax import ParsedUnit, enclosing_method

#: lines kept above and below the buggy line when no method encloses it
FALLBACK_WINDOW = 10

#: method bodies longer than this are trimmed to the lines nearest the mask
MAX_CONTEXT_LINES = 100


def build_context(
    unit: ParsedUnit,
    buggy_line: int,
    masked_line: str,
    replace_range: tuple[int, int] | None = None,
) -> str:
    """Line 1 is the original buggy line as a comment; the rest is the
    enclosing method with the buggy line(s) swapped for ``masked_line``.

    ``replace_range`` widens the swapped region for edits that cover more
    than the buggy line itself (wraps of multi-line statements); an empty
    range (f, f-1) splices ``masked_line`` in front of line f. Falls back to
    a fixed window of surrounding lines when no method encloses the line.
    """
    if replace_range is None:
        replace_range = (buggy_line, buggy_line)
    original = unit.line_text(buggy_line).strip()
    comment = f"// {original}"

    try:
        method = enclosing_method(unit, buggy_line)
        first = unit.position_at(method.span.byte_start).line
        last = unit.position_at(max(method.span.byte_start, method.span.byte_end - 1)).line
    except NoEnclosingMethod:
        first = max(1, buggy_line - FALLBACK_WINDOW)
        last = min(unit.line_count, buggy_line + FALLBACK_WINDOW)

    is_insertion = replace_range[1] < replace_range[0]
    body_lines: list[str] = []
    mask_at = 0
    replaced = False
    for line in range(first, last + 1):
        if not is_insertion and replace_range[0] <= line <= replace_range[1]:
            if not replaced:
                mask_at = len(body_lines)
                body_lines.extend(masked_line.split("\n"))
                replaced = True
            continue
        if is_insertion and line == replace_range[0] and not replaced:
            mask_at = len(body_lines)
            body_lines.extend(masked_line.split("\n"))
            replaced = True
        body_lines.append(unit.line_text(line))
    if not replaced:
        mask_at = len(body_lines)
        body_lines.extend(masked_line.split("\n"))

    if len(body_lines) > MAX_CONTEXT_LINES:
        half = MAX_CONTEXT_LINES // 2
        lo = max(0, mask_at - half)
        hi = min(len(body_lines), lo + MAX_CONTEXT_LINES)
        lo = max(0, hi - MAX_CONTEXT_LINES)
        body_lines = body_lines[lo:hi]

    return "\n".join([comment] + body_lines)
