"""Exception hierarchy shared across the repair engine."""

from __future__ import annotations


class RepairError(Exception):
    """Base class for all errors raised by this package."""


# --- parsing / location ------------------------------------------------------


class UnsupportedLanguage(RepairError):
    def __init__(self, language: str):
        super().__init__(f"unsupported language: {language!r}")
        self.language = language


class UnreadableSource(RepairError):
    """Source bytes could not be decoded as UTF-8."""


class NoStatementAtLine(RepairError):
    def __init__(self, line: int, reason: str = "blank or comment-only line"):
        super().__init__(f"no statement at line {line}: {reason}")
        self.line = line


class NoEnclosingMethod(RepairError):
    def __init__(self, line: int):
        super().__init__(f"no enclosing method declaration covers line {line}")
        self.line = line


# --- templates ---------------------------------------------------------------


class NotApplicable(RepairError):
    """A template cannot be instantiated at the matched node."""


# --- mask filling ------------------------------------------------------------


class FillError(RepairError):
    """Base class for filler-backend failures. The pipeline records these per
    candidate and keeps going; they never abort a repair run."""


class EmptyPool(FillError):
    """No compatible donor tokens were found in the local file."""


class EndpointUnreachable(FillError):
    pass


class MalformedResponse(FillError):
    pass


class FillTimeout(FillError):
    pass


class UnparseableReply(FillError):
    """Chat reply did not contain an extractable prediction list."""


# --- validation / benchmark --------------------------------------------------


class WorkdirSetupFailed(RepairError):
    pass


class CommandTimeout(RepairError):
    """A build or test command exceeded its time allowance."""


class SchemaError(RepairError):
    """Manifest file violates the documented schema."""


class MissingPath(RepairError):
    def __init__(self, path: str, context: str = ""):
        detail = f" ({context})" if context else ""
        super().__init__(f"manifest references missing path: {path}{detail}")
        self.path = path
