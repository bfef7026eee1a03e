"""Errors raised by the statement language."""

from __future__ import annotations

__all__ = ["DslError", "ParseError", "EvalError", "WorksheetError"]


class DslError(Exception):
    """Base class for statement-language errors."""


class ParseError(DslError):
    """Lexical or syntactic error, located at line:col (1-based)."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class EvalError(DslError):
    """Evaluation-time domain error (unbound variable, negative factorial,
    negative exponent, ...), located at the offending node's span."""

    def __init__(self, message: str, span):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


class WorksheetError(DslError):
    """Structural worksheet-file error (malformed line, duplicate name)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line
