"""Worksheet files: named statements checked in sequence.

Format (UTF-8, line-oriented; ``#`` starts a comment anywhere):

    # divisibility drill
    exercise six_divides : forall n in [-300..300], 6 | n <-> (2 | n /\\ 3 | n)
    exercise bridge in [-50..50] : m <> 0 -> (m | a <-> a mod m = 0)

The optional ``in [LO..HI]`` clause overrides the default interval used
to bind the statement's free variables.  A formula that fails to parse
becomes a per-exercise error entry; the other exercises still run.
Lines that are not even ``exercise NAME ... : ...`` shaped, and
duplicate exercise names, are file-level errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import Formula
from .checking import CheckResult, bounded_check
from .errors import DslError, ParseError, WorksheetError
from .parser import parse_formula

__all__ = ["Exercise", "Worksheet", "ExerciseOutcome", "parse_worksheet", "run_worksheet"]

_LINE = re.compile(
    r"""^exercise\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*
        (?:in\s*\[\s*(?P<lo>-?\d+)\s*\.\.\s*(?P<hi>-?\d+)\s*\]\s*)?
        :\s*(?P<formula>.*)$""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class Exercise:
    name: str
    source: str
    formula: Formula | None
    parse_error: ParseError | None
    interval: tuple[int, int] | None  # default-domain override


@dataclass(frozen=True)
class Worksheet:
    exercises: tuple[Exercise, ...]


@dataclass(frozen=True)
class ExerciseOutcome:
    name: str
    result: CheckResult | None
    error: str | None
    error_kind: str | None = None  # "parse" | "eval"

    @property
    def kind(self) -> str:
        if self.error is not None:
            return "error"
        assert self.result is not None
        return self.result.verdict.value


def parse_worksheet(text: str) -> Worksheet:
    """Parse worksheet text.

    Raises:
        WorksheetError: on malformed lines or duplicate names.
    """
    exercises: list[Exercise] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LINE.match(line)
        if match is None:
            raise WorksheetError(
                "expected 'exercise NAME [in [LO..HI]] : FORMULA'", lineno
            )
        name = match.group("name")
        if name in names:
            raise WorksheetError(f"duplicate exercise name '{name}'", lineno)
        names.add(name)
        interval = None
        if match.group("lo") is not None:
            interval = (int(match.group("lo")), int(match.group("hi")))
        source = match.group("formula").strip()
        formula: Formula | None = None
        parse_error: ParseError | None = None
        if not source:
            parse_error = ParseError("empty formula", 1, 1)
        else:
            try:
                formula = parse_formula(source)
            except ParseError as err:
                parse_error = err
        exercises.append(Exercise(name, source, formula, parse_error, interval))
    return Worksheet(tuple(exercises))


def run_worksheet(
    ws: Worksheet, default_interval: tuple[int, int] = (-100, 100)
) -> list[ExerciseOutcome]:
    """Check every exercise, in file order.

    Parse and evaluation errors are reported per exercise and do not
    stop the run.
    """
    outcomes: list[ExerciseOutcome] = []
    for ex in ws.exercises:
        if ex.parse_error is not None:
            outcomes.append(
                ExerciseOutcome(
                    ex.name, None, f"parse error: {ex.parse_error}", "parse"
                )
            )
            continue
        assert ex.formula is not None
        interval = ex.interval if ex.interval is not None else default_interval
        try:
            result = bounded_check(ex.formula, interval)
        except (DslError, ValueError) as err:
            outcomes.append(ExerciseOutcome(ex.name, None, str(err), "eval"))
            continue
        outcomes.append(ExerciseOutcome(ex.name, result, None))
    return outcomes
