"""Quantified arithmetic-statement language: parse, print, evaluate,
and check on bounded domains."""

from .ast import (
    And,
    BinOp,
    Call,
    Compare,
    Congruent,
    Divides,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Lit,
    Neg,
    Not,
    Or,
    Span,
    SumTerm,
    Term,
    Var,
    formula_free_vars,
    free_variables,
    term_free_vars,
)
from .checking import (
    CheckResult,
    DomainBinding,
    Verdict,
    bounded_check,
    find_all_dsl,
)
from .errors import DslError, EvalError, ParseError, WorksheetError
from .evaluator import eval_formula, eval_term
from .parser import parse_formula, parse_term
from .printer import format_formula, format_term
from .worksheet import (
    Exercise,
    ExerciseOutcome,
    Worksheet,
    parse_worksheet,
    run_worksheet,
)

__all__ = [
    "And",
    "BinOp",
    "Call",
    "Compare",
    "Congruent",
    "Divides",
    "Exists",
    "Forall",
    "Formula",
    "Iff",
    "Implies",
    "Lit",
    "Neg",
    "Not",
    "Or",
    "Span",
    "SumTerm",
    "Term",
    "Var",
    "formula_free_vars",
    "free_variables",
    "term_free_vars",
    "CheckResult",
    "DomainBinding",
    "Verdict",
    "bounded_check",
    "find_all_dsl",
    "DslError",
    "EvalError",
    "ParseError",
    "WorksheetError",
    "eval_formula",
    "eval_term",
    "parse_formula",
    "parse_term",
    "format_formula",
    "format_term",
    "Exercise",
    "ExerciseOutcome",
    "Worksheet",
    "parse_worksheet",
    "run_worksheet",
]
