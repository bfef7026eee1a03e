"""Pretty-printer for statement ASTs.

Emits the minimal parentheses the grammar needs: re-parsing the output
of ``format_formula``/``format_term`` yields a structurally identical
AST.  Quantifiers are treated as binding loosest of all (their body
runs to the end of the formula), so they are parenthesized whenever
they occur as an operand of a connective.

Hand-built ASTs round-trip too, with one caveat: a negative ``Lit``
prints like a negation and re-parses as ``Neg`` of the positive
literal (the lexer has no negative integer literals).
"""

from __future__ import annotations

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
    SumTerm,
    Term,
    Var,
)

__all__ = ["format_term", "format_formula"]

# Term binding levels, loosest to tightest.
_ADD, _MUL, _UNARY, _POW, _PRIMARY = 1, 2, 3, 4, 5

# Formula binding levels; quantifiers swallow everything to their right.
_QUANT, _IFF, _IMPL, _OR, _AND, _NOT, _ATOM = 0, 1, 2, 3, 4, 5, 6


def _term_level(t: Term) -> int:
    if isinstance(t, Lit):
        return _PRIMARY if t.value >= 0 else _UNARY
    if isinstance(t, (Var, Call, SumTerm)):
        return _PRIMARY
    if isinstance(t, Neg):
        return _UNARY
    assert isinstance(t, BinOp)
    if t.op == "^":
        return _POW
    if t.op in ("*", "div", "mod"):
        return _MUL
    return _ADD


def _term(t: Term, min_level: int) -> str:
    text = _term_bare(t)
    if _term_level(t) < min_level:
        return f"({text})"
    return text


def _term_bare(t: Term) -> str:
    if isinstance(t, Lit):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Neg):
        return "-" + _term(t.operand, _UNARY)
    if isinstance(t, Call):
        return f"{t.func}({', '.join(_term(a, _ADD) for a in t.args)})"
    if isinstance(t, SumTerm):
        parts = (_term(t.lo, _ADD), _term(t.hi, _ADD), _term(t.body, _ADD))
        return f"sum({t.var}, {', '.join(parts)})"
    assert isinstance(t, BinOp)
    if t.op == "^":
        return f"{_term(t.left, _PRIMARY)}^{_term(t.right, _UNARY)}"
    if t.op == "*":
        return f"{_term(t.left, _MUL)}*{_term(t.right, _UNARY)}"
    if t.op in ("div", "mod"):
        return f"{_term(t.left, _MUL)} {t.op} {_term(t.right, _UNARY)}"
    return f"{_term(t.left, _ADD)} {t.op} {_term(t.right, _MUL)}"


def _formula_level(f: Formula) -> int:
    if isinstance(f, (Forall, Exists)):
        return _QUANT
    if isinstance(f, Iff):
        return _IFF
    if isinstance(f, Implies):
        return _IMPL
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    if isinstance(f, Not):
        return _NOT
    return _ATOM


def _formula(f: Formula, min_level: int) -> str:
    text = _formula_bare(f)
    if _formula_level(f) < min_level:
        return f"({text})"
    return text


def _formula_bare(f: Formula) -> str:
    if isinstance(f, Compare):
        return f"{_term(f.left, _ADD)} {f.op} {_term(f.right, _ADD)}"
    if isinstance(f, Congruent):
        left, right = _term(f.left, _ADD), _term(f.right, _ADD)
        return f"{left} = {right} [{_term(f.modulus, _ADD)}]"
    if isinstance(f, Divides):
        return f"{_term(f.divisor, _ADD)} | {_term(f.dividend, _ADD)}"
    if isinstance(f, Not):
        return "~" + _formula(f.body, _NOT)
    if isinstance(f, And):
        return f"{_formula(f.left, _AND)} /\\ {_formula(f.right, _NOT)}"
    if isinstance(f, Or):
        return f"{_formula(f.left, _OR)} \\/ {_formula(f.right, _AND)}"
    if isinstance(f, Implies):
        return f"{_formula(f.left, _OR)} -> {_formula(f.right, _IMPL)}"
    if isinstance(f, Iff):
        return f"{_formula(f.left, _IFF)} <-> {_formula(f.right, _IMPL)}"
    assert isinstance(f, (Forall, Exists))
    word = "forall" if isinstance(f, Forall) else "exists"
    lo, hi = _term(f.lo, _ADD), _term(f.hi, _ADD)
    return f"{word} {f.var} in [{lo}..{hi}], {_formula(f.body, _QUANT)}"


def format_term(t: Term) -> str:
    """Concrete syntax for a term."""
    return _term(t, _ADD)


def format_formula(f: Formula) -> str:
    """Concrete syntax for a formula."""
    return _formula(f, _QUANT)
