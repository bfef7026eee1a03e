"""AST for the quantified arithmetic-statement language.

Terms denote integers, formulas denote booleans.  Every node carries a
source span (``compare=False``, so node equality is purely structural,
which is what the parse/print round-trip laws compare).  Nodes built in
code rather than by the parser get the synthetic zero span.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Span",
    "SYNTHETIC",
    "Term",
    "Lit",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "SumTerm",
    "Formula",
    "Compare",
    "Divides",
    "Congruent",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Forall",
    "Exists",
    "term_free_vars",
    "formula_free_vars",
    "free_variables",
]


@dataclass(frozen=True)
class Span:
    """Source extent; ``line``/``col`` are 1-based, (0, 0) means synthetic."""

    line: int
    col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


SYNTHETIC = Span(0, 0, 0, 0)


def _span_field() -> Span:
    return field(default=SYNTHETIC, compare=False, repr=False)  # type: ignore[return-value]


class Term:
    """Base class for term nodes."""

    __slots__ = ()


class Formula:
    """Base class for formula nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Lit(Term):
    value: int
    span: Span = _span_field()


@dataclass(frozen=True)
class Var(Term):
    name: str
    span: Span = _span_field()


@dataclass(frozen=True)
class Neg(Term):
    operand: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class BinOp(Term):
    """Binary operator: one of ``+ - * div mod ^``."""

    op: str
    left: Term
    right: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Call(Term):
    """Builtin application: gcd/2, isqrt/1, abs/1, fact/1, binom/2."""

    func: str
    args: tuple[Term, ...]
    span: Span = _span_field()


@dataclass(frozen=True)
class SumTerm(Term):
    """``sum(var, lo, hi, body)``: body summed for var from lo to hi,
    0 when lo > hi.  Binds ``var`` in ``body`` only."""

    var: str
    lo: Term
    hi: Term
    body: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Compare(Formula):
    """Comparison atom: op is one of ``= <> < <= > >=``."""

    left: Term
    op: str
    right: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Divides(Formula):
    """``divisor | dividend``."""

    divisor: Term
    dividend: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Congruent(Formula):
    """``left = right [modulus]``: congruence modulo a term."""

    left: Term
    right: Term
    modulus: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Not(Formula):
    body: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class Forall(Formula):
    """``forall var in [lo..hi], body``; binds ``var`` in ``body`` only
    (the bounds see the enclosing scope)."""

    var: str
    lo: Term
    hi: Term
    body: Formula
    span: Span = _span_field()


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    lo: Term
    hi: Term
    body: Formula
    span: Span = _span_field()


def _term_vars(t: Term, bound: frozenset[str], out: list[str]) -> None:
    if isinstance(t, Var):
        if t.name not in bound and t.name not in out:
            out.append(t.name)
    elif isinstance(t, Neg):
        _term_vars(t.operand, bound, out)
    elif isinstance(t, BinOp):
        _term_vars(t.left, bound, out)
        _term_vars(t.right, bound, out)
    elif isinstance(t, Call):
        for a in t.args:
            _term_vars(a, bound, out)
    elif isinstance(t, SumTerm):
        _term_vars(t.lo, bound, out)
        _term_vars(t.hi, bound, out)
        _term_vars(t.body, bound | {t.var}, out)


def _formula_vars(f: Formula, bound: frozenset[str], out: list[str]) -> None:
    if isinstance(f, Compare):
        _term_vars(f.left, bound, out)
        _term_vars(f.right, bound, out)
    elif isinstance(f, Divides):
        _term_vars(f.divisor, bound, out)
        _term_vars(f.dividend, bound, out)
    elif isinstance(f, Congruent):
        _term_vars(f.left, bound, out)
        _term_vars(f.right, bound, out)
        _term_vars(f.modulus, bound, out)
    elif isinstance(f, Not):
        _formula_vars(f.body, bound, out)
    elif isinstance(f, (And, Or, Implies, Iff)):
        _formula_vars(f.left, bound, out)
        _formula_vars(f.right, bound, out)
    elif isinstance(f, (Forall, Exists)):
        _term_vars(f.lo, bound, out)
        _term_vars(f.hi, bound, out)
        _formula_vars(f.body, bound | {f.var}, out)


def term_free_vars(t: Term) -> set[str]:
    """Free variables of a term."""
    out: list[str] = []
    _term_vars(t, frozenset(), out)
    return set(out)


def formula_free_vars(f: Formula) -> set[str]:
    """Free variables of a formula."""
    return set(free_variables(f))


def free_variables(f: Formula) -> list[str]:
    """Free variables of a formula, in order of first free occurrence."""
    out: list[str] = []
    _formula_vars(f, frozenset(), out)
    return out
