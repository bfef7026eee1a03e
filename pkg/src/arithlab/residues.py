"""Residue case analysis modulo m.

The executable counterpart of the classic "study the possible
remainders" argument: tabulate the residues an expression can take
modulo ``m`` by plugging in each residue class 0..m-1, then reason by
image intersection.  For instance, squares take residues {0, 1, 2, 4}
mod 7 and cubes {0, 1, 6}, so a number that is both is 0 or 1 mod 7.

The argument is only sound for expressions that respect congruence:
``x ≡ y (mod m)`` must imply ``expr(x) ≡ expr(y) (mod m)``.  That holds
for the polynomial fragment — literals, the variable, ``+ - *`` and
``^`` with a constant natural exponent — and for nothing else, so
anything outside that fragment is rejected up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl.ast import BinOp, Lit, Neg, Term, Var, term_free_vars
from .dsl.evaluator import eval_term
from .dsl.printer import format_term
from .intops import floor_mod

__all__ = [
    "MODULUS_CAP",
    "ResidueExprError",
    "ResidueRow",
    "ResidueSet",
    "residue_row",
    "residue_image",
    "intersect",
    "render_table",
]

# A row materializes one value per residue class; past a million the
# table has stopped being a table.
MODULUS_CAP = 10**6


class ResidueExprError(ValueError):
    """Expression outside the congruence-preserving fragment."""

    def __init__(self, what: str, span):
        super().__init__(f"{span}: {what} not allowed in a residue expression")
        self.what = what
        self.span = span


@dataclass(frozen=True)
class ResidueRow:
    """Residues of ``expr`` at each residue class: ``values[r] = expr(r) mod m``."""

    modulus: int
    expr: Term
    values: tuple[int, ...]

    @property
    def label(self) -> str:
        return format_term(self.expr)


@dataclass(frozen=True)
class ResidueSet:
    """Ascending set of residues in ``0..modulus-1``."""

    modulus: int
    members: tuple[int, ...]


def check_residue_compatible(expr: Term, var: str) -> None:
    """Reject ``expr`` unless it is congruence-preserving in ``var``.

    Raises:
        ResidueExprError: naming the offending node and its span.
    """
    _check(expr, var, var_allowed=True)


def _check(t: Term, var: str, var_allowed: bool) -> None:
    if isinstance(t, Lit):
        return
    if isinstance(t, Var):
        if not var_allowed:
            raise ResidueExprError(f"variable '{t.name}' in an exponent", t.span)
        if t.name != var:
            raise ResidueExprError(f"variable '{t.name}'", t.span)
        return
    if isinstance(t, Neg):
        _check(t.operand, var, var_allowed)
        return
    if isinstance(t, BinOp):
        if t.op in ("+", "-", "*"):
            _check(t.left, var, var_allowed)
            _check(t.right, var, var_allowed)
            return
        if t.op == "^":
            _check(t.left, var, var_allowed)
            # The exponent must be a constant: n^x is not a polynomial.
            _check(t.right, var, var_allowed=False)
            return
        raise ResidueExprError(f"operator '{t.op}'", t.span)
    raise ResidueExprError(_describe(t), t.span)


def _describe(t: Term) -> str:
    kind = type(t).__name__
    if hasattr(t, "func"):
        return f"call to '{t.func}'"
    if kind == "SumTerm":
        return "sum"
    return kind.lower()


def _check_modulus(m: int) -> None:
    if m <= 1:
        raise ValueError(f"modulus must be greater than 1, got {m}")
    if m > MODULUS_CAP:
        raise ValueError(f"modulus {m} exceeds the table cap {MODULUS_CAP}")


def residue_row(expr: Term, var: str, m: int) -> ResidueRow:
    """The vector ``(expr(0) mod m, ..., expr(m-1) mod m)``.

    By congruence-preservation this covers *all* integers: plugging in
    any ``x`` lands on ``values[x mod m]``.

    Raises:
        ValueError: if ``m <= 1`` or ``m`` exceeds the cap.
        ResidueExprError: if ``expr`` is outside the polynomial fragment.
    """
    _check_modulus(m)
    check_residue_compatible(expr, var)
    values = tuple(floor_mod(eval_term(expr, {var: r}), m) for r in range(m))
    return ResidueRow(m, expr, values)


def residue_image(expr: Term, var: str, m: int) -> ResidueSet:
    """The set of residues ``expr`` attains modulo ``m``."""
    row = residue_row(expr, var, m)
    return ResidueSet(m, tuple(sorted(set(row.values))))


def intersect(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Set intersection of two residue sets over the same modulus.

    Raises:
        ValueError: on modulus mismatch.
    """
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    return ResidueSet(a.modulus, tuple(sorted(set(a.members) & set(b.members))))


def render_table(rows: list[ResidueRow] | tuple[ResidueRow, ...]) -> str:
    """Aligned text table: header 0..m-1, one line per expression.

    Raises:
        ValueError: if the rows do not share a modulus.
    """
    if not rows:
        return ""
    m = rows[0].modulus
    for row in rows:
        if row.modulus != m:
            raise ValueError(f"modulus mismatch: {row.modulus} vs {m}")
    label_width = max(len(row.label) for row in rows)
    cell_width = len(str(m - 1))
    header = " " * label_width + "  " + "  ".join(
        str(r).rjust(cell_width) for r in range(m)
    )
    lines = [header]
    for row in rows:
        cells = "  ".join(str(v).rjust(cell_width) for v in row.values)
        lines.append(row.label.ljust(label_width) + "  " + cells)
    return "\n".join(lines)
