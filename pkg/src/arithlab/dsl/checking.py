"""Bounded checking: exhaustive verification on finite domains.

A formula is never just "verified": it is verified *on a domain*.  Free
variables are bound to a caller-supplied default interval (in order of
first occurrence), the leading universal quantifiers are peeled off,
and every assignment of the resulting prefix is tried in lexicographic
order.  The outcome is either verified-on-domain, or refuted together
with the first counterexample — which is re-evaluated from scratch
before being reported, so every refutation is self-certifying.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..divisibility import find_all
from .ast import Forall, Formula, Lit, Term, free_variables, term_free_vars
from .errors import EvalError
from .evaluator import eval_formula, eval_term, pinned_equality
from .printer import format_term

__all__ = ["Verdict", "DomainBinding", "CheckResult", "bounded_check", "find_all_dsl"]


class Verdict(enum.Enum):
    VERIFIED_ON_DOMAIN = "verified"
    REFUTED = "refuted"


@dataclass(frozen=True)
class DomainBinding:
    """One searched variable with its bounds (concrete syntax; explicit
    quantifier bounds may mention earlier variables)."""

    var: str
    lo: str
    hi: str

    def __str__(self) -> str:
        return f"{self.var} in [{self.lo}..{self.hi}]"


@dataclass(frozen=True)
class CheckResult:
    verdict: Verdict
    domain: tuple[DomainBinding, ...]
    counterexample: dict[str, int] | None
    assignments: int

    @property
    def refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED

    def describe_domain(self) -> str:
        if not self.domain:
            return "(closed formula)"
        return ", ".join(str(b) for b in self.domain)


@dataclass(frozen=True)
class _Level:
    var: str
    lo: Term
    hi: Term
    under: Formula | None  # subformula right beneath this binder


def _build_prefix(
    formula: Formula, default: tuple[int, int]
) -> tuple[list[_Level], Formula]:
    """Implicit binders for free variables, then leading universals."""
    lo, hi = default
    levels: list[_Level] = []
    free = free_variables(formula)
    for i, var in enumerate(free):
        under = formula if i == len(free) - 1 else None
        levels.append(_Level(var, Lit(lo), Lit(hi), under))
    matrix = formula
    seen = set(free)
    while isinstance(matrix, Forall) and matrix.var not in seen:
        levels.append(_Level(matrix.var, matrix.lo, matrix.hi, matrix.body))
        seen.add(matrix.var)
        matrix = matrix.body
    return levels, matrix


class _Search:
    def __init__(self, levels: list[_Level], matrix: Formula):
        self.levels = levels
        self.matrix = matrix
        self.assignments = 0

    def run(self, env: dict[str, int], depth: int) -> dict[str, int] | None:
        """First counterexample below ``depth``, in lexicographic order."""
        if depth == len(self.levels):
            self.assignments += 1
            if eval_formula(self.matrix, env):
                return None
            return {level.var: env[level.var] for level in self.levels}
        level = self.levels[depth]
        lo = eval_term(level.lo, env)
        hi = eval_term(level.hi, env)
        if lo > hi:
            return None
        if level.under is not None:
            pin = pinned_equality(level.under, level.var)
            if pin is not None and term_free_vars(pin) <= env.keys():
                candidate = eval_term(pin, env)
                if not lo <= candidate <= hi:
                    return None
                env[level.var] = candidate
                try:
                    return self.run(env, depth + 1)
                finally:
                    del env[level.var]
        try:
            for v in range(lo, hi + 1):
                env[level.var] = v
                found = self.run(env, depth + 1)
                if found is not None:
                    return found
        finally:
            env.pop(level.var, None)
        return None


def bounded_check(
    formula: Formula, default_interval: tuple[int, int] = (-100, 100)
) -> CheckResult:
    """Exhaustively check ``formula`` on its finite domain.

    Free variables are universally bound to ``default_interval`` in
    order of first occurrence; leading ``forall`` binders are searched
    for counterexamples as well.  Evaluation errors (negative factorial
    and the like) propagate — they are not counterexamples.

    Raises:
        ValueError: if the default interval is empty.
        EvalError: on evaluation errors in bounds or body.
    """
    lo, hi = default_interval
    if lo > hi:
        raise ValueError(f"empty default interval: [{lo}..{hi}]")
    levels, matrix = _build_prefix(formula, default_interval)
    domain = tuple(
        DomainBinding(lv.var, format_term(lv.lo), format_term(lv.hi)) for lv in levels
    )
    search = _Search(levels, matrix)
    counterexample = search.run({}, 0)
    if counterexample is None:
        return CheckResult(
            Verdict.VERIFIED_ON_DOMAIN, domain, None, search.assignments
        )
    # Self-certification: a refutation must re-evaluate to false from a
    # fresh evaluator before it is reported.
    if eval_formula(matrix, counterexample):
        raise AssertionError(
            f"counterexample {counterexample} did not re-evaluate to false"
        )
    return CheckResult(Verdict.REFUTED, domain, counterexample, search.assignments)


def find_all_dsl(formula: Formula, lo: int, hi: int) -> list[int]:
    """All values of the single free variable in ``[lo, hi]`` satisfying
    ``formula``, ascending.

    Raises:
        ValueError: if the formula does not have exactly one free
            variable, or ``lo > hi``.
        EvalError: on evaluation errors.
    """
    free = free_variables(formula)
    if len(free) != 1:
        names = ", ".join(free) if free else "none"
        raise ValueError(f"need exactly one free variable, got: {names}")
    var = free[0]
    return find_all(lambda x: eval_formula(formula, {var: x}), lo, hi)
