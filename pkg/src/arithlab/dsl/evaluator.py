"""Exact evaluation of terms and formulas.

Semantics follow the library conventions: floor division with
``a div 0 = 0`` and ``a mod 0 = a``, natural exponents, and quantifiers
ranging over explicit integer intervals (empty interval: ``forall`` is
true, ``exists`` false).

Domain violations (unbound variable, negative exponent, negative
argument to fact/binom/isqrt) raise :class:`EvalError` carrying the
offending node's span; they are errors, not ``false``.

Two evaluation shortcuts are used, both observationally equivalent to
the naive recursion (including which errors surface, in which order):

* ``(x ^ e) mod m`` is computed by square-and-multiply instead of
  materializing ``x ^ e``, whenever ``m != 0``;
* ``forall v in [lo..hi], (v = t /\\ ...) -> ...`` where the pinning
  equality is the antecedent's leftmost conjunct and ``t`` does not
  mention ``v`` only needs the single candidate ``v = t`` — every other
  value satisfies the implication vacuously.  This mirrors how such
  statements are proved on paper and is what makes exhaustive checking
  of statements like "a square that is also a cube is 0 or 1 mod 7"
  affordable.
"""

from __future__ import annotations

from typing import Mapping

from .. import combinatorics
from ..intops import floor_div, floor_mod, isqrt, pow_nat
from ..divisibility import gcd
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
    term_free_vars,
)
from .errors import EvalError

__all__ = ["eval_term", "eval_formula", "pinned_equality"]

_MISSING = object()


def pinned_equality(body: Formula, var: str) -> Term | None:
    """The term ``t`` when ``body`` is ``(var = t /\\ ...) -> ...`` (or
    ``(t = var /\\ ...) -> ...``) with ``t`` free of ``var``, else None.

    Only the *leftmost* conjunct of the antecedent qualifies: that is
    the first subformula naive evaluation touches, which keeps the
    shortcut error-for-error equivalent to full enumeration.
    """
    if not isinstance(body, Implies):
        return None
    head = body.left
    while isinstance(head, And):
        head = head.left
    if not (isinstance(head, Compare) and head.op == "="):
        return None
    for side, other in ((head.left, head.right), (head.right, head.left)):
        if isinstance(side, Var) and side.name == var:
            if var not in term_free_vars(other):
                return other
    return None


class _Evaluator:
    def __init__(self, env: Mapping[str, int] | None):
        self.env: dict[str, int] = dict(env or {})

    # -- terms ----------------------------------------------------------

    def term(self, t: Term) -> int:
        if isinstance(t, Lit):
            return t.value
        if isinstance(t, Var):
            value = self.env.get(t.name, _MISSING)
            if value is _MISSING:
                raise EvalError(f"unbound variable '{t.name}'", t.span)
            return value  # type: ignore[return-value]
        if isinstance(t, Neg):
            return -self.term(t.operand)
        if isinstance(t, BinOp):
            return self._binop(t)
        if isinstance(t, Call):
            return self._call(t)
        assert isinstance(t, SumTerm)
        lo = self.term(t.lo)
        hi = self.term(t.hi)
        if lo > hi:
            return 0
        total = 0
        saved = self.env.get(t.var, _MISSING)
        try:
            for v in range(lo, hi + 1):
                self.env[t.var] = v
                total += self.term(t.body)
        finally:
            self._restore(t.var, saved)
        return total

    def _binop(self, t: BinOp) -> int:
        if t.op == "mod" and isinstance(t.left, BinOp) and t.left.op == "^":
            # (x ^ e) mod m by square-and-multiply; same errors, same
            # evaluation order as the naive route.
            base = self.term(t.left.left)
            exponent = self.term(t.left.right)
            if exponent < 0:
                raise EvalError(
                    f"exponent must be nonnegative, got {exponent}",
                    t.left.right.span,
                )
            modulus = self.term(t.right)
            if modulus == 0:
                return pow_nat(base, exponent)
            return pow(base, exponent, modulus)
        left = self.term(t.left)
        if t.op == "^":
            exponent = self.term(t.right)
            if exponent < 0:
                raise EvalError(
                    f"exponent must be nonnegative, got {exponent}", t.right.span
                )
            return left**exponent
        right = self.term(t.right)
        if t.op == "+":
            return left + right
        if t.op == "-":
            return left - right
        if t.op == "*":
            return left * right
        if t.op == "div":
            return floor_div(left, right)
        assert t.op == "mod"
        return floor_mod(left, right)

    def _call(self, t: Call) -> int:
        args = [self.term(a) for a in t.args]
        if t.func == "abs":
            return abs(args[0])
        if t.func == "gcd":
            return gcd(args[0], args[1])
        if t.func == "isqrt":
            if args[0] < 0:
                raise EvalError(f"isqrt of negative number {args[0]}", t.span)
            return isqrt(args[0])
        if t.func == "fact":
            if args[0] < 0:
                raise EvalError(f"fact of negative number {args[0]}", t.span)
            return combinatorics.fact(args[0])
        assert t.func == "binom"
        if args[0] < 0 or args[1] < 0:
            raise EvalError(
                f"binom arguments must be nonnegative, got ({args[0]}, {args[1]})",
                t.span,
            )
        return combinatorics.binom(args[0], args[1])

    # -- formulas -------------------------------------------------------

    def formula(self, f: Formula) -> bool:
        if isinstance(f, Compare):
            left, right = self.term(f.left), self.term(f.right)
            return _COMPARE[f.op](left, right)
        if isinstance(f, Divides):
            divisor, dividend = self.term(f.divisor), self.term(f.dividend)
            return floor_mod(dividend, divisor) == 0
        if isinstance(f, Congruent):
            left, right = self.term(f.left), self.term(f.right)
            modulus = self.term(f.modulus)
            return floor_mod(left - right, modulus) == 0
        if isinstance(f, Not):
            return not self.formula(f.body)
        if isinstance(f, And):
            return self.formula(f.left) and self.formula(f.right)
        if isinstance(f, Or):
            return self.formula(f.left) or self.formula(f.right)
        if isinstance(f, Implies):
            return (not self.formula(f.left)) or self.formula(f.right)
        if isinstance(f, Iff):
            return self.formula(f.left) == self.formula(f.right)
        assert isinstance(f, (Forall, Exists))
        return self._quant(f)

    def _quant(self, f: Forall | Exists) -> bool:
        lo = self.term(f.lo)
        hi = self.term(f.hi)
        if lo > hi:
            return isinstance(f, Forall)
        saved = self.env.get(f.var, _MISSING)
        try:
            if isinstance(f, Forall):
                pin = pinned_equality(f.body, f.var)
                if pin is not None:
                    candidate = self.term(pin)
                    if not lo <= candidate <= hi:
                        return True
                    self.env[f.var] = candidate
                    return self.formula(f.body)
                for v in range(lo, hi + 1):
                    self.env[f.var] = v
                    if not self.formula(f.body):
                        return False
                return True
            for v in range(lo, hi + 1):
                self.env[f.var] = v
                if self.formula(f.body):
                    return True
            return False
        finally:
            self._restore(f.var, saved)

    def _restore(self, var: str, saved) -> None:
        if saved is _MISSING:
            self.env.pop(var, None)
        else:
            self.env[var] = saved


_COMPARE = {
    "=": lambda a, b: a == b,
    "<>": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def eval_term(t: Term, env: Mapping[str, int] | None = None) -> int:
    """Value of ``t`` with free variables bound by ``env``."""
    return _Evaluator(env).term(t)


def eval_formula(f: Formula, env: Mapping[str, int] | None = None) -> bool:
    """Truth value of ``f`` with free variables bound by ``env``."""
    return _Evaluator(env).formula(f)
