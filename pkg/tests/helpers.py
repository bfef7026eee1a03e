"""Shared test utilities: a seeded random formula generator and small
independent oracles."""

from __future__ import annotations

import random

from arithlab.dsl.ast import (
    And,
    BinOp,
    Call,
    Compare,
    Congruent,
    Divides,
    Exists,
    Forall,
    Iff,
    Implies,
    Lit,
    Neg,
    Not,
    Or,
    SumTerm,
    Var,
)

_VARS = ["a", "b", "c", "n", "k", "m"]
_TERM_OPS = ["+", "-", "*", "div", "mod", "^"]
_CMP_OPS = ["=", "<>", "<", "<=", ">", ">="]


def random_term(rng: random.Random, depth: int):
    """A random well-formed term; free variables come from a fixed pool."""
    if depth <= 0:
        if rng.random() < 0.5:
            return Lit(rng.randrange(0, 50))
        return Var(rng.choice(_VARS))
    pick = rng.random()
    if pick < 0.45:
        op = rng.choice(_TERM_OPS)
        return BinOp(op, random_term(rng, depth - 1), random_term(rng, depth - 1))
    if pick < 0.55:
        return Neg(random_term(rng, depth - 1))
    if pick < 0.70:
        func = rng.choice(["gcd", "isqrt", "abs", "fact", "binom"])
        arity = 2 if func in ("gcd", "binom") else 1
        args = tuple(random_term(rng, depth - 1) for _ in range(arity))
        return Call(func, args)
    if pick < 0.80:
        return SumTerm(
            rng.choice(_VARS),
            random_term(rng, depth - 1),
            random_term(rng, depth - 1),
            random_term(rng, depth - 1),
        )
    return random_term(rng, 0)


def random_formula(rng: random.Random, depth: int):
    """A random well-formed formula exercising every connective."""
    if depth <= 0:
        pick = rng.random()
        left = random_term(rng, 1)
        right = random_term(rng, 1)
        if pick < 0.5:
            return Compare(left, rng.choice(_CMP_OPS), right)
        if pick < 0.75:
            return Divides(left, right)
        return Congruent(left, right, random_term(rng, 0))
    pick = rng.random()
    if pick < 0.15:
        return Not(random_formula(rng, depth - 1))
    if pick < 0.65:
        cls = rng.choice([And, Or, Implies, Iff])
        return cls(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    if pick < 0.85:
        cls = rng.choice([Forall, Exists])
        return cls(
            rng.choice(_VARS),
            random_term(rng, 1),
            random_term(rng, 1),
            random_formula(rng, depth - 1),
        )
    return random_formula(rng, 0)


def formula_corpus(count: int, seed: int = 20240):
    """A deterministic corpus of random formulas of mixed depth."""
    rng = random.Random(seed)
    return [random_formula(rng, rng.randrange(0, 4)) for _ in range(count)]
