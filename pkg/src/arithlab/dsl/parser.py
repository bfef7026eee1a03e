"""Recursive-descent parser for the statement language.

Grammar (formulas bind looser than terms; ``|``, the divisibility
atom, binds looser than every term operator and is non-associative):

    formula  := impl { "<->" impl }
    impl     := disj [ "->" impl ]                  right-assoc
    disj     := conj { "\\/" conj | "or" conj }
    conj     := neg  { "/\\" neg  | "and" neg }
    neg      := "~" neg | "not" neg | quant | atom
    quant    := ("forall" | "exists") ident "in" "[" term ".." term "]" "," formula
    atom     := "(" formula ")"
              | term ( "=" term [ "[" term "]" ]    congruence when [m] present
                     | "<>" | "<=" | "<" | ">=" | ">" term
                     | "|" term )
    term     := muldiv { ("+" | "-") muldiv }
    muldiv   := unary  { ("*" | "div" | "mod") unary }
    unary    := "-" unary | power
    power    := primary [ "^" unary ]               right-assoc
    primary  := integer | ident | ident "(" term { "," term } ")"
              | "sum" "(" ident "," term "," term "," term ")" | "(" term ")"

The only ambiguity is ``(``, which may open a formula or a term; the
parser tries the formula reading and backtracks.  Error messages
report the deepest position any attempt reached.
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
    Span,
    SumTerm,
    Term,
    Var,
)
from .errors import ParseError
from .lexer import Token, tokenize

__all__ = ["parse_term", "parse_formula", "BUILTIN_ARITY"]

BUILTIN_ARITY = {"gcd": 2, "isqrt": 1, "abs": 1, "fact": 1, "binom": 2}

_COMPARISONS = ("<>", "<=", ">=", "<", ">")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.deepest: ParseError | None = None

    # -- token plumbing -------------------------------------------------

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_sym(self, *texts: str) -> bool:
        return self.cur.kind == "sym" and self.cur.text in texts

    def at_kw(self, *words: str) -> bool:
        return self.cur.kind == "kw" and self.cur.text in words

    def _error_at(self, tok: Token, message: str) -> ParseError:
        err = ParseError(message, tok.line, tok.col)
        if self.deepest is None or (tok.line, tok.col) > (
            self.deepest.line,
            self.deepest.col,
        ):
            self.deepest = err
        return err

    def fail(self, message: str) -> ParseError:
        tok = self.cur
        found = f"'{tok.text}'" if tok.kind != "eof" else "end of input"
        raise self._error_at(tok, f"{message}, found {found}")

    def expect_sym(self, text: str) -> Token:
        if not self.at_sym(text):
            self.fail(f"expected '{text}'")
        return self.advance()

    def expect_kw(self, word: str) -> Token:
        if not self.at_kw(word):
            self.fail(f"expected '{word}'")
        return self.advance()

    def expect_ident(self) -> Token:
        if self.cur.kind != "ident":
            self.fail("expected a variable name")
        return self.advance()

    def expect_eof(self) -> None:
        if self.cur.kind != "eof":
            self.fail("expected end of input")

    def _span(self, start: Token) -> Span:
        prev = self.toks[self.i - 1]
        return Span(start.line, start.col, prev.line, prev.end_col)

    # -- formulas -------------------------------------------------------

    def formula(self) -> Formula:
        start = self.cur
        left = self.impl()
        while self.at_sym("<->"):
            self.advance()
            right = self.impl()
            left = Iff(left, right, self._span(start))
        return left

    def impl(self) -> Formula:
        start = self.cur
        left = self.disj()
        if self.at_sym("->"):
            self.advance()
            right = self.impl()
            return Implies(left, right, self._span(start))
        return left

    def disj(self) -> Formula:
        start = self.cur
        left = self.conj()
        while self.at_sym("\\/") or self.at_kw("or"):
            self.advance()
            right = self.conj()
            left = Or(left, right, self._span(start))
        return left

    def conj(self) -> Formula:
        start = self.cur
        left = self.neg()
        while self.at_sym("/\\") or self.at_kw("and"):
            self.advance()
            right = self.neg()
            left = And(left, right, self._span(start))
        return left

    def neg(self) -> Formula:
        start = self.cur
        if self.at_sym("~") or self.at_kw("not"):
            self.advance()
            return Not(self.neg(), self._span(start))
        if self.at_kw("forall", "exists"):
            return self.quant()
        return self.atom()

    def quant(self) -> Formula:
        start = self.cur
        word = self.advance().text
        name = self.expect_ident()
        self.expect_kw("in")
        self.expect_sym("[")
        lo = self.term()
        self.expect_sym("..")
        hi = self.term()
        self.expect_sym("]")
        self.expect_sym(",")
        body = self.formula()
        cls = Forall if word == "forall" else Exists
        return cls(name.text, lo, hi, body, self._span(start))

    def atom(self) -> Formula:
        start = self.cur
        if self.at_sym("("):
            # Could be a parenthesized formula or a parenthesized term;
            # try the formula reading first and backtrack on failure.
            save = self.i
            self.advance()
            try:
                f = self.formula()
                self.expect_sym(")")
                return f
            except ParseError:
                self.i = save
        left = self.term()
        if self.at_sym("="):
            self.advance()
            right = self.term()
            if self.at_sym("["):
                self.advance()
                modulus = self.term()
                self.expect_sym("]")
                return Congruent(left, right, modulus, self._span(start))
            return Compare(left, "=", right, self._span(start))
        for op in _COMPARISONS:
            if self.at_sym(op):
                self.advance()
                right = self.term()
                return Compare(left, op, right, self._span(start))
        if self.at_sym("|"):
            self.advance()
            right = self.term()
            return Divides(left, right, self._span(start))
        self.fail("expected a comparison operator or '|'")
        raise AssertionError("unreachable")

    # -- terms ----------------------------------------------------------

    def term(self) -> Term:
        start = self.cur
        left = self.muldiv()
        while self.at_sym("+", "-"):
            op = self.advance().text
            right = self.muldiv()
            left = BinOp(op, left, right, self._span(start))
        return left

    def muldiv(self) -> Term:
        start = self.cur
        left = self.unary()
        while True:
            if self.at_sym("*"):
                op = "*"
            elif self.at_kw("div"):
                op = "div"
            elif self.at_kw("mod"):
                op = "mod"
            else:
                return left
            self.advance()
            right = self.unary()
            left = BinOp(op, left, right, self._span(start))

    def unary(self) -> Term:
        start = self.cur
        if self.at_sym("-"):
            self.advance()
            return Neg(self.unary(), self._span(start))
        return self.power()

    def power(self) -> Term:
        start = self.cur
        base = self.primary()
        if self.at_sym("^"):
            self.advance()
            exponent = self.unary()
            return BinOp("^", base, exponent, self._span(start))
        return base

    def primary(self) -> Term:
        start = self.cur
        if start.kind == "int":
            self.advance()
            return Lit(int(start.text), self._span(start))
        if start.kind == "ident":
            self.advance()
            if self.at_sym("("):
                return self.call(start)
            return Var(start.text, self._span(start))
        if self.at_sym("("):
            self.advance()
            inner = self.term()
            self.expect_sym(")")
            return inner
        self.fail("expected an integer, a variable or '('")
        raise AssertionError("unreachable")

    def call(self, name: Token) -> Term:
        self.expect_sym("(")
        if name.text == "sum":
            var = self.expect_ident()
            self.expect_sym(",")
            lo = self.term()
            self.expect_sym(",")
            hi = self.term()
            self.expect_sym(",")
            body = self.term()
            self.expect_sym(")")
            return SumTerm(var.text, lo, hi, body, self._span(name))
        arity = BUILTIN_ARITY.get(name.text)
        if arity is None:
            raise self._error_at(name, f"unknown builtin '{name.text}'")
        args = [self.term()]
        while self.at_sym(","):
            self.advance()
            args.append(self.term())
        self.expect_sym(")")
        if len(args) != arity:
            raise self._error_at(
                name,
                f"'{name.text}' takes {arity} argument(s), got {len(args)}",
            )
        return Call(name.text, tuple(args), self._span(name))


def _run(source: str, production: str):
    parser = _Parser(tokenize(source))
    try:
        node = getattr(parser, production)()
        parser.expect_eof()
    except ParseError as err:
        deepest = parser.deepest
        if deepest is not None and (deepest.line, deepest.col) >= (err.line, err.col):
            raise deepest from None
        raise
    return node


def parse_term(source: str) -> Term:
    """Parse a term.

    Raises:
        ParseError: with a 1-based line:col position.
    """
    return _run(source, "term")


def parse_formula(source: str) -> Formula:
    """Parse a formula.

    Raises:
        ParseError: with a 1-based line:col position.
    """
    return _run(source, "formula")
