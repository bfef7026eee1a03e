"""arithlab: exact integer arithmetic workbench.

Divisibility, primality, decimal-digit rules, sums/factorials/binomial
identities, residue case analysis, and a small quantified-statement
language whose formulas are checked exhaustively on finite domains —
every verdict names the domain it was verified on, every refutation
comes with a counterexample.
"""

from . import combinatorics, digits, divisibility, dsl, intops, primality, residues
from .combinatorics import binom, binom_fact, fact, monus, pascal_row, sum_n, sum_range
from .digits import Digits, digit_sum, from_digits, last_digit, repeat_block, to_digits
from .divisibility import (
    BezoutCert,
    DividesWitness,
    divides,
    ext_gcd,
    find_all,
    gcd,
    positive_divisors,
)
from .dsl import (
    CheckResult,
    Verdict,
    bounded_check,
    eval_formula,
    eval_term,
    find_all_dsl,
    format_formula,
    format_term,
    parse_formula,
    parse_term,
    parse_worksheet,
    run_worksheet,
)
from .intops import (
    DivResult,
    div_mod,
    floor_div,
    floor_mod,
    isqrt,
    mod_pow,
    parse_decimal,
    pow_nat,
    to_decimal,
)
from .primality import (
    PrimalityVerdict,
    characterization_below_sqrt,
    characterization_strict_divisors,
    is_prime,
)
from .residues import (
    ResidueRow,
    ResidueSet,
    intersect,
    render_table,
    residue_image,
    residue_row,
)

__version__ = "0.1.0"

__all__ = [
    "combinatorics",
    "digits",
    "divisibility",
    "dsl",
    "intops",
    "primality",
    "residues",
    "binom",
    "binom_fact",
    "fact",
    "monus",
    "pascal_row",
    "sum_n",
    "sum_range",
    "Digits",
    "digit_sum",
    "from_digits",
    "last_digit",
    "repeat_block",
    "to_digits",
    "BezoutCert",
    "DividesWitness",
    "divides",
    "ext_gcd",
    "find_all",
    "gcd",
    "positive_divisors",
    "CheckResult",
    "Verdict",
    "bounded_check",
    "eval_formula",
    "eval_term",
    "find_all_dsl",
    "format_formula",
    "format_term",
    "parse_formula",
    "parse_term",
    "parse_worksheet",
    "run_worksheet",
    "DivResult",
    "div_mod",
    "floor_div",
    "floor_mod",
    "isqrt",
    "mod_pow",
    "parse_decimal",
    "pow_nat",
    "to_decimal",
    "PrimalityVerdict",
    "characterization_below_sqrt",
    "characterization_strict_divisors",
    "is_prime",
    "ResidueRow",
    "ResidueSet",
    "intersect",
    "render_table",
    "residue_image",
    "residue_row",
    "__version__",
]
