"""Exact computations over Brandt semigroups.

The Brandt semigroup B_n consists of a zero element and all ordered pairs
(i, j) with 1 <= i, j <= n, multiplied by (e,k)(l,m) = (e,m) when k == l and
0 otherwise. This package parses and normalizes one-variable terms over B_n
into their six canonical shapes, solves equations (pairs of termal
functions) both by exhaustive evaluation and by O(1) case analysis, and
tabulates the exact distribution of solution counts over all equations,
including the exact average number of solutions and the number of
unsolvable equations.

All counts are exact: big integers come back as int, ratios as
fractions.Fraction.
"""

from ._core import (
    CanonicalTerm,
    CensusMode,
    CensusTable,
    Element,
    Equation,
    Semigroup,
    Term,
    TermClass,
    VerifyCheck,
    average_formula,
    average_solutions,
    canonical_count,
    census,
    census_from_formulas,
    classify,
    count_solutions_symbolic,
    distribution_formulas,
    enumerate_canonical,
    equation_space_size,
    evaluate,
    multiply,
    normalize,
    parse_element,
    parse_equation,
    parse_term,
    solve_brute,
    to_term,
    type_census,
    unsolvable_count,
    unsolvable_fraction,
    value_table,
    verify_range,
)

__all__ = [
    "CanonicalTerm",
    "CensusMode",
    "CensusTable",
    "Element",
    "Equation",
    "Semigroup",
    "Term",
    "TermClass",
    "VerifyCheck",
    "average_formula",
    "average_solutions",
    "canonical_count",
    "census",
    "census_from_formulas",
    "classify",
    "count_solutions_symbolic",
    "distribution_formulas",
    "enumerate_canonical",
    "equation_space_size",
    "evaluate",
    "multiply",
    "normalize",
    "parse_element",
    "parse_equation",
    "parse_term",
    "solve_brute",
    "to_term",
    "type_census",
    "unsolvable_count",
    "unsolvable_fraction",
    "value_table",
    "verify_range",
]

__version__ = "1.0.0"
