"""Trapezoidal words: finite binary words with at most n + 1 factors of each
length n.  Recognition, open/closed classification, enumeration formulas with
brute-force checks, and the Fibonacci-word prefix analysis.
"""

from .enumeration import (
    CensusConfig,
    CountLedger,
    census,
    euler_phi,
    generate,
    nonsturmian_trapezoidal_count,
    semicentral_count,
    sturmian_count,
    trapezoidal_count,
)
from .fibonacci import analyze_prefixes, fibonacci_numbers, fibonacci_prefix, palindromic_prefixes
from .special import DeLucaParameters, SpecialFactors, de_luca_parameters, special_factors
from .sturmian import (
    central_root,
    central_words,
    is_balanced,
    is_central,
    is_finite_sturmian,
    minimal_pathological_pair,
)
from .trapezoidal import (
    TrapezoidalReport,
    classify,
    dalessandro_factorization,
    is_closed,
    is_rich,
    is_semicentral,
    is_trapezoidal,
    semicentral_decompose,
)
from .words import (
    InvariantViolation,
    PreconditionError,
    WordError,
    factor_complexity,
    parse_word,
    reversal,
)

__version__ = "0.1.0"
