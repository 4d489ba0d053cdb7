"""Smallest string attractors of Fibonacci and period-doubling words."""
from .attractors import (
    AttractorVerifier,
    Interval,
    MusReport,
    VerifyOutcome,
    is_attractor,
    is_attractor_naive,
    minimal_unique_substrings,
    position_set,
    smallest_attractor_size,
)
from .enumeration import AttractorFamily, enumerate_attractors_of_size, enumerate_smallest_attractors
from .errors import BudgetExceededError, OrderCapError
from .fibonacci import (
    InvalidReason,
    LRLSets,
    ParseTree,
    center_child_positions,
    fib_attractor_count,
    fib_attractors_closed_form,
    fib_invalid_pair_reason,
    lrl_sets,
    lrl_sets_from_parse,
    mantaci_gamma1,
    singular_parse_tree,
)
from .period_doubling import PdAttractorTriple, pd_attractors_closed_form, pd_projection_check
from .words import (
    SingularFactorization,
    Word,
    WordGenerator,
    fib_number,
    fib_singular_factorization,
    fib_word,
    g_delta,
    pd_word,
    singular_word,
)

__version__ = "0.1.0"
