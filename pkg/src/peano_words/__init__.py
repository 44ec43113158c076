"""Peano words X_n, pattern occurrence counting and the closed-form counts."""

from .counting import (
    AdjacencyStats,
    FrequencyVector,
    adjacency_stats,
    count_anchored_run,
    count_fast,
    count_occurrences,
    count_occurrences_naive,
    letter_frequencies,
)
from .errors import CapacityError, DomainError, PatternSyntaxError, PeanoError
from .formulas import (
    RiseDescentPair,
    binomial,
    frequency_formula,
    frequency_recurrence,
    power_pattern_formula,
    rises_descents_formula,
    rises_descents_recurrence,
    tau_table_value,
)
from .patterns import Pattern, format_pattern, parse_pattern
from .render import render_svg
from .verify import SuiteConfig, VerificationRecord, run_suite
from .words import (
    Letter,
    LetterStream,
    PeanoWord,
    TransformKind,
    apply_transform,
    build_word,
    letter_at,
    stream_letters,
    word_length,
)

__version__ = "0.1.0"
