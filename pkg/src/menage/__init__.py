"""Exact menage numbers, cyclic domino counts and brute-force oracles for both."""

from .core import (
    DomainError,
    InexactDivisionError,
    TouchardBreakdown,
    TouchardTerm,
    binomial,
    domino_count,
    domino_count_alt,
    factorial,
    menage_count,
    tait_count,
    tait_count_direct,
    tait_count_incremental,
    tait_sequence,
    touchard_breakdown,
    touchard_term,
)

__version__ = "0.1.0"
