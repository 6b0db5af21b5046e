"""Exact evaluation of the menage numbers and cyclic domino counts.

All values are Python ints.  Factorials and binomials are delegated to
gmpy2; everything built on top of them (domino counts, the alternating
Touchard sum, the incremental recurrences) is computed here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import gmpy2


class DomainError(ValueError):
    """An argument lies outside the domain where a formula counts something."""


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder."""


def _require_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer (got {value!r})")


def _require_at_least(name: str, value, low: int) -> None:
    _require_int(name, value)
    if value < low:
        raise DomainError(f"{name} must be >= {low} (got {value})")


def exact_div(num, den):
    """Divide, raising InexactDivisionError unless ``den`` divides ``num``."""
    q, rem = divmod(num, den)
    if rem:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


def to_decimal(x: int) -> str:
    # gmpy2 has no str() digit limit and converts in subquadratic time
    return gmpy2.mpz(x).digits(10)


def from_decimal(s: str) -> int:
    return int(gmpy2.mpz(s, 10))


# -- factorials and binomials -------------------------------------------------


def factorial(k: int) -> int:
    _require_at_least("k", k, 0)
    return int(gmpy2.fac(k))


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when b < 0 or b > a."""
    _require_at_least("a", a, 0)
    _require_int("b", b)
    if b < 0 or b > a:
        return 0
    return int(gmpy2.comb(a, b))


# -- domino placements on a cycle ---------------------------------------------


def _domino_mpz(m: int, r: int):
    if 2 * r > m:
        return gmpy2.mpz(0)
    return exact_div(m * gmpy2.comb(m - r, r), m - r)


def domino_count(m: int, r: int) -> int:
    """Number of ways to put ``r`` non-overlapping dominos on an ``m``-cycle.

    Evaluates m/(m-r) * C(m-r, r).  On a 2-cycle the two adjacent pairs
    are the same pair and the formula over-counts, so ``m < 3`` is rejected.
    """
    _require_at_least("m", m, 3)
    _require_at_least("r", r, 0)
    return int(_domino_mpz(m, r))


def domino_count_alt(m: int, r: int) -> int:
    """Same count as :func:`domino_count` in the form m/r * C(m-r-1, r-1).

    This is the stars-and-bars form: fix a starting cell, spread the
    m - 2r free cells over the r gaps between consecutive dominos, then
    divide out the r choices of which domino came first.
    """
    _require_at_least("m", m, 3)
    _require_at_least("r", r, 1)
    if 2 * r > m:
        raise DomainError(f"r must satisfy 2*r <= m (got m={m}, r={r})")
    return int(exact_div(m * gmpy2.comb(m - r - 1, r - 1), r))


# -- the Touchard sum ---------------------------------------------------------


def _check_couples(n) -> None:
    # n = 1 puts the identity and the shift on top of each other (2-cycle);
    # n = 0 makes the r = 0 factor 2n/(2n - r) equal to 0/0
    _require_at_least("n", n, 2)


def _sign(r: int) -> int:
    return -1 if r & 1 else 1


def touchard_term(n: int, r: int) -> int:
    """(-1)^r * domino_count(2n, r) * (n - r)!"""
    _check_couples(n)
    _require_int("r", r)
    if not 0 <= r <= n:
        raise DomainError(f"r must satisfy 0 <= r <= n (got n={n}, r={r})")
    return _sign(r) * domino_count(2 * n, r) * factorial(n - r)


@dataclass(frozen=True)
class TouchardTerm:
    r: int
    domino_count: int
    sign: int
    tail_factorial: int
    term_value: int


@dataclass(frozen=True)
class TouchardBreakdown:
    n: int
    terms: Tuple[TouchardTerm, ...]
    total: int


def _next_domino(d, m: int, r: int, ops: Optional[Counter] = None):
    """Step d_r -> d_{r+1} on an m-cycle.

    d_{r+1} = d_r (m - 2r)(m - 2r - 1) / ((r + 1)(m - r - 1))
    """
    if ops is not None:
        ops["mul"] += 2
        ops["div"] += 1
    return exact_div(d * ((m - 2 * r) * (m - 2 * r - 1)), (r + 1) * (m - r - 1))


def touchard_breakdown(n: int) -> TouchardBreakdown:
    """Term-by-term decomposition of the Touchard sum, built incrementally."""
    _check_couples(n)
    m = 2 * n
    d = 1
    tail = factorial(n)
    terms: List[TouchardTerm] = []
    total = 0
    for r in range(n + 1):
        sign = _sign(r)
        value = sign * d * tail
        terms.append(TouchardTerm(r, d, sign, tail, value))
        total += value
        if r < n:
            d = _next_domino(d, m, r)
            tail = exact_div(tail, n - r)
    return TouchardBreakdown(n, tuple(terms), total)


def tait_count_incremental(n: int, ops: Optional[Counter] = None) -> int:
    """Touchard sum via the domino recurrence, nested Horner-style.

    Writing the sum as (((d_0 n - d_1)(n - 1) + d_2)(n - 2) - ...) keeps
    every multiplication big-by-small, so the cost per step is linear in
    the size of the accumulator.
    """
    _check_couples(n)
    m = 2 * n
    d = 1
    acc = 1
    for r in range(n):
        d = _next_domino(d, m, r, ops)
        acc = acc * (n - r) + (-d if (r + 1) & 1 else d)
        if ops is not None:
            ops["mul"] += 1
            ops["add"] += 1
    return acc


def tait_count_direct(n: int, ops: Optional[Counter] = None) -> int:
    """Touchard sum with every term rebuilt from a fresh binomial and factorial."""
    _check_couples(n)
    m = 2 * n
    total = gmpy2.mpz(0)
    for r in range(n + 1):
        term = _domino_mpz(m, r) * gmpy2.fac(n - r)
        total = total - term if r & 1 else total + term
        if ops is not None:
            ops["binomial"] += 1
            ops["factorial"] += 1
            ops["mul"] += 2
            ops["div"] += 1
            ops["add"] += 1
    return int(total)


def tait_count(n: int) -> int:
    """Permutations of n points avoiding both the identity and the cyclic shift."""
    return tait_count_incremental(n)


def menage_count(n: int) -> int:
    """Seatings of n couples at 2n labelled seats, fonts alternating, no couple adjacent.

    2 * n! * tait_count(n): pick which seat parity holds the X letters,
    order them, then place the Y letters.
    """
    _check_couples(n)
    return 2 * factorial(n) * tait_count(n)


def tait_sequence(n_max: int, n_min: int = 2) -> Iterator[Tuple[int, int]]:
    """Stream ``(n, tait_count(n))`` for n = n_min..n_max, one incremental evaluation each."""
    _check_couples(n_max)
    _check_couples(n_min)
    return ((n, tait_count_incremental(n)) for n in range(n_min, n_max + 1))
