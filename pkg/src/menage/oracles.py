"""Brute-force counters used to check the closed forms in :mod:`menage.core`.

Nothing here calls the formulas in ``core``: every count comes from
walking the objects themselves, so agreement with the formulas is real
evidence.

Conventions: permutations and seats are 0-indexed, permutations are
tuples in one-line notation, and seats are labelled (a rotation or a
reflection of a seating is a different seating).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterator, NamedTuple, Sequence, Tuple

from .core import DomainError

Permutation = Tuple[int, ...]

X = "X"
Y = "Y"


class Person(NamedTuple):
    couple_id: int
    font: str


Seating = Tuple[Person, ...]


def _check_bounds(name: str, value, low: int, high: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer (got {value!r})")
    if not low <= value <= high:
        raise DomainError(f"{name} must satisfy {low} <= {name} <= {high} (got {value})")


def check_permutation(p: Sequence[int], min_size: int = 1) -> None:
    n = len(p)
    if n < min_size:
        raise DomainError(f"permutation must have size >= {min_size} (got {n})")
    if sorted(p) != list(range(n)):
        raise DomainError(f"not a permutation of 0..{n - 1}: {list(p)}")


# -- domino placements --------------------------------------------------------


@dataclass(frozen=True)
class DominoPlacement:
    """Dominos on an m-cycle; a domino starting at s covers s and s+1 mod m."""

    cycle_length: int
    starts: Tuple[int, ...]

    def __post_init__(self):
        m = self.cycle_length
        if m < 3:
            raise DomainError(f"cycle_length must be >= 3 (got {m})")
        if any(not 0 <= s < m for s in self.starts):
            raise DomainError(f"starts must lie in 0..{m - 1}: {self.starts}")
        if any(a >= b for a, b in zip(self.starts, self.starts[1:])):
            raise DomainError(f"starts must be strictly increasing: {self.starts}")
        if len(set(self.cells())) != 2 * len(self.starts):
            raise DomainError(f"dominos overlap: {self.starts} on a {m}-cycle")

    def cells(self) -> Tuple[int, ...]:
        m = self.cycle_length
        return tuple(c for s in self.starts for c in (s, (s + 1) % m))


def enumerate_domino_placements(m: int, r: int) -> Iterator[DominoPlacement]:
    """Every placement of r non-overlapping dominos on an m-cycle, lexicographically."""
    _check_bounds("m", m, 3, 20)
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise DomainError(f"r must be a non-negative integer (got {r!r})")

    def walk():
        for starts in combinations(range(m), r):
            covered = {c for s in starts for c in (s, (s + 1) % m)}
            if len(covered) == 2 * r:
                yield DominoPlacement(m, starts)

    return walk()


def brute_domino_count(m: int, r: int) -> int:
    return sum(1 for _ in enumerate_domino_placements(m, r))


# -- permutations (the arrangement problem) -----------------------------------


def is_discordant(p: Permutation) -> bool:
    """True iff p(i) != i and p(i) != i+1 mod n for every i."""
    check_permutation(p)
    n = len(p)
    return all(v != i and v != (i + 1) % n for i, v in enumerate(p))


def hit_count(p: Permutation) -> int:
    """Number of forbidden positions p lands on: fixed points plus shift agreements.

    Constraint "p(i) = i" sits on cell 2i of a 2n-cycle and "p(i) = i+1"
    on cell 2i+1.  Two constraints can hold together only if their cells
    are not adjacent, so a permutation's hits form a domino-free set of
    cells and there are at most n of them.
    """
    check_permutation(p, min_size=2)
    n = len(p)
    fixed = sum(1 for i, v in enumerate(p) if v == i)
    shifted = sum(1 for i, v in enumerate(p) if v == (i + 1) % n)
    return fixed + shifted


def enumerate_permutations(n: int, discordant_only: bool = False) -> Iterator[Permutation]:
    _check_bounds("n", n, 1, 9)
    perms = permutations(range(n))
    if discordant_only:
        return (p for p in perms if is_discordant(p))
    return perms


def brute_tait(n: int) -> int:
    """Count discordant permutations of size n by scanning all n! of them."""
    _check_bounds("n", n, 1, 9)
    return sum(1 for p in permutations(range(n)) if is_discordant(p))


def ie_term_sum(n: int, r: int) -> int:
    """Sum of C(hit_count(p), r) over all permutations p of size n.

    Counts pairs (p, S) with S an r-set of constraints that p satisfies,
    which is the r-th inclusion-exclusion term.
    """
    _check_bounds("n", n, 2, 8)
    _check_bounds("r", r, 0, n)
    return sum(comb(hit_count(p), r) for p in permutations(range(n)))


# -- seatings -----------------------------------------------------------------

# A person is coded as 2 * couple_id + (font == Y), so the font is the low bit.


def _encode(person: Person) -> int:
    return 2 * person.couple_id + (person.font == Y)


def _decode(code: int) -> Person:
    return Person(code >> 1, Y if code & 1 else X)


def _compatible_table(size: int):
    return [
        [((a ^ b) & 1) == 1 and (a >> 1) != (b >> 1) for b in range(size)]
        for a in range(size)
    ]


def _valid_codes(codes: Sequence[int], ok) -> bool:
    prev = codes[-1]
    for c in codes:
        if not ok[prev][c]:
            return False
        prev = c
    return True


def check_seating(s: Sequence[Person], min_couples: int = 2) -> None:
    if len(s) % 2 or len(s) < 2 * min_couples:
        raise DomainError(f"a seating needs 2n seats with n >= {min_couples} (got {len(s)})")
    n = len(s) // 2
    expected = {Person(c, f) for c in range(n) for f in (X, Y)}
    if len(set(s)) != len(s) or set(s) != expected:
        raise DomainError(f"seating must hold each (couple, font) for couples 0..{n - 1} once")


def is_valid_menage_seating(s: Sequence[Person]) -> bool:
    """True iff every pair of neighbouring seats has different fonts and different couples."""
    s = tuple(Person(*p) for p in s)
    check_seating(s)
    return _valid_codes([_encode(p) for p in s], _compatible_table(len(s)))


def enumerate_seatings(n: int, valid_only: bool = False) -> Iterator[Seating]:
    _check_bounds("n", n, 2, 5)
    size = 2 * n
    ok = _compatible_table(size)
    return (
        tuple(_decode(c) for c in codes)
        for codes in permutations(range(size))
        if not valid_only or _valid_codes(codes, ok)
    )


def brute_menage(n: int) -> int:
    """Count valid seatings by scanning all (2n)! assignments of people to seats."""
    _check_bounds("n", n, 2, 5)
    size = 2 * n
    ok = _compatible_table(size)
    return sum(1 for codes in permutations(range(size)) if _valid_codes(codes, ok))
