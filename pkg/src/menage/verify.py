"""Invariant suites run by ``menage verify``.

Functions are looked up through their modules at call time so that a
perturbed formula (e.g. a monkeypatched ``core.domino_count``) is the one
that gets checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import core, oracles

# largest max_n each suite accepts before clamping
SUITE_LIMITS = {"formulas": 100, "oracles": 8, "ie": 7}
SUITES = ("formulas", "oracles", "ie")

# per-check caps inside the oracle suites
MENAGE_ORACLE_MAX = 5
PLACEMENT_ORACLE_MAX_M = 16
BREAKDOWN_MAX = 50


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, body: Callable[[], Optional[str]]) -> Check:
    """Run ``body``; it returns None on success or a string describing the first failure."""
    try:
        failure = body()
    except (ArithmeticError, ValueError) as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, failure is None, failure or "")


def _pascal_rows(top: int):
    row = [1]
    for a in range(top + 1):
        yield a, row
        row = [1] + [x + y for x, y in zip(row, row[1:])] + [1]


# -- formulas -----------------------------------------------------------------


def _factorial_products(top: int):
    prod = 1
    for k in range(top + 1):
        if core.factorial(k) != prod:
            return f"factorial({k}) = {core.factorial(k)}, product gives {prod}"
        prod *= k + 1
    return None


def _binomial_pascal(top: int):
    for a, row in _pascal_rows(top):
        for b in range(-1, a + 2):
            want = row[b] if 0 <= b <= a else 0
            if core.binomial(a, b) != want:
                return f"binomial({a}, {b}) = {core.binomial(a, b)}, Pascal gives {want}"
    return None


def _closed_forms(top_m: int):
    for m in range(3, top_m + 1):
        for r in range(1, m // 2 + 1):
            a, b = core.domino_count(m, r), core.domino_count_alt(m, r)
            if a != b:
                return f"m={m} r={r}: domino_count={a} domino_count_alt={b}"
    return None


def _divisibility(top_m: int):
    for m in range(3, top_m + 1):
        for r in range(m // 2 + 1):
            if (m * core.binomial(m - r, r)) % (m - r):
                return f"m={m} r={r}: {m - r} does not divide m*C(m-r, r)"
    return None


def _boundaries(top_m: int):
    for m in range(3, top_m + 1):
        if core.domino_count(m, 0) != 1:
            return f"domino_count({m}, 0) = {core.domino_count(m, 0)}"
        if m % 2 == 0 and core.domino_count(m, m // 2) != 2:
            return f"domino_count({m}, {m // 2}) = {core.domino_count(m, m // 2)}"
        if core.domino_count(m, m // 2 + 1) != 0:
            return f"domino_count({m}, {m // 2 + 1}) is not 0"
    return None


def _breakdowns(top_n: int):
    for n in range(2, top_n + 1):
        bd = core.touchard_breakdown(n)
        if bd.n != n or [t.r for t in bd.terms] != list(range(n + 1)):
            return f"n={n}: breakdown indexes wrong"
        for t in bd.terms:
            if t.sign != (-1) ** t.r:
                return f"n={n} r={t.r}: sign {t.sign}"
            if t.term_value != t.sign * t.domino_count * t.tail_factorial:
                return f"n={n} r={t.r}: term != sign * d_r * (n-r)!"
            if t.tail_factorial != core.factorial(n - t.r):
                return f"n={n} r={t.r}: tail factorial is not (n-r)!"
            if t.domino_count != core.domino_count(2 * n, t.r):
                return f"n={n} r={t.r}: d_r disagrees with domino_count"
        if bd.total != sum(t.term_value for t in bd.terms):
            return f"n={n}: total is not the sum of its terms"
        if bd.total != core.tait_count(n):
            return f"n={n}: breakdown total {bd.total} != tait_count {core.tait_count(n)}"
    return None


def _term_sums(top_n: int):
    for n in range(2, top_n + 1):
        s = sum(core.touchard_term(n, r) for r in range(n + 1))
        if s != core.tait_count(n):
            return f"n={n}: sum of touchard_term = {s}, tait_count = {core.tait_count(n)}"
    return None


def _incremental_direct(top_n: int):
    for n in range(2, top_n + 1):
        a, b = core.tait_count_incremental(n), core.tait_count_direct(n)
        if a != b:
            return f"n={n}: incremental {a} != direct {b}"
    seq = list(core.tait_sequence(top_n))
    if seq != [(n, core.tait_count_direct(n)) for n in range(2, top_n + 1)]:
        return "tait_sequence disagrees with direct evaluation"
    return None


def _menage_product(top_n: int):
    for n in range(2, top_n + 1):
        want = 2 * core.factorial(n) * core.tait_count_direct(n)
        if core.menage_count(n) != want:
            return f"n={n}: menage_count {core.menage_count(n)} != 2 n! tait_count = {want}"
    return None


def formulas_suite(max_n: int) -> List[Check]:
    top_m = 2 * max_n
    top_b = min(max_n, BREAKDOWN_MAX)
    return [
        _run(f"factorial matches iterated product, k=0..{top_m}", lambda: _factorial_products(top_m)),
        _run(f"binomial matches Pascal triangle, a=0..{top_m}", lambda: _binomial_pascal(top_m)),
        _run(f"domino closed forms agree, m=3..{top_m}", lambda: _closed_forms(top_m)),
        _run(f"exact divisibility of domino formula, m=3..{top_m}", lambda: _divisibility(top_m)),
        _run(f"domino boundary values, m=3..{top_m}", lambda: _boundaries(top_m)),
        _run(f"Touchard breakdown consistency, n=2..{top_b}", lambda: _breakdowns(top_b)),
        _run(f"touchard_term sums to tait_count, n=2..{max_n}", lambda: _term_sums(max_n)),
        _run(f"incremental equals direct evaluation, n=2..{max_n}", lambda: _incremental_direct(max_n)),
        _run(f"menage_count = 2 n! tait_count, n=2..{max_n}", lambda: _menage_product(max_n)),
    ]


# -- oracles ------------------------------------------------------------------


def _placements(top_m: int):
    for m in range(3, top_m + 1):
        for r in range(m // 2 + 2):
            a, b = core.domino_count(m, r), oracles.brute_domino_count(m, r)
            if a != b:
                return f"m={m} r={r}: domino_count={a}, enumeration={b}"
    return None


def _tait_oracle(top_n: int):
    for n in range(2, top_n + 1):
        a, b = core.tait_count(n), oracles.brute_tait(n)
        if a != b:
            return f"n={n}: tait_count={a}, brute force={b}"
    return None


def _menage_oracle(top_n: int):
    for n in range(2, top_n + 1):
        a, b = core.menage_count(n), oracles.brute_menage(n)
        if a != b:
            return f"n={n}: menage_count={a}, brute force={b}"
        c = 2 * core.factorial(n) * oracles.brute_tait(n)
        if b != c:
            return f"n={n}: brute seatings={b}, 2 n! * brute permutations={c}"
    return None


def oracles_suite(max_n: int) -> List[Check]:
    top_m = min(2 * max_n, PLACEMENT_ORACLE_MAX_M)
    top_menage = min(max_n, MENAGE_ORACLE_MAX)
    return [
        _run(f"domino_count matches placement enumeration, m=3..{top_m}", lambda: _placements(top_m)),
        _run(f"tait_count matches permutation scan, n=2..{max_n}", lambda: _tait_oracle(max_n)),
        _run(f"menage_count matches seating scan, n=2..{top_menage}", lambda: _menage_oracle(top_menage)),
    ]


# -- inclusion-exclusion ------------------------------------------------------


def _ie_terms(top_n: int):
    for n in range(2, top_n + 1):
        for r in range(n + 1):
            a = oracles.ie_term_sum(n, r)
            b = core.domino_count(2 * n, r) * core.factorial(n - r)
            if a != b:
                return f"n={n} r={r}: incidence sum={a}, d_r (n-r)!={b}"
    return None


def _ie_telescoping(top_n: int):
    for n in range(2, top_n + 1):
        s = sum((-1) ** r * oracles.ie_term_sum(n, r) for r in range(n + 1))
        if s != oracles.brute_tait(n):
            return f"n={n}: signed sum={s}, brute force={oracles.brute_tait(n)}"
        if s != core.tait_count(n):
            return f"n={n}: signed sum={s}, tait_count={core.tait_count(n)}"
    return None


def _hit_bounds(top_n: int):
    for n in range(2, top_n + 1):
        for p in oracles.enumerate_permutations(n):
            h = oracles.hit_count(p)
            if not 0 <= h <= n:
                return f"hit_count({p}) = {h} outside 0..{n}"
    return None


def ie_suite(max_n: int) -> List[Check]:
    return [
        _run(f"IE term equals d_r (n-r)!, n=2..{max_n}", lambda: _ie_terms(max_n)),
        _run(f"signed IE sum equals discordant count, n=2..{max_n}", lambda: _ie_telescoping(max_n)),
        _run(f"hit count within 0..n, n=2..{max_n}", lambda: _hit_bounds(max_n)),
    ]


_RUNNERS: Dict[str, Callable[[int], List[Check]]] = {
    "formulas": formulas_suite,
    "oracles": oracles_suite,
    "ie": ie_suite,
}


def run(max_n: int, suite: str = "all") -> Tuple[List[Check], List[str]]:
    """Run one suite (or all); returns the checks and any clamping warnings."""
    if suite != "all" and suite not in _RUNNERS:
        raise core.DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}, all")
    if isinstance(max_n, bool) or not isinstance(max_n, int) or max_n < 2:
        raise core.DomainError(f"max_n must be an integer >= 2 (got {max_n!r})")
    checks: List[Check] = []
    warnings: List[str] = []
    for name in SUITES if suite == "all" else (suite,):
        limit = SUITE_LIMITS[name]
        n = max_n
        if n > limit:
            warnings.append(f"warning: {name} suite clamps max_n {max_n} to {limit}")
            n = limit
        if name == "oracles" and n > MENAGE_ORACLE_MAX:
            warnings.append(f"warning: seating oracle runs only up to n={MENAGE_ORACLE_MAX}")
        checks.extend(_RUNNERS[name](n))
    return checks, warnings
