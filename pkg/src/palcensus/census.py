"""Exhaustive classification of the words of a given length.

Counts come from literally enumerating all k**n words (or all k**n square
roots) in lexicographic order and testing each one with the naive scans from
the words module.  That makes this module the ground truth against which the
recurrence module is validated.

The search space may be partitioned by fixed prefixes and the partial counts
summed, optionally across worker processes; results are identical whatever
the partitioning, and completed counts are memoised per process.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from enum import Enum

from .words import (
    Word,
    _even_pp_set,
    _has_even_pp,
    _has_odd_pp,
    _has_pal_prefix,
    _has_short_border,
    _has_square_prefix,
    _odd_pp_set,
    _short_border_set,
)

DEFAULT_BUDGET = 1 << 26


class BudgetExceededError(ValueError):
    """Enumerating the requested space would exceed the configured budget."""


class Family(Enum):
    """Word families counted by the census.

    All families count length-n words except MIN_SQUARE, which counts squares
    of length 2n (indexed by the half-length n) having no nonempty proper
    square prefix.
    """

    UNBORDERED = "unbordered"
    NO_EVEN_PP = "no-even-pp"
    NO_ODD_PP = "no-odd-pp"
    NO_PAL_PREFIX = "no-pal-prefix"
    NO_SQUARE_PREFIX = "no-square-prefix"
    HAS_SQUARE_PREFIX = "has-square-prefix"
    MIN_SQUARE = "min-square"


class ProfileKind(Enum):
    SHORT_BORDERS = "borders"
    EVEN_PP_ORDERS = "even-pp"
    ODD_PP_ORDERS = "odd-pp"


def _is_min_square_root(w: tuple[int, ...]) -> bool:
    # root of a minimal square: ww has no square prefix shorter than itself,
    # including prefixes straddling the midpoint
    ww = w + w
    for j in range(1, len(w)):
        if ww[:j] == ww[j:2 * j]:
            return False
    return True


_PREDICATES = {
    Family.UNBORDERED: lambda w: not _has_short_border(w),
    Family.NO_EVEN_PP: lambda w: not _has_even_pp(w),
    Family.NO_ODD_PP: lambda w: not _has_odd_pp(w),
    Family.NO_PAL_PREFIX: lambda w: not _has_pal_prefix(w),
    Family.NO_SQUARE_PREFIX: lambda w: not _has_square_prefix(w),
    Family.MIN_SQUARE: _is_min_square_root,
}


def _check_budget(k: int, n: int, budget: int) -> None:
    space = k ** n
    if space > budget:
        raise BudgetExceededError(
            f"enumerating {k}**{n} = {space} words exceeds the budget of {budget}"
        )


def _iter_words(k: int, n: int, prefix: tuple[int, ...] = ()):
    """All length-n words with the given prefix, in lexicographic order."""
    for rest in itertools.product(range(k), repeat=n - len(prefix)):
        yield prefix + rest


def _prefix_blocks(k: int, n: int, jobs: int) -> list[tuple[int, ...]]:
    length = 0
    while length < n and k ** length < 4 * jobs:
        length += 1
    return list(itertools.product(range(k), repeat=length))


def _count_block(k: int, n: int, family: Family, prefix: tuple[int, ...]) -> int:
    predicate = _PREDICATES[family]
    return sum(1 for w in _iter_words(k, n, prefix) if predicate(w))


def _profile_block(k: int, n: int, prefix: tuple[int, ...]):
    borders: Counter = Counter()
    evens: Counter = Counter()
    odds: Counter = Counter()
    for w in _iter_words(k, n, prefix):
        borders[_short_border_set(w)] += 1
        evens[_even_pp_set(w)] += 1
        odds[_odd_pp_set(w)] += 1
    return borders, evens, odds


def _map_blocks(worker, argument_lists, jobs: int):
    if jobs > 1 and len(argument_lists) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, *zip(*argument_lists)))
    return [worker(*args) for args in argument_lists]


_family_cache: dict[tuple[int, int, Family], int] = {}
_profile_cache: dict[tuple[int, int], tuple[Counter, Counter, Counter]] = {}


def census_family(
    k: int,
    n: int,
    family: Family,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> int:
    """Exact number of words in the family, by full enumeration.

    HAS_SQUARE_PREFIX is counted as k**n minus the square-prefix-free count;
    MIN_SQUARE enumerates the k**n length-n roots w and keeps those whose
    doubling ww has no nonempty proper square prefix.
    """
    if k < 1 or n < 1:
        raise ValueError(f"census needs k >= 1 and n >= 1, got k={k}, n={n}")
    key = (k, n, family)
    cached = _family_cache.get(key)
    if cached is not None:
        return cached
    _check_budget(k, n, budget)
    target = Family.NO_SQUARE_PREFIX if family is Family.HAS_SQUARE_PREFIX else family
    blocks = _prefix_blocks(k, n, jobs)
    counts = _map_blocks(_count_block, [(k, n, target, b) for b in blocks], jobs)
    value = sum(counts)
    if family is Family.HAS_SQUARE_PREFIX:
        _family_cache[(k, n, Family.NO_SQUARE_PREFIX)] = value
        value = k ** n - value
    _family_cache[key] = value
    return value


def _profile_counters(
    k: int, n: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> tuple[Counter, Counter, Counter]:
    key = (k, n)
    cached = _profile_cache.get(key)
    if cached is not None:
        return cached
    _check_budget(k, n, budget)
    blocks = _prefix_blocks(k, n, jobs)
    parts = _map_blocks(_profile_block, [(k, n, b) for b in blocks], jobs)
    borders: Counter = Counter()
    evens: Counter = Counter()
    odds: Counter = Counter()
    for part_borders, part_evens, part_odds in parts:
        borders.update(part_borders)
        evens.update(part_evens)
        odds.update(part_odds)
    result = (borders, evens, odds)
    _profile_cache[key] = result
    return result


_KIND_INDEX = {
    ProfileKind.SHORT_BORDERS: 0,
    ProfileKind.EVEN_PP_ORDERS: 1,
    ProfileKind.ODD_PP_ORDERS: 2,
}

_KIND_EXTRACTOR = {
    ProfileKind.SHORT_BORDERS: _short_border_set,
    ProfileKind.EVEN_PP_ORDERS: _even_pp_set,
    ProfileKind.ODD_PP_ORDERS: _odd_pp_set,
}


def _validate_profile_set(n: int, profile_set) -> frozenset[int]:
    wanted = frozenset(profile_set)
    bad = sorted(
        str(i) for i in wanted if not isinstance(i, int) or not 1 <= i <= n // 2
    )
    if bad:
        raise ValueError(
            f"profile set entries must lie in 1..{n // 2} for length {n}, got {bad}"
        )
    return wanted


def census_profile(
    k: int,
    n: int,
    kind: ProfileKind,
    profile_set,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> int:
    """Number of length-n words whose profile set of the given kind equals
    profile_set exactly (the empty set asks for words with no such structure)."""
    wanted = _validate_profile_set(n, profile_set)
    counters = _profile_counters(k, n, budget=budget, jobs=jobs)
    return counters[_KIND_INDEX[kind]][wanted]


def list_profile(
    k: int,
    n: int,
    kind: ProfileKind,
    profile_set,
    *,
    budget: int = DEFAULT_BUDGET,
) -> list[Word]:
    """The words census_profile counts, in lexicographic order."""
    wanted = _validate_profile_set(n, profile_set)
    _check_budget(k, n, budget)
    extractor = _KIND_EXTRACTOR[kind]
    return [Word.of(w, k) for w in _iter_words(k, n) if extractor(w) == wanted]
