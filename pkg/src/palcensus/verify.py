"""Cross-checking suites that wire each module against an independent route.

Every suite runs its checks exhaustively up to the given bounds (silently
clipped to the enumeration budget), collects failure descriptions, and
reports how many individual checks ran.  The CLI prints one line per suite
and exits nonzero if anything failed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .census import (
    DEFAULT_BUDGET,
    Family,
    ProfileKind,
    _iter_words,
    _profile_counters,
    census_family,
    list_profile,
)
from .constants import (
    density_series,
    density_series_closed_form,
    density_series_enclosure,
    pal_free_density_enclosure,
    square_prefix_densities,
)
from .maps import (
    _adjacent_sums,
    _milk_shuffle,
    _milk_unshuffle,
    milk_shuffle_order,
    milk_shuffle_permutation,
    permutation_order,
)
from .recurrences import (
    min_square_counts,
    no_even_pp_counts,
    no_odd_pp_counts,
    no_pal_prefix_counts,
    no_pal_prefix_ratios,
    square_prefix_counts,
    unbordered_counts,
)
from .words import (
    _even_pp_set,
    _has_pal_prefix,
    _odd_pp_set,
    _short_border_set,
)

_MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < _MAX_REPORTED_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == _MAX_REPORTED_FAILURES:
            self.failures.append("... further failures suppressed")


def _lengths(k: int, n_max: int, budget: int):
    return [n for n in range(1, n_max + 1) if k ** n <= budget]


def suite_bijection(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Milk shuffle is an involution pair, maps border sets to even-order
    sets word by word, and its permutation order matches the power-of-two
    congruence."""
    result = SuiteResult("bijection")
    for k in range(2, k_max + 1):
        for n in _lengths(k, n_max, budget):
            for w in _iter_words(k, n):
                image = _milk_shuffle(w)
                if _milk_unshuffle(image) != w:
                    result.fail(f"round trip failed at k={k}, w={w}")
                if _short_border_set(w) != _even_pp_set(image):
                    result.fail(
                        f"border set != even-order set of image at k={k}, w={w}"
                    )
                result.checks += 2
            borders, evens, _ = _profile_counters(k, n, budget=budget)
            if borders != evens:
                result.fail(f"profile censuses disagree at k={k}, n={n}")
            result.checks += 1
        # image lists coincide set-wise, not just in count
        n = min(8, n_max)
        if n >= 1 and k ** n <= budget:
            borders, _, _ = _profile_counters(k, n, budget=budget)
            for wanted in sorted(borders, key=sorted):
                with_borders = list_profile(
                    k, n, ProfileKind.SHORT_BORDERS, wanted, budget=budget
                )
                with_orders = list_profile(
                    k, n, ProfileKind.EVEN_PP_ORDERS, wanted, budget=budget
                )
                mapped = sorted(_milk_shuffle(w.symbols) for w in with_borders)
                if mapped != sorted(w.symbols for w in with_orders):
                    result.fail(f"image list mismatch at k={k}, n={n}, set={wanted}")
                result.checks += 1
    for n in range(2, 201):
        if permutation_order(milk_shuffle_permutation(n)) != milk_shuffle_order(n):
            result.fail(f"shuffle order mismatch at n={n}")
        result.checks += 1
    return result


def suite_g_map(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Adjacent sums are exactly k-to-1, turn odd orders into even orders,
    and provably do not do the reverse."""
    result = SuiteResult("g-map")
    for k in range(2, k_max + 1):
        for n in _lengths(k, n_max, budget):
            for w in _iter_words(k, n):
                if _odd_pp_set(w) != _even_pp_set(_adjacent_sums(w, k)):
                    result.fail(f"order correspondence failed at k={k}, w={w}")
                result.checks += 1
        for n in _lengths(k, min(n_max, 8), budget):
            for x in _iter_words(k, n - 1):
                preimages = set()
                for first in range(k):
                    symbols = [first]
                    for s in x:
                        symbols.append((s - symbols[-1]) % k)
                    w = tuple(symbols)
                    if _adjacent_sums(w, k) != x:
                        result.fail(f"preimage does not map back at k={k}, x={x}")
                    preimages.add(w)
                if len(preimages) != k:
                    result.fail(f"expected {k} distinct preimages at k={k}, x={x}")
                result.checks += 1
    # the even-to-odd analogue must fail somewhere: the middle letter breaks it
    counterexample = None
    for n in range(1, 9):
        for w in _iter_words(2, n):
            if _even_pp_set(w) != _odd_pp_set(_adjacent_sums(w, 2)):
                counterexample = w
                break
        if counterexample:
            break
    if counterexample is None:
        result.fail("even-to-odd analogue unexpectedly held on all short binary words")
    result.checks += 1
    return result


_RECURRENCE_FAMILIES = (
    Family.UNBORDERED,
    Family.NO_EVEN_PP,
    Family.NO_ODD_PP,
    Family.NO_PAL_PREFIX,
    Family.NO_SQUARE_PREFIX,
    Family.HAS_SQUARE_PREFIX,
    Family.MIN_SQUARE,
)


def _recurrence_sequences(k: int, N: int, budget: int):
    min_square = min_square_counts(k, N // 2 if N >= 2 else 1, budget=budget)
    free, has = square_prefix_counts(k, N, min_square)
    return {
        Family.UNBORDERED: unbordered_counts(k, N, budget=budget),
        Family.NO_EVEN_PP: no_even_pp_counts(k, N, budget=budget),
        Family.NO_ODD_PP: no_odd_pp_counts(k, N, budget=budget),
        Family.NO_PAL_PREFIX: no_pal_prefix_counts(k, N),
        Family.NO_SQUARE_PREFIX: free,
        Family.HAS_SQUARE_PREFIX: has,
        Family.MIN_SQUARE: min_square_counts(k, N, budget=budget),
    }


def suite_counts(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Every recurrence-backed sequence equals the enumeration census."""
    result = SuiteResult("counts")
    for k in range(2, k_max + 1):
        lengths = _lengths(k, n_max, budget)
        if not lengths:
            continue
        sequences = _recurrence_sequences(k, max(lengths), budget)
        for family in _RECURRENCE_FAMILIES:
            for n in lengths:
                expected = census_family(k, n, family, budget=budget)
                got = sequences[family][n]
                if got != expected:
                    result.fail(
                        f"{family.value} mismatch at k={k}, n={n}: "
                        f"recurrence {got}, census {expected}"
                    )
                result.checks += 1
    return result


def suite_recurrences(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Exact identities among the ratio and square sequences."""
    result = SuiteResult("recurrences")
    N = 200
    for k in range(2, k_max + 1):
        ratios = no_pal_prefix_ratios(k, N)
        # halving identity in exact rationals
        for n in range(2, N // 2 + 1):
            if ratios[2 * n] != ratios[2 * n - 2] - (k + 1) * ratios[n] * Fraction(1, k ** n):
                result.fail(f"halving ratio identity failed at k={k}, n={n}")
            result.checks += 1
        # telescoped form
        partial = Fraction(0)
        for n in range(1, N // 2 + 1):
            partial += ratios[n] * Fraction(1, k ** n)
            if ratios[2 * n] != 2 - (k + 1) * partial:
                result.fail(f"telescoped identity failed at k={k}, n={n}")
            result.checks += 1
        # parity recurrence for square-prefix-free counts, census-backed
        lengths = _lengths(k, min(n_max, 12), budget)
        if lengths:
            top = max(lengths)
            min_square = min_square_counts(k, top // 2 if top >= 2 else 1, budget=budget)
            free, _ = square_prefix_counts(k, top, min_square)
            for n in lengths:
                if n < 2:
                    continue
                if n % 2 == 0:
                    expected = k * free[n - 1] - min_square[n // 2]
                else:
                    expected = k * free[n - 1]
                if free[n] != expected:
                    result.fail(f"square parity recurrence failed at k={k}, n={n}")
                result.checks += 1
            for i in range(1, min_square.max_n + 1):
                if not 0 <= min_square[i] <= k ** i:
                    result.fail(f"min-square count out of range at k={k}, i={i}")
                result.checks += 1
    return result


def suite_constants(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Enclosures nest, the functional equation balances, the closed form
    lands inside the series enclosure, and the density bounds hold."""
    result = SuiteResult("constants")
    for k in range(2, max(k_max, 3) + 1):
        for N in (10, 40):
            outer = density_series_enclosure(k, N)
            inner = density_series_enclosure(k, 2 * N)
            if not (outer.lower <= inner.lower and inner.upper <= outer.upper):
                result.fail(f"series enclosures failed to nest at k={k}, N={N}")
            result.checks += 1
        for x in (Fraction(1, k), Fraction(1, 2 * k), Fraction(1, k * k)):
            direct = density_series(k, x, 120)
            inner = density_series(k, x * x / k, 120)
            offset = 2 * x / (1 - x)
            coefficient = (x + k) / (x * (x - 1))
            bounds = sorted(
                (offset + coefficient * inner.lower, offset + coefficient * inner.upper)
            )
            if max(direct.lower, bounds[0]) > min(direct.upper, bounds[1]):
                result.fail(f"functional equation enclosures disjoint at k={k}, x={x}")
            result.checks += 1
    for k in (2, 3, 4):
        closed = density_series_closed_form(k, 6)
        if closed not in density_series_enclosure(k, 130):
            result.fail(f"closed form left the series enclosure at k={k}")
        result.checks += 1
    for k in range(2, max(k_max, 5) + 1):
        depths = _lengths(k, 7, budget)
        if not depths:
            continue
        depth = max(depths)
        min_square = min_square_counts(k, depth, budget=budget)
        with_square, square_free = square_prefix_densities(k, depth, min_square)
        if not with_square.upper < Fraction(1, k - 1):
            result.fail(f"with-square density bound failed at k={k}")
        floor = Fraction(0) if k == 2 else 1 - Fraction(1, k - 1)
        if not square_free.lower > floor:
            result.fail(f"square-free density bound failed at k={k}")
        result.checks += 2
    # tail control: even-index ratios approach the limiting density geometrically
    for k in range(2, k_max + 1):
        ratios = no_pal_prefix_ratios(k, 64)
        limit = pal_free_density_enclosure(k, 256)
        for n in (4, 8, 16, 32):
            bound = Fraction(k + 1, k ** n * (k - 1))
            here = ratios[2 * n]
            if here < limit.lower - bound or here > limit.upper + bound:
                result.fail(f"ratio strayed from the limiting density at k={k}, n={n}")
            result.checks += 1
    return result


def suite_lemmas(k_max: int, n_max: int, budget: int) -> SuiteResult:
    """Word-level facts: shuffle-palindrome splitting, reversal of shuffles,
    long borders and long palindromic prefixes forcing short ones, and the
    reflection-extension equivalence."""
    result = SuiteResult("lemmas")
    for k in range(2, k_max + 1):
        # an even-length word is a palindrome iff its unshuffled second track
        # is the reverse of the first
        for n in _lengths(k, n_max, budget):
            if n % 2:
                continue
            for x in _iter_words(k, n):
                y, z = x[0::2], x[1::2]
                if (x == x[::-1]) != (z == y[::-1]):
                    result.fail(f"shuffle-palindrome splitting failed at k={k}, x={x}")
                result.checks += 1
        # reversing a shuffle shuffles the reversals, swapped
        half = min(5, n_max // 2)
        for n in range(0, half + 1):
            if k ** (2 * n) > budget:
                break
            for y in _iter_words(k, n):
                for z in _iter_words(k, n):
                    out = [0] * (2 * n)
                    out[0::2], out[1::2] = y, z
                    shuffled = tuple(out)
                    out[0::2], out[1::2] = z[::-1], y[::-1]
                    if shuffled[::-1] != tuple(out):
                        result.fail(f"shuffle reversal law failed at k={k}, y={y}, z={z}")
                    result.checks += 1
        # long borders force short ones
        for n in _lengths(k, min(n_max, 12), budget):
            for w in _iter_words(k, n):
                long_border = any(
                    w[:i] == w[n - i:] for i in range(n // 2 + 1, n)
                )
                if long_border and not _short_border_set(w):
                    result.fail(f"long border without short border at k={k}, w={w}")
                result.checks += 1
        # a palindrome with a long proper palindromic prefix has a short one
        for n in range(1, n_max + 1):
            head = (n + 1) // 2
            if k ** head > budget:
                break
            for half_word in itertools.product(range(k), repeat=head):
                w = half_word + half_word[::-1] if n % 2 == 0 else half_word + half_word[-2::-1]
                has_long = any(
                    w[:m] == w[m - 1::-1] for m in range(n // 2 + 1, n)
                )
                if has_long:
                    has_short = any(
                        w[:m] == w[m - 1::-1] for m in range(1, (n + 1) // 2)
                        if 2 * m < n
                    )
                    if not has_short:
                        result.fail(f"no short palindromic prefix at k={k}, w={w}")
                result.checks += 1
        # appending the reflection preserves having a palindromic prefix
        for length in range(0, min(8, n_max) + 1):
            if k ** length > budget:
                break
            for w in _iter_words(k, length):
                for middle in [()] + [(a,) for a in range(k)]:
                    extended = w + middle
                    mirrored = w + middle + w[::-1]
                    direct = _has_pal_prefix(extended)
                    reflected = any(
                        mirrored[:m] == mirrored[m - 1::-1]
                        for m in range(2, len(mirrored))
                    )
                    if direct != reflected:
                        result.fail(
                            f"reflection equivalence failed at k={k}, w={w}, a={middle}"
                        )
                    result.checks += 1
    return result


SUITES = {
    "bijection": suite_bijection,
    "g-map": suite_g_map,
    "counts": suite_counts,
    "recurrences": suite_recurrences,
    "constants": suite_constants,
    "lemmas": suite_lemmas,
}


def run_suites(
    names,
    *,
    k_max: int = 3,
    n_max: int = 10,
    budget: int = DEFAULT_BUDGET,
) -> list[SuiteResult]:
    results = []
    for name in names:
        suite = SUITES[name]
        results.append(suite(k_max, n_max, budget))
    return results
