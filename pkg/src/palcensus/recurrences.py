"""Count sequences from recurrences, their exact-ratio companions, and a
persistent store for the brute-forced minimal-square counts.

Everything is arbitrary-precision: counts are Python ints, ratios are
fractions.  No floating point enters this module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .census import DEFAULT_BUDGET, Family, census_family


class MissingCountError(ValueError):
    """A derived sequence or enclosure needs counts that were not supplied."""


class CacheMismatchError(ValueError):
    """A cached count disagrees with its recomputation."""


@dataclass(frozen=True)
class CountSeq:
    """Nonnegative counts indexed by length (half-length for MIN_SQUARE)."""

    k: int
    family: Family
    values: dict[int, int]

    def __getitem__(self, n: int) -> int:
        try:
            return self.values[n]
        except KeyError:
            raise MissingCountError(
                f"{self.family.value} count for k={self.k}, n={n} was not computed"
            ) from None

    def __contains__(self, n: int) -> bool:
        return n in self.values

    @property
    def max_n(self) -> int:
        return max(self.values, default=0)


@dataclass(frozen=True)
class RatioSeq:
    """Exact rationals in [0, 1] indexed by length."""

    k: int
    values: dict[int, Fraction]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def _require(k: int, N: int) -> None:
    if k < 2:
        raise ValueError(f"recurrences need an alphabet of size at least 2, got {k}")
    if N < 1:
        raise ValueError(f"sequence length must be at least 1, got {N}")


def no_pal_prefix_counts(k: int, N: int) -> CountSeq:
    """Counts of length-n words with no nontrivial palindromic prefix.

    Starts from count(1) = k and count(2) = k**2 - k and doubles upward:

        count(2n)   = k * count(2n-1) - count(n)
        count(2n+1) = k * count(2n)   - count(n+1)

    Appending a letter preserves the property unless the whole word just
    became a palindrome; those new palindromes are in bijection with the
    prefix-free words of half the (rounded-up) length, which is what the
    subtracted term removes.
    """
    _require(k, N)
    values = {1: k}
    if N >= 2:
        values[2] = k * k - k
    for m in range(3, N + 1):
        if m % 2 == 0:
            values[m] = k * values[m - 1] - values[m // 2]
        else:
            values[m] = k * values[m - 1] - values[(m + 1) // 2]
    return CountSeq(k, Family.NO_PAL_PREFIX, values)


# budget for the startup cross-check of the unbordered recurrence against the
# census: all lengths n <= 14 whose cumulative word count stays below this
# (the full range for k = 2; fewer lengths for larger alphabets, where the
# enumeration would dominate the run)
_VALIDATION_WORDS = 60_000
_validated_alphabets: set[int] = set()


def _unbordered_values(k: int, N: int) -> dict[int, int]:
    values = {1: k}
    if N >= 2:
        values[2] = k * k - k
    for m in range(3, N + 1):
        if m % 2 == 1:
            values[m] = k * values[m - 1]
        else:
            values[m] = k * values[m - 1] - values[m // 2]
    return values


def _validate_unbordered(k: int, budget: int) -> None:
    if k in _validated_alphabets:
        return
    total = 0
    bound = 0
    for n in range(1, 15):
        total += k ** n
        if total > _VALIDATION_WORDS or k ** n > budget:
            break
        bound = n
    if bound:
        values = _unbordered_values(k, bound)
        for n in range(1, bound + 1):
            counted = census_family(k, n, Family.UNBORDERED, budget=budget)
            if values[n] != counted:
                raise RuntimeError(
                    f"unbordered recurrence disagrees with the census at "
                    f"k={k}, n={n}: {values[n]} != {counted}"
                )
    _validated_alphabets.add(k)


def unbordered_counts(
    k: int, N: int, *, validate: bool = True, budget: int = DEFAULT_BUDGET
) -> CountSeq:
    """Counts of length-n unbordered words.

    Uses u(1) = k, u(2) = k**2 - k, u(2n+1) = k*u(2n), and
    u(2n) = k*u(2n-1) - u(n).  The recurrence is cross-checked against the
    enumeration census once per alphabet size before its first use.
    """
    _require(k, N)
    if validate:
        _validate_unbordered(k, budget)
    return CountSeq(k, Family.UNBORDERED, _unbordered_values(k, N))


def no_even_pp_counts(
    k: int, N: int, *, validate: bool = True, budget: int = DEFAULT_BUDGET
) -> CountSeq:
    """Counts of length-n words with no even palindromic prefix.

    Equal to the unbordered counts at every length: the milk shuffle maps one
    family onto the other.
    """
    u = unbordered_counts(k, N, validate=validate, budget=budget)
    return CountSeq(k, Family.NO_EVEN_PP, dict(u.values))


def no_odd_pp_counts(
    k: int, N: int, *, validate: bool = True, budget: int = DEFAULT_BUDGET
) -> CountSeq:
    """Counts of length-n words with no nontrivial odd palindromic prefix.

    Equals the unbordered count for odd n and k times the length-(n-1)
    unbordered count for even n.
    """
    u = unbordered_counts(k, N, validate=validate, budget=budget)
    values = {n: u[n] if n % 2 else k * u[n - 1] for n in range(1, N + 1)}
    return CountSeq(k, Family.NO_ODD_PP, values)


def min_square_counts(
    k: int,
    N: int,
    *,
    cache: "CacheStore | None" = None,
    budget: int = DEFAULT_BUDGET,
    verify_cache: bool = False,
    jobs: int = 1,
) -> CountSeq:
    """Counts of length-2n squares with no nonempty proper square prefix,
    indexed by the half-length n.

    There is no known recurrence, so values come from the census (k**n roots
    per length) and are remembered in the persistent cache when one is given.
    With verify_cache, hits are recomputed and compared byte for byte.
    """
    _require(k, N)
    values: dict[int, int] = {}
    dirty = False
    for n in range(1, N + 1):
        stored = cache.get(k, n) if cache is not None else None
        if stored is not None and not verify_cache:
            values[n] = stored
            continue
        computed = census_family(k, n, Family.MIN_SQUARE, budget=budget, jobs=jobs)
        if stored is not None and str(stored) != str(computed):
            raise CacheMismatchError(
                f"cached min-square count for k={k}, n={n} is {stored}; "
                f"recomputation gives {computed}"
            )
        values[n] = computed
        if cache is not None and stored is None:
            cache.put(k, n, computed)
            dirty = True
    if dirty and cache is not None:
        cache.save()
    return CountSeq(k, Family.MIN_SQUARE, values)


def square_prefix_counts(
    k: int, N: int, min_square: CountSeq
) -> tuple[CountSeq, CountSeq]:
    """(square-prefix-free, has-square-prefix) counts for lengths 1..N.

    A word with a square prefix has a unique minimal one, so the counts with
    a square prefix convolve:  has(n) = sum over 2i <= n of min_square(i)
    times k**(n-2i), and free(n) = k**n - has(n).  Requires min_square to
    hold every half-length up to N // 2.
    """
    _require(k, N)
    free: dict[int, int] = {}
    has: dict[int, int] = {}
    for n in range(1, N + 1):
        has[n] = sum(min_square[i] * k ** (n - 2 * i) for i in range(1, n // 2 + 1))
        free[n] = k ** n - has[n]
    return (
        CountSeq(k, Family.NO_SQUARE_PREFIX, free),
        CountSeq(k, Family.HAS_SQUARE_PREFIX, has),
    )


def no_pal_prefix_ratios(k: int, N: int) -> RatioSeq:
    """The exact fractions count(n) / k**n for the no-palindromic-prefix
    counts; each lies in [0, 1]."""
    counts = no_pal_prefix_counts(k, N)
    values: dict[int, Fraction] = {}
    for n in range(1, N + 1):
        ratio = Fraction(counts[n], k ** n)
        if not 0 <= ratio <= 1:
            raise RuntimeError(f"ratio out of range at k={k}, n={n}: {ratio}")
        values[n] = ratio
    return RatioSeq(k, values)


# ---------------------------------------------------------------------------
# persistent cache


class CacheStore:
    """TSV-backed store of minimal-square counts.

    One record per line: k, n, and the count, tab-separated and sorted by
    (k, n).  Anything else in the file is rejected outright.
    """

    def __init__(self, path: os.PathLike | str) -> None:
        self.path = Path(path)
        self._values: dict[tuple[int, int], int] | None = None

    def _load(self) -> dict[tuple[int, int], int]:
        if self._values is not None:
            return self._values
        values: dict[tuple[int, int], int] = {}
        if self.path.exists():
            previous: tuple[int, int] | None = None
            for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ValueError(
                        f"{self.path}:{lineno}: expected 3 tab-separated fields, "
                        f"got {line!r}"
                    )
                try:
                    k, n, count = (int(p) for p in parts)
                except ValueError:
                    raise ValueError(
                        f"{self.path}:{lineno}: non-integer field in {line!r}"
                    ) from None
                if k < 1 or n < 1 or count < 0:
                    raise ValueError(f"{self.path}:{lineno}: out-of-range record {line!r}")
                if previous is not None and (k, n) <= previous:
                    raise ValueError(
                        f"{self.path}:{lineno}: records must be sorted by (k, n)"
                    )
                values[(k, n)] = count
                previous = (k, n)
        self._values = values
        return values

    def get(self, k: int, n: int) -> int | None:
        return self._load().get((k, n))

    def put(self, k: int, n: int, count: int) -> None:
        self._load()[(k, n)] = count

    def save(self) -> None:
        values = self._load()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        temp = self.path.with_name(self.path.name + ".tmp")
        lines = [f"{k}\t{n}\t{count}\n" for (k, n), count in sorted(values.items())]
        temp.write_text("".join(lines))
        os.replace(temp, self.path)


def default_cache_path() -> Path:
    """The cache file location: $PALCENSUS_CACHE if set, else a directory
    under the usual per-user data path."""
    root = os.environ.get("PALCENSUS_CACHE")
    if root:
        directory = Path(root)
    else:
        xdg = os.environ.get("XDG_DATA_HOME")
        base = Path(xdg) if xdg else Path.home() / ".local" / "share"
        directory = base / "palcensus"
    return directory / "min_square_counts.tsv"
