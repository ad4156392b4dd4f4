"""Alphabet and word primitives.

Words are immutable sequences of integer symbols over {0, ..., k-1}.  The
scans for borders, palindromic prefixes, and square prefixes are naive and
quadratic on purpose: lengths stay small everywhere they are used, and
obvious correctness matters more than speed for code that serves as the
ground truth for everything built on top of it.

The tuple-level helpers (underscore names) work on bare symbol tuples and
are shared with the enumeration census, which cannot afford to build a
``Word`` per candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

_TABLE36 = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """The symbol set {0, ..., k-1}."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"alphabet size must be at least 1, got {self.k}")


@dataclass(frozen=True)
class Word:
    """A word over a fixed alphabet.

    Positions are 1-based in prose and documentation, 0-based in storage.
    """

    alphabet: Alphabet
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        k = self.alphabet.k
        for s in self.symbols:
            if not 0 <= s < k:
                raise ValueError(f"symbol {s!r} out of range for alphabet of size {k}")

    @classmethod
    def of(cls, symbols, k: int) -> "Word":
        """Build a word from any iterable of symbols over an alphabet of size k."""
        return cls(Alphabet(k), tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return format_word(self)


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class WordProfile:
    """Structural summary of one word.

    Holds the set of short border lengths, the orders of its even and odd
    palindromic prefixes (a palindrome of length m has order m // 2; the
    single-letter palindrome is trivial and never listed), and the
    half-lengths of its square prefixes.  Every entry lies in
    {1, ..., len(w) // 2}.
    """

    short_borders: frozenset[int]
    even_pp_orders: frozenset[int]
    odd_pp_orders: frozenset[int]
    square_half_lengths: frozenset[int]


# ---------------------------------------------------------------------------
# tuple-level scans


def _border_set(w: tuple[int, ...]) -> frozenset[int]:
    n = len(w)
    return frozenset(i for i in range(1, n) if w[:i] == w[n - i:])


def _short_border_set(w: tuple[int, ...]) -> frozenset[int]:
    n = len(w)
    return frozenset(i for i in range(1, n // 2 + 1) if w[:i] == w[n - i:])


def _even_pp_set(w: tuple[int, ...]) -> frozenset[int]:
    # w[2i-1::-1] is the reversed prefix of length 2i
    return frozenset(
        i for i in range(1, len(w) // 2 + 1) if w[:2 * i] == w[2 * i - 1::-1]
    )


def _odd_pp_set(w: tuple[int, ...]) -> frozenset[int]:
    return frozenset(
        i for i in range(1, (len(w) - 1) // 2 + 1) if w[:2 * i + 1] == w[2 * i::-1]
    )


def _square_half_set(w: tuple[int, ...]) -> frozenset[int]:
    return frozenset(
        j for j in range(1, len(w) // 2 + 1) if w[:j] == w[j:2 * j]
    )


def _has_short_border(w: tuple[int, ...]) -> bool:
    # a long border overlaps itself and forces a short one, so scanning the
    # short range decides borderedness
    n = len(w)
    for i in range(1, n // 2 + 1):
        if w[:i] == w[n - i:]:
            return True
    return False


def _has_even_pp(w: tuple[int, ...]) -> bool:
    for m in range(2, len(w) + 1, 2):
        if w[:m] == w[m - 1::-1]:
            return True
    return False


def _has_odd_pp(w: tuple[int, ...]) -> bool:
    for m in range(3, len(w) + 1, 2):
        if w[:m] == w[m - 1::-1]:
            return True
    return False


def _has_pal_prefix(w: tuple[int, ...]) -> bool:
    for m in range(2, len(w) + 1):
        if w[:m] == w[m - 1::-1]:
            return True
    return False


def _has_square_prefix(w: tuple[int, ...]) -> bool:
    n = len(w)
    for j in range(1, n // 2 + 1):
        if w[:j] == w[j:2 * j]:
            return True
    return False


def _shuffle(y: tuple[int, ...], z: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (2 * len(y))
    out[0::2] = y
    out[1::2] = z
    return tuple(out)


def _unshuffle(x: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return x[0::2], x[1::2]


# ---------------------------------------------------------------------------
# word-level operations


def reverse(w: Word) -> Word:
    """Reverse a word: "drawer" becomes "reward"."""
    return Word(w.alphabet, w.symbols[::-1])


def is_palindrome(w: Word) -> bool:
    """True iff w reads the same in both directions ("radar"); the empty word counts."""
    return w.symbols == w.symbols[::-1]


def pal_prefix_orders(w: Word, parity: Parity) -> frozenset[int]:
    """Orders i >= 1 such that the prefix of length 2i (EVEN) or 2i+1 (ODD)
    is a palindrome.

    Trivial palindromic prefixes (length <= 1) never appear: the shortest
    reported prefix has length 2 (order 1, EVEN) or 3 (order 1, ODD).
    """
    if parity is Parity.EVEN:
        return _even_pp_set(w.symbols)
    return _odd_pp_set(w.symbols)


def border_lengths(w: Word) -> frozenset[int]:
    """Lengths 0 < i < len(w) of prefixes that are also suffixes.

    "alfalfa" has borders of lengths 1 and 4; "chickpea" has none.
    """
    return _border_set(w.symbols)


def short_border_lengths(w: Word) -> frozenset[int]:
    """The border lengths not exceeding half the word length."""
    return _short_border_set(w.symbols)


def is_unbordered(w: Word) -> bool:
    return not _has_short_border(w.symbols)


def square_half_lengths(w: Word) -> frozenset[int]:
    """Half-lengths j >= 1 with w[1..j] = w[j+1..2j]; empty means no square prefix."""
    return _square_half_set(w.symbols)


def has_nontrivial_pal_prefix(w: Word) -> bool:
    """True iff some prefix of length >= 2 is a palindrome, either parity."""
    return _has_pal_prefix(w.symbols)


def word_profile(w: Word) -> WordProfile:
    s = w.symbols
    return WordProfile(
        short_borders=_short_border_set(s),
        even_pp_orders=_even_pp_set(s),
        odd_pp_orders=_odd_pp_set(s),
        square_half_lengths=_square_half_set(s),
    )


def perfect_shuffle(x: Word, y: Word) -> Word:
    """Interleave two equal-length words symbol by symbol.

    "clip" shuffled with "aloe" gives "calliope".
    """
    if x.alphabet != y.alphabet:
        raise ValueError("perfect shuffle needs both words over the same alphabet")
    if len(x) != len(y):
        raise ValueError(
            f"perfect shuffle needs equal lengths, got {len(x)} and {len(y)}"
        )
    return Word(x.alphabet, _shuffle(x.symbols, y.symbols))


def unshuffle(x: Word) -> tuple[Word, Word]:
    """Split an even-length word into the unique pair whose perfect shuffle it is."""
    if len(x) % 2:
        raise ValueError(f"cannot unshuffle a word of odd length {len(x)}")
    y, z = _unshuffle(x.symbols)
    return Word(x.alphabet, y), Word(x.alphabet, z)


# ---------------------------------------------------------------------------
# text form

# Words are displayed with digits for k <= 10, letters a, b, c, ... for
# k <= 26 (so English example words work over k = 26), the combined
# digits-then-letters table for k <= 36, and comma-separated integers beyond.


def parse_word(text: str, k: int) -> Word:
    """Parse the textual form of a word over an alphabet of size k.

    Accepts comma-separated integers for any k.  Otherwise: all-letter words
    map a..z to 0..25 (requires k <= 26), and digit/letter strings map each
    character to its index in 0-9a-z (requires k <= 36).
    """
    text = text.strip()
    if not text:
        return Word.of((), k)
    if "," in text or k > 36:
        try:
            values = tuple(int(part.strip()) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse {text!r} as comma-separated integers") from None
        return Word.of(values, k)
    lowered = text.lower()
    if lowered.isalpha() and lowered.isascii() and k <= 26:
        return Word.of((ord(c) - ord("a") for c in lowered), k)
    if k <= 36 and all(c in _TABLE36 for c in lowered):
        return Word.of((_TABLE36.index(c) for c in lowered), k)
    raise ValueError(
        f"cannot parse {text!r} over an alphabet of size {k}; "
        "use comma-separated integers"
    )


def format_word(w: Word) -> str:
    """Canonical text form of a word; inverse of parse_word for each k."""
    k = w.alphabet.k
    if k <= 10:
        return "".join(_TABLE36[s] for s in w.symbols)
    if k <= 26:
        return "".join(chr(ord("a") + s) for s in w.symbols)
    if k <= 36:
        return "".join(_TABLE36[s] for s in w.symbols)
    return ",".join(str(s) for s in w.symbols)
