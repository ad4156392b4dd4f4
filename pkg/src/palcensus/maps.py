"""Structure-revealing maps on words.

The milk shuffle interleaves the first half of a word with the reversed
second half; it is a bijection on each length and turns border lengths into
even palindromic-prefix orders.  The adjacent-sum map compresses a word to
the mod-k sums of neighbouring symbols; it is exactly k-to-1 and turns odd
palindromic-prefix orders into even ones.  The milk shuffle viewed as a
permutation of positions is the classic card-table shuffle whose order obeys
a power-of-two congruence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word, _shuffle, _unshuffle


def _milk_shuffle(w: tuple[int, ...]) -> tuple[int, ...]:
    n = len(w)
    half = n // 2
    if n % 2:
        y, mid, z = w[:half], w[half:half + 1], w[half + 1:]
    else:
        y, mid, z = w[:half], (), w[half:]
    return _shuffle(y, z[::-1]) + mid


def _milk_unshuffle(w: tuple[int, ...]) -> tuple[int, ...]:
    if len(w) % 2:
        core, mid = w[:-1], w[-1:]
    else:
        core, mid = w, ()
    y, zr = _unshuffle(core)
    return y + mid + zr[::-1]


def milk_shuffle(w: Word) -> Word:
    """Interleave the first half with the reversed second half; the middle
    letter of an odd-length word moves to the end.

    Sends "preserve" to "perverse" and "cider" to "cried".  Bijective on the
    words of each fixed length; the output length equals the input length.
    """
    return Word(w.alphabet, _milk_shuffle(w.symbols))


def milk_unshuffle(w: Word) -> Word:
    """The inverse of milk_shuffle."""
    return Word(w.alphabet, _milk_unshuffle(w.symbols))


@dataclass(frozen=True)
class Permutation:
    """A permutation of positions 1..n.

    images[j-1] is the input position whose symbol lands at output position j.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)


def milk_shuffle_permutation(n: int) -> Permutation:
    """The positional permutation realising the milk shuffle on length n.

    Derived by shuffling the identity position word, so it agrees with
    milk_shuffle by construction.  For n = 7 the images are
    (1, 7, 2, 6, 3, 5, 4).
    """
    if n < 1:
        raise ValueError(f"permutation size must be at least 1, got {n}")
    return Permutation(_milk_shuffle(tuple(range(1, n + 1))))


def permutation_order(p: Permutation) -> int:
    """Least m >= 1 with the m-fold composition equal to the identity,
    computed as the lcm of the cycle lengths."""
    images = p.images
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            length += 1
        lengths.append(length)
    return math.lcm(*lengths) if lengths else 1


def milk_shuffle_order(n: int) -> int:
    """Least m >= 1 with 2**m congruent to +1 or -1 mod 2n-1.

    This closed characterisation equals permutation_order of the length-n
    milk shuffle for every n >= 2.  The n = 1 shuffle is the identity and is
    handled by permutation_order directly; the modulus 2n-1 = 1 makes the
    congruence degenerate there, so this function requires n >= 2.
    """
    if n < 2:
        raise ValueError(f"milk shuffle order characterisation needs n >= 2, got {n}")
    modulus = 2 * n - 1
    current = 2 % modulus
    m = 1
    while current != 1 and current != modulus - 1:
        current = current * 2 % modulus
        m += 1
    return m


def _adjacent_sums(w: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple((w[i] + w[i + 1]) % k for i in range(len(w) - 1))


def adjacent_sum_map(w: Word) -> Word:
    """Map a nonempty word to the mod-k sums of adjacent symbols.

    The output is one symbol shorter; each word has exactly k preimages.
    """
    if len(w) == 0:
        raise ValueError("adjacent-sum map needs a nonempty word")
    return Word(w.alphabet, _adjacent_sums(w.symbols, w.alphabet.k))


def adjacent_sum_preimages(x: Word) -> list[Word]:
    """The k words mapping to x under adjacent_sum_map, ordered by first symbol.

    Fixing the first symbol determines the rest: each next symbol is the
    current target symbol minus the previous one, mod k.
    """
    k = x.alphabet.k
    preimages = []
    for first in range(k):
        symbols = [first]
        for s in x.symbols:
            symbols.append((s - symbols[-1]) % k)
        preimages.append(Word(x.alphabet, tuple(symbols)))
    return preimages
