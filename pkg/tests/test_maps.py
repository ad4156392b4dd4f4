"""Milk shuffle, its permutation and order, and the adjacent-sum map."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palcensus.maps import (
    Permutation,
    adjacent_sum_map,
    adjacent_sum_preimages,
    milk_shuffle,
    milk_shuffle_order,
    milk_shuffle_permutation,
    milk_unshuffle,
    permutation_order,
)
from palcensus.words import (
    Parity,
    Word,
    format_word,
    pal_prefix_orders,
    parse_word,
    short_border_lengths,
)


def letters(text):
    return parse_word(text, 26)


def binary(text):
    return parse_word(text, 2)


class TestMilkShuffle:
    def test_preserve(self):
        assert format_word(milk_shuffle(letters("preserve"))) == "perverse"

    def test_cider(self):
        assert format_word(milk_shuffle(letters("cider"))) == "cried"

    def test_binary(self):
        assert milk_shuffle(binary("01000010")) == binary("00110000")

    def test_single_letter(self):
        assert milk_shuffle(letters("a")) == letters("a")

    def test_empty(self):
        assert milk_shuffle(Word.of((), 2)) == Word.of((), 2)

    def test_preserves_length_and_alphabet(self):
        for n in range(0, 10):
            for w in itertools.product(range(2), repeat=n):
                word = Word.of(w, 2)
                image = milk_shuffle(word)
                assert len(image) == n
                assert image.alphabet == word.alphabet

    def test_inverse_examples(self):
        assert format_word(milk_unshuffle(letters("perverse"))) == "preserve"
        assert format_word(milk_unshuffle(letters("cried"))) == "cider"
        assert milk_unshuffle(Word.of((), 2)) == Word.of((), 2)

    def test_bijection_exhaustive(self):
        for n in range(0, 13):
            seen = set()
            for w in itertools.product(range(2), repeat=n):
                word = Word.of(w, 2)
                image = milk_shuffle(word)
                assert milk_unshuffle(image) == word
                seen.add(image.symbols)
            assert len(seen) == 2 ** n

    def test_borders_become_even_orders(self):
        for k in (2, 3):
            for n in range(1, 11 if k == 2 else 9):
                for w in itertools.product(range(k), repeat=n):
                    word = Word.of(w, k)
                    assert short_border_lengths(word) == pal_prefix_orders(
                        milk_shuffle(word), Parity.EVEN
                    )


class TestPermutation:
    def test_display_n7(self):
        assert milk_shuffle_permutation(7).images == (1, 7, 2, 6, 3, 5, 4)

    def test_identity(self):
        assert milk_shuffle_permutation(1).images == (1,)

    def test_n3(self):
        assert milk_shuffle_permutation(3).images == (1, 3, 2)

    def test_size_validation(self):
        with pytest.raises(ValueError, match="at least 1"):
            milk_shuffle_permutation(0)
        with pytest.raises(ValueError, match="not a permutation"):
            Permutation((1, 1))

    def test_realises_shuffle(self):
        for n in range(1, 10):
            images = milk_shuffle_permutation(n).images
            for w in itertools.islice(itertools.product(range(3), repeat=n), 50):
                shuffled = milk_shuffle(Word.of(w, 3)).symbols
                assert shuffled == tuple(w[images[j] - 1] for j in range(n))


def order_by_iteration(permutation):
    """Independent oracle: compose until the identity comes back."""
    images = permutation.images
    n = len(images)
    identity = tuple(range(1, n + 1))
    current = images
    steps = 1
    while current != identity:
        current = tuple(images[current[j] - 1] for j in range(n))
        steps += 1
        assert steps <= 10 ** 6
    return steps


class TestOrders:
    def test_identity_order(self):
        assert permutation_order(Permutation((1, 2, 3, 4, 5))) == 1

    def test_seven(self):
        p = milk_shuffle_permutation(7)
        assert permutation_order(p) == order_by_iteration(p) == 6

    def test_three(self):
        p = milk_shuffle_permutation(3)
        assert permutation_order(p) == order_by_iteration(p) == 2

    def test_cycle_lcm_matches_iteration(self):
        for n in range(1, 33):
            p = milk_shuffle_permutation(n)
            assert permutation_order(p) == order_by_iteration(p)

    def test_congruence_examples(self):
        # powers of 2 mod 13 run 2, 4, 8, 3, 6, 12; the -1 appears at step 6
        assert milk_shuffle_order(7) == 6
        # 2 is already -1 mod 3
        assert milk_shuffle_order(2) == 1
        # 4 is -1 mod 5
        assert milk_shuffle_order(3) == 2

    def test_congruence_matches_permutation(self):
        for n in range(2, 61):
            assert milk_shuffle_order(n) == permutation_order(
                milk_shuffle_permutation(n)
            )

    def test_degenerate_size(self):
        with pytest.raises(ValueError, match="n >= 2"):
            milk_shuffle_order(1)


class TestAdjacentSums:
    def test_binary(self):
        assert format_word(adjacent_sum_map(binary("010"))) == "11"

    def test_zeros(self):
        for k in (2, 5):
            zeros = Word.of((0,) * 6, k)
            assert adjacent_sum_map(zeros) == Word.of((0,) * 5, k)

    def test_ternary(self):
        assert format_word(adjacent_sum_map(parse_word("012", 3))) == "10"

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            adjacent_sum_map(Word.of((), 2))

    def test_preimages_binary(self):
        preimages = adjacent_sum_preimages(binary("11"))
        assert [format_word(w) for w in preimages] == ["010", "101"]

    def test_preimages_of_empty(self):
        preimages = adjacent_sum_preimages(Word.of((), 2))
        assert [w.symbols for w in preimages] == [(0,), (1,)]

    def test_exactly_k_to_one(self):
        for k in (2, 3):
            for n in range(0, 6):
                for x in itertools.product(range(k), repeat=n):
                    target = Word.of(x, k)
                    preimages = adjacent_sum_preimages(target)
                    assert len({w.symbols for w in preimages}) == k
                    assert [w.symbols[0] for w in preimages] == list(range(k))
                    for w in preimages:
                        assert adjacent_sum_map(w) == target

    def test_odd_orders_become_even_orders(self):
        for k in (2, 3):
            for n in range(1, 11 if k == 2 else 9):
                for w in itertools.product(range(k), repeat=n):
                    word = Word.of(w, k)
                    assert pal_prefix_orders(word, Parity.ODD) == pal_prefix_orders(
                        adjacent_sum_map(word), Parity.EVEN
                    )

    def test_even_to_odd_analogue_fails(self):
        # the analogous claim with parities swapped is false; the middle
        # letter of an odd palindrome breaks it
        counterexamples = []
        for n in range(1, 9):
            for w in itertools.product(range(2), repeat=n):
                word = Word.of(w, 2)
                if pal_prefix_orders(word, Parity.EVEN) != pal_prefix_orders(
                    adjacent_sum_map(word), Parity.ODD
                ):
                    counterexamples.append(word)
        assert counterexamples


@st.composite
def random_words(draw, min_size=0, max_size=40):
    k = draw(st.integers(2, 6))
    symbols = draw(
        st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size)
    )
    return Word.of(symbols, k)


@settings(deadline=None)
@given(random_words())
def test_shuffle_round_trip(word):
    assert milk_unshuffle(milk_shuffle(word)) == word
    assert milk_shuffle(milk_unshuffle(word)) == word


@settings(deadline=None)
@given(random_words(min_size=1))
def test_preimages_invert_adjacent_sums(word):
    image = adjacent_sum_map(word)
    assert word in adjacent_sum_preimages(image)
