from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from lensfill.blowup import (
    Witness,
    blowdown,
    blowup,
    enumerate_zero_words,
    enumerate_zero_words_bounded,
    reduce_to_zero,
)
from lensfill.cf import Admissible, cf_eval, is_zero_word, reverse
from lensfill.oracles import box_zero_words, triangulation_zero_words
from lensfill.verify import catalan

ZERO_WORDS = {k: enumerate_zero_words(k) for k in range(1, 11)}


def test_blowdown_examples():
    assert blowdown((2, 1, 2), 2) == (1, 1)
    assert blowdown((1, 1), 1) == (0,)
    assert blowdown((1, 2, 2, 1), 4) == (1, 2, 1)


@pytest.mark.parametrize("w, s", [((2, 2, 2), 2), ((1,), 1), ((1, 1), 3), ((0,), 1)])
def test_blowdown_rejects(w, s):
    with pytest.raises(ValueError):
        blowdown(w, s)


def test_blowup_examples():
    assert blowup((0,), 1) == (1, 1)
    assert blowup((1, 2, 1), 2) == (2, 1, 3, 1)
    assert blowup((1, 1), 2) == (2, 1, 2)
    assert blowup((), 1) == (1,)
    with pytest.raises(ValueError):
        blowup((1, 1), 4)


@given(st.lists(st.integers(-5, 9), min_size=1, max_size=10).map(tuple), st.data())
def test_blowup_blowdown_inverse(w, data):
    pos = data.draw(st.integers(1, len(w) + 1))
    assert blowdown(blowup(w, pos), pos) == w


@given(st.lists(st.integers(-3, 5), min_size=2, max_size=10).map(tuple), st.data())
def test_blowdown_blowup_inverse(w, data):
    ones = [i + 1 for i, x in enumerate(w) if x == 1]
    assume(ones)
    s = data.draw(st.sampled_from(ones))
    assert blowup(blowdown(w, s), s) == w


def test_reduce_examples():
    wit = reduce_to_zero((2, 1, 2))
    assert wit is not None and wit.indices == [2, 1]
    assert wit.replay((2, 1, 2)) == (0,)
    assert wit.rebuild() == (2, 1, 2)
    assert reduce_to_zero((0,)) == Witness(())
    assert reduce_to_zero((2, 2)) is None
    assert reduce_to_zero((1,)) is None
    assert reduce_to_zero((2, 1, 1, 1, 1, 2)) is None


def test_enumerate_small():
    assert ZERO_WORDS[1] == [(0,)]
    assert ZERO_WORDS[3] == [(1, 2, 1), (2, 1, 2)]
    assert set(ZERO_WORDS[4]) == {(1, 2, 2, 1), (2, 1, 3, 1), (1, 3, 1, 2), (3, 1, 2, 2), (2, 2, 1, 3)}


def test_bounded_examples():
    assert enumerate_zero_words_bounded((2, 2, 2)) == [(1, 2, 1), (2, 1, 2)]
    assert enumerate_zero_words_bounded((2, 2, 2, 3)) == [(1, 2, 2, 1), (2, 2, 1, 3)]
    assert enumerate_zero_words_bounded((0,)) == [(0,)]
    assert enumerate_zero_words_bounded((1, 1, 1)) == []
    assert enumerate_zero_words_bounded(()) == []


@pytest.mark.parametrize("k", range(1, 11))
def test_catalan_counts(k):
    assert len(ZERO_WORDS[k]) == catalan(k - 1)


@pytest.mark.parametrize("k", range(1, 8))
def test_catalan_brute_force(k):
    # entries of a length-k zero word never exceed k - 1
    assert box_zero_words((k,) * k, lower=1 if k > 1 else 0) == ZERO_WORDS[k]
    assert triangulation_zero_words((k,) * k) == ZERO_WORDS[k]


@pytest.mark.parametrize("k", range(2, 11))
def test_positivity_and_reversal_closure(k):
    zs = set(ZERO_WORDS[k])
    assert all(min(w) >= 1 for w in zs)
    assert {reverse(w) for w in zs} == zs
    assert all(is_zero_word(w) for w in zs)


@pytest.mark.parametrize("k", range(2, 8))
def test_blowdown_preserves_zero(k):
    for w in ZERO_WORDS[k]:
        for i, x in enumerate(w):
            if x == 1:
                v = blowdown(w, i + 1)
                assert cf_eval(v) == Admissible(Fraction(0))
                if min(v) >= 1 or v == (0,):
                    assert v in ZERO_WORDS[k - 1]


def test_lemma_equivalence_exhaustive():
    for k in range(1, 7):
        for w in product(range(1, 7), repeat=k):
            wit = reduce_to_zero(w)
            assert is_zero_word(w) == (wit is not None), w
            if wit is not None:
                assert wit.replay(w) == (0,)
                assert wit.rebuild() == w


def _filtered(bounds):
    return [w for w in ZERO_WORDS[len(bounds)] if all(x <= y for x, y in zip(w, bounds))]


def test_bounded_matches_filter_exhaustive():
    for k in range(1, 7):
        for b in product(range(7), repeat=k):
            assert enumerate_zero_words_bounded(b) == _filtered(b), b


@settings(max_examples=400, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=7, max_size=7).map(tuple))
def test_bounded_matches_filter_length_seven(b):
    assert enumerate_zero_words_bounded(b) == _filtered(b)
