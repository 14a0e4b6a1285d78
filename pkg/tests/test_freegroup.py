from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbraid.errors import AlphabetError, GraphParseError, WordLengthError
from graphbraid.freegroup import (
    EMPTY,
    Endomorphism,
    FreeWord,
    apply,
    commutator,
    compose,
    cyclic_class,
    endo_equal,
    exponent_sum,
    format_word,
    gen,
    identity_endo,
    invert,
    multiply,
    parse_word,
    product,
    project,
    reduce,
)
from graphbraid.braid import full_twist, sigma_endo

from zoo import naive_reduce

ALPHABET = [1, 2, 3, 4, 5]
letters = st.tuples(st.sampled_from(ALPHABET), st.sampled_from([1, -1]))
raw_words = st.lists(letters, max_size=30)
words = raw_words.map(reduce)


def x(k, s=1):
    return gen(k, s)


def test_reduce_examples():
    assert reduce([(1, 1), (2, 1), (2, -1), (1, -1)]) == EMPTY
    w = product(x(1), x(2), x(1, -1))
    assert len(w) == 3
    nested = commutator(commutator(gen((3, 5)), gen((2, 5))), gen((1, 5)))
    assert len(nested) == 10


def test_product_and_commutator_examples():
    assert multiply(x(1), x(1, -1)) == EMPTY
    assert commutator(x(1), x(2)).letters == ((1, -1), (2, -1), (1, 1), (2, 1))
    assert invert(product(x(1), x(2, -1))) == product(x(2), x(1, -1))


def test_project_examples():
    assert project(product(x(1), x(2), x(1, -1)), {2}) == x(2)
    assert project(commutator(gen((1, 3)), gen((2, 3))), {(1, 3)}) == EMPTY
    w = product(x(1), x(2, -1), x(3))
    assert project(w, {1, 2, 3}) == w


def test_exponent_sum_examples():
    assert exponent_sum(product(x(1), x(1), x(2, -1)), 1) == 2
    assert exponent_sum(commutator(x(1), product(x(1), x(2))), 1) == 0
    assert exponent_sum(full_twist(3).word, (1, 2)) == 1


@given(raw_words)
def test_reduce_matches_naive_oracle(raw):
    assert reduce(raw).letters == naive_reduce(raw)


@given(raw_words)
def test_reduce_idempotent_and_cancels_inverse(raw):
    w = reduce(raw)
    assert reduce(w.letters) == w
    assert reduce(list(raw) + [(s, -e) for s, e in reversed(raw)]) == EMPTY


@given(words, words, words)
def test_group_axioms(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert ~~u == u
    assert u * ~u == EMPTY


@given(words, words, st.sampled_from(ALPHABET))
def test_exponent_sum_conjugation_invariant(u, v, s):
    assert exponent_sum(v * u * ~v, s) == exponent_sum(u, s)


@given(words, words, st.sets(st.sampled_from(ALPHABET)), st.sets(st.sampled_from(ALPHABET)))
def test_project_is_a_retraction(u, v, s, t):
    assert project(u * v, s) == project(u, s) * project(v, s)
    assert project(project(u, s), s) == project(u, s)
    assert project(project(u, s | t), s) == project(u, s)


endos = st.fixed_dictionaries({k: st.lists(letters, max_size=4).map(reduce) for k in ALPHABET}).map(
    lambda imgs: Endomorphism(tuple(ALPHABET), imgs)
)


@settings(max_examples=60)
@given(endos, endos, endos, words)
def test_compose_applies_right_factor_first(f, g, h, w):
    assert apply(compose(f, g), w) == apply(f, apply(g, w))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_endomorphism_examples():
    ident = identity_endo(ALPHABET)
    w = product(x(1), x(3, -1), x(5))
    assert apply(ident, w) == w
    assert endo_equal(ident, ident)
    for n in range(2, 6):
        for k in range(1, n):
            assert endo_equal(compose(sigma_endo(k, n, 1), sigma_endo(k, n, -1)), identity_endo(range(1, n + 1)))
            assert endo_equal(compose(sigma_endo(k, n, -1), sigma_endo(k, n, 1)), identity_endo(range(1, n + 1)))


def test_alphabet_errors():
    with pytest.raises(AlphabetError):
        Endomorphism((1, 2), {1: x(1)})
    with pytest.raises(AlphabetError):
        Endomorphism((1,), {1: x(2)})
    with pytest.raises(AlphabetError):
        compose(identity_endo([1, 2]), identity_endo([1, 2, 3]))
    with pytest.raises(AlphabetError):
        apply(identity_endo([1]), x(2))


def test_word_length_guard():
    doubling = Endomorphism((1,), {1: product(x(1), x(1))})
    w = x(1)
    with pytest.raises(WordLengthError) as info:
        for _ in range(20):
            w = apply(doubling, w, limit=1000)
    assert info.value.limit == 1000
    assert info.value.length > 1000


def test_bad_sign_rejected():
    with pytest.raises(ValueError):
        FreeWord([(1, 2)])


def test_parse_and_format_round_trip():
    text = "a_1_2 a_2_3^-1 x_4"
    w = parse_word(text)
    assert w.letters == (((1, 2), 1), ((2, 3), -1), (4, 1))
    assert format_word(w) == text
    assert parse_word("e") == EMPTY
    assert format_word(EMPTY) == "e"
    assert parse_word("a_1_2^3 a_1_2^-2") == gen((1, 2))


@pytest.mark.parametrize("bad", ["a_2_1", "b_1_2", "a_1_2^", "x_"])
def test_parse_rejects(bad):
    with pytest.raises(GraphParseError):
        parse_word(bad)


@given(words, st.integers(0, 10))
def test_cyclic_class_contains_rotations_and_inverse(w, k):
    cls = cyclic_class(w)
    assert cyclic_class(~w) == cls
    if w:
        t = w.letters
        rot = reduce(t[k % len(t):] + t[:k % len(t)])
        assert cyclic_class(rot) == cls
