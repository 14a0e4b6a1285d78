from __future__ import annotations

import random

import pytest

from graphbraid.braid import (
    BraidWord,
    PureBraidWord,
    a,
    artin_relators,
    braid_permutation,
    braid_relation_pairs,
    braid_to_endo,
    conjugate_by_sigma,
    conjugation_identities,
    five_case_relators,
    full_twist,
    identity,
    is_trivial_pure,
    parse_braid,
    pure_generator,
    pure_to_braid,
    pure_to_endo,
    sigma_endo,
)
from graphbraid.errors import GraphParseError, WordLengthError
from graphbraid.freegroup import EMPTY, apply, commutator, compose, endo_equal, exponent_vector, gen, product
from graphbraid.graphs import Permutation

from zoo import artin_image, artin_is_identity, pure_word_letters, random_word


def pairs(n):
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def test_sigma_endo_examples():
    f = sigma_endo(1, 2)
    assert f.images[1] == product(gen(1), gen(2), gen(1, -1))
    assert f.images[2] == gen(1)
    assert sigma_endo(1, 3).images[3] == gen(3)
    with pytest.raises(ValueError):
        sigma_endo(3, 3)


def test_sigma_endo_matches_oracle():
    for n in range(2, 6):
        for k in range(1, n):
            for s in (1, -1):
                img = artin_image([(k, s)], n)
                assert {x: w.letters for x, w in sigma_endo(k, n, s).images.items()} == img


def test_braid_to_endo_examples():
    assert endo_equal(braid_to_endo(BraidWord(3)), identity(3))
    assert braid_to_endo(parse_braid("s1 s2 s1", 3)) == braid_to_endo(parse_braid("s2 s1 s2", 3))
    assert braid_to_endo(parse_braid("s1 s3", 4)) == braid_to_endo(parse_braid("s3 s1", 4))


def test_braid_to_endo_is_a_homomorphism():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 5)
        u = BraidWord(n, [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))])
        v = BraidWord(n, [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))])
        assert braid_to_endo(u * v) == compose(braid_to_endo(u), braid_to_endo(v))
        oracle = artin_image((u * v).letters, n)
        assert {x: w.letters for x, w in braid_to_endo(u * v).images.items()} == oracle


def test_pure_generator_examples():
    assert pure_generator(1, 2, 2).letters == ((1, 1), (1, 1))
    assert str(pure_generator(1, 3, 3)) == "s2 s1 s1 s2^-1"
    assert str(pure_generator(2, 3, 3)) == "s2 s2"
    for n in range(2, 7):
        for i, j in pairs(n):
            assert len(pure_generator(i, j, n).letters) == 2 * (j - i)


def test_pure_to_endo_examples():
    twice = compose(sigma_endo(1, 2), sigma_endo(1, 2))
    assert pure_to_endo(PureBraidWord(2, a(1, 2))) == twice
    assert endo_equal(pure_to_endo(PureBraidWord(3, EMPTY)), identity(3))
    d = pure_to_endo(full_twist(3))
    for i, j in pairs(3):
        g = pure_to_endo(PureBraidWord(3, a(i, j)))
        assert compose(d, g) == compose(g, d)


def test_pure_to_endo_agrees_with_sigma_expansion():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 5)
        w = PureBraidWord(n, random_word(rng, pairs(n), rng.randint(0, 6)))
        assert pure_to_endo(w) == braid_to_endo(pure_to_braid(w))


def test_is_trivial_pure_examples():
    assert is_trivial_pure(PureBraidWord(2, a(1, 2) * a(1, 2, -1)))
    assert not is_trivial_pure(PureBraidWord(3, commutator(a(1, 3), a(2, 3))))
    for r in artin_relators(range(1, 5)):
        assert is_trivial_pure(PureBraidWord(4, r))


def test_is_trivial_pure_matches_oracle_on_random_words():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 4)
        w = PureBraidWord(n, random_word(rng, pairs(n), rng.randint(0, 8)))
        expected = artin_is_identity(pure_word_letters(w.word), n)
        assert is_trivial_pure(w) == expected
        if expected:
            assert not exponent_vector(w.word)


def test_is_trivial_pure_guard():
    w = PureBraidWord(4, a(1, 4) ** 30 * a(2, 4) ** 30 * a(1, 4) ** -30 * a(2, 4) ** -30)
    with pytest.raises(WordLengthError):
        is_trivial_pure(w, limit=50)


def test_conjugate_by_sigma_examples():
    assert conjugate_by_sigma(1, (1, 2), 3).word == a(1, 2)
    assert conjugate_by_sigma(2, (1, 2), 3).word == a(1, 3)
    assert conjugate_by_sigma(3, (1, 2), 4).word == a(1, 2)


def test_literal_k_equals_j_case_disagrees_with_artin_action():
    # The printed k=j case gives a_{j,j+1}; direct computation gives a_{i,j+1}.
    direct = braid_to_endo(BraidWord(3, [(2, 1)]) * pure_generator(1, 2, 3) * BraidWord(3, [(2, -1)]))
    assert direct == pure_to_endo(PureBraidWord(3, a(1, 3)))
    assert direct != pure_to_endo(PureBraidWord(3, a(2, 3)))


def test_full_twist_examples():
    assert full_twist(2).word == a(1, 2)
    assert full_twist(3).word == product(a(1, 2), a(1, 3), a(2, 3))
    assert full_twist(4).word == product(a(1, 2), a(1, 3), a(2, 3), a(1, 4), a(2, 4), a(3, 4))


def test_full_twist_is_the_square_of_the_half_twist():
    for n in range(2, 6):
        half = [(k, 1) for m in range(n - 1, 0, -1) for k in range(1, m + 1)]
        assert braid_to_endo(BraidWord(n, half + half)) == pure_to_endo(full_twist(n))


def test_braid_permutation():
    assert braid_permutation(BraidWord(3, [(1, 1)])) == Permutation.from_cycles(3, (1, 2))
    assert braid_permutation(parse_braid("s1 s2", 3)).images == (2, 3, 1)
    for n in range(2, 6):
        for i, j in pairs(n):
            assert braid_permutation(pure_generator(i, j, n)).is_identity()
    rng = random.Random(5)
    for _ in range(30):
        u = BraidWord(5, [(rng.randint(1, 4), rng.choice((1, -1))) for _ in range(5)])
        v = BraidWord(5, [(rng.randint(1, 4), rng.choice((1, -1))) for _ in range(5)])
        assert braid_permutation(u * v) == braid_permutation(u) * braid_permutation(v)


def test_braid_permutation_matches_action_on_conjugacy_classes():
    # sigma sends x_k to a conjugate of x_{p(k)}; check via abelianization.
    rng = random.Random(9)
    for _ in range(20):
        b = BraidWord(4, [(rng.randint(1, 3), rng.choice((1, -1))) for _ in range(6)])
        p = braid_permutation(b)
        f = braid_to_endo(b)
        for x in range(1, 5):
            assert exponent_vector(f.images[x]) == {p(x): 1}


def test_relation_suites_small():
    for n in range(2, 5):
        for lhs, rhs in braid_relation_pairs(n):
            assert braid_to_endo(lhs) == braid_to_endo(rhs)
        for r in five_case_relators(n) + conjugation_identities(n) + artin_relators(range(1, n + 1)):
            assert is_trivial_pure(PureBraidWord(n, r))


def test_parse_braid():
    assert parse_braid("s1 s2^-1 e s1^2", 3).letters == ((1, 1), (2, -1), (1, 1), (1, 1))
    with pytest.raises(GraphParseError):
        parse_braid("s3", 3)
    with pytest.raises(GraphParseError):
        parse_braid("t1", 3)


def test_pure_braid_word_validation():
    with pytest.raises(ValueError):
        PureBraidWord(3, a(1, 4))
    with pytest.raises(ValueError):
        pure_generator(2, 2, 3)


def test_sigma_inverse_pairs_cancel_on_words():
    for n in range(2, 5):
        for k in range(1, n):
            w = product(*(gen(x) for x in range(1, n + 1)))
            back = apply(sigma_endo(k, n, -1), apply(sigma_endo(k, n, 1), w))
            assert back == w
