import random

import pytest

from src.algebra import (
    AlgebraError,
    Alphabet,
    AlphabetError,
    MissingImageError,
    ModeError,
    UnsupportedOperation,
    Word,
    WordMode,
)
from src.algebra.words import (
    exponent_vector,
    generator,
    identity,
    reduce,
    substitute,
    to_free,
    to_involutory,
)


def random_letters(rng: random.Random, alphabet: Alphabet, length: int):
    return [(rng.choice(alphabet.names), rng.choice((1, -1))) for _ in range(length)]


# --- Alphabet ---

def test_alphabet_rejects_duplicates_and_bad_names():
    with pytest.raises(AlphabetError):
        Alphabet.of("a", "a")
    with pytest.raises(AlphabetError):
        Alphabet.of("1a")


def test_alphabet_reserves_identity_name():
    with pytest.raises(AlphabetError, match="reserved"):
        Alphabet.of("e", "a")


def test_indexed_alphabet():
    alphabet = Alphabet.indexed("g", 4)
    assert alphabet.names == ("g1", "g2", "g3", "g4")
    assert alphabet.position("g3") == 2
    assert "g5" not in alphabet


# --- Reduction ---

def test_free_reduction_cancels_inverse_pairs(ab):
    word = reduce([("a", 1), ("b", 1), ("b", -1), ("a", -1), ("b", 1)], ab)
    assert str(word) == "b"


def test_involutory_reduction_cancels_squares(ab):
    word = reduce([("a", 1), ("b", -1), ("b", 1), ("a", 1), ("a", -1)], ab, WordMode.INVOLUTORY)
    assert str(word) == "a"


def test_identity_prints_as_e(ab):
    assert str(identity(ab)) == "e"
    assert identity(ab).is_identity


def test_unreduced_letters_rejected(ab):
    with pytest.raises(AlgebraError):
        Word(ab, (("a", 1), ("a", -1)))
    with pytest.raises(AlgebraError):
        Word(ab, (("a", 1), ("a", 1)), WordMode.INVOLUTORY)


def test_unknown_generator_rejected(ab):
    with pytest.raises(AlphabetError):
        reduce([("c", 1)], ab)


@pytest.mark.parametrize("seed", range(20))
def test_reduce_is_idempotent_and_group_laws_hold(seed, ab):
    rng = random.Random(seed)
    x = reduce(random_letters(rng, ab, rng.randint(0, 12)), ab)
    y = reduce(random_letters(rng, ab, rng.randint(0, 12)), ab)
    z = reduce(random_letters(rng, ab, rng.randint(0, 12)), ab)
    assert reduce(x.letters, ab) == x
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity
    assert (x * y).inverse() == y.inverse() * x.inverse()


@pytest.mark.parametrize("seed", range(10))
def test_involutory_projection_is_a_homomorphism(seed, ab):
    rng = random.Random(seed)
    x = reduce(random_letters(rng, ab, 10), ab)
    y = reduce(random_letters(rng, ab, 10), ab)
    assert to_involutory(x * y) == to_involutory(x) * to_involutory(y)


@pytest.mark.parametrize("seed", range(20))
def test_involutory_reduce_is_idempotent(seed, ab):
    rng = random.Random(seed)
    x = reduce(random_letters(rng, ab, rng.randint(0, 16)), ab, WordMode.INVOLUTORY)
    assert reduce(x.letters, ab, WordMode.INVOLUTORY) == x
    assert all(a != b for (a, _), (b, _) in zip(x.letters, x.letters[1:]))
    assert all(sign == 1 for _, sign in x.letters)


# --- Arithmetic ---

def test_mode_mismatch(ab):
    a = generator(ab, "a")
    with pytest.raises(ModeError):
        a * generator(ab, "a", WordMode.INVOLUTORY)


def test_alphabet_mismatch(ab):
    with pytest.raises(AlphabetError):
        generator(ab, "a") * generator(Alphabet.of("a", "c"), "a")


def test_power(ab):
    a = generator(ab, "a")
    assert str(a ** 3) == "a a a"
    assert str(a ** -2) == "a^-1 a^-1"
    assert (a ** 0).is_identity


def test_involutory_word_is_its_own_inverse_letterwise(ab):
    w = reduce([("a", 1), ("b", 1)], ab, WordMode.INVOLUTORY)
    assert str(w.inverse()) == "b a"
    assert (w * w.inverse()).is_identity


def test_in_mode_only_projects_downwards(ab):
    w = reduce([("a", -1), ("b", 1)], ab)
    assert str(w.in_mode(WordMode.INVOLUTORY)) == "a b"
    with pytest.raises(ModeError):
        w.in_mode(WordMode.INVOLUTORY).in_mode(WordMode.FREE)
    assert str(to_free(w.in_mode(WordMode.INVOLUTORY))) == "a b"


# --- Substitution and abelianization ---

def test_substitute_handles_inverse_letters(ab):
    a, b = generator(ab, "a"), generator(ab, "b")
    images = {"a": a * b, "b": b}
    assert str(substitute(a.inverse() * b, images)) == "b^-1 a^-1 b"


def test_substitute_missing_image(ab):
    with pytest.raises(MissingImageError):
        substitute(generator(ab, "b"), {"a": generator(ab, "a")})


def test_exponent_vector(ab):
    w = reduce([("a", 1), ("b", -1), ("a", 1), ("b", -1), ("b", -1)], ab)
    vector = exponent_vector(w)
    assert vector["a"] == 2
    assert vector["b"] == -3
    assert vector.dot((1, 1)) == -1


def test_exponent_vector_of_involutory_word_unsupported(ab):
    with pytest.raises(UnsupportedOperation):
        exponent_vector(generator(ab, "a", WordMode.INVOLUTORY))


@pytest.mark.parametrize("seed", range(20))
def test_substitute_is_a_homomorphism(seed, ab):
    rng = random.Random(seed)
    gamma = Alphabet.indexed("g", 3)
    images = {name: reduce(random_letters(rng, gamma, rng.randint(0, 5)), gamma) for name in ab}
    x = reduce(random_letters(rng, ab, rng.randint(0, 10)), ab)
    y = reduce(random_letters(rng, ab, rng.randint(0, 10)), ab)
    assert substitute(x * y, images) == substitute(x, images) * substitute(y, images)
    assert substitute(x.inverse(), images) == substitute(x, images).inverse()


@pytest.mark.parametrize("seed", range(20))
def test_exponent_vector_is_additive(seed, ab):
    rng = random.Random(seed)
    x = reduce(random_letters(rng, ab, rng.randint(0, 12)), ab)
    y = reduce(random_letters(rng, ab, rng.randint(0, 12)), ab)
    assert exponent_vector(x * y) == exponent_vector(x) + exponent_vector(y)
