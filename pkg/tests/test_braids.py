import random

import pytest

from src.algebra import (
    BETA,
    AlphabetError,
    BraidIndexError,
    BraidWord,
    Perm,
    UnsupportedOperation,
    WordMode,
    act_on_loop,
    act_on_path,
    induced_permutation,
    parse_braid,
    parse_word,
    r_beta_gamma,
    reflect_loop,
    reflect_path,
    rho,
)
from src.algebra.words import exponent_vector, generator, reduce
from src.utils import apply_braid
from src.verification import EXPECTED_BETA_RHO, EXPECTED_R_BETA


def random_braid(rng: random.Random, strand_count: int = 4, max_length: int = 12) -> BraidWord:
    letters = tuple(
        (rng.randint(1, strand_count - 1), rng.choice((1, -1)))
        for _ in range(rng.randint(0, max_length))
    )
    return BraidWord(strand_count, letters)


# --- Artin action ---

def test_single_generator_action(gamma):
    s1 = parse_braid("s1")
    g1, g2, g3 = (generator(gamma, n) for n in ("g1", "g2", "g3"))
    assert str(act_on_loop(s1, g1)) == "g1 g2 g1^-1"
    assert act_on_loop(s1, g2) == g1
    assert act_on_loop(s1, g3) == g3


def test_inverse_generator_action(gamma):
    s1_inv = parse_braid("s1^-1")
    assert str(act_on_loop(s1_inv, generator(gamma, "g1"))) == "g2"
    assert str(act_on_loop(s1_inv, generator(gamma, "g2"))) == "g2^-1 g1 g2"


def test_rightmost_letter_acts_first(gamma):
    braid = parse_braid("s1 s2")
    # s2 sends g3 to g2, then s1 sends g2 to g1
    assert str(act_on_loop(braid, generator(gamma, "g3"))) == "g1"


def test_braid_relations_hold(gamma):
    word = parse_word("g1 g2^-1 g3 g4 g1", gamma)
    assert act_on_loop(parse_braid("s1 s2 s1"), word) == act_on_loop(parse_braid("s2 s1 s2"), word)
    assert act_on_loop(parse_braid("s1 s3"), word) == act_on_loop(parse_braid("s3 s1"), word)


@pytest.mark.parametrize("seed", range(1000))
def test_boundary_word_is_invariant(seed, gamma):
    braid = random_braid(random.Random(seed))
    boundary = parse_word("g1 g2 g3 g4", gamma)
    assert act_on_loop(braid, boundary) == boundary


@pytest.mark.parametrize("seed", range(50))
def test_braid_times_inverse_acts_trivially(seed, gamma):
    rng = random.Random(seed)
    braid = random_braid(rng)
    word = reduce(
        [(rng.choice(gamma.names), rng.choice((1, -1))) for _ in range(8)], gamma
    )
    assert act_on_loop(braid * braid.inverse(), word) == word
    assert act_on_loop(braid.inverse(), act_on_loop(braid, word)) == word


def test_strand_count_must_match_alphabet(ab):
    with pytest.raises(AlphabetError):
        act_on_loop(BETA, generator(ab, "a"))


def test_braid_index_validation():
    with pytest.raises(BraidIndexError):
        BraidWord(4, ((4, 1),))
    with pytest.raises(BraidIndexError):
        BraidWord(1)


# --- Reflection ---

def test_reflection_needs_involutory_mode(gamma):
    with pytest.raises(UnsupportedOperation):
        reflect_loop(generator(gamma, "g1"))


def test_reflection_relabels(gamma):
    word = parse_word("g1 g2 g4", gamma, WordMode.INVOLUTORY)
    assert str(reflect_loop(word)) == "g4 g3 g1"
    assert reflect_loop(reflect_loop(word)) == word


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_r_beta_gamma_matches_expected_words(i):
    assert str(r_beta_gamma(BETA, i)) == EXPECTED_R_BETA[f"g{i}"]


# --- Based paths ---

@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_beta_on_rho_paths(j, gamma):
    path = act_on_path(BETA, rho(j, gamma, WordMode.INVOLUTORY))
    assert str(path) == EXPECTED_BETA_RHO[f"rho{j}"]


def test_path_generator_rules(gamma):
    s1 = parse_braid("s1")
    assert str(act_on_path(s1, rho(1, gamma))) == "g1 rho2"
    assert str(act_on_path(s1, rho(2, gamma))) == "rho1"
    s1_inv = parse_braid("s1^-1")
    assert str(act_on_path(s1_inv, rho(1, gamma))) == "rho2"
    assert str(act_on_path(s1_inv, rho(2, gamma))) == "g2^-1 rho1"


@pytest.mark.parametrize("seed", range(30))
def test_path_terminal_follows_induced_permutation(seed, gamma):
    braid = random_braid(random.Random(seed))
    perm = induced_permutation(braid)
    for j in range(1, 5):
        assert act_on_path(braid, rho(j, gamma)).terminal == perm(j)


@pytest.mark.parametrize("seed", range(100))
def test_loop_image_is_path_conjugate(seed, gamma):
    braid = random_braid(random.Random(seed))
    perm = induced_permutation(braid)
    for j, name in enumerate(gamma.names, 1):
        path = act_on_path(braid, rho(j, gamma))
        loop = generator(gamma, gamma.names[perm(j) - 1])
        assert act_on_loop(braid, generator(gamma, name)) == path.prefix * loop * path.prefix.inverse()


@pytest.mark.parametrize("seed", range(100))
def test_abelianized_action_permutes_exponents(seed, gamma):
    rng = random.Random(seed)
    braid = random_braid(rng)
    perm = induced_permutation(braid)
    word = reduce([(rng.choice(gamma.names), rng.choice((1, -1))) for _ in range(10)], gamma)
    before = exponent_vector(word)
    after = exponent_vector(act_on_loop(braid, word))
    for j, name in enumerate(gamma.names, 1):
        assert after[gamma.names[perm(j) - 1]] == before[name]


@pytest.mark.parametrize("seed", range(50))
def test_action_is_a_homomorphism_of_words(seed, gamma):
    rng = random.Random(seed)
    braid = random_braid(rng)
    x, y = (
        reduce([(rng.choice(gamma.names), rng.choice((1, -1))) for _ in range(8)], gamma)
        for _ in range(2)
    )
    assert act_on_loop(braid, x * y) == act_on_loop(braid, x) * act_on_loop(braid, y)
    assert act_on_loop(braid, x.inverse()) == act_on_loop(braid, x).inverse()


def test_reflect_path(gamma):
    path = act_on_path(BETA, rho(4, gamma, WordMode.INVOLUTORY))
    assert str(reflect_path(path)) == "g2 g4 rho3"


# --- Permutations ---

def test_induced_permutations_of_beta():
    assert induced_permutation(BETA) == Perm.from_cycles([(2, 4)], 4)
    assert str(induced_permutation(BETA, with_reflection=True)) == "(1 4 3 2)"


# --- Front-end helper ---

@pytest.mark.parametrize(
    "target, reflect, involutory, expected",
    [
        ("gamma4", True, True, "g2 g4 g3 g4 g2"),
        ("g3", True, False, "g2"),
        ("rho3", False, True, "rho3"),
        ("g2 g1", False, False, "g1 g1 g2 g1^-1"),
    ],
)
def test_apply_braid(target, reflect, involutory, expected):
    braid = "s1" if target == "g2 g1" else "s1^2 s3 s2 s3^-1 s1^-2"
    assert apply_braid(braid, target, reflect, involutory) == expected
