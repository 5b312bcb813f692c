import random

import pytest

from src.algebra import (
    AFFINE_IMAGES,
    BETA,
    AffineMap,
    AlphabetError,
    BraidWord,
    DegreeLimitError,
    HomCandidate,
    WordMode,
    act_on_loop,
    boundary_word,
    candidate_spec,
    certify_braid,
    check_certificate,
    delta_words,
    f_word,
    induced_permutation,
    infinite_order_certificate,
    is_transitive,
    parse_braid,
    parse_perm,
    parse_word,
    peripheral_presentation,
    puncture_orbit,
    quotient_presentation,
    reflect_loop,
    search,
    svk_injectivity,
    verify_hom,
    word_image,
)
from src.algebra.words import reduce, to_involutory
from src.verification import EXPECTED_DELTA, EXPECTED_F, PSI_BAR


@pytest.fixture(name="psi_bar")
def psi_bar_candidate() -> HomCandidate:
    return HomCandidate(4, tuple((name, parse_perm(cycles, 4)) for name, cycles in PSI_BAR.items()))


# --- Quotient words ---

def test_quotient_presentation_shape():
    presentation = quotient_presentation(BETA)
    assert presentation.generators == ("g1", "g2", "g3", "g4")
    assert len(presentation.relators) == 8
    assert [str(r) for r in presentation.relators[:4]] == [f"g{i} g{i}" for i in range(1, 5)]
    assert str(presentation.relators[6]) == "g3 g2"


def test_delta_and_f_words():
    assert [str(w) for w in delta_words(BETA)] == list(EXPECTED_DELTA.values())
    assert puncture_orbit(BETA) == EXPECTED_F["orbit"]
    assert str(f_word(BETA)) == EXPECTED_F["f"]


def test_f_word_absent_when_not_transitive():
    assert f_word(BraidWord(4)) is None


def test_boundary_word(gamma):
    assert str(boundary_word(gamma)) == "g1 g2 g3 g4"
    assert boundary_word(gamma).mode is WordMode.INVOLUTORY


# --- Certificates ---

@pytest.mark.parametrize("seed", range(20))
def test_reflected_action_is_trivial_in_the_quotient(seed, psi_bar, gamma):
    rng = random.Random(seed)
    loop = reduce([(rng.choice(gamma.names), rng.choice((1, -1))) for _ in range(10)], gamma)
    moved = reflect_loop(to_involutory(act_on_loop(BETA, loop)))
    images = psi_bar.as_dict()
    assert word_image(moved, images, 4) == word_image(to_involutory(loop), images, 4)


def test_psi_bar_is_a_valid_certificate(psi_bar):
    certificate = check_certificate(BETA, psi_bar)
    assert certificate.valid
    assert str(certificate.f_image) == "(3 4)"
    assert str(certificate.a_image) == "(1 2)"
    assert str(certificate.u_image) == "(1 2)(3 4)"
    assert certificate.recheck() == certificate


def test_flags_fail_independently():
    trivial = HomCandidate(4, tuple((f"g{i}", parse_perm("()", 4)) for i in range(1, 5)))
    certificate = check_certificate(BETA, trivial)
    assert certificate.relators_killed
    assert certificate.transitive
    assert not certificate.klein_four_fa
    assert not certificate.u_nontrivial_involution
    assert not certificate.valid


def test_certificate_images_must_cover_the_alphabet():
    with pytest.raises(AlphabetError):
        check_certificate(BETA, HomCandidate(4, (("g1", parse_perm("()", 4)),)))


def test_certify_beta():
    certificate = certify_braid(BETA, degree_max=4)
    assert certificate is not None
    assert certificate.valid
    # S2 and S3 contain no Klein four subgroup
    assert certificate.hom.degree == 4
    assert verify_hom(quotient_presentation(BETA), certificate.hom.as_dict())


def test_identity_braid_is_not_certified():
    assert certify_braid(parse_braid("e")) is None


def test_certify_degree_cap():
    with pytest.raises(DegreeLimitError):
        certify_braid(BETA, degree_max=7)


# --- Affine certificate ---

def test_affine_composition_is_left_to_right():
    a, b = AffineMap(-1, 0), AffineMap(-1, 2)
    assert (a * b)(5) == b(a(5))
    assert (a * a.inverse()).is_identity


def test_affine_images_satisfy_peripheral_relators():
    assert verify_hom(peripheral_presentation(), AFFINE_IMAGES)


def test_infinite_order_certificate():
    group = peripheral_presentation()
    certificate = infinite_order_certificate(parse_word("u1 u2", group.alphabet))
    assert certificate.translation == 2
    assert certificate.infinite_order
    assert not infinite_order_certificate(parse_word("u1", group.alphabet)).infinite_order
    assert not infinite_order_certificate(parse_word("v", group.alphabet)).infinite_order


def test_infinite_order_certificate_alphabet(ab):
    with pytest.raises(AlphabetError):
        infinite_order_certificate(parse_word("a", ab))


# --- Boundary injectivity ---

def test_svk_injectivity(t34):
    knot, result = t34
    assert svk_injectivity(result, knot.meridian, knot.longitude) == 8


# --- Invariance and self-checking ---

@pytest.mark.parametrize("seed", range(20))
def test_f_word_ignores_cancelling_pairs(seed):
    rng = random.Random(seed)
    letters = list(BETA.letters)
    for _ in range(3):
        index = rng.randint(1, 3)
        sign = rng.choice((1, -1))
        position = rng.randint(0, len(letters))
        letters[position:position] = [(index, sign), (index, -sign)]
    padded = BraidWord(4, tuple(letters))
    assert f_word(padded) == f_word(BETA)
    assert delta_words(padded) == delta_words(BETA)


def test_identity_braid_certificate_is_invalid(psi_bar):
    certificate = check_certificate(BraidWord(4), psi_bar)
    assert not certificate.transitive
    assert certificate.f_word is None
    assert not certificate.valid


def test_non_transitive_braid_is_not_certified():
    braid = parse_braid("s1 s2 s3")
    reflected = induced_permutation(braid, with_reflection=True)
    assert str(reflected) == "(1 3)"
    assert not is_transitive([reflected])
    assert certify_braid(braid, degree_max=4) is None


def test_identity_braid_has_no_candidates():
    identity_braid = parse_braid("e")
    for degree in (2, 3, 4):
        assert search(candidate_spec(identity_braid, degree)) == []
