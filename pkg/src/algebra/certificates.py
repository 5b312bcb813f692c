"""
Certificates for the quotient group attached to a 4-strand braid.

For a braid b the quotient group has generators g1..g4 and relators
    g_i^2   and   g_i r(b(g_i))      for i = 1..4,
where r(b(g_i)) is read in involutory mode. A homomorphism psi into S_n
certifies b when
    (a) psi kills every relator,
    (b) psi(f) and psi(a) are distinct commuting non-trivial involutions,
    (c) psi(u) is a non-trivial involution,
with u = g1 g2 g3 g4 the boundary word, a = g1, and f the product of the
reflected path words along the orbit of puncture 1 under r.b. When r.b is
not transitive there is no f and the braid cannot be certified.

The four relators generate the same normal subgroup N as g^-1 r(b(g)) for
every loop g. Both g -> r(b(g)) N and g -> g N are homomorphisms F -> F/N
that agree on g1..g4, so r.b induces the identity automorphism of F/N and
r(b(g)) = g mod N for all g.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.algebra.braids import (
    BraidWord,
    act_on_path,
    gamma_alphabet,
    induced_permutation,
    r_beta_gamma,
    reflect_loop,
    rho,
)
from src.algebra.cosets import EnumResult, follow
from src.algebra.errors import AlphabetError, CosetLimitExceeded, DegreeLimitError
from src.algebra.hom_search import HomCandidate, SearchSpec, search
from src.algebra.perms import Perm, is_klein_pair, is_transitive, orbit
from src.algebra.presentations import Presentation, evaluate, verify_hom, word_image
from src.algebra.words import (
    Alphabet,
    Word,
    WordMode,
    generator,
    identity,
    multiply,
    reduce,
    to_free,
)
from src.config import DEFAULT_DEGREE_MAX, MAX_SEARCH_DEGREE

logger = logging.getLogger(__name__)


def quotient_presentation(braid: BraidWord) -> Presentation:
    alphabet = gamma_alphabet(braid.strand_count)
    relators = [generator(alphabet, name) ** 2 for name in alphabet.names]
    for i, name in enumerate(alphabet.names, 1):
        g = generator(alphabet, name)
        relators.append(multiply(g, to_free(r_beta_gamma(braid, i, alphabet))))
    return Presentation(alphabet, tuple(relators))


def boundary_word(alphabet: Alphabet) -> Word:
    return reduce([(name, 1) for name in alphabet.names], alphabet, WordMode.INVOLUTORY)


def delta_words(braid: BraidWord) -> Tuple[Word, ...]:
    """delta_i = r(prefix of b(rho_i)) in involutory mode; the terminal parts cancel."""
    alphabet = gamma_alphabet(braid.strand_count)
    out = []
    for j in range(1, braid.strand_count + 1):
        path = act_on_path(braid, rho(j, alphabet, WordMode.INVOLUTORY))
        out.append(reflect_loop(path.prefix))
    return tuple(out)


def puncture_orbit(braid: BraidWord) -> List[int]:
    """Orbit of puncture 1 under r.b, in the order it is visited."""
    return orbit([induced_permutation(braid, with_reflection=True)], 1)


def f_word(braid: BraidWord) -> Optional[Word]:
    """delta words multiplied along the orbit of puncture 1; None when r.b is not transitive."""
    perm = induced_permutation(braid, with_reflection=True)
    if not is_transitive([perm]):
        return None
    alphabet = gamma_alphabet(braid.strand_count)
    deltas = delta_words(braid)
    word = identity(alphabet, WordMode.INVOLUTORY)
    for point in puncture_orbit(braid):
        word = word * deltas[point - 1]
    return word


@dataclass(frozen=True)
class BraidCertificate:
    braid: BraidWord
    hom: HomCandidate
    transitive: bool
    relators_killed: bool
    klein_four_fa: bool
    u_nontrivial_involution: bool
    f_word: Optional[Word]
    u_word: Word
    a_word: Word
    f_image: Optional[Perm]
    a_image: Perm
    u_image: Perm

    @property
    def valid(self) -> bool:
        return (
            self.transitive
            and self.relators_killed
            and self.klein_four_fa
            and self.u_nontrivial_involution
        )

    def recheck(self) -> "BraidCertificate":
        """Recompute every flag from the braid and the images alone."""
        return check_certificate(self.braid, self.hom)


def check_certificate(braid: BraidWord, hom: HomCandidate) -> BraidCertificate:
    alphabet = gamma_alphabet(braid.strand_count)
    images = hom.as_dict()
    if set(images) != set(alphabet.names):
        raise AlphabetError(f"certificate images must cover exactly [{alphabet}]")
    transitive = is_transitive([induced_permutation(braid, with_reflection=True)])
    relators_killed = verify_hom(quotient_presentation(braid), images).ok
    u_word = boundary_word(alphabet)
    a_word = generator(alphabet, alphabet.names[0], WordMode.INVOLUTORY)
    u_image = word_image(u_word, images, hom.degree)
    a_image = word_image(a_word, images, hom.degree)
    word = f_word(braid) if transitive else None
    f_image = word_image(word, images, hom.degree) if word is not None else None
    return BraidCertificate(
        braid=braid,
        hom=hom,
        transitive=transitive,
        relators_killed=relators_killed,
        klein_four_fa=f_image is not None and is_klein_pair(f_image, a_image),
        u_nontrivial_involution=not u_image.is_identity and (u_image * u_image).is_identity,
        f_word=word,
        u_word=u_word,
        a_word=a_word,
        f_image=f_image,
        a_image=a_image,
        u_image=u_image,
    )


def candidate_spec(braid: BraidWord, degree: int) -> SearchSpec:
    """Search constraints used when certifying: involutions only, u non-trivial, u f a of order 2."""
    alphabet = gamma_alphabet(braid.strand_count)
    u = boundary_word(alphabet)
    a = generator(alphabet, alphabet.names[0], WordMode.INVOLUTORY)
    order_two = [u, a]
    word = f_word(braid)
    if word is not None:
        order_two.insert(1, word)
    return SearchSpec(
        quotient_presentation(braid),
        degree,
        restrict_to_involutions=True,
        require_nontrivial=u,
        require_order_two=tuple(order_two),
    )


def certify_braid(
    braid: BraidWord, degree_max: int = DEFAULT_DEGREE_MAX, workers: int = 1
) -> Optional[BraidCertificate]:
    """First valid certificate over degrees 2..degree_max, or None."""
    if degree_max > MAX_SEARCH_DEGREE:
        raise DegreeLimitError(f"degree_max must be at most {MAX_SEARCH_DEGREE}, got {degree_max}")
    if f_word(braid) is None:
        logger.info("braid %s: reflected permutation is not transitive, no certificate", braid)
        return None
    for degree in range(2, degree_max + 1):
        for candidate in search(candidate_spec(braid, degree), workers):
            certificate = check_certificate(braid, candidate)
            if certificate.valid:
                logger.info("braid %s certified in degree %d: %s", braid, degree, candidate)
                return certificate
        logger.debug("braid %s: no certificate in degree %d", braid, degree)
    return None


# --- Peripheral subgroup acting on the line ---


@dataclass(frozen=True)
class AffineMap:
    """x -> sign * x + shift, composed left to right like permutations."""

    sign: int = 1
    shift: int = 0

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        return AffineMap(self.sign * other.sign, other.sign * self.shift + other.shift)

    def __call__(self, x: int) -> int:
        return self.sign * x + self.shift

    def inverse(self) -> "AffineMap":
        return AffineMap(self.sign, -self.sign * self.shift)

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and self.shift == 0

    def one(self) -> "AffineMap":
        return AffineMap()


PERIPHERAL_ALPHABET = Alphabet.of("u1", "u2", "v")

AFFINE_IMAGES: Dict[str, AffineMap] = {
    "u1": AffineMap(-1, 0),
    "u2": AffineMap(-1, 2),
    "v": AffineMap(1, 0),
}


@dataclass(frozen=True)
class OrderCertificate:
    word: Word
    map: AffineMap

    @property
    def translation(self) -> int:
        return abs(self.map.shift) if self.map.sign == 1 else 0

    @property
    def infinite_order(self) -> bool:
        return self.map.sign == 1 and self.map.shift != 0


def infinite_order_certificate(word: Word) -> OrderCertificate:
    """A word in u1, u2, v has infinite order when its affine image is a non-zero translation."""
    unknown = [name for name in word.generators if name not in PERIPHERAL_ALPHABET]
    if unknown:
        raise AlphabetError(f"unknown generator {unknown[0]!r}; expected one of u1 u2 v")
    return OrderCertificate(word, evaluate(word, AFFINE_IMAGES, AffineMap()))


# --- Injectivity of the knot boundary into the quotient ---


def svk_injectivity(result: EnumResult, meridian: Word, longitude: Word) -> int:
    """Size of the image of the boundary group times the C2 factor.

    Counts distinct cosets reached from the subgroup coset by e, longitude,
    meridian and meridian*longitude in a regular enumeration, then doubles it.
    """
    if not result.is_finite:
        raise CosetLimitExceeded(result.coset_count)
    words = [meridian.one(), longitude, meridian, meridian * longitude]
    return 2 * len({follow(result, 1, word) for word in words})
