"""
Fixed presentations used by the verification suite, torus knot groups and a
small corpus of groups with known faithful permutation representations.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from src.algebra.cosets import EnumStatus, exponent, todd_coxeter
from src.algebra.errors import AlgebraError, NotCoprimeError
from src.algebra.parsing import parse_perm, parse_word
from src.algebra.perms import Perm
from src.algebra.presentations import Presentation, quotient
from src.algebra.words import Alphabet, Word, exponent_vector
from src.config import DEFAULT_MAX_COSETS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int
    presentation: Presentation
    meridian: Word
    longitude: Word


@dataclass(frozen=True)
class SmallGroup:
    name: str
    presentation: Presentation
    images: Tuple[Tuple[str, Perm], ...]
    order: int

    def image_map(self) -> Dict[str, Perm]:
        return dict(self.images)


@dataclass(frozen=True)
class KleinQuotient:
    k: int
    kernel: str
    status: EnumStatus
    order: int
    exponent: int = 0


def _presentation(gens: str, *relators: str) -> Presentation:
    alphabet = Alphabet(tuple(gens.split()))
    return Presentation(alphabet, tuple(parse_word(r, alphabet) for r in relators))


def torus_knot_presentation(p: int, q: int) -> TorusKnot:
    """<a1, a2 | a1^p a2^q> with meridian a1^-1 a2^-1 and longitude (a2 a1)^pq a1^-p.

    The meridian and longitude words are only correct when q == p + 1.
    """
    if p < 2 or q < 2:
        raise AlgebraError(f"torus knot parameters must be at least 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise NotCoprimeError(f"torus knot parameters must be coprime, got ({p}, {q})")
    if q != p + 1:
        logger.warning(
            "meridian/longitude words assume q = p + 1; T(%d,%d) gives an abelianized "
            "meridian of %d and longitude of %d",
            p,
            q,
            *abelian_check(p, q),
        )
    alphabet = Alphabet.of("a1", "a2")
    return TorusKnot(
        p=p,
        q=q,
        presentation=Presentation(alphabet, (parse_word(f"a1^{p} a2^{q}", alphabet),)),
        meridian=parse_word("a1^-1 a2^-1", alphabet),
        longitude=parse_word(f"(a2 a1)^{p * q} a1^-{p}", alphabet),
    )


def abelian_check(p: int, q: int) -> Tuple[int, int]:
    """Images of the meridian and longitude words in Z under a1 -> q, a2 -> -p."""
    alphabet = Alphabet.of("a1", "a2")
    weights = (q, -p)
    meridian = exponent_vector(parse_word("a1^-1 a2^-1", alphabet)).dot(weights)
    longitude = exponent_vector(parse_word(f"(a2 a1)^{p * q} a1^-{p}", alphabet)).dot(weights)
    return meridian, longitude


def t34_quotient() -> TorusKnot:
    """The (3,4) torus knot group with meridian and longitude both squared to 1."""
    knot = torus_knot_presentation(3, 4)
    relators = [knot.meridian ** 2, knot.longitude ** 2]
    return TorusKnot(3, 4, quotient(knot.presentation, relators), knot.meridian, knot.longitude)


def boundary_presentation() -> Presentation:
    """Torus-boundary group with an orientation-reversing w: <u, v, w | [u,v], wuw^-1u, wvw^-1v>."""
    return _presentation("u v w", "u v u^-1 v^-1", "w u w^-1 u", "w v w^-1 v")


def q8_presentation() -> Presentation:
    return _presentation("x y", "x^4", "x^2 y^-2", "y^-1 x y x")


def klein_presentation(k: int) -> Presentation:
    return _presentation(
        "v2 w1 w2",
        "w1 v2 w1^-1 v2^-1",
        "w2 v2 w2^-1 v2^-1",
        f"w1^2 v2^{k}",
        "w2^2",
        "v2^2",
    )


def peripheral_presentation() -> Presentation:
    """Two reflections u1, u2 and a central involution v."""
    return _presentation("u1 u2 v", "u1^2", "u2^2", "v^2", "u1 v u1^-1 v^-1", "u2 v u2^-1 v^-1")


def klein_quotients(k: int, max_cosets: int = DEFAULT_MAX_COSETS) -> List[KleinQuotient]:
    """Enumerate G_k modulo w2 and modulo v2 w2."""
    group = klein_presentation(k)
    out = []
    for kernel in ("w2", "v2 w2"):
        result = todd_coxeter(quotient(group, [parse_word(kernel, group.alphabet)]), (), max_cosets)
        label = kernel.replace(" ", "")
        if result.is_finite:
            out.append(KleinQuotient(k, label, result.status, result.coset_count, exponent(result)))
        else:
            out.append(KleinQuotient(k, label, result.status, result.coset_count))
    return out


def _small_group(
    name: str, gens: str, relators: List[str], images: Mapping[str, str], degree: int, order: int
) -> SmallGroup:
    presentation = _presentation(gens, *relators)
    perms = tuple((g, parse_perm(images[g], degree)) for g in presentation.generators)
    return SmallGroup(name, presentation, perms, order)


SMALL_GROUP_CORPUS: Tuple[SmallGroup, ...] = (
    _small_group("C6", "a", ["a^6"], {"a": "(1 2 3 4 5 6)"}, 6, 6),
    _small_group("C2xC2", "a b", ["a^2", "b^2", "a b a^-1 b^-1"], {"a": "(1 2)", "b": "(3 4)"}, 4, 4),
    _small_group("S3", "a b", ["a^2", "b^2", "(a b)^3"], {"a": "(1 2)", "b": "(2 3)"}, 3, 6),
    _small_group("D4", "a b", ["a^4", "b^2", "(a b)^2"], {"a": "(1 2 3 4)", "b": "(1 3)"}, 4, 8),
    _small_group(
        "Q8",
        "x y",
        ["x^4", "x^2 y^-2", "y^-1 x y x"],
        {"x": "(1 2 3 4)(5 6 7 8)", "y": "(1 5 3 7)(2 8 4 6)"},
        8,
        8,
    ),
    _small_group("S4", "a b", ["a^2", "b^3", "(a b)^4"], {"a": "(1 2)", "b": "(2 3 4)"}, 4, 24),
)
