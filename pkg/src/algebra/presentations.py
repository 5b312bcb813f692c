"""
Finite presentations and homomorphisms out of them.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Protocol, Tuple, TypeVar

from src.algebra.errors import AlphabetError, MissingImageError, ModeError
from src.algebra.perms import Perm
from src.algebra.words import Alphabet, Word, WordMode, format_word

logger = logging.getLogger(__name__)


class GroupElement(Protocol):
    def __mul__(self, other): ...

    def inverse(self): ...

    @property
    def is_identity(self) -> bool: ...

    def one(self): ...


E = TypeVar("E", bound=GroupElement)


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        relators = tuple(self.relators)
        for relator in relators:
            if relator.alphabet != self.alphabet:
                raise AlphabetError(f"relator {relator} is not over [{self.alphabet}]")
            if relator.mode is not WordMode.FREE:
                raise ModeError("relators must be free-mode words")
        object.__setattr__(self, "relators", relators)

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.alphabet.names

    def __str__(self) -> str:
        return format_presentation(self)


@dataclass(frozen=True)
class HomCheck:
    ok: bool
    failing_relator: Optional[Word] = None
    failing_image: Optional[object] = None

    def __bool__(self) -> bool:
        return self.ok


def format_presentation(presentation: Presentation) -> str:
    lines = ["gens: " + " ".join(presentation.generators)]
    lines.extend(f"rel: {format_word(relator)}" for relator in presentation.relators)
    return "\n".join(lines) + "\n"


def quotient(presentation: Presentation, extra_relators: Iterable[Word]) -> Presentation:
    return Presentation(presentation.alphabet, presentation.relators + tuple(extra_relators))


def evaluate(word: Word, images: Mapping[str, E], one: Optional[E] = None) -> E:
    """Multiply out the images of `word` left to right.

    Involutory words are evaluated letter for letter, which is only a
    homomorphism when every image is an involution.
    """
    result = one
    for name, sign in word.letters:
        image = images.get(name)
        if image is None:
            raise MissingImageError(f"no image for generator {name!r}")
        factor = image if sign == 1 else image.inverse()
        result = factor if result is None else result * factor
    if result is None:
        sample = next(iter(images.values()), None)
        if sample is None:
            raise MissingImageError("cannot evaluate the identity without any images")
        return sample.one()
    return result


def word_image(word: Word, images: Mapping[str, Perm], degree: Optional[int] = None) -> Perm:
    one = Perm.identity(degree) if degree is not None else None
    return evaluate(word, images, one)


def verify_hom(presentation: Presentation, images: Mapping[str, E]) -> HomCheck:
    missing = [name for name in presentation.generators if name not in images]
    if missing:
        raise MissingImageError(f"no image for generator(s) {', '.join(missing)}")
    for relator in presentation.relators:
        image = evaluate(relator, images)
        if not image.is_identity:
            logger.debug("relator %s maps to %s", relator, image)
            return HomCheck(False, relator, image)
    return HomCheck(True)
