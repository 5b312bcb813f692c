"""
Free-group and involutory-group words.

A `Word` is an immutable, always-reduced sequence of signed letters over an
`Alphabet`. In free mode a letter and its inverse cancel when adjacent; in
involutory mode every generator is its own inverse, so signs are dropped and
adjacent equal letters cancel.
"""
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple

from src.algebra.errors import (
    AlgebraError,
    AlphabetError,
    MissingImageError,
    ModeError,
    UnsupportedOperation,
)

logger = logging.getLogger(__name__)

GENERATOR_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
IDENTITY_NAME = "e"

Letter = Tuple[str, int]


class WordMode(str, Enum):
    FREE = "free"
    INVOLUTORY = "involutory"


@dataclass(frozen=True)
class Alphabet:
    names: Tuple[str, ...]
    _positions: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        positions: Dict[str, int] = {}
        for name in names:
            if not isinstance(name, str) or not GENERATOR_PATTERN.match(name):
                raise AlphabetError(f"invalid generator name {name!r}")
            if name == IDENTITY_NAME:
                raise AlphabetError(f"{IDENTITY_NAME!r} is reserved for the identity")
            if name in positions:
                raise AlphabetError(f"duplicate generator {name!r}")
            positions[name] = len(positions)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_positions", positions)

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(tuple(names))

    @classmethod
    def indexed(cls, prefix: str, count: int) -> "Alphabet":
        """`Alphabet.indexed("g", 4)` is g1 g2 g3 g4."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, count + 1)))

    def position(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise AlphabetError(f"unknown generator {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def __iter__(self):
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return " ".join(self.names)


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: Tuple[Letter, ...] = ()
    mode: WordMode = WordMode.FREE

    def __post_init__(self):
        letters = tuple((name, sign) for name, sign in self.letters)
        mode = WordMode(self.mode)
        previous: Optional[Letter] = None
        for name, sign in letters:
            if name not in self.alphabet:
                raise AlphabetError(f"unknown generator {name!r}")
            if sign not in (1, -1):
                raise AlgebraError(f"letter sign must be +1 or -1, got {sign!r}")
            if mode is WordMode.INVOLUTORY:
                if sign != 1 or (previous is not None and previous[0] == name):
                    raise AlgebraError("letters are not reduced; build words with reduce()")
            elif previous == (name, -sign):
                raise AlgebraError("letters are not reduced; build words with reduce()")
            previous = (name, sign)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "mode", mode)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.letters)

    def one(self) -> "Word":
        return identity(self.alphabet, self.mode)

    def inverse(self) -> "Word":
        return invert(self)

    def in_mode(self, mode: WordMode) -> "Word":
        """Same element viewed in `mode`; only free → involutory is a homomorphism."""
        mode = WordMode(mode)
        if mode is self.mode:
            return self
        if mode is WordMode.INVOLUTORY:
            return to_involutory(self)
        raise ModeError("an involutory word has no canonical free-mode lift; use to_free()")

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, exponent: int) -> "Word":
        return power(self, exponent)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class ExponentVector:
    alphabet: Alphabet
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != len(self.alphabet):
            raise AlgebraError("exponent vector length must equal the alphabet size")
        object.__setattr__(self, "values", values)

    def __getitem__(self, name: str) -> int:
        return self.values[self.alphabet.position(name)]

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if other.alphabet != self.alphabet:
            raise AlphabetError("exponent vectors over different alphabets")
        return ExponentVector(self.alphabet, tuple(a + b for a, b in zip(self.values, other.values)))

    def dot(self, weights: Iterable[int]) -> int:
        return sum(v * w for v, w in zip(self.values, weights))


# --- Construction ---

def reduce(letters: Iterable[Letter], alphabet: Alphabet, mode: WordMode = WordMode.FREE) -> Word:
    """Single left-to-right stack pass; the result is the unique reduced form."""
    mode = WordMode(mode)
    stack = []
    for name, sign in letters:
        if name not in alphabet:
            raise AlphabetError(f"unknown generator {name!r}")
        if sign not in (1, -1):
            raise AlgebraError(f"letter sign must be +1 or -1, got {sign!r}")
        if mode is WordMode.INVOLUTORY:
            if stack and stack[-1][0] == name:
                stack.pop()
            else:
                stack.append((name, 1))
        elif stack and stack[-1] == (name, -sign):
            stack.pop()
        else:
            stack.append((name, sign))
    return Word(alphabet, tuple(stack), mode)


def identity(alphabet: Alphabet, mode: WordMode = WordMode.FREE) -> Word:
    return Word(alphabet, (), WordMode(mode))


def generator(alphabet: Alphabet, name: str, mode: WordMode = WordMode.FREE, sign: int = 1) -> Word:
    return reduce([(name, sign)], alphabet, mode)


def to_involutory(word: Word) -> Word:
    return reduce(word.letters, word.alphabet, WordMode.INVOLUTORY)


def to_free(word: Word) -> Word:
    """Lift an involutory word letter for letter to a positive free word."""
    return Word(word.alphabet, tuple((name, 1) for name, _ in word.letters), WordMode.FREE)


# --- Arithmetic ---

def _check_compatible(a: Word, b: Word) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetError(f"alphabet mismatch: [{a.alphabet}] vs [{b.alphabet}]")
    if a.mode is not b.mode:
        raise ModeError(f"mode mismatch: {a.mode.value} vs {b.mode.value}")


def multiply(a: Word, b: Word) -> Word:
    _check_compatible(a, b)
    return reduce(a.letters + b.letters, a.alphabet, a.mode)


def invert(a: Word) -> Word:
    if a.mode is WordMode.INVOLUTORY:
        return Word(a.alphabet, a.letters[::-1], a.mode)
    return Word(a.alphabet, tuple((name, -sign) for name, sign in reversed(a.letters)), a.mode)


def power(a: Word, exponent: int) -> Word:
    base = a if exponent >= 0 else invert(a)
    return reduce(base.letters * abs(exponent), a.alphabet, a.mode)


def substitute(
    word: Word,
    images: Mapping[str, Word],
    alphabet: Optional[Alphabet] = None,
    mode: Optional[WordMode] = None,
) -> Word:
    """Homomorphic image of `word`; all images must share one target alphabet and mode."""
    first = next(iter(images.values()), None)
    alphabet = alphabet or (first.alphabet if first is not None else word.alphabet)
    mode = WordMode(mode) if mode is not None else (first.mode if first is not None else word.mode)
    inverses: Dict[str, Tuple[Letter, ...]] = {}
    for name, image in images.items():
        if image.alphabet != alphabet:
            raise AlphabetError(f"image of {name!r} is over [{image.alphabet}], expected [{alphabet}]")
        if image.mode is not mode:
            raise ModeError(f"image of {name!r} is {image.mode.value}, expected {mode.value}")
    out = []
    for name, sign in word.letters:
        image = images.get(name)
        if image is None:
            raise MissingImageError(f"no image for generator {name!r}")
        if sign == 1:
            out.extend(image.letters)
        else:
            if name not in inverses:
                inverses[name] = invert(image).letters
            out.extend(inverses[name])
    return reduce(out, alphabet, mode)


def exponent_vector(word: Word) -> ExponentVector:
    if word.mode is not WordMode.FREE:
        raise UnsupportedOperation("exponent sums of involutory words only exist mod 2")
    values = [0] * len(word.alphabet)
    for name, sign in word.letters:
        values[word.alphabet.position(name)] += sign
    return ExponentVector(word.alphabet, tuple(values))


def format_word(word: Word) -> str:
    """Space-separated letters, explicit ^-1 in free mode, "e" for the identity."""
    if not word.letters:
        return IDENTITY_NAME
    if word.mode is WordMode.INVOLUTORY:
        return " ".join(name for name, _ in word.letters)
    return " ".join(name if sign == 1 else f"{name}^-1" for name, sign in word.letters)
