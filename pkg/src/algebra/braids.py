"""
Braid group action on the free group of a punctured disk, and on based paths.

The braid generator s_i acts by
    s_i:    g_i -> g_i g_{i+1} g_i^-1,   g_{i+1} -> g_i
    s_i^-1: g_i -> g_{i+1},              g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
with every other generator fixed. A braid word acts on the left, so its
rightmost letter is applied first.

A based path `BasedPath(prefix, j)` is a loop word followed by the straight
path rho_j to the j-th puncture. Under s_i the path rho_i becomes g_i rho_{i+1}
and rho_{i+1} becomes rho_i; under s_i^-1, rho_i becomes rho_{i+1} and
rho_{i+1} becomes g_{i+1}^-1 rho_i.

The reflection r of the disk swaps puncture i with puncture n+1-i. On loop
words it is only defined in involutory mode, where it relabels g_i as
g_{n+1-i}.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple

from src.algebra.errors import AlgebraError, AlphabetError, BraidIndexError, UnsupportedOperation
from src.algebra.perms import Perm
from src.algebra.words import (
    Alphabet,
    Word,
    WordMode,
    generator,
    identity,
    reduce,
    substitute,
    to_involutory,
)

logger = logging.getLogger(__name__)

BraidLetter = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    strand_count: int = 4
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strand_count < 2:
            raise BraidIndexError(f"a braid needs at least 2 strands, got {self.strand_count}")
        letters = tuple((int(index), int(sign)) for index, sign in self.letters)
        for index, sign in letters:
            if not 1 <= index < self.strand_count:
                raise BraidIndexError(
                    f"s{index} is not a generator of the {self.strand_count}-strand braid group"
                )
            if sign not in (1, -1):
                raise AlgebraError(f"braid letter sign must be +1 or -1, got {sign!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_powers(cls, powers: Iterable[Tuple[int, int]], strand_count: int = 4) -> "BraidWord":
        """`from_powers([(1, 2), (3, -1)])` is s1^2 s3^-1."""
        letters = []
        for index, exponent in powers:
            sign = 1 if exponent > 0 else -1
            letters.extend([(index, sign)] * abs(exponent))
        return cls(strand_count, tuple(letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple((i, -s) for i, s in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strand_count != self.strand_count:
            raise BraidIndexError("cannot multiply braids on different strand counts")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class BasedPath:
    prefix: Word
    terminal: int

    def __post_init__(self):
        if not 1 <= self.terminal <= len(self.prefix.alphabet):
            raise BraidIndexError(
                f"terminal puncture {self.terminal} outside 1..{len(self.prefix.alphabet)}"
            )

    def __str__(self) -> str:
        end = f"rho{self.terminal}"
        return end if self.prefix.is_identity else f"{self.prefix} {end}"


BETA = BraidWord.from_powers([(1, 2), (3, 1), (2, 1), (3, -1), (1, -2)])


def gamma_alphabet(strand_count: int = 4) -> Alphabet:
    return Alphabet.indexed("g", strand_count)


def rho(terminal: int, alphabet: Alphabet, mode: WordMode = WordMode.FREE) -> BasedPath:
    return BasedPath(identity(alphabet, mode), terminal)


def format_braid(braid: BraidWord) -> str:
    """Collapse runs of one letter into powers: s1 s1 s3^-1 -> "s1^2 s3^-1"."""
    if not braid.letters:
        return "e"
    terms = []
    run_letter, run_length = braid.letters[0], 0
    for letter in braid.letters + ((0, 0),):
        if letter == run_letter:
            run_length += 1
            continue
        index, sign = run_letter
        exponent = sign * run_length
        terms.append(f"s{index}" if exponent == 1 else f"s{index}^{exponent}")
        run_letter, run_length = letter, 1
    return " ".join(terms)


@lru_cache(maxsize=256)
def _letter_images(alphabet: Alphabet, index: int, sign: int, mode: WordMode) -> Dict[str, Word]:
    images = {name: generator(alphabet, name, mode) for name in alphabet.names}
    left, right = alphabet.names[index - 1], alphabet.names[index]
    if sign == 1:
        images[left] = reduce([(left, 1), (right, 1), (left, -1)], alphabet, mode)
        images[right] = generator(alphabet, left, mode)
    else:
        images[left] = generator(alphabet, right, mode)
        images[right] = reduce([(right, -1), (left, 1), (right, 1)], alphabet, mode)
    return images


def _check_strands(braid: BraidWord, alphabet: Alphabet) -> None:
    if len(alphabet) != braid.strand_count:
        raise AlphabetError(
            f"a {braid.strand_count}-strand braid acts on {braid.strand_count} generators, "
            f"got [{alphabet}]"
        )


def act_on_loop(braid: BraidWord, word: Word, mode: Optional[WordMode] = None) -> Word:
    mode = WordMode(mode) if mode is not None else word.mode
    _check_strands(braid, word.alphabet)
    current = word.in_mode(mode)
    for index, sign in reversed(braid.letters):
        current = substitute(current, _letter_images(current.alphabet, index, sign, mode))
    return current


def reflect_loop(word: Word) -> Word:
    if word.mode is not WordMode.INVOLUTORY:
        raise UnsupportedOperation("the disk reflection acts on loop words only in involutory mode")
    names = word.alphabet.names
    mirror = {name: names[len(names) - 1 - position] for position, name in enumerate(names)}
    return reduce([(mirror[name], 1) for name, _ in word.letters], word.alphabet, word.mode)


def r_beta_gamma(braid: BraidWord, i: int, alphabet: Optional[Alphabet] = None) -> Word:
    """The involutory word for r(braid(g_i))."""
    alphabet = alphabet or gamma_alphabet(braid.strand_count)
    if not 1 <= i <= len(alphabet):
        raise BraidIndexError(f"generator index {i} outside 1..{len(alphabet)}")
    loop = act_on_loop(braid, generator(alphabet, alphabet.names[i - 1]), WordMode.FREE)
    return reflect_loop(to_involutory(loop))


def act_on_path(braid: BraidWord, path: BasedPath, mode: Optional[WordMode] = None) -> BasedPath:
    mode = WordMode(mode) if mode is not None else path.prefix.mode
    alphabet = path.prefix.alphabet
    _check_strands(braid, alphabet)
    names = alphabet.names
    prefix, terminal = path.prefix.in_mode(mode), path.terminal
    for index, sign in reversed(braid.letters):
        prefix = substitute(prefix, _letter_images(alphabet, index, sign, mode))
        if sign == 1:
            if terminal == index:
                prefix = prefix * generator(alphabet, names[index - 1], mode)
                terminal = index + 1
            elif terminal == index + 1:
                terminal = index
        else:
            if terminal == index:
                terminal = index + 1
            elif terminal == index + 1:
                prefix = prefix * generator(alphabet, names[index], mode, sign=-1)
                terminal = index
    return BasedPath(prefix, terminal)


def reflect_path(path: BasedPath) -> BasedPath:
    count = len(path.prefix.alphabet)
    return BasedPath(reflect_loop(path.prefix), count + 1 - path.terminal)


def induced_permutation(braid: BraidWord, with_reflection: bool = False) -> Perm:
    """Where each puncture goes; with the reflection, i -> n+1-braid(i)."""
    count = braid.strand_count
    images = []
    for start in range(1, count + 1):
        point = start
        for index, _ in reversed(braid.letters):
            if point == index:
                point = index + 1
            elif point == index + 1:
                point = index
        images.append(count + 1 - point if with_reflection else point)
    return Perm(tuple(images))
