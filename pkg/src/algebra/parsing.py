"""
Text formats: words, presentations, braid words and permutations.

Word grammar (whitespace separates tokens):

    word  := term { term } | "e"
    term  := atom [ "^" int ]
    atom  := gen | "(" word ")"
    gen   := letter { letter | digit }
    int   := [ "-" ] digit { digit }

"e" is the identity; it is never a generator name. Exponents are bounded by
MAX_EXPONENT and a word may expand to at most MAX_EXPANDED_LETTERS letters
before reduction.

A presentation file has a `gens:` header line followed by `rel:` lines; `#`
starts a comment and blank lines are ignored.
"""
import re
from typing import Iterable, List, Optional, Sequence

from src.algebra.braids import BraidWord
from src.algebra.errors import AlgebraError, AlphabetError, ParseError
from src.algebra.perms import Perm
from src.algebra.presentations import Presentation
from src.algebra.words import Alphabet, Letter, Word, WordMode, reduce
from src.config import MAX_EXPANDED_LETTERS, MAX_EXPONENT, MAX_STRAND_COUNT

_BRAID_TERM = re.compile(r"s(\d+)(?:\^(-?\d+))?\Z")
_TOKEN = re.compile(r"\S+")
_MAX_DIGITS = len(str(MAX_EXPONENT))


def _invert_letters(letters: Sequence[Letter]) -> List[Letter]:
    return [(name, -sign) for name, sign in reversed(letters)]


class _WordParser:
    def __init__(self, text: str, alphabet: Alphabet, line: int, column_offset: int):
        self.text = text
        self.alphabet = alphabet
        self.line = line
        self.column_offset = column_offset
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        at = self.pos if pos is None else pos
        return ParseError(message, self.line, self.column_offset + at + 1)

    def peek(self) -> Optional[str]:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> List[Letter]:
        self.skip_space()
        if self.peek() is None:
            raise self.error("empty word")
        letters = self.parse_sequence()
        self.skip_space()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()!r}")
        return letters

    def parse_sequence(self) -> List[Letter]:
        letters: List[Letter] = []
        while True:
            self.skip_space()
            if self.peek() in (None, ")"):
                return letters
            start = self.pos
            letters.extend(self.parse_term())
            if len(letters) > MAX_EXPANDED_LETTERS:
                raise self.error(
                    f"word expands to more than {MAX_EXPANDED_LETTERS} letters", start
                )

    def parse_term(self) -> List[Letter]:
        atom = self.parse_atom()
        self.skip_space()
        if self.peek() != "^":
            return atom
        self.pos += 1
        self.skip_space()
        exponent_start = self.pos
        exponent = self.parse_int()
        if abs(exponent) > MAX_EXPONENT:
            raise self.error(
                f"exponent {exponent} exceeds {MAX_EXPONENT} in magnitude", exponent_start
            )
        if len(atom) * abs(exponent) > MAX_EXPANDED_LETTERS:
            raise self.error(
                f"word expands to more than {MAX_EXPANDED_LETTERS} letters", exponent_start
            )
        base = atom if exponent >= 0 else _invert_letters(atom)
        return base * abs(exponent)

    def parse_atom(self) -> List[Letter]:
        start = self.pos
        char = self.peek()
        if char == "(":
            self.pos += 1
            inner = self.parse_sequence()
            if self.peek() != ")":
                raise self.error("unbalanced '('", start)
            self.pos += 1
            if not inner and not self.text[start + 1:self.pos - 1].strip():
                raise self.error("empty parentheses", start)
            return inner
        if char is not None and char.isalpha():
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "e":
                return []
            if name not in self.alphabet:
                raise self.error(f"unknown generator {name!r}", start)
            return [(name, 1)]
        if char is None:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {char!r}")

    def parse_int(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise self.error("expected an integer exponent", start)
        if len(self.text[digits_start:self.pos].lstrip("0")) > _MAX_DIGITS:
            raise self.error(f"exponent exceeds {MAX_EXPONENT} in magnitude", start)
        return int(self.text[start:self.pos])


def parse_word(
    text: str,
    alphabet: Alphabet,
    mode: WordMode = WordMode.FREE,
    *,
    line: int = 1,
    column_offset: int = 0,
) -> Word:
    letters = _WordParser(text, alphabet, line, column_offset).parse()
    return reduce(letters, alphabet, mode)


def parse_presentation(text: str) -> Presentation:
    alphabet: Optional[Alphabet] = None
    relators = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        stripped = content.strip()
        if not stripped:
            continue
        indent = len(content) - len(content.lstrip())
        if alphabet is None:
            if not stripped.startswith("gens:"):
                raise ParseError("expected a 'gens:' header", line_number, indent + 1)
            try:
                alphabet = Alphabet(tuple(stripped[len("gens:"):].split()))
            except AlphabetError as exc:
                raise ParseError(str(exc), line_number, indent + 1) from exc
            continue
        if stripped.startswith("rel:"):
            offset = indent + len("rel:")
            relators.append(
                parse_word(content[offset:], alphabet, line=line_number, column_offset=offset)
            )
        elif stripped.startswith("gens:"):
            raise ParseError("duplicate 'gens:' header", line_number, indent + 1)
        else:
            raise ParseError("expected 'rel: <word>'", line_number, indent + 1)
    if alphabet is None:
        raise ParseError("missing 'gens:' header")
    return Presentation(alphabet, tuple(relators))


def parse_braid(text: str, strand_count: int = 4) -> BraidWord:
    """Braid words such as "s1^2 s3 s2 s3^-1 s1^-2"; "e" is the trivial braid."""
    if not 2 <= strand_count <= MAX_STRAND_COUNT:
        raise ParseError(f"strand count must be in 2..{MAX_STRAND_COUNT}, got {strand_count}")
    tokens = list(_TOKEN.finditer(text))
    if not tokens:
        raise ParseError("empty braid word")
    if len(tokens) == 1 and tokens[0].group() == "e":
        return BraidWord(strand_count)
    powers = []
    length = 0
    for token in tokens:
        match = _BRAID_TERM.match(token.group())
        if match is None:
            raise ParseError(f"malformed braid term {token.group()!r}", 1, token.start() + 1)
        if any(len((g or "").lstrip("-0")) > _MAX_DIGITS for g in match.groups()):
            raise ParseError("number too large in braid term", 1, token.start() + 1)
        index = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if not 1 <= index < strand_count:
            raise ParseError(
                f"s{index} is not a generator of the {strand_count}-strand braid group",
                1,
                token.start() + 1,
            )
        if abs(exponent) > MAX_EXPONENT:
            raise ParseError(
                f"exponent {exponent} exceeds {MAX_EXPONENT} in magnitude", 1, token.start() + 1
            )
        length += abs(exponent)
        if length > MAX_EXPANDED_LETTERS:
            raise ParseError(
                f"braid word expands to more than {MAX_EXPANDED_LETTERS} letters",
                1,
                token.start() + 1,
            )
        powers.append((index, exponent))
    return BraidWord.from_powers(powers, strand_count)


def parse_perm(text: str, degree: int) -> Perm:
    """Cycle notation such as "(1 2)(3 4)"; "()" is the identity."""
    cycles = []
    pos = 0
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise ParseError(f"expected '(' but found {text[pos]!r}", 1, pos + 1)
        close = text.find(")", pos)
        if close < 0:
            raise ParseError("unbalanced '('", 1, pos + 1)
        body = text[pos + 1:close].replace(",", " ").split()
        try:
            points = [int(p) for p in body]
        except ValueError:
            raise ParseError("cycle entries must be integers", 1, pos + 2) from None
        if points:
            cycles.append(points)
        pos = close + 1
    try:
        return Perm.from_cycles(cycles, degree)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from exc


def parse_images(entries: Iterable[str], alphabet: Alphabet, degree: int) -> dict:
    """Parse `name=(cycles)` assignments into a generator -> Perm mapping."""
    images = {}
    for entry in entries:
        name, sep, cycles = entry.partition("=")
        name = name.strip()
        if not sep:
            raise ParseError(f"expected 'name=(cycles)', got {entry!r}")
        if name not in alphabet:
            raise ParseError(f"unknown generator {name!r}")
        images[name] = parse_perm(cycles, degree)
    return images
