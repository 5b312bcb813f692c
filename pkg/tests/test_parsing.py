import pytest

from src.algebra import (
    ParseError,
    Perm,
    WordMode,
    format_presentation,
    parse_braid,
    parse_images,
    parse_perm,
    parse_presentation,
    parse_word,
)
from src.config import MAX_EXPANDED_LETTERS, MAX_EXPONENT

PRESENTATION = """\
# a comment
gens: a b

rel: a^2
rel: (a b)^3   # trailing comment
rel: b^-2
"""


# --- Words ---

def test_parse_word_powers_and_groups(ab):
    assert str(parse_word("(a b)^2 b^-1", ab)) == "a b a"
    assert str(parse_word("(a b)^-1", ab)) == "b^-1 a^-1"


def test_parse_word_identity(ab):
    assert parse_word("e", ab).is_identity
    assert parse_word("a a^-1", ab).is_identity


def test_printed_words_reparse(ab):
    for text in ("e", "a b^-1 a", "(a b)^-3"):
        word = parse_word(text, ab)
        assert parse_word(str(word), ab) == word


def test_parse_word_involutory(gamma):
    assert str(parse_word("g1 g2 g2 g1^-1 g3", gamma, WordMode.INVOLUTORY)) == "g3"


@pytest.mark.parametrize(
    "text, column",
    [
        ("a c", 3),
        ("a ^", 4),
        ("(a b", 1),
        ("()", 1),
        ("a)", 2),
        ("", 1),
    ],
)
def test_parse_word_errors_report_columns(ab, text, column):
    with pytest.raises(ParseError) as excinfo:
        parse_word(text, ab)
    assert excinfo.value.line == 1
    assert excinfo.value.column == column


@pytest.mark.parametrize(
    "text, column",
    [
        ("(a a^-1)^300000000", 10),
        (f"a^{MAX_EXPONENT + 1}", 3),
        (f"b^-{MAX_EXPONENT + 1}", 3),
        ("a^" + "9" * 5000, 3),
        (f"(a^{MAX_EXPONENT} b^{MAX_EXPONENT})^10", 19),
        (" ".join([f"a^{MAX_EXPONENT}"] * (MAX_EXPANDED_LETTERS // MAX_EXPONENT + 1)), 81),
    ],
)
def test_oversized_exponents_are_parse_errors(ab, text, column):
    with pytest.raises(ParseError) as excinfo:
        parse_word(text, ab)
    assert excinfo.value.column == column


def test_largest_exponent_is_accepted(ab):
    assert len(parse_word(f"a^{MAX_EXPONENT}", ab)) == MAX_EXPONENT


# --- Presentations ---

def test_parse_presentation_skips_comments_and_blanks():
    presentation = parse_presentation(PRESENTATION)
    assert presentation.generators == ("a", "b")
    assert [str(r) for r in presentation.relators] == ["a a", "a b a b a b", "b^-1 b^-1"]


def test_presentation_reparses_to_itself():
    presentation = parse_presentation(PRESENTATION)
    assert parse_presentation(format_presentation(presentation)) == presentation


def test_presentation_error_line_and_column():
    with pytest.raises(ParseError) as excinfo:
        parse_presentation("gens: a b\nrel: a c\n")
    assert (excinfo.value.line, excinfo.value.column) == (2, 8)


@pytest.mark.parametrize(
    "text",
    ["rel: a\n", "gens: a\nfoo: a\n", "gens: a\ngens: b\n", "", "gens: a a\n", "gens: e a\n"],
)
def test_malformed_presentations(text):
    with pytest.raises(ParseError):
        parse_presentation(text)


def test_bundled_fixtures_parse(fixtures_dir):
    files = sorted(fixtures_dir.glob("*.pres"))
    assert len(files) == 7
    for path in files:
        assert parse_presentation(path.read_text()).relators


# --- Braids ---

def test_parse_braid_collapses_powers():
    braid = parse_braid("s1^2 s3 s2 s3^-1 s1^-2")
    assert braid.letters == ((1, 1), (1, 1), (3, 1), (2, 1), (3, -1), (1, -1), (1, -1))
    assert str(braid) == "s1^2 s3 s2 s3^-1 s1^-2"


def test_parse_trivial_braid():
    braid = parse_braid("e")
    assert len(braid) == 0
    assert str(braid) == "e"


@pytest.mark.parametrize("text", ["", "s4", "s0", "x1", "s1^"])
def test_parse_braid_errors(text):
    with pytest.raises(ParseError):
        parse_braid(text)


def test_parse_braid_bounds():
    with pytest.raises(ParseError) as excinfo:
        parse_braid("s2 s1^300000000")
    assert excinfo.value.column == 4
    with pytest.raises(ParseError):
        parse_braid(" ".join([f"s1^{MAX_EXPONENT}"] * (MAX_EXPANDED_LETTERS // MAX_EXPONENT + 1)))
    with pytest.raises(ParseError):
        parse_braid("s1", strand_count=10**9)
    with pytest.raises(ParseError):
        parse_braid("s1^" + "9" * 5000)


# --- Permutations ---

def test_parse_perm():
    assert parse_perm("(1 2)(3 4)", 4) == Perm((2, 1, 4, 3))
    assert parse_perm("()", 3).is_identity
    assert str(parse_perm("(2 4 3)", 4)) == "(2 4 3)"


@pytest.mark.parametrize("text", ["(1 5)", "(1 2)(2 3)", "1 2", "(1 2", "(a b)", ""])
def test_parse_perm_errors(text):
    with pytest.raises(ParseError):
        parse_perm(text, 4)


def test_parse_images(gamma):
    images = parse_images(["g1=(1 2)", "g2=(2 3)"], gamma, 4)
    assert str(images["g2"]) == "(2 3)"
    with pytest.raises(ParseError):
        parse_images(["g9=(1 2)"], gamma, 4)
