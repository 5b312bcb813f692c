"""
Exception hierarchy for the algebra package.

Library code raises these; the CLI turns them into exit code 3 and the
routers turn them into HTTP 400/404 responses.
"""


class AlgebraError(ValueError):
    """Base class for every input or precondition error raised by the library."""


class AlphabetError(AlgebraError):
    """Unknown generator, or two values built over different alphabets."""


class ModeError(AlgebraError):
    """Free and involutory words mixed in one operation."""


class UnsupportedOperation(AlgebraError):
    pass


class MissingImageError(AlgebraError):
    pass


class BraidIndexError(AlgebraError):
    pass


class DegreeLimitError(AlgebraError):
    pass


class NotCoprimeError(AlgebraError):
    pass


class CosetLimitExceeded(AlgebraError):
    """Raised only where an operation needs a finite enumeration to proceed."""

    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration exceeded {max_cosets} live cosets")
        self.max_cosets = max_cosets


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownCheckError(KeyError):
    def __init__(self, check_id: str):
        super().__init__(check_id)
        self.check_id = check_id

    def __str__(self) -> str:
        return f"unknown check id '{self.check_id}'"
