class AlgebraError(Exception):
    """Base class for domain errors raised by this package."""


class WeightError(AlgebraError, ValueError):
    """Input is not homogeneous of the required weight."""


class NotLSError(AlgebraError, ValueError):
    """Word is not an associative Lyndon-Shirshov word."""


class NotLieElementError(AlgebraError, ValueError):
    """Associative polynomial is not in the image of the free Lie algebra."""


class StructureError(AlgebraError, RuntimeError):
    """Malformed normal form (item counts do not match derivative orders)."""


class SignError(AlgebraError, RuntimeError):
    """Leading coefficient of a basis expansion is not +1 or -1."""


class TermSyntaxError(AlgebraError, SyntaxError):
    """Parse failure, carrying the offset and the set of expected tokens."""

    def __init__(self, text, offset, expected):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        super().__init__(f"at offset {offset}: expected {' or '.join(self.expected)}")

    def caret(self):
        return f"{self.text}\n{' ' * self.offset}^"
