"""Exception hierarchy. Every domain error carries a stable ``code`` used by the CLI."""


class KnotError(ValueError):
    code = "KnotError"


class NotDivisible(KnotError):
    code = "NotDivisible"


class BothZero(KnotError):
    code = "BothZero"


class ParseError(KnotError):
    code = "ParseError"


class MalformedTuple(ParseError):
    code = "MalformedTuple"


class LabelCountNotTwo(ParseError):
    code = "LabelCountNotTwo"


class MultiComponent(ParseError):
    code = "MultiComponent"


class AmbiguousOverOrientation(ParseError):
    code = "AmbiguousOverOrientation"


class NotCoprime(KnotError):
    code = "NotCoprime"


class DegenerateParameters(KnotError):
    code = "DegenerateParameters"


class OutOfRange(KnotError):
    code = "OutOfRange"


class IndexOutOfRange(KnotError):
    code = "IndexOutOfRange"


class ArityMismatch(KnotError):
    code = "ArityMismatch"


class ZeroPolynomial(KnotError):
    code = "ZeroPolynomial"


class TrivialColoring(KnotError):
    code = "TrivialColoring"


class BadParameters(KnotError):
    code = "BadParameters"


class ContactViolation(KnotError):
    """Raised when a trochoid step fails to bring the next vertices together."""

    code = "ContactViolation"
