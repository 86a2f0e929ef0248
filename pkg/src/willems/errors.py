"""Exception types raised across the toolkit."""


class WillemsError(Exception):
    """Base class; ``kind`` is the stable name used in serialized reports."""

    kind = "Error"

    def context(self):
        return {}


class DivisionByZero(WillemsError, ZeroDivisionError):
    kind = "DivisionByZero"


class DimensionMismatch(WillemsError, ValueError):
    kind = "DimensionMismatch"


class DegreeBoundExceeded(WillemsError):
    kind = "DegreeBoundExceeded"


class UnitIdeal(WillemsError):
    kind = "UnitIdeal"


class NotUnivariate(WillemsError, ValueError):
    kind = "NotUnivariate"


class TranscendentalInUnsupportedContext(WillemsError, ValueError):
    kind = "TranscendentalInUnsupportedContext"


class NotMonomial(WillemsError, ValueError):
    kind = "NotMonomial"


class NotLinear(WillemsError, ValueError):
    kind = "NotLinear"


class ShearRetryExhausted(WillemsError):
    kind = "ShearRetryExhausted"


class EmptyPointSet(WillemsError, ValueError):
    kind = "EmptyPointSet"


class NonTermination(WillemsError):
    kind = "NonTermination"


class DecompositionUnsupported(WillemsError):
    """No supported decomposition route applies.

    ``partial`` holds whatever was computed before giving up (filtration
    ideals, candidate primes), so callers can fall back on hints.
    """

    kind = "DecompositionUnsupported"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or {}

    def context(self):
        return {k: [str(x) for x in v] if isinstance(v, (list, tuple)) else str(v)
                for k, v in self.partial.items()}


class ParseError(WillemsError, SyntaxError):
    kind = "SyntaxError"

    def __init__(self, message, line=1, column=1, expected=()):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)

    def context(self):
        return {"line": self.line, "column": self.column,
                "expected": list(self.expected)}
