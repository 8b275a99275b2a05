"""Exception hierarchy shared by the library and the command line."""


class TopcohError(Exception):
    """Base class for all errors raised by topcoh."""

    kind = "error"


class RingMismatch(TopcohError, ValueError):
    kind = "ring-mismatch"


class InvalidArgument(TopcohError, ValueError):
    kind = "invalid-argument"


class Unsupported(TopcohError):
    """Input is outside the class of data the algorithms are valid for."""

    kind = "unsupported"


class HypothesisNotMet(TopcohError):
    """The top local cohomology module vanishes, so the annihilator theory does not apply."""

    kind = "hypothesis-not-met"


class TheoremViolation(TopcohError):
    """Two computations that must agree did not. Always an implementation bug."""

    kind = "theorem-violation"


class ParseError(TopcohError, ValueError):
    kind = "parse-error"

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
