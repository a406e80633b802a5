"""Exception hierarchy shared by the engines.

The CLI reports engine failures by class name, so names are part of the
public interface.
"""


class StringyError(Exception):
    """Base class for all engine errors."""


class PoleAtOne(StringyError):
    """The limit u, v -> 1 is infinite."""


class NotKlt(StringyError):
    """A log discrepancy is not strictly positive."""

    def __init__(self, index, label=None, value=None):
        self.index = index
        self.label = label
        self.value = value
        super().__init__(f"component {index} ({label}) has log discrepancy {value}")


class NotPositive(StringyError):
    pass


class OutsideSupport(StringyError):
    pass


class NotASubdivision(StringyError):
    pass


class NotSmooth(StringyError):
    pass


class RaysDiffer(StringyError):
    pass


class InvalidFan(StringyError):
    pass


class NotInLattice(StringyError):
    pass


class BoundExceeded(StringyError):
    pass


class NotSL(StringyError):
    pass


class NonIntegralWeight(StringyError):
    pass


class NotDiagonal(StringyError):
    pass


class NotAbelian(StringyError):
    pass


class ParseError(StringyError, ValueError):
    """Malformed polynomial text or JSON input; ``pos`` is a 0-based offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")
