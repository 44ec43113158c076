"""Exception types raised by the package."""


class PeanoError(Exception):
    """Base class for errors raised by peano_words."""


class CapacityError(PeanoError, ValueError):
    """A request exceeds a materialization or enumeration bound."""


class DomainError(PeanoError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PatternSyntaxError(PeanoError, ValueError):
    """Malformed pattern text.

    ``position`` is the 0-based offset into the input where parsing failed.
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
