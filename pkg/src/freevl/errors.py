class FreeVLError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FreeVLError, ValueError):
    """An argument lies outside the operation's domain (mixed algebras, negative input...)."""


class SizeError(FreeVLError, ValueError):
    """An input exceeds a configured size cap."""


class ValidationError(FreeVLError, ValueError):
    """A candidate structure fails a closure or well-formedness check."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class MembershipError(DomainError):
    """A formal sum is not in the cone; ``witness`` is an atom with negative coefficient sum."""

    def __init__(self, message, witness, total):
        super().__init__(message)
        self.witness = witness
        self.total = total


class PreconditionError(FreeVLError, ValueError):
    """A map handed to the universal-property machinery does not meet its hypotheses."""


class ParseError(FreeVLError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.reason = message
        self.position = position
