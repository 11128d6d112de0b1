class DavenportError(Exception):
    """Base class of every error raised by the library."""


class InvalidGroupTable(DavenportError):
    """A multiplication table violates the group axioms."""


class OrderTooLarge(DavenportError):
    """The requested group would exceed the supported order."""


class InvalidParameter(DavenportError):
    """A constructor parameter does not describe a valid group."""


class InvalidAction(InvalidParameter):
    """The action of a cyclic semidirect product is not an automorphism of the right order."""


class NotAbelian(InvalidParameter):
    """An abelian group was required."""


class NotAHomomorphism(DavenportError):
    """The action map of a semidirect product is not a homomorphism into Aut(N)."""


class UnknownGroup(DavenportError):
    """No registry entry matches the requested identification."""


class NotGenerating(DavenportError):
    """A set of elements does not generate the group."""


class NotASubsequence(DavenportError):
    """A sequence does not divide the sequence it is removed from."""


class LengthCap(DavenportError):
    """A sequence is longer than the cap of a brute-force routine."""


class EmptySequence(DavenportError):
    """An operation needs a non-empty sequence."""


class ResourceCap(DavenportError):
    """
    A level enumeration exceeded its memory budget.

    Attributes:
        report (DavenportReport): The partial report, marked incomplete.
    """
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class FingerprintMismatch(DavenportError):
    """A level cache belongs to a different group."""


class CorruptFile(DavenportError):
    """A level cache cannot be decoded."""


class UnsupportedShape(DavenportError):
    """An abelian shape lies outside the cases with a known Davenport constant."""


class InvalidPrimes(DavenportError):
    """The primes of a C_p ⋊ C_q formula do not satisfy its hypotheses."""


class DivisibilityViolated(DavenportError):
    """The rank-two formula needs m | n."""


class MissingData(DavenportError):
    """An audit needs a constant that is not available."""


class ParseError(DavenportError):
    """
    A group expression could not be parsed.

    Attributes:
        position (int): Offset of the offending character in the input.
        reason (str): Human readable description.
    """
    def __init__(self, position: int, reason: str):
        super().__init__(f"at position {position}: {reason}")
        self.position = position
        self.reason = reason


class ValidationError(ParseError):
    """A group expression parsed but names an invalid group."""


class IoError(DavenportError):
    """A report could not be written."""
