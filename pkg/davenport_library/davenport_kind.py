from enum import Enum


class DavenportKind(Enum):
    """
    Enum for the two constants the engine enumerates.

    SMALL ("small"):
        The small Davenport constant d(G), the maximal length of a product-one free sequence. Levels hold product-one free
        sequences and the enumeration starts from the non-identity elements.

    LARGE ("large"):
        The large Davenport constant D(G), the maximal length of an atom. Levels hold atoms and the enumeration starts from
        the one-term sequence of the identity.
    """
    SMALL = "small"
    LARGE = "large"
