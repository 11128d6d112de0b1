import logging
from threading import Lock
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .automorphism import Automorphism, AutomorphismGroup
from .sequence import Seq

logger = logging.getLogger(__name__)


def apply(alpha: Automorphism, S: Seq) -> Seq:
    """The canonical form of α(S)."""
    perm = alpha.perm
    return tuple(sorted(perm[g] for g in S))


def orbit(A: AutomorphismGroup, S: Seq) -> FrozenSet[Seq]:
    """
    The orbit of a sequence under an automorphism group.

    Args:
        A (AutomorphismGroup): The acting automorphisms.
        S (Seq): A canonical sequence.

    Returns:
        FrozenSet[Seq]: {α(S) : α in A}.
    """
    return frozenset(apply(alpha, S) for alpha in A)


def representative(A: AutomorphismGroup, S: Seq) -> Seq:
    """The lexicographically least member of the orbit of S."""
    return min(orbit(A, S))


class OrbitIndex:
    """
    Associates sequences with the representative of their Aut(G)-orbit.

    Orbits are registered whole. Every member remembers the position of an automorphism mapping the representative onto it,
    so data kept for representatives only can be transported to any member.
    """
    def __init__(self, automorphism_group: AutomorphismGroup):
        """
        Initialize an empty index.

        Args:
            automorphism_group (AutomorphismGroup): The acting automorphisms.

        Attributes:
            automorphisms (Tuple[Automorphism, ...]): The acting automorphisms, identity first.
            members (Dict[Seq, Tuple[Seq, int]]): Each registered sequence with its representative and the position of
                an automorphism α such that α(representative) = sequence.
            lock (Lock): Makes add_orbit an atomic insert-if-absent.
        """
        self.automorphisms = automorphism_group.get_elements()
        self.members: Dict[Seq, Tuple[Seq, int]] = {}
        self.representatives: List[Seq] = []
        self.lock = Lock()

    def orbit_locators(self, S: Seq) -> Tuple[Seq, Dict[Seq, int]]:
        """
        Compute the orbit of S together with a locating automorphism for every member.

        Args:
            S (Seq): A canonical sequence.

        Returns:
            Tuple[Seq, Dict[Seq, int]]: The representative, and for every member the position of the first automorphism
                mapping the representative onto it.
        """
        rep = min(apply(alpha, S) for alpha in self.automorphisms)
        locators: Dict[Seq, int] = {}
        for position, alpha in enumerate(self.automorphisms):
            locators.setdefault(apply(alpha, rep), position)
        return rep, locators

    def add_orbit(self, S: Seq, payload=None) -> Optional[Seq]:
        """
        Register the orbit of S unless it is already known.

        Args:
            S (Seq): A canonical sequence.
            payload: Data about S handed to _on_new_orbit, used by subclasses.

        Returns:
            Optional[Seq]: The representative of the new orbit, or None if S was already registered.
        """
        if S in self:
            return None
        rep, locators = self.orbit_locators(S)
        with self.lock:
            if S in self:
                return None
            self._register(rep, locators)
            self.representatives.append(rep)
            self._on_new_orbit(S, rep, locators, payload)
        return rep

    def _register(self, rep: Seq, locators: Dict[Seq, int]):
        for member, position in locators.items():
            self.members[member] = (rep, position)

    def _on_new_orbit(self, S: Seq, rep: Seq, locators: Dict[Seq, int], payload):
        """Hook for subclasses, called under the lock."""

    def locate(self, S: Seq) -> Optional[Tuple[Seq, Automorphism]]:
        """
        The representative of S and an automorphism mapping it onto S.

        Returns:
            Optional[Tuple[Seq, Automorphism]]: None if S is not registered.
        """
        entry = self.members.get(S)
        if entry is None:
            return None
        rep, position = entry
        return rep, self.automorphisms[position]

    def representative(self, S: Seq) -> Seq:
        entry = self.members.get(S)
        if entry is not None:
            return entry[0]
        return min(apply(alpha, S) for alpha in self.automorphisms)

    def get_representatives(self) -> List[Seq]:
        """Representatives in lexicographic order."""
        return sorted(self.representatives)

    def add_all(self, sequences: Iterable[Seq]):
        for S in sequences:
            self.add_orbit(S)

    def __contains__(self, S: Seq) -> bool:
        return S in self.members

    def __len__(self):
        return len(self.members)
