from typing import Dict, FrozenSet, Optional, Tuple

from .automorphism import Automorphism, AutomorphismGroup
from .config import COMPACT_ENTRY_OVERHEAD_BYTES, ENTRY_BYTES_PER_TERM, ENTRY_OVERHEAD_BYTES
from .orbit import OrbitIndex
from .product_set import ProductSet
from .sequence import Seq


class LevelSet(OrbitIndex):
    """
    All sequences of one length found by an enumeration (product-one free sequences or atoms), grouped in Aut(G)-orbits.

    For product-one free levels the product set is stored for representatives only; the product set of any other member is
    the image of its representative's product set under the locating automorphism.

    A compact level keeps its members as packed byte strings without locators. Atom levels use it, since every one of them stays
    in memory until the run ends and none of them carries product sets.
    """
    def __init__(self, k: int, automorphism_group: AutomorphismGroup, compact: bool = False):
        """
        Initialize an empty level.

        Args:
            k (int): Length of every member.
            automorphism_group (AutomorphismGroup): The acting automorphisms.
            compact (bool): Store members as bytes, without locating automorphisms.

        Attributes:
            k (int): Length of every member.
            compact (bool): Whether members are stored packed.
            products (Dict[Seq, ProductSet]): Product sets of representatives, for levels registered with products.
            released (bool): True once the member map has been dropped.
        """
        super().__init__(automorphism_group)
        self.k = k
        self.compact = compact
        if compact:
            self.members = set()
        self.products: Dict[Seq, ProductSet] = {}
        self._count = 0
        self.released = False

    def _register(self, rep: Seq, locators: Dict[Seq, int]):
        if not self.compact:
            super()._register(rep, locators)
            return
        # group orders stay below 256, so one byte per term
        self.members.update(bytes(member) for member in locators)

    def _on_new_orbit(self, S: Seq, rep: Seq, locators: Dict[Seq, int], payload):
        self._count += len(locators)
        if payload is None:
            return
        # payload is π(S) with S = α(rep); π(rep) = α^-1(π(S))
        inverse = self.automorphisms[locators[S]].inverse().perm
        self.products[rep] = frozenset(inverse[p] for p in payload)

    def __contains__(self, S: Seq) -> bool:
        if self.compact:
            return bytes(S) in self.members
        return S in self.members

    def locate(self, S: Seq) -> Optional[Tuple[Seq, Automorphism]]:
        if not self.compact:
            return super().locate(S)
        if S not in self:
            return None
        rep, locators = self.orbit_locators(S)
        return rep, self.automorphisms[locators[S]]

    def representative(self, S: Seq) -> Seq:
        if not self.compact:
            return super().representative(S)
        return self.orbit_locators(S)[0]

    def product_set_of(self, S: Seq) -> Optional[ProductSet]:
        """
        π(S) for a registered member, recovered from its representative.

        Returns:
            Optional[ProductSet]: None if S is not registered or no product set was stored for its orbit.
        """
        located = self.locate(S)
        if located is None:
            return None
        rep, alpha = located
        products = self.products.get(rep)
        if products is None:
            return None
        perm = alpha.perm
        return frozenset(perm[p] for p in products)

    def release(self):
        """Drop the member map, keeping representatives, counts and product sets of representatives."""
        self.members = set() if self.compact else {}
        self.released = True

    def full(self) -> FrozenSet[Seq]:
        if self.compact:
            return frozenset(tuple(member) for member in self.members)
        return frozenset(self.members)

    def count(self) -> int:
        return self._count

    def classes(self) -> int:
        return len(self.representatives)

    def estimated_bytes(self) -> int:
        """Rough memory footprint of the member map."""
        if self.released:
            return 0
        if self.compact:
            return self._count * (COMPACT_ENTRY_OVERHEAD_BYTES + self.k)
        return self._count * (ENTRY_OVERHEAD_BYTES + self.k * ENTRY_BYTES_PER_TERM)
