import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .group import Group

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Automorphism:
    """
    A bijection of element indices that preserves the multiplication table.

    Also used for isomorphisms between two groups, in which case perm[i] is an index of the target group.

    Attributes:
        perm (Tuple[int, ...]): perm[i] is the image of element i.
    """
    perm: Tuple[int, ...]

    def apply(self, g: int) -> int:
        return self.perm[g]

    def __call__(self, g: int) -> int:
        return self.perm[g]

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        """
        The composition self ∘ other (other is applied first).

        Args:
            other (Automorphism): The automorphism applied first.

        Returns:
            Automorphism: The composite map.
        """
        return Automorphism(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> 'Automorphism':
        result = [0] * len(self.perm)
        for i, image in enumerate(self.perm):
            result[image] = i
        return Automorphism(tuple(result))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.perm))

    def preserves(self, G: Group) -> bool:
        """
        Check the automorphism invariants against a group table.

        Args:
            G (Group): The group the map acts on.

        Returns:
            bool: True iff perm fixes 0, is a bijection and perm[g*h] = perm[g]*perm[h] for all pairs.
        """
        perm = self.perm
        if len(perm) != G.order or perm[0] != 0 or sorted(perm) != list(range(G.order)):
            return False
        rows = G.rows
        return all(perm[rows[a][b]] == rows[perm[a]][perm[b]] for a in range(G.order) for b in range(G.order))


class AutomorphismGroup:
    """
    The automorphism group of a group, as the list of all its automorphisms.

    Elements are sorted by their permutation, so the identity comes first and iteration order is deterministic.
    """
    def __init__(self, group: Group, elements: Sequence[Automorphism]):
        """
        Initialize the automorphism group.

        Args:
            group (Group): The group acted on.
            elements (Sequence[Automorphism]): All automorphisms, closed under composition.

        Attributes:
            group (Group): The group acted on.
            elements (Tuple[Automorphism, ...]): Sorted automorphisms, identity first.
        """
        self.group = group
        self.elements = tuple(sorted(elements))

    def get_elements(self) -> Tuple[Automorphism, ...]:
        return self.elements

    def identity(self) -> Automorphism:
        return self.elements[0]

    def is_closed(self) -> bool:
        """
        Check closure under composition and inverses.

        Returns:
            bool: True iff every composite and every inverse is again an element.
        """
        members = set(self.elements)
        for alpha in self.elements:
            if alpha.inverse() not in members:
                return False
            for beta in self.elements:
                if alpha.compose(beta) not in members:
                    return False
        return True

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Automorphism]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> Automorphism:
        return self.elements[index]

    def __repr__(self):
        return f"AutomorphismGroup({self.group.name}, size={len(self.elements)})"


def trivial_automorphism_group(G: Group) -> AutomorphismGroup:
    """The automorphism group containing only the identity, used to disable orbit pruning."""
    return AutomorphismGroup(G, [Automorphism(tuple(range(G.order)))])


def _extend_map(G: Group, H: Group, generators: Sequence[int], images: Sequence[int]) -> Optional[Dict[int, int]]:
    """
    Extend generator images to a homomorphism on the subgroup they generate.

    Walks the subgroup by right multiplication with the generators and checks every edge.

    Args:
        G (Group): The source group.
        H (Group): The target group.
        generators (Sequence[int]): Generators in G.
        images (Sequence[int]): Their images in H, same length.

    Returns:
        Optional[Dict[int, int]]: The injective map on the generated subgroup, or None on a conflict.
    """
    g_rows, h_rows = G.rows, H.rows
    phi = {0: 0}
    used = {0}
    frontier = [0]
    pairs = list(zip(generators, images))
    while frontier:
        next_frontier = []
        for x in frontier:
            image_x = phi[x]
            for g, image_g in pairs:
                y = g_rows[x][g]
                image_y = h_rows[image_x][image_g]
                known = phi.get(y)
                if known is None:
                    if image_y in used:
                        return None
                    phi[y] = image_y
                    used.add(image_y)
                    next_frontier.append(y)
                elif known != image_y:
                    return None
        frontier = next_frontier
    return phi


def _search_maps(G: Group, H: Group, first_only: bool) -> List[Tuple[int, ...]]:
    generators = G.greedy_generators()
    if not generators:
        return [tuple(range(G.order))]
    source_orders = G.element_orders()
    target_orders = H.element_orders()
    candidates = [[y for y in range(H.order) if target_orders[y] == source_orders[g]] for g in generators]
    found = []

    def search(images):
        if first_only and found:
            return
        depth = len(images)
        phi = _extend_map(G, H, generators[:depth], images) if depth else {0: 0}
        if phi is None:
            return
        if depth == len(generators):
            if len(phi) == G.order:
                found.append(tuple(phi[i] for i in range(G.order)))
            return
        for y in candidates[depth]:
            search(images + [y])

    search([])
    return found


def automorphisms(G: Group) -> AutomorphismGroup:
    """
    Compute the full automorphism group of a group.

    Images of a greedy generating set are chosen among elements of matching order and extended by word closure; every complete
    injective extension is an automorphism.

    Args:
        G (Group): The group.

    Returns:
        AutomorphismGroup: All automorphisms of G.
    """
    perms = _search_maps(G, G, first_only=False)
    result = AutomorphismGroup(G, [Automorphism(perm) for perm in perms])
    logger.debug("Aut(%s) has %d elements", G.name, len(result))
    return result


def invariants_match(G: Group, H: Group) -> bool:
    """
    Cheap isomorphism invariants: order multiset, center size, derived subgroup size.

    Returns:
        bool: False if G and H are certainly not isomorphic.
    """
    return (G.order == H.order
            and G.order_statistics() == H.order_statistics()
            and len(G.center()) == len(H.center())
            and len(G.derived_subgroup()) == len(H.derived_subgroup()))


def identify_iso(G: Group, H: Group) -> Optional[Automorphism]:
    """
    Find an isomorphism from G to H.

    Args:
        G (Group): The source group.
        H (Group): The target group.

    Returns:
        Optional[Automorphism]: A map with perm[i] the image in H of element i of G, or None if the groups are not isomorphic.
    """
    if not invariants_match(G, H):
        return None
    found = _search_maps(G, H, first_only=True)
    return Automorphism(found[0]) if found else None
