import logging
from typing import FrozenSet, Iterable, List

from .config import SUBGROUP_ORDER_LIMIT
from .errors import InvalidParameter, OrderTooLarge
from .group import Group

logger = logging.getLogger(__name__)


def subgroups(G: Group) -> List[FrozenSet[int]]:
    """
    All subgroups of a group, as sets of element indices.

    Starts from the cyclic subgroups and repeatedly extends each known subgroup by one outside element, until no new subgroup appears.

    Args:
        G (Group): A group of order at most SUBGROUP_ORDER_LIMIT.

    Returns:
        List[FrozenSet[int]]: Subgroups sorted by size, then by their sorted element indices.

    Raises:
        OrderTooLarge: If G is larger than SUBGROUP_ORDER_LIMIT.
    """
    if G.order > SUBGROUP_ORDER_LIMIT:
        raise OrderTooLarge(f"subgroup enumeration is limited to order {SUBGROUP_ORDER_LIMIT}")
    found = {G.closure([g]) for g in range(G.order)}
    pending = list(found)
    while pending:
        subgroup = pending.pop()
        # a few generators are enough to rebuild the subgroup
        generators = G.subgroup(subgroup).greedy_generators()
        members = sorted(subgroup)
        base = [members[i] for i in generators]
        for g in range(G.order):
            if g in subgroup:
                continue
            extended = G.closure(base + [g])
            if extended not in found:
                found.add(extended)
                pending.append(extended)
    result = sorted(found, key=lambda s: (len(s), sorted(s)))
    logger.debug("%s has %d subgroups", G.name, len(result))
    return result


def is_normal(G: Group, N: Iterable[int]) -> bool:
    """True iff g n g^-1 lies in N for every g in G and n in N."""
    members = frozenset(N)
    rows, inverse = G.rows, G.inverse
    return all(rows[rows[g][n]][inverse[g]] in members for g in range(G.order) for n in members)


def normal_subgroups(G: Group) -> List[FrozenSet[int]]:
    """
    The normal subgroups of a group.

    Args:
        G (Group): A group of order at most SUBGROUP_ORDER_LIMIT.

    Returns:
        List[FrozenSet[int]]: Normal subgroups, in the order of subgroups(G).
    """
    return [N for N in subgroups(G) if is_normal(G, N)]


def quotient(G: Group, N: Iterable[int]) -> Group:
    """
    The factor group G/N.

    Cosets are numbered by their smallest element, so the coset N itself is the identity.

    Args:
        G (Group): The group.
        N (Iterable[int]): A normal subgroup.

    Returns:
        Group: G/N of order |G|/|N|.

    Raises:
        InvalidParameter: If N is not a normal subgroup of G.
    """
    members = frozenset(N)
    if 0 not in members or G.closure(members) != members or not is_normal(G, members):
        raise InvalidParameter("quotient needs a normal subgroup")
    rows = G.rows
    cosets = {}
    for g in range(G.order):
        coset = frozenset(rows[g][n] for n in members)
        cosets.setdefault(coset, min(coset))
    representatives = sorted(cosets.values())
    position = {}
    for coset, representative in cosets.items():
        for g in coset:
            position[g] = representatives.index(representative)
    table = [[position[rows[a][b]] for b in representatives] for a in representatives]
    return Group(table, name=f"{G.name}/N{len(members)}")
