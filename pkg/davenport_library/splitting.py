from bisect import insort
from typing import List

from .errors import EmptySequence
from .group import Group
from .sequence import Seq, remove_one, support


def splittings(G: Group, S: Seq) -> List[Seq]:
    """
    All sequences obtained from S by replacing one term g with a pair x, x^-1 g, where x is neither 1 nor g.

    Args:
        G (Group): The group.
        S (Seq): A non-empty canonical sequence.

    Returns:
        List[Seq]: The distinct splittings, sorted.

    Raises:
        EmptySequence: If S is empty.
    """
    if not S:
        raise EmptySequence("an empty sequence has no splittings")
    rows, inverse = G.rows, G.inverse
    found = set()
    for g in support(S):
        base = remove_one(S, g)
        for x in range(1, G.order):
            if x == g:
                continue
            split = list(base)
            insort(split, x)
            insort(split, rows[inverse[x]][g])
            found.add(tuple(split))
    return sorted(found)
