import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .constructors import (abelian_group, cyclic, dicyclic, dihedral, direct_product, generalized_dihedral, heisenberg,
                           modular, perm_group, semidihedral, semidirect_cyclic, semidirect_general, sl2_f3)
from .errors import CorruptFile, UnknownGroup
from .group import GapId, Group

logger = logging.getLogger(__name__)

DATA_FILE = os.path.join(os.path.dirname(__file__), 'data', 'small_groups.json')
DATA_VERSION = 1
TABLE_ORDER_LIMIT = 31


@dataclass(frozen=True)
class TableRow:
    """
    One row of the table of non-abelian groups of order less than 32.

    Attributes:
        gap_id (GapId): SmallGroup identification pair.
        name (str): Display name.
        d (int): Small Davenport constant.
        beta (int): Noether number.
        D (int): Large Davenport constant.
        source (str): Where the Noether number comes from.
    """
    gap_id: GapId
    name: str
    d: int
    beta: int
    D: int
    source: str

    def get_order(self) -> int:
        return self.gap_id[0]


@lru_cache(maxsize=None)
def _load() -> Tuple[Tuple[TableRow, ...], Dict[GapId, Tuple[int, ...]]]:
    try:
        with open(DATA_FILE, encoding='utf-8') as handle:
            document = json.load(handle)
        if document.get('version') != DATA_VERSION:
            raise CorruptFile(f"{DATA_FILE}: unsupported version {document.get('version')}")
        rows = tuple(TableRow(gap_id=tuple(row['gap_id']), name=row['name'], d=row['d'], beta=row['beta'],
                              D=row['D'], source=row['source']) for row in document['rows'])
        abelian = {tuple(entry['gap_id']): tuple(entry['factors']) for entry in document['abelian']}
    except (OSError, ValueError, KeyError, TypeError) as error:
        raise CorruptFile(f"{DATA_FILE}: {error}")
    return rows, abelian


def table_rows(order_max: int = TABLE_ORDER_LIMIT, order_min: int = 1) -> List[TableRow]:
    """
    The non-abelian table rows, ordered by identification pair.

    Args:
        order_max (int): Largest group order to include.
        order_min (int): Smallest group order to include.

    Returns:
        List[TableRow]: The selected rows.
    """
    rows, _ = _load()
    return sorted((row for row in rows if order_min <= row.get_order() <= order_max), key=lambda row: row.gap_id)


def table_row(gap_id: GapId) -> TableRow:
    """
    The table row of a non-abelian group.

    Raises:
        UnknownGroup: If gap_id is not a non-abelian group of order less than 32.
    """
    gap_id = tuple(gap_id)
    for row in _load()[0]:
        if row.gap_id == gap_id:
            return row
    raise UnknownGroup(f"no non-abelian table row for {gap_id}")


def abelian_factors(gap_id: GapId) -> Optional[Tuple[int, ...]]:
    """Cyclic factors of an abelian SmallGroup id, None if the id is not abelian or unknown."""
    return _load()[1].get(tuple(gap_id))


def abelian_gap_ids(order_max: int = TABLE_ORDER_LIMIT) -> List[GapId]:
    return sorted(gap_id for gap_id in _load()[1] if gap_id[0] <= order_max)


def all_gap_ids(order_max: int = TABLE_ORDER_LIMIT) -> List[GapId]:
    """Every known identification pair up to the given order, abelian and non-abelian."""
    return sorted(abelian_gap_ids(order_max) + [row.gap_id for row in table_rows(order_max)])


def abelian_name(factors: Tuple[int, ...]) -> str:
    return "x".join(f"C{m}" for m in factors) if factors else "C1"


def _swap_action() -> Tuple[int, ...]:
    # (i, j) -> (j, i) on C2xC2 with index i*2 + j
    return 0, 2, 1, 3


def _c2c2_by_c4() -> Group:
    identity = (0, 1, 2, 3)
    swap = _swap_action()
    return semidirect_general(direct_product(cyclic(2), cyclic(2)), cyclic(4), {0: identity, 1: swap, 2: identity, 3: swap})


def pauli() -> Group:
    """
    The Pauli group (C4 x C2) ⋊_φ C2 with φ(a^i b^j) = a^(i+2j) b^j.

    The generator of C2 fixes a and sends b to a^2 b; the result has a center of order 4 and seven involutions.
    """
    base = direct_product(cyclic(4), cyclic(2))
    identity = tuple(range(8))
    twist = tuple(((i + 2 * j) % 4) * 2 + j for i in range(4) for j in range(2))
    return semidirect_general(base, cyclic(2), {0: identity, 1: twist})


def _c3_by_dih8() -> Group:
    # Dih8 element r^i s^j sits at index j*4 + i; the kernel of the action is {1, r^2, s, r^2 s}
    D8 = dihedral(8)
    identity = (0, 1, 2)
    inverse = (0, 2, 1)
    return semidirect_general(cyclic(3), D8, lambda h: inverse if (h % 4) % 2 else identity)


def alternating_4() -> Group:
    return perm_group(4, [[(1, 2, 3)], [(2, 3, 4)]], name="A4")


def symmetric_4() -> Group:
    return perm_group(4, [[(1, 2, 3, 4)], [(1, 2)]], name="S4")


_BUILDERS: Dict[GapId, Callable[[], Group]] = {
    (6, 1): lambda: dihedral(6),
    (8, 3): lambda: dihedral(8),
    (8, 4): lambda: dicyclic(8),
    (10, 1): lambda: dihedral(10),
    (12, 1): lambda: dicyclic(12),
    (12, 3): alternating_4,
    (12, 4): lambda: dihedral(12),
    (14, 1): lambda: dihedral(14),
    (16, 3): _c2c2_by_c4,
    (16, 4): lambda: semidirect_cyclic(4, 4, 3),
    (16, 6): lambda: modular(2, 4),
    (16, 7): lambda: dihedral(16),
    (16, 8): lambda: semidihedral(16),
    (16, 9): lambda: dicyclic(16),
    (16, 11): lambda: direct_product(dihedral(8), cyclic(2)),
    (16, 12): lambda: direct_product(dicyclic(8), cyclic(2)),
    (16, 13): pauli,
    (18, 1): lambda: dihedral(18),
    (18, 3): lambda: direct_product(dihedral(6), cyclic(3)),
    (18, 4): lambda: generalized_dihedral(direct_product(cyclic(3), cyclic(3))),
    (20, 1): lambda: dicyclic(20),
    (20, 3): lambda: semidirect_cyclic(5, 4, 2),
    (20, 4): lambda: dihedral(20),
    (21, 1): lambda: semidirect_cyclic(7, 3, 2),
    (22, 1): lambda: dihedral(22),
    (24, 1): lambda: semidirect_cyclic(3, 8, 2),
    (24, 3): sl2_f3,
    (24, 4): lambda: dicyclic(24),
    (24, 5): lambda: direct_product(dihedral(6), cyclic(4)),
    (24, 6): lambda: dihedral(24),
    (24, 7): lambda: direct_product(dicyclic(12), cyclic(2)),
    (24, 8): _c3_by_dih8,
    (24, 10): lambda: direct_product(dihedral(8), cyclic(3)),
    (24, 11): lambda: direct_product(dicyclic(8), cyclic(3)),
    (24, 12): symmetric_4,
    (24, 13): lambda: direct_product(alternating_4(), cyclic(2)),
    (24, 14): lambda: direct_product(dihedral(12), cyclic(2)),
    (26, 1): lambda: dihedral(26),
    (27, 3): lambda: heisenberg(3),
    (27, 4): lambda: modular(3, 3),
    (28, 1): lambda: dicyclic(28),
    (28, 3): lambda: dihedral(28),
    (30, 1): lambda: direct_product(dihedral(6), cyclic(5)),
    (30, 2): lambda: direct_product(dihedral(10), cyclic(3)),
    (30, 3): lambda: dihedral(30),
}


def registry(gap_id: GapId) -> Group:
    """
    Construct the group with a given SmallGroup identification.

    Args:
        gap_id (GapId): A non-abelian table row or an abelian group of order less than 32.

    Returns:
        Group: The group, named as in the table and carrying its gap_id.

    Raises:
        UnknownGroup: If the pair is not known.
    """
    return _build(tuple(gap_id))


@lru_cache(maxsize=None)
def _build(gap_id: GapId) -> Group:
    factors = abelian_factors(gap_id)
    if factors is not None:
        return abelian_group(factors).renamed(abelian_name(factors), gap_id)
    if gap_id not in _BUILDERS:
        raise UnknownGroup(f"no group registered as SmallGroup{gap_id}")
    group = _BUILDERS[gap_id]().renamed(table_row(gap_id).name, gap_id)
    logger.debug("built %s as SmallGroup%s", group.name, gap_id)
    return group
