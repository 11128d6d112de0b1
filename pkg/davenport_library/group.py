import hashlib
import logging
from math import gcd
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import MAX_ORDER
from .errors import InvalidGroupTable, OrderTooLarge

logger = logging.getLogger(__name__)

GapId = Tuple[int, int]


class Group:
    """
    A finite group stored as a dense multiplication table over the element indices 0..n-1.

    The identity is always index 0. Instances are immutable after construction and safe to share between threads.
    """
    def __init__(self, table, name: str = "G", gap_id: Optional[GapId] = None, validate: bool = True):
        """
        Initialize a group from its multiplication table.

        Args:
            table (array-like): n x n table, table[i][j] is the index of the product of elements i and j.
            name (str): Display name, following the usual notation (C6, Dih8, Q8, ...).
            gap_id (Optional[GapId]): SmallGroup identification pair, when known.
            validate (bool): Check the group axioms. Only internal reindexing of an already checked table skips this.

        Attributes:
            order (int): Number of elements.
            table (numpy.ndarray): Read-only int64 multiplication table.
            rows (tuple): The same table as nested tuples, used for fast scalar products.
            identity (int): Index of the identity, always 0.
            inverse (tuple): inverse[i] is the index of the inverse of element i.
            name (str): Display name.
            gap_id (Optional[GapId]): SmallGroup identification pair.

        Raises:
            OrderTooLarge: If the table has more than MAX_ORDER rows.
            InvalidGroupTable: If validation fails.
        """
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroupTable(f"expected a non-empty square table, got shape {table.shape}")
        if table.shape[0] > MAX_ORDER:
            raise OrderTooLarge(f"group order {table.shape[0]} exceeds {MAX_ORDER}")
        table.setflags(write=False)
        self.order = int(table.shape[0])
        self.table = table
        self.rows = tuple(tuple(int(v) for v in row) for row in table)
        self.identity = 0
        self.name = name
        self.gap_id = tuple(gap_id) if gap_id is not None else None
        if validate:
            self._validate()
        self.inverse = tuple(int(v) for v in np.argmax(table == 0, axis=1))
        self._orders = None

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], multiply: Callable, name: str = "G", gap_id: Optional[GapId] = None) -> 'Group':
        """
        Build a group from concrete elements and their multiplication.

        Args:
            elements (Sequence[Hashable]): The elements, identity first.
            multiply (Callable): Binary operation on elements.
            name (str): Display name.
            gap_id (Optional[GapId]): SmallGroup identification pair.

        Returns:
            Group: The group with element i of the table standing for elements[i].
        """
        if len(elements) > MAX_ORDER:
            raise OrderTooLarge(f"group order {len(elements)} exceeds {MAX_ORDER}")
        index = {element: i for i, element in enumerate(elements)}
        if len(index) != len(elements):
            raise InvalidGroupTable("duplicate elements")
        table = np.zeros((len(elements), len(elements)), dtype=np.int64)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                product = multiply(a, b)
                if product not in index:
                    raise InvalidGroupTable(f"product of {a!r} and {b!r} leaves the element set")
                table[i, j] = index[product]
        return cls(table, name=name, gap_id=gap_id)

    def _validate(self):
        n = self.order
        table = self.table
        reference = np.arange(n)
        if table.min() < 0 or table.max() >= n:
            raise InvalidGroupTable("table entries out of range")
        if not (np.array_equal(table[0], reference) and np.array_equal(table[:, 0], reference)):
            raise InvalidGroupTable("element 0 is not the identity")
        if not (np.all(np.sort(table, axis=1) == reference) and np.all(np.sort(table, axis=0) == reference[:, None])):
            raise InvalidGroupTable("table is not a Latin square")
        inverse = np.argmax(table == 0, axis=1)
        if not np.all(table[inverse, reference] == 0):
            raise InvalidGroupTable("left and right inverses differ")
        if not np.array_equal(table[table], table[:, table]):
            raise InvalidGroupTable("multiplication is not associative")

    def get_name(self) -> str:
        """
        Get the display name of the group.

        Returns:
            str: The display name.
        """
        return self.name

    def get_gap_id(self) -> Optional[GapId]:
        """
        Get the SmallGroup identification pair.

        Returns:
            Optional[GapId]: The pair (order, number), or None if the group was not built from the registry.
        """
        return self.gap_id

    def renamed(self, name: str, gap_id: Optional[GapId] = None) -> 'Group':
        """Same table, new display name and identification."""
        return Group(self.table, name=name, gap_id=gap_id, validate=False)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, exponent: int) -> int:
        if exponent < 0:
            a, exponent = self.inverse[a], -exponent
        result = 0
        for _ in range(exponent):
            result = self.rows[result][a]
        return result

    def element_orders(self) -> Tuple[int, ...]:
        """
        Orders of all elements, indexed like the table.

        Returns:
            Tuple[int, ...]: orders[i] is the order of element i.
        """
        if self._orders is None:
            orders = []
            for a in range(self.order):
                x, k = a, 1
                while x != 0:
                    x = self.rows[x][a]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders

    def element_order(self, a: int) -> int:
        return self.element_orders()[a]

    def order_statistics(self) -> Tuple[int, ...]:
        """The multiset of element orders, sorted."""
        return tuple(sorted(self.element_orders()))

    def exponent(self) -> int:
        result = 1
        for k in set(self.element_orders()):
            result = result * k // gcd(result, k)
        return result

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders()

    def has_cyclic_subgroup_of_index_two(self) -> bool:
        """True iff the order is even and some element has half the group order."""
        return self.order % 2 == 0 and self.order >= 2 and (self.order // 2) in self.element_orders()

    def closure(self, generators: Iterable[int]) -> FrozenSet[int]:
        """
        The subgroup generated by a set of elements.

        Args:
            generators (Iterable[int]): Element indices.

        Returns:
            FrozenSet[int]: Indices of the generated subgroup.
        """
        generators = [g for g in set(generators) if g != 0]
        reached = {0}
        frontier = [0]
        while frontier:
            next_frontier = []
            for x in frontier:
                row = self.rows[x]
                for g in generators:
                    y = row[g]
                    if y not in reached:
                        reached.add(y)
                        next_frontier.append(y)
            frontier = next_frontier
        return frozenset(reached)

    def center(self) -> FrozenSet[int]:
        commuting = np.all(self.table == self.table.T, axis=1)
        return frozenset(int(i) for i in np.nonzero(commuting)[0])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        rows, inverse = self.rows, self.inverse
        return rows[rows[rows[inverse[a]][inverse[b]]][a]][b]

    def derived_subgroup(self) -> FrozenSet[int]:
        """
        The commutator subgroup G'.

        Returns:
            FrozenSet[int]: Indices of the subgroup generated by all commutators.
        """
        commutators = {self.commutator(a, b) for a in range(self.order) for b in range(self.order)}
        return self.closure(commutators)

    def greedy_generators(self) -> List[int]:
        """
        A generating set chosen greedily: elements of largest order first, each one kept only if it enlarges the subgroup generated so far.

        Returns:
            List[int]: Generator indices, empty for the trivial group.
        """
        orders = self.element_orders()
        candidates = sorted(range(1, self.order), key=lambda a: (-orders[a], a))
        generators = []
        reached = frozenset([0])
        for a in candidates:
            if len(reached) == self.order:
                break
            if a not in reached:
                generators.append(a)
                reached = self.closure(generators)
        return generators

    def subgroup(self, elements: Iterable[int], name: Optional[str] = None) -> 'Group':
        """
        The subgroup on the given elements as a group of its own.

        Args:
            elements (Iterable[int]): Indices closed under multiplication, containing 0.
            name (Optional[str]): Display name of the subgroup.

        Returns:
            Group: The subgroup, with element i standing for the i-th smallest index of elements.
        """
        members = sorted(set(elements))
        if not members or members[0] != 0:
            raise InvalidGroupTable("a subgroup must contain the identity")
        position = {g: i for i, g in enumerate(members)}
        try:
            table = [[position[self.rows[a][b]] for b in members] for a in members]
        except KeyError:
            raise InvalidGroupTable("elements are not closed under multiplication")
        return Group(table, name=name or f"{self.name}[{len(members)}]", validate=False)

    def fingerprint(self) -> str:
        """
        Identify the exact table: the order followed by the sha256 digest of the table.

        Returns:
            str: '<order>:<hexdigest>'.
        """
        digest = hashlib.sha256(self.table.astype('<i8').tobytes()).hexdigest()
        return f"{self.order}:{digest}"

    def same_table(self, other: 'Group') -> bool:
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __len__(self):
        return self.order

    def __repr__(self):
        gap = f", gap_id={self.gap_id}" if self.gap_id else ""
        return f"Group({self.name}, order={self.order}{gap})"


def element_index(elements: Sequence[Hashable]) -> Dict[Hashable, int]:
    return {element: i for i, element in enumerate(elements)}
