import logging
from threading import Lock
from typing import Container, Dict, FrozenSet, Optional

from .config import ATOM_ORACLE_CAP, DEFAULT_PRODUCT_SET_CAP
from .errors import LengthCap
from .group import Group
from .sequence import EMPTY, Seq, proper_sub_multisets, remove, remove_one, sub_multisets, support

logger = logging.getLogger(__name__)

ProductSet = FrozenSet[int]


class ProductSetCache:
    """
    The ProductSetCache stores π(S) by canonical sequence, so that sub-multisets shared between several product set computations
    are evaluated once. Entries are only valid for the group they were computed in.
    """
    def __init__(self):
        """
        Initializes an empty ProductSetCache.

        Attributes:
            cache (Dict[Seq, ProductSet]): Product sets by canonical sequence.
            lock (Lock): Guards concurrent insertion.
            hits (int): Number of lookups answered from the cache.
        """
        self.cache: Dict[Seq, ProductSet] = {EMPTY: frozenset([0])}
        self.lock = Lock()
        self.hits = 0

    def get(self, S: Seq) -> Optional[ProductSet]:
        """
        Retrieves the product set of a sequence.

        Args:
            S (Seq): A canonical sequence.

        Returns:
            Optional[ProductSet]: The stored product set, or None.
        """
        products = self.cache.get(S)
        if products is not None:
            self.hits += 1
        return products

    def put(self, S: Seq, products: ProductSet) -> ProductSet:
        """
        Stores a product set unless one is already present.

        Args:
            S (Seq): A canonical sequence.
            products (ProductSet): Its product set.

        Returns:
            ProductSet: The stored value.
        """
        with self.lock:
            return self.cache.setdefault(S, products)

    def clear(self):
        """
        Clears all entries except the empty sequence.
        """
        with self.lock:
            self.cache.clear()
            self.cache[EMPTY] = frozenset([0])

    def __len__(self):
        return len(self.cache)


def right_multiply(G: Group, products: ProductSet, g: int) -> ProductSet:
    """{p*g : p in products}."""
    rows = G.rows
    return frozenset(rows[p][g] for p in products)


def _product_set(G: Group, S: Seq, cache: ProductSetCache) -> ProductSet:
    products = cache.get(S)
    if products is not None:
        return products
    rows = G.rows
    result = set()
    for g in support(S):
        for p in _product_set(G, remove_one(S, g), cache):
            result.add(rows[p][g])
    return cache.put(S, frozenset(result))


def product_set(G: Group, S: Seq, cap: int = DEFAULT_PRODUCT_SET_CAP, cache: Optional[ProductSetCache] = None) -> ProductSet:
    """
    The set π(S) of products of all orderings of S.

    Uses π(∅) = {1} and π(S) = ∪_{g in supp(S)} π(S·g^[-1])·g, memoized by canonical form.

    Args:
        G (Group): The group.
        S (Seq): A canonical sequence.
        cap (int): Longest accepted sequence.
        cache (Optional[ProductSetCache]): Memo shared between calls over the same group.

    Returns:
        ProductSet: The element indices reachable as ordered products.

    Raises:
        LengthCap: If S is longer than cap.
    """
    if len(S) > cap:
        raise LengthCap(f"product sets are limited to {cap} terms, got {len(S)}")
    return _product_set(G, S, cache if cache is not None else ProductSetCache())


def is_product_one(G: Group, S: Seq, cap: int = DEFAULT_PRODUCT_SET_CAP, cache: Optional[ProductSetCache] = None) -> bool:
    return 0 in product_set(G, S, cap, cache)


def big_pi_contains_one(G: Group, S: Seq, cap: int = DEFAULT_PRODUCT_SET_CAP) -> bool:
    """
    Whether 1 lies in Π(S), i.e. some non-empty subsequence of S is product-one.

    Args:
        G (Group): The group.
        S (Seq): A canonical sequence.
        cap (int): Longest accepted sequence.

    Returns:
        bool: False iff S is product-one free.

    Raises:
        LengthCap: If S is longer than cap.
    """
    if len(S) > cap:
        raise LengthCap(f"product sets are limited to {cap} terms, got {len(S)}")
    cache = ProductSetCache()
    for size in range(1, len(S) + 1):
        for T in sub_multisets(S, size):
            if 0 in _product_set(G, T, cache):
                return True
    return False


def is_product_one_free_incremental(G: Group, R: Seq, prev_level: Container[Seq], pi_R: ProductSet) -> bool:
    """
    Product-one freeness of R from the previous level.

    R of length k is product-one free iff 1 is not in π(R) and R·g^[-1] is product-one free for every term g.

    Args:
        G (Group): The group.
        R (Seq): A non-empty canonical sequence.
        prev_level (Container[Seq]): All product-one free sequences of length k - 1.
        pi_R (ProductSet): π(R).

    Returns:
        bool: True iff R is product-one free.
    """
    if 0 in pi_R:
        return False
    return all(remove_one(R, g) in prev_level for g in support(R))


def is_atom_bruteforce(G: Group, S: Seq, cap: int = ATOM_ORACLE_CAP) -> bool:
    """
    Atom test straight from the definition, for cross-checking the engine.

    Args:
        G (Group): The group.
        S (Seq): A canonical sequence.
        cap (int): Longest accepted sequence.

    Returns:
        bool: True iff S is product-one, non-empty and not the product of two non-empty product-one sequences.

    Raises:
        LengthCap: If S is longer than cap.
    """
    if len(S) > cap:
        raise LengthCap(f"the atom oracle is limited to {cap} terms, got {len(S)}")
    if not S:
        return False
    cache = ProductSetCache()
    if 0 not in _product_set(G, S, cache):
        return False
    for T in proper_sub_multisets(S):
        if 0 in _product_set(G, T, cache) and 0 in _product_set(G, remove(S, T), cache):
            return False
    return True
