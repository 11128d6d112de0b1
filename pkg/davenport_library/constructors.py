import itertools
import logging
from math import gcd
from typing import Callable, Dict, List, Mapping, Sequence, Tuple, Union

import numpy as np
from sympy import factorint, isprime
from sympy.combinatorics import Permutation

from .automorphism import Automorphism
from .config import MAX_ORDER, MAX_PERMUTATION_DEGREE
from .errors import InvalidAction, InvalidParameter, NotAbelian, NotAHomomorphism, OrderTooLarge
from .group import Group

logger = logging.getLogger(__name__)

Cycles = Sequence[Sequence[int]]


def _check_order(order: int):
    if order > MAX_ORDER:
        raise OrderTooLarge(f"group order {order} exceeds {MAX_ORDER}")


def cyclic(n: int) -> Group:
    """
    The cyclic group C_n, element i standing for the i-th power of a generator.

    Args:
        n (int): The order, at least 1.

    Returns:
        Group: C_n.
    """
    if n < 1:
        raise InvalidParameter(f"cyclic group order must be positive, got {n}")
    _check_order(n)
    elements = np.arange(n)
    return Group(np.add.outer(elements, elements) % n, name=f"C{n}")


def direct_product(G: Group, H: Group) -> Group:
    """
    The direct product G x H on index pairs (i, j), flattened to i*|H| + j.

    Args:
        G (Group): The first factor.
        H (Group): The second factor.

    Returns:
        Group: G x H.

    Raises:
        OrderTooLarge: If |G|*|H| exceeds MAX_ORDER.
    """
    _check_order(G.order * H.order)
    h = H.order
    table = G.table[:, None, :, None] * h + H.table[None, :, None, :]
    return Group(table.reshape(G.order * h, G.order * h), name=f"{G.name}x{H.name}")


def abelian_group(factors: Sequence[int]) -> Group:
    """
    The abelian group C_{m1} x ... x C_{mr}.

    Args:
        factors (Sequence[int]): Cyclic factor orders, factors equal to 1 are dropped.

    Returns:
        Group: The product, C1 for an empty list.
    """
    factors = [m for m in factors if m != 1]
    if any(m < 1 for m in factors):
        raise InvalidParameter(f"cyclic factors must be positive, got {factors}")
    _check_order(int(np.prod(factors)) if factors else 1)
    if not factors:
        return cyclic(1)
    result = cyclic(factors[0])
    for m in factors[1:]:
        result = direct_product(result, cyclic(m))
    return result


def abelian_invariants(G: Group) -> Tuple[int, ...]:
    """
    Invariant factors m1 | m2 | ... | mr of an abelian group, recovered from element orders.

    For each prime p the number of elements killed by p^k determines the p-primary part.

    Args:
        G (Group): An abelian group.

    Returns:
        Tuple[int, ...]: Invariant factors in ascending order, empty for the trivial group.

    Raises:
        NotAbelian: If G is not abelian.
    """
    if not G.is_abelian():
        raise NotAbelian(f"{G.name} is not abelian")
    orders = G.element_orders()
    primary: Dict[int, List[int]] = {}
    for p, e in factorint(G.order).items():
        exponents = []
        previous_rank = None
        for k in range(e, 0, -1):
            # the ratio is p to the number of cyclic p-factors of exponent >= k
            killed = sum(1 for o in orders if (p ** k) % o == 0)
            killed_below = sum(1 for o in orders if (p ** (k - 1)) % o == 0)
            ratio, at_least_k = killed // killed_below, 0
            while ratio > 1:
                ratio //= p
                at_least_k += 1
            count = at_least_k - (previous_rank or 0)
            exponents.extend([k] * count)
            previous_rank = at_least_k
        primary[p] = exponents
    rank = max((len(v) for v in primary.values()), default=0)
    factors = [1] * rank
    for p, exponents in primary.items():
        # exponents are descending; the largest goes into the last factor
        for position, k in enumerate(exponents):
            factors[rank - 1 - position] *= p ** k
    return tuple(factors)


def semidirect_cyclic(m: int, n: int, d: int) -> Group:
    """
    The semidirect product C_m ⋊_d C_n = <a, b | a^m = b^n = 1, b a b^-1 = a^d>.

    Element a^i b^j is stored at index j*m + i.

    Args:
        m (int): Order of the normal cyclic factor.
        n (int): Order of the acting cyclic factor.
        d (int): Exponent of the action.

    Returns:
        Group: The product of order m*n.

    Raises:
        InvalidAction: If d is not a unit modulo m or d^n is not 1 modulo m.
    """
    if m < 1 or n < 1:
        raise InvalidParameter(f"factor orders must be positive, got {m} and {n}")
    _check_order(m * n)
    d %= m
    if gcd(d, m) != 1 or pow(d, n, m) != 1 % m:
        raise InvalidAction(f"a -> a^{d} is not an automorphism of C{m} of order dividing {n}")
    powers = [pow(d, j, m) for j in range(n)]
    elements = [(i, j) for j in range(n) for i in range(m)]

    def multiply(x, y):
        return (x[0] + y[0] * powers[x[1]]) % m, (x[1] + y[1]) % n

    return Group.from_elements(elements, multiply, name=f"C{m}:C{n}(d={d})")


def dihedral(two_m: int) -> Group:
    """The dihedral group Dih_{2m} of order 2m, as C_m ⋊_{-1} C_2."""
    if two_m < 2 or two_m % 2:
        raise InvalidParameter(f"dihedral group order must be even and positive, got {two_m}")
    return semidirect_cyclic(two_m // 2, 2, -1).renamed(f"Dih{two_m}")


def dicyclic(four_m: int) -> Group:
    """
    The dicyclic group Dic_{4m} = <a, b | a^{2m} = 1, b^2 = a^m, b a b^-1 = a^-1>.

    Built on the cyclic subgroup <a> of order 2m and its coset, since the group does not split.
    Element a^i b^e is stored at index e*2m + i.

    Args:
        four_m (int): The order, a positive multiple of 4.

    Returns:
        Group: Dic_{4m}. Dic_8 is the quaternion group.
    """
    if four_m < 4 or four_m % 4:
        raise InvalidParameter(f"dicyclic group order must be a positive multiple of 4, got {four_m}")
    _check_order(four_m)
    m = four_m // 4
    elements = [(i, e) for e in range(2) for i in range(2 * m)]

    def multiply(x, y):
        (i, e), (j, f) = x, y
        exponent = i + (j if e == 0 else -j)
        if e + f == 2:
            return (exponent + m) % (2 * m), 0
        return exponent % (2 * m), e + f

    return Group.from_elements(elements, multiply, name=f"Dic{four_m}")


def semidihedral(two_k: int) -> Group:
    """The semidihedral group SD_{2^k} = C_{2^{k-1}} ⋊_d C_2 with d = 2^{k-2} - 1, for k >= 4."""
    k = two_k.bit_length() - 1
    if two_k != 2 ** k or k < 4:
        raise InvalidParameter(f"semidihedral group order must be a power of 2 at least 16, got {two_k}")
    return semidirect_cyclic(2 ** (k - 1), 2, 2 ** (k - 2) - 1).renamed(f"SD{two_k}")


def modular(p: int, k: int) -> Group:
    """
    The modular group M_{p^k} = C_{p^{k-1}} ⋊_d C_p with d = p^{k-2} + 1.

    Needs k >= 3, and k >= 4 for p = 2: the same construction for 2^3 gives Dih8.
    """
    if not isprime(p) or k < 3:
        raise InvalidParameter(f"modular group needs a prime p and k >= 3, got p={p}, k={k}")
    if p == 2 and k == 3:
        raise InvalidParameter("M8 would be Dih8; modular 2-groups start at order 16")
    return semidirect_cyclic(p ** (k - 1), p, p ** (k - 2) + 1).renamed(f"M{p ** k}")


def heisenberg(p: int) -> Group:
    """
    The Heisenberg group of unitriangular 3x3 matrices over F_p.

    The matrix [[1, x, z], [0, 1, y], [0, 0, 1]] is stored as the triple (x, y, z).

    Args:
        p (int): A prime with p^3 <= MAX_ORDER.

    Returns:
        Group: The group of order p^3, named H27 for p = 3.
    """
    if not isprime(p):
        raise InvalidParameter(f"heisenberg group needs a prime, got {p}")
    _check_order(p ** 3)
    elements = list(itertools.product(range(p), repeat=3))

    def multiply(a, b):
        return (a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p

    return Group.from_elements(elements, multiply, name=f"H{p ** 3}")


def _as_permutation(generator: Union[Permutation, Cycles], degree: int) -> Permutation:
    if isinstance(generator, Permutation):
        return Permutation(generator.array_form, size=degree)
    cycles = [[point - 1 for point in cycle] for cycle in generator if len(cycle) > 1]
    if any(point < 0 or point >= degree for cycle in cycles for point in cycle):
        raise InvalidParameter(f"cycle points must lie in 1..{degree}")
    return Permutation(cycles, size=degree)


def perm_group(degree: int, generators: Sequence[Union[Permutation, Cycles]], name: str = None) -> Group:
    """
    The permutation group generated by a list of permutations.

    Elements are discovered breadth-first from the identity, so the indexing only depends on the generator list.

    Args:
        degree (int): Number of points, at most MAX_PERMUTATION_DEGREE.
        generators (Sequence): Each generator is a sympy Permutation or a list of 1-based cycles, e.g. [(1, 2, 3)].
        name (str): Display name.

    Returns:
        Group: The generated group.

    Raises:
        OrderTooLarge: If the closure grows beyond MAX_ORDER elements.
    """
    if degree < 1 or degree > MAX_PERMUTATION_DEGREE:
        raise InvalidParameter(f"permutation degree must lie in 1..{MAX_PERMUTATION_DEGREE}, got {degree}")
    gens = [_as_permutation(g, degree) for g in generators]
    identity = Permutation(list(range(degree)))
    elements = [identity]
    seen = {tuple(identity.array_form)}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in gens:
                y = x * g
                key = tuple(y.array_form)
                if key not in seen:
                    seen.add(key)
                    elements.append(y)
                    next_frontier.append(y)
                    if len(elements) > MAX_ORDER:
                        raise OrderTooLarge(f"permutation group exceeds {MAX_ORDER} elements")
        frontier = next_frontier
    return Group.from_elements(elements, lambda a, b: a * b, name=name or f"<{len(gens)} perms on {degree}>")


def sl2_f3() -> Group:
    """
    SL_2(F_3), the 24 matrices of determinant 1 over the field with three elements.

    Returns:
        Group: SL(2,3), with the identity matrix at index 0.
    """
    matrices = [m for m in itertools.product(range(3), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]
    matrices.remove((1, 0, 0, 1))
    matrices.insert(0, (1, 0, 0, 1))

    def multiply(a, b):
        product = np.array(a).reshape(2, 2) @ np.array(b).reshape(2, 2) % 3
        return tuple(int(v) for v in product.flat)

    return Group.from_elements(matrices, multiply, name="SL(2,3)")


def _normalize_action(N: Group, H: Group, action) -> List[Tuple[int, ...]]:
    if callable(action) and not isinstance(action, Mapping):
        raw = [action(h) for h in range(H.order)]
    else:
        raw = [action[h] for h in range(H.order)]
    return [tuple(a.perm) if isinstance(a, Automorphism) else tuple(a) for a in raw]


def semidirect_general(N: Group, H: Group, action: Union[Mapping, Callable], name: str = None) -> Group:
    """
    The semidirect product N ⋊ H with (n1, h1)(n2, h2) = (n1 * φ_{h1}(n2), h1 h2).

    Element (n, h) is stored at index h*|N| + n.

    Args:
        N (Group): The normal factor.
        H (Group): The acting factor.
        action (Mapping or Callable): Maps every element index of H to an Automorphism of N (or its permutation).
        name (str): Display name.

    Returns:
        Group: The product of order |N|*|H|.

    Raises:
        NotAHomomorphism: If the action is not a homomorphism H -> Aut(N).
    """
    _check_order(N.order * H.order)
    phi = _normalize_action(N, H, action)
    for h, perm in enumerate(phi):
        if not Automorphism(perm).preserves(N):
            raise NotAHomomorphism(f"image of element {h} is not an automorphism of {N.name}")
    for h1 in range(H.order):
        for h2 in range(H.order):
            composite = tuple(phi[h1][phi[h2][n]] for n in range(N.order))
            if phi[H.rows[h1][h2]] != composite:
                raise NotAHomomorphism(f"action does not respect the product of elements {h1} and {h2}")
    elements = [(n, h) for h in range(H.order) for n in range(N.order)]

    def multiply(x, y):
        return N.rows[x[0]][phi[x[1]][y[0]]], H.rows[x[1]][y[1]]

    return Group.from_elements(elements, multiply, name=name or f"{N.name}:{H.name}")


def inversion(A: Group) -> Automorphism:
    """The map a -> a^-1, an automorphism exactly when A is abelian."""
    return Automorphism(tuple(A.inverse))


def generalized_dihedral(A: Group) -> Group:
    """
    The generalized dihedral group Dih(A) = A ⋊_{-1} C_2.

    Args:
        A (Group): An abelian group.

    Returns:
        Group: Dih(A) of order 2|A|.

    Raises:
        NotAbelian: If A is not abelian.
    """
    if not A.is_abelian():
        raise NotAbelian(f"{A.name} is not abelian")
    identity = tuple(range(A.order))
    flip = inversion(A).perm
    return semidirect_general(A, cyclic(2), {0: identity, 1: flip}, name=f"Dih({A.name})")
