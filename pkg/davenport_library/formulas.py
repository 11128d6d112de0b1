import logging
from dataclasses import dataclass
from math import prod
from typing import List, Optional, Tuple

from sympy import factorint, isprime

from .constructors import abelian_invariants
from .errors import DivisibilityViolated, InvalidParameter, InvalidPrimes, UnknownGroup, UnsupportedShape
from .group import GapId, Group
from .registry import abelian_factors, table_row

logger = logging.getLogger(__name__)

SHAPE_ORDER_LIMIT = 2 ** 31


@dataclass(frozen=True)
class AbelianShape:
    """
    An abelian group given by its invariant factors.

    Attributes:
        invariant_factors (Tuple[int, ...]): m1 | m2 | ... | mr, all greater than 1.
    """
    invariant_factors: Tuple[int, ...]

    def __post_init__(self):
        factors = self.invariant_factors
        if any(m < 2 for m in factors):
            raise InvalidParameter(f"invariant factors must exceed 1, got {factors}")
        if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
            raise InvalidParameter(f"invariant factors must divide each other, got {factors}")
        if prod(factors) > SHAPE_ORDER_LIMIT:
            raise InvalidParameter(f"group order {prod(factors)} is too large")

    @classmethod
    def from_cyclic_factors(cls, factors: Tuple[int, ...]) -> 'AbelianShape':
        """
        Normalize any list of cyclic factor orders, e.g. (2, 3) becomes (6,).

        Args:
            factors (Tuple[int, ...]): Orders of cyclic direct factors.

        Returns:
            AbelianShape: The same group by invariant factors.
        """
        primary = {}
        for m in factors:
            if m < 1:
                raise InvalidParameter(f"cyclic factors must be positive, got {factors}")
            for p, e in factorint(m).items():
                primary.setdefault(p, []).append(p ** e)
        rank = max((len(powers) for powers in primary.values()), default=0)
        result = [1] * rank
        for powers in primary.values():
            for position, q in enumerate(sorted(powers, reverse=True)):
                result[rank - 1 - position] *= q
        return cls(tuple(result))

    @classmethod
    def from_group(cls, G: Group) -> 'AbelianShape':
        return cls(abelian_invariants(G))

    def order(self) -> int:
        return prod(self.invariant_factors)

    def rank(self) -> int:
        return len(self.invariant_factors)

    def is_p_group(self) -> bool:
        return len(factorint(self.order())) <= 1


def davenport_abelian(shape: AbelianShape) -> int:
    """
    Davenport constant of an abelian group, for the shapes with a known formula.

    Covers cyclic groups (n), rank two (m1 + m2 - 1), p-groups (1 + Σ (mi - 1)) and C2 x C2 x C2n (2n + 2).
    Every abelian group of order less than 32 has one of these shapes.

    Args:
        shape (AbelianShape): The group.

    Returns:
        int: D(G), which is also β(G) and d(G) + 1.

    Raises:
        UnsupportedShape: For any other shape.
    """
    factors = shape.invariant_factors
    if not factors:
        return 1
    if len(factors) == 1:
        return factors[0]
    if len(factors) == 2:
        return factors[0] + factors[1] - 1
    if shape.is_p_group():
        return 1 + sum(m - 1 for m in factors)
    if len(factors) == 3 and factors[0] == 2 and factors[1] == 2:
        return factors[2] + 2
    raise UnsupportedShape(f"no formula for the Davenport constant of shape {factors}")


def index_two_beta(order: int, dicyclic: bool) -> int:
    """
    Noether number of a non-cyclic group with a cyclic subgroup of index two.

    Args:
        order (int): Group order, even and at least 4.
        dicyclic (bool): Whether the group is Dic_{4m} with m > 1.

    Returns:
        int: |G|/2 + 2 for dicyclic groups, |G|/2 + 1 otherwise.
    """
    if order < 4 or order % 2:
        raise InvalidParameter(f"index-two formula needs an even order of at least 4, got {order}")
    return order // 2 + (2 if dicyclic and order >= 8 else 1)


def index_two_davenports(order: int, derived_order: int) -> Tuple[int, int]:
    """
    Small and large Davenport constants of a non-cyclic group with a cyclic subgroup of index two.

    Args:
        order (int): Group order.
        derived_order (int): Order of the commutator subgroup.

    Returns:
        Tuple[int, int]: (|G|/2, |G|/2 + |G'|).
    """
    if order < 4 or order % 2:
        raise InvalidParameter(f"index-two formula needs an even order of at least 4, got {order}")
    return order // 2, order // 2 + derived_order


def cpq_davenports(p: int, q: int) -> Tuple[int, int]:
    """
    Small and large Davenport constants of the non-abelian group C_p ⋊ C_q.

    Args:
        p (int): Odd prime, order of the normal subgroup.
        q (int): Odd prime dividing p - 1.

    Returns:
        Tuple[int, int]: (p + q - 2, 2p).

    Raises:
        InvalidPrimes: If p, q are not odd primes with q | p - 1.
    """
    if not (isprime(p) and isprime(q) and p > 2 and q > 2 and (p - 1) % q == 0):
        raise InvalidPrimes(f"need odd primes with q | p - 1, got p={p}, q={q}")
    return p + q - 2, 2 * p


def beta_k_rank2(n: int, m: int, k: int) -> int:
    """
    The k-th Noether number of C_n x C_m, equal to nk + m - 1 when m divides n.

    Raises:
        DivisibilityViolated: If m does not divide n.
    """
    if k < 1:
        raise InvalidParameter(f"k must be positive, got {k}")
    if m < 1 or n % m:
        raise DivisibilityViolated(f"{m} does not divide {n}")
    return n * k + m - 1


def bound_lower(beta_N: int, beta_Q: int) -> int:
    """β(G) >= β(G/N) + β(N) - 1, valid when G/N is abelian."""
    return beta_N + beta_Q - 1


def bound_upper_rank2(n: int, m: int, beta_Q: int) -> int:
    """β(G) <= β_{β(G/N)}(N) with N ≅ C_n x C_m."""
    return beta_k_rank2(n, m, beta_Q)


def generalized_dihedral_beta(davenport_A: int) -> int:
    """β(Dih(A)) = D(A) + 1."""
    return davenport_A + 1


def heisenberg_large_upper(d: int, p: int) -> int:
    """
    Upper bound D(G) <= d(G) + |G'| for a Heisenberg group of order p^3, whose commutator subgroup has order p.

    Args:
        d (int): Small Davenport constant of the group.
        p (int): The prime.

    Returns:
        int: d + p.
    """
    if not isprime(p):
        raise InvalidParameter(f"{p} is not a prime")
    return d + p


@dataclass(frozen=True)
class BetaRecord:
    """
    A Noether number with its provenance.

    Attributes:
        gap_id (GapId): SmallGroup identification pair.
        beta (int): The Noether number.
        source (str): Where it comes from.
    """
    gap_id: GapId
    beta: int
    source: str


def beta_registry(gap_id: GapId) -> BetaRecord:
    """
    Noether number of a group of order less than 32.

    Args:
        gap_id (GapId): SmallGroup identification pair.

    Returns:
        BetaRecord: Table value for non-abelian groups, the Davenport constant for abelian ones.

    Raises:
        UnknownGroup: If the pair is not known.
    """
    gap_id = tuple(gap_id)
    factors = abelian_factors(gap_id)
    if factors is not None:
        return BetaRecord(gap_id, davenport_abelian(AbelianShape.from_cyclic_factors(factors)), "abelian Davenport constant")
    row = table_row(gap_id)
    return BetaRecord(gap_id, row.beta, row.source)


def known_constants(gap_id: GapId) -> Tuple[int, int, int]:
    """
    (d, β, D) of a group of order less than 32, from the table or the abelian formulas.

    Raises:
        UnknownGroup: If the pair is not known.
    """
    gap_id = tuple(gap_id)
    factors = abelian_factors(gap_id)
    if factors is not None:
        D = davenport_abelian(AbelianShape.from_cyclic_factors(factors))
        return D - 1, D, D
    row = table_row(gap_id)
    return row.d, row.beta, row.D


@dataclass(frozen=True)
class ReductionCase:
    """
    Bounds on a Noether number from a normal subgroup and its factor group.

    Attributes:
        gap_id (GapId): The group.
        name (str): Display name.
        lower_normal (str): Normal subgroup N with abelian G/N used for the lower bound.
        lower_beta_normal (int): β(N).
        lower_beta_quotient (int): β(G/N).
        upper_shape (Optional[Tuple[int, int]]): (n, m) with N ≅ C_n x C_m used for the upper bound, if any.
        upper_beta_quotient (Optional[int]): β(G/N) for the upper bound.
    """
    gap_id: GapId
    name: str
    lower_normal: str
    lower_beta_normal: int
    lower_beta_quotient: int
    upper_shape: Optional[Tuple[int, int]] = None
    upper_beta_quotient: Optional[int] = None

    def lower(self) -> int:
        return bound_lower(self.lower_beta_normal, self.lower_beta_quotient)

    def upper(self) -> Optional[int]:
        if self.upper_shape is None:
            return None
        n, m = self.upper_shape
        return bound_upper_rank2(n, m, self.upper_beta_quotient)

    def is_exact(self) -> bool:
        return self.lower() == self.upper()


REDUCTION_CASES: List[ReductionCase] = [
    ReductionCase((16, 3), "(C2xC2):C4", "C2xC2", 3, 4),
    ReductionCase((16, 4), "C4:C4", "C4", 4, 4, (2, 2), 3),
    ReductionCase((16, 12), "Q8xC2", "Q8", 6, 2, (2, 2), 3),
    ReductionCase((18, 3), "S3xC3", "C3", 3, 6, (3, 3), 2),
    ReductionCase((24, 7), "Dic12xC2", "Dic12", 8, 2, (2, 2), 4),
    ReductionCase((24, 8), "C3:Dih8", "Dic12", 8, 2, (2, 2), 4),
    ReductionCase((24, 13), "A4xC2", "C2xC2", 3, 6),
]


def reduction_case(gap_id: GapId) -> ReductionCase:
    for case in REDUCTION_CASES:
        if case.gap_id == tuple(gap_id):
            return case
    raise UnknownGroup(f"no reduction bounds recorded for {tuple(gap_id)}")
