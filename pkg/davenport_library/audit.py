import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from tqdm import tqdm

from .automorphism import identify_iso
from .cayley import cayley_diameter
from .config import EngineConfig
from .engine import large_davenport, small_davenport
from .errors import DavenportError, MissingData, UnknownGroup
from .formulas import (AbelianShape, beta_registry, cpq_davenports, davenport_abelian, heisenberg_large_upper,
                       index_two_davenports, known_constants)
from .group import GapId, Group
from .registry import TABLE_ORDER_LIMIT, abelian_factors, abelian_gap_ids, all_gap_ids, registry, table_rows
from .subgroups import normal_subgroups, quotient, subgroups

logger = logging.getLogger(__name__)

COMPUTE = 'compute'
GOLDEN_D = 'golden_d'
GOLDEN_LARGE_D = 'golden_D'
SANDWICH = 'sandwich'
MONOTONE_SUBGROUPS = 'monotone_subgroups'
MONOTONE_QUOTIENTS = 'monotone_quotients'
DIAMETER = 'diameter'
RANDOM_DIAMETER = 'random_diameter'
HEISENBERG = 'heisenberg_bound'

# column order of the per-check columns in CSV output
CHECK_NAMES = (COMPUTE, GOLDEN_D, GOLDEN_LARGE_D, SANDWICH, MONOTONE_SUBGROUPS, MONOTONE_QUOTIENTS, DIAMETER, RANDOM_DIAMETER,
               HEISENBERG)

DEFAULT_RANDOM_SETS = 100

# (gap_id, check) pairs known to fail: the Heisenberg group of order 27 has β = 9 > D = 8
EXPECTED_VIOLATIONS = {((27, 3), SANDWICH): "expected violation: β(H27) > D(H27)"}


@dataclass(frozen=True)
class Check:
    """
    Outcome of one audit on one group.

    Attributes:
        name (str): Audit name.
        passed (bool): Whether the inequality or comparison holds.
        detail (str): Values that were compared.
        expected_failure (bool): The check is known to fail for this group.
    """
    name: str
    passed: bool
    detail: str = ''
    expected_failure: bool = False

    def ok(self) -> bool:
        """A check is fine when it passes, or when it fails as expected."""
        return self.passed != self.expected_failure

    def status(self) -> str:
        if self.expected_failure:
            return "expected violation" if not self.passed else "unexpected pass"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {'name': self.name, 'status': self.status(), 'detail': self.detail}


@dataclass
class AuditRow:
    """
    One group of an audit report.

    Attributes:
        gap_id (GapId): SmallGroup identification pair.
        name (str): Display name.
        order (int): Group order.
        d (Optional[int]): Small Davenport constant, None if it could not be obtained.
        beta (Optional[int]): Noether number.
        D (Optional[int]): Large Davenport constant.
        checks (List[Check]): Audit outcomes.
    """
    gap_id: GapId
    name: str
    order: int
    d: Optional[int] = None
    beta: Optional[int] = None
    D: Optional[int] = None
    checks: List[Check] = field(default_factory=list)

    def ok(self) -> bool:
        return all(check.ok() for check in self.checks)

    def status_of(self, name: str) -> Optional[str]:
        """Status of the last check with this name, None if the row has none."""
        for check in reversed(self.checks):
            if check.name == name:
                return check.status()
        return None

    def add(self, name: str, passed: bool, detail: str = ''):
        expected = EXPECTED_VIOLATIONS.get((self.gap_id, name))
        if expected is not None:
            detail = f"{detail}; {expected}" if detail else expected
        self.checks.append(Check(name, bool(passed), detail, expected is not None))

    def to_dict(self) -> dict:
        return {'gap_id': list(self.gap_id), 'name': self.name, 'order': self.order,
                'd': self.d, 'beta': self.beta, 'D': self.D, 'checks': [check.to_dict() for check in self.checks]}


@dataclass
class AuditReport:
    """
    Result of the table reproduction or of the inequality audits.

    Attributes:
        title (str): "table" or "verify".
        rows (List[AuditRow]): One row per group, ordered by identification pair.
    """
    title: str
    rows: List[AuditRow] = field(default_factory=list)

    def ok(self) -> bool:
        """True iff every check passes, known violations failing as expected."""
        return all(row.ok() for row in self.rows)

    def failures(self) -> List[Tuple[AuditRow, Check]]:
        return [(row, check) for row in self.rows for check in row.checks if not check.ok()]

    def row(self, gap_id: GapId) -> Optional[AuditRow]:
        for row in self.rows:
            if row.gap_id == tuple(gap_id):
                return row
        return None

    def to_dict(self) -> dict:
        return {'title': self.title, 'ok': self.ok(), 'rows': [row.to_dict() for row in self.rows]}

    @classmethod
    def from_dict(cls, document: dict) -> 'AuditReport':
        """Rebuild a report from to_dict output."""
        rows = []
        for entry in document['rows']:
            checks = [Check(name=check['name'], passed=check['status'] in ('pass', 'unexpected pass'),
                            detail=check['detail'], expected_failure=check['status'] in ('expected violation', 'unexpected pass'))
                      for check in entry['checks']]
            rows.append(AuditRow(gap_id=tuple(entry['gap_id']), name=entry['name'], order=entry['order'],
                                 d=entry['d'], beta=entry['beta'], D=entry['D'], checks=checks))
        return cls(title=document['title'], rows=rows)


def closed_form_constants(G: Group) -> Optional[Tuple[int, int]]:
    """
    (d, D) from a closed formula, when one applies.

    Covers non-cyclic groups with a cyclic subgroup of index two and C7 ⋊ C3.

    Returns:
        Optional[Tuple[int, int]]: The pair, None if no formula covers the group.
    """
    if G.is_abelian():
        D = davenport_abelian(AbelianShape.from_group(G))
        return D - 1, D
    if G.has_cyclic_subgroup_of_index_two():
        return index_two_davenports(G.order, len(G.derived_subgroup()))
    if G.get_gap_id() == (21, 1):
        return cpq_davenports(7, 3)
    return None


def _engine_constants(G: Group, config: EngineConfig) -> Tuple[int, int]:
    return small_davenport(G, config).get_constant(), large_davenport(G, config).get_constant()


def run_table(order_max: int = TABLE_ORDER_LIMIT, order_min: int = 1, fast: bool = False,
              config: Optional[EngineConfig] = None, progress: bool = False) -> AuditReport:
    """
    Compute d and D of every non-abelian group in an order range and compare them with the stored table.

    Args:
        order_max (int): Largest order to include.
        order_min (int): Smallest order to include.
        fast (bool): Use closed formulas where they apply and the engine elsewhere.
        config (Optional[EngineConfig]): Engine parameters; a cache directory makes repeated runs cheap.
        progress (bool): Show a progress bar on stderr.

    Returns:
        AuditReport: One row per group. A row whose computation failed carries a failing check instead of raising.
    """
    config = config or EngineConfig()
    report = AuditReport('table')
    for table_row in tqdm(table_rows(order_max, order_min), desc="table", unit="group", disable=not progress):
        row = AuditRow(table_row.gap_id, table_row.name, table_row.get_order(), beta=table_row.beta)
        try:
            G = registry(table_row.gap_id)
            constants = closed_form_constants(G) if fast else None
            row.d, row.D = constants or _engine_constants(G, config)
        except DavenportError as error:
            logger.warning("%s: %s", table_row.name, error)
            row.add(COMPUTE, False, str(error))
            report.rows.append(row)
            continue
        row.add(GOLDEN_D, row.d == table_row.d, f"d={row.d}, table {table_row.d}")
        row.add(GOLDEN_LARGE_D, row.D == table_row.D, f"D={row.D}, table {table_row.D}")
        logger.info("%s: d=%d beta=%d D=%d", table_row.name, row.d, row.beta, row.D)
        report.rows.append(row)
    report.rows.sort(key=lambda r: r.gap_id)
    return report


class GroupIdentifier:
    """
    Identify groups of order less than 32 by their SmallGroup pair.

    Abelian groups are recognized by their invariant factors, non-abelian ones by an isomorphism to a registry group of the same
    order. Results are memoized per multiplication table.
    """

    def __init__(self):
        self.known: Dict[str, GapId] = {}
        self.shapes: Dict[AbelianShape, GapId] = {AbelianShape.from_cyclic_factors(abelian_factors(gap_id)): gap_id
                                                  for gap_id in abelian_gap_ids()}

    def identify(self, G: Group) -> GapId:
        """
        The identification pair of a group.

        Raises:
            UnknownGroup: If G is not isomorphic to any known group.
        """
        fingerprint = G.fingerprint()
        if fingerprint in self.known:
            return self.known[fingerprint]
        if G.is_abelian():
            gap_id = self.shapes.get(AbelianShape.from_group(G))
        else:
            gap_id = next((row.gap_id for row in table_rows(G.order, G.order)
                           if identify_iso(G, registry(row.gap_id)) is not None), None)
        if gap_id is None:
            raise UnknownGroup(f"{G.name} of order {G.order} matches no known group")
        self.known[fingerprint] = gap_id
        return gap_id


def _constants_for(gap_ids: Iterable[GapId], table: Optional[AuditReport]) -> Dict[GapId, Tuple[int, int, int]]:
    constants = {}
    for gap_id in gap_ids:
        d, beta, D = known_constants(gap_id)
        if table is not None and abelian_factors(gap_id) is None:
            row = table.row(gap_id)
            if row is None or row.d is None or row.D is None:
                raise MissingData(f"no computed constants for SmallGroup{gap_id}")
            d, D = row.d, row.D
        constants[gap_id] = d, beta, D
    return constants


def _random_generating_set(G: Group, rng: random.Random) -> List[int]:
    while True:
        size = rng.randint(1, max(1, len(G.greedy_generators()) + 1))
        candidates = rng.sample(range(G.order), min(size, G.order))
        if len(G.closure(candidates)) == G.order:
            return candidates


def run_verify(order_max: int = TABLE_ORDER_LIMIT, table: Optional[AuditReport] = None, random_sets: int = DEFAULT_RANDOM_SETS,
               seed: int = 0, progress: bool = False, stored: bool = False, fast: bool = False,
               config: Optional[EngineConfig] = None) -> AuditReport:
    """
    Audit the inequalities between d, β and D for every group of order less than 32.

    Each group gets a sandwich check d + 1 <= β <= D, strict monotonicity of β on proper subgroups and on proper quotients, and the
    Cayley diameter bound D >= diam + 1 for its greedy generating set. The Heisenberg group of order 27 also gets D <= d + 3.

    Args:
        order_max (int): Largest order to include.
        table (Optional[AuditReport]): Computed table. When None the table is computed with run_table, through the cache of
            config if it has one, unless stored is set.
        random_sets (int): Additional random generating sets per group of order at most 16 for the diameter bound.
        seed (int): Seed of the random generating sets.
        progress (bool): Show a progress bar on stderr.
        stored (bool): Audit the stored table constants instead of computed ones.
        fast (bool): Compute the table with closed formulas where they apply.
        config (Optional[EngineConfig]): Engine parameters for computing the table.

    Returns:
        AuditReport: One row per group.

    Raises:
        MissingData: If the table lacks a group, or a group's constants could not be computed.
    """
    if table is None and not stored:
        table = run_table(order_max, fast=fast, config=config, progress=progress)
    gap_ids = all_gap_ids(order_max)
    constants = _constants_for(gap_ids, table)
    identifier = GroupIdentifier()
    rng = random.Random(seed)
    report = AuditReport('verify')
    for gap_id in tqdm(gap_ids, desc="verify", unit="group", disable=not progress):
        G = registry(gap_id)
        d, beta, D = constants[gap_id]
        row = AuditRow(gap_id, G.name, G.order, d, beta, D)
        row.add(SANDWICH, d + 1 <= beta <= D, f"d+1={d + 1}, beta={beta}, D={D}")
        _monotonicity(G, beta, identifier, row)
        generators = G.greedy_generators()
        diameter = cayley_diameter(G, generators)
        row.add(DIAMETER, D >= diameter + 1, f"D={D}, diam={diameter}, X={generators}")
        if random_sets and G.order <= 16:
            worst = max(cayley_diameter(G, _random_generating_set(G, rng)) for _ in range(random_sets))
            row.add(RANDOM_DIAMETER, D >= worst + 1, f"D={D}, largest diam={worst} over {random_sets} sets")
        if gap_id == (27, 3):
            bound = heisenberg_large_upper(d, 3)
            sharp = "sharp" if D == bound else "not sharp"
            row.add(HEISENBERG, D <= bound, f"D={D} <= d+|G'|={bound}, {sharp}")
        report.rows.append(row)
    return report


def _monotonicity(G: Group, beta: int, identifier: GroupIdentifier, row: AuditRow):
    if G.order == 1:
        return
    offenders = []
    for H in subgroups(G):
        if len(H) == G.order:
            continue
        gap_id = identifier.identify(G.subgroup(H))
        if beta_registry(gap_id).beta >= beta:
            offenders.append(gap_id)
    row.add(MONOTONE_SUBGROUPS, not offenders, f"subgroups with beta >= {beta}: {offenders}" if offenders else "")
    offenders = []
    for N in normal_subgroups(G):
        if len(N) == 1:
            continue
        gap_id = identifier.identify(quotient(G, N))
        if beta_registry(gap_id).beta >= beta:
            offenders.append(gap_id)
    row.add(MONOTONE_QUOTIENTS, not offenders, f"quotients with beta >= {beta}: {offenders}" if offenders else "")
