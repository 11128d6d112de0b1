from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional

from .davenport_kind import DavenportKind
from .group import GapId
from .sequence import Seq


@dataclass(frozen=True)
class LevelStats:
    """
    Size of one level of an enumeration.

    Attributes:
        k (int): Sequence length.
        count (int): Number of sequences of length k.
        classes (int): Number of Aut(G)-orbits among them.
    """
    k: int
    count: int
    classes: int

    def to_dict(self) -> dict:
        return {'k': self.k, 'count': self.count, 'classes': self.classes}


@dataclass
class DavenportReport:
    """
    Result of a small or large Davenport constant computation.

    Attributes:
        group_name (str): Display name of the group.
        gap_id (Optional[GapId]): SmallGroup identification pair.
        order (int): Group order.
        fingerprint (str): Order and table digest of the group.
        kind (DavenportKind): Which constant was enumerated.
        constant (int): Largest length with a non-empty level.
        levels (List[LevelStats]): Per-level statistics from k = 1, ending with the first empty level when complete.
        representatives (Dict[int, List[Seq]]): Orbit representatives per level, sorted.
        complete (bool): False if the run stopped at a level or memory limit.
        wall_time (float): Seconds spent; never part of the serialized form unless asked for.
        parameters (dict): Parameters that influence the result.
        full_levels (Optional[Dict[int, FrozenSet[Seq]]]): Every level in full, kept only on request.
    """
    group_name: str
    gap_id: Optional[GapId]
    order: int
    fingerprint: str
    kind: DavenportKind
    constant: int
    levels: List[LevelStats]
    representatives: Dict[int, List[Seq]] = field(default_factory=dict)
    complete: bool = True
    wall_time: float = 0.0
    parameters: dict = field(default_factory=dict)
    full_levels: Optional[Dict[int, FrozenSet[Seq]]] = None

    def get_constant(self) -> int:
        return self.constant

    def level(self, k: int) -> Optional[LevelStats]:
        for stats in self.levels:
            if stats.k == k:
                return stats
        return None

    def total_count(self, min_length: int = 2) -> int:
        """
        Number of sequences found over all lengths k >= min_length.

        Length 1 is left out by default: it only holds the nonidentity elements, or the identity alone for atoms.

        Args:
            min_length (int): Shortest length counted.

        Returns:
            int: The summed count.
        """
        return sum(stats.count for stats in self.levels if stats.k >= min_length)

    def total_classes(self, min_length: int = 2) -> int:
        """Number of orbits found over all lengths k >= min_length."""
        return sum(stats.classes for stats in self.levels if stats.k >= min_length)

    def to_dict(self, include_timing: bool = False, include_representatives: bool = False) -> dict:
        """
        A JSON-ready form of the report. The result only depends on the group and the parameters.

        Args:
            include_timing (bool): Add the wall time.
            include_representatives (bool): Add the orbit representatives of every level.

        Returns:
            dict: The serialized report.
        """
        document = {
            'group': self.group_name,
            'gap_id': list(self.gap_id) if self.gap_id else None,
            'order': self.order,
            'fingerprint': self.fingerprint,
            'kind': self.kind.value,
            'constant': self.constant,
            'complete': self.complete,
            'levels': [stats.to_dict() for stats in self.levels],
            'total_count': self.total_count(),
            'total_classes': self.total_classes(),
            'parameters': dict(self.parameters),
        }
        if include_timing:
            document['wall_time'] = round(self.wall_time, 3)
        if include_representatives:
            document['representatives'] = {str(k): [list(rep) for rep in reps]
                                           for k, reps in sorted(self.representatives.items())}
        return document

    @classmethod
    def from_dict(cls, document: dict) -> 'DavenportReport':
        """Rebuild a report from to_dict output."""
        representatives = {int(k): [tuple(rep) for rep in reps]
                           for k, reps in document.get('representatives', {}).items()}
        return cls(group_name=document['group'],
                   gap_id=tuple(document['gap_id']) if document.get('gap_id') else None,
                   order=document['order'],
                   fingerprint=document['fingerprint'],
                   kind=DavenportKind(document['kind']),
                   constant=document['constant'],
                   levels=[LevelStats(**stats) for stats in document['levels']],
                   representatives=representatives,
                   complete=document['complete'],
                   wall_time=document.get('wall_time', 0.0),
                   parameters=dict(document.get('parameters', {})))
