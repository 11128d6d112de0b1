import json
import logging
import os
from dataclasses import dataclass
from typing import List

from .davenport_kind import DavenportKind
from .errors import CorruptFile, FingerprintMismatch
from .group import Group
from .report import DavenportReport
from .sequence import Seq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelRecord:
    """
    One stored level: its size and its orbit representatives.

    Attributes:
        k (int): Sequence length.
        count (int): Number of sequences.
        classes (int): Number of orbits, the length of reps.
        reps (List[Seq]): Orbit representatives in lexicographic order.
    """
    k: int
    count: int
    classes: int
    reps: List[Seq]


@dataclass(frozen=True)
class CacheFile:
    """
    The stored levels of one enumeration.

    Attributes:
        fingerprint (str): Fingerprint of the group the levels belong to.
        kind (DavenportKind): Which constant was enumerated.
        complete (bool): Whether the enumeration reached its first empty level.
        levels (List[LevelRecord]): Levels from k = 1 upwards.
    """
    fingerprint: str
    kind: DavenportKind
    complete: bool
    levels: List[LevelRecord]

    def deepest(self) -> LevelRecord:
        return self.levels[-1]


def cache_path(cache_dir: str, G: Group, kind: DavenportKind) -> str:
    """File name of the level dump of a group, derived from its fingerprint."""
    order, digest = G.fingerprint().split(':')
    return os.path.join(cache_dir, f"{order}-{digest[:16]}-{kind.value}.json")


def dump_levels(report: DavenportReport, path: str):
    """
    Write the levels of a report to a JSON document.

    Args:
        report (DavenportReport): A report with representatives.
        path (str): Output file, parent directories are created.
    """
    document = {
        'fingerprint': report.fingerprint,
        'kind': report.kind.value,
        'complete': report.complete,
        'levels': [{'k': stats.k, 'count': stats.count, 'classes': stats.classes,
                    'reps': [list(rep) for rep in sorted(report.representatives.get(stats.k, []))]}
                   for stats in report.levels],
    }
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(document, handle, sort_keys=True, separators=(',', ':'))
        handle.write('\n')
    logger.debug("dumped %d levels to %s", len(report.levels), path)


def load_levels(G: Group, path: str) -> CacheFile:
    """
    Read a level dump and check that it belongs to a group.

    Args:
        G (Group): The group the levels must belong to.
        path (str): The dump file.

    Returns:
        CacheFile: The stored levels.

    Raises:
        FingerprintMismatch: If the dump was written for another group table.
        CorruptFile: If the file cannot be decoded.
    """
    try:
        with open(path, encoding='utf-8') as handle:
            document = json.load(handle)
        fingerprint = document['fingerprint']
        if fingerprint != G.fingerprint():
            raise FingerprintMismatch(f"{path} belongs to group {fingerprint}, not {G.fingerprint()}")
        kind = DavenportKind(document['kind'])
        complete = bool(document['complete'])
        levels = []
        for entry in document['levels']:
            reps = [tuple(int(g) for g in rep) for rep in entry['reps']]
            record = LevelRecord(k=int(entry['k']), count=int(entry['count']), classes=int(entry['classes']), reps=reps)
            if record.classes != len(reps) or any(len(rep) != record.k or list(rep) != sorted(rep) for rep in reps):
                raise CorruptFile(f"{path}: inconsistent level {record.k}")
            if any(g < 0 or g >= G.order for rep in reps for g in rep):
                raise CorruptFile(f"{path}: element index out of range in level {record.k}")
            levels.append(record)
    except (OSError, ValueError, KeyError, TypeError) as error:
        raise CorruptFile(f"{path}: {error}")
    if not levels or [record.k for record in levels] != list(range(1, len(levels) + 1)):
        raise CorruptFile(f"{path}: levels must run from 1 without gaps")
    return CacheFile(fingerprint=fingerprint, kind=kind, complete=complete, levels=levels)
