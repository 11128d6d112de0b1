import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Container, Dict, FrozenSet, List, Mapping, MutableMapping, Optional

from .automorphism import AutomorphismGroup, automorphisms
from .config import SEQUENCE_LENGTH_LIMIT, EngineConfig
from .davenport_kind import DavenportKind
from .errors import CorruptFile, FingerprintMismatch, InvalidParameter, ResourceCap
from .group import Group
from .level_cache import CacheFile, cache_path, dump_levels, load_levels
from .level_set import LevelSet
from .product_set import ProductSetCache, is_product_one_free_incremental, product_set, right_multiply
from .report import DavenportReport, LevelStats
from .sequence import Seq, remove, remove_one, sub_multisets, support
from .splitting import splittings

logger = logging.getLogger(__name__)


class _CapReached(Exception):
    pass


def decomposable(S: Seq, k: int, levels: Mapping[int, Container[Seq]], memo: Optional[MutableMapping[Seq, bool]] = None) -> bool:
    """
    Whether a product-one sequence of length k is not an atom.

    Looks for an atom A of length 2..k//2 dividing S such that S·A^[-1] is an atom or is itself decomposable.
    Shorter atoms are tried first, and sub-multisets of one length in lexicographic order.

    Args:
        S (Seq): A product-one canonical sequence of length k without the identity.
        k (int): The length of S.
        levels (Mapping[int, Container[Seq]]): All atoms of every length below k, by length.
        memo (Optional[MutableMapping[Seq, bool]]): Results by sequence, shared within one level.

    Returns:
        bool: True iff S is the product of at least two atoms.
    """
    if memo is None:
        memo = {}
    known = memo.get(S)
    if known is not None:
        return known
    result = False
    for i in range(2, k // 2 + 1):
        atoms = levels.get(i)
        if not atoms:
            continue
        rest = levels.get(k - i, ())
        for A in sub_multisets(S, i):
            if A not in atoms:
                continue
            residual = remove(S, A)
            if residual in rest or decomposable(residual, k - i, levels, memo):
                result = True
                break
        if result:
            break
    memo[S] = result
    return result


class LevelSearch:
    """
    Level-by-level enumeration with Aut(G)-orbit pruning, common to both constants.

    Level k+1 is built from the splittings of the orbit representatives of level k. A candidate already present in level k+1 is
    skipped; an accepted candidate brings its whole orbit. The run ends at the first empty level, and the constant is the
    length of the last non-empty one. A non-empty level at the general upper bound ends the run early: the level above it is
    empty by the bound, so it is recorded with count 0 and never built.
    """
    kind: DavenportKind = None

    def __init__(self, G: Group, config: Optional[EngineConfig] = None, automorphism_group: Optional[AutomorphismGroup] = None):
        """
        Initialize a search.

        Args:
            G (Group): The group.
            config (Optional[EngineConfig]): Run parameters, defaults if None.
            automorphism_group (Optional[AutomorphismGroup]): Automorphisms used for pruning, Aut(G) if None.

        Attributes:
            group (Group): The group.
            config (EngineConfig): Run parameters.
            automorphism_group (AutomorphismGroup): Automorphisms used for pruning.
            levels (Dict[int, LevelSet]): Levels built so far, some of them released.
            stats (List[LevelStats]): Statistics of finished levels.
            representatives (Dict[int, List[Seq]]): Orbit representatives of finished levels.
        """
        self.group = G
        self.config = config or EngineConfig()
        self.automorphism_group = automorphism_group or automorphisms(G)
        self.levels: Dict[int, LevelSet] = {}
        self.stats: List[LevelStats] = []
        self.representatives: Dict[int, List[Seq]] = {}
        self.full_levels: Optional[Dict[int, FrozenSet[Seq]]] = {} if self.config.keep_full_levels else None
        self._start = 0.0

    def run(self, resume: Optional[CacheFile] = None) -> DavenportReport:
        """
        Enumerate the levels until the first empty one, or until a level reaches upper_bound when stop_at_bound is set.

        Args:
            resume (Optional[CacheFile]): Stored levels to continue from.

        Returns:
            DavenportReport: The report, marked incomplete if max_level stopped the run.

        Raises:
            ResourceCap: If the estimated level storage exceeds the memory cap. The exception carries the partial report.
        """
        self._start = time.perf_counter()
        logger.debug("%s: |Aut| = %d", self.group.name, len(self.automorphism_group))
        if resume is not None:
            k = self._restore(resume)
            if resume.complete:
                return self._report(complete=True)
        else:
            first = self._first_level()
            self._finish_level(first)
            k = 1
        max_level = self.config.max_level
        while True:
            previous = self.levels[k]
            if previous.count() == 0:
                return self._report(complete=True)
            if self.config.stop_at_bound and k >= self.upper_bound():
                logger.info("%s: level %d reaches the upper bound, level %d is empty", self.group.name, k, k + 1)
                self._record_empty_level(k + 1)
                return self._report(complete=True)
            if max_level is not None and k >= max_level:
                logger.info("%s: stopped at level %d", self.group.name, k)
                return self._report(complete=False)
            current = self._new_level(k + 1)
            self._before_level(k + 1)
            try:
                self._fan_out(previous.get_representatives(), current, previous)
            except _CapReached:
                report = self._report(complete=False)
                logger.warning("%s: memory cap of %d bytes reached at level %d", self.group.name,
                               self.config.memory_cap_bytes, k + 1)
                raise ResourceCap(f"level {k + 1} of {self.group.name} exceeds the memory cap", report)
            self._finish_level(current)
            k += 1

    def _fan_out(self, reps: List[Seq], current: LevelSet, previous: LevelSet):
        if self.config.threads > 1 and len(reps) > 1:
            with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
                for _ in pool.map(lambda rep: self._expand(rep, current, previous), reps):
                    pass
        else:
            for rep in reps:
                self._expand(rep, current, previous)

    def _check_memory(self, current: LevelSet):
        used = current.estimated_bytes() + sum(level.estimated_bytes() for level in self.levels.values())
        if used > self.config.memory_cap_bytes:
            raise _CapReached()

    def _finish_level(self, level: LevelSet):
        k = level.k
        self.levels[k] = level
        self.stats.append(LevelStats(k=k, count=level.count(), classes=level.classes()))
        self.representatives[k] = level.get_representatives()
        if self.full_levels is not None:
            self.full_levels[k] = level.full()
        self._release(k)
        logger.info("%s %s level %d: %d sequences in %d classes (%.2fs)", self.group.name, self.kind.value, k,
                    level.count(), level.classes(), time.perf_counter() - self._start)

    def _record_empty_level(self, k: int):
        self.stats.append(LevelStats(k=k, count=0, classes=0))
        self.representatives[k] = []
        if self.full_levels is not None:
            self.full_levels[k] = frozenset()

    def _report(self, complete: bool) -> DavenportReport:
        constant = max((stats.k for stats in self.stats if stats.count > 0), default=0)
        return DavenportReport(group_name=self.group.name, gap_id=self.group.gap_id, order=self.group.order,
                               fingerprint=self.group.fingerprint(), kind=self.kind, constant=constant,
                               levels=list(self.stats), representatives=dict(self.representatives), complete=complete,
                               wall_time=time.perf_counter() - self._start, parameters=self.config.to_parameters(),
                               full_levels=dict(self.full_levels) if self.full_levels is not None else None)

    def _restore(self, cache: CacheFile) -> int:
        if cache.fingerprint != self.group.fingerprint():
            raise FingerprintMismatch("level dump belongs to another group table")
        if cache.kind != self.kind:
            raise InvalidParameter(f"cannot resume a {self.kind.value} run from a {cache.kind.value} dump")
        for record in cache.levels:
            self.stats.append(LevelStats(k=record.k, count=record.count, classes=record.classes))
            self.representatives[record.k] = list(record.reps)
        deepest = cache.deepest().k
        if cache.complete:
            return deepest
        for k in self._levels_to_rebuild(deepest):
            record = cache.levels[k - 1]
            level = self._rebuild_level(record.k, record.reps)
            if level.count() != record.count:
                raise CorruptFile(f"level {k} has {level.count()} sequences, the dump says {record.count}")
            self.levels[k] = level
            if self.full_levels is not None:
                self.full_levels[k] = level.full()
        logger.debug("%s: resumed from level %d", self.group.name, deepest)
        return deepest

    def _rebuild_level(self, k: int, reps: List[Seq]) -> LevelSet:
        level = self._new_level(k)
        for rep in reps:
            level.add_orbit(rep)
        return level

    def upper_bound(self) -> int:
        """A length no sequence of the enumerated kind can exceed in this group."""
        raise NotImplementedError

    def _new_level(self, k: int) -> LevelSet:
        return LevelSet(k, self.automorphism_group)

    def _first_level(self) -> LevelSet:
        raise NotImplementedError

    def _before_level(self, k: int):
        pass

    def _expand(self, rep: Seq, current: LevelSet, previous: LevelSet):
        raise NotImplementedError

    def _release(self, k: int):
        pass

    def _levels_to_rebuild(self, deepest: int) -> List[int]:
        raise NotImplementedError


class SmallDavenportSearch(LevelSearch):
    """
    Enumerates the product-one free sequences M_k, giving d(G).

    Only the previous and the current level are kept in full. A splitting T of length k is accepted iff every T·g^[-1] lies in
    M_{k-1} and 1 is not in π(T); π(T) is assembled from the product sets of those parents.
    """
    kind = DavenportKind.SMALL

    def upper_bound(self) -> int:
        """d(G) <= |G| - 1, and d(G) <= |G| // 2 when G is not cyclic (Olson and White)."""
        order = self.group.order
        return order - 1 if self.group.is_cyclic() else order // 2

    def _first_level(self) -> LevelSet:
        level = LevelSet(1, self.automorphism_group)
        for g in range(1, self.group.order):
            level.add_orbit((g,), frozenset([g]))
        return level

    def _expand(self, rep: Seq, current: LevelSet, previous: LevelSet):
        G = self.group
        for T in splittings(G, rep):
            if T in current:
                continue
            parents = [(remove_one(T, g), g) for g in support(T)]
            if any(parent not in previous for parent, _ in parents):
                continue
            products = set()
            for parent, g in parents:
                products |= right_multiply(G, previous.product_set_of(parent), g)
            products = frozenset(products)
            if is_product_one_free_incremental(G, T, previous, products):
                current.add_orbit(T, products)
        self._check_memory(current)

    def _release(self, k: int):
        older = self.levels.get(k - 1)
        if older is not None and not older.released:
            older.release()
            older.products = {}

    def _levels_to_rebuild(self, deepest: int) -> List[int]:
        return [deepest]

    def _rebuild_level(self, k: int, reps: List[Seq]) -> LevelSet:
        if k > SEQUENCE_LENGTH_LIMIT:
            raise CorruptFile(f"level {k} is longer than {SEQUENCE_LENGTH_LIMIT}")
        level = LevelSet(k, self.automorphism_group)
        cache = ProductSetCache()
        for rep in reps:
            level.add_orbit(rep, product_set(self.group, rep, cap=SEQUENCE_LENGTH_LIMIT, cache=cache))
        return level


class LargeDavenportSearch(LevelSearch):
    """
    Enumerates the atoms A_k, giving D(G).

    Every level is kept in full, since the decomposability test looks up atoms of all shorter lengths. Levels are stored
    packed to keep the dihedral groups of order 26 to 30 within memory.
    """
    kind = DavenportKind.LARGE

    def __init__(self, G: Group, config: Optional[EngineConfig] = None, automorphism_group: Optional[AutomorphismGroup] = None):
        super().__init__(G, config, automorphism_group)
        self.memo: Dict[Seq, bool] = {}

    def upper_bound(self) -> int:
        """D(G) <= |G|: a product-one ordering of a longer sequence repeats a prefix product."""
        return self.group.order

    def _new_level(self, k: int) -> LevelSet:
        return LevelSet(k, self.automorphism_group, compact=True)

    def _first_level(self) -> LevelSet:
        level = self._new_level(1)
        level.add_orbit((0,))
        return level

    def _before_level(self, k: int):
        self.memo = {}

    def _expand(self, rep: Seq, current: LevelSet, previous: LevelSet):
        k = current.k
        for T in splittings(self.group, rep):
            if T in current:
                continue
            if not decomposable(T, k, self.levels, self.memo):
                current.add_orbit(T)
        self._check_memory(current)

    def _levels_to_rebuild(self, deepest: int) -> List[int]:
        return list(range(1, deepest + 1))


def _run(search: LevelSearch, resume: Optional[CacheFile]) -> DavenportReport:
    config = search.config
    path = None
    if config.cache_dir:
        path = cache_path(config.cache_dir, search.group, search.kind)
        if resume is None and os.path.exists(path):
            logger.debug("cache hit for %s: %s", search.group.name, path)
            resume = load_levels(search.group, path)
    report = search.run(resume)
    if path is not None and config.max_level is None:
        dump_levels(report, path)
    return report


def small_davenport(G: Group, config: Optional[EngineConfig] = None, resume: Optional[CacheFile] = None,
                    automorphism_group: Optional[AutomorphismGroup] = None) -> DavenportReport:
    """
    Compute the small Davenport constant d(G).

    Args:
        G (Group): The group.
        config (Optional[EngineConfig]): Run parameters.
        resume (Optional[CacheFile]): Stored levels to continue from.
        automorphism_group (Optional[AutomorphismGroup]): Automorphisms used for pruning, Aut(G) if None.

    Returns:
        DavenportReport: Constant and per-level statistics.

    Raises:
        ResourceCap: If the memory cap is exceeded.
    """
    return _run(SmallDavenportSearch(G, config, automorphism_group), resume)


def large_davenport(G: Group, config: Optional[EngineConfig] = None, resume: Optional[CacheFile] = None,
                    automorphism_group: Optional[AutomorphismGroup] = None) -> DavenportReport:
    """
    Compute the large Davenport constant D(G).

    Args:
        G (Group): The group.
        config (Optional[EngineConfig]): Run parameters.
        resume (Optional[CacheFile]): Stored levels to continue from.
        automorphism_group (Optional[AutomorphismGroup]): Automorphisms used for pruning, Aut(G) if None.

    Returns:
        DavenportReport: Constant and per-level statistics.

    Raises:
        ResourceCap: If the memory cap is exceeded.
    """
    return _run(LargeDavenportSearch(G, config, automorphism_group), resume)


def davenport(G: Group, kind: DavenportKind, config: Optional[EngineConfig] = None) -> DavenportReport:
    """Dispatch on the kind of constant."""
    if kind is DavenportKind.SMALL:
        return small_davenport(G, config)
    return large_davenport(G, config)
