import os
import tempfile
import unittest
from itertools import combinations_with_replacement
from davenport_library.automorphism import trivial_automorphism_group
from davenport_library.config import EngineConfig
from davenport_library.constructors import abelian_group, cyclic, dihedral, heisenberg, modular, sl2_f3
from davenport_library.davenport_kind import DavenportKind
from davenport_library.emit import to_json
from davenport_library.engine import (LargeDavenportSearch, SmallDavenportSearch, davenport, decomposable, large_davenport,
                                      small_davenport)
from davenport_library.errors import FingerprintMismatch, ResourceCap
from davenport_library.formulas import AbelianShape, davenport_abelian
from davenport_library.level_cache import cache_path, dump_levels, load_levels
from davenport_library.product_set import big_pi_contains_one, is_atom_bruteforce
from davenport_library.registry import abelian_gap_ids, registry, table_rows

SLOW = os.environ.get('DAV_SLOW_TESTS') == '1'

class TestSmallGroups(unittest.TestCase):
    def setUp(self):
        self.c3 = cyclic(3)

    def test_c3_small_levels(self):
        """
        Test the product-one free levels of C3.
        """
        report = small_davenport(self.c3)
        self.assertEqual(report.get_constant(), 2)
        self.assertTrue(report.complete)
        self.assertEqual([(s.k, s.count, s.classes) for s in report.levels], [(1, 2, 1), (2, 2, 1), (3, 0, 0)])
        self.assertEqual(report.representatives[2], [(1, 1)])

    def test_c3_large_levels(self):
        """
        Test the atom levels of C3.
        """
        report = large_davenport(self.c3)
        self.assertEqual(report.get_constant(), 3)
        self.assertEqual([(s.k, s.count, s.classes) for s in report.levels],
                         [(1, 1, 1), (2, 1, 1), (3, 2, 1), (4, 0, 0)])
        self.assertEqual(report.total_count(), 3)
        self.assertEqual((report.total_count(min_length=1), report.total_classes(min_length=1)), (4, 3))

    def test_c2(self):
        """
        Test d(C2) = 1 and D(C2) = 2.
        """
        self.assertEqual(davenport(cyclic(2), DavenportKind.SMALL).get_constant(), 1)
        self.assertEqual(davenport(cyclic(2), DavenportKind.LARGE).get_constant(), 2)

    def test_trivial_group(self):
        """
        Test that the trivial group has no product-one free sequence and one atom.
        """
        G = cyclic(1)
        self.assertEqual(small_davenport(G).get_constant(), 0)
        self.assertEqual(large_davenport(G).get_constant(), 1)

    def test_decomposable(self):
        """
        Test the decomposability predicate on C2, where the only atoms are 1 and g g.
        """
        levels = {1: {(0,)}, 2: {(1, 1)}, 3: set()}
        self.assertFalse(decomposable((1, 1), 2, levels))
        self.assertTrue(decomposable((1, 1, 1, 1), 4, levels))

    def test_heisenberg_atom(self):
        """
        Test that a^3 b^3 c^2 is an atom of length 8 of the Heisenberg group.
        """
        H = heisenberg(3)
        a, b, c = 9, 3, 1
        self.assertTrue(is_atom_bruteforce(H, tuple(sorted((a,) * 3 + (b,) * 3 + (c,) * 2))))

class TestAgainstTable(unittest.TestCase):
    def test_table_constants(self):
        """
        Test d(G) and D(G) against the table for the non-abelian groups of order at most 12.
        """
        for row in table_rows(order_max=12):
            G = registry(row.gap_id)
            self.assertEqual(small_davenport(G).get_constant(), row.d, row.name)
            self.assertEqual(large_davenport(G).get_constant(), row.D, row.name)

    def test_abelian_formulas(self):
        """
        Test that for abelian groups of order at most 12 both constants agree with the abelian formula: D(G) = d(G) + 1.
        """
        for gap_id in abelian_gap_ids(order_max=12):
            G = registry(gap_id)
            expected = davenport_abelian(AbelianShape.from_group(G))
            self.assertEqual(large_davenport(G).get_constant(), expected, G.name)
            self.assertEqual(small_davenport(G).get_constant(), expected - 1, G.name)

    def test_rank_two_abelian(self):
        """
        Test D(C2 x C4) = 5.
        """
        self.assertEqual(large_davenport(abelian_group([2, 4])).get_constant(), 5)

class TestOracle(unittest.TestCase):
    def test_levels_match_bruteforce(self):
        """
        Test every level up to length 5 against the definitions, for all groups of order at most 8.
        """
        config = EngineConfig(keep_full_levels=True)
        for gap_id in [g for g in abelian_gap_ids(order_max=8)] + [row.gap_id for row in table_rows(order_max=8)]:
            G = registry(gap_id)
            small = small_davenport(G, config).full_levels
            large = large_davenport(G, config).full_levels
            for k in range(1, 6):
                candidates = list(combinations_with_replacement(range(G.order), k))
                free = {S for S in candidates if 0 not in S and not big_pi_contains_one(G, S)}
                atoms = {S for S in candidates if is_atom_bruteforce(G, S)}
                self.assertEqual(small.get(k, frozenset()), free, f"{G.name} small level {k}")
                self.assertEqual(large.get(k, frozenset()), atoms, f"{G.name} large level {k}")

    def test_atoms_avoid_identity(self):
        """
        Test that no atom of length at least 2 contains the identity, for the table groups of order at most 12.
        """
        config = EngineConfig(keep_full_levels=True)
        for row in table_rows(order_max=12):
            levels = large_davenport(registry(row.gap_id), config).full_levels
            self.assertEqual(levels[1], frozenset([(0,)]))
            for k, atoms in levels.items():
                if k >= 2:
                    self.assertFalse(any(0 in atom for atom in atoms), f"{row.name} level {k}")

    def test_pruning_does_not_change_counts(self):
        """
        Test that orbit pruning with Aut(G) and without it give the same counts.
        """
        G = registry((8, 3))
        pruned = large_davenport(G)
        plain = large_davenport(G, automorphism_group=trivial_automorphism_group(G))
        self.assertEqual([s.count for s in pruned.levels], [s.count for s in plain.levels])
        self.assertEqual([s.count for s in plain.levels], [s.classes for s in plain.levels])

    def test_threads_are_deterministic(self):
        """
        Test that runs with 1, 2 and 8 workers write byte-identical reports.
        """
        for G in (registry((12, 1)), registry((8, 4))):
            for run in (small_davenport, large_davenport):
                documents = {to_json(run(G, EngineConfig(threads=threads)), include_timing=False) for threads in (1, 2, 8)}
                self.assertEqual(len(documents), 1, f"{G.name} {run.__name__}")

class TestRunControl(unittest.TestCase):
    def setUp(self):
        self.group = registry((8, 4))

    def test_max_level(self):
        """
        Test that max_level stops the run with an incomplete report.
        """
        report = small_davenport(self.group, EngineConfig(max_level=2))
        self.assertFalse(report.complete)
        self.assertEqual([s.k for s in report.levels], [1, 2])
        self.assertEqual(report.get_constant(), 2)

    def test_resume(self):
        """
        Test that a run resumed from a partial dump reaches the same result as a direct run.
        """
        direct = large_davenport(self.group)
        for kind, run in ((DavenportKind.SMALL, small_davenport), (DavenportKind.LARGE, large_davenport)):
            partial = run(self.group, EngineConfig(max_level=2))
            with tempfile.TemporaryDirectory() as directory:
                path = os.path.join(directory, 'levels.json')
                dump_levels(partial, path)
                resumed = run(self.group, resume=load_levels(self.group, path))
            fresh = run(self.group)
            self.assertTrue(resumed.complete)
            self.assertEqual(resumed.levels, fresh.levels, kind.value)
            self.assertEqual(resumed.representatives, fresh.representatives, kind.value)
        self.assertEqual(direct.get_constant(), 6)

    def test_memory_cap(self):
        """
        Test that exceeding the memory cap raises ResourceCap with a partial report.
        """
        with self.assertRaises(ResourceCap) as context:
            small_davenport(cyclic(3), EngineConfig(memory_cap_bytes=1))
        report = context.exception.report
        self.assertFalse(report.complete)
        self.assertEqual([s.k for s in report.levels], [1])

    def test_bound_stop(self):
        """
        Test that ending a run at the general upper bound gives the same report as building the empty level.
        """
        dih10 = dihedral(10)
        self.assertEqual(SmallDavenportSearch(dih10).upper_bound(), 5)
        self.assertEqual(LargeDavenportSearch(dih10).upper_bound(), 10)
        self.assertEqual(SmallDavenportSearch(cyclic(5)).upper_bound(), 4)
        for G in (cyclic(3), dih10, self.group):
            for run in (small_davenport, large_davenport):
                early = run(G).to_dict(include_representatives=True)
                built = run(G, EngineConfig(stop_at_bound=False)).to_dict(include_representatives=True)
                self.assertEqual(early, built, f"{G.name} {run.__name__}")
        report = large_davenport(dih10)
        self.assertEqual(report.get_constant(), 10)
        self.assertEqual((report.levels[-1].k, report.levels[-1].count), (11, 0))

    def test_cache_directory(self):
        """
        Test that a second run with a cache directory reuses the dump, and that a dump of another group is refused.
        """
        with tempfile.TemporaryDirectory() as directory:
            config = EngineConfig(cache_dir=directory)
            first = large_davenport(self.group, config)
            path = cache_path(directory, self.group, DavenportKind.LARGE)
            self.assertTrue(os.path.exists(path))
            second = large_davenport(self.group, config)
            self.assertEqual(first.to_dict(include_representatives=True), second.to_dict(include_representatives=True))
            with self.assertRaises(FingerprintMismatch):
                load_levels(registry((8, 3)), path)

@unittest.skipUnless(SLOW, "set DAV_SLOW_TESTS=1 to run")
class TestEnumerationCounts(unittest.TestCase):
    def test_heisenberg_small(self):
        """
        Test the product-one free count of H27.
        """
        report = small_davenport(heisenberg(3))
        self.assertEqual(report.get_constant(), 6)
        self.assertEqual((report.total_count(), report.total_classes()), (69026, 187))

    def test_heisenberg_large(self):
        """
        Test the atom count of H27.
        """
        report = large_davenport(heisenberg(3))
        self.assertEqual(report.get_constant(), 8)
        self.assertEqual(report.level(9).count, 0)
        self.assertEqual((report.total_count(), report.total_classes()), (108827, 340))

    def test_modular_small(self):
        """
        Test the product-one free count of M27.
        """
        report = small_davenport(modular(3, 3))
        self.assertEqual(report.get_constant(), 10)
        self.assertEqual((report.total_count(), report.total_classes()), (102212, 1987))

    def test_sl2_large(self):
        """
        Test the atom count of SL(2,3).
        """
        report = large_davenport(sl2_f3())
        self.assertEqual(report.get_constant(), 13)
        self.assertEqual((report.total_count(), report.total_classes()), (499695, 21033))

if __name__ == '__main__':
    unittest.main()
