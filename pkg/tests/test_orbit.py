import unittest
from davenport_library.automorphism import automorphisms, trivial_automorphism_group
from davenport_library.constructors import cyclic, dicyclic
from davenport_library.level_set import LevelSet
from davenport_library.orbit import OrbitIndex, apply, orbit, representative

class TestOrbits(unittest.TestCase):
    def setUp(self):
        self.c5 = cyclic(5)
        self.aut = automorphisms(self.c5)

    def test_orbits_of_c5(self):
        """
        Test orbits of C5 sequences under multiplication by units.
        """
        self.assertEqual(orbit(self.aut, (1,)), frozenset([(1,), (2,), (3,), (4,)]))
        self.assertEqual(orbit(self.aut, (0,)), frozenset([(0,)]))
        self.assertEqual(orbit(self.aut, (1, 2)), frozenset([(1, 2), (2, 4), (1, 3), (3, 4)]))
        self.assertEqual(representative(self.aut, (3, 3)), (1, 1))
        self.assertEqual(apply(self.aut[1], (1, 1)), tuple(sorted([self.aut[1](1)] * 2)))

    def test_orbit_index(self):
        """
        Test that the index registers whole orbits and locates every member.
        """
        index = OrbitIndex(self.aut)
        self.assertEqual(index.add_orbit((2, 4)), (1, 2))
        self.assertIsNone(index.add_orbit((3, 4)))
        self.assertEqual(len(index), 4)
        self.assertIn((1, 3), index)
        self.assertNotIn((1, 1), index)
        rep, alpha = index.locate((3, 4))
        self.assertEqual(rep, (1, 2))
        self.assertEqual(apply(alpha, rep), (3, 4))
        self.assertIsNone(index.locate((1, 1)))
        index.add_all([(1, 1), (2, 2)])
        self.assertEqual(index.get_representatives(), [(1, 1), (1, 2)])
        self.assertEqual(index.representative((4, 4)), (1, 1))

    def test_trivial_automorphisms(self):
        """
        Test that without automorphisms every sequence is its own orbit.
        """
        index = OrbitIndex(trivial_automorphism_group(self.c5))
        index.add_all([(1,), (2,), (1,)])
        self.assertEqual(index.get_representatives(), [(1,), (2,)])

class TestLevelSet(unittest.TestCase):
    def test_product_set_transport(self):
        """
        Test that product sets stored for a representative are transported to the other members of its orbit.
        """
        c5 = cyclic(5)
        level = LevelSet(2, automorphisms(c5))
        level.add_orbit((2, 4), payload=frozenset([1]))
        self.assertEqual(level.products[(1, 2)], frozenset([3]))
        self.assertEqual(level.product_set_of((2, 4)), frozenset([1]))
        self.assertEqual(level.product_set_of((3, 4)), frozenset([2]))
        self.assertIsNone(level.product_set_of((1, 1)))
        self.assertEqual(level.count(), 4)
        self.assertEqual(level.classes(), 1)

    def test_non_abelian_transport(self):
        """
        Test product set transport in Q8, where product sets have two elements.
        """
        q8 = dicyclic(8)
        level = LevelSet(2, automorphisms(q8))
        level.add_orbit((1, 4), payload=frozenset([q8.mul(1, 4), q8.mul(4, 1)]))
        for member in level.full():
            a, b = member
            self.assertEqual(level.product_set_of(member), frozenset([q8.mul(a, b), q8.mul(b, a)]))

    def test_release(self):
        """
        Test that releasing a level keeps counts and representatives.
        """
        level = LevelSet(1, automorphisms(cyclic(5)))
        level.add_orbit((1,))
        self.assertGreater(level.estimated_bytes(), 0)
        level.release()
        self.assertEqual(level.estimated_bytes(), 0)
        self.assertEqual(level.count(), 4)
        self.assertEqual(level.get_representatives(), [(1,)])

    def test_compact_level(self):
        """
        Test that a compact level answers membership, counts and locates members like a plain one.
        """
        aut = automorphisms(cyclic(5))
        plain, packed = LevelSet(2, aut), LevelSet(2, aut, compact=True)
        for level in (plain, packed):
            level.add_orbit((2, 4))
            self.assertIsNone(level.add_orbit((3, 4)))
        self.assertEqual(packed.full(), plain.full())
        self.assertEqual((packed.count(), packed.classes()), (4, 1))
        self.assertIn((1, 3), packed)
        self.assertNotIn((1, 1), packed)
        rep, alpha = packed.locate((3, 4))
        self.assertEqual((rep, apply(alpha, rep)), ((1, 2), (3, 4)))
        self.assertIsNone(packed.locate((1, 1)))
        self.assertEqual(packed.representative((2, 4)), (1, 2))
        self.assertLess(packed.estimated_bytes(), plain.estimated_bytes())
        packed.release()
        self.assertNotIn((1, 3), packed)
        self.assertEqual(packed.count(), 4)

if __name__ == '__main__':
    unittest.main()
