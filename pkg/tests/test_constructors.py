import unittest
from sympy.combinatorics import Permutation
from davenport_library.automorphism import identify_iso
from davenport_library.constructors import (abelian_group, abelian_invariants, cyclic, dicyclic, dihedral, direct_product,
                                            generalized_dihedral, heisenberg, modular, perm_group, semidihedral,
                                            semidirect_cyclic, semidirect_general, sl2_f3)
from davenport_library.errors import InvalidAction, InvalidParameter, NotAbelian, NotAHomomorphism, OrderTooLarge

class TestCyclicFamilies(unittest.TestCase):
    def test_dihedral_and_dicyclic_orders(self):
        """
        Test the element orders of the two non-abelian groups of order 8.
        """
        self.assertEqual(dihedral(8).order_statistics(), (1, 2, 2, 2, 2, 2, 4, 4))
        self.assertEqual(dicyclic(8).order_statistics(), (1, 2, 4, 4, 4, 4, 4, 4))
        self.assertEqual(dihedral(8).name, "Dih8")
        self.assertEqual(dicyclic(12).name, "Dic12")

    def test_semidirect_cyclic(self):
        """
        Test that C3 ⋊ C4 with a -> a^2 is the dicyclic group of order 12 and a trivial action gives C12.
        """
        G = semidirect_cyclic(3, 4, 2)
        self.assertEqual(G.order, 12)
        self.assertIsNotNone(identify_iso(G, dicyclic(12)))
        self.assertTrue(semidirect_cyclic(3, 4, 1).is_cyclic())

    def test_semidirect_cyclic_rejects_bad_actions(self):
        """
        Test that exponents which do not define an action are rejected.
        """
        with self.assertRaises(InvalidAction):
            semidirect_cyclic(7, 2, 2)
        with self.assertRaises(InvalidAction):
            semidirect_cyclic(4, 2, 2)
        with self.assertRaises(InvalidParameter):
            semidirect_cyclic(7, 2, 2)

    def test_semidihedral_and_modular(self):
        """
        Test the semidihedral and modular groups of order 16 and 27.
        """
        sd16 = semidihedral(16)
        m16 = modular(2, 4)
        m27 = modular(3, 3)
        self.assertEqual(sd16.order, 16)
        self.assertEqual(m16.order, 16)
        self.assertIsNone(identify_iso(sd16, m16))
        self.assertIsNone(identify_iso(sd16, dihedral(16)))
        self.assertEqual(m27.order, 27)
        self.assertEqual(m27.exponent(), 9)
        self.assertFalse(m27.is_abelian())
        with self.assertRaises(InvalidParameter):
            semidihedral(8)
        with self.assertRaises(InvalidParameter):
            modular(2, 3)

    def test_heisenberg(self):
        """
        Test that the Heisenberg group of order 27 has exponent 3 and a center of order 3.
        """
        H = heisenberg(3)
        self.assertEqual(H.order, 27)
        self.assertEqual(H.name, "H27")
        self.assertEqual(H.exponent(), 3)
        self.assertEqual(len(H.center()), 3)
        self.assertEqual(H.derived_subgroup(), H.center())

    def test_sl2_f3(self):
        """
        Test that SL(2,3) has a single involution and a center of order 2.
        """
        G = sl2_f3()
        self.assertEqual(G.order, 24)
        self.assertEqual(G.element_orders().count(2), 1)
        self.assertEqual(len(G.center()), 2)

class TestPermutationGroups(unittest.TestCase):
    def test_symmetric_group(self):
        """
        Test that two generators in cycle notation generate S4, and sympy permutations work as well.
        """
        S4 = perm_group(4, [[(1, 2, 3, 4)], [(1, 2)]], name="S4")
        self.assertEqual(S4.order, 24)
        S3 = perm_group(3, [Permutation([1, 2, 0]), Permutation([1, 0, 2])])
        self.assertEqual(S3.order, 6)
        self.assertIsNotNone(identify_iso(S3, dihedral(6)))

    def test_limits(self):
        """
        Test the degree and order limits of permutation groups.
        """
        with self.assertRaises(InvalidParameter):
            perm_group(9, [[(1, 2)]])
        with self.assertRaises(OrderTooLarge):
            perm_group(5, [[(1, 2, 3, 4, 5)], [(1, 2)]])

class TestProducts(unittest.TestCase):
    def test_direct_product(self):
        """
        Test the direct product of two cyclic groups.
        """
        G = direct_product(cyclic(2), cyclic(3))
        self.assertEqual(G.name, "C2xC3")
        self.assertTrue(G.is_cyclic())
        with self.assertRaises(OrderTooLarge):
            direct_product(cyclic(8), cyclic(9))

    def test_abelian_invariants(self):
        """
        Test that invariant factors are recovered from abelian tables.
        """
        self.assertEqual(abelian_invariants(direct_product(cyclic(2), cyclic(3))), (6,))
        self.assertEqual(abelian_invariants(abelian_group([2, 2, 4])), (2, 2, 4))
        self.assertEqual(abelian_invariants(abelian_group([4, 6])), (2, 12))
        self.assertEqual(abelian_invariants(cyclic(1)), ())
        with self.assertRaises(NotAbelian):
            abelian_invariants(dihedral(6))

    def test_semidirect_general(self):
        """
        Test a general semidirect product and the rejection of an action that is not a homomorphism.
        """
        flip = (0, 2, 1)
        S3 = semidirect_general(cyclic(3), cyclic(2), {0: (0, 1, 2), 1: flip})
        self.assertIsNotNone(identify_iso(S3, dihedral(6)))
        with self.assertRaises(NotAHomomorphism):
            semidirect_general(cyclic(3), cyclic(2), {0: flip, 1: flip})
        with self.assertRaises(NotAHomomorphism):
            semidirect_general(cyclic(3), cyclic(2), {0: (0, 1, 2), 1: (1, 0, 2)})

    def test_generalized_dihedral(self):
        """
        Test that Dih(C3 x C3) has nine involutions and that non-abelian input is refused.
        """
        G = generalized_dihedral(direct_product(cyclic(3), cyclic(3)))
        self.assertEqual(G.order, 18)
        self.assertEqual(G.element_orders().count(2), 9)
        self.assertIsNotNone(identify_iso(generalized_dihedral(cyclic(5)), dihedral(10)))
        with self.assertRaises(NotAbelian):
            generalized_dihedral(dihedral(6))

if __name__ == '__main__':
    unittest.main()
