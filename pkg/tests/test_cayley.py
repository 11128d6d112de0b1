import unittest
from davenport_library.cayley import cayley_diameter, cayley_digraph, cayley_witness
from davenport_library.constructors import cyclic, dicyclic, dihedral
from davenport_library.errors import NotGenerating
from davenport_library.product_set import is_atom_bruteforce, is_product_one
from davenport_library.registry import registry, table_rows

class TestCayleyDigraph(unittest.TestCase):
    def setUp(self):
        self.c6 = cyclic(6)

    def test_digraph_edges(self):
        """
        Test that the digraph has one labelled edge per vertex and generator.
        """
        graph = cayley_digraph(self.c6, [1, 2])
        self.assertEqual(graph.number_of_nodes(), 6)
        self.assertEqual(graph.number_of_edges(), 12)
        self.assertEqual(graph.edges[5, 1]['label'], 2)

    def test_cyclic_diameter(self):
        """
        Test the diameter of C6 with one and with two generators.
        """
        self.assertEqual(cayley_diameter(self.c6, [1]), 5)
        self.assertEqual(cayley_diameter(self.c6, [1, 5]), 3)

    def test_not_generating(self):
        """
        Test that a connection set which does not generate is refused.
        """
        with self.assertRaises(NotGenerating):
            cayley_diameter(self.c6, [2])
        with self.assertRaises(NotGenerating):
            cayley_witness(self.c6, [3])

class TestCayleyWitness(unittest.TestCase):
    def test_witness_is_long_atom(self):
        """
        Test that the witness sequence has length diameter + 1, is product-one and is an atom.
        """
        for G in (cyclic(6), dihedral(8), dicyclic(8), dihedral(10)):
            generators = G.greedy_generators()
            witness = cayley_witness(G, generators)
            self.assertEqual(len(witness), cayley_diameter(G, generators) + 1)
            self.assertTrue(is_product_one(G, witness))
            self.assertTrue(is_atom_bruteforce(G, witness))

    def test_cyclic_witness(self):
        """
        Test that a single generator of C6 gives the atom with six equal terms.
        """
        self.assertEqual(cayley_witness(cyclic(6), [1]), (1, 1, 1, 1, 1, 1))

    def test_diameter_bound_on_table(self):
        """
        Test D(G) >= diam + 1 for the table groups of order at most 16 with their greedy generating sets.
        """
        for row in table_rows(order_max=16):
            G = registry(row.gap_id)
            self.assertGreaterEqual(row.D, cayley_diameter(G, G.greedy_generators()) + 1, row.name)

if __name__ == '__main__':
    unittest.main()
