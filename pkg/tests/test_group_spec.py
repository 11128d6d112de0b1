import unittest
from davenport_library.automorphism import identify_iso
from davenport_library.constructors import dicyclic
from davenport_library.errors import ParseError, ValidationError
from davenport_library.group_spec import CYCLIC, GAP, PRODUCT, SEMIDIRECT, GroupSpec, parse_group_spec, resolve_group

class TestParsing(unittest.TestCase):
    def test_trees(self):
        """
        Test the trees of a few expressions.
        """
        self.assertEqual(parse_group_spec("C5"), GroupSpec(CYCLIC, params=(5,)))
        self.assertEqual(parse_group_spec("gap(27, 3)"), GroupSpec(GAP, params=(27, 3)))
        self.assertEqual(parse_group_spec("C3:C4(d=2)"), GroupSpec(SEMIDIRECT, params=(3, 4, 2)))
        product = parse_group_spec("Dih8 x C2")
        self.assertEqual(product.kind, PRODUCT)
        self.assertEqual([child.to_text() for child in product.children], ["Dih8", "C2"])

    def test_round_trip(self):
        """
        Test that rendering a parsed expression and parsing it again gives the same tree.
        """
        for text in ("C3:C4(d=2)", "Dih8xC2", "(C2xC2)xC3", "Dih(C3xC3)", "SL(2,3)", "gap(16,13)", "M27", "SD16",
                     "Q8xC3", "C3:C4(d=-1)"):
            spec = parse_group_spec(text)
            self.assertEqual(parse_group_spec(spec.to_text()), spec, text)
        self.assertEqual(parse_group_spec("( C2 x C2 ) x C3").to_text(), "(C2xC2)xC3")

    def test_parse_errors(self):
        """
        Test that malformed expressions report the offending position.
        """
        for text, position in (("C3 x", 4), ("C3?", 2), ("", 0), ("C3:C4(d=)", 8), ("gap(8)", 5)):
            with self.assertRaises(ParseError) as context:
                parse_group_spec(text)
            self.assertNotIsInstance(context.exception, ValidationError, text)
            self.assertEqual(context.exception.position, position, text)
        with self.assertRaises(ParseError):
            parse_group_spec("foo")

    def test_validation_errors(self):
        """
        Test that well-formed expressions naming impossible groups are rejected with a position.
        """
        for text, position in (("C7:C2(d=2)", 8), ("Q16", 0), ("SL(2,5)", 0), ("Dic12:C2(d=1)", 0), ("C2xQ12", 3)):
            with self.assertRaises(ValidationError) as context:
                parse_group_spec(text)
            self.assertEqual(context.exception.position, position, text)

class TestBuilding(unittest.TestCase):
    def test_resolve(self):
        """
        Test the groups built from expressions.
        """
        G = resolve_group("C3:C4(d=2)")
        self.assertEqual(G.order, 12)
        self.assertEqual(G.name, "C3:C4(d=2)")
        self.assertIsNotNone(identify_iso(G, dicyclic(12)))
        self.assertEqual(resolve_group("Dih8xC2").order, 16)
        self.assertEqual(resolve_group("Dih(C3xC3)").order, 18)
        self.assertEqual(resolve_group("SL(2,3)").order, 24)
        self.assertEqual(resolve_group("C3:C4(d=-1)").order, 12)
        H = resolve_group("gap(27,3)")
        self.assertEqual((H.name, H.get_gap_id()), ("H27", (27, 3)))

    def test_build_errors(self):
        """
        Test that constructor failures become validation errors.
        """
        for text in ("M12", "M8", "Dih(Q8)", "C65", "gap(8,6)", "Dic6"):
            with self.assertRaises(ValidationError, msg=text):
                resolve_group(text)

if __name__ == '__main__':
    unittest.main()
