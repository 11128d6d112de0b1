import unittest
from davenport_library.constructors import cyclic
from davenport_library.errors import InvalidParameter, NotASubsequence, ParseError
from davenport_library.sequence import (concat, from_text, proper_sub_multisets, remove, sub_multisets, support,
                                        to_text, validate)

class TestSequenceOperations(unittest.TestCase):
    def test_concat_and_remove(self):
        """
        Test multiset union and difference.
        """
        self.assertEqual(concat((2, 5), (1, 2)), (1, 2, 2, 5))
        self.assertEqual(remove((1, 1, 2), (1,)), (1, 2))
        self.assertEqual(remove((1, 1, 2), (1, 2, 1)), ())
        with self.assertRaises(NotASubsequence):
            remove((1, 2), (3,))
        with self.assertRaises(NotASubsequence):
            remove((1, 2), (1, 1))

    def test_sub_multisets(self):
        """
        Test that sub-multisets with repeated terms are listed once each.
        """
        self.assertEqual(list(sub_multisets((1, 1, 2), 2)), [(1, 1), (1, 2)])
        self.assertEqual(list(sub_multisets((1, 1, 2), 0)), [()])
        self.assertEqual(list(sub_multisets((1, 1, 2), 4)), [])
        self.assertEqual(len(list(sub_multisets((0, 0, 0, 1, 1, 2), 3))), 6)
        self.assertEqual(list(proper_sub_multisets((1, 2))), [(1,), (2,)])
        self.assertEqual(support((3, 1, 3)), [1, 3])

    def test_validate(self):
        """
        Test that terms outside the group are refused.
        """
        c3 = cyclic(3)
        self.assertEqual(validate(c3, (2, 0, 1)), (0, 1, 2))
        with self.assertRaises(InvalidParameter):
            validate(c3, (3,))

class TestSequenceText(unittest.TestCase):
    def test_to_text(self):
        """
        Test the bracketed text form.
        """
        self.assertEqual(to_text((1, 2, 2)), "[1,2,2]")
        self.assertEqual(to_text(()), "[]")

    def test_from_text(self):
        """
        Test parsing of the text form, including whitespace and unsorted input.
        """
        self.assertEqual(from_text(" [ 3, 1 ] "), (1, 3))
        self.assertEqual(from_text("[]"), ())
        self.assertEqual(from_text(to_text((0, 4, 4))), (0, 4, 4))
        for text in ("1,2", "[1,,2]", "[-1]", "[a]"):
            with self.assertRaises(ParseError):
                from_text(text)

if __name__ == '__main__':
    unittest.main()
