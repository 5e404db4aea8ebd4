#
# Tests for the `klperiodic.laurent` module.
#

import unittest
from fractions import Fraction

from klperiodic.laurent import LaurentPoly, V, V_DIFF, q_power


class TestLaurentPoly(unittest.TestCase):
    def test_canonical(self):
        # Zero coefficients are dropped and like terms are merged
        p = LaurentPoly([(2, 1), (0, 3), (2, -1), (-1, 0)])
        self.assertEqual(p.terms, ((0, 3),))
        self.assertEqual(p, 3)
        self.assertEqual(hash(p), hash(3))
        self.assertTrue(LaurentPoly().is_zero())
        self.assertFalse(LaurentPoly())

        with self.assertRaises(ValueError):
            LaurentPoly({1: 0.5})

    def test_ring(self):
        # (v + 1)(v - 1) = v^2 - 1 and integers mix in freely
        p = (V + 1) * (V - 1)
        self.assertEqual(p, LaurentPoly({2: 1, 0: -1}))
        self.assertEqual(2 - V, LaurentPoly({0: 2, 1: -1}))
        self.assertEqual(3 * V, LaurentPoly.monomial(1, 3))
        self.assertEqual(V_DIFF * V_DIFF, LaurentPoly({2: 1, 0: -2, -2: 1}))
        self.assertEqual(V ** 3, LaurentPoly.monomial(3))
        self.assertEqual(V ** -2, LaurentPoly.monomial(-2))
        self.assertEqual((-V) ** -1, LaurentPoly.monomial(-1, -1))
        self.assertEqual(q_power(2), V ** 4)

        with self.assertRaises(ValueError):
            (V + 1) ** -1

    def test_degrees(self):
        p = LaurentPoly({-2: 1, 3: -4})
        self.assertEqual(p.degree, 3)
        self.assertEqual(p.valuation, -2)
        self.assertEqual(p.span, 5)
        self.assertEqual(LaurentPoly().span, -1)
        self.assertEqual(p.coefficient(3), -4)
        self.assertEqual(p.coefficient(0), 0)

        with self.assertRaises(ValueError):
            _ = LaurentPoly().degree

    def test_bar_shift_truncate(self):
        p = LaurentPoly({2: 1, 0: 5, -3: 2})
        self.assertEqual(p.bar(), LaurentPoly({-2: 1, 0: 5, 3: 2}))
        self.assertEqual(p.bar().bar(), p)
        self.assertEqual(p.shift(-1), LaurentPoly({1: 1, -1: 5, -4: 2}))
        # floor 3 keeps exponents above -3
        self.assertEqual(p.truncate(3), LaurentPoly({2: 1, 0: 5}))
        self.assertEqual(p.truncate(4), p)
        self.assertEqual(p.truncate(None), p)

    def test_specialize(self):
        self.assertEqual(V_DIFF.specialize(2), Fraction(3, 2))
        self.assertEqual(LaurentPoly({-1: 1}).specialize(Fraction(1, 3)), 3)

        with self.assertRaises(ValueError):
            V.specialize(0)

    def test_divide_exact(self):
        num = LaurentPoly({2: 1, 0: -1})
        self.assertEqual(num.divide_exact(V - 1), V + 1)
        self.assertEqual(num.shift(-5).divide_exact(V + 1), (V - 1).shift(-5))
        self.assertEqual(LaurentPoly({0: 6}).divide_exact(3), 2)
        self.assertEqual(LaurentPoly().divide_exact(V), LaurentPoly())

        with self.assertRaises(ValueError):
            LaurentPoly({2: 1, 0: 1}).divide_exact(V - 1)
        with self.assertRaises(ValueError):
            LaurentPoly({0: 3}).divide_exact(2)
        with self.assertRaises(ZeroDivisionError):
            V.divide_exact(0)

    def test_str(self):
        cases = [
            (LaurentPoly(), "0"),
            (V_DIFF, "v - v^-1"),
            (LaurentPoly({2: 3, 0: -2}), "3v^2 - 2"),
            (LaurentPoly({-1: -1}), "-v^-1"),
        ]
        for p, text in cases:
            with self.subTest(text=text):
                self.assertEqual(str(p), text)

    def test_q_coefficients(self):
        # 1 + q reads as 1 + v^2
        self.assertEqual(LaurentPoly.from_q_coefficients([1, 1]), LaurentPoly({0: 1, 2: 1}))
