#
# Tests for the `klperiodic.padic` module.
#

import unittest

from klperiodic import padic
from klperiodic.alcove import AlcoveSpace
from klperiodic.coxeter import CartanDatum
from klperiodic.laurent import LaurentPoly, V, V_DIFF
from klperiodic.padic import PSI_0, PSI_1, BoxFunction, CharacterSpec
from klperiodic.periodic import PeriodicVec, hecke_apply, rank1_alcove, sharp_rank1


V_INV = LaurentPoly.monomial(-1)


class TestBoxFunction(unittest.TestCase):
    def test_arithmetic(self):
        f = BoxFunction.box(0, 1) + BoxFunction.box(0, 1, V)
        self.assertEqual(f.coefficient(0, 1), V + 1)
        self.assertEqual(f.boxes(), [(0, 1)])
        self.assertTrue((f - f).is_zero())
        self.assertEqual(f.scale(V_INV), BoxFunction.box(0, 1, V_INV + 1))
        self.assertEqual(2 * BoxFunction.box(1, 1), BoxFunction.box(1, 1, 2))
        self.assertEqual(padic.boxes_of([(0, 0, V), (1, 2, 3)]),
                         BoxFunction({(0, 0): V, (1, 2): 3}))

    def test_depth(self):
        f = BoxFunction.box(3, 4) - BoxFunction.box(5, 3)
        self.assertTrue(f.is_deep(3))
        self.assertFalse(f.is_deep(4))
        self.assertFalse(f.is_deep(None))
        self.assertTrue(BoxFunction().is_deep(None))

    def test_orbit_values(self):
        values = padic.orbit_values(padic.indicator(0))
        self.assertEqual(values.e(0), 1)
        self.assertEqual(values.f(0), 0)
        self.assertEqual(values.e(1), 0)
        self.assertEqual(values.e(-7), 0)

        f = padic.indicator(-1).scale(V) + padic.indicator(2)
        self.assertEqual(padic.from_orbit_values(padic.orbit_values(f)), f)

        # a whole lattice is invariant, its value persists on every deeper orbit
        values = padic.orbit_values(BoxFunction.box(1, 1))
        self.assertEqual(values.e(5), 1)
        self.assertEqual(values.f(1), 1)
        self.assertEqual(values.e(0), 0)

        with self.assertRaises(ValueError):
            padic.orbit_values(BoxFunction.box(0, 2))

    def test_indicators(self):
        self.assertEqual(padic.indicator(0), BoxFunction({(0, 1): 1, (1, 1): -1}))
        self.assertEqual(padic.indicator(-1), BoxFunction({(0, 0): 1, (0, 1): -1}))
        space = AlcoveSpace(CartanDatum.from_label("A1"))
        for m in range(-3, 4):
            with self.subTest(m=m):
                self.assertEqual(padic.orbit_indicator(rank1_alcove(space, m)), padic.indicator(m))


class TestFourier(unittest.TestCase):
    def test_values(self):
        self.assertEqual(padic.fourier(BoxFunction.box(0, 1)), BoxFunction.box(0, 1))
        self.assertEqual(padic.fourier(BoxFunction.box(0, 0)), BoxFunction.box(1, 1, V * V))
        self.assertEqual(padic.fourier(BoxFunction.box(2, 3)),
                         BoxFunction.box(-2, -1, LaurentPoly.monomial(-8)))

    def test_involution(self):
        for a in range(-5, 6):
            for b in range(-5, 6):
                with self.subTest(a=a, b=b):
                    f = BoxFunction.box(a, b, V)
                    self.assertEqual(padic.fourier(padic.fourier(f)), f)

    def test_conductor(self):
        # conductor 0 and no normalization
        self.assertEqual(padic.fourier(BoxFunction.box(0, 0), PSI_0), BoxFunction.box(0, 0))
        self.assertEqual(padic.fourier(BoxFunction.box(1, 0), PSI_0),
                         BoxFunction.box(0, -1, LaurentPoly.monomial(-2)))
        self.assertEqual(PSI_1.as_dict(), {"conductor": 1, "norm": 1})


class TestTransport(unittest.TestCase):
    def setUp(self):
        self.space = AlcoveSpace(CartanDatum.from_label("A1"))

    def basis(self, n):
        return PeriodicVec.basis(rank1_alcove(self.space, n))

    def test_psi(self):
        self.assertEqual(padic.psi(self.basis(0)), padic.indicator(0))
        self.assertEqual(padic.psi(self.basis(-1)), padic.indicator(-1).scale(-V_INV))
        self.assertEqual(padic.psi(self.basis(2)), padic.indicator(2).scale(V * V))

    def test_convolution(self):
        # chi_s1 * chi_E0 is the indicator of F_0
        self.assertEqual(padic.convolve(1, padic.indicator(0)), padic.indicator(-1))
        with self.assertRaises(ValueError):
            padic.convolve(2, padic.indicator(0))

    def test_hecke_transport(self):
        for n in range(-5, 6):
            for s in (0, 1):
                with self.subTest(n=n, s=s):
                    vec = self.basis(n)
                    self.assertEqual(padic.psi(hecke_apply(s, vec)),
                                     padic.hecke_transport(s, padic.psi(vec)))

    def test_quadratic(self):
        f = padic.indicator(0).scale(V) + padic.indicator(3) - padic.indicator(-2)
        for s in (0, 1):
            with self.subTest(s=s):
                once = padic.hecke_transport(s, f)
                self.assertEqual(padic.hecke_transport(s, once), f + once.scale(V_DIFF))

    def test_sharps(self):
        self.assertEqual(padic.psi_sharp(0), BoxFunction.box(0, 1))
        self.assertEqual(padic.psi_sharp(-1), BoxFunction.box(0, 0, -V_INV))
        self.assertEqual(padic.psi_sharp(3), BoxFunction.box(2, 2, -V ** 3))
        for n in range(-4, 5):
            with self.subTest(n=n):
                vec = sharp_rank1(self.space, n, 12)
                depth = padic.psi_depth(vec)
                self.assertEqual(depth, (n + 12 + 1) // 2)
                self.assertTrue((padic.psi(vec) - padic.psi_sharp(n)).is_deep(depth))

    def test_depth(self):
        self.assertIsNone(padic.psi_depth(self.basis(0)))
        vec = PeriodicVec(self.space, {rank1_alcove(self.space, 0): LaurentPoly.const(1)}, floor=4)
        with self.assertRaises(ValueError):
            padic.psi_depth(vec)

    def test_eisenstein(self):
        lift = padic.eisenstein_lift(*padic.trace_delta(False))
        self.assertEqual(lift, padic.psi(self.basis(0)))
        lift = padic.eisenstein_lift(*padic.trace_delta(True))
        self.assertEqual(lift, padic.psi(self.basis(-1)))


class TestIntertwining(unittest.TestCase):
    def setUp(self):
        self.space = AlcoveSpace(CartanDatum.from_label("A1"))

    def test_normalized(self):
        self.assertTrue(padic.intertwine_check(PSI_1, 6, 12, self.space))
        self.assertIsNone(padic.intertwine_witness(PSI_1, 8))

    def test_conductor_zero(self):
        witness = padic.intertwine_witness(PSI_0, 6, 12, self.space)
        self.assertEqual(witness, {"sharp": -1, "box": [0, 0]})
        self.assertFalse(padic.intertwine_check(PSI_0, 6))

    def test_unnormalized(self):
        self.assertFalse(padic.intertwine_check(CharacterSpec(1, 0), 4))

    def test_theta_span(self):
        self.assertTrue(padic.theta_span_check(self.space, 12))
