#
# Tests for the `klperiodic.periodic` module.
#

import unittest

from klperiodic.alcove import AlcoveSpace
from klperiodic.coxeter import CartanDatum
from klperiodic.heckemod import HeckeAlgebra
from klperiodic.laurent import LaurentPoly, V, V_DIFF
from klperiodic import periodic
from klperiodic.periodic import (
    PeriodicVec,
    hecke_apply,
    rank1_alcove,
    sharp_rank1,
    theta,
)


V_INV = LaurentPoly.monomial(-1)


class TestRankOne(unittest.TestCase):
    def setUp(self):
        self.space = AlcoveSpace(CartanDatum.from_label("A1"))

    def alcove(self, n):
        return rank1_alcove(self.space, n)

    def basis(self, n, coeff=1):
        return PeriodicVec.basis(self.alcove(n), coeff)

    def test_hecke_action(self):
        # T~_s A_n = A_(n-1) + (v - v^-1) A_n if s is in L(A_n), else A_(n+1);
        # s1 is in L(A_n) for even n, s0 for odd n
        for n in range(-4, 5):
            for s in (0, 1):
                with self.subTest(n=n, s=s):
                    below = (s == 1) == (n % 2 == 0)
                    if below:
                        expected = self.basis(n - 1) + self.basis(n, V_DIFF)
                    else:
                        expected = self.basis(n + 1)
                    self.assertEqual(hecke_apply(s, self.basis(n)), expected)
                    self.assertEqual(self.alcove(n).lset() == frozenset({s}), below)

    def test_quadratic(self):
        m = self.basis(0) + self.basis(3, V) - self.basis(-2, 2)
        for s in (0, 1):
            with self.subTest(s=s):
                once = hecke_apply(s, m)
                self.assertEqual(hecke_apply(s, once), m + once.scale(V_DIFF))

    def test_sharp(self):
        vec = sharp_rank1(self.space, 2, 4)
        self.assertEqual(vec.floor, 4)
        self.assertEqual(vec.horizon, 6)
        self.assertEqual(vec.coefficient(self.alcove(2)), 1)
        self.assertEqual(vec.coefficient(self.alcove(3)), LaurentPoly.monomial(-1, -1))
        self.assertEqual(vec.coefficient(self.alcove(5)), LaurentPoly.monomial(-3, -1))
        self.assertEqual(len(vec), 4)

        with self.assertRaises(ValueError):
            sharp_rank1(self.space, 0, 0)

    def test_telescoping(self):
        # A_n = A_n^# + v^-1 A_(n+1)^#
        for n in range(-3, 4):
            with self.subTest(n=n):
                total = sharp_rank1(self.space, n, 10) + sharp_rank1(self.space, n + 1, 10).scale(V_INV)
                self.assertTrue(total.agrees(self.basis(n)))
                self.assertEqual(total.trimmed(), self.basis(n))

    def test_theta(self):
        # theta(A_n) = A_(-n)^# + v^-1 A_(-n-1)^#, theta(A_n^#) = A_(-n)^#
        floor = 12
        for n in range(-3, 4):
            with self.subTest(n=n):
                image = theta(1, self.basis(n), floor)
                expected = (sharp_rank1(self.space, -n, floor)
                            + sharp_rank1(self.space, -n - 1, floor).scale(V_INV))
                self.assertTrue(image.agrees(expected))
                self.assertEqual(image.floor, floor)

                image = theta(1, sharp_rank1(self.space, n, floor))
                self.assertTrue(image.agrees(sharp_rank1(self.space, -n, floor)))

    def test_theta_first_terms(self):
        image = theta(1, self.basis(0), 8)
        self.assertEqual(image.coefficient(self.alcove(-1)), V_INV)
        self.assertEqual(image.coefficient(self.alcove(0)), LaurentPoly({0: 1, -2: -1}))
        self.assertEqual(image.coefficient(self.alcove(1)), LaurentPoly({-1: -1, -3: 1}))

    def test_theta_floor(self):
        with self.assertRaises(ValueError):
            theta(1, self.basis(0))
        with self.assertRaises(ValueError):
            theta(1, self.basis(0), 0)

        vec = PeriodicVec(self.space, {self.alcove(0): LaurentPoly.const(1)}, floor=3)
        self.assertEqual(theta(1, vec).floor, 3)
        self.assertEqual(theta(1, vec, 2).floor, 2)

    def test_floors(self):
        vec = PeriodicVec(self.space, {self.alcove(0): LaurentPoly({0: 1, -5: 1})}, floor=5)
        self.assertEqual(hecke_apply(1, vec).floor, 4)
        self.assertEqual(vec.scale(V).floor, 4)
        self.assertEqual((vec + self.basis(1)).floor, 5)
        self.assertEqual(vec.trimmed(), self.basis(0))
        self.assertTrue(vec.agrees(self.basis(0)))
        self.assertTrue(self.basis(0).is_exact())
        self.assertFalse(vec.is_exact())

    def test_rank_guard(self):
        space = AlcoveSpace(CartanDatum.from_label("A2"))
        with self.assertRaises(ValueError):
            rank1_alcove(space, 0)
        with self.assertRaises(ValueError):
            sharp_rank1(space, 0, 4)


class TestRankTwo(unittest.TestCase):
    def setUp(self):
        self.space = AlcoveSpace(CartanDatum.from_label("A2"))
        self.algebra = HeckeAlgebra(self.space.group)

    def test_projections(self):
        space = self.space
        m = (PeriodicVec.basis(space.base, V)
             + PeriodicVec.basis(space.base.cross(0), 2)
             + PeriodicVec.basis(space.fundamental(space.group.gen(1))))
        self.assertEqual(periodic.xi_proj(m) + periodic.rho_proj(m), m)
        self.assertEqual(len(periodic.xi_proj(m)), 2)
        self.assertEqual(periodic.rho_proj(m), PeriodicVec.basis(space.base.cross(0), 2))

    def test_j_e(self):
        space, algebra = self.space, self.algebra
        for w in space.group.enumerate():
            with self.subTest(w=w.name):
                vec = PeriodicVec.basis(space.fundamental(w), V)
                self.assertEqual(periodic.j_e(vec, algebra), algebra.delta_class(w).scale(V))
                section = periodic.j_e_section(algebra.delta_class(w), space)
                self.assertEqual(section, PeriodicVec.basis(space.fundamental(w)))
        self.assertTrue(periodic.j_e(PeriodicVec.basis(space.base.cross(0)), algebra).is_zero())

    def test_hecke_on_standards(self):
        self.assertEqual(periodic.hecke_on_standards(self.space, self.algebra), [])

    def test_hecke_quadratic(self):
        space = self.space
        m = PeriodicVec.basis(space.base) + PeriodicVec.basis(space.base.cross(2).cross(0), V)
        for s in space.affine_indices:
            with self.subTest(s=s):
                once = hecke_apply(s, m)
                self.assertEqual(hecke_apply(s, once), m + once.scale(V_DIFF))

    def test_eta_standard(self):
        space = self.space
        for w in space.group.enumerate():
            with self.subTest(w=w.name):
                vec = periodic.eta_standard(space, space.group.identity, w, 6)
                self.assertEqual(vec, PeriodicVec.basis(space.fundamental(w)))

    def test_generators(self):
        space = self.space
        gens = periodic.m0_generators(space, 8)
        self.assertEqual(len(gens), 19)
        for g in gens:
            self.assertEqual(space.group.coset_rep(space.group.p_of(g.w), g.z), g.z)

        with self.assertRaises(ValueError):
            periodic.m0_generators(AlcoveSpace(CartanDatum.from_label("A3")), 8)

    def test_window_rank(self):
        space = self.space
        alcoves = space.window(1)
        vectors = [PeriodicVec.basis(a) for a in alcoves]
        self.assertEqual(periodic.window_rank(vectors, 1), 4)
        vectors.append(vectors[0].scale(V) + vectors[1])
        self.assertEqual(periodic.window_rank(vectors, 1), 4)
        self.assertEqual(periodic.window_rank([], 1), 0)
        # the support outside the window does not count
        self.assertEqual(periodic.window_rank(vectors[1:4], 0), 0)

    def test_window_rank_truncated(self):
        # terms at or below the floor are cut before the rank is taken
        alcove = self.space.window(1)[0]
        low = PeriodicVec(self.space, {alcove: LaurentPoly.monomial(-3)}, floor=2)
        self.assertEqual(periodic.window_rank([low], 1), 0)
        mixed = PeriodicVec(self.space, {alcove: LaurentPoly.monomial(-3) + V}, floor=2)
        self.assertEqual(periodic.window_rank([low, mixed], 1), 1)
        with self.assertRaises(ValueError):
            periodic.window_rank([PeriodicVec(self.space, {alcove: V}, floor=0)], 1)


class TestSolve(unittest.TestCase):
    def setUp(self):
        self.space = AlcoveSpace(CartanDatum.from_label("A1"))

    def basis(self, n, coeff=1):
        return PeriodicVec.basis(rank1_alcove(self.space, n), coeff)

    def test_consistent(self):
        gens = [self.basis(0), self.basis(1)]
        target = self.basis(0, 2) + self.basis(1, V)
        result = periodic.solve_in_generators(target, gens, 3)
        self.assertTrue(result)
        self.assertEqual(result.coordinates, [{0: 2}, {1: 1}])

    def test_inconsistent(self):
        gens = [self.basis(0)]
        result = periodic.solve_in_generators(self.basis(2), gens, 3)
        self.assertFalse(result)
        alcove, exponent, residual = result.witness
        self.assertEqual(alcove, rank1_alcove(self.space, 2))
        self.assertEqual(exponent, 0)
        self.assertEqual(residual, 1)
