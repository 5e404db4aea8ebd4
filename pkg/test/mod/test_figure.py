#
# Tests for the `klperiodic.figure` module.
#

import unittest
import xml.etree.ElementTree as ET

import numpy as np

from klperiodic import figure
from klperiodic.alcove import AlcoveSpace
from klperiodic.coxeter import CartanDatum


SVG = "{http://www.w3.org/2000/svg}"


def parse(text):
    root = ET.fromstring(text)
    groups = {g.get("id"): g for g in root.iter(SVG + "g")}
    return root, groups


class TestFigure(unittest.TestCase):
    def test_embedding(self):
        # simple coroots of A2 have equal length and meet at 120 degrees
        space = AlcoveSpace(CartanDatum.from_label("A2"))
        gram = figure.coroot_gram(space)
        np.testing.assert_allclose(gram, [[1, -0.5], [-0.5, 1]])
        m = figure.embedding(space)
        np.testing.assert_allclose(m.T @ m, gram)

        # a1 is the short root of B2, so its coroot is the long one
        gram = figure.coroot_gram(AlcoveSpace(CartanDatum.from_label("B2")))
        self.assertAlmostEqual(gram[0][0] / gram[1][1], 2.0)

    def test_a2(self):
        space = AlcoveSpace(CartanDatum.from_label("A2"))
        root, groups = parse(figure.figure(space, 2))
        self.assertEqual(root.tag, SVG + "svg")
        self.assertEqual(root.find(SVG + "title").text, "Alcoves of type A2")

        polygons = groups["alcoves"].findall(SVG + "polygon")
        shaded = [p for p in polygons if "shaded" in p.get("class", "")]
        self.assertEqual(len(shaded), 19)
        orbits = {p.get("class").split()[1] for p in shaded}
        self.assertEqual(len(orbits), 6)
        for p in polygons:
            self.assertEqual(len(p.get("points").split()), 3)

        self.assertEqual(len(groups["fundamental"].findall(SVG + "polygon")), 6)
        label = root.find(SVG + "text")
        self.assertEqual(label.text, "e")
        self.assertEqual(label.get("fill"), "red")
        self.assertEqual(label.get("class"), "base")

    def test_b2(self):
        space = AlcoveSpace(CartanDatum.from_label("B2"))
        data = figure.figure_data(space, 2)
        self.assertEqual(len(data.shaded), 33)
        self.assertEqual(len(data.bold), 8)
        self.assertIn(space.base, data.alcoves)

    def test_stable(self):
        space = AlcoveSpace(CartanDatum.from_label("G2"))
        text = figure.figure(space, 1)
        self.assertEqual(figure.figure(AlcoveSpace(CartanDatum.from_label("G2")), 1), text)
        self.assertNotIn("-0.000", text)
        self.assertTrue(text.endswith("</svg>\n"))

    def test_rank(self):
        with self.assertRaises(ValueError):
            figure.figure(AlcoveSpace(CartanDatum.from_label("A1")), 2)
        with self.assertRaises(ValueError):
            figure.coroot_gram(AlcoveSpace(CartanDatum.from_label("A3")))
