"""Alcove pictures in rank two

Draws the alcoves of a rank two root datum inside a window around the
fundamental alcove. The alcove indexing each simple object is shaded,
one fill color per orbit of the Weyl group action on simples; the
fundamental alcoves are outlined in bold and `A_e` is tagged.

The coroot space is mapped to the plane through the Cholesky factor of
the invariant form, so that angles and lengths are the Euclidean ones.
Output is plain SVG built with `xml.etree.ElementTree`; coordinates
are rounded to fixed precision, which makes the text stable across
runs.
"""

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, List, NamedTuple

import numpy as np

from . import cato
from .alcove import Alcove, AlcoveSpace


#: Pixels per unit length of the shortest coroot
SCALE = 60

MARGIN = 20

#: Fill colors, assigned to orbits in table order
PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a6cee3", "#f781bf", "#a65628", "#999999", "#ffff33",
)


class FigureData(NamedTuple):
    alcoves: List[Alcove]
    shaded: Dict[Alcove, int]
    bold: List[Alcove]
    base: Alcove


def coroot_gram(space: AlcoveSpace) -> np.ndarray:
    """Invariant form on coroot coordinates, short coroots of length 1"""
    cartan = space.datum.cartan
    if space.rank != 2:
        raise ValueError(f"Figures need rank 2, got {space.rank}")
    # root lengths l_i with cartan[i][j] l_j symmetric
    lengths = [Fraction(1), Fraction(1)]
    if cartan[0][1]:
        lengths[1] = Fraction(cartan[1][0], cartan[0][1])
    gram = np.array([[float(cartan[i][j] / lengths[i]) for j in range(2)] for i in range(2)])
    return gram / gram.diagonal().min()


def embedding(space: AlcoveSpace) -> np.ndarray:
    """Matrix taking coroot coordinates to Euclidean plane coordinates"""
    return np.linalg.cholesky(coroot_gram(space)).T


def vertices(alcove: Alcove) -> List:
    datum = alcove.space.datum
    corners = [(Fraction(0),) * datum.rank]
    for omega, mark in zip(datum.fundamental_coweights, datum.marks):
        corners.append(tuple(x / mark for x in omega))
    return [alcove.coord.act(c) for c in corners]


def figure_data(space: AlcoveSpace, radius: int) -> FigureData:
    """Alcoves to draw, shading by orbit index and the bold set"""
    if space.rank != 2:
        raise ValueError(f"Figures need rank 2, got {space.rank}")
    shaded = {}
    for k, orbit in enumerate(cato.orbits(space.group)):
        for simple in orbit:
            shaded[cato.eta_prime_alcove(simple, space)] = k
    alcoves = sorted(set(space.window(radius)) | set(shaded))
    return FigureData(alcoves, shaded, space.xi_fin(), space.base)


def _fmt(x: float) -> str:
    text = f"{x:.3f}"
    return "0.000" if text == "-0.000" else text


def render_svg(data: FigureData) -> str:
    space = data.base.space
    matrix = embedding(space)

    def plane(point):
        p = matrix @ np.array([float(x) for x in point])
        # SVG y axis points down
        return p[0] * SCALE, -p[1] * SCALE

    polygons = {a: [plane(p) for p in vertices(a)] for a in data.alcoves}
    xs = [x for pts in polygons.values() for x, _ in pts]
    ys = [y for pts in polygons.values() for _, y in pts]
    left, top = min(xs) - MARGIN, min(ys) - MARGIN
    width, height = max(xs) - left + MARGIN, max(ys) - top + MARGIN

    root = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                      version="1.1",
                      width=f"{_fmt(width)}px",
                      height=f"{_fmt(height)}px",
                      viewBox=f"{_fmt(left)} {_fmt(top)} {_fmt(width)} {_fmt(height)}")
    ET.SubElement(root, "title").text = f"Alcoves of type {space.datum.label or 'rank 2'}"

    def points(alcove):
        return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in polygons[alcove])

    grid = ET.SubElement(root, "g", {"id": "alcoves", "stroke": "#555555",
                                     "stroke-width": "0.5"})
    for alcove in data.alcoves:
        attrs = {"points": points(alcove)}
        if alcove in data.shaded:
            attrs["fill"] = PALETTE[data.shaded[alcove] % len(PALETTE)]
            attrs["class"] = f"shaded orbit-{data.shaded[alcove]}"
        else:
            attrs["fill"] = "none"
        ET.SubElement(grid, "polygon", attrs)

    bold = ET.SubElement(root, "g", {"id": "fundamental", "fill": "none",
                                     "stroke": "#000000", "stroke-width": "2.5"})
    for alcove in data.bold:
        ET.SubElement(bold, "polygon", {"points": points(alcove)})

    cx = sum(x for x, _ in polygons[data.base]) / 3
    cy = sum(y for _, y in polygons[data.base]) / 3
    label = ET.SubElement(root, "text", {"x": _fmt(cx), "y": _fmt(cy),
                                         "text-anchor": "middle",
                                         "dominant-baseline": "middle",
                                         "font-size": "14", "fill": "red",
                                         "class": "base"})
    label.text = "e"

    return ET.tostring(root, encoding="unicode") + "\n"


def figure(space: AlcoveSpace, radius: int) -> str:
    return render_svg(figure_data(space, radius))
