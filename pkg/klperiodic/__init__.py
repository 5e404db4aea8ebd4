"""klperiodic Module

The `klperiodic` module computes with periodic Hecke modules, their
canonical bases and theta operators, and with the simple objects of
Kazhdan-Laumon category O. Values are exact: Laurent polynomials with
integer coefficients, rationals and truncated power series in `v^-1`
whose certified exponents are tracked explicitly.

The `klperiodic.suites` module bundles the identities the library
satisfies into named verification suites; `klperiodic.main_cli` is
the command-line front end.
"""

from .alcove import Alcove, AlcoveSpace
from .coxeter import CartanDatum, WeylGroup
from .heckemod import HeckeAlgebra
from .laurent import LaurentPoly
from .periodic import PeriodicVec


__all__ = [
    "Alcove",
    "AlcoveSpace",
    "CartanDatum",
    "HeckeAlgebra",
    "LaurentPoly",
    "PeriodicVec",
    "WeylGroup",
]
