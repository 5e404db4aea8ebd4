"""Simple objects of Kazhdan-Laumon category O

Up to Tate twist the simple objects are indexed by pairs `(w, P(w)z)`
where `P(w)` is the parabolic subgroup generated by the right ascents
of `w`. A `SimpleKL` stores `w` together with the minimal
representative `z` of its coset; `classify` produces that canonical
form from an arbitrary `z`.

The restriction of `j_(z!*)(IC_w)` to the cell of `y` is `IC_w` when
`y` lies in `P(w)z` and zero otherwise. Everything in this module is
derived from that rule: the group action on simples, the count of
simple objects, the restriction table and the alcove dictionary used
for figures.
"""

import csv
import io
from typing import Dict, List, NamedTuple, Optional, Tuple

from .alcove import AffineElt, Alcove, AlcoveSpace
from .coxeter import CartanDatum, WeylElt, WeylGroup
from .heckemod import HeckeAlgebra, HeckeElt
from .laurent import LaurentPoly
from .linalg import rank_q


class SimpleKL(NamedTuple):
    """The simple object `j_(z!*)(IC_w)`, `z` minimal in `P(w)z`"""
    w: WeylElt
    z: WeylElt

    @property
    def name(self) -> str:
        return f"j_{{{self.z.name}!*}}(IC_{self.w.name})"

    def support(self) -> List[WeylElt]:
        group = self.w.group
        return sorted(p * self.z for p in group.subgroup(group.p_of(self.w)))

    def sort_key(self):
        return (self.w.length, self.w.inverse().word, self.z.length, self.z.word)


def classify(z: WeylElt, w: WeylElt) -> SimpleKL:
    group = w.group
    return SimpleKL(w, group.coset_rep(group.p_of(w), z))


def simples(group: WeylGroup) -> List[SimpleKL]:
    """All simple objects in table order"""
    found = []
    for w in group.enumerate():
        for z in group.coset_min_reps(group.p_of(w)):
            found.append(SimpleKL(w, z))
    return sorted(found, key=SimpleKL.sort_key)


def restrict(simple: SimpleKL, y: WeylElt, algebra: HeckeAlgebra) -> HeckeElt:
    """The class of the restriction of `simple` to the cell of `y`"""
    group = simple.w.group
    if group.coset_rep(group.p_of(simple.w), y) == simple.z:
        return algebra.ic_class(simple.w)
    return algebra.zero()


def f_action(z: WeylElt, simple: SimpleKL) -> SimpleKL:
    """`(w, P(w)y) -> (w, P(w)yz^-1)`"""
    return classify(simple.z * z.inverse(), simple.w)


def count_breakdown(datum: CartanDatum) -> List[Tuple[WeylElt, int]]:
    """`|<P(w)> \\ W|` for every `w`"""
    group = datum.group()
    order = len(group.enumerate())
    return [(w, order // len(group.subgroup(group.p_of(w)))) for w in group.enumerate()]


def count(datum: CartanDatum) -> int:
    """Number of simple objects up to Tate twist"""
    return sum(n for _, n in count_breakdown(datum))


def count_sequence(limit: int) -> List[int]:
    """Counts for `A0, A1, ..., A(limit)`; `A0` is the trivial group"""
    values = [1]
    for n in range(1, limit + 1):
        values.append(count(CartanDatum.from_label(f"A{n}")))
    return values


def eta_prime_alcove(simple: SimpleKL, space: AlcoveSpace) -> Alcove:
    """`z^-1 * A_w`, the alcove indexing the image of `simple`"""
    return space.fundamental(simple.w).star(simple.z.inverse())


def semiinf_index(x: AffineElt) -> AffineElt:
    """The involution `w * t_lam -> w * t_-lam`"""
    return x.involution()


class K0Vec:
    """Combination of simple classes with Laurent coefficients"""

    def __init__(self, terms: Optional[Dict[SimpleKL, LaurentPoly]] = None):
        self._terms = {k: LaurentPoly.coerce(c) for k, c in (terms or {}).items()
                       if LaurentPoly.coerce(c)}

    @property
    def terms(self) -> Dict[SimpleKL, LaurentPoly]:
        return dict(self._terms)

    def support(self) -> List[SimpleKL]:
        return sorted(self._terms, key=SimpleKL.sort_key)

    def __add__(self, other: "K0Vec") -> "K0Vec":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, LaurentPoly()) + c
        return K0Vec(terms)

    def __eq__(self, other):
        if not isinstance(other, K0Vec):
            return NotImplemented
        return self._terms == other._terms

    def is_zero(self) -> bool:
        return not self._terms


def restrict_vec(k0: K0Vec, y: WeylElt, algebra: HeckeAlgebra) -> HeckeElt:
    result = algebra.zero()
    for simple, c in k0.terms.items():
        result = result + restrict(simple, y, algebra).scale(c)
    return result


def restriction_rank(datum: CartanDatum) -> int:
    """Rank of the map from simple classes to their tuples of restrictions

    Each simple class becomes the row of its restrictions to every cell,
    written in the canonical basis of that cell's Hecke algebra. The
    rows are `0/1` vectors, so the rank over `Q(v)` is an integer rank.
    """
    group = datum.group()
    elements = group.enumerate()
    rows = []
    for simple in simples(group):
        row = []
        for y in elements:
            inside = group.coset_rep(group.p_of(simple.w), y) == simple.z
            row.extend(1 if inside and w == simple.w else 0 for w in elements)
        rows.append(row)
    return rank_q(rows)


def table_rows(datum: CartanDatum) -> List[Tuple[SimpleKL, List[str]]]:
    """Restriction grid: one row per simple object, one cell per element"""
    group = datum.group()
    columns = group.enumerate()
    rows = []
    for simple in simples(group):
        p = group.p_of(simple.w)
        cells = ["IC_" + simple.w.name if group.coset_rep(p, y) == simple.z else "0"
                 for y in columns]
        rows.append((simple, cells))
    return rows


def table_csv(datum: CartanDatum) -> str:
    columns = datum.group().enumerate()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [y.name for y in columns])
    for simple, cells in table_rows(datum):
        writer.writerow([simple.name] + cells)
    return buf.getvalue()


def orbits(group: WeylGroup) -> List[List[SimpleKL]]:
    """Orbits of the group action on simple objects, in table order"""
    seen = set()
    result = []
    for simple in simples(group):
        if simple in seen:
            continue
        orbit = sorted({f_action(z, simple) for z in group.enumerate()}, key=SimpleKL.sort_key)
        seen.update(orbit)
        result.append(orbit)
    return result
