"""Finite Hecke algebra

The Hecke algebra of a finite Weyl group over `Z[v, v^-1]`, stored in
the normalized standard basis `T~_w = v^-l(w) T_w`. The quadratic
relation reads

    (T~_s - v)(T~_s + v^-1) = 0

and every element is kept as a `HeckeElt`: a mapping from group
elements to Laurent coefficients in the `T~` basis.

On top of the ring structure the module provides the bar involution,
the canonical basis `C_w`, the expansion of arbitrary elements in it,
and the dictionary between classes of standard, costandard and simple
objects and Hecke algebra elements.
"""

from typing import Dict, Iterable, Iterator, Optional

from .coxeter import WeylElt, WeylGroup
from .laurent import LaurentPoly, V_DIFF


class HeckeElt:
    """Element of the Hecke algebra in the `T~` basis

    `floor` is carried along when the element was computed from a
    truncated periodic vector: coefficients are then only exact above
    `v^-floor`.
    """

    __slots__ = ("algebra", "_terms", "floor")

    def __init__(self, algebra: "HeckeAlgebra", terms: Optional[Dict[WeylElt, LaurentPoly]] = None,
                 floor: Optional[int] = None):
        self.algebra = algebra
        self._terms = {w: c for w, c in (terms or {}).items() if c}
        self.floor = floor

    @property
    def terms(self) -> Dict[WeylElt, LaurentPoly]:
        return dict(self._terms)

    def coefficient(self, w: WeylElt) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly())

    def support(self) -> Iterator[WeylElt]:
        return iter(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def _merge_floor(self, other: "HeckeElt") -> Optional[int]:
        floors = [f for f in (self.floor, other.floor) if f is not None]
        return min(floors) if floors else None

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, LaurentPoly()) + c
        return HeckeElt(self.algebra, terms, self._merge_floor(other))

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.algebra, {w: -c for w, c in self._terms.items()}, self.floor)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = LaurentPoly.coerce(c)
        floor = self.floor
        if floor is not None and c:
            floor -= c.degree
        return HeckeElt(self.algebra, {w: c * x for w, x in self._terms.items()}, floor)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.algebra.mult(self, other)
        try:
            return self.scale(other)
        except ValueError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except ValueError:
            return NotImplemented

    def truncate(self, floor: Optional[int]) -> "HeckeElt":
        """Drop every coefficient term with exponent `<= -floor`"""
        if floor is None:
            return self
        return HeckeElt(self.algebra, {w: c.truncate(floor) for w, c in self._terms.items()}, floor)

    def agrees(self, other: "HeckeElt", floor: Optional[int] = None) -> bool:
        """Equality on the terms certified by both floors"""
        floors = [f for f in (self.floor, other.floor, floor) if f is not None]
        cut = min(floors) if floors else None
        a = self.truncate(cut)
        b = other.truncate(cut)
        return a._terms == b._terms

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({self._terms[w]})T[{w.name}]" for w in self.support())

    def __repr__(self):
        return f"HeckeElt({self})"


class HeckeAlgebra:
    """The Hecke algebra of a finite Weyl group"""

    def __init__(self, group: WeylGroup):
        self.group = group
        self._c_basis: Dict[WeylElt, HeckeElt] = {}

    def element(self, terms: Optional[Dict[WeylElt, LaurentPoly]] = None) -> HeckeElt:
        return HeckeElt(self, terms)

    @property
    def one(self) -> HeckeElt:
        return self.tilde_T(self.group.identity)

    def zero(self) -> HeckeElt:
        return HeckeElt(self)

    def tilde_T(self, w: WeylElt) -> HeckeElt:
        return HeckeElt(self, {w: LaurentPoly.const(1)})

    def mult_right_gen(self, h: HeckeElt, i: int) -> HeckeElt:
        """`h * T~_s`"""
        s = self.group.gen(i)
        terms: Dict[WeylElt, LaurentPoly] = {}
        for w, c in h._terms.items():
            ws = w * s
            terms[ws] = terms.get(ws, LaurentPoly()) + c
            if ws.length < w.length:
                terms[w] = terms.get(w, LaurentPoly()) + c * V_DIFF
        return HeckeElt(self, terms, None if h.floor is None else h.floor - 1)

    def mult_left_gen(self, i: int, h: HeckeElt) -> HeckeElt:
        """`T~_s * h`"""
        s = self.group.gen(i)
        terms: Dict[WeylElt, LaurentPoly] = {}
        for w, c in h._terms.items():
            sw = s * w
            terms[sw] = terms.get(sw, LaurentPoly()) + c
            if sw.length < w.length:
                terms[w] = terms.get(w, LaurentPoly()) + c * V_DIFF
        return HeckeElt(self, terms, None if h.floor is None else h.floor - 1)

    def mult(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        result = HeckeElt(self)
        for w, c in b._terms.items():
            part = a
            for i in w.word:
                part = self.mult_right_gen(part, i)
            result = result + part.scale(c)
        if b.floor is not None and not a.is_zero():
            # T~_u raises exponents by at most l(u)
            top = max(c.degree for c in a._terms.values()) + self.group.longest.length
            floors = [f for f in (result.floor, b.floor - top) if f is not None]
            result.floor = min(floors)
        return result

    def tilde_T_inv(self, w: WeylElt) -> HeckeElt:
        """`T~_w^-1 = T~_(s_k)^-1 ... T~_(s_1)^-1` for `w = s_1 ... s_k`"""
        result = self.one
        for i in reversed(w.word):
            result = result * self.tilde_T(self.group.gen(i)) - result.scale(V_DIFF)
        return result

    def bar(self, h: HeckeElt) -> HeckeElt:
        """Bar involution: `v -> v^-1` and `T~_w -> T~_(w^-1)^-1`"""
        result = HeckeElt(self)
        for w, c in h._terms.items():
            result = result + self.tilde_T_inv(w.inverse()).scale(c.bar())
        return result

    def c_basis(self, w: WeylElt) -> HeckeElt:
        hit = self._c_basis.get(w)
        if hit is not None:
            return hit
        group = self.group
        n = w.length
        result = HeckeElt(self)
        for x in group.enumerate():
            if not group.bruhat_leq(x, w):
                continue
            sign = -1 if (n - x.length) % 2 else 1
            coeff = group.kl_laurent(x, w).shift(x.length - n) * sign
            result = result + self.tilde_T_inv(x.inverse()).scale(coeff)
        self._c_basis[w] = result
        return result

    def expand_in_c(self, h: HeckeElt) -> Dict[WeylElt, LaurentPoly]:
        """Coordinates of `h` in the canonical basis"""
        coords: Dict[WeylElt, LaurentPoly] = {}
        rest = HeckeElt(self, h._terms)
        while not rest.is_zero():
            w = max(rest._terms)
            c = rest._terms[w]
            coords[w] = c
            rest = rest - self.c_basis(w).scale(c)
        return coords

    def expand_in_delta(self, h: HeckeElt) -> Dict[WeylElt, LaurentPoly]:
        """Coordinates of `h` in the basis of `delta_class` elements"""
        coords: Dict[WeylElt, LaurentPoly] = {}
        rest = HeckeElt(self, h._terms)
        while not rest.is_zero():
            w = max(rest._terms)
            c = rest._terms[w]
            coords[w] = c
            rest = rest - self.delta_class(w).scale(c)
        return coords

    def delta_class(self, w: WeylElt) -> HeckeElt:
        """`[Delta_w] = bar(T~_w)`"""
        return self.tilde_T_inv(w.inverse())

    def nabla_class(self, w: WeylElt) -> HeckeElt:
        """`[nabla_w(-l(w)/2)] = T~_w`"""
        return self.tilde_T(w)

    def ic_class(self, w: WeylElt) -> HeckeElt:
        return self.c_basis(w)

    @staticmethod
    def twist(h: HeckeElt, m: int) -> HeckeElt:
        """The Tate twist `(m/2)`, multiplication by `v^-m`"""
        return h.scale(LaurentPoly.monomial(-m))

    def phi_s(self, h: HeckeElt, i: int) -> HeckeElt:
        """Right convolution with `nabla_s(1/2)`: `h * v^-1 T~_s`"""
        return self.mult_right_gen(h, i).scale(LaurentPoly.monomial(-1))

    def k_s_membership(self, h: HeckeElt, i: int) -> bool:
        """Whether `h` lies in the span of `C_w` with `l(ws) < l(w)`"""
        s = self.group.gen(i)
        return all((w * s).length < w.length for w in self.expand_in_c(h))

    def left_action(self, i: int, h: HeckeElt) -> HeckeElt:
        return self.mult_left_gen(i, h)


def word_product(algebra: HeckeAlgebra, word: Iterable[int]) -> HeckeElt:
    """`T~_(s_1) ... T~_(s_k)` for an arbitrary word"""
    result = algebra.one
    for i in word:
        result = algebra.mult_right_gen(result, i)
    return result

