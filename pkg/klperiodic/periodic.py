"""Periodic Hecke module

A `PeriodicVec` is a finitely supported combination of alcoves with
Laurent coefficients. Elements of the completed module (infinite sums
that are bounded below) are represented by truncations: a vector with
`floor = N` is exact in every exponent `> -N` at every alcove, with
absent terms meaning zero there; terms of exponent `<= -N` carry no
guarantee. `floor = None` marks a vector that is exact throughout.

Truncation costs are tracked per operation. The affine Hecke action
`hecke_apply` costs one unit (its only positive power of `v` is the
`v` in `v - v^-1`), the theta operators cost nothing: every chain term
they discard has all exponents `<= -N`.

In rank one a vector can additionally carry a *horizon* `H`: every
alcove `A_m` with `m < H` then has a coefficient that is exact in all
exponents. The p-adic transforms use it to bound the depth up to which
images of truncated vectors are exact.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .alcove import AffineElt, Alcove, AlcoveSpace
from .coxeter import WeylElt
from .heckemod import HeckeAlgebra, HeckeElt
from .laurent import LaurentPoly, V_DIFF
from .linalg import SparseEliminator, certified_rank


#: Exhaustive generation of the finite submodule is refused above this rank
MAX_GENERATOR_RANK = 2

_INF = math.inf


def _eff_horizon(vec: "PeriodicVec") -> float:
    if vec.floor is None:
        return _INF
    if vec.horizon is None:
        return -_INF
    return vec.horizon


def _meet(floor_a, floor_b):
    floors = [f for f in (floor_a, floor_b) if f is not None]
    return min(floors) if floors else None


class PeriodicVec:
    """Finitely supported alcove combination with a truncation floor"""

    __slots__ = ("space", "_terms", "floor", "horizon")

    def __init__(self, space: AlcoveSpace, terms: Optional[Dict[Alcove, LaurentPoly]] = None,
                 floor: Optional[int] = None, horizon: Optional[int] = None):
        self.space = space
        self._terms = {a: c for a, c in (terms or {}).items() if c}
        self.floor = floor
        self.horizon = horizon if floor is not None else None

    @classmethod
    def basis(cls, alcove: Alcove, coeff=1) -> "PeriodicVec":
        return cls(alcove.space, {alcove: LaurentPoly.coerce(coeff)})

    @property
    def terms(self) -> Dict[Alcove, LaurentPoly]:
        return dict(self._terms)

    def coefficient(self, alcove: Alcove) -> LaurentPoly:
        return self._terms.get(alcove, LaurentPoly())

    def support(self) -> List[Alcove]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_exact(self) -> bool:
        return self.floor is None

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "PeriodicVec") -> "PeriodicVec":
        terms = dict(self._terms)
        for a, c in other._terms.items():
            terms[a] = terms.get(a, LaurentPoly()) + c
        floor = _meet(self.floor, other.floor)
        horizon = min(_eff_horizon(self), _eff_horizon(other))
        return PeriodicVec(self.space, terms, floor,
                           horizon if horizon not in (_INF, -_INF) else None)

    def __neg__(self) -> "PeriodicVec":
        return PeriodicVec(self.space, {a: -c for a, c in self._terms.items()},
                           self.floor, self.horizon)

    def __sub__(self, other: "PeriodicVec") -> "PeriodicVec":
        return self + (-other)

    def scale(self, c) -> "PeriodicVec":
        c = LaurentPoly.coerce(c)
        floor = self.floor
        if floor is not None and c:
            floor -= c.degree
        return PeriodicVec(self.space, {a: c * x for a, x in self._terms.items()},
                           floor, self.horizon)

    def __rmul__(self, c):
        try:
            return self.scale(c)
        except ValueError:
            return NotImplemented

    def trimmed(self) -> "PeriodicVec":
        """Drop the uncertified terms; the horizon does not survive this"""
        if self.floor is None:
            return self
        return PeriodicVec(self.space, {a: c.truncate(self.floor) for a, c in self._terms.items()},
                           self.floor)

    def restrict(self, alcoves: Iterable[Alcove]) -> "PeriodicVec":
        keep = set(alcoves)
        return PeriodicVec(self.space, {a: c for a, c in self._terms.items() if a in keep},
                           self.floor, self.horizon)

    def mismatches(self, other: "PeriodicVec", floor: Optional[int] = None) -> List[Alcove]:
        """Alcoves where the certified terms of both vectors differ"""
        cut = _meet(_meet(self.floor, other.floor), floor)
        bad = []
        for a in sorted(set(self._terms) | set(other._terms)):
            if self.coefficient(a).truncate(cut) != other.coefficient(a).truncate(cut):
                bad.append(a)
        return bad

    def agrees(self, other: "PeriodicVec", floor: Optional[int] = None) -> bool:
        return not self.mismatches(other, floor)

    def __eq__(self, other):
        if not isinstance(other, PeriodicVec):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = " + ".join(f"({self._terms[a]}){a!r}" for a in self.support()) or "0"
        return f"PeriodicVec({body}, floor={self.floor})"


def hecke_apply(s: int, m: PeriodicVec) -> PeriodicVec:
    """`T~_s` on `m`: `A -> sA`, plus `(v - v^-1) A` when `s` is in `L(A)`"""
    terms: Dict[Alcove, LaurentPoly] = {}
    for a, c in m.terms.items():
        b = a.cross(s)
        terms[b] = terms.get(b, LaurentPoly()) + c
        if b.distance_to(a) == 1:
            terms[a] = terms.get(a, LaurentPoly()) + c * V_DIFF
    floor = None if m.floor is None else m.floor - 1
    horizon = None if m.horizon is None else m.horizon - 1
    return PeriodicVec(m.space, terms, floor, horizon)


def hecke_apply_word(word: Sequence[int], m: PeriodicVec) -> PeriodicVec:
    """`T~_(s_1) ... T~_(s_k)` on `m`, the last letter acting first"""
    for s in reversed(tuple(word)):
        m = hecke_apply(s, m)
    return m


def theta_coefficient(n: int) -> LaurentPoly:
    """Coefficient of `A^n` in `theta(A)`"""
    if n == 0:
        return LaurentPoly.monomial(-1)
    sign = 1 if n % 2 else -1
    return LaurentPoly({1 - n: sign, -1 - n: -sign})


def theta(i: int, m: PeriodicVec, floor: Optional[int] = None) -> PeriodicVec:
    """The operator `theta_(a_i)`

    Exact input needs an explicit `floor` at which the infinite chain
    sums are cut; truncated input uses its own floor (or the smaller
    of both).
    """
    cut = _meet(m.floor, floor)
    if cut is None:
        raise ValueError("theta of an exact vector needs a truncation floor")
    if cut <= 0:
        raise ValueError(f"Truncation floor exhausted: {cut}")

    terms: Dict[Alcove, LaurentPoly] = {}
    horizon = _INF
    for a, c in m.terms.items():
        length = cut + 1 + c.degree
        if length <= 0:
            if m.space.rank == 1:
                horizon = min(horizon, rank1_index(a.right_reflect(i)))
            continue
        chain = a.theta_chain(i, length)
        for n, b in enumerate(chain):
            terms[b] = terms.get(b, LaurentPoly()) + c * theta_coefficient(n)
        if m.space.rank == 1:
            horizon = min(horizon, rank1_index(chain[0]) + length)

    out = PeriodicVec(m.space, terms, cut)
    if m.floor is not None:
        return out.trimmed()
    if m.space.rank == 1 and horizon != _INF:
        out.horizon = horizon
    return out


def theta_along(word: Sequence[int], m: PeriodicVec, floor: Optional[int] = None) -> PeriodicVec:
    """`theta_(s_1) o ... o theta_(s_k)` on `m`"""
    for i in reversed(tuple(word)):
        m = theta(i, m, floor)
    return m


def theta_word(z: WeylElt, m: PeriodicVec, floor: Optional[int] = None) -> PeriodicVec:
    """`theta_z` along the canonical reduced word of `z`"""
    return theta_along(z.word, m, floor)


def _check_rank1(space: AlcoveSpace):
    if space.datum.cartan != ((2,),):
        raise ValueError(f"Rank one formulas need type A1, got {space.datum!r}")


def rank1_alcove(space: AlcoveSpace, n: int) -> Alcove:
    """The alcove `A_n = {n < <a, x> < n + 1}` of type A1"""
    _check_rank1(space)
    if n % 2 == 0:
        return Alcove(space, AffineElt(space.group.identity, (n // 2,)))
    return Alcove(space, AffineElt(space.group.gen(1), ((n + 1) // 2,)))


def rank1_index(alcove: Alcove) -> int:
    return alcove.bands[0]


def sharp_rank1(space: AlcoveSpace, n: int, floor: int) -> PeriodicVec:
    """`A_n^# = A_n - v^-1 A_(n+1) + v^-2 A_(n+2) - ...`, cut at `v^-floor`"""
    _check_rank1(space)
    if floor <= 0:
        raise ValueError(f"Truncation floor exhausted: {floor}")
    terms = {}
    for i in range(floor):
        terms[rank1_alcove(space, n + i)] = LaurentPoly.monomial(-i, -1 if i % 2 else 1)
    return PeriodicVec(space, terms, floor, n + floor)


def xi_proj(m: PeriodicVec) -> PeriodicVec:
    """Restriction of the support to the fundamental alcoves"""
    return PeriodicVec(m.space, {a: c for a, c in m.terms.items() if a.is_fundamental()},
                       m.floor, m.horizon)


def rho_proj(m: PeriodicVec) -> PeriodicVec:
    """`id - xi_proj`"""
    return PeriodicVec(m.space, {a: c for a, c in m.terms.items() if not a.is_fundamental()},
                       m.floor, m.horizon)


def j_e(m: PeriodicVec, algebra: Optional[HeckeAlgebra] = None) -> HeckeElt:
    """`A_w -> [Delta_w]` on fundamental alcoves, zero elsewhere"""
    algebra = algebra or HeckeAlgebra(m.space.group)
    result = algebra.zero()
    for a, c in m.terms.items():
        if a.is_fundamental():
            result = result + algebra.delta_class(a.coord.w.inverse()).scale(c)
    if m.floor is not None:
        # [Delta_w] has coefficients of degree up to l(w)
        result.floor = m.floor - m.space.group.longest.length
    return result


def j_e_section(h: HeckeElt, space: AlcoveSpace) -> PeriodicVec:
    """The section of `j_e` with image in the span of fundamental alcoves"""
    coords = h.algebra.expand_in_delta(h)
    return PeriodicVec(space, {space.fundamental(w): c for w, c in coords.items()}, h.floor)


def eta_standard(space: AlcoveSpace, z: WeylElt, w: WeylElt, floor: int) -> PeriodicVec:
    """`theta_(z^-1)(A_w)`, the image of the standard object on `(w, z)`"""
    return theta_word(z.inverse(), PeriodicVec.basis(space.fundamental(w)), floor)


class Generator(NamedTuple):
    w: WeylElt
    z: WeylElt
    vector: PeriodicVec


def m0_generators(space: AlcoveSpace, floor: int) -> List[Generator]:
    """The spanning set `theta_(z^-1)(A_w)` of the finite submodule

    `w` runs over the group, `z` over minimal representatives of
    `<P(w)> \\ W`.
    """
    if space.rank > MAX_GENERATOR_RANK:
        raise ValueError(f"Refusing exhaustive generation in rank {space.rank}")
    group = space.group
    gens = []
    for w in group.enumerate():
        for z in group.coset_min_reps(group.p_of(w)):
            vec = eta_standard(space, z, w, floor)
            if vec.floor is not None and vec.floor <= 0:
                raise ValueError(f"Floor {floor} too small to certify generator ({w}, {z})")
            gens.append(Generator(w, z, vec))
    return gens


def _window_matrix(vectors: Sequence[PeriodicVec], window: Sequence[Alcove]):
    for vec in vectors:
        if vec.floor is not None and vec.floor <= 0:
            raise ValueError("Uncertified vector: truncation floor exhausted")
    cols = [a for a in window if any(vec.coefficient(a) for vec in vectors)]
    return [[vec.coefficient(a).truncate(vec.floor) for a in cols] for vec in vectors]


def window_rank(vectors: Sequence[PeriodicVec], radius: int, value=2) -> int:
    """Rank over `Q(v)` of the truncated coefficients inside the window

    Each coefficient is cut at its vector's floor first, so the result
    is a lower bound for the rank of the untruncated vectors; `value`
    only picks the specialization that may settle it early.
    """
    if not vectors:
        return 0
    window = vectors[0].space.window(radius)
    matrix = _window_matrix(vectors, window)
    if not matrix or not matrix[0]:
        return 0
    return certified_rank(matrix, value)


class SolveResult:
    """Outcome of `solve_in_generators`

    For a consistent system `coordinates[k]` maps exponents to the
    rational coefficients of the `k`-th generator; otherwise `witness`
    names an alcove and exponent whose equation could not be met,
    together with the residual constant.
    """

    def __init__(self, coordinates: Optional[List[Dict[int, Fraction]]] = None,
                 witness: Optional[Tuple[Alcove, int, Fraction]] = None):
        self.coordinates = coordinates
        self.witness = witness

    @property
    def consistent(self) -> bool:
        return self.witness is None

    def __bool__(self):
        return self.consistent


def solve_in_generators(m: PeriodicVec, gens: Sequence[PeriodicVec], radius: int,
                        degree: int = 3) -> SolveResult:
    """Express `m` in the generators over the window

    Coordinates are searched among Laurent polynomials with rational
    coefficients and exponents in `[-degree, degree]`. An equation is
    posed for every window alcove and every exponent certified for the
    target and all generators after such a shift.
    """
    width = 2 * degree + 1
    cut = m.floor
    for g in gens:
        cut = _meet(cut, g.floor)
    low = None if cut is None else -cut + degree

    eliminator = SparseEliminator()
    for a in m.space.window(radius):
        target = m.coefficient(a)
        coeffs = [g.coefficient(a) for g in gens]
        exponents = {e for e, _ in target}
        for c in coeffs:
            exponents.update(e + d for e, _ in c for d in range(-degree, degree + 1))
        for e in sorted(exponents):
            if low is not None and e <= low:
                continue
            row = {}
            for k, c in enumerate(coeffs):
                for d in range(-degree, degree + 1):
                    x = c.coefficient(e - d)
                    if x:
                        row[k * width + d + degree] = x
            eliminator.add(row, target.coefficient(e), tag=(a, e))

    if eliminator.inconsistent is not None:
        (alcove, exponent), residual = eliminator.inconsistent
        return SolveResult(witness=(alcove, exponent, residual))
    solution = eliminator.solution()
    coordinates = []
    for k in range(len(gens)):
        coordinates.append({d: solution[k * width + d + degree]
                            for d in range(-degree, degree + 1)
                            if solution.get(k * width + d + degree)})
    return SolveResult(coordinates=coordinates)


def hecke_on_standards(space: AlcoveSpace, algebra: Optional[HeckeAlgebra] = None):
    """Pairs `(w, s)` where `j_e(T~_s A_w) != T~_s [Delta_w]`"""
    algebra = algebra or HeckeAlgebra(space.group)
    failures = []
    for w in space.group.enumerate():
        for s in range(1, space.rank + 1):
            lhs = j_e(hecke_apply(s, PeriodicVec.basis(space.fundamental(w))), algebra)
            rhs = algebra.left_action(s, algebra.delta_class(w))
            if lhs != rhs:
                failures.append((w, s))
    return failures
