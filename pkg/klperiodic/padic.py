"""Rank one p-adic Schwartz functions

Functions on `k^2` for a local field `k` with ring of integers `O`,
uniformizer `pi` and residue field of size `q = v^2`. Only finite
combinations of box indicators

    chi_(a,b) = indicator of pi^a O x pi^b O

occur; they are stored as `BoxFunction` values with Laurent
coefficients. Distinct boxes are linearly independent, so the stored
form is canonical.

Functions invariant under the Iwahori subgroup `I` (matrices in
`SL2(O)` with lower left entry in `pi O`) and the torus `T(O)` are
constant on the orbits

    E_n = {val x = n, val y > n}        (the alcove A_2n)
    F_n = {val y = n, val x >= n}       (the alcove A_(2n-1))

and the convolution action of the Iwahori-Hecke algebra is computed
on these orbit values. The Fourier transform, the orbit indicators
`delta_w`, the map from the periodic module and the Eisenstein lift
are expressed in box form.
"""

import math
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .alcove import Alcove
from .laurent import LaurentPoly, V_DIFF, q_power
from .linalg import rank
from .periodic import PeriodicVec, rank1_alcove, rank1_index, theta


Box = Tuple[int, int]

Q = q_power(1)


def _signed_power(k: int) -> LaurentPoly:
    """`(-v)^k`"""
    return LaurentPoly.monomial(k, -1 if k % 2 else 1)


class BoxFunction:
    """Finite combination of box indicators"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Box, LaurentPoly]] = None):
        acc: Dict[Box, LaurentPoly] = {}
        for (a, b), c in (terms or {}).items():
            acc[(a, b)] = acc.get((a, b), LaurentPoly()) + LaurentPoly.coerce(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def box(cls, a: int, b: int, coeff=1) -> "BoxFunction":
        return cls({(a, b): coeff})

    @property
    def terms(self) -> Dict[Box, LaurentPoly]:
        return dict(self._terms)

    def boxes(self) -> List[Box]:
        return sorted(self._terms)

    def coefficient(self, a: int, b: int) -> LaurentPoly:
        return self._terms.get((a, b), LaurentPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BoxFunction") -> "BoxFunction":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, LaurentPoly()) + c
        return BoxFunction(terms)

    def __neg__(self) -> "BoxFunction":
        return BoxFunction({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BoxFunction") -> "BoxFunction":
        return self + (-other)

    def scale(self, c) -> "BoxFunction":
        c = LaurentPoly.coerce(c)
        return BoxFunction({k: c * x for k, x in self._terms.items()})

    def __rmul__(self, c):
        try:
            return self.scale(c)
        except ValueError:
            return NotImplemented

    def is_deep(self, depth: Optional[int]) -> bool:
        """Whether every box lies inside `pi^depth O x pi^depth O`

        `depth=None` stands for infinite depth, i.e. the zero function.
        """
        if depth is None:
            return self.is_zero()
        return all(min(a, b) >= depth for a, b in self._terms)

    def __eq__(self, other):
        if not isinstance(other, BoxFunction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = " + ".join(f"({self._terms[k]})chi{k}" for k in self.boxes()) or "0"
        return f"BoxFunction({body})"


class OrbitValues(NamedTuple):
    """An invariant function by its values on `E_n` and `F_n`

    `E` and `F` hold the values for `n` in `[low, high]`; below `low`
    the function vanishes, above `high` it equals `tail` on every orbit.
    """
    low: int
    high: int
    E: Dict[int, LaurentPoly]
    F: Dict[int, LaurentPoly]
    tail: LaurentPoly

    def e(self, n: int) -> LaurentPoly:
        if n < self.low:
            return LaurentPoly()
        if n > self.high:
            return self.tail
        return self.E[n]

    def f(self, n: int) -> LaurentPoly:
        if n < self.low:
            return LaurentPoly()
        if n > self.high:
            return self.tail
        return self.F[n]


def orbit_values(f: BoxFunction) -> OrbitValues:
    """Orbit values of an invariant function

    Raises `ValueError` if `f` is not constant on the orbits.
    """
    if f.is_zero():
        return OrbitValues(0, -1, {}, {}, LaurentPoly())
    boxes = f.terms
    low = min(min(a, b) for a, b in boxes) - 1
    high = max(max(a, b) for a, b in boxes)

    def partial(amax, bmax):
        return sum((c for (a, b), c in boxes.items() if a <= amax and b <= bmax), LaurentPoly())

    E, F = {}, {}
    for n in range(low, high + 1):
        for j in range(n + 2, high + 1):
            if sum((c for (a, b), c in boxes.items() if a <= n and b == j), LaurentPoly()):
                raise ValueError(f"Not invariant: value on E_{n} depends on val y")
        for i in range(n + 1, high + 1):
            if sum((c for (a, b), c in boxes.items() if b <= n and a == i), LaurentPoly()):
                raise ValueError(f"Not invariant: value on F_{n} depends on val x")
        E[n] = partial(n, n + 1)
        F[n] = partial(n, n)
    tail = sum(boxes.values(), LaurentPoly())
    return OrbitValues(low, high, E, F, tail)


def from_orbit_values(values: OrbitValues) -> BoxFunction:
    terms: Dict[Box, LaurentPoly] = {}

    def put(a, b, c):
        if c:
            terms[(a, b)] = terms.get((a, b), LaurentPoly()) + c

    for n in range(values.low, values.high + 1):
        e, f = values.e(n), values.f(n)
        put(n, n + 1, e)
        put(n + 1, n + 1, -e)
        put(n, n, f)
        put(n, n + 1, -f)
    put(values.high + 1, values.high + 1, values.tail)
    return BoxFunction(terms)


class CharacterSpec(NamedTuple):
    """Additive character of conductor `conductor` and the normalization `q^norm`"""
    conductor: int
    norm: int

    def as_dict(self):
        return {"conductor": self.conductor, "norm": self.norm}


#: The character used throughout: conductor 1, normalized by `q`
PSI_1 = CharacterSpec(1, 1)

#: Conductor 0 without normalization, for which no intertwiner exists
PSI_0 = CharacterSpec(0, 0)


def fourier(f: BoxFunction, spec: CharacterSpec = PSI_1) -> BoxFunction:
    """`chi_(a,b) -> q^norm q^(-a-b) chi_(n-b, n-a)`"""
    n = spec.conductor
    terms = {}
    for (a, b), c in f.terms.items():
        terms[(n - b, n - a)] = c * q_power(spec.norm - a - b)
    return BoxFunction(terms)


def indicator(m: int) -> BoxFunction:
    """Indicator of the orbit belonging to the alcove `A_m`"""
    if m % 2 == 0:
        n = m // 2
        return BoxFunction({(n, n + 1): 1, (n + 1, n + 1): -1})
    n = (m + 1) // 2
    return BoxFunction({(n, n): 1, (n, n + 1): -1})


def orbit_indicator(alcove: Alcove) -> BoxFunction:
    """Indicator of `I w U(k)` for the alcove `A = w(A+)`"""
    return indicator(rank1_index(alcove))


def psi(m: PeriodicVec) -> BoxFunction:
    """`A -> (-v)^d(A_e, A) chi_(orbit of A)`, extended linearly"""
    result = BoxFunction()
    for alcove, c in m.terms.items():
        k = rank1_index(alcove)
        result = result + indicator(k).scale(c * _signed_power(k))
    return result


def psi_depth(m: PeriodicVec) -> Optional[int]:
    """Depth up to which `psi(m)` is exact, `None` when exact throughout"""
    if m.floor is None:
        return None
    if m.horizon is None:
        raise ValueError("Truncated vector without horizon has no exact image")
    return math.ceil(m.horizon / 2)


def psi_sharp(n: int) -> BoxFunction:
    """Closed form of the image of `A_n^#`"""
    if n % 2 == 0:
        return BoxFunction.box(n // 2, n // 2 + 1, _signed_power(n))
    k = (n + 1) // 2
    return BoxFunction.box(k, k, _signed_power(n))


def convolve(s: int, f: BoxFunction) -> BoxFunction:
    """`chi_(I s I) * f` for `s` in `{0, 1}`

    Coset representatives `u(t) s_1` act by `(x, y) -> (y, ty - x)`,
    `u-(pi t) s_0` by `(x, y) -> (tx - y/pi, pi x)`, with `t` running over
    lifts of the residue field. Counting the lifts that land in each
    orbit gives the formulas below.
    """
    if s not in (0, 1):
        raise ValueError(f"No affine generator s{s} in rank 1")
    values = orbit_values(f)
    if f.is_zero():
        return f
    low, high = values.low - 1, values.high + 1
    E, F = {}, {}
    for n in range(low, high + 1):
        if s == 1:
            E[n] = Q * values.f(n)
            F[n] = values.e(n) + (Q - 1) * values.f(n)
        else:
            E[n] = values.f(n + 1) + (Q - 1) * values.e(n)
            F[n] = Q * values.e(n - 1)
    return from_orbit_values(OrbitValues(low, high, E, F, Q * values.tail))


def hecke_transport(s: int, f: BoxFunction) -> BoxFunction:
    """`T~_s` acting on invariant functions

    `T~_s^-1 f = -v^-1 chi_s * f`, and `T~_s = T~_s^-1 + (v - v^-1)`.
    """
    inverse = convolve(s, f).scale(LaurentPoly.monomial(-1, -1))
    return inverse + f.scale(V_DIFF)


def eisenstein_lift(c_e, c_s1) -> BoxFunction:
    """Extension by zero of a function on the two cells of the finite basic affine space"""
    return indicator(0).scale(c_e) + indicator(-1).scale(c_s1)


def trace_delta(w_is_s1: bool) -> Tuple[LaurentPoly, LaurentPoly]:
    """Cell coefficients of the trace function of `Delta_e` or `Delta_s1`"""
    if w_is_s1:
        return LaurentPoly(), LaurentPoly.monomial(-1, -1)
    return LaurentPoly.const(1), LaurentPoly()


def _check_key(n: int):
    return (abs(2 * n + 1), n)


def intertwine_witness(spec: CharacterSpec, window: int, floor: int = 16,
                       space=None) -> Optional[Dict]:
    """First failure of `fourier o psi = psi o theta`, or `None`

    Canonical basis vectors `A_n^#` are checked exactly through the
    closed form of their images. Single alcoves `A_n` are checked
    through truncated theta images, modulo functions of the depth the
    truncation certifies.
    """
    for n in sorted(range(-window, window + 1), key=_check_key):
        image = psi_sharp(n)
        if fourier(image, spec) != psi_sharp(-n):
            a, b = image.boxes()[0]
            return {"sharp": n, "box": [a, b]}

    if space is None:
        return None
    for n in sorted(range(-window, window + 1), key=_check_key):
        alcove = rank1_alcove(space, n)
        lhs = fourier(orbit_indicator(alcove).scale(_signed_power(n)), spec)
        image = theta(1, PeriodicVec.basis(alcove), floor)
        rhs = psi(image)
        if not (lhs - rhs).is_deep(psi_depth(image)):
            return {"alcove": n, "boxes": [list(k) for k in (lhs - rhs).boxes()[:1]]}
    return None


def intertwine_check(spec: CharacterSpec, window: int, floor: int = 16, space=None) -> bool:
    return intertwine_witness(spec, window, floor, space) is None


_SPAN_BASIS = ((0, 0), (0, 1), (1, 1))


def _coordinates(f: BoxFunction, depth: Optional[int]) -> List[LaurentPoly]:
    rest = BoxFunction({k: c for k, c in f.terms.items() if k not in _SPAN_BASIS})
    if not rest.is_deep(depth):
        raise ValueError(f"{f!r} leaves the span of the unit boxes")
    return [f.coefficient(a, b) for a, b in _SPAN_BASIS]


def theta_span_check(space, floor: int = 16) -> bool:
    """Images of the standard objects span the Eisenstein lifts and their transforms"""
    e_alcove = rank1_alcove(space, 0)
    s_alcove = rank1_alcove(space, -1)
    theta_image = theta(1, PeriodicVec.basis(s_alcove), floor)
    images = [
        _coordinates(psi(PeriodicVec.basis(e_alcove)), None),
        _coordinates(psi(PeriodicVec.basis(s_alcove)), None),
        _coordinates(psi(theta_image), psi_depth(theta_image)),
    ]
    lifts = []
    for w_is_s1 in (False, True):
        lift = eisenstein_lift(*trace_delta(w_is_s1))
        lifts.append(_coordinates(lift, None))
        lifts.append(_coordinates(fourier(lift), None))
    both = rank(images + lifts)
    return rank(images) == rank(lifts) == both


def boxes_of(values: Iterable[Tuple[int, int, LaurentPoly]]) -> BoxFunction:
    return BoxFunction({(a, b): c for a, b, c in values})
