"""Alcove geometry

Alcoves of an affine Weyl group live in the real span of the coroots.
An `AffineElt` `x = (w, lam)` acts by `x(u) = w(u) + lam`, and every
alcove is `x(A+)` for exactly one `x`; that element is the alcove's
*coordinate*. The alcove reached from `A+` by crossing walls along a
word of `x` is the alcove *labelled* `x`; its coordinate is `x^-1`.
All user facing indices (`A_w`, the stabilizers, the `epsilon` maps)
use labels.

Two commuting actions exist on alcoves: `Alcove.cross` moves through
the wall of a given affine type, `Alcove.right_reflect` mirrors in a
linear root hyperplane. On top of them this module provides band
coordinates, relative distances, the boxes of the coweight grid, the
`*`-action of the finite Weyl group, the reflection chains the theta
operators are built from and the region predicates used by the
periodic module.
"""

import collections
import math
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .coxeter import CartanDatum, Root, WeylElt, WeylGroup


__all__ = [
    "AffineElt",
    "Alcove",
    "AlcoveSpace",
]


class AffineElt:
    """Element `t_lam * w` of the affine Weyl group

    The translation part is an integer vector in coroot coordinates.
    """

    __slots__ = ("w", "translation")

    def __init__(self, w: WeylElt, translation: Sequence[int]):
        translation = tuple(translation)
        if any(not isinstance(x, int) for x in translation):
            if any(Fraction(x).denominator != 1 for x in translation):
                raise ValueError(f"Translation {translation} is not in the coroot lattice")
            translation = tuple(int(x) for x in translation)
        self.w = w
        self.translation = translation

    @property
    def group(self) -> WeylGroup:
        return self.w.group

    def act(self, vector):
        return tuple(a + b for a, b in zip(self.w.act(vector), self.translation))

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        if not isinstance(other, AffineElt):
            return NotImplemented
        moved = self.w.act(other.translation)
        return AffineElt(self.w * other.w, tuple(a + b for a, b in zip(moved, self.translation)))

    def inverse(self) -> "AffineElt":
        winv = self.w.inverse()
        return AffineElt(winv, tuple(-x for x in winv.act(self.translation)))

    def is_finite(self) -> bool:
        return not any(self.translation)

    def finite_first(self) -> Tuple[WeylElt, Tuple[int, ...]]:
        """Write the element as `w * t_nu` and return `(w, nu)`"""
        return self.w, self.w.inverse().act(self.translation)

    def involution(self) -> "AffineElt":
        """`w * t_nu -> w * t_-nu`"""
        return AffineElt(self.w, tuple(-x for x in self.translation))

    def __eq__(self, other):
        if not isinstance(other, AffineElt):
            return NotImplemented
        return self.w == other.w and self.translation == other.translation

    def __hash__(self):
        return hash((self.w, self.translation))

    def sort_key(self):
        return (self.w.length, self.w.word, self.translation)

    def __repr__(self):
        return f"AffineElt({list(self.w.word)}, {list(self.translation)})"


class Alcove:
    """An alcove, identified by its coordinate `x` with `A = x(A+)`"""

    __slots__ = ("space", "coord", "_bands", "_barycenter")

    def __init__(self, space: "AlcoveSpace", coord: AffineElt):
        self.space = space
        self.coord = coord
        self._bands = None
        self._barycenter = None

    @property
    def label(self) -> AffineElt:
        return self.coord.inverse()

    @property
    def barycenter(self) -> Tuple[Fraction, ...]:
        if self._barycenter is None:
            self._barycenter = self.coord.act(self.space.base_barycenter)
        return self._barycenter

    def band(self, root: Root) -> int:
        """`k_root(A)`, the integer with `k < <root, x> < k + 1` on `A`"""
        return math.floor(self.space.datum.pairing(root, self.barycenter))

    @property
    def bands(self) -> Tuple[int, ...]:
        """Band coordinates, one per positive root"""
        if self._bands is None:
            self._bands = tuple(self.band(r) for r in self.space.datum.positive_roots)
        return self._bands

    @property
    def gallery_length(self) -> int:
        """Number of hyperplanes separating the alcove from `A+`"""
        return sum(k if k >= 0 else -k for k in self.bands)

    def is_fundamental(self) -> bool:
        return self.coord.is_finite()

    def cross(self, s: int) -> "Alcove":
        """Neighbour through the wall of type `s`, coordinate `x * s`"""
        return Alcove(self.space, self.coord * self.space.affine_gen(s))

    def right_reflect(self, i: int) -> "Alcove":
        """Mirror image in `<a_i, .> = 0`, coordinate `s_i * x`"""
        g = self.space.group.gen(i)
        return Alcove(self.space, self.space.finite(g) * self.coord)

    def reflect(self, root: Root, level: int) -> "Alcove":
        """Mirror image in the affine hyperplane `<root, .> = level`"""
        return Alcove(self.space, self.space.reflection(root, level) * self.coord)

    def distance_to(self, other: "Alcove") -> int:
        return sum(b - a for a, b in zip(self.bands, other.bands))

    def lset(self) -> FrozenSet[int]:
        """Affine generators `s` for which the alcove lies above `sA`"""
        return frozenset(s for s in self.space.affine_indices
                         if self.cross(s).distance_to(self) == 1)

    def box_coweight(self) -> Tuple[int, ...]:
        """The box `Pi_gamma` containing the alcove, as `gamma` in the coweight basis"""
        datum = self.space.datum
        return tuple(math.floor(datum.pairing(r, self.barycenter)) for r in datum.simple_roots)

    def translate(self, shift: Sequence[int]) -> "Alcove":
        c = self.coord
        return Alcove(self.space, AffineElt(c.w, tuple(a + b for a, b in zip(c.translation, shift))))

    def star(self, z: WeylElt) -> "Alcove":
        """The `*`-action: translate by `z(gamma) - gamma`"""
        gamma = self.space.datum.coweight_to_coroot(self.box_coweight())
        moved = z.act(gamma)
        shift = tuple(a - b for a, b in zip(moved, gamma))
        if any(Fraction(x).denominator != 1 for x in shift):
            raise ValueError(f"Star shift {shift} left the coroot lattice")
        return self.translate(tuple(int(x) for x in shift))

    def theta_chain(self, i: int, length: int) -> List["Alcove"]:
        """The alcoves `A^0, ..., A^(length - 1)` of the `a_i`-strip chain

        `A^0` is the mirror image of the alcove in `<a_i, .> = 0`; each
        further element is the previous one reflected in the upper wall
        of its `a_i`-band.
        """
        root = self.space.datum.simple_roots[i - 1]
        chain = []
        current = self.right_reflect(i)
        for _ in range(length):
            chain.append(current)
            current = current.reflect(root, current.band(root) + 1)
        return chain

    def __eq__(self, other):
        if not isinstance(other, Alcove):
            return NotImplemented
        return self.coord == other.coord

    def __hash__(self):
        return hash(self.coord)

    def sort_key(self):
        return (self.gallery_length,) + self.coord.sort_key()

    def __lt__(self, other: "Alcove"):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        c = self.coord
        return f"Alcove({list(c.w.word)}, {list(c.translation)})"


def distance(a: Alcove, b: Alcove) -> int:
    """Signed count of hyperplanes with `a` below and `b` above"""
    return a.distance_to(b)


def distance_alpha(a: Alcove, b: Alcove, root: Root) -> int:
    return b.band(root) - a.band(root)


class AlcoveSpace:
    """The alcoves of one root datum

    Holds the barycenter of `A+`, the affine generators and the finite
    caches the region predicates rely on.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.group = datum.group()
        self.rank = datum.rank

        bary = [Fraction(0)] * self.rank
        for omega, mark in zip(datum.fundamental_coweights, datum.marks):
            for j in range(self.rank):
                bary[j] += omega[j] / mark
        self.base_barycenter = tuple(x / (self.rank + 1) for x in bary)

        zero = (0,) * self.rank
        self.identity = AffineElt(self.group.identity, zero)
        theta = datum.highest_root
        s_theta = WeylElt(self.group, datum.reflection_matrix(theta))
        self._gens = {0: AffineElt(s_theta, datum.coroot(theta))}
        for i in range(1, self.rank + 1):
            self._gens[i] = AffineElt(self.group.gen(i), zero)
        self.affine_indices = tuple(range(self.rank + 1))
        self._w_prime: Optional[Set[AffineElt]] = None

    def affine_gen(self, s: int) -> AffineElt:
        if s not in self._gens:
            raise ValueError(f"No affine generator s{s} in rank {self.rank}")
        return self._gens[s]

    def affine_element(self, word: Iterable[int]) -> AffineElt:
        x = self.identity
        for s in word:
            x = x * self.affine_gen(s)
        return x

    def finite(self, w: WeylElt) -> AffineElt:
        return AffineElt(w, (0,) * self.rank)

    def translation(self, lam: Sequence[int]) -> AffineElt:
        return AffineElt(self.group.identity, lam)

    def reflection(self, root: Root, level: int) -> AffineElt:
        """The affine reflection in `<root, .> = level`"""
        s = WeylElt(self.group, self.datum.reflection_matrix(root))
        return AffineElt(s, tuple(level * c for c in self.datum.coroot(root)))

    @property
    def base(self) -> Alcove:
        return Alcove(self, self.identity)

    def labelled(self, x: AffineElt) -> Alcove:
        """The alcove `A_x`"""
        return Alcove(self, x.inverse())

    def fundamental(self, w: WeylElt) -> Alcove:
        """The fundamental alcove `A_w`"""
        return self.labelled(self.finite(w))

    def xi_fin(self) -> List[Alcove]:
        return [self.fundamental(w) for w in self.group.enumerate()]

    def epsilon(self, z: WeylElt, x: AffineElt) -> AffineElt:
        """Label of `z * A_x`"""
        return self.labelled(x).star(z).label

    def semiinf_alcove(self, x: AffineElt) -> Alcove:
        """The alcove labelled `i(x)`"""
        return self.labelled(x.involution())

    def xi_plus(self, alcove: Alcove, roots: Iterable[Root]) -> bool:
        """Whether the alcove is non-fundamental and its Weyl chamber has
        the coroot of one of `roots` in its closure"""
        if alcove.is_fundamental():
            return False
        datum = self.datum
        bary = alcove.barycenter
        signs = [1 if datum.pairing(d, bary) > 0 else -1 for d in datum.positive_roots]
        for beta in roots:
            cv = datum.coroot(beta)
            if all(sign * datum.pairing(d, cv) >= 0
                   for sign, d in zip(signs, datum.positive_roots)):
                return True
        return False

    def in_w_leq(self, x: AffineElt) -> bool:
        """Every `epsilon_y(x)` is of the form `w * t_nu` with `nu <= 0`"""
        for y in self.group.enumerate():
            _, nu = self.epsilon(y, x).finite_first()
            if any(c > 0 for c in nu):
                return False
        return True

    def w_prime(self) -> Set[AffineElt]:
        """The `epsilon`-orbit of the finite Weyl group"""
        if self._w_prime is None:
            elements = self.group.enumerate()
            self._w_prime = {self.epsilon(z, self.finite(w).involution())
                             for w in elements for z in elements}
        return set(self._w_prime)

    def in_w_prime(self, x: AffineElt) -> bool:
        return x in self.w_prime()

    def window(self, radius: int) -> List[Alcove]:
        """All alcoves separated from `A+` by at most `radius` hyperplanes"""
        start = self.base
        seen = {start}
        queue = collections.deque([start])
        while queue:
            alcove = queue.popleft()
            for s in self.affine_indices:
                nxt = alcove.cross(s)
                if nxt in seen or nxt.gallery_length > radius:
                    continue
                seen.add(nxt)
                queue.append(nxt)
        return sorted(seen)

    def t_set(self, radius: int) -> List[AffineElt]:
        """Labels in `W_<=` but not in `W'`, searched inside the window"""
        prime = self.w_prime()
        found = []
        for alcove in self.window(radius):
            x = alcove.label
            if x not in prime and self.in_w_leq(x):
                found.append(x)
        return sorted(found, key=AffineElt.sort_key)

    def stabilizer(self, alcove: Alcove) -> List[WeylElt]:
        return [z for z in self.group.enumerate() if alcove.star(z) == alcove]

