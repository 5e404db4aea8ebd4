"""Finite Weyl groups

A `CartanDatum` holds a crystallographic Cartan matrix together with
the root data derived from it: positive roots and coroots, the highest
root and its marks, and the fundamental coweights. Vectors of the
ambient space are written in the basis of simple coroots; roots are
written in the basis of simple roots. With `cartan[i][j] = <a_i, a_j^v>`
the pairing of a root `b` with a vector `u` is

    <b, u> = sum_ij b_i * cartan[i][j] * u_j

A `WeylGroup` is built on a datum and hands out `WeylElt` values. An
element is represented by its integer action matrix on coroot
coordinates; two elements are equal if and only if their matrices are.
Simple generators are numbered `1..rank`, words are tuples of those
numbers. The group provides lengths, descents, Bruhat order, parabolic
data and Kazhdan-Lusztig polynomials; all caches are keyed on
matrices and therefore independent of evaluation order.
"""

import functools
import itertools
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly


#: Enumeration of a whole group is refused above this many elements
MAX_GROUP_ORDER = 1152

Root = Tuple[int, ...]
Vector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


def _type_a(n: int) -> List[List[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


CARTAN_MATRICES = {
    **{f"A{n}": _type_a(n) for n in range(1, 7)},
    # <a_i, a_j^v>; a1 is the short root of B2 and G2, the long one of C2
    "B2": [[2, -1], [-2, 2]],
    "C2": [[2, -2], [-1, 2]],
    "G2": [[2, -1], [-3, 2]],
}


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _matvec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _invert_rational(m) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


class CartanDatum:
    """Root data of a finite crystallographic root system

    Construct with `CartanDatum.from_label("A2")` for the named types
    or directly from an explicit Cartan matrix. Matrices that are not
    crystallographic, or that do not describe a finite root system,
    are rejected with a `ValueError`.
    """

    def __init__(self, matrix: Sequence[Sequence[int]], label: Optional[str] = None):
        cartan = tuple(tuple(int(x) for x in row) for row in matrix)
        self._check(cartan)
        self.cartan = cartan
        self.rank = len(cartan)
        self.label = label
        self._roots()
        self._group = None

    @classmethod
    def from_label(cls, label: str) -> "CartanDatum":
        matrix = CARTAN_MATRICES.get(label)
        if matrix is None:
            raise ValueError(f"Unknown Cartan type: {label}")
        return cls(matrix, label)

    @staticmethod
    def _check(cartan):
        n = len(cartan)
        if n == 0 or any(len(row) != n for row in cartan):
            raise ValueError("Cartan matrix must be square and non-empty")
        for i, j in itertools.product(range(n), repeat=2):
            a, b = cartan[i][j], cartan[j][i]
            if i == j:
                if a != 2:
                    raise ValueError("Cartan matrix must have 2 on the diagonal")
                continue
            if a > 0 or (a == 0) != (b == 0) or a * b > 3:
                raise ValueError(f"Cartan matrix is not crystallographic at ({i}, {j})")

    def _roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        coroots = {r: r for r in simple}
        queue = list(simple)
        limit = 200
        while queue:
            beta = queue.pop()
            for j in range(n):
                image = self.reflect_root(j + 1, beta)
                if any(x < 0 for x in image) or image in coroots:
                    continue
                coroots[image] = self.reflect_vector(j + 1, coroots[beta])
                queue.append(image)
                if len(coroots) > limit:
                    raise ValueError("Cartan matrix is not of finite type")

        self.simple_roots = tuple(simple)
        self.positive_roots = tuple(sorted(coroots, key=lambda r: (sum(r), tuple(-x for x in r))))
        self._coroots = coroots
        self.highest_root = self.positive_roots[-1]
        self.marks = self.highest_root
        self.fundamental_coweights = tuple(
            tuple(col) for col in zip(*_invert_rational(self.cartan))
        )
        self._functionals = {r: self._functional(r) for r in self.positive_roots}

    def _functional(self, root: Root) -> Tuple[int, ...]:
        n = self.rank
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def coroot(self, root: Root) -> Vector:
        """The coroot of a root, in coroot coordinates"""
        root = tuple(root)
        if root in self._coroots:
            return self._coroots[root]
        neg = tuple(-x for x in root)
        if neg in self._coroots:
            return tuple(-x for x in self._coroots[neg])
        raise ValueError(f"Not a root: {root}")

    def pairing(self, root: Root, vector) -> Fraction:
        """`<root, vector>` for a vector in coroot coordinates"""
        root = tuple(root)
        f = self._functionals.get(root)
        if f is None:
            f = self._functional(root)
        return sum((f[j] * vector[j] for j in range(self.rank)), 0)

    def reflect_root(self, i: int, root: Root) -> Root:
        """`s_i(root)` in simple-root coordinates"""
        k = sum(root[m] * self.cartan[m][i - 1] for m in range(self.rank))
        return tuple(x - k if m == i - 1 else x for m, x in enumerate(root))

    def reflect_vector(self, i: int, vector):
        """`s_i(vector)` in coroot coordinates"""
        k = sum(self.cartan[i - 1][j] * vector[j] for j in range(self.rank))
        return tuple(x - k if m == i - 1 else x for m, x in enumerate(vector))

    def reflection_matrix(self, root: Root) -> IntMatrix:
        """Matrix of `s_root` on coroot coordinates: `u - <root, u> root^v`"""
        f = self._functional(tuple(root))
        cv = self.coroot(root)
        n = self.rank
        return tuple(
            tuple(int(i == j) - cv[i] * f[j] for j in range(n))
            for i in range(n)
        )

    def coweight_to_coroot(self, coeffs: Sequence[int]) -> Tuple[Fraction, ...]:
        """`sum_i c_i omega_i^v` in coroot coordinates"""
        return tuple(
            sum((c * w[j] for c, w in zip(coeffs, self.fundamental_coweights)), Fraction(0))
            for j in range(self.rank)
        )

    def group(self) -> "WeylGroup":
        if self._group is None:
            self._group = WeylGroup(self)
        return self._group

    def as_dict(self):
        if self.label:
            return {"label": self.label}
        return {"matrix": [list(row) for row in self.cartan]}

    def __eq__(self, other):
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"CartanDatum({self.label or list(map(list, self.cartan))})"


class WeylElt:
    """Element of a finite Weyl group

    Products and inverses stay inside the group the element came from.
    The canonical word is the lexicographically least reduced word.
    """

    __slots__ = ("group", "matrix")

    def __init__(self, group: "WeylGroup", matrix: IntMatrix):
        self.group = group
        self.matrix = matrix

    @property
    def word(self) -> Tuple[int, ...]:
        return self.group.word(self)

    @property
    def length(self) -> int:
        return self.group.length(self)

    def act(self, vector):
        return _matvec(self.matrix, vector)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def is_identity(self) -> bool:
        return self.matrix == self.group.identity.matrix

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        if not isinstance(other, WeylElt):
            return NotImplemented
        return WeylElt(self.group, _matmul(self.matrix, other.matrix))

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __lt__(self, other: "WeylElt"):
        return (self.length, self.word) < (other.length, other.word)

    @property
    def name(self) -> str:
        """Short printable name: `e`, `w0` or `s1s2...`"""
        if self.is_identity():
            return "e"
        if self == self.group.longest:
            return "w0"
        return "".join(f"s{i}" for i in self.word)

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"WeylElt({list(self.word)})"


class ParabolicData:
    """Minimal right coset representatives of a standard parabolic subgroup"""

    def __init__(self, subset: FrozenSet[int], reps: List[WeylElt], subgroup_order: int):
        self.subset = subset
        self.reps = reps
        self.subgroup_order = subgroup_order

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


class WeylGroup:
    """The Weyl group of a `CartanDatum`

    Offers the group interface used by the rest of the package:
    multiplication (via `WeylElt`), inverses, lengths, descents,
    enumeration, Bruhat order and Kazhdan-Lusztig polynomials.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        self.identity = WeylElt(self, _identity(self.rank))
        self.generators = tuple(
            WeylElt(self, datum.reflection_matrix(root)) for root in datum.simple_roots
        )
        self._lengths: Dict[IntMatrix, int] = {}
        self._words: Dict[IntMatrix, Tuple[int, ...]] = {}
        self._bruhat: Dict[Tuple[IntMatrix, IntMatrix], bool] = {}
        self._kl: Dict[Tuple[IntMatrix, IntMatrix], LaurentPoly] = {}
        self._elements: Optional[List[WeylElt]] = None
        self._coroot_list = [datum.coroot(r) for r in datum.positive_roots]

    def gen(self, i: int) -> WeylElt:
        if not 1 <= i <= self.rank:
            raise ValueError(f"No simple generator s{i} in rank {self.rank}")
        return self.generators[i - 1]

    def element(self, word: Iterable[int]) -> WeylElt:
        result = self.identity
        for i in word:
            result = result * self.gen(i)
        return result

    def length(self, w: WeylElt) -> int:
        n = self._lengths.get(w.matrix)
        if n is None:
            n = sum(1 for cv in self._coroot_list
                    if all(x <= 0 for x in _matvec(w.matrix, cv)))
            self._lengths[w.matrix] = n
        return n

    def inverse(self, w: WeylElt) -> WeylElt:
        result = self.identity
        for i in w.word:
            result = self.gen(i) * result
        return result

    def left_descents(self, w: WeylElt) -> FrozenSet[int]:
        n = w.length
        return frozenset(i for i in range(1, self.rank + 1)
                         if (self.gen(i) * w).length < n)

    def right_descents(self, w: WeylElt) -> FrozenSet[int]:
        n = w.length
        return frozenset(i for i in range(1, self.rank + 1)
                         if (w * self.gen(i)).length < n)

    def word(self, w: WeylElt) -> Tuple[int, ...]:
        word = self._words.get(w.matrix)
        if word is not None:
            return word
        letters = []
        x = w
        while not x.is_identity():
            i = min(self.left_descents(x))
            letters.append(i)
            x = self.gen(i) * x
        word = tuple(letters)
        self._words[w.matrix] = word
        return word

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.element(word).length == len(word)

    def enumerate(self) -> List[WeylElt]:
        """All elements, sorted by length and canonical word"""
        if self._elements is not None:
            return list(self._elements)
        seen = {self.identity.matrix: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.generators:
                    x = w * s
                    if x.matrix not in seen:
                        seen[x.matrix] = x
                        nxt.append(x)
                        if len(seen) > MAX_GROUP_ORDER:
                            raise ValueError(
                                f"Refusing to enumerate a Weyl group with more than "
                                f"{MAX_GROUP_ORDER} elements")
            frontier = nxt
        self._elements = sorted(seen.values())
        return list(self._elements)

    def __len__(self):
        return len(self.enumerate())

    @property
    def longest(self) -> WeylElt:
        w = self.identity
        while True:
            ascents = [i for i in range(1, self.rank + 1)
                       if (w * self.gen(i)).length > w.length]
            if not ascents:
                return w
            w = w * self.gen(ascents[0])

    def subgroup(self, subset: Iterable[int]) -> List[WeylElt]:
        """Elements of the standard parabolic subgroup generated by `subset`"""
        gens = [self.gen(i) for i in sorted(subset)]
        seen = {self.identity.matrix: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    x = w * s
                    if x.matrix not in seen:
                        seen[x.matrix] = x
                        nxt.append(x)
            frontier = nxt
        return sorted(seen.values())

    def p_of(self, w: WeylElt) -> FrozenSet[int]:
        """Right ascents of `w`, the generators of `P(w)`"""
        n = w.length
        return frozenset(i for i in range(1, self.rank + 1)
                         if (w * self.gen(i)).length > n)

    def coset_min_reps(self, subset: Iterable[int]) -> ParabolicData:
        """Minimal representatives of the right cosets `<J> z`"""
        subset = frozenset(subset)
        if not subset <= set(range(1, self.rank + 1)):
            raise ValueError(f"Not a set of generators: {sorted(subset)}")
        reps = [z for z in self.enumerate() if not self.left_descents(z) & subset]
        return ParabolicData(subset, reps, len(self.subgroup(subset)))

    def coset_rep(self, subset: Iterable[int], z: WeylElt) -> WeylElt:
        """The minimal representative of `<J> z`"""
        subset = frozenset(subset)
        while True:
            d = self.left_descents(z) & subset
            if not d:
                return z
            z = self.gen(min(d)) * z

    def bruhat_leq(self, x: WeylElt, w: WeylElt) -> bool:
        key = (x.matrix, w.matrix)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if w.is_identity():
            result = x.is_identity()
        elif x.length > w.length:
            result = False
        else:
            s = self.gen(min(self.left_descents(w)))
            sx = s * x
            result = self.bruhat_leq(sx if sx.length < x.length else x, s * w)
        self._bruhat[key] = result
        return result

    def kl_laurent(self, x: WeylElt, w: WeylElt) -> LaurentPoly:
        """`P_{x,w}(v^2)` as a Laurent polynomial in `v`"""
        key = (x.matrix, w.matrix)
        hit = self._kl.get(key)
        if hit is not None:
            return hit

        if not self.bruhat_leq(x, w):
            result = LaurentPoly()
        elif x == w:
            result = LaurentPoly.const(1)
        else:
            s = self.gen(min(self.left_descents(w)))
            v = s * w
            sx = s * x
            c = 1 if sx.length < x.length else 0
            result = (self.kl_laurent(sx, v).shift(2 * (1 - c))
                      + self.kl_laurent(x, v).shift(2 * c))
            for z in self.enumerate():
                if (s * z).length > z.length or not self.bruhat_leq(z, v) or z == v:
                    continue
                m = self.mu(z, v)
                if m:
                    result = result - self.kl_laurent(x, z).shift(w.length - z.length) * m
        self._kl[key] = result
        return result

    def kl_polynomial(self, x: WeylElt, w: WeylElt) -> Tuple[int, ...]:
        """Coefficients of `P_{x,w}` in `q`, constant term first"""
        p = self.kl_laurent(x, w)
        if p.is_zero():
            return ()
        return tuple(p.coefficient(2 * k) for k in range(p.degree // 2 + 1))

    def mu(self, z: WeylElt, w: WeylElt) -> int:
        d = w.length - z.length
        if d <= 0 or d % 2 == 0:
            return 0
        return self.kl_laurent(z, w).coefficient(d - 1)

    def reflection_subset(self, word: Sequence[int]) -> FrozenSet[Root]:
        """The positive roots `{a_i1, s_i1(a_i2), s_i1 s_i2(a_i3), ...}`"""
        word = tuple(word)
        if not self.is_reduced(word):
            raise ValueError(f"Word {list(word)} is not reduced")
        roots = []
        for k, i in enumerate(word):
            root = self.datum.simple_roots[i - 1]
            for j in reversed(word[:k]):
                root = self.datum.reflect_root(j, root)
            roots.append(root)
        return frozenset(roots)

    def reduced_words(self, w: WeylElt) -> List[Tuple[int, ...]]:
        """All reduced words of `w`, lexicographically sorted"""
        return sorted(self._reduced_words(w.matrix))

    @functools.lru_cache(maxsize=None)
    def _reduced_words(self, matrix: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
        w = WeylElt(self, matrix)
        if w.is_identity():
            return ((),)
        words = []
        for i in self.left_descents(w):
            for rest in self._reduced_words((self.gen(i) * w).matrix):
                words.append((i,) + rest)
        return tuple(words)
