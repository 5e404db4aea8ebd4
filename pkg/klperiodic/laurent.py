"""Laurent polynomials in v

Coefficients of everything in this package live in the ring
`Z[v, v^-1]`, with `q = v^2`. The `LaurentPoly` class implements this
ring as an immutable value: a sorted tuple of `(exponent, coefficient)`
pairs with no zero coefficients stored.

Besides the ring operations it provides the bar involution
`v -> v^-1`, truncation of low-order terms (used by the certified
floors in `klperiodic.periodic`), specialization at an exact rational
value of `v`, and exact division, which the fraction-free elimination
in `klperiodic.linalg` relies on.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Integer Laurent polynomial in `v`

    Instances are hashable and compare equal to integers when they
    are constant. Arithmetic accepts plain integers on either side.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Union[Dict[int, int], Iterable[Tuple[int, int]]]] = None):
        acc = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise ValueError(f"Invalid term: {exp!r}, {coeff!r}")
                acc[exp] = acc.get(exp, 0) + coeff
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise ValueError(f"Cannot coerce {value!r} to a Laurent polynomial")

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int]) -> "LaurentPoly":
        """Read `c_0 + c_1 q + c_2 q^2 + ...` as a polynomial in `v`"""
        return cls({2 * k: c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("Zero polynomial has no degree")
        return self._terms[-1][0]

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("Zero polynomial has no valuation")
        return self._terms[0][0]

    @property
    def span(self) -> int:
        """Difference between degree and valuation, -1 for zero"""
        if not self._terms:
            return -1
        return self.degree - self.valuation

    def coefficient(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by `v^k`"""
        return LaurentPoly((e + k, c) for e, c in self._terms)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly((-e, c) for e, c in self._terms)

    def truncate(self, floor: Optional[int]) -> "LaurentPoly":
        """Drop every term with exponent `<= -floor`"""
        if floor is None:
            return self
        return LaurentPoly((e, c) for e, c in self._terms if e > -floor)

    def specialize(self, value) -> Fraction:
        value = Fraction(value)
        if value == 0:
            raise ValueError("Cannot specialize at v = 0")
        return sum((Fraction(c) * value ** e for e, c in self._terms), Fraction(0))

    def divide_exact(self, other: Scalar) -> "LaurentPoly":
        """Exact quotient `self / other`

        Raises `ValueError` if `other` does not divide `self` in
        `Z[v, v^-1]`.
        """
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        if self.is_zero():
            return self

        lead_e, lead_c = other._terms[-1]
        rem = dict(self._terms)
        quotient = {}
        low = self.valuation - other.valuation
        while rem:
            top = max(rem)
            k = top - lead_e
            if k < low:
                break
            c, r = divmod(rem[top], lead_c)
            if r:
                break
            quotient[k] = c
            for e, oc in other._terms:
                n = rem.get(e + k, 0) - c * oc
                if n:
                    rem[e + k] = n
                else:
                    rem.pop(e + k, None)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentPoly(quotient)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __hash__(self):
        if len(self._terms) == 1 and self._terms[0][0] == 0:
            return hash(self._terms[0][1])
        if not self._terms:
            return hash(0)
        return hash(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except ValueError:
            return NotImplemented
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except ValueError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except ValueError:
            return NotImplemented
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ValueError(f"{self} is not a unit")
            e, c = self._terms[0]
            return LaurentPoly.monomial(e * n, c ** -n)
        result = LaurentPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            if e == 0:
                body = f"{mag}"
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"


#: The generator `v`
V = LaurentPoly.monomial(1)

#: `v - v^-1`, the recurring coefficient of the quadratic relation
V_DIFF = LaurentPoly({1: 1, -1: -1})


def q_power(k: int) -> LaurentPoly:
    """`q^k = v^(2k)`"""
    return LaurentPoly.monomial(2 * k)
