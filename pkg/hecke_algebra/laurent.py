"""
Laurent Polynomials
Exact integer Laurent polynomials in u, stored as exponent-sorted sparse tuples
"""

from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, "LaurentInt"]


class LaurentInt:
    """
    An element of Z[u, u^{-1}].

    Terms are kept as a tuple of (exponent, coefficient) pairs sorted by
    exponent with no zero coefficients, so equality is structural.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, coefficients: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        accumulated: Dict[int, int] = {}
        if coefficients is not None:
            items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
            for exponent, c in items:
                accumulated[int(exponent)] = accumulated.get(int(exponent), 0) + int(c)
        self.terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted((e, c) for e, c in accumulated.items() if c)
        )
        self._hash = hash(self.terms)

    @classmethod
    def constant(cls, c: int) -> "LaurentInt":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "LaurentInt":
        return cls({exponent: c})

    @staticmethod
    def coerce(value: Scalar) -> "LaurentInt":
        if isinstance(value, LaurentInt):
            return value
        if isinstance(value, int):
            return LaurentInt.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial")

    # inspection

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    @property
    def degree(self) -> int:
        """Highest u-exponent; the zero polynomial has none"""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.terms[-1][0]

    @property
    def low_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.terms[0][0]

    def constant_term(self) -> int:
        return self.coefficient(0)

    def in_negative_powers(self) -> bool:
        """Lies in Z[u^{-1}]"""
        return all(e <= 0 for e, _ in self.terms)

    def in_strictly_negative_powers(self) -> bool:
        """Lies in u^{-1} Z[u^{-1}]"""
        return all(e < 0 for e, _ in self.terms)

    def negative_part(self) -> "LaurentInt":
        return LaurentInt((e, c) for e, c in self.terms if e < 0)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    # ring operations

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt.constant(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: Scalar) -> "LaurentInt":
        other = LaurentInt.coerce(other)
        return LaurentInt(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt((e, -c) for e, c in self.terms)

    def __sub__(self, other: Scalar) -> "LaurentInt":
        return self + (-LaurentInt.coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentInt":
        return LaurentInt.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            return LaurentInt((e, c * other) for e, c in self.terms)
        other = LaurentInt.coerce(other)
        product: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentInt(product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentInt":
        if k < 0:
            if len(self.terms) == 1 and abs(self.terms[0][1]) == 1:
                e, c = self.terms[0]
                return LaurentInt.monomial(-e * -k, c ** (-k))
            raise ValueError(f"{self} is not a unit")
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def shift(self, d: int) -> "LaurentInt":
        """u^d * self"""
        return LaurentInt((e + d, c) for e, c in self.terms)

    def bar(self) -> "LaurentInt":
        """u -> u^{-1}"""
        return LaurentInt((-e, c) for e, c in self.terms)

    def evaluate(self, u):
        return sum(c * u ** e for e, c in self.terms)

    # serialization

    def to_dict(self) -> Dict[str, int]:
        return {str(e): c for e, c in self.terms}

    @classmethod
    def from_dict(cls, data: Mapping[str, int]) -> "LaurentInt":
        return cls({int(e): c for e, c in data.items()})

    def __repr__(self) -> str:
        return f"LaurentInt({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                monomial = str(abs(c))
            else:
                power = "u" if e == 1 else f"u^{e}"
                monomial = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, monomial))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, monomial in parts[1:]:
            text += f" {sign} {monomial}"
        return text


ZERO = LaurentInt()
ONE = LaurentInt.constant(1)
U = LaurentInt.monomial(1)
U_INV = LaurentInt.monomial(-1)
XI = U - U_INV
