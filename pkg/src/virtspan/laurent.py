"""Integer Laurent polynomials in a single variable ``A``.

Values are immutable and always held in canonical form: a mapping from
exponent to nonzero coefficient, with the zero polynomial stored as the
empty mapping.  Coefficients and exponents are Python ints, so sums and
products are exact at every width; nothing ever wraps around.
"""
from __future__ import annotations

import operator
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple


class ZeroPolynomialError(ValueError):
    """Raised when a degree-type quantity is requested of the zero polynomial."""


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{what} must be an integer, got bool")
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError(f"{what} must be an integer, got {type(value).__name__}") from None


class LaurentPoly:
    """An element of Z[A, A^-1].

    >>> p = LaurentPoly({2: -1, -2: -1})
    >>> p * p
    LaurentPoly({-4: 1, 0: 2, 4: 1})
    >>> str(p)
    '-A^2 - A^-2'
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[int, int] = {}
        for exp, coeff in items:
            exp = _as_int(exp, "exponent")
            coeff = _as_int(coeff, "coefficient")
            acc[exp] = acc.get(exp, 0) + coeff
        self._coeffs = MappingProxyType(
            {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        )
        self._hash = None

    @classmethod
    def _from_canonical(cls, coeffs: dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._coeffs = MappingProxyType({e: coeffs[e] for e in sorted(coeffs)})
        obj._hash = None
        return obj

    @property
    def coefficients(self) -> Mapping[int, int]:
        """Read-only exponent -> coefficient view, ascending by exponent."""
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return dict(self._coeffs) == dict(other._coeffs)
        if isinstance(other, int) and not isinstance(other, bool):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    @staticmethod
    def constant(value: int) -> "LaurentPoly":
        return monomial(value, 0)

    @staticmethod
    def _coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return LaurentPoly.constant(_as_int(value, "operand"))

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_canonical({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        k = _as_int(k, "exponent")
        if k < 0:
            if len(self._coeffs) == 1:
                ((e, c),) = self._coeffs.items()
                if c in (1, -1):
                    return monomial(c ** (-k), e * k)
            raise ValueError("only unit monomials have negative powers")
        result = monomial(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A**k``."""
        k = _as_int(k, "shift")
        return LaurentPoly._from_canonical({e + k: c for e, c in self._coeffs.items()})

    def max_degree(self) -> int:
        return max_degree(self)

    def min_degree(self) -> int:
        return min_degree(self)

    def span(self) -> int:
        return span(self)

    def to_pairs(self) -> list[list[int]]:
        """``[[exponent, coefficient], ...]`` ascending by exponent (the JSON form)."""
        return [[e, c] for e, c in self._coeffs.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((e, c) for e, c in pairs)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, (e, c) in enumerate(reversed(self._coeffs.items())):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def monomial(coeff: int, exp: int) -> LaurentPoly:
    """``coeff * A**exp``; the zero polynomial when ``coeff == 0``."""
    coeff = _as_int(coeff, "coefficient")
    exp = _as_int(exp, "exponent")
    if coeff == 0:
        return ZERO
    return LaurentPoly._from_canonical({exp: coeff})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc = dict(p.coefficients)
    for e, c in q.coefficients.items():
        s = acc.get(e, 0) + c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return LaurentPoly._from_canonical(acc)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc: dict[int, int] = {}
    for e1, c1 in p.coefficients.items():
        for e2, c2 in q.coefficients.items():
            e = e1 + e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPoly._from_canonical({e: c for e, c in acc.items() if c})


def max_degree(p: LaurentPoly) -> int:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no degree")
    return next(reversed(p.coefficients))


def min_degree(p: LaurentPoly) -> int:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no degree")
    return next(iter(p.coefficients))


def span(p: LaurentPoly) -> int:
    """Difference between the extreme exponents of a nonzero polynomial."""
    return max_degree(p) - min_degree(p)


ZERO = LaurentPoly._from_canonical({})
ONE = LaurentPoly._from_canonical({0: 1})
#: The loop value ``-A^2 - A^-2``.
DELTA = LaurentPoly._from_canonical({-2: -1, 2: -1})
