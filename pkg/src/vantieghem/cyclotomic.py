"""Cyclotomic polynomials over the integers, and the root-product check.

The check: the product of (X - Y**d) over 1 <= d <= m with gcd(d, m) = 1,
with Y-coefficients reduced mod the m-th cyclotomic polynomial in Y, must
collapse to the m-th cyclotomic polynomial in X with constant coefficients.
verify_lemma() performs that reduction exactly, interleaving it with the
product expansion so Y-degrees never grow past the totient of m.

This is the only module where negative integers appear; cyclotomic
polynomials have signed coefficients (the first -2 shows up at m = 105).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, NotDivisible


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial over the integers; coeffs[i] multiplies X**i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and every nonzero polynomial has a nonzero
    leading coefficient.

    >>> (IntPolynomial.x() - 1) * (IntPolynomial.x() + 1)
    IntPolynomial('X^2 - 1')
    >>> divmod(IntPolynomial.monomial(6) - 1, IntPolynomial.of(1, 1, 1))
    (IntPolynomial('X^4 - X^3 + X - 1'), IntPolynomial('0'))
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @staticmethod
    def of(*coeffs: int) -> IntPolynomial:
        """Build from coefficients, constant term first."""
        return IntPolynomial(coeffs)

    @staticmethod
    def constant(c: int) -> IntPolynomial:
        return IntPolynomial((c,))

    @staticmethod
    def monomial(degree: int, c: int = 1) -> IntPolynomial:
        return IntPolynomial((0,) * degree + (c,))

    @staticmethod
    def x() -> IntPolynomial:
        return IntPolynomial((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self[i] + other[i] for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return _as_poly(other) + (-self)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division over the integers.

        Raises NotDivisible when a leading-coefficient step is not exact;
        always succeeds for monic divisors.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        while len(rem) >= len(other.coeffs):
            c, leftover = divmod(rem[-1], lead)
            if leftover:
                raise NotDivisible(
                    f"leading coefficient {lead} does not divide {rem[-1]}"
                )
            shift = len(rem) - len(other.coeffs)
            quo[shift] = c
            for i, d in enumerate(other.coeffs):
                rem[shift + i] -= c * d
            assert rem[-1] == 0
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPolynomial(tuple(quo)), IntPolynomial(tuple(rem))

    def __mod__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[1]

    def pretty(self, var: str = "X") -> str:
        """Descending powers with explicit signs, e.g. 'X^2 - X + 1'."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = var if i == 1 else f"{var}^{i}"
                term = base if mag == 1 else f"{mag}{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"IntPolynomial('{self.pretty()}')"


def _as_poly(value: IntPolynomial | int) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(value)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, of degree totient(m).

    Computed recursively: X**m - 1 divided (exactly) by the product of the
    cyclotomic polynomials of all proper divisors of m.  No coefficient
    bound is assumed anywhere.

    >>> print(cyclotomic_poly(1))
    X - 1
    >>> print(cyclotomic_poly(6))
    X^2 - X + 1
    """
    if m < 1:
        raise DomainError(f"index must be >= 1, got {m}")
    poly = IntPolynomial.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = divmod(poly, cyclotomic_poly(d))
            assert rem.is_zero()
    return poly


@dataclass(frozen=True)
class ResiduePolynomial:
    """Polynomial in X whose coefficients live in Z[Y] mod a fixed modulus.

    x_coeffs[i] is the Y-polynomial multiplying X**i, always reduced to
    degree below deg(modulus).
    """

    modulus: IntPolynomial
    x_coeffs: tuple[IntPolynomial, ...]

    @staticmethod
    def one(modulus: IntPolynomial) -> ResiduePolynomial:
        return ResiduePolynomial(modulus, (IntPolynomial.constant(1),))

    def times_x_minus(self, y_value: IntPolynomial) -> ResiduePolynomial:
        """Multiply by (X - y_value), reducing every Y-coefficient."""
        y_value = y_value % self.modulus
        width = len(self.x_coeffs) + 1
        out = [IntPolynomial(())] * width
        for i, c in enumerate(self.x_coeffs):
            out[i + 1] = out[i + 1] + c
            out[i] = (out[i] - y_value * c) % self.modulus
        return ResiduePolynomial(self.modulus, tuple(out))

    def equals_constants(self, poly: IntPolynomial) -> bool:
        """True when every Y-coefficient is constant and matches poly."""
        if len(self.x_coeffs) != len(poly.coeffs):
            return False
        return all(
            c == IntPolynomial.constant(poly[i]) for i, c in enumerate(self.x_coeffs)
        )


def verify_lemma(m: int) -> bool:
    """Expand the product of (X - Y**d) over units d mod m and compare.

    Y-powers are reduced mod the m-th cyclotomic polynomial in Y after every
    factor, keeping intermediate Y-degrees below totient(m).  Returns whether
    the result equals the m-th cyclotomic polynomial in X with constant
    Y-coefficients.  Intended for m >= 2.
    """
    target = cyclotomic_poly(m)
    acc = ResiduePolynomial.one(target)
    for d in range(1, m + 1):
        if gcd(d, m) == 1:
            acc = acc.times_x_minus(IntPolynomial.monomial(d))
    return acc.equals_constants(target)
