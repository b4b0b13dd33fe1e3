"""Reduced rational functions over Q and their multiplicative normal form.

A RationalFunction is kept fully canonical: numerator and denominator are
coprime, the denominator is monic and nonzero, and the zero function is 0/1.
Equality is therefore plain coefficientwise comparison, with no
cross-multiplication.

The normal form splits off the scalar and the power of q:

    f = scale * q**shift * num/den

with num and den monic, coprime, and with nonzero constant terms.  This
decomposition is unique and is the starting point of the structure
classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import ONE, ZERO, Polynomial, Scalar, gcd


def _coerce_poly(value: "Polynomial | Scalar") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial((value,))


class RationalFunction:
    """Immutable quotient of polynomials, always stored reduced."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: "Polynomial | Scalar", den: "Polynomial | Scalar" = ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self._num, self._den = ZERO, ONE
            return
        g = gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lc = den.leading
        if lc != 1:
            num = num.scaled(1 / lc)
            den = den.monic()
        self._num, self._den = num, den

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        """Wrap an already-canonical pair without re-reducing."""
        rf = object.__new__(cls)
        rf._num, rf._den = num, den
        return rf

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._reduced(ZERO, ONE)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._reduced(ONE, ONE)

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self._den == ONE

    def __bool__(self) -> bool:
        return not self._num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (Polynomial, int, Fraction)):
            return self._den == ONE and self._num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"

    def __str__(self) -> str:
        num = str(self._num)
        if self._den == ONE:
            return num
        if len([c for c in self._num.coeffs if c]) > 1:
            num = f"({num})"
        den = str(self._den)
        if len([c for c in self._den.coeffs if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    # -- field operations ----------------------------------------------

    def __add__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        num = self._num * other._den + other._num * self._den
        return RationalFunction(num, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._reduced(-self._num, self._den)

    def __sub__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | Scalar") -> "RationalFunction":
        return _coerce_rf(other) - self

    def __mul__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalFunction.zero()
        # Cross-cancel, then the products are coprime by construction.
        a, b = self._num, self._den
        c, d = other._num, other._den
        g1 = gcd(a, d)
        if g1.degree > 0:
            a, d = a // g1, d // g1
        g2 = gcd(c, b)
        if g2.degree > 0:
            c, b = c // g2, b // g2
        return RationalFunction._reduced(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: "Polynomial | Scalar") -> "RationalFunction":
        return _coerce_rf(other) * self.inverse()

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("division by the zero function")
        num, den = self._den, self._num
        lc = den.leading
        if lc != 1:
            num = num.scaled(1 / lc)
            den = den.monic()
        return RationalFunction._reduced(num, den)

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent == 0:
            return RationalFunction.one()
        base = self if exponent > 0 else self.inverse()
        num = base._num ** abs(exponent)
        den = base._den ** abs(exponent)
        return RationalFunction._reduced(num, den)

    def compose_power(self, m: int) -> "RationalFunction":
        """Substitute q -> q**m.  Coprimality and monicity survive the
        substitution, so no re-reduction is needed."""
        if m == 1:
            return self
        return RationalFunction._reduced(
            self._num.compose_power(m), self._den.compose_power(m)
        )

    # -- normal form -----------------------------------------------------

    def standard_form(self) -> "StandardForm":
        """Split into scale * q**shift * num/den with monic coprime num, den
        that have nonzero constant terms.  Unique; undefined for zero."""
        if self.is_zero:
            raise ValueError("the zero function has no standard form")
        # num and den are coprime, so at most one is divisible by q.
        a = self._num.valuation()
        b = self._den.valuation()
        num = self._num.shift(-a) if a else self._num
        den = self._den.shift(-b) if b else self._den
        scale = num.leading
        return StandardForm(scale=scale, shift=a - b, num=num.monic(), den=den)


def _coerce_rf(value: "RationalFunction | Polynomial | Scalar") -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (Polynomial, int, Fraction)):
        return RationalFunction(_coerce_poly(value))
    return NotImplemented  # type: ignore[return-value]


@dataclass(frozen=True)
class StandardForm:
    """The unique decomposition scale * q**shift * num/den of a nonzero
    rational function, with num, den monic, coprime, and nonzero at 0."""

    scale: Fraction
    shift: int
    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", Fraction(self.scale))
        if not self.scale:
            raise ValueError("standard form requires a nonzero scale")
        for part, name in ((self.num, "num"), (self.den, "den")):
            if not part.is_monic:
                raise ValueError(f"standard form {name} must be monic")
            if not part.constant_term:
                raise ValueError(f"standard form {name} must be nonzero at 0")
        if gcd(self.num, self.den).degree > 0:
            raise ValueError("standard form num and den must be coprime")

    def value(self) -> RationalFunction:
        """Reassemble the rational function exactly."""
        num = self.num.scaled(self.scale)
        den = self.den
        if self.shift >= 0:
            num = num.shift(self.shift)
        else:
            den = den.shift(-self.shift)
        return RationalFunction._reduced(num, den)

    @property
    def degree_difference(self) -> int:
        """degree(num) - degree(den); num and den are nonzero so this is an int."""
        return self.num.degree - self.den.degree
