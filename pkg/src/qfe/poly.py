"""Exact dense univariate polynomial arithmetic over the rationals.

A polynomial is stored as a tuple of Fraction coefficients, index i holding
the coefficient of q**i, with no trailing zeros.  The zero polynomial is the
empty tuple; its degree is NEG_INFINITY so that degree comparisons stay
total.  Every coefficient is an exact rational; no floating point is used
anywhere.

Values are immutable and all operations are pure, so polynomials may be
shared freely between threads.

Multiplication and gcd run on integer coefficient lists internally (common
denominators are factored out first); this is observation-equivalent to
Fraction arithmetic but roughly 30x faster, which matters for the larger
products produced when solutions are composed with q -> q**m.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm as _lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial; compares below every integer.
NEG_INFINITY = float("-inf")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _int_form(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Common-denominator view: (ints, d) with coeffs[i] == ints[i] / d."""
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = _lcm(d, c.denominator)
    if d == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


class Polynomial:
    """Immutable dense polynomial in q with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        """coeff * q**power."""
        if power < 0:
            raise ValueError(f"monomial power must be >= 0, got {power}")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        """Canonical descending-power form, e.g. 'q^2 - q + 1'."""
        if not self._coeffs:
            return "0"
        parts: list[tuple[str, str]] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = head if head_sign == "+" else "-" + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = Polynomial()
        p._coeffs = tuple(-c for c in self._coeffs)
        return p

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ZERO
        a, da = _int_form(self._coeffs)
        b, db = _int_form(other._coeffs)
        # Iterate the operand with fewer nonzero terms on the outside;
        # compositions q -> q**m produce very sparse factors.
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        nz_b = [(j, c) for j, c in enumerate(b) if c]
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in nz_b:
                    out[i + j] += ai * bj
        den = da * db
        p = Polynomial()
        if den == 1:
            p._coeffs = tuple(Fraction(v) for v in out)
        else:
            p._coeffs = _trim([Fraction(v, den) for v in out])
        return p

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power; use RationalFunction")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Quotient and remainder with degree(remainder) < degree(other)."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = len(other._coeffs) - 1
        if len(self._coeffs) - 1 < dd:
            return ZERO, self
        rem = list(self._coeffs)
        div = other._coeffs
        inv = 1 / other.leading
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dd] * inv
            if c:
                quot[k] = c
                for i in range(dd + 1):
                    rem[k + i] -= c * div[i]
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- other operations --------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def scaled(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return ZERO
        p = Polynomial()
        p._coeffs = tuple(v * c for v in self._coeffs)
        return p

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self if self.leading == 1 else self.scaled(1 / self.leading)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by q**k; k < 0 divides and requires divisibility by q**-k."""
        if k >= 0:
            if self.is_zero:
                return ZERO
            p = Polynomial()
            p._coeffs = (Fraction(0),) * k + self._coeffs
            return p
        if any(self._coeffs[: -k]):
            raise ValueError(f"not divisible by q^{-k}")
        return Polynomial(self._coeffs[-k:])

    def compose_power(self, m: int) -> "Polynomial":
        """Substitute q -> q**m; the degree becomes m * degree."""
        if m < 1:
            raise ValueError(f"compose_power requires m >= 1, got {m}")
        if m == 1 or self.is_zero:
            return self
        out = [Fraction(0)] * (m * (len(self._coeffs) - 1) + 1)
        for i, c in enumerate(self._coeffs):
            out[m * i] = c
        p = Polynomial()
        p._coeffs = tuple(out)
        return p

    def valuation(self) -> int:
        """Multiplicity of the root 0, i.e. the index of the first nonzero
        coefficient.  Undefined (raises) for the zero polynomial."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        raise ValueError("the zero polynomial has no valuation")


def _coerce(value: "Polynomial | Scalar") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return NotImplemented  # type: ignore[return-value]


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))


def quantum_integer(n: int, r: int = 1) -> Polynomial:
    """The quantum integer [n] evaluated at q**r: 1 + q^r + ... + q^(r(n-1)).

    Degree r*(n-1); every coefficient is 0 or 1.
    """
    if n < 1 or r < 1:
        raise ValueError(f"quantum_integer requires n, r >= 1, got ({n}, {r})")
    out = [Fraction(0)] * (r * (n - 1) + 1)
    for i in range(n):
        out[r * i] = Fraction(1)
    p = Polynomial()
    p._coeffs = tuple(out)
    return p


# -- gcd (primitive polynomial remainder sequence over the integers) --------


def _int_primitive(coeffs: list[int]) -> list[int]:
    """Divide out the integer content; normalize the leading sign positive."""
    from math import gcd as igcd

    g = 0
    for c in coeffs:
        g = igcd(g, c)
        if g == 1:
            break
    if g == 0:
        return []
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Integer remainder sequence step: repeatedly r <- lc(b)*r - lead*q^k*b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        if lb != 1:
            r = [lb * c for c in r]
        k = len(r) - 1 - db
        for i in range(db + 1):
            r[k + i] -= lead * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) is undefined."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    # Scalar factors do not affect the monic gcd, so drop denominators.
    fa = _int_primitive(_int_form(a.coeffs)[0])
    fb = _int_primitive(_int_form(b.coeffs)[0])
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _int_primitive(_int_pseudo_rem(fa, fb))
    lc = fa[-1]
    return Polynomial(Fraction(c, lc) for c in fa)
