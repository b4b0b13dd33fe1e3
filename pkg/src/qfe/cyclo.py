"""Cyclotomic polynomials, root-of-unity certification, and multiset quotients.

The building blocks here are the polynomials q**k - 1 and the cyclotomic
polynomials Phi_k, tied together by

    q**k - 1 = prod_{d | k} Phi_d(q).

``cyclo_factor`` decides whether a polynomial vanishes only at 0 and at
roots of unity by actually producing the factorization unit * q**a *
prod Phi_d**m_d, and reports the stubborn residual factor when it cannot.

``MultisetQuotient`` is the unique representation of such a quotient as

    prod_{u in num} (q**u - 1) / prod_{v in den} (q**v - 1)

with disjoint multisets of indices; it is the data structure the
decomposition algorithm peels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, euler_phi, moebius
from .poly import ONE, Polynomial
from .ratfunc import RationalFunction

__all__ = [
    "moebius",
    "cyclotomic",
    "q_power_minus_one",
    "CyclotomicFactorization",
    "NonCyclotomicFactor",
    "cyclo_factor",
    "MultisetQuotient",
    "as_multiset_quotient",
]


def q_power_minus_one(k: int) -> Polynomial:
    """The polynomial q**k - 1."""
    if k < 1:
        raise ValueError(f"q_power_minus_one requires k >= 1, got {k}")
    return Polynomial.monomial(k) - ONE


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> Polynomial:
    """The k-th cyclotomic polynomial: monic, integer coefficients,
    degree euler_phi(k).

    Computed by exact division of q**k - 1 by the cyclotomics of the proper
    divisors of k; the Moebius product over q**d - 1 is kept as an
    independent cross-check in the tests.
    """
    if k < 1:
        raise ValueError(f"cyclotomic requires k >= 1, got {k}")
    p = q_power_minus_one(k)
    for d in divisors(k)[:-1]:
        p, rem = divmod(p, cyclotomic(d))
        assert rem.is_zero
    return p


@dataclass(frozen=True)
class CyclotomicFactorization:
    """Exact factorization unit * q**qpower * prod Phi_d**factors[d]."""

    unit: Fraction
    qpower: int
    factors: dict[int, int]

    def value(self) -> Polynomial:
        """Multiply the factorization back out."""
        p = Polynomial.monomial(self.qpower, self.unit)
        for d, m in sorted(self.factors.items()):
            p = p * cyclotomic(d) ** m
        return p


class NonCyclotomicFactor(ValueError):
    """A polynomial has a zero that is neither 0 nor a root of unity.

    ``residual`` is the monic factor that resisted cyclotomic extraction.
    """

    def __init__(self, residual: Polynomial):
        self.residual = residual
        super().__init__(f"non-cyclotomic residual factor: {residual}")


def _int_coeffs(p: Polynomial) -> list[int]:
    return [c.numerator for c in p.coeffs]


def _exact_int_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient of a by the monic integer polynomial b, or None if inexact."""
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    rem = list(a)
    quot = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = rem[k + db]
        if c:
            quot[k] = c
            for i in range(db):
                rem[k + i] -= c * b[i]
            rem[k + db] = 0
    if any(rem):
        return None
    return quot


def cyclo_factor(p: Polynomial) -> CyclotomicFactorization:
    """Factor p as unit * q**a * prod Phi_d**m exactly, or raise
    NonCyclotomicFactor carrying the residual.

    Candidate indices d are tried in increasing order and each Phi_d is
    divided out to its full multiplicity before moving on, so the output is
    deterministic.  Only d with euler_phi(d) <= degree(remaining) can divide,
    and every such d satisfies d <= 2 * degree(remaining)**2, which bounds
    the search.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    qpower = p.valuation()
    body = p.shift(-qpower) if qpower else p
    unit = body.leading
    monic = body.monic()
    # A monic product of cyclotomics has integer coefficients.
    if any(c.denominator != 1 for c in monic.coeffs):
        raise NonCyclotomicFactor(monic)
    remaining = _int_coeffs(monic)
    factors: dict[int, int] = {}
    d = 0
    while True:
        deg = len(remaining) - 1
        if deg == 0:
            break
        d += 1
        if d > 2 * deg * deg:
            raise NonCyclotomicFactor(Polynomial(remaining))
        if euler_phi(d) > deg:
            continue
        phi = _int_coeffs(cyclotomic(d))
        while True:
            quotient = _exact_int_div(remaining, phi)
            if quotient is None:
                break
            factors[d] = factors.get(d, 0) + 1
            remaining = quotient
            if len(remaining) - 1 < len(phi) - 1:
                break
    return CyclotomicFactorization(unit=unit, qpower=qpower, factors=factors)


@dataclass(frozen=True)
class MultisetQuotient:
    """Disjoint multisets of indices representing
    prod (q**u - 1) over num / prod (q**v - 1) over den.

    By the uniqueness of this representation, two distinct quotients always
    denote distinct rational functions.  Empty multisets denote the empty
    product 1.
    """

    num: dict[int, int] = field(default_factory=dict)
    den: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for side, name in ((self.num, "num"), (self.den, "den")):
            for k, m in side.items():
                if k < 1 or m < 1:
                    raise ValueError(
                        f"{name} requires positive indices and multiplicities, "
                        f"got {k}: {m}"
                    )
        common = self.num.keys() & self.den.keys()
        if common:
            raise ValueError(f"num and den must be disjoint; both contain {sorted(common)}")
        # Defensive copies: the value must stay immutable once constructed.
        object.__setattr__(self, "num", dict(self.num))
        object.__setattr__(self, "den", dict(self.den))

    def max_index(self) -> int:
        """Largest index on either side; 0 when both sides are empty."""
        return max([0, *self.num, *self.den])

    def dilate(self, d: int) -> "MultisetQuotient":
        """Multiply every index by d; mirrors the substitution q -> q**d,
        since (q**d)**k - 1 = q**(d*k) - 1."""
        if d < 1:
            raise ValueError(f"dilate requires d >= 1, got {d}")
        return MultisetQuotient(
            num={d * k: m for k, m in self.num.items()},
            den={d * k: m for k, m in self.den.items()},
        )

    def value(self) -> RationalFunction:
        """Expand the quotient exactly.

        Expansion goes through net cyclotomic exponents, which yields an
        already-coprime numerator and denominator.
        """
        net: dict[int, int] = {}
        for k, m in self.num.items():
            for d in divisors(k):
                net[d] = net.get(d, 0) + m
        for k, m in self.den.items():
            for d in divisors(k):
                net[d] = net.get(d, 0) - m
        num = den = ONE
        for d, e in sorted(net.items()):
            if e > 0:
                num = num * cyclotomic(d) ** e
            elif e < 0:
                den = den * cyclotomic(d) ** (-e)
        return RationalFunction._reduced(num, den)


def as_multiset_quotient(num: Polynomial, den: Polynomial) -> MultisetQuotient:
    """Convert a reduced quotient of monic polynomials with nonzero constant
    terms into its unique MultisetQuotient, or raise NonCyclotomicFactor.

    A failure certifies that num/den has a zero or pole that is neither 0
    nor a root of unity, so it cannot belong to any solution sequence.
    """
    net: dict[int, int] = {}
    for part, sign in ((num, 1), (den, -1)):
        if part == ONE:
            continue
        fact = cyclo_factor(part)
        if fact.qpower or fact.unit != 1:
            raise ValueError(
                "expected a monic polynomial with nonzero constant term, "
                f"got {part}"
            )
        for k, m in fact.factors.items():
            net[k] = net.get(k, 0) + sign * m
    # Transfer cyclotomic exponents to q**k - 1 exponents by Moebius
    # inversion over the divisor lattice.
    exps: dict[int, int] = {}
    for k, c in net.items():
        if not c:
            continue
        for d in divisors(k):
            exps[d] = exps.get(d, 0) + c * moebius(k // d)
    up = {d: e for d, e in exps.items() if e > 0}
    down = {d: -e for d, e in exps.items() if e < 0}
    return MultisetQuotient(num=up, den=down)
