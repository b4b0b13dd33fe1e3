"""Shared oracles and random generators for the test suite.

The oracles here deliberately take different routes than the library code:
compositions go through Horner evaluation in the polynomial ring, cyclotomic
polynomials through the Moebius product over q**d - 1, and Moebius values
through naive squarefree inspection.
"""

from __future__ import annotations

import random
from fractions import Fraction

from qfe import (
    ONE,
    MultisetQuotient,
    Polynomial,
    RationalFunction,
    SolutionSpec,
    StructureData,
    eval_expr,
    parse_expr,
    q_power_minus_one,
)
from qfe.arith import divisors


def substitute(p: Polynomial, inner: Polynomial) -> Polynomial:
    """p(inner(q)) by Horner in the polynomial ring."""
    acc = Polynomial()
    for c in reversed(p.coeffs):
        acc = acc * inner + Polynomial((c,))
    return acc


def moebius_brute(k: int) -> int:
    """Moebius by naive prime-by-prime squarefree inspection."""
    count = 0
    for p in range(2, k + 1):
        if k % p == 0:
            if any(p % d == 0 for d in range(2, p)):
                continue
            if k % (p * p) == 0:
                return 0
            count += 1
    return -1 if count % 2 else 1


def cyclotomic_by_moebius(k: int) -> Polynomial:
    """Cyclotomic polynomial via prod (q**d - 1)**moebius(k/d) over d | k."""
    num = den = ONE
    for d in divisors(k):
        mu = moebius_brute(k // d)
        if mu == 1:
            num = num * q_power_minus_one(d)
        elif mu == -1:
            den = den * q_power_minus_one(d)
    quotient, rem = divmod(num, den)
    assert rem.is_zero
    return quotient


def power_product(bag: dict[int, int]) -> Polynomial:
    """prod (q**k - 1)**m over the multiset, by plain multiplication."""
    out = ONE
    for k, m in sorted(bag.items()):
        out = out * q_power_minus_one(k) ** m
    return out


# The worked solution f_n = [n]_{q^3} / [n]_q over the primes {2, 5, 7},
# with its generators written out as polynomials.
GENERATORS_257 = {
    2: "1 - q + q^2",
    5: "1 - q + q^3 - q^4 + q^5 - q^7 + q^8",
    7: "1 - q + q^3 - q^4 + q^6 - q^8 + q^9 - q^11 + q^12",
}


def spec_257() -> SolutionSpec:
    return SolutionSpec({p: eval_expr(parse_expr(text)) for p, text in GENERATORS_257.items()})


def random_fraction(rng: random.Random, max_num: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_nonzero_fraction(rng: random.Random, max_num: int = 5, max_den: int = 4) -> Fraction:
    num = rng.choice([n for n in range(-max_num, max_num + 1) if n])
    return Fraction(num, rng.randint(1, max_den))


def random_polynomial(rng: random.Random, max_degree: int = 6) -> Polynomial:
    return Polynomial(random_fraction(rng) for _ in range(rng.randint(0, max_degree + 1)))


def random_nonzero_polynomial(rng: random.Random, max_degree: int = 6) -> Polynomial:
    while True:
        p = random_polynomial(rng, max_degree)
        if not p.is_zero:
            return p


def random_rational_function(rng: random.Random, max_degree: int = 5) -> RationalFunction:
    return RationalFunction(
        random_polynomial(rng, max_degree), random_nonzero_polynomial(rng, max_degree)
    )


def random_multiset_pair(
    rng: random.Random, max_index: int = 24, max_mult: int = 3
) -> MultisetQuotient:
    indices = rng.sample(range(1, max_index + 1), rng.randint(0, 6))
    split = rng.randint(0, len(indices))
    return MultisetQuotient(
        num={k: rng.randint(1, max_mult) for k in indices[:split]},
        den={k: rng.randint(1, max_mult) for k in indices[split:]},
    )


def random_structure_data(rng: random.Random) -> StructureData:
    """Random classification data within the documented test bounds:
    2-3 primes up to 13, up to 3 dilations r <= 4 with exponents in
    [-3, 3] \\ {0}, nonzero prime scales, and an admissible shift rate."""
    primes = tuple(sorted(rng.sample([2, 3, 5, 7, 11, 13], rng.randint(2, 3))))
    dilations = rng.sample([1, 2, 3, 4], rng.randint(0, 3))
    exponents = {r: rng.choice([-3, -2, -1, 1, 2, 3]) for r in dilations}
    scales = {p: random_nonzero_fraction(rng) for p in primes}
    g = 0
    for p in primes:
        g = gcd_int(g, p - 1)
    shift = Fraction(rng.randint(-2, 2), rng.choice(divisors(g)))
    return StructureData(primes=primes, scales=scales, shift=shift, exponents=exponents)


def gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
