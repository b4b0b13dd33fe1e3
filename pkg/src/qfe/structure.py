"""Classification of rational solutions and the inverse decomposition.

Every solution in rational functions over Q whose support is generated by
at least two primes has the closed form

    f_n = scale(n) * q**(shift*(n-1)) * prod_r [n]_{q**r} ** exponents[r]

where scale is completely multiplicative on the support, shift is a
rational number with shift*(n-1) integral on the support, and the product
runs over a finite exponent table.  ``StructureData`` holds that data,
``closed_form`` evaluates it, and ``decompose`` recovers it from generators
by repeatedly peeling quantum-integer factors off the multiset
representation, using q**(r*p) - 1 = (q**r - 1) * [p]_{q**r}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, is_prime
from .cyclo import MultisetQuotient, NonCyclotomicFactor, as_multiset_quotient
from .poly import ONE, quantum_integer
from .ratfunc import RationalFunction, StandardForm
from .solutions import NotASolution, SolutionSpec, _require_commutative, in_support


class TooFewPrimes(ValueError):
    """Decomposition needs at least two primes: with a single prime any
    nonzero generator is admissible, so no canonical structure exists."""


def validate_shift(primes: tuple[int, ...], shift: Fraction) -> bool:
    """True iff shift*(n-1) is an integer for every n in the support,
    equivalently iff the denominator of shift divides p - 1 for every p."""
    shift = Fraction(shift)
    return all((p - 1) % shift.denominator == 0 for p in primes)


@dataclass(frozen=True)
class StructureData:
    """The classification data of a solution over at least two primes.

    scales maps each prime to the (nonzero) value of the multiplicative
    scale there; exponents maps each dilation r to the nonzero integer
    exponent of [n]_{q**r}.
    """

    primes: tuple[int, ...]
    scales: dict[int, Fraction]
    shift: Fraction
    exponents: dict[int, int]

    def __post_init__(self) -> None:
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if len(primes) < 2:
            raise TooFewPrimes(f"need at least two primes, got {list(primes)}")
        if list(primes) != sorted(set(primes)) or not all(is_prime(p) for p in primes):
            raise ValueError(f"primes must be strictly increasing primes: {list(primes)}")
        scales = {p: Fraction(v) for p, v in self.scales.items()}
        object.__setattr__(self, "scales", scales)
        if set(scales) != set(primes):
            raise ValueError("scales must be given exactly on the primes")
        if any(not v for v in scales.values()):
            raise ValueError("scales must be nonzero")
        object.__setattr__(self, "shift", Fraction(self.shift))
        if not validate_shift(primes, self.shift):
            raise ValueError(
                f"shift {self.shift} is not integral on the support of {list(primes)}"
            )
        exponents = dict(self.exponents)
        object.__setattr__(self, "exponents", exponents)
        for r, t in exponents.items():
            if r < 1:
                raise ValueError(f"exponent key {r} must be a positive integer")
            if t == 0:
                raise ValueError(f"exponent for r={r} must be nonzero")


def scale_at(sd: StructureData, n: int) -> Fraction:
    """Extend the scale multiplicatively: scale(prod p**a) = prod scale(p)**a."""
    if not in_support(sd.primes, n):
        raise ValueError(f"{n} is outside the support of {list(sd.primes)}")
    out = Fraction(1)
    for p, a in factorize(n).items():
        out *= sd.scales[p] ** a
    return out


def closed_form(sd: StructureData, n: int) -> RationalFunction:
    """Evaluate the classified solution at n: zero outside the support,
    otherwise scale(n) * q**(shift*(n-1)) * prod [n]_{q**r}**t exactly."""
    if n < 1:
        raise ValueError(f"closed_form requires n >= 1, got {n}")
    if not in_support(sd.primes, n):
        return RationalFunction.zero()
    num = den = ONE
    for r, t in sorted(sd.exponents.items()):
        base = quantum_integer(n, r)
        if t > 0:
            num = num * base**t
        else:
            den = den * base ** (-t)
    e = sd.shift * (n - 1)
    assert e.denominator == 1  # guaranteed by validate_shift
    num = num.scaled(scale_at(sd, n))
    if e >= 0:
        num = num.shift(int(e))
    else:
        den = den.shift(-int(e))
    return RationalFunction(num, den)


def degree_signature(sd: StructureData, n: int) -> int:
    """degree(num) - degree(den) of the standard form of closed_form(sd, n):
    equals (n - 1) * sum of r * exponents[r]."""
    if not in_support(sd.primes, n):
        raise ValueError(f"{n} is outside the support of {list(sd.primes)}")
    return (n - 1) * sum(r * t for r, t in sd.exponents.items())


def decompose(spec: SolutionSpec) -> StructureData:
    """Recover the StructureData of the solution generated by spec.

    Stages, cheapest first:
      1. at least two primes, else TooFewPrimes;
      2. standard forms give the scale on each prime and a common shift
         rate, else NotASolution('shift');
      3. each num/den pair converts to its multiset quotient, else
         NotASolution('non-cyclotomic') -- the generator has a zero or pole
         that is neither 0 nor a root of unity, so no solution contains it;
      4. the pairwise compatibility identity, else NotASolution('commutativity');
      5. quantum-integer peeling of the multisets (see _peel).

    The result reproduces every generator: closed_form(sd, p) == h_p.
    """
    if len(spec.primes) < 2:
        raise TooFewPrimes(
            f"decomposition needs at least two primes, got {list(spec.primes)}"
        )
    forms: dict[int, StandardForm] = {
        p: spec.generator(p).standard_form() for p in spec.primes
    }
    shift = _common_shift(forms)
    quotients: dict[int, MultisetQuotient] = {}
    for p, form in forms.items():
        try:
            quotients[p] = as_multiset_quotient(form.num, form.den)
        except NonCyclotomicFactor as exc:
            raise NotASolution(
                "non-cyclotomic",
                f"generator for prime {p} has a zero or pole that is neither 0 "
                f"nor a root of unity (residual factor {exc.residual})",
            ) from exc
    _require_commutative(spec)
    exponents = _peel(quotients)
    return StructureData(
        primes=spec.primes,
        scales={p: forms[p].scale for p in spec.primes},
        shift=shift,
        exponents=exponents,
    )


def _common_shift(forms: dict[int, StandardForm]) -> Fraction:
    """The shared shift rate shift = q-exponent / (p - 1), which must agree
    across all primes."""
    primes = sorted(forms)
    first = primes[0]
    shift = Fraction(forms[first].shift, first - 1)
    for p in primes[1:]:
        if Fraction(forms[p].shift, p - 1) != shift:
            raise NotASolution(
                "shift",
                f"inconsistent q-power exponents: primes ({first}, {p}) give "
                f"shift rates {shift} and {Fraction(forms[p].shift, p - 1)}",
            )
    return shift


def _peel(quotients: dict[int, MultisetQuotient]) -> dict[int, int]:
    """Extract the exponent table from per-prime multiset quotients.

    Each round inspects m_p, the largest index in either multiset of prime
    p.  For a genuine solution the maxima satisfy m_p = r * p with one
    positive r shared by every prime, and they sit on the same side
    (numerator or denominator) everywhere.  Replacing that occurrence of
    q**(r*p) - 1 with q**r - 1 divides exactly one factor [p]_{q**r} out
    of every generator, so the shared exponent of [n]_{q**r} moves by one;
    re-canonicalizing disjointness and repeating empties the multisets.

    The weighted size sum(index * multiplicity) must drop every round;
    a round that fails to shrink it would loop forever, so it aborts.
    """
    num = {p: dict(mq.num) for p, mq in quotients.items()}
    den = {p: dict(mq.den) for p, mq in quotients.items()}
    exponents: dict[int, int] = {}

    def weight() -> int:
        return sum(
            k * m for side in (num, den) for bag in side.values() for k, m in bag.items()
        )

    previous = weight()
    while True:
        maxima = {p: max([0, *num[p], *den[p]]) for p in num}
        if not any(maxima.values()):
            break
        rates = set()
        sides = set()
        for p, m_p in maxima.items():
            if m_p == 0 or m_p % p:
                raise NotASolution(
                    "peeling",
                    f"largest index {m_p} for prime {p} is not a positive "
                    f"multiple of {p}",
                )
            rates.add(m_p // p)
            sides.add("num" if m_p in num[p] else "den")
        if len(rates) > 1 or len(sides) > 1:
            raise NotASolution(
                "peeling",
                f"maxima disagree across primes: rates {sorted(rates)}, "
                f"sides {sorted(sides)}",
            )
        r = rates.pop()
        side = sides.pop()
        for p in num:
            target, other = (num[p], den[p]) if side == "num" else (den[p], num[p])
            _remove_one(target, r * p)
            if r in other:
                _remove_one(other, r)
            else:
                target[r] = target.get(r, 0) + 1
        exponents[r] = exponents.get(r, 0) + (1 if side == "num" else -1)
        current = weight()
        if current >= previous:
            raise NotASolution(
                "peeling",
                f"peeling stalled: weighted size did not decrease ({previous} "
                f"-> {current})",
            )
        previous = current
    return {r: t for r, t in sorted(exponents.items()) if t}


def _remove_one(bag: dict[int, int], key: int) -> None:
    if bag[key] == 1:
        del bag[key]
    else:
        bag[key] -= 1
