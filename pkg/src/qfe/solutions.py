"""Solutions of the multiplication law f(m*n) = f_m(q) * f_n(q**m).

A solution with support generated by a prime set P is completely determined
by its generators {h_p : p in P}.  An arbitrary assignment of generators
extends to a solution exactly when every pair satisfies the compatibility
identity

    h_p1(q) * h_p2(q**p1) == h_p2(q) * h_p1(q**p2),

so ``SolutionSpec`` carries the generators, and ``synthesize`` builds any
f_n from them after checking that identity once.

Synthesized terms are memoized per spec; the cache only ever stores the
value a recomputation would produce, so concurrent use behaves as if calls
were serialized.
"""

from __future__ import annotations

from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from .arith import factorize, is_prime
from .poly import quantum_integer
from .ratfunc import RationalFunction


class NotASolution(ValueError):
    """The given data does not determine a solution of the multiplication law.

    ``reason`` is a stable machine-readable tag:
      'commutativity'   a generator pair violates the compatibility identity
      'non-cyclotomic'  a generator has a zero or pole off {0, roots of unity}
      'shift'           the q-power exponents of the generators are inconsistent
      'peeling'         the quantum-integer extraction cannot proceed
    """

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


def in_support(primes: Iterable[int], n: int) -> bool:
    """True iff every prime factor of n lies in primes; n = 1 always qualifies."""
    if n < 1:
        raise ValueError(f"support membership requires n >= 1, got {n}")
    ps = set(primes)
    return all(p in ps for p in factorize(n))


class SolutionSpec:
    """Prime generators of a candidate solution.

    Generators may be given as RationalFunction, Polynomial, int, or
    Fraction values; each must be nonzero and keyed by a prime.
    """

    __slots__ = ("_generators", "primes", "_terms", "_violations")

    def __init__(self, generators: Mapping[int, object]):
        items: dict[int, RationalFunction] = {}
        for p, h in generators.items():
            if not is_prime(p):
                raise ValueError(f"generator key {p} is not a prime")
            if not isinstance(h, RationalFunction):
                h = RationalFunction(h)  # type: ignore[arg-type]
            if h.is_zero:
                raise ValueError(f"generator for prime {p} must be nonzero")
            items[p] = h
        self._generators = dict(sorted(items.items()))
        self.primes: tuple[int, ...] = tuple(self._generators)
        self._terms: dict[int, RationalFunction] = {1: RationalFunction.one()}
        self._violations: tuple[tuple[int, int], ...] | None = None

    @property
    def generators(self) -> Mapping[int, RationalFunction]:
        return MappingProxyType(self._generators)

    def generator(self, p: int) -> RationalFunction:
        return self._generators[p]

    def __repr__(self) -> str:
        gens = ", ".join(f"{p}: {h}" for p, h in self._generators.items())
        return f"SolutionSpec({{{gens}}})"


def commutativity_violations(spec: SolutionSpec) -> tuple[tuple[int, int], ...]:
    """All prime pairs (p1, p2), p1 < p2, violating the compatibility identity.

    An empty result means the generators extend to a unique solution whose
    support is the multiplicative semigroup generated by the primes.
    """
    if spec._violations is None:
        bad = []
        for p1, p2 in combinations(spec.primes, 2):
            h1, h2 = spec.generator(p1), spec.generator(p2)
            if h1 * h2.compose_power(p1) != h2 * h1.compose_power(p2):
                bad.append((p1, p2))
        spec._violations = tuple(bad)
    return spec._violations


def is_commutative(spec: SolutionSpec) -> bool:
    return not commutativity_violations(spec)


def _require_commutative(spec: SolutionSpec) -> None:
    bad = commutativity_violations(spec)
    if bad:
        pairs = ", ".join(f"({a}, {b})" for a, b in bad)
        raise NotASolution(
            "commutativity",
            f"generator pairs {pairs} violate the compatibility identity",
        )


def synthesize(spec: SolutionSpec, n: int) -> RationalFunction:
    """The term f_n of the solution determined by the generators.

    Returns 0 outside the support and 1 at n = 1.  Otherwise n is split
    into prime powers p1**a1 < ... < pk**ak and the multiplication law is
    folded left to right, prime powers expanding as
    f(p**a) = f(p**(a-1)) * h_p(q**(p**(a-1))).

    Raises NotASolution if the generators fail the compatibility check.
    """
    if n < 1:
        raise ValueError(f"synthesize requires n >= 1, got {n}")
    _require_commutative(spec)
    return _term(spec, n)


def _term(spec: SolutionSpec, n: int) -> RationalFunction:
    cached = spec._terms.get(n)
    if cached is not None:
        return cached
    powers = factorize(n)
    if any(p not in spec._generators for p in powers):
        value = RationalFunction.zero()
    elif len(powers) == 1:
        (p, a), = powers.items()
        if a == 1:
            value = spec.generator(p)
        else:
            below = p ** (a - 1)
            value = _term(spec, below) * spec.generator(p).compose_power(below)
    else:
        value = RationalFunction.one()
        m = 1
        for p, a in powers.items():
            value = value * _term(spec, p**a).compose_power(m)
            m *= p**a
    spec._terms[n] = value
    return value


def _term_in_order(spec: SolutionSpec, prime_powers: Iterable[int]) -> RationalFunction:
    """Fold the given prime-power blocks in their given order (test hook for
    the order-independence property)."""
    value = RationalFunction.one()
    m = 1
    for block in prime_powers:
        value = value * _term(spec, block).compose_power(m)
        m *= block
    return value


def verify_functional_equation(spec: SolutionSpec, m: int, n: int) -> bool:
    """Check f(m*n) == f_m(q) * f_n(q**m) and the symmetric identity
    f_m(q) * f_n(q**m) == f_n(q) * f_m(q**n) on synthesized terms.

    Holds vacuously (0 == 0) when the operands fall outside the support.
    """
    if m < 1 or n < 1:
        raise ValueError("verify requires m, n >= 1")
    fm = synthesize(spec, m)
    fn = synthesize(spec, n)
    crossed = fm * fn.compose_power(m)
    return synthesize(spec, m * n) == crossed and crossed == fn * fm.compose_power(n)


def combine(
    f: SolutionSpec,
    g: SolutionSpec,
    dilate_f: int = 1,
    dilate_g: int = 1,
    power_f: int = 1,
    power_g: int = 1,
) -> SolutionSpec:
    """The solution with generators h_p = f_p(q**dilate_f)**power_f *
    g_p(q**dilate_g)**power_g.

    Both specs must share the same prime set.  Whenever f and g pass the
    compatibility check, so does the combination.
    """
    if f.primes != g.primes:
        raise ValueError(f"prime sets differ: {f.primes} vs {g.primes}")
    if dilate_f < 1 or dilate_g < 1:
        raise ValueError("dilations must be >= 1")
    return SolutionSpec(
        {
            p: f.generator(p).compose_power(dilate_f) ** power_f
            * g.generator(p).compose_power(dilate_g) ** power_g
            for p in f.primes
        }
    )


def invert(f: SolutionSpec) -> SolutionSpec:
    """The reciprocal solution, with generators 1 / h_p."""
    return SolutionSpec({p: f.generator(p).inverse() for p in f.primes})


def quantum_integer_spec(primes: Iterable[int]) -> SolutionSpec:
    """The classical solution h_p = 1 + q + ... + q**(p-1) over the given primes."""
    return SolutionSpec({p: RationalFunction(quantum_integer(p)) for p in primes})
