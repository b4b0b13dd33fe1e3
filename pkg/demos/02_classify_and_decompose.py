"""Round-trip a solution through its classification data.

Every rational-function solution supported on two or more primes has the
closed form

    f_n = scale(n) * q**(shift*(n-1)) * prod_r [n]_{q^r} ** t_r.

This script builds generators from such data, recovers the data back with
``decompose``, and shows two inputs that are rightly rejected: one breaking
the compatibility identity, and one whose zeros sit off the unit circle
even though the identity holds.
"""

from fractions import Fraction

from qfe import (
    NotASolution,
    Polynomial,
    RationalFunction,
    SolutionSpec,
    StructureData,
    closed_form,
    decompose,
    format_expr,
    is_commutative,
)

data = StructureData(
    primes=(3, 5),
    scales={3: Fraction(-2, 3), 5: Fraction(7)},
    shift=Fraction(1, 2),
    exponents={2: 2, 3: -1},
)
print("structure data:")
print("  scales:", dict(data.scales))
print("  shift:", data.shift)
print("  exponents:", dict(data.exponents))

spec = SolutionSpec({p: closed_form(data, p) for p in data.primes})
print("\ngenerators it produces:")
for p in spec.primes:
    print(f"  h_{p} = {format_expr(spec.generator(p))}")

recovered = decompose(spec)
print("\ndecompose recovers the same data:", recovered == data)

# A pair of generators that do not extend to any solution.
broken = SolutionSpec({2: Polynomial([1, 1]), 3: Polynomial([1, 0, 1])})
try:
    decompose(broken)
except NotASolution as exc:
    print(f"\nincompatible generators rejected ({exc.reason}):", exc)

# Generators g(q^p)/g(q) satisfy the compatibility identity for any g, but
# with g = q - 2 their zeros are not roots of unity, so they lie outside
# the classified family and must be refused.
g = Polynomial([-2, 1])
telescoping = SolutionSpec(
    {p: RationalFunction(Polynomial([-2] + [0] * (p - 1) + [1]), g) for p in (2, 3)}
)
print("\ntelescoping generators satisfy the identity:", is_commutative(telescoping))
try:
    decompose(telescoping)
except NotASolution as exc:
    print(f"still rejected ({exc.reason}):", exc)
