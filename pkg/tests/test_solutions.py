from itertools import permutations

import pytest

from qfe.poly import ONE, Polynomial, quantum_integer
from qfe.ratfunc import RationalFunction
from qfe.solutions import (
    NotASolution,
    SolutionSpec,
    _term_in_order,
    combine,
    commutativity_violations,
    in_support,
    invert,
    is_commutative,
    quantum_integer_spec,
    synthesize,
    verify_functional_equation,
)

from helpers import spec_257


def P(*coeffs):
    return Polynomial(coeffs)


class TestSupport:
    def test_example_member(self):
        assert in_support((2, 5, 7), 10)

    def test_example_non_member(self):
        assert not in_support((2, 5, 7), 3)

    def test_one_always_member(self):
        assert in_support((), 1)
        assert in_support((2, 5, 7), 1)

    def test_prime_powers(self):
        assert in_support((2, 3), 72)
        assert not in_support((2, 3), 70)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            in_support((2,), 0)


class TestSpecValidation:
    def test_non_prime_key(self):
        with pytest.raises(ValueError):
            SolutionSpec({4: RationalFunction(ONE)})

    def test_zero_generator(self):
        with pytest.raises(ValueError):
            SolutionSpec({2: RationalFunction.zero()})

    def test_generator_coercion(self):
        spec = SolutionSpec({2: quantum_integer(2), 3: 1})
        assert spec.generator(2) == RationalFunction(P(1, 1))
        assert spec.generator(3) == RationalFunction(ONE)

    def test_primes_sorted(self):
        spec = SolutionSpec({5: 1, 2: 1, 3: 1})
        assert spec.primes == (2, 3, 5)


class TestCommutativity:
    def test_shifted_cubic_family(self):
        assert is_commutative(spec_257())

    def test_quantum_integers(self):
        assert is_commutative(quantum_integer_spec([2, 3]))

    def test_violating_pair(self):
        spec = SolutionSpec({2: P(1, 1), 3: P(1, 1, 0, 1)})
        assert commutativity_violations(spec) == ((2, 3),)
        # oracle: expand both sides of the identity with plain products
        lhs = P(1, 1) * P(1, 1, 0, 1).compose_power(2)
        rhs = P(1, 1, 0, 1) * P(1, 1).compose_power(3)
        assert lhs != rhs

    def test_empty_and_single_prime_pass(self):
        assert is_commutative(SolutionSpec({}))
        assert is_commutative(SolutionSpec({5: RationalFunction(P(1, 2, 3))}))


class TestSynthesize:
    def test_quantum_product(self):
        spec = quantum_integer_spec([2, 3])
        assert synthesize(spec, 6) == RationalFunction(quantum_integer(6))

    def test_shifted_cubic_degree(self):
        f10 = synthesize(spec_257(), 10)
        assert f10.is_polynomial
        assert f10.num.degree == 18

    def test_outside_support_is_zero(self):
        assert synthesize(spec_257(), 3).is_zero

    def test_term_one(self):
        assert synthesize(spec_257(), 1) == RationalFunction(ONE)

    def test_empty_prime_set(self):
        spec = SolutionSpec({})
        assert synthesize(spec, 1) == RationalFunction(ONE)
        assert synthesize(spec, 2).is_zero

    def test_rejects_non_commutative(self):
        spec = SolutionSpec({2: P(1, 1), 3: P(1, 1, 0, 1)})
        with pytest.raises(NotASolution) as exc:
            synthesize(spec, 6)
        assert exc.value.reason == "commutativity"

    def test_order_independence(self):
        for spec in (quantum_integer_spec([2, 3, 5]), spec_257()):
            for n in (12, 70, 180, 98):
                blocks = []
                remaining = n
                for p in spec.primes:
                    power = 1
                    while remaining % p == 0:
                        power *= p
                        remaining //= p
                    if power > 1:
                        blocks.append(power)
                if remaining != 1:
                    continue
                values = {
                    _term_in_order(spec, order) for order in permutations(blocks)
                }
                assert len(values) == 1
                assert values.pop() == synthesize(spec, n)

    def test_prime_power_expansion(self):
        # f(m^k) = prod_{i<k} f_m(q^(m^i))
        cases = [(quantum_integer_spec([2, 3]), (2, 3, 6)), (spec_257(), (2, 5, 10))]
        for spec, ms in cases:
            for m in ms:
                for k in (1, 2, 3):
                    product = RationalFunction(ONE)
                    for i in range(k):
                        product = product * synthesize(spec, m).compose_power(m**i)
                    assert synthesize(spec, m**k) == product

    def test_support_law(self):
        spec = spec_257()
        for n in range(1, 60):
            assert (not synthesize(spec, n).is_zero) == in_support(spec.primes, n)


class TestVerify:
    def test_quantum_pair(self):
        assert verify_functional_equation(quantum_integer_spec([2, 3]), 2, 3)

    def test_trivial_left_unit(self):
        spec = spec_257()
        for k in (1, 2, 5, 10, 3):
            assert verify_functional_equation(spec, 1, k)

    def test_violating_spec_raises(self):
        spec = SolutionSpec({2: P(1, 1), 3: P(1, 1, 0, 1)})
        with pytest.raises(NotASolution):
            verify_functional_equation(spec, 2, 3)

    def test_symmetric_identity_sweep(self):
        spec = quantum_integer_spec([2, 3])
        for m in range(1, 16):
            for n in range(1, 16):
                assert verify_functional_equation(spec, m, n)

    def test_outside_support_vacuous(self):
        spec = spec_257()
        assert verify_functional_equation(spec, 3, 11)
        assert verify_functional_equation(spec, 2, 3)


class TestCombinators:
    def test_invert_generator(self):
        inv = invert(quantum_integer_spec([2, 3]))
        assert inv.generator(2) == RationalFunction(ONE, P(1, 1))
        assert is_commutative(inv)

    def test_combine_identity(self):
        f = spec_257()
        g = quantum_integer_spec([2, 5, 7])
        same = combine(f, g, 1, 1, 1, 0)
        assert all(same.generator(p) == f.generator(p) for p in f.primes)

    def test_combine_builds_shifted_cubic_family(self):
        base = quantum_integer_spec([2, 5, 7])
        built = combine(base, base, 3, 1, 1, -1)
        expected = spec_257()
        assert all(built.generator(p) == expected.generator(p) for p in (2, 5, 7))

    def test_combine_homomorphism(self):
        f = quantum_integer_spec([2, 3])
        g = invert(f)
        built = combine(f, g, 2, 1, 1, 2)
        for n in range(1, 31):
            expected = synthesize(f, n).compose_power(2) * synthesize(g, n) ** 2
            assert synthesize(built, n) == expected

    def test_combine_preserves_commutativity(self):
        f = spec_257()
        g = quantum_integer_spec([2, 5, 7])
        assert is_commutative(combine(f, g, 2, 3, -1, 2))

    def test_mismatched_primes(self):
        with pytest.raises(ValueError):
            combine(quantum_integer_spec([2, 3]), quantum_integer_spec([2, 5]))

    def test_reciprocal_is_inverse_solution(self):
        spec = quantum_integer_spec([2, 3])
        inv = invert(spec)
        for n in (1, 2, 6, 12):
            assert synthesize(inv, n) * synthesize(spec, n) == RationalFunction(ONE)


def test_memoization_is_transparent():
    spec = quantum_integer_spec([2, 3])
    first = synthesize(spec, 24)
    again = synthesize(spec, 24)
    fresh = synthesize(quantum_integer_spec([2, 3]), 24)
    assert first == again == fresh


def test_generators_mapping_readonly():
    spec = quantum_integer_spec([2, 3])
    with pytest.raises(TypeError):
        spec.generators[2] = RationalFunction(ONE)  # type: ignore[index]
