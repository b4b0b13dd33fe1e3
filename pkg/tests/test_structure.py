import random
from fractions import Fraction

import pytest

from qfe.cyclo import MultisetQuotient, cyclo_factor
from qfe.poly import Polynomial, quantum_integer
from qfe.ratfunc import RationalFunction
from qfe.solutions import (
    NotASolution,
    SolutionSpec,
    in_support,
    quantum_integer_spec,
    synthesize,
    verify_functional_equation,
)
from qfe.structure import (
    StructureData,
    TooFewPrimes,
    _peel,
    closed_form,
    decompose,
    degree_signature,
    scale_at,
    validate_shift,
)

from helpers import random_structure_data, spec_257


def P(*coeffs):
    return Polynomial(coeffs)


SD_257 = StructureData(
    primes=(2, 5, 7),
    scales={2: Fraction(1), 5: Fraction(1), 7: Fraction(1)},
    shift=Fraction(0),
    exponents={1: -1, 3: 1},
)


def telescoping_spec(primes=(2, 3)):
    """Generators (q^p - 2)/(q - 2): they satisfy the compatibility identity
    exactly, but every zero and pole sits off the roots of unity."""
    g = P(-2, 1)
    return SolutionSpec(
        {p: RationalFunction(Polynomial([-2] + [0] * (p - 1) + [1]), g) for p in primes}
    )


class TestValidateShift:
    def test_sixth_over_7_13(self):
        assert validate_shift((7, 13), Fraction(1, 6))

    def test_half_over_2_3(self):
        assert not validate_shift((2, 3), Fraction(1, 2))

    def test_integers_always_valid(self):
        for shift in (0, 1, -3):
            assert validate_shift((2, 3, 11), Fraction(shift))


class TestStructureDataValidation:
    def test_too_few_primes(self):
        with pytest.raises(TooFewPrimes):
            StructureData((2,), {2: Fraction(1)}, Fraction(0), {})

    def test_bad_shift(self):
        with pytest.raises(ValueError):
            StructureData(
                (2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(1, 2), {}
            )

    def test_zero_scale(self):
        with pytest.raises(ValueError):
            StructureData((2, 3), {2: Fraction(0), 3: Fraction(1)}, Fraction(0), {})

    def test_zero_exponent(self):
        with pytest.raises(ValueError):
            StructureData(
                (2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(0), {1: 0}
            )

    def test_non_prime(self):
        with pytest.raises(ValueError):
            StructureData((2, 4), {2: Fraction(1), 4: Fraction(1)}, Fraction(0), {})


class TestScaleAt:
    def test_at_one(self):
        assert scale_at(SD_257, 1) == 1

    def test_multiplicative_extension(self):
        sd = StructureData(
            (2, 5), {2: Fraction(3), 5: Fraction(1, 2)}, Fraction(0), {}
        )
        assert scale_at(sd, 20) == Fraction(9, 2)

    def test_all_ones(self):
        assert scale_at(SD_257, 10) == 1

    def test_outside_support(self):
        with pytest.raises(ValueError):
            scale_at(SD_257, 3)


class TestClosedForm:
    def test_pure_shift(self):
        sd = StructureData(
            (2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(1), {}
        )
        assert closed_form(sd, 6) == RationalFunction(Polynomial.monomial(5))

    def test_shifted_cubic_generator(self):
        assert closed_form(SD_257, 2) == RationalFunction(P(1, -1, 1))

    def test_at_one(self):
        assert closed_form(SD_257, 1) == RationalFunction(P(1))

    def test_outside_support_zero(self):
        assert closed_form(SD_257, 6).is_zero

    def test_negative_shift_moves_to_denominator(self):
        sd = StructureData(
            (2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(-1), {}
        )
        assert closed_form(sd, 4) == RationalFunction(P(1), Polynomial.monomial(3))

    def test_matches_synthesis(self):
        spec = SolutionSpec({p: closed_form(SD_257, p) for p in (2, 5, 7)})
        for n in (2, 4, 10, 14, 35):
            assert synthesize(spec, n) == closed_form(SD_257, n)

    def test_sequences_satisfy_functional_equation(self):
        sd = StructureData(
            (2, 3),
            {2: Fraction(2), 3: Fraction(-1, 3)},
            Fraction(1),
            {1: 1, 2: -1},
        )
        spec = SolutionSpec({p: closed_form(sd, p) for p in sd.primes})
        for m in range(1, 21):
            for n in range(1, 21):
                assert verify_functional_equation(spec, m, n)


class TestDegreeSignature:
    def test_shifted_cubic_at_ten(self):
        assert degree_signature(SD_257, 10) == 18

    def test_empty_terms(self):
        sd = StructureData((2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(0), {})
        for n in (1, 2, 12):
            assert degree_signature(sd, n) == 0

    def test_cubed_quantum_integer(self):
        sd = StructureData((2, 3), {2: Fraction(1), 3: Fraction(1)}, Fraction(0), {1: 3})
        # oracle: expand [4]_q^3 and read off its degree
        assert degree_signature(sd, 4) == (quantum_integer(4) ** 3).degree == 9

    def test_matches_standard_form(self):
        rng = random.Random(2)
        for _ in range(8):
            sd = random_structure_data(rng)
            for n in list(sd.primes) + [sd.primes[0] * sd.primes[1]]:
                form = closed_form(sd, n).standard_form()
                assert form.degree_difference == degree_signature(sd, n)

    def test_matches_standard_form_sweep(self):
        for n in range(1, 31):
            if not in_support(SD_257.primes, n):
                continue
            form = closed_form(SD_257, n).standard_form()
            assert form.degree_difference == degree_signature(SD_257, n) == 2 * (n - 1)


class TestDecompose:
    def test_shifted_cubic_family(self):
        sd = decompose(spec_257())
        assert sd == SD_257

    def test_all_one_generators(self):
        sd = decompose(SolutionSpec({2: 1, 3: 1}))
        assert sd.exponents == {}
        assert sd.shift == 0
        assert sd.scales == {2: Fraction(1), 3: Fraction(1)}

    def test_quantum_integers(self):
        sd = decompose(quantum_integer_spec([2, 3]))
        assert sd.exponents == {1: 1}
        assert sd.shift == 0

    def test_reciprocal_quantum_integers(self):
        spec = SolutionSpec(
            {p: RationalFunction(1, quantum_integer(p)) for p in (2, 3)}
        )
        assert decompose(spec).exponents == {1: -1}

    def test_scaled_and_shifted(self):
        sd_in = StructureData(
            (3, 5),
            {3: Fraction(-2, 3), 5: Fraction(7)},
            Fraction(1, 2),
            {2: 2, 3: -1},
        )
        spec = SolutionSpec({p: closed_form(sd_in, p) for p in sd_in.primes})
        assert decompose(spec) == sd_in

    def test_round_trip_random(self):
        rng = random.Random(424242)
        for _ in range(25):
            sd = random_structure_data(rng)
            spec = SolutionSpec({p: closed_form(sd, p) for p in sd.primes})
            assert decompose(spec) == sd


class TestDecomposeRejections:
    def test_too_few_primes(self):
        with pytest.raises(TooFewPrimes):
            decompose(SolutionSpec({2: quantum_integer(2)}))

    def test_commutativity_violation(self):
        spec = SolutionSpec({2: P(1, 1), 3: P(1, 0, 1)})
        with pytest.raises(NotASolution) as exc:
            decompose(spec)
        assert exc.value.reason == "commutativity"

    def test_off_torsion_zero(self):
        with pytest.raises(NotASolution) as exc:
            decompose(telescoping_spec())
        assert exc.value.reason == "non-cyclotomic"

    def test_off_torsion_linear_factor(self):
        # h_2 carries the factor q - 2 directly
        spec = SolutionSpec({2: P(-2, 1), 3: P(1, 1)})
        with pytest.raises(NotASolution) as exc:
            decompose(spec)
        assert exc.value.reason == "non-cyclotomic"

    def test_inconsistent_shift(self):
        spec = SolutionSpec({2: Polynomial.monomial(1), 3: Polynomial.monomial(1)})
        with pytest.raises(NotASolution) as exc:
            decompose(spec)
        assert exc.value.reason == "shift"

    def test_peeling_stalls_on_crafted_multisets(self):
        # After one valid round the maxima stop being multiples of the primes.
        state = {
            2: MultisetQuotient(num={4: 1}),
            3: MultisetQuotient(num={6: 1}),
        }
        with pytest.raises(NotASolution) as exc:
            _peel(state)
        assert exc.value.reason == "peeling"

    def test_peeling_rejects_mixed_sides(self):
        state = {
            2: MultisetQuotient(num={2: 1}),
            3: MultisetQuotient(den={3: 1}),
        }
        with pytest.raises(NotASolution) as exc:
            _peel(state)
        assert exc.value.reason == "peeling"

    def test_peeling_rejects_unbalanced_emptiness(self):
        state = {
            2: MultisetQuotient(num={2: 1}),
            3: MultisetQuotient(),
        }
        with pytest.raises(NotASolution) as exc:
            _peel(state)
        assert exc.value.reason == "peeling"


class TestCertification:
    def test_synthesized_terms_have_cyclotomic_parts(self):
        spec = spec_257()
        for n in range(1, 31):
            f = synthesize(spec, n)
            if f.is_zero:
                continue
            form = f.standard_form()
            cyclo_factor(form.num)
            cyclo_factor(form.den)
