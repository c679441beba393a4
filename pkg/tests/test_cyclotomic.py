import random
from fractions import Fraction
from math import gcd

import pytest

from pgq.cyclotomic import (
    CyclotomicElement,
    euler_phi,
    factorint,
    moebius,
    parse_cyclotomic,
    zeta,
)


def primes(bound):
    return [p for p in range(2, bound + 1) if all(p % d for d in range(2, p))]


class TestMake:
    def test_identity_embedding(self):
        x = CyclotomicElement.make(5, [(0, 1)])
        assert x.is_rational() and x.to_rational() == 1

    def test_primitive_root_sum_is_minus_one(self):
        x = CyclotomicElement.make(5, [(1, 1), (2, 1), (3, 1), (4, 1)])
        assert x == CyclotomicElement.make(5, [(0, -1)])
        assert x == -1

    def test_exponent_reduced_mod_n(self):
        x = CyclotomicElement.make(6, [(7, 2)])
        assert x == CyclotomicElement.make(6, [(1, 2)])
        assert abs(x.complex_value() - 2 * zeta(6).complex_value()) < 1e-12

    def test_zero_level_rejected(self):
        with pytest.raises(ValueError):
            CyclotomicElement.make(0, [(0, 1)])

    def test_canonical_equality_all_primes_dividing_n(self):
        # the sum of all primitive p-th roots inside Q(zeta_n) collapses to -1
        for n in range(2, 61):
            for p in [p for p in primes(n) if n % p == 0]:
                s = CyclotomicElement.make(n, [(j * (n // p), 1) for j in range(1, p)])
                assert s == -1, (n, p)


class TestArithmetic:
    def test_inverse_roots_multiply_to_one(self):
        assert zeta(5) * zeta(5, 4) == 1

    def test_minimal_polynomial_of_zeta3(self):
        assert zeta(3) + zeta(3, 2) == -1

    def test_mixed_level_product(self):
        prod = zeta(2) * zeta(3)
        assert prod.n == 6
        assert prod == zeta(6, 5)
        assert abs(prod.complex_value() - zeta(6, 5).complex_value()) < 1e-9

    def test_scalar_and_subtraction(self):
        x = zeta(7) * Fraction(3, 2) - zeta(7)
        assert x == zeta(7) * Fraction(1, 2)
        assert (x - x).is_zero()

    def test_levels_preserved_and_lifted(self):
        # matching levels stay; mixed levels go to the lcm; no reduction
        assert (zeta(6) + zeta(6, 2)).n == 6
        assert (zeta(4) * zeta(6)).n == 12
        assert (zeta(5) - zeta(5)).n == 5
        assert CyclotomicElement.rational(1, 5).n == 5

    def test_float_shadow_random_elements(self):
        rng = random.Random(20240501)
        for _ in range(120):
            n = rng.randrange(2, 121)
            terms = [
                (rng.randrange(n), Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)))
                for _ in range(5)
            ]
            x = CyclotomicElement.make(n, terms)
            y = CyclotomicElement.make(n, terms[:2])
            lhs = (x * y).complex_value()
            rhs = x.complex_value() * y.complex_value()
            scale = max(1.0, abs(rhs))
            assert abs(lhs - rhs) <= 1e-9 * scale


class TestGalois:
    def test_definition(self):
        assert zeta(5).galois(2) == zeta(5, 2)

    def test_rationals_fixed(self):
        seven = CyclotomicElement.rational(7, 10)
        for k in (1, 3, 7, 9):
            assert seven.galois(k) == 7

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            zeta(10).galois(5)

    def test_composition_on_level_35(self):
        rng = random.Random(99)
        for _ in range(20):
            x = CyclotomicElement.make(
                35, [(rng.randrange(35), rng.randrange(-4, 5)) for _ in range(4)]
            )
            a, b = x.galois(2).galois(3), x.galois(6)
            assert a == b
            assert abs(a.complex_value() - b.complex_value()) < 1e-9

    def test_ring_homomorphism(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.choice([12, 15, 24, 35, 40])
            mk = lambda: CyclotomicElement.make(
                n, [(rng.randrange(n), rng.randrange(-3, 4)) for _ in range(3)]
            )
            x, y = mk(), mk()
            k = rng.choice([k for k in range(1, n) if gcd(k, n) == 1])
            assert (x + y).galois(k) == x.galois(k) + y.galois(k)
            assert (x * y).galois(k) == x.galois(k) * y.galois(k)


class TestTrace:
    def test_prime_roots(self):
        for p in primes(60):
            assert zeta(p).trace_to_Q() == -1

    def test_inverse_p_root_in_pq_field(self):
        # zeta_p^-1 viewed inside Q(zeta_pq) traces to -(q-1)
        assert zeta(35, -7).trace_to_Q() == -6
        assert zeta(15, -5).trace_to_Q() == -(5 - 1)

    def test_trace_of_one_is_degree(self):
        assert CyclotomicElement.rational(1, 12).trace_to_Q() == euler_phi(12) == 4

    def test_closed_formula_matches_galois_sum(self):
        rng = random.Random(17)
        for _ in range(40):
            n = rng.randrange(2, 80)
            x = CyclotomicElement.make(
                n, [(rng.randrange(n), Fraction(rng.randrange(-6, 7), rng.randrange(1, 4)))
                    for _ in range(4)]
            )
            assert x.trace_to_Q() == x.trace_via_galois_sum()

    def test_trace_over_subfield_rescaling(self):
        # a value of Q(zeta_5) represented at level 35: trace over Q(zeta_5)
        x = zeta(35, 7)  # = zeta_5
        assert x.trace_over(5) == -1
        assert CyclotomicElement.rational(3, 35).trace_over(7) == 3 * euler_phi(7)


class TestSerialization:
    def test_string_roundtrip(self):
        x = CyclotomicElement.make(12, [(0, Fraction(1, 2)), (5, -3), (7, Fraction(2, 7))])
        assert parse_cyclotomic(x.to_string()) == x

    def test_json_roundtrip(self):
        x = CyclotomicElement.make(9, [(1, 1), (4, Fraction(-1, 3))])
        assert parse_cyclotomic(x.to_json_map()) == x

    def test_bare_rational(self):
        assert parse_cyclotomic("-2") == -2
        assert parse_cyclotomic("3/4") == Fraction(3, 4)

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_cyclotomic("z^z @ 5")


class TestHelpers:
    def test_factorint(self):
        assert factorint(360) == ((2, 3), (3, 2), (5, 1))

    def test_moebius(self):
        assert [moebius(n) for n in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]

    def test_not_rational_raises(self):
        with pytest.raises(ValueError):
            zeta(5).to_rational()
