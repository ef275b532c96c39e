import random
from fractions import Fraction
from math import gcd

import pytest

from reflarr.cyclo import CycNum, cyclotomic_poly, parse_literal, sqrt_minus_two

ORDERS = [3, 4, 6, 8, 12, 24]


def random_cycnum(rng, m, size=6):
    coeffs = [
        Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(m)
    ]
    return CycNum.from_fractions(m, coeffs)


class TestCyclotomicPoly:
    def test_small_orders(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(2) == (1, 1)
        assert cyclotomic_poly(3) == (1, 1, 1)
        assert cyclotomic_poly(4) == (1, 0, 1)
        assert cyclotomic_poly(6) == (1, -1, 1)
        assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)

    def test_product_over_divisors_is_x_m_minus_1(self):
        for m in ORDERS:
            prod = [1]
            for d in range(1, m + 1):
                if m % d == 0:
                    phi = cyclotomic_poly(d)
                    out = [0] * (len(prod) + len(phi) - 1)
                    for i, a in enumerate(prod):
                        for j, b in enumerate(phi):
                            out[i + j] += a * b
                    prod = out
            expect = [0] * (m + 1)
            expect[0], expect[m] = -1, 1
            assert prod == expect


class TestFieldOps:
    def test_zeta3_plus_zeta3_squared(self):
        z = CycNum.zeta(3)
        assert z + z * z == CycNum.rational(-1)

    def test_invert_zeta8(self):
        assert CycNum.zeta(8).inverse() == CycNum.zeta(8, 7)

    def test_sqrt_minus_two_product(self):
        r = sqrt_minus_two()
        prod = (1 + r) * (1 - r)
        assert prod == CycNum.rational(3)
        assert abs(prod.embed() - 3) < 1e-12
        assert abs(r.embed() ** 2 + 2) < 1e-12

    def test_divide_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            CycNum.zero(4).inverse()
        with pytest.raises(ZeroDivisionError):
            CycNum.one(4) / CycNum.zero(4)

    def test_mixed_order_arithmetic_lifts(self):
        a = CycNum.zeta(3)
        b = CycNum.zeta(4)
        s = a * b
        assert s.order == 12
        assert s == CycNum.zeta(12, 7)

    def test_conjugate_involution_and_multiplicativity(self):
        rng = random.Random(7)
        for m in ORDERS:
            a = random_cycnum(rng, m)
            b = random_cycnum(rng, m)
            assert a.conjugate().conjugate() == a
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()

    @pytest.mark.parametrize("m", ORDERS)
    def test_field_axioms_on_random_triples(self, m):
        rng = random.Random(m)
        one = CycNum.one(m)
        for _ in range(500):
            a, b, c = (random_cycnum(rng, m, 4) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inverse() == one

    def test_canonical_form_idempotent(self):
        rng = random.Random(3)
        for m in ORDERS:
            x = random_cycnum(rng, m) * random_cycnum(rng, m)
            again = CycNum(x.order, list(x.num), x.den)
            assert again.num == x.num and again.den == x.den
            assert all(c == 0 for c in x.num[len(cyclotomic_poly(m)) - 1 :])


class TestRootsOfUnity:
    def test_minus_one(self):
        assert CycNum.rational(-1).as_root_of_unity() == 2

    def test_zeta6(self):
        assert CycNum.zeta(6).as_root_of_unity() == 6

    def test_one_plus_zeta3(self):
        # 1 + zeta_3 = -zeta_3^2, of order 6 (checked by brute-force powers)
        x = 1 + CycNum.zeta(3)
        assert x == -(CycNum.zeta(3) ** 2)
        one = CycNum.one(3)
        orders = [k for k in range(1, 13) if x**k == one]
        assert x.as_root_of_unity() == min(orders) == 6

    def test_non_root(self):
        assert CycNum.rational(2).as_root_of_unity() is None
        assert (CycNum.zeta(8) + 1).as_root_of_unity() is None

    def test_zero(self):
        assert CycNum.zero(5).as_root_of_unity() is None


class TestGalois:
    def test_on_zeta3(self):
        assert CycNum.zeta(3).galois(2) == CycNum.zeta(3, 2)

    def test_additivity(self):
        a = 1 + CycNum.zeta(5)
        assert a.galois(2) == 1 + CycNum.zeta(5, 2)

    def test_sqrt_minus_two_under_odd_exponents(self):
        # zeta_8 + zeta_8^3 is fixed by 3 (zeta_8^9 = zeta_8) and negated by 5, 7
        r = sqrt_minus_two()
        assert r.galois(3) == r
        assert r.galois(5) == -r
        assert r.galois(7) == -r

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            CycNum.zeta(8).galois(2)

    def test_identity_and_group_law(self):
        rng = random.Random(11)
        for m in ORDERS:
            a = random_cycnum(rng, m)
            assert a.galois(1) == a
            units = [n for n in range(1, m) if gcd(n, m) == 1]
            for n in units:
                for k in units:
                    assert a.galois(n).galois(k) == a.galois((n * k) % m)

    def test_commutes_with_arithmetic(self):
        rng = random.Random(13)
        for m in ORDERS:
            a, b = random_cycnum(rng, m), random_cycnum(rng, m)
            units = [n for n in range(1, m) if gcd(n, m) == 1]
            for n in units:
                assert (a + b).galois(n) == a.galois(n) + b.galois(n)
                assert (a * b).galois(n) == a.galois(n) * b.galois(n)

    def test_permutes_roots_of_unity_faithfully(self):
        for m in ORDERS:
            units = [n for n in range(1, m) if gcd(n, m) == 1]
            powers = [CycNum.zeta(m, k) for k in range(m)]
            seen = set()
            for n in units:
                images = tuple(powers.index(CycNum.zeta(m).galois(n)) for _ in [0])
                perm = tuple(powers.index(p.galois(n)) for p in powers)
                assert sorted(perm) == list(range(m))
                seen.add(perm)
            assert len(seen) == len(units)


class TestEmbed:
    def test_one_and_i(self):
        assert CycNum.one().embed() == 1
        assert abs(CycNum.zeta(4).embed() - 1j) < 1e-15

    def test_multiplicative_within_tolerance(self):
        rng = random.Random(5)
        for m in ORDERS:
            for _ in range(20):
                a, b = random_cycnum(rng, m), random_cycnum(rng, m)
                assert abs((a * b).embed() - a.embed() * b.embed()) <= 1e-10

    def test_conjugate_matches_complex_conjugate(self):
        rng = random.Random(17)
        for _ in range(100):
            m = rng.choice(ORDERS)
            a = random_cycnum(rng, m)
            assert abs(a.conjugate().embed() - a.embed().conjugate()) < 1e-10


class TestRewrite:
    def test_descend_rational(self):
        x = CycNum.zeta(3) + CycNum.zeta(3, 2)  # equals -1
        assert x.rewrite(1) == CycNum.rational(-1)

    def test_descend_subfield(self):
        # zeta_8 + zeta_8^3 lies in Q(zeta_8), sqrt(-2) has conductor 8
        r = sqrt_minus_two().lift(24)
        back = r.rewrite(8)
        assert back.order == 8 and back == sqrt_minus_two()

    def test_rejects_outside_subfield(self):
        with pytest.raises(ValueError):
            CycNum.zeta(8).rewrite(4)


class TestLiterals:
    def test_rational_string(self):
        assert parse_literal("3/4") == CycNum.rational(Fraction(3, 4))

    def test_cyclotomic_array(self):
        v = parse_literal([0, 1, 0], order=3)
        assert v == CycNum.zeta(3)

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            parse_literal([1, 0], order=3)
