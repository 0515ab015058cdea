import random
from itertools import product

import pytest

from psldesigns import gf


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    assert {m for m in range(2, 50) if gf.is_prime(m)} == primes
    assert not gf.is_prime(1)
    assert not gf.is_prime(0)
    assert gf.is_prime(3121)
    assert not gf.is_prime(3127)  # 53 * 59


def test_factorize():
    assert gf.factorize(24389) == ((29, 3),)
    assert gf.factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert gf.factorize(41) == ((41, 1),)
    assert gf.factorize(1) == ()
    with pytest.raises(ValueError):
        gf.factorize(0)


def test_prime_field_spec(f41):
    assert (f41.p, f41.n, f41.q) == (41, 1, 41)
    assert f41.alpha == 6
    assert gf.make_prime_field(13).alpha == 2
    assert gf.make_prime_field(61).alpha == 2
    with pytest.raises(ValueError):
        gf.make_prime_field(15)
    with pytest.raises(ValueError):
        gf.make_prime_field(2)


def test_extension_field_spec(f9, f25, f49):
    # lex-smallest monic irreducible modulus, low-degree coefficients first
    assert f9.modulus == (1, 0, 1)  # x^2 + 1
    assert f9.alpha == 4
    assert f9.q == 9
    for spec in (f9, f25, f49):
        assert gf.element_order(spec, spec.alpha) == spec.q - 1
    with pytest.raises(ValueError):
        gf.make_extension_field(4, 2)
    with pytest.raises(ValueError):
        gf.make_extension_field(3, 0)
    with pytest.raises(ValueError):
        gf.make_extension_field(3, 30)  # over the size limit


def test_extension_modulus_is_minimal_irreducible(f9, f25):
    # no lex-smaller monic polynomial of the same degree is irreducible
    for spec in (f9, f25):
        p, n = spec.p, spec.n
        assert len(spec.modulus) == n + 1 and spec.modulus[-1] == 1
        for cs in product(range(p), repeat=n):
            if cs >= spec.modulus[:n]:
                break
            assert not gf._is_irreducible(list(cs) + [1], p)
        assert gf._is_irreducible(list(spec.modulus), p)


def test_alpha_is_smallest_generator(f9, f25, f49):
    for spec in (f9, f25, f49):
        for a in range(2, spec.alpha):
            assert gf.element_order(spec, a) != spec.q - 1


def test_field_for_order():
    assert gf.field_for_order(41).n == 1
    s = gf.field_for_order(49)
    assert (s.p, s.n) == (7, 2)
    assert gf.field_for_order(24389).p == 29
    for bad in (12, 2, 8, 1):
        with pytest.raises(ValueError):
            gf.field_for_order(bad)


def test_coeffs_roundtrip(f49):
    for a in range(f49.q):
        cs = gf.element_coeffs(f49, a)
        assert len(cs) == 2
        assert gf.element_from_coeffs(f49, cs) == a
    assert gf.embed(f49, 9) == 2
    assert gf.embed(f49, -1) == 6


def test_field_axioms_exhaustive(f9):
    q = f9.q
    for a in range(q):
        assert gf.add(f9, a, gf.neg(f9, a)) == 0
        assert gf.mul(f9, a, 1) == a
        if a:
            assert gf.mul(f9, a, gf.inv(f9, a)) == 1
    for a in range(q):
        for b in range(q):
            assert gf.add(f9, a, b) == gf.add(f9, b, a)
            assert gf.mul(f9, a, b) == gf.mul(f9, b, a)
            assert gf.sub(f9, a, b) == gf.add(f9, a, gf.neg(f9, b))


def test_field_axioms_random(f41, f25, f49):
    rng = random.Random(7)
    for spec in (f41, f25, f49):
        q = spec.q
        for _ in range(300):
            a, b, c = (rng.randrange(q) for _ in range(3))
            assert gf.mul(spec, a, gf.add(spec, b, c)) == gf.add(
                spec, gf.mul(spec, a, b), gf.mul(spec, a, c)
            )
            assert gf.mul(spec, gf.mul(spec, a, b), c) == gf.mul(
                spec, a, gf.mul(spec, b, c)
            )


def test_inv_zero_raises(f41):
    with pytest.raises(ValueError):
        gf.inv(f41, 0)


def test_power(f41, f25):
    for spec in (f41, f25):
        rng = random.Random(3)
        for _ in range(100):
            a = rng.randrange(1, spec.q)
            e = rng.randrange(-20, 40)
            direct = 1
            for _ in range(abs(e)):
                direct = gf.mul(spec, direct, a)
            if e < 0:
                direct = gf.inv(spec, direct)
            assert gf.power(spec, a, e) == direct
    assert gf.power(f41, 0, 0) == 1


def _naive_order(spec, a):
    x, n = a, 1
    while x != 1:
        x = gf.mul(spec, x, a)
        n += 1
    return n


def test_element_order_oracle(f41, f9, f25):
    for spec in (f41, f9, f25):
        for a in range(1, spec.q):
            assert gf.element_order(spec, a) == _naive_order(spec, a)
    with pytest.raises(ValueError):
        gf.element_order(f41, 0)


def test_chi_square_oracle_primes():
    for p in (13, 17, 29, 41, 61, 101, 197):
        spec = gf.make_prime_field(p)
        squares = {pow(x, 2, p) for x in range(1, p)}
        for a in range(1, p):
            assert gf.chi(spec, a) == (1 if a in squares else -1)


def test_chi_square_oracle_extensions(f9, f25, f49):
    for spec in (f9, f25, f49):
        squares = {gf.mul(spec, x, x) for x in range(1, spec.q)}
        for a in range(1, spec.q):
            assert gf.chi(spec, a) == (1 if a in squares else -1)
    with pytest.raises(ValueError):
        gf.chi(f9, 0)


def test_chi_multiplicative_random(f13, f29, f41, f61, f25):
    rng = random.Random(11)
    for spec in (f13, f29, f41, f61, f25):
        for _ in range(2000):
            a = rng.randrange(1, spec.q)
            b = rng.randrange(1, spec.q)
            assert gf.chi(spec, gf.mul(spec, a, b)) == gf.chi(spec, a) * gf.chi(
                spec, b
            )


def test_sqrt(f13, f41, f29, f25):
    for spec in (f13, f41, f29, f25):
        for a in range(1, spec.q):
            if gf.chi(spec, a) == 1:
                r = gf.sqrt(spec, a)
                assert gf.mul(spec, r, r) == a
            else:
                with pytest.raises(ValueError):
                    gf.sqrt(spec, a)


def test_nth_root_subgroup(f41):
    beta, block = gf.nth_root_subgroup(f41, 5)
    assert beta == 10
    assert block == [1, 10, 18, 16, 37]
    assert gf.element_order(f41, beta) == 5
    assert len(set(block)) == 5
    with pytest.raises(ValueError):
        gf.nth_root_subgroup(f41, 7)


def test_field_cache():
    assert gf.make_prime_field(41) is gf.make_prime_field(41)
    assert gf.make_extension_field(3, 2) is gf.make_extension_field(3, 2)
