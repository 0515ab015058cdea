"""Exact arithmetic in odd-characteristic finite fields GF(p^n).

Elements are canonical integers in [0, q): the element whose residue
polynomial is c0 + c1*x + ... + c_{n-1}*x^{n-1} is encoded as
sum(c_i * p**i), so prime-field arithmetic is plain arithmetic mod p.
The encoding fixes a total order on elements, which makes generator
selection, modulus selection and every file format deterministic.

All operations are pure functions of (spec, operands); FieldSpec is frozen
and hashable, so concurrent readers need no coordination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import lru_cache

DEFAULT_Q_LIMIT = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of GF(q) = GF(p^n).

    modulus: the monic degree-n modulus as coefficients (c0, ..., c_{n-1}, 1),
      low degree first; empty for prime fields.
    alpha: canonical generator of the multiplicative group, the smallest
      encoding of order q - 1.
    """

    p: int
    n: int
    modulus: tuple[int, ...]
    q: int
    alpha: int


def is_prime(m: int) -> bool:
    """Trial-division primality test; adequate for q <= 2**31."""
    if m < 2:
        return False
    for f in (2, 3):
        if m % f == 0:
            return m == f
    f = 5
    while f * f <= m:
        if m % f == 0 or m % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of m >= 1 as ((prime, multiplicity), ...)."""
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    out = []
    for f in itertools.chain((2,), itertools.count(3, 2)):
        if f * f > m:
            break
        if m % f == 0:
            mult = 0
            while m % f == 0:
                m //= f
                mult += 1
            out.append((f, mult))
    if m > 1:
        out.append((m, 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, low degree first


def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: list, b: list, p: int) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmulmod(a: list, b: list, f, p: int) -> list:
    """a * b reduced mod the monic polynomial f."""
    if not a or not b:
        return []
    n = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(len(prod) - 1, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] - c * f[j]) % p
    del prod[n:]
    return _ptrim(prod)


def _ppowmod(a: list, e: int, f, p: int) -> list:
    result = [1]
    base = a[:]
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, p)
    return result


def _pmod(a: list, b: list, p: int) -> list:
    a = a[:]
    binv = pow(b[-1], -1, p)
    db = len(b)
    while len(a) >= db:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * binv) % p
        shift = len(a) - db
        for j in range(db - 1):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a: list, b: list, p: int) -> list:
    a, b = a[:], b[:]
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f: list, p: int) -> bool:
    """Rabin test: x^(p^n) == x mod f, and x^(p^(n/l)) - x coprime to f
    for every prime l dividing n."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for ell, _ in factorize(n):
        g = _pgcd(_psub(_ppowmod(x, p ** (n // ell), f, p), x, p), f, p)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# element encoding


def element_coeffs(spec: FieldSpec, a: int) -> list[int]:
    """Residue-polynomial coefficients (c0, ..., c_{n-1}) of an encoding."""
    cs = []
    for _ in range(spec.n):
        a, c = divmod(a, spec.p)
        cs.append(c)
    return cs


def element_from_coeffs(spec: FieldSpec, coeffs) -> int:
    """Encoding of a coefficient sequence (low degree first, len <= n)."""
    v = 0
    for c in reversed(list(coeffs)):
        v = v * spec.p + c % spec.p
    return v


def embed(spec: FieldSpec, m: int) -> int:
    """The image of the rational integer m in the field (a constant)."""
    return m % spec.p


# ---------------------------------------------------------------------------
# field operations


def add(spec: FieldSpec, a: int, b: int) -> int:
    if spec.n == 1:
        return (a + b) % spec.p
    p = spec.p
    ca, cb = element_coeffs(spec, a), element_coeffs(spec, b)
    return element_from_coeffs(spec, [(x + y) % p for x, y in zip(ca, cb)])


def neg(spec: FieldSpec, a: int) -> int:
    if spec.n == 1:
        return -a % spec.p
    p = spec.p
    return element_from_coeffs(spec, [-c % p for c in element_coeffs(spec, a)])


def sub(spec: FieldSpec, a: int, b: int) -> int:
    if spec.n == 1:
        return (a - b) % spec.p
    return add(spec, a, neg(spec, b))


def mul(spec: FieldSpec, a: int, b: int) -> int:
    if spec.n == 1:
        return (a * b) % spec.p
    ca = _ptrim(element_coeffs(spec, a))
    cb = _ptrim(element_coeffs(spec, b))
    return element_from_coeffs(spec, _pmulmod(ca, cb, spec.modulus, spec.p))


def inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ValueError("0 has no multiplicative inverse")
    if spec.n == 1:
        return pow(a, -1, spec.p)
    return power(spec, a, spec.q - 2)


def power(spec: FieldSpec, a: int, e: int) -> int:
    """a**e by square-and-multiply; negative e inverts first."""
    if e < 0:
        return power(spec, inv(spec, a), -e)
    if spec.n == 1:
        return pow(a, e, spec.p)
    result, base = 1, a
    while e:
        if e & 1:
            result = mul(spec, result, base)
        e >>= 1
        if e:
            base = mul(spec, base, base)
    return result


def element_order(spec: FieldSpec, a: int) -> int:
    """Least m >= 1 with a**m == 1; divides q - 1."""
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    m = spec.q - 1
    for f, _ in factorize(m):
        while m % f == 0 and power(spec, a, m // f) == 1:
            m //= f
    return m


def chi(spec: FieldSpec, a: int) -> int:
    """Quadratic character: +1 on nonzero squares, -1 on nonsquares.

    chi(0) is undefined and raises.
    """
    if a == 0:
        raise ValueError("chi(0) is undefined")
    r = power(spec, a, (spec.q - 1) // 2)
    if r == 1:
        return 1
    assert r == spec.p - 1  # the only other square root of 1
    return -1


def sqrt(spec: FieldSpec, a: int) -> int:
    """A square root of a (Tonelli-Shanks with alpha as the nonsquare)."""
    if a == 0:
        return 0
    if chi(spec, a) != 1:
        raise ValueError(f"{a} is not a square in GF({spec.q})")
    t, s = spec.q - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = power(spec, spec.alpha, t)
    x = power(spec, a, (t + 1) // 2)
    b = mul(spec, mul(spec, x, x), inv(spec, a))
    while b != 1:
        m = 0
        bb = b
        while bb != 1:
            bb = mul(spec, bb, bb)
            m += 1
        g = power(spec, z, 1 << (s - m - 1))
        x = mul(spec, x, g)
        z = mul(spec, g, g)
        b = mul(spec, b, z)
        s = m
    assert mul(spec, x, x) == a
    return x


def nth_root_subgroup(spec: FieldSpec, k: int) -> tuple[int, list[int]]:
    """Generator and listing of the order-k multiplicative subgroup.

    Returns (beta, [1, beta, beta**2, ..., beta**(k-1)]) with
    beta = alpha**((q-1)/k). Requires k | q - 1.
    """
    q1 = spec.q - 1
    if k < 1 or q1 % k:
        raise ValueError(f"k = {k} does not divide q - 1 = {q1}")
    beta = power(spec, spec.alpha, q1 // k)
    block = [1]
    for _ in range(k - 1):
        block.append(mul(spec, block[-1], beta))
    assert len(set(block)) == k
    return beta, block


# ---------------------------------------------------------------------------
# field construction

_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def _has_full_order(spec: FieldSpec, a: int) -> bool:
    q1 = spec.q - 1
    for f, _ in factorize(q1):
        if power(spec, a, q1 // f) == 1:
            return False
    return True


def _smallest_generator(spec: FieldSpec) -> int:
    for a in range(2, spec.q):
        if _has_full_order(spec, a):
            return a
    raise RuntimeError(f"no generator found in GF({spec.q})")  # unreachable


def make_prime_field(p: int) -> FieldSpec:
    """GF(p) for an odd prime p, with the smallest primitive root."""
    cached = _FIELD_CACHE.get((p, 1))
    if cached is not None:
        return cached
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("the field order must be odd")
    spec = FieldSpec(p=p, n=1, modulus=(), q=p, alpha=0)
    spec = replace(spec, alpha=_smallest_generator(spec))
    _FIELD_CACHE[(p, 1)] = spec
    return spec


def make_extension_field(p: int, n: int, q_limit: int = DEFAULT_Q_LIMIT) -> FieldSpec:
    """GF(p^n) with the smallest modulus and generator.

    The modulus is the lexicographically smallest monic irreducible of
    degree n over GF(p), comparing coefficient tuples low degree first, so
    construction is reproducible without polynomial tables. n == 1
    delegates to make_prime_field.
    """
    if n < 1:
        raise ValueError(f"invalid extension degree {n}")
    if n == 1:
        return make_prime_field(p)
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    q = p**n
    if q > q_limit:
        raise ValueError(f"q = {q} exceeds the size limit {q_limit}")
    cached = _FIELD_CACHE.get((p, n))
    if cached is not None:
        return cached
    modulus = None
    for cs in itertools.product(range(p), repeat=n):
        if cs[0] == 0:
            continue  # divisible by x
        f = list(cs) + [1]
        if _is_irreducible(f, p):
            modulus = tuple(f)
            break
    assert modulus is not None  # irreducibles of every degree exist
    spec = FieldSpec(p=p, n=n, modulus=modulus, q=q, alpha=0)
    spec = replace(spec, alpha=_smallest_generator(spec))
    _FIELD_CACHE[(p, n)] = spec
    return spec


def field_for_order(q: int, q_limit: int = DEFAULT_Q_LIMIT) -> FieldSpec:
    """The field of order q (q an odd prime power)."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, n = fac[0]
    if n == 1:
        return make_prime_field(p)
    return make_extension_field(p, n, q_limit)
