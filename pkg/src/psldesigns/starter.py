"""Starter-block decisions for cyclic blocks under PSL(2,q).

Let B be the multiplicative subgroup of order k in GF(q), with cofactor
e = (q-1)/k. For e odd the PSL(2,q)-orbit of B is always a 3-design. For
e even (which requires q = 1 mod 4 here) it is one exactly when the signed
count of 3-subsets of B vanishes. The sign of a triple
{beta^a, beta^b, beta^c} is the product of chi(1 - beta^m) over the three
cyclic exponent gaps, so everything reduces to the character table
chi(1 - beta^m), m = 1..k-1, and the dihedral orbit decomposition of the
3-subsets of a cyclic group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from psldesigns import gf, projline

# A design-giving k with even cofactor must fall in these classes mod 24.
# One-directional: membership never replaces the signed count.
ADMISSIBLE_RESIDUES = frozenset({1, 2, 5, 10, 13, 17})


@dataclass(frozen=True)
class StarterContext:
    """A (q, k) pair with its subgroup and character table.

    chi_table[m] = chi(1 - beta**m) for 1 <= m < k, with chi_table[0] = 0
    as an unused sentinel. block lists the subgroup in power order.
    """

    spec: gf.FieldSpec
    k: int
    e: int
    alpha: int
    beta: int
    block: tuple[int, ...]
    chi_table: tuple[int, ...]


def make_starter_context(
    spec: gf.FieldSpec, k: int, alpha: int | None = None
) -> StarterContext:
    """Build the context for the order-k subgroup of GF(q).

    Requires k | q-1 and 3 < k < q-1. An even cofactor additionally
    requires q = 1 (mod 4); with an odd cofactor any odd q is accepted.
    `alpha` overrides the canonical generator (it must also have order q-1),
    which changes the character table but never the design outcome.
    """
    q = spec.q
    if (q - 1) % k:
        raise ValueError(f"k = {k} does not divide q - 1 = {q - 1}")
    if not 3 < k < q - 1:
        raise ValueError(f"k = {k} is outside the range 3 < k < q - 1 = {q - 1}")
    e = (q - 1) // k
    if e % 2 == 0 and q % 4 != 1:
        raise ValueError(
            f"even cofactor e = {e} requires q = 1 mod 4, but q = {q}"
        )
    if alpha is None:
        alpha = spec.alpha
    elif gf.element_order(spec, alpha) != q - 1:
        raise ValueError(f"alpha = {alpha} does not generate GF({q})*")
    beta = gf.power(spec, alpha, e)
    block = [1]
    for _ in range(k - 1):
        block.append(gf.mul(spec, block[-1], beta))
    table = [0]
    for b in block[1:]:
        table.append(gf.chi(spec, gf.sub(spec, 1, b)))
    return StarterContext(
        spec=spec,
        k=k,
        e=e,
        alpha=alpha,
        beta=beta,
        block=tuple(block),
        chi_table=tuple(table),
    )


# ---------------------------------------------------------------------------
# dihedral orbits of 3-subsets of a cyclic group


@dataclass(frozen=True)
class OrbitRep:
    """Representative {1, beta^i, beta^j} of a dihedral orbit of 3-subsets.

    kind 'A': three distinct exponent gaps, orbit length 2k.
    kind 'B': exactly two equal gaps ({1, beta^i, beta^2i}), length k.
    kind 'C': three equal gaps (only when 3 | k), length k/3.
    """

    kind: str
    i: int
    j: int
    length: int


def dihedral_orbit_reps(k: int) -> list[OrbitRep]:
    """Orbit representatives of the dihedral group of order 2k acting on
    3-subsets of exponents mod k. Lengths always sum to C(k, 3)."""
    if k < 4:
        raise ValueError(f"k = {k} is too small")
    reps = []
    # gaps d1 < d2 < d3 with d1 + d2 + d3 = k; rep exponents (0, d1, d1+d2)
    for d1 in range(1, (k - 3) // 3 + 1):
        for d2 in range(d1 + 1, (k - d1 - 1) // 2 + 1):
            reps.append(OrbitRep("A", d1, d1 + d2, 2 * k))
    for i in range(1, (k + 1) // 2):
        if 3 * i != k:
            reps.append(OrbitRep("B", i, 2 * i, k))
    if k % 3 == 0:
        reps.append(OrbitRep("C", k // 3, 2 * k // 3, k // 3))
    return reps


def rep_gaps(rep: OrbitRep, k: int) -> tuple[int, int, int]:
    """The cyclic exponent gaps (i, j-i, k-j) of a representative."""
    return (rep.i, rep.j - rep.i, k - rep.j)


def delta_of_rep(ctx: StarterContext, rep: OrbitRep) -> int:
    """Triple sign of a representative, constant on its dihedral orbit.

    The sign of {1, beta^i, beta^j} factors as the product of
    chi(1 - beta^g) over the three exponent gaps g. Only meaningful for an
    even cofactor, where the sign does not depend on the representative.
    """
    if ctx.e % 2:
        raise ValueError("triple signs are not orbit invariants for odd e")
    t = ctx.chi_table
    d1, d2, d3 = rep_gaps(rep, ctx.k)
    return t[d1] * t[d2] * t[d3]


def delta_sum(ctx: StarterContext) -> int:
    """Signed count of all C(k,3) 3-subsets of the block.

    Accumulated orbit by orbit (orbit length times representative sign);
    the inner gap enumeration is vectorized but exact (int64, values are
    bounded by C(k,3)).
    """
    if ctx.e % 2:
        raise ValueError("the signed count is only defined for even e")
    k = ctx.k
    x = np.asarray(ctx.chi_table, dtype=np.int64)
    total_a = 0
    for d1 in range(1, (k - 3) // 3 + 1):
        lo, hi = d1 + 1, (k - d1 - 1) // 2
        if hi < lo:
            continue
        seg = x[lo : hi + 1]
        partner = x[k - d1 - hi : k - d1 - lo + 1][::-1]
        total_a += int(x[d1]) * int(seg @ partner)
    total_b = 0
    for i in range(1, (k + 1) // 2):
        if 3 * i != k:
            total_b += int(x[k - 2 * i])
    total = 2 * k * total_a + k * total_b
    if k % 3 == 0:
        total += (k // 3) * int(x[k // 3])
    return total


def delta_sum_brute(ctx: StarterContext) -> int:
    """O(k^3) oracle for delta_sum: direct sign sum over all triples."""
    if ctx.e % 2:
        raise ValueError("the signed count is only defined for even e")
    return sum(
        projline.delta_finite(ctx.spec, t)
        for t in itertools.combinations(ctx.block, 3)
    )


def gives_design(ctx: StarterContext) -> bool:
    """Whether the block's PSL(2,q)-orbit is a 3-design.

    Always true for an odd cofactor (scaling by a nonsquare subgroup
    generator pairs the two triple classes inside the block); for an even
    cofactor, true exactly when the signed count vanishes.
    """
    if ctx.e % 2:
        return True
    return delta_sum(ctx) == 0


def admissible_k(k: int) -> bool:
    """Necessary residue condition mod 24 for a design with even cofactor."""
    return k % 24 in ADMISSIBLE_RESIDUES


def lambda_formula(k: int, e: int) -> int:
    """The design parameter lambda: (k-1)(k-2)/2 for e odd, /4 for e even.

    Raises for e even when (k-1)(k-2) is not divisible by 4; such k never
    give designs (cf. admissible_k).
    """
    m = (k - 1) * (k - 2)
    if e % 2:
        return m // 2
    if m % 4:
        raise ValueError(f"(k-1)(k-2) = {m} is not divisible by 4")
    return m // 4


# ---------------------------------------------------------------------------
# reduced character sequences


@dataclass(frozen=True)
class CharSequence:
    """The reduced character sequence deciding the design property.

    convention 'odd' (k odd): entries chi(1-beta^m) for m = 1..(k-1)/2.
    convention 'even2mod4' (k = 2 mod 4): chi(1-beta^m) for even
    m = 2, 4, ..., k/2-1, then chi(2) (every odd-exponent value factors
    through these). No sequence exists for k = 0 mod 4.
    """

    entries: tuple[int, ...]
    convention: str


def char_sequence(ctx: StarterContext) -> CharSequence:
    k, t = ctx.k, ctx.chi_table
    if k % 2 == 1:
        return CharSequence(tuple(t[m] for m in range(1, (k - 1) // 2 + 1)), "odd")
    if k % 4 == 2:
        # beta^(k/2) = -1, so t[k/2] = chi(2)
        entries = tuple(t[m] for m in range(2, k // 2, 2)) + (t[k // 2],)
        return CharSequence(entries, "even2mod4")
    raise ValueError("no character sequence is defined for k = 0 mod 4")


# ---------------------------------------------------------------------------
# the k in {5, 10} equivalences (q = 1 mod 20)


@dataclass(frozen=True)
class Thm510Conditions:
    """The seven equivalent design tests at k in {5, 10}.

    c6/c7 are the integer-representation tests, defined for prime q only
    (None otherwise). All applicable values agree for every valid q; a
    disagreement would falsify the implementation, not the input.
    """

    q: int
    c1: bool  # the order-5 subgroup starts a 3-design
    c2: bool  # the order-10 subgroup starts a 3-design
    c3: bool  # chi(1 + beta) == -1 for beta of order 5
    c4: bool  # the roots of x^2 - 4x - 1 are nonsquares
    c5: bool  # 5 is not a fourth power
    c6: bool | None  # no integers x, y with q = x^2 + 20 y^2
    c7: bool | None  # no integers x, y with q = x^2 + 100 y^2

    @property
    def applicable(self) -> dict[str, bool]:
        flags = {f"c{i}": True for i in range(1, 6)}
        flags["c6"] = self.c6 is not None
        flags["c7"] = self.c7 is not None
        return flags

    def values(self) -> list[bool]:
        out = [self.c1, self.c2, self.c3, self.c4, self.c5]
        if self.c6 is not None:
            out.append(self.c6)
        if self.c7 is not None:
            out.append(self.c7)
        return out

    def all_agree(self) -> bool:
        vs = self.values()
        return all(vs) or not any(vs)


def _has_representation(m: int, c: int) -> bool:
    """Does m = x^2 + c*y^2 for integers x, y?"""
    import math

    y = 0
    while c * y * y <= m:
        r = m - c * y * y
        s = math.isqrt(r)
        if s * s == r:
            return True
        y += 1
    return False


def _quadratic_root_nonsquare(spec: gf.FieldSpec, beta: int) -> bool:
    """Whether the roots of x^2 - 4x - 1 are nonsquares.

    The roots are 2 +/- s with s^2 = 5; a root of 5 always exists here
    because beta*(1-beta)^2*(1+beta) squares to 5 when beta has order 5.
    Both quadratic roots are checked (their characters agree).
    """
    five = gf.embed(spec, 5)
    s = gf.sqrt(spec, five)
    explicit = gf.mul(
        spec,
        gf.mul(spec, beta, gf.power(spec, gf.sub(spec, 1, beta), 2)),
        gf.add(spec, 1, beta),
    )
    assert gf.mul(spec, explicit, explicit) == five
    two = gf.embed(spec, 2)
    roots = (gf.add(spec, two, s), gf.sub(spec, two, s))
    theta0 = gf.add(
        spec,
        gf.mul(spec, two, gf.add(spec, gf.power(spec, beta, 4), beta)),
        gf.embed(spec, 3),
    )
    assert theta0 in roots
    for th in roots:
        # th^2 - 4*th - 1 == 0
        val = gf.sub(spec, gf.sub(spec, gf.mul(spec, th, th), gf.mul(spec, gf.embed(spec, 4), th)), 1)
        assert val == 0
    return any(gf.chi(spec, th) == -1 for th in roots)


def thm510_conditions(spec: gf.FieldSpec, alpha: int | None = None) -> Thm510Conditions:
    """Evaluate all seven design characterizations for k in {5, 10}.

    Requires q = 1 (mod 20). The outcome does not depend on the choice of
    generator alpha.
    """
    q = spec.q
    if q % 20 != 1:
        raise ValueError(f"q = {q} is not 1 mod 20")
    ctx5 = make_starter_context(spec, 5, alpha=alpha)
    ctx10 = make_starter_context(spec, 10, alpha=alpha)
    beta = ctx5.beta
    five = gf.embed(spec, 5)
    c1 = gives_design(ctx5)
    c2 = gives_design(ctx10)
    c3 = gf.chi(spec, gf.add(spec, 1, beta)) == -1
    c4 = _quadratic_root_nonsquare(spec, beta)
    c5 = gf.power(spec, five, (q - 1) // 4) != 1
    c6 = c7 = None
    if spec.n == 1:
        c6 = not _has_representation(q, 20)
        c7 = not _has_representation(q, 100)
    return Thm510Conditions(q, c1, c2, c3, c4, c5, c6, c7)


# ---------------------------------------------------------------------------
# the k in {13, 26} sequence test (q = 1 mod 52)

_BASE_13_PATTERNS = (
    (1, 1, -1, 1, -1, -1),
    (1, 1, -1, -1, -1, 1),
    (1, -1, 1, 1, -1, -1),
    (1, -1, 1, -1, -1, 1),
)
SEQ_13_PATTERNS = frozenset(
    _BASE_13_PATTERNS + tuple(tuple(-v for v in s) for s in _BASE_13_PATTERNS)
)


@dataclass(frozen=True)
class Thm1326Result:
    q: int
    holds: bool
    sequence: CharSequence


def thm1326_condition(spec: gf.FieldSpec, alpha: int | None = None) -> Thm1326Result:
    """The k in {13, 26} design test via the six-entry character sequence.

    Requires q = 1 (mod 52). holds is true exactly when the order-13 (and
    equivalently order-26) subgroup starts a 3-design: the sequence must
    fall, up to global sign, among four patterns.
    """
    if spec.q % 52 != 1:
        raise ValueError(f"q = {spec.q} is not 1 mod 52")
    ctx = make_starter_context(spec, 13, alpha=alpha)
    seq = char_sequence(ctx)
    return Thm1326Result(spec.q, seq.entries in SEQ_13_PATTERNS, seq)
