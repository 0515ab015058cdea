"""Parameter sweeps over primes and prime powers for the starter criterion.

The sweep condition q = 1 (mod lcm(4, 2k)) is exactly "k divides q-1, the
cofactor is even, and q = 1 mod 4". Odd-cofactor pairs always give
designs, so the interesting tables fix k and ask which q of this shape
succeed. Sweeps decide via the orbit-rep signed count only; explicit
expansion stays in the design module.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt, lcm

from psldesigns import gf, starter

# Bounds behind the "no further coincident (k, 2k) pair" report.
PAIR_SCAN_K_MAX = 60
PAIR_SCAN_Q_MAX = 2 * 10**5


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit (plain Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def enumerate_prime_powers(limit: int) -> list[tuple[int, int, int]]:
    """All prime powers p^n <= limit as (p, n, q), sorted by q."""
    out = []
    for p in sieve_primes(limit):
        q, n = p, 1
        while q <= limit:
            out.append((p, n, q))
            q *= p
            n += 1
    return sorted(out, key=lambda t: t[2])


def sweep_modulus(k: int) -> int:
    """q must be 1 mod this for the order-k subgroup to have even cofactor
    in a q = 1 mod 4 field: lcm(4, 2k)."""
    return lcm(4, 2 * k)


@dataclass(frozen=True)
class SweepResult:
    k: int
    bound: int
    hits: tuple[int, ...]


@dataclass(frozen=True)
class SweepEntry:
    """Outcome at a single candidate q (a row of the CSV table)."""

    k: int
    q: int
    p: int
    n: int
    e: int
    gives_design: bool
    lam: int | None


def _sweep_candidates(
    k: int, q_max: int, include_prime_powers: bool
) -> list[tuple[int, int, int]]:
    m = sweep_modulus(k)
    out = []
    for p, n, q in enumerate_prime_powers(q_max):
        if not include_prime_powers and n > 1:
            continue
        if q % m == 1 and q > k + 1:
            out.append((p, n, q))
    return out


def _sweep_one(args: tuple[int, int, int, int]) -> SweepEntry:
    k, p, n, q = args
    spec = gf.field_for_order(q)
    ctx = starter.make_starter_context(spec, k)
    ok = starter.gives_design(ctx)
    lam = starter.lambda_formula(k, ctx.e) if ok else None
    return SweepEntry(k=k, q=q, p=p, n=n, e=ctx.e, gives_design=ok, lam=lam)


def sweep_entries(
    k: int,
    q_max: int,
    include_prime_powers: bool = False,
    threads: int = 1,
) -> list[SweepEntry]:
    """Evaluate the criterion at every candidate q <= q_max with
    q = 1 mod lcm(4, 2k), in increasing q order. Parallel evaluation
    never reorders output."""
    jobs = [
        (k, p, n, q) for p, n, q in _sweep_candidates(k, q_max, include_prime_powers)
    ]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_sweep_one, jobs))
    return [_sweep_one(job) for job in jobs]


def sweep(
    k: int,
    q_max: int,
    include_prime_powers: bool = False,
    threads: int = 1,
) -> SweepResult:
    """The ascending q <= q_max (primes by default) where the order-k
    subgroup with even cofactor starts a 3-design. Empty for inadmissible
    k, which is the empirical content of the residue filter."""
    hits = tuple(
        ent.q
        for ent in sweep_entries(k, q_max, include_prime_powers, threads)
        if ent.gives_design
    )
    return SweepResult(k=k, bound=q_max, hits=hits)


SWEEP_TABLE_KS = (5, 10, 13, 17, 25, 26, 29, 34, 37, 41, 49, 50, 53, 58)


def sweep_rows(
    ks: tuple[int, ...] | list[int],
    q_max: int,
    include_prime_powers: bool = False,
    threads: int = 1,
) -> list[dict[str, object]]:
    """Flat dict rows for CSV/JSON emission, one per candidate q."""
    rows = []
    for k in ks:
        for ent in sweep_entries(k, q_max, include_prime_powers, threads):
            rows.append(
                {
                    "k": ent.k,
                    "k_mod_24": ent.k % 24,
                    "q": ent.q,
                    "p": ent.p,
                    "n": ent.n,
                    "e_parity": "even" if ent.e % 2 == 0 else "odd",
                    "lambda": ent.lam if ent.lam is not None else "",
                    "gives_design": ent.gives_design,
                }
            )
    return rows


# ---------------------------------------------------------------------------
# pair coincidence


@dataclass(frozen=True)
class PairScan:
    k1: int
    k2: int
    q_max: int
    hits1: tuple[int, ...]
    hits2: tuple[int, ...]
    first_divergence: int | None

    @property
    def coincide(self) -> bool:
        return self.first_divergence is None


def verify_pair_coincidence(
    k1: int, k2: int, q_max: int, threads: int = 1
) -> PairScan:
    """Compare the design-giving q of two k values up to q_max.

    Each k is swept over its own candidate shape, so unrelated k diverge
    quickly: k1 = 5 vs k2 = 13 diverges at q = 41, a hit for 5 that is
    not even a candidate for 13. first_divergence is the smallest q in
    the symmetric difference, None if the hit lists agree.
    """
    h1 = sweep(k1, q_max, threads=threads).hits
    h2 = sweep(k2, q_max, threads=threads).hits
    diff = set(h1) ^ set(h2)
    return PairScan(
        k1=k1,
        k2=k2,
        q_max=q_max,
        hits1=h1,
        hits2=h2,
        first_divergence=min(diff) if diff else None,
    )


def coincident_pair_report(
    k_max: int = PAIR_SCAN_K_MAX,
    q_max: int = PAIR_SCAN_Q_MAX,
    threads: int = 1,
) -> list[PairScan]:
    """Scan every admissible pair (k, 2k) with 2k <= k_max for hit-set
    coincidence up to q_max. A bounded observation, not a proof: the
    report states its bounds and nothing beyond them."""
    scans = []
    for k in range(4, k_max // 2 + 1):
        if starter.admissible_k(k) and starter.admissible_k(2 * k):
            scans.append(verify_pair_coincidence(k, 2 * k, q_max, threads=threads))
    return scans


# ---------------------------------------------------------------------------
# lifting to extension fields


@dataclass(frozen=True)
class LiftCheck:
    q: int
    k: int
    n: int
    base: bool
    lifted_q: int
    lifted: bool

    @property
    def consistent(self) -> bool:
        """Odd-degree lifts preserve the design property; even-degree
        lifts never give one."""
        if self.n % 2 == 0:
            return not self.lifted
        return self.lifted if self.base else True


def _pair_gives_design(q: int, k: int) -> bool:
    """Criterion outcome for (q, k); False (not an error) when the pair
    is not a valid starter configuration at all."""
    try:
        spec = gf.field_for_order(q)
    except ValueError:
        return False
    if (q - 1) % k or not 3 < k < q - 1:
        return False
    if ((q - 1) // k) % 2 == 0 and q % 4 != 1:
        return False
    return starter.gives_design(starter.make_starter_context(spec, k))


def lift_check(q: int, k: int, n: int) -> LiftCheck:
    """Evaluate the criterion at q and at q^n and report both outcomes."""
    if n < 1:
        raise ValueError(f"lift degree must be positive, got {n}")
    return LiftCheck(
        q=q,
        k=k,
        n=n,
        base=_pair_gives_design(q, k),
        lifted_q=q**n,
        lifted=_pair_gives_design(q**n, k),
    )


# ---------------------------------------------------------------------------
# equivalence sweeps for the special-k characterizations


@dataclass(frozen=True)
class EquivalenceReport:
    """All-conditions check over every prime p = 1 mod m up to the bound.

    hits are the primes where the (agreeing) conditions are true;
    disagreements would falsify the characterization and are expected to
    stay empty.
    """

    name: str
    bound: int
    checked: int
    hits: tuple[int, ...]
    disagreements: tuple[int, ...]

    @property
    def all_consistent(self) -> bool:
        return not self.disagreements


def _thm510_case(p: int) -> tuple[int, bool, bool]:
    conds = starter.thm510_conditions(gf.field_for_order(p))
    vs = conds.values()
    return p, all(vs) or not any(vs), conds.c1


def _thm1326_case(p: int) -> tuple[int, bool, bool]:
    spec = gf.field_for_order(p)
    res = starter.thm1326_condition(spec)
    d13 = starter.gives_design(starter.make_starter_context(spec, 13))
    d26 = starter.gives_design(starter.make_starter_context(spec, 26))
    return p, res.holds == d13 == d26, d13


def thm_equivalence_sweep(
    name: str, p_max: int, threads: int = 1
) -> EquivalenceReport:
    """Check one characterization at every applicable prime up to p_max.

    name 'thm510': the seven k in {5, 10} conditions at p = 1 mod 20.
    name 'thm1326': sequence test vs the direct criterion at k = 13 and
    k = 26, at p = 1 mod 52.
    """
    if name == "thm510":
        modulus, case = 20, _thm510_case
    elif name == "thm1326":
        modulus, case = 52, _thm1326_case
    else:
        raise ValueError(f"unknown equivalence sweep: {name!r}")
    ps = [p for p in sieve_primes(p_max) if p % modulus == 1]
    if threads > 1 and len(ps) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(case, ps))
    else:
        results = [case(p) for p in ps]
    hits = tuple(p for p, agree, hit in results if agree and hit)
    bad = tuple(p for p, agree, _ in results if not agree)
    return EquivalenceReport(
        name=name,
        bound=p_max,
        checked=len(ps),
        hits=hits,
        disagreements=bad,
    )
