"""The semilinear group of GF(q^n) over GF(q) and its norm-one machinery.

A semilinear map is a pair (twist, scalar) acting on the field by
v -> a * v^(q^twist), with 0 -> 0.  The scalar a is a nonzero field element
stored as its exponent; twist is reduced mod n.  Maps with twist 0 are the
multiplications, which act fixed-point-freely on nonzero vectors; the full
group has order n * (q^n - 1).

On top of the group law this module provides the norm-one subgroup N of a
prime-order Galois subgroup, preimages under y -> sigma(y)/y, the prime
structure of N, conjugation of a subgroup into a standard position holding
pure Galois elements, the algebraic criterion deciding whether a subgroup
has a regular orbit, and the covering-prime certificate for subgroups
without one.
"""

from dataclasses import dataclass
from math import gcd

from . import config
from .arith import factorization, is_prime, solve_linear_congruence
from .errors import (
    ConstructionFailed,
    ElementCapExceeded,
    HasRegularOrbit,
    NotASubgroup,
    NotInGqn,
    NotInN,
    SNotDividingN,
)
from .field import ZERO, FieldContext

SemilinearMap = tuple[int, int]  # (twist, scalar exponent)

IDENTITY: SemilinearMap = (0, 0)


def validate_map(ctx: FieldContext, f: SemilinearMap) -> None:
    t, e = f
    if not (0 <= t < ctx.n and 0 <= e < max(ctx.order, 1)):
        raise NotInGqn(f"map {f} is not a valid element over {ctx!r}")


def compose(ctx: FieldContext, f: SemilinearMap, g: SemilinearMap) -> SemilinearMap:
    """(f o g)(v) = f(g(v)); the law is (t1+t2, a1 * a2^(q^t1))."""
    t1, e1 = f
    t2, e2 = g
    m = ctx.order
    if m <= 1:
        return ((t1 + t2) % ctx.n, 0)
    return ((t1 + t2) % ctx.n, (e1 + e2 * ctx.pow_q[t1]) % m)


def inverse(ctx: FieldContext, f: SemilinearMap) -> SemilinearMap:
    t, e = f
    ti = (ctx.n - t) % ctx.n
    m = ctx.order
    if m <= 1:
        return (ti, 0)
    return (ti, (-e * ctx.pow_q[ti]) % m)


def apply_map(ctx: FieldContext, f: SemilinearMap, v: int) -> int:
    """Image of the field element v (exponent form, ZERO for zero)."""
    if v == ZERO:
        return ZERO
    t, e = f
    m = ctx.order
    return (v * ctx.pow_q[t] + e) % m if m > 1 else 0


def element_order(ctx: FieldContext, f: SemilinearMap) -> int:
    k = 1
    acc = f
    while acc != IDENTITY:
        acc = compose(ctx, acc, f)
        k += 1
    return k


def conjugate_by_scalar(ctx: FieldContext, z: int, f: SemilinearMap) -> SemilinearMap:
    """z f z^{-1} where z is a nonzero field element (exponent form)."""
    t, e = f
    m = ctx.order
    if m <= 1:
        return f
    # scalar picks up z^(1 - q^t)
    return (t, (e + z * (1 - ctx.pow_q[t])) % m)


def scalar_maps(ctx: FieldContext) -> tuple[SemilinearMap, ...]:
    """The multiplication subgroup (twist 0), of order q^n - 1."""
    return tuple((0, e) for e in range(max(ctx.order, 1)))


def galois_maps(ctx: FieldContext) -> tuple[SemilinearMap, ...]:
    """The pure Galois subgroup (scalar 1), of order n."""
    return tuple((t, 0) for t in range(ctx.n))


def full_group(ctx: FieldContext) -> tuple[SemilinearMap, ...]:
    """All of the semilinear group, order n * (q^n - 1)."""
    return tuple((t, e) for t in range(ctx.n) for e in range(max(ctx.order, 1)))


def subgroup_closure(ctx: FieldContext, generators, cap: int | None = None) -> tuple[SemilinearMap, ...]:
    """Closure of the generators under composition, sorted canonically."""
    if cap is None:
        cap = config.element_cap()
    gens = []
    for g in generators:
        g = (int(g[0]), int(g[1]))
        validate_map(ctx, g)
        if g not in gens:
            gens.append(g)
    n, m, pow_q = ctx.n, ctx.order, ctx.pow_q
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new = []
        for t1, e1 in frontier:
            w = pow_q[t1]
            for t2, e2 in gens:
                c = ((t1 + t2) % n, (e1 + e2 * w) % m) if m > 1 else ((t1 + t2) % n, 0)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise ElementCapExceeded(f"closure exceeded the element cap {cap}")
                    new.append(c)
        frontier = new
    return tuple(sorted(seen))


def _as_subgroup(ctx: FieldContext, maps, assume_subgroup: bool = False) -> tuple[SemilinearMap, ...]:
    elems = tuple(sorted({(int(f[0]), int(f[1])) for f in maps}))
    if not elems:
        raise NotASubgroup("empty set is not a subgroup")
    for f in elems:
        validate_map(ctx, f)
    if assume_subgroup:
        return elems
    members = set(elems)
    if IDENTITY not in members:
        raise NotASubgroup("the identity map is missing")
    for f in elems:
        for g in elems:
            if compose(ctx, f, g) not in members:
                raise NotASubgroup(f"not closed: {f} o {g} escapes the set")
    return elems


# -- norm-one subgroups --

@dataclass(frozen=True)
class NormOneSubgroup:
    """Kernel N of the norm of the order-s Galois subgroup, as exponents."""
    s: int
    order: int
    generator: int
    elements: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        if x == ZERO:
            return False
        if self.order == 1:
            return x == 0
        return x % self.elements[1] == 0


def norm_one_subgroup(ctx: FieldContext, s: int) -> NormOneSubgroup:
    """N = {x : product of <sigma>-conjugates of x is 1}, sigma of order s.

    N is the unique subgroup of order (q^n - 1)/(q^(n/s) - 1) of the cyclic
    multiplicative group: exactly the exponent multiples of q^(n/s) - 1.
    """
    if not is_prime(s) or ctx.n % s != 0:
        raise SNotDividingN(f"s = {s} must be a prime dividing n = {ctx.n}")
    step = ctx.q ** (ctx.n // s) - 1
    size = ctx.order // step
    elements = tuple(range(0, ctx.order, step))
    assert len(elements) == size
    return NormOneSubgroup(s=s, order=size, generator=step if size > 1 else 0,
                           elements=elements)


def norm_kernel_preimage(ctx: FieldContext, s: int, x: int) -> int:
    """Smallest y (by exponent) with sigma(y)/y = x, sigma canonical of order s."""
    if not is_prime(s) or ctx.n % s != 0:
        raise SNotDividingN(f"s = {s} must be a prime dividing n = {ctx.n}")
    if x == ZERO:
        raise NotInN("zero is not in the norm-one subgroup")
    step = ctx.q ** (ctx.n // s) - 1
    y = solve_linear_congruence(step, x % ctx.order, ctx.order)
    if y is None:
        raise NotInN(f"element g^{x} has nontrivial norm")
    return y


@dataclass(frozen=True)
class PrimeEntry:
    prime: int
    multiplicity: int
    congruence_holds: bool       # prime == s or prime = 1 (mod s)
    witness: int | None          # exponent of an element of that prime order
    frobenius_confirmed: bool | None  # <sigma><b> is Frobenius with kernel <b>


@dataclass(frozen=True)
class NormPrimeAnalysis:
    s: int
    subgroup_order: int
    factors: tuple[PrimeEntry, ...]


def norm_subgroup_prime_analysis(ctx: FieldContext, s: int) -> NormPrimeAnalysis:
    """Prime factorization of |N| with the Frobenius-structure confirmations.

    For each prime r != s dividing |N| a witness b of order r is checked
    directly: no nonidentity power of sigma centralizes a nonidentity power
    of b under conjugation, so <sigma><b> is a Frobenius group of order s*r
    with kernel <b>.  Every r satisfies r >= s and r == s or r = 1 (mod s).
    """
    n_sub = norm_one_subgroup(ctx, s)
    entries = []
    for r, mult in sorted(factorization(n_sub.order).items()):
        cong = r >= s and (r == s or r % s == 1)
        assert cong, f"prime structure violated: r={r}, s={s} over {ctx!r}"
        if r == s:
            entries.append(PrimeEntry(r, mult, cong, None, None))
            continue
        b = (n_sub.generator * (n_sub.order // r)) % ctx.order
        assert element_order(ctx, (0, b)) == r
        frob = _frobenius_pair_confirmed(ctx, s, b, r)
        assert frob, f"Frobenius structure violated for r={r}, s={s} over {ctx!r}"
        entries.append(PrimeEntry(r, mult, cong, b, frob))
    return NormPrimeAnalysis(s=s, subgroup_order=n_sub.order, factors=tuple(entries))


def _frobenius_pair_confirmed(ctx: FieldContext, s: int, b: int, r: int) -> bool:
    """Check <sigma><b> has order s*r and sigma-powers centralize nothing in <b>."""
    sigma = (ctx.n // s, 0)
    elems = set()
    for i in range(s):
        for j in range(r):
            si = _map_power(ctx, sigma, i)
            bj = (0, (b * j) % ctx.order)
            elems.add(compose(ctx, si, bj))
    if len(elems) != s * r:
        return False
    for i in range(1, s):
        w = ctx.pow_q[(ctx.n // s) * i % ctx.n]
        for j in range(1, r):
            # sigma^i b^j sigma^-i = b^(j * q^((n/s) i)); centralized iff equal
            if (b * j * (w - 1)) % ctx.order == 0:
                return False
    return True


def _map_power(ctx: FieldContext, f: SemilinearMap, k: int) -> SemilinearMap:
    acc = IDENTITY
    for _ in range(k):
        acc = compose(ctx, acc, f)
    return acc


# -- standardization (conjugating Galois parts into pure position) --

@dataclass(frozen=True)
class Standardization:
    """A conjugate subgroup holding a pure Galois element per relevant prime."""
    subgroup: tuple[SemilinearMap, ...]
    conjugator: int                       # exponent z; A1 = z A z^{-1}
    pure_by_prime: dict[int, SemilinearMap]


def outside_prime_orders(ctx: FieldContext, elems) -> tuple[int, ...]:
    """Primes s such that the set has an element of order s outside the multiplications."""
    primes = set()
    for f in elems:
        if f[0] != 0:
            o = element_order(ctx, f)
            if is_prime(o):
                primes.add(o)
    return tuple(sorted(primes))


def standardize_subgroup(ctx: FieldContext, maps, assume_subgroup: bool = False) -> Standardization:
    """Conjugate A inside the full group so that for every prime s with an
    order-s element outside the multiplications, the conjugate contains a
    pure Galois element of order s.

    Follows the iterative replacement scheme: primes are processed in
    increasing order, each step conjugating by a scalar z solved from
    (q^t - 1) * z = a in exponent form, with z constrained to the fixed
    field of the pure elements already secured.  A full scalar-conjugator
    scan is kept as a fallback; a failure of both would contradict the
    underlying theory and raises ConstructionFailed.
    """
    elems = _as_subgroup(ctx, maps, assume_subgroup)
    primes = outside_prime_orders(ctx, elems)
    work = list(elems)
    conj = 0  # exponent of the accumulated conjugator, 0 = identity scalar
    secured: dict[int, SemilinearMap] = {}
    fixed_deg = ctx.n  # z must lie in GF(q^fixed_deg)
    for s in primes:
        pure = _find_pure(ctx, work, s)
        if pure is None:
            z = _pure_making_conjugator(ctx, work, s, fixed_deg)
            if z is None:
                return _standardize_fallback(ctx, elems, primes)
            work = [conjugate_by_scalar(ctx, z, f) for f in work]
            conj = (conj + z) % ctx.order
            pure = _find_pure(ctx, work, s)
            assert pure is not None
        secured[s] = pure
        fixed_deg = gcd(fixed_deg, gcd(pure[0], ctx.n))
    result = tuple(sorted(work))
    _check_standardized(ctx, result, primes)
    return Standardization(subgroup=result, conjugator=conj, pure_by_prime=secured)


def _find_pure(ctx: FieldContext, elems, s: int) -> SemilinearMap | None:
    for f in sorted(elems):
        if f[0] != 0 and f[1] == 0 and element_order(ctx, f) == s:
            return f
    return None


def _pure_making_conjugator(ctx: FieldContext, elems, s: int, fixed_deg: int) -> int | None:
    """Scalar z in GF(q^fixed_deg) conjugating some order-s element pure."""
    if ctx.order <= 1:
        return None
    step = ctx.order // (ctx.q ** fixed_deg - 1)
    for t, e in sorted(elems):
        if t == 0 or element_order(ctx, (t, e)) != s:
            continue
        # z f z^{-1} pure needs (q^t - 1) * z = e (mod q^n - 1)
        z = solve_linear_congruence(ctx.pow_q[t] - 1, e, ctx.order, step=step)
        if z is not None:
            assert z % step == 0
            return z
    return None


def _standardize_fallback(ctx: FieldContext, elems, primes) -> Standardization:
    for z in range(max(ctx.order, 1)):
        work = tuple(sorted(conjugate_by_scalar(ctx, z, f) for f in elems))
        secured = {}
        for s in primes:
            pure = _find_pure(ctx, work, s)
            if pure is None:
                break
            secured[s] = pure
        else:
            return Standardization(subgroup=work, conjugator=z, pure_by_prime=secured)
    raise ConstructionFailed(f"no scalar conjugate of the subgroup is standard over {ctx!r}")


def _check_standardized(ctx: FieldContext, elems, primes) -> None:
    for s in primes:
        if _find_pure(ctx, elems, s) is None:
            raise ConstructionFailed(f"standardization left no pure element of order {s}")


# -- the regular-orbit criterion and the covering certificate --

@dataclass(frozen=True)
class RegularOrbitDecision:
    """Outcome of the algebraic regular-orbit test for A acting on GF(q^n).

    When a regular orbit exists, regular_vector is the smallest point code
    (0 for the zero vector, e+1 for g^e) with trivial stabilizer; otherwise
    failing_prime is a prime s whose norm-one subgroup lies inside
    A intersect (multiplications).
    """
    has_regular_orbit: bool
    regular_vector: int | None
    failing_prime: int | None
    subgroup_order: int

    def to_json_dict(self) -> dict:
        return {
            "has_regular_orbit": self.has_regular_orbit,
            "regular_vector": self.regular_vector,
            "failing_prime": self.failing_prime,
            "subgroup_order": self.subgroup_order,
        }


def regular_orbit_criterion(ctx: FieldContext, maps, assume_subgroup: bool = False,
                            workers: int = 1) -> RegularOrbitDecision:
    """Decide whether the subgroup has a regular orbit on GF(q^n).

    The decision is purely algebraic: after standardization, a regular
    orbit exists iff no relevant prime s has its whole norm-one subgroup
    inside B = A intersect (multiplications).  The witness vector, when one
    exists, is found by an ascending scan and is therefore canonical.
    """
    std = standardize_subgroup(ctx, maps, assume_subgroup)
    elems = std.subgroup
    b_exponents = {e for t, e in elems if t == 0}
    primes = outside_prime_orders(ctx, elems)
    for s in primes:
        n_sub = norm_one_subgroup(ctx, s)
        if all(e in b_exponents for e in n_sub.elements):
            return RegularOrbitDecision(False, None, s, len(elems))
    witness = _smallest_regular_point(ctx, elems, workers)
    if witness is None:
        raise ConstructionFailed("criterion affirmed a regular orbit but none was found")
    return RegularOrbitDecision(True, witness, None, len(elems))


def _point_of_code(code: int) -> int:
    return ZERO if code == 0 else code - 1


def _smallest_regular_point(ctx: FieldContext, elems, workers: int = 1) -> int | None:
    """Smallest point code whose stabilizer in the subgroup is trivial."""
    nontrivial = [f for f in elems if f != IDENTITY]
    size = ctx.size

    def scan(lo: int, hi: int) -> int | None:
        for code in range(lo, hi):
            v = _point_of_code(code)
            if all(apply_map(ctx, f, v) != v for f in nontrivial):
                return code
        return None

    if workers <= 1 or size < 1024:
        return scan(0, size)
    from concurrent.futures import ThreadPoolExecutor
    bounds = _chunks(size, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda b: scan(*b), bounds))
    hits = [r for r in results if r is not None]
    return min(hits) if hits else None


def _chunks(size: int, workers: int) -> list[tuple[int, int]]:
    span = (size + workers - 1) // workers
    return [(lo, min(lo + span, size)) for lo in range(0, size, span)]


@dataclass(frozen=True)
class CoveringWitness:
    """For each point of GF(q^n), an order-s element of A fixing it."""
    prime: int
    fixers: tuple[SemilinearMap, ...]  # indexed by point code


def covering_prime_witness(ctx: FieldContext, maps, assume_subgroup: bool = False,
                           workers: int = 1) -> CoveringWitness:
    """Certificate that a single prime s covers every vector with a fixer.

    Requires the subgroup to have no regular orbit (checked by brute force,
    raising HasRegularOrbit otherwise).  Returns the smallest prime s for
    which every point of the field is fixed by some order-s element, with
    the first such element per point.
    """
    elems = _as_subgroup(ctx, maps, assume_subgroup)
    if _smallest_regular_point(ctx, elems, workers) is not None:
        raise HasRegularOrbit("the subgroup has a regular orbit; no covering prime exists")
    orders = {f: element_order(ctx, f) for f in elems}
    for s in outside_prime_orders(ctx, elems):
        of_order_s = [f for f in elems if orders[f] == s]
        fixers = []
        for code in range(ctx.size):
            v = _point_of_code(code)
            fixer = next((f for f in of_order_s if apply_map(ctx, f, v) == v), None)
            if fixer is None:
                break
            fixers.append(fixer)
        else:
            return CoveringWitness(prime=s, fixers=tuple(fixers))
    raise ConstructionFailed("no covering prime found; contradicts the covering theorem")


# -- exhaustive survey of 1- and 2-generated subgroups (for small fields) --

def small_subgroup_survey(ctx: FieldContext) -> list[tuple[tuple[SemilinearMap, ...], tuple[SemilinearMap, ...]]]:
    """Every subgroup of the full semilinear group generated by at most two
    elements, as (elements, generators) pairs with canonical generators.

    Deduplicates the |G|^2 generating pairs through a numpy multiplication
    table, so it stays fast up to |G| of a few hundred.
    """
    import numpy as np

    els = full_group(ctx)
    count = len(els)
    index = {g: i for i, g in enumerate(els)}
    n, m, pow_q = ctx.n, ctx.order, ctx.pow_q
    table = np.empty((count, count), dtype=np.int32)
    for i, (t1, e1) in enumerate(els):
        w = pow_q[t1]
        if m > 1:
            table[i] = [index[((t1 + t2) % n, (e1 + e2 * w) % m)] for t2, e2 in els]
        else:
            table[i] = [index[((t1 + t2) % n, 0)] for t2, e2 in els]

    def close(gens: tuple[int, ...], start: "np.ndarray | None" = None) -> "np.ndarray":
        members = np.zeros(count, dtype=bool)
        gen_arr = np.unique(np.array(gens, dtype=np.int64))
        frontier = gen_arr if start is None else np.unique(start)
        members[frontier] = True
        while frontier.size:
            prods = np.unique(table[np.ix_(frontier, gen_arr)])
            frontier = prods[~members[prods]]
            members[frontier] = True
        return members

    # <a, b> depends only on <a> | <b>, so generating pairs whose cyclic
    # closures repeat an earlier pair can be skipped outright
    cyclic = [close((i,)) for i in range(count)]
    cyclic_key = {}
    cyclic_id = []
    for i in range(count):
        key = np.packbits(cyclic[i]).tobytes()
        cyclic_id.append(cyclic_key.setdefault(key, len(cyclic_key)))
    seen_pairs: set[tuple[int, int]] = set()
    seen: dict[bytes, tuple] = {}
    for i in range(count):
        for j in range(i, count):
            pair = (min(cyclic_id[i], cyclic_id[j]), max(cyclic_id[i], cyclic_id[j]))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            union = np.flatnonzero(cyclic[i] | cyclic[j])
            members = close((i, j), start=union)
            key = np.packbits(members).tobytes()
            if key not in seen:
                elements = tuple(els[k] for k in np.flatnonzero(members))
                seen[key] = (elements, (els[i], els[j]))
    return list(seen.values())


def gn_subgroup(ctx: FieldContext, s: int) -> tuple[SemilinearMap, ...]:
    """The obstruction group: order-s Galois subgroup extending the norm-one N."""
    n_sub = norm_one_subgroup(ctx, s)
    twists = range(0, ctx.n, ctx.n // s)
    return tuple(sorted((t, e) for t in twists for e in n_sub.elements))


__all__ = [
    "SemilinearMap", "IDENTITY", "compose", "inverse", "apply_map",
    "element_order", "conjugate_by_scalar", "scalar_maps", "galois_maps",
    "full_group", "subgroup_closure", "gn_subgroup",
    "NormOneSubgroup", "norm_one_subgroup", "norm_kernel_preimage",
    "NormPrimeAnalysis", "PrimeEntry", "norm_subgroup_prime_analysis",
    "Standardization", "standardize_subgroup", "outside_prime_orders",
    "RegularOrbitDecision", "regular_orbit_criterion",
    "CoveringWitness", "covering_prime_witness",
    "small_subgroup_survey",
]
