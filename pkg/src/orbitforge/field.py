"""Exact arithmetic in GF(p^(k*n)) via discrete-log tables.

A field context fixes q = p^k and an extension degree n over GF(q), so the
full field has p^(k*n) elements.  Nonzero elements are represented by their
discrete logarithm with respect to a fixed primitive element g: the integer
e in [0, q^n - 2] stands for g^e.  Zero is the sentinel ZERO (-1), matching
the wire format used in group-spec files.  Multiplication is addition of
exponents; the packed base-p "vector" form of each element is kept in the
exp table so coordinates over the prime field stay available.

The primitive element is the residue class of x modulo the lexicographically
smallest primitive polynomial of the right degree (coefficients compared
low-degree-first), which makes every table, and hence every downstream
witness, deterministic.
"""

from functools import lru_cache
from itertools import product

from .arith import is_prime, prime_factors
from .config import DEFAULT_FIELD_SIZE_CAP
from .errors import NonPrime, NoPrimitivePolynomial, SizeCapExceeded, SNotDividingN, ZeroInput

ZERO = -1

FieldElement = int  # ZERO or an exponent in [0, q^n - 2]


# -- polynomial arithmetic over GF(p), coefficient lists low-degree-first --

def _poly_mulmod(a, b, f, p):
    d = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by the monic polynomial f
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d):
                res[i - d + j] = (res[i - d + j] - c * f[j]) % p
    del res[d:]
    return res


def _poly_powmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _poly_mulmod(base, base, f, p)
    return result


def _is_one(poly):
    return len(poly) >= 1 and poly[0] == 1 and not any(poly[1:])


def _x_is_primitive(f, p, group_order, order_primes):
    """Does the class of x generate the full multiplicative group mod f?

    True forces f irreducible: the unit group of GF(p)[x]/(f) has order
    strictly below p^deg(f) - 1 unless f is irreducible.
    """
    x = [0, 1]
    if not _is_one(_poly_powmod(x, group_order, f, p)):
        return False
    for r in order_primes:
        if _is_one(_poly_powmod(x, group_order // r, f, p)):
            return False
    return True


def smallest_primitive_polynomial(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest primitive polynomial, low coefficients first.

    Returned as the full monic coefficient tuple (c0, ..., c_{degree-1}, 1).
    """
    group_order = p ** degree - 1
    order_primes = prime_factors(group_order)
    # the constant term of a primitive polynomial is (-1)^degree times the
    # norm of a primitive element, which is itself a primitive root of GF(p)
    roots_mod_p = _primitive_roots(p)
    sign = 1 if degree % 2 == 0 else -1
    for tail in product(range(p), repeat=degree):
        if (sign * tail[0]) % p not in roots_mod_p:
            continue
        f = list(tail) + [1]
        if degree > 1:
            # cheap filter: no roots in GF(p)
            if any(_poly_eval(f, a, p) == 0 for a in range(p)):
                continue
        if _x_is_primitive(f, p, group_order, order_primes):
            return tuple(f)
    raise NoPrimitivePolynomial(f"no primitive polynomial of degree {degree} over GF({p})")


def _primitive_roots(p: int) -> frozenset[int]:
    if p == 2:
        return frozenset({1})
    checks = [(p - 1) // r for r in prime_factors(p - 1)]
    return frozenset(a for a in range(1, p)
                     if all(pow(a, c, p) != 1 for c in checks))


def _poly_eval(f, a, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * a + c) % p
    return acc


@lru_cache(maxsize=None)
def _field_tables(p: int, degree: int):
    """(poly, exp, log): exp[e] is the packed base-p form of g^e."""
    poly = smallest_primitive_polynomial(p, degree)
    size = p ** degree
    order = size - 1
    exp = [0] * order
    log = [ZERO] * size
    cur = 1
    if p == 2:
        # digits are bits: multiply by x = shift, reduce = xor with f
        poly_packed = sum(c << i for i, c in enumerate(poly))
        top = 1 << degree
        for e in range(order):
            exp[e] = cur
            log[cur] = e
            cur <<= 1
            if cur & top:
                cur ^= poly_packed
    else:
        # packed base-p digits never carry across positions under mod-p ops
        pd1 = p ** (degree - 1)
        nz = [(poly[i], p ** i) for i in range(degree) if poly[i]]
        for e in range(order):
            exp[e] = cur
            log[cur] = e
            lead, cur = divmod(cur, pd1)
            cur *= p
            if lead:
                for ci, wi in nz:
                    digit = (cur // wi) % p
                    cur += (((digit - lead * ci) % p) - digit) * wi
    assert cur == 1, "primitive element order mismatch"
    return poly, tuple(exp), tuple(log)


class FieldContext:
    """Immutable handle on GF(q^n), q = p^k, with exp/log tables.

    Safe to share across workers; every operation in this module is a pure
    function of (context, inputs).
    """

    __slots__ = ("p", "k", "n", "q", "degree", "size", "order", "poly",
                 "exp_table", "log_table", "pow_q", "minus_one")

    def __init__(self, p: int, k: int, n: int, poly, exp_table, log_table):
        self.p = p
        self.k = k
        self.n = n
        self.q = p ** k
        self.degree = k * n
        self.size = p ** (k * n)
        self.order = self.size - 1
        self.poly = poly
        self.exp_table = exp_table
        self.log_table = log_table
        m = max(self.order, 1)
        self.pow_q = tuple(pow(self.q, t, m) for t in range(n))
        self.minus_one = 0 if p == 2 else self.order // 2

    def __repr__(self):
        return f"FieldContext(p={self.p}, k={self.k}, n={self.n})"

    def __eq__(self, other):
        return (isinstance(other, FieldContext)
                and (self.p, self.k, self.n) == (other.p, other.k, other.n))

    def __hash__(self):
        return hash((self.p, self.k, self.n))

    def nonzero(self):
        """All nonzero elements, ascending by exponent."""
        return range(self.order)

    def elements(self):
        """All elements: ZERO first, then exponents ascending."""
        yield ZERO
        yield from range(self.order)


@lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, n: int) -> FieldContext:
    poly, exp, log = _field_tables(p, k * n)
    return FieldContext(p, k, n, poly, exp, log)


def make_field(p: int, k: int, n: int, size_cap: int = DEFAULT_FIELD_SIZE_CAP) -> FieldContext:
    """Context for GF(p^(k*n)) with distinguished subfield GF(q), q = p^k."""
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrime(f"p must be prime, got {p}")
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got k={k}, n={n}")
    if p ** (k * n) > size_cap:
        raise SizeCapExceeded(f"{p}^{k * n} exceeds the size cap {size_cap}")
    return _make_field_cached(p, k, n)


# -- element operations (exponent representation) --

def mul(ctx: FieldContext, x: FieldElement, y: FieldElement) -> FieldElement:
    if x == ZERO or y == ZERO:
        return ZERO
    return (x + y) % ctx.order if ctx.order > 1 else 0


def inv(ctx: FieldContext, x: FieldElement) -> FieldElement:
    if x == ZERO:
        raise ZeroInput("zero has no inverse")
    return (-x) % ctx.order if ctx.order > 1 else 0


def div(ctx: FieldContext, x: FieldElement, y: FieldElement) -> FieldElement:
    return mul(ctx, x, inv(ctx, y))


def power(ctx: FieldContext, x: FieldElement, e: int) -> FieldElement:
    if x == ZERO:
        if e <= 0:
            raise ZeroInput("0**e undefined for e <= 0")
        return ZERO
    return (x * e) % ctx.order if ctx.order > 1 else 0


def neg(ctx: FieldContext, x: FieldElement) -> FieldElement:
    if x == ZERO:
        return ZERO
    return mul(ctx, x, ctx.minus_one)


def add(ctx: FieldContext, x: FieldElement, y: FieldElement) -> FieldElement:
    if x == ZERO:
        return y
    if y == ZERO:
        return x
    p = ctx.p
    vx, vy = ctx.exp_table[x], ctx.exp_table[y]
    packed = 0
    w = 1
    while vx or vy:
        packed += ((vx % p + vy % p) % p) * w
        vx //= p
        vy //= p
        w *= p
    return ctx.log_table[packed]


def sub(ctx: FieldContext, x: FieldElement, y: FieldElement) -> FieldElement:
    return add(ctx, x, neg(ctx, y))


def frobenius(ctx: FieldContext, x: FieldElement, t: int = 1) -> FieldElement:
    """x -> x^(q^t), the t-th power of the Frobenius over GF(q)."""
    if x == ZERO:
        return ZERO
    return (x * ctx.pow_q[t % ctx.n]) % ctx.order if ctx.order > 1 else 0


def from_integer(ctx: FieldContext, packed: int) -> FieldElement:
    """Element from its packed base-p coordinate form (0 -> ZERO)."""
    if not 0 <= packed < ctx.size:
        raise ValueError(f"packed value {packed} out of range for {ctx!r}")
    return ZERO if packed == 0 else ctx.log_table[packed]


def to_integer(ctx: FieldContext, x: FieldElement) -> int:
    """Packed base-p coordinate form (ZERO -> 0)."""
    return 0 if x == ZERO else ctx.exp_table[x]


def coordinates(ctx: FieldContext, x: FieldElement) -> tuple[int, ...]:
    """Coordinates over GF(p) in the power basis 1, x, ..., x^(degree-1)."""
    v = to_integer(ctx, x)
    p = ctx.p
    out = []
    for _ in range(ctx.degree):
        out.append(v % p)
        v //= p
    return tuple(out)


def subfield_step(ctx: FieldContext, j: int) -> int:
    """Exponent step of GF(q^j)^x inside GF(q^n)^x; requires j | n."""
    assert ctx.n % j == 0
    return ctx.order // (ctx.q ** j - 1) if ctx.order > 1 else 1


def in_subfield(ctx: FieldContext, x: FieldElement, j: int) -> bool:
    """Is x in the intermediate field GF(q^j)?  Requires j | n."""
    if x == ZERO:
        return True
    return x % subfield_step(ctx, j) == 0


def norm_map(ctx: FieldContext, s: int, y: FieldElement) -> FieldElement:
    """Product of the <sigma>-conjugates of y, sigma = (x -> x^(q^(n/s))).

    s must be a prime dividing n; the result lies in GF(q^(n/s)).
    """
    if y == ZERO:
        raise ZeroInput("norm of zero is undefined")
    _check_s(ctx, s)
    v = sum(ctx.pow_q[(ctx.n // s) * j % ctx.n] for j in range(s)) if ctx.order > 1 else 0
    # v = 1 + q^(n/s) + ... + q^((n/s)(s-1)) reduced mod q^n - 1
    result = (y * v) % ctx.order if ctx.order > 1 else 0
    assert frobenius(ctx, result, ctx.n // s) == result
    return result


def _check_s(ctx: FieldContext, s: int) -> None:
    if not is_prime(s) or ctx.n % s != 0:
        raise SNotDividingN(f"s = {s} must be a prime dividing n = {ctx.n}")


__all__ = [
    "ZERO", "FieldElement", "FieldContext", "make_field",
    "smallest_primitive_polynomial",
    "mul", "inv", "div", "power", "neg", "add", "sub", "frobenius",
    "from_integer", "to_integer", "coordinates",
    "subfield_step", "in_subfield", "norm_map",
]
