"""Finite group actions on indexed vector sets, with orbit enumeration.

Three backends share one engine:

  * semilinear  -- maps (twist, scalar) on GF(q^n); point code 0 is the
    zero vector and code e+1 is g^e.
  * matrix      -- d x d matrices over a prime field GF(p) as flat
    row-major tuples; a vector's index is its base-p encoding with
    coordinate 0 least significant.
  * wreath      -- tuples ((g_1..g_m), pi) of inner semilinear maps and a
    block permutation; ((g, pi) . v)_i = g_{pi^-1(i)}(v_{pi^-1(i)}), and a
    point's index is sum(code(v_i) * f^(i-1)) over blocks.

Orbit enumeration turns each generator into a permutation array of the
point set and runs an ascending-seed breadth-first sweep, so reports are
canonical: orbits sorted by (length, representative), lengths ascending.
Stabilizer orders come from |G| / |orbit|, never from explicit stabilizer
computation.
"""

from dataclasses import dataclass

import numpy as np

from . import config
from .arith import prime_factors
from .errors import (
    ElementCapExceeded,
    NotInGqn,
    PointCapExceeded,
    UnsupportedBackend,
)
from .field import ZERO, FieldContext
from . import field as field_ops
from . import semilinear as sl
from .permutation import compose_perm, identity_perm, inverse_perm


# -- backends --

class SemilinearAction:
    """The semilinear group of GF(q^n) acting on the field itself."""

    kind = "semilinear"

    def __init__(self, ctx: FieldContext):
        self.ctx = ctx
        self.point_count = ctx.size
        self.characteristic = ctx.p
        self.identity = sl.IDENTITY

    def __repr__(self):
        return f"SemilinearAction({self.ctx!r})"

    def validate(self, g):
        sl.validate_map(self.ctx, g)

    def mul(self, a, b):
        return sl.compose(self.ctx, a, b)

    def inv(self, a):
        return sl.inverse(self.ctx, a)

    def act(self, g, code: int) -> int:
        v = ZERO if code == 0 else code - 1
        w = sl.apply_map(self.ctx, g, v)
        return 0 if w == ZERO else w + 1

    def perm_array(self, g) -> np.ndarray:
        t, e = g
        m = self.ctx.order
        out = np.empty(self.point_count, dtype=np.int64)
        out[0] = 0
        if m > 1:
            out[1:] = (np.arange(m, dtype=np.int64) * self.ctx.pow_q[t] + e) % m + 1
        elif m == 1:
            out[1] = 1
        return out

    def matrix_dim(self) -> int:
        return self.ctx.degree

    def matrix_of(self, g):
        return _semilinear_matrix(self.ctx, g)

    def point_coordinates(self, code: int) -> tuple[int, ...]:
        v = ZERO if code == 0 else code - 1
        return field_ops.coordinates(self.ctx, v)


class MatrixAction:
    """GL(dim, p) on the column vectors of GF(p)^dim."""

    kind = "matrix"

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self.point_count = p ** dim
        self.characteristic = p
        self.identity = mat_identity(dim)

    def __repr__(self):
        return f"MatrixAction(p={self.p}, dim={self.dim})"

    def validate(self, g):
        if len(g) != self.dim * self.dim or not all(0 <= v < self.p for v in g):
            raise NotInGqn(f"matrix {g} is not a valid {self.dim}x{self.dim} element mod {self.p}")
        if mat_det(g, self.dim, self.p) == 0:
            raise NotInGqn("matrix is singular")

    def mul(self, a, b):
        return mat_mul(a, b, self.dim, self.p)

    def inv(self, a):
        return mat_inv(a, self.dim, self.p)

    def act(self, g, code: int) -> int:
        p, d = self.p, self.dim
        vec = []
        rest = code
        for _ in range(d):
            vec.append(rest % p)
            rest //= p
        out = 0
        w = 1
        for i in range(d):
            acc = 0
            row = g[i * d:(i + 1) * d]
            for j in range(d):
                acc += row[j] * vec[j]
            out += (acc % p) * w
            w *= p
        return out

    def perm_array(self, g) -> np.ndarray:
        p, d = self.p, self.dim
        idx = np.arange(self.point_count, dtype=np.int64)
        coords = np.empty((d, self.point_count), dtype=np.int64)
        rest = idx
        for i in range(d):
            coords[i] = rest % p
            rest = rest // p
        mat = np.array(g, dtype=np.int64).reshape(d, d)
        out_coords = (mat @ coords) % p
        weights = np.array([p ** i for i in range(d)], dtype=np.int64)
        return weights @ out_coords

    def matrix_dim(self) -> int:
        return self.dim

    def matrix_of(self, g):
        return g

    def point_coordinates(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.dim):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)


class WreathAction:
    """Inner semilinear maps on m blocks, extended by block permutations."""

    kind = "wreath"

    def __init__(self, inner_ctx: FieldContext, m: int):
        self.inner = inner_ctx
        self.m = m
        self.point_count = inner_ctx.size ** m
        self.characteristic = inner_ctx.p
        self.identity = (tuple(sl.IDENTITY for _ in range(m)), identity_perm(m))

    def __repr__(self):
        return f"WreathAction({self.inner!r}, m={self.m})"

    def validate(self, g):
        comps, perm = g
        if len(comps) != self.m or sorted(perm) != list(range(self.m)):
            raise NotInGqn(f"{g} is not a valid wreath element with {self.m} blocks")
        for c in comps:
            sl.validate_map(self.inner, c)

    def mul(self, a, b):
        # (g; pi) o (h; rho) = ((g_rho(1) h_1, ..., g_rho(m) h_m); pi o rho)
        (ga, pa), (gb, pb) = a, b
        ctx = self.inner
        comps = tuple(sl.compose(ctx, ga[pb[j]], gb[j]) for j in range(self.m))
        return (comps, compose_perm(pa, pb))

    def inv(self, a):
        comps, perm = a
        ctx = self.inner
        pinv = inverse_perm(perm)
        return (tuple(sl.inverse(ctx, comps[pinv[j]]) for j in range(self.m)), pinv)

    def act(self, g, code: int) -> int:
        comps, perm = g
        f = self.inner.size
        blocks = []
        rest = code
        for _ in range(self.m):
            blocks.append(rest % f)
            rest //= f
        out = 0
        w = 1
        pinv = inverse_perm(perm)
        for i in range(self.m):
            j = pinv[i]
            c = blocks[j]
            v = ZERO if c == 0 else c - 1
            img = sl.apply_map(self.inner, comps[j], v)
            out += (0 if img == ZERO else img + 1) * w
            w *= f
        return out

    def component_table(self, comp) -> np.ndarray:
        """Action of an inner map on block codes 0..f-1 as a lookup array."""
        t, e = comp
        f = self.inner.size
        m = self.inner.order
        out = np.empty(f, dtype=np.int64)
        out[0] = 0
        if m > 1:
            out[1:] = (np.arange(m, dtype=np.int64) * self.inner.pow_q[t] + e) % m + 1
        elif m == 1:
            out[1] = 1
        return out

    def perm_array(self, g) -> np.ndarray:
        comps, perm = g
        f = self.inner.size
        idx = np.arange(self.point_count, dtype=np.int64)
        codes = np.empty((self.m, self.point_count), dtype=np.int64)
        rest = idx
        for i in range(self.m):
            codes[i] = rest % f
            rest = rest // f
        pinv = inverse_perm(perm)
        out = np.zeros(self.point_count, dtype=np.int64)
        w = 1
        for i in range(self.m):
            j = pinv[i]
            out += self.component_table(comps[j])[codes[j]] * w
            w *= f
        return out

    def matrix_dim(self) -> int:
        return self.m * self.inner.degree

    def matrix_of(self, g):
        comps, perm = g
        d = self.inner.degree
        dim = self.m * d
        out = [0] * (dim * dim)
        pinv = inverse_perm(perm)
        for i in range(self.m):
            j = pinv[i]
            block = _semilinear_matrix(self.inner, comps[j])
            for r in range(d):
                for c in range(d):
                    out[(i * d + r) * dim + (j * d + c)] = block[r * d + c]
        return tuple(out)

    def point_coordinates(self, code: int) -> tuple[int, ...]:
        f = self.inner.size
        out = []
        for _ in range(self.m):
            block = code % f
            code //= f
            v = ZERO if block == 0 else block - 1
            out.extend(field_ops.coordinates(self.inner, v))
        return tuple(out)


def _semilinear_matrix(ctx: FieldContext, g) -> tuple[int, ...]:
    """The GF(p)-linear matrix of v -> a*v^(q^t) in the power basis."""
    d = ctx.degree
    out = [0] * (d * d)
    for j in range(d):
        basis_exp = ctx.log_table[ctx.p ** j]
        img = field_ops.coordinates(ctx, sl.apply_map(ctx, g, basis_exp))
        for i in range(d):
            out[i * d + j] = img[i]
    return tuple(out)


# -- flat tuple matrices over GF(p) --

def mat_identity(dim: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(dim) for j in range(dim))


def mat_mul(a, b, dim: int, p: int) -> tuple[int, ...]:
    out = [0] * (dim * dim)
    for i in range(dim):
        arow = a[i * dim:(i + 1) * dim]
        for j in range(dim):
            acc = 0
            for k in range(dim):
                acc += arow[k] * b[k * dim + j]
            out[i * dim + j] = acc % p
    return tuple(out)


def mat_vec(a, v, dim: int, p: int) -> tuple[int, ...]:
    return tuple(sum(a[i * dim + j] * v[j] for j in range(dim)) % p for i in range(dim))


def mat_det(a, dim: int, p: int) -> int:
    rows = [list(a[i * dim:(i + 1) * dim]) for i in range(dim)]
    det = 1
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if rows[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col] % p
        inv_piv = pow(rows[col][col], -1, p)
        for r in range(col + 1, dim):
            factor = rows[r][col] * inv_piv % p
            if factor:
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[col])]
    return det % p


def mat_inv(a, dim: int, p: int) -> tuple[int, ...]:
    aug = [list(a[i * dim:(i + 1) * dim]) + [1 if j == i else 0 for j in range(dim)]
           for i in range(dim)]
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if aug[r][col] % p), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_piv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv_piv % p for x in aug[col]]
        for r in range(dim):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [(x - factor * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][dim + j] for i in range(dim) for j in range(dim))


def mat_kron(a, b, da: int, db: int, p: int) -> tuple[int, ...]:
    """Kronecker product of a (da x da) and b (db x db), mod p."""
    dim = da * db
    out = [0] * (dim * dim)
    for i in range(da):
        for j in range(da):
            aij = a[i * da + j]
            if aij == 0:
                continue
            for r in range(db):
                for c in range(db):
                    out[(i * db + r) * dim + (j * db + c)] = aij * b[r * db + c] % p
    return tuple(out)


# -- instances and closure --

def closure(backend, generators, cap: int | None = None) -> tuple:
    """Full element list of <generators>, canonically sorted."""
    if cap is None:
        cap = config.element_cap()
    gens = []
    for g in generators:
        backend.validate(g)
        if g not in gens:
            gens.append(g)
    seen = {backend.identity}
    frontier = [backend.identity]
    mul = backend.mul
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = mul(a, g)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise ElementCapExceeded(f"closure exceeded the element cap {cap}")
                    new.append(c)
        frontier = new
    return tuple(sorted(seen))


class ActionInstance:
    """A finitely generated group with one of the three action backends."""

    def __init__(self, backend, generators, known_order: int | None = None,
                 elements=None, meta: dict | None = None):
        self.backend = backend
        self.generators = tuple(generators)
        for g in self.generators:
            backend.validate(g)
        self.known_order = known_order
        self._elements = tuple(elements) if elements is not None else None
        self.meta = meta or {}

    def __repr__(self):
        return (f"ActionInstance({self.backend!r}, {len(self.generators)} generators, "
                f"order={self.known_order or '?'})")

    @property
    def point_count(self) -> int:
        return self.backend.point_count

    @property
    def elements(self) -> tuple:
        if self._elements is None:
            self._elements = closure(self.backend, self.generators)
        return self._elements

    @property
    def group_order(self) -> int:
        if self.known_order is not None:
            return self.known_order
        return len(self.elements)


# -- orbit enumeration --

@dataclass
class OrbitReport:
    """Orbit structure of an instance, canonical and JSON-serializable."""
    group_order: int
    point_count: int
    orbits: tuple[tuple[int, int, int], ...]  # (length, representative, stabilizer order)
    orbit_lengths: tuple[int, ...]
    regular_exists: bool
    p_regular: dict[int, bool]

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "orbit_lengths": list(self.orbit_lengths),
            "regular": self.regular_exists,
            "p_regular": {str(p): v for p, v in sorted(self.p_regular.items())},
            "orbits": [
                {"length": ln, "rep": rep, "stab_order": st}
                for ln, rep, st in self.orbits
            ],
        }


def enumerate_orbits(instance: ActionInstance, workers: int = 1) -> OrbitReport:
    """Breadth-first orbit sweep over ascending seed indices.

    The report is independent of the worker count: generator permutation
    arrays may be built concurrently, but seeds are claimed in ascending
    order and the final orbit list is canonically sorted either way.
    """
    n_points = instance.point_count
    cap = config.point_cap()
    if n_points > cap:
        raise PointCapExceeded(f"{n_points} points exceed the point cap {cap}")
    order = instance.group_order

    gens = list(instance.generators)
    if workers > 1 and len(gens) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            perms = list(pool.map(instance.backend.perm_array, gens))
    else:
        perms = [instance.backend.perm_array(g) for g in gens]
    ident = np.arange(n_points, dtype=np.int64)
    perms = [p for p in perms if not np.array_equal(p, ident)]

    orbits = []
    if not perms:
        orbits = [(1, seed) for seed in range(n_points)]
    else:
        visited = np.zeros(n_points, dtype=bool)
        seed = 0
        while seed < n_points:
            if visited[seed]:
                jump = int(np.argmax(~visited[seed:]))
                if visited[seed + jump]:
                    break
                seed += jump
            visited[seed] = True
            frontier = np.array([seed], dtype=np.int64)
            size = 1
            while frontier.size:
                images = np.unique(np.concatenate([p[frontier] for p in perms]))
                frontier = images[~visited[images]]
                visited[frontier] = True
                size += int(frontier.size)
            orbits.append((size, seed))
            seed += 1

    orbits.sort()
    full = []
    for length, rep in orbits:
        assert order % length == 0, f"orbit length {length} does not divide group order {order}"
        full.append((length, rep, order // length))
    lengths = tuple(sorted(ln for ln, _, _ in full))
    regular = any(st == 1 for _, _, st in full)
    p_reg = {p: any(st % p != 0 for _, _, st in full) for p in prime_factors(order)}
    return OrbitReport(
        group_order=order,
        point_count=n_points,
        orbits=tuple(full),
        orbit_lengths=lengths,
        regular_exists=regular,
        p_regular=p_reg,
    )


def has_p_regular_orbit(report: OrbitReport, p: int) -> bool:
    """Is some orbit's stabilizer order coprime to p?  True if p ∤ |G|."""
    if report.group_order % p != 0:
        return True
    return report.p_regular[p]


# -- faithfulness and irreducibility --

@dataclass
class FaithfulnessReport:
    faithful: bool
    kernel: tuple  # all elements acting as the identity on V (at least the identity)


def acts_trivially(backend, g) -> bool:
    """Does g fix every point?  Equivalent to g being the identity element
    for all three backends, which tests cross-check against full scans."""
    return g == backend.identity


def is_faithful(instance: ActionInstance) -> FaithfulnessReport:
    """Kernel of the action and whether it is trivial.

    The backends here are concrete transformations, so an element acts
    trivially exactly when it is the identity element; the kernel therefore
    never needs the closure.  When the closure is already materialized it
    is scanned anyway, as a self-check.
    """
    backend = instance.backend
    if instance._elements is not None:
        kernel = tuple(g for g in instance._elements if acts_trivially(backend, g))
    else:
        kernel = (backend.identity,)
    return FaithfulnessReport(faithful=len(kernel) == 1, kernel=kernel)


def is_irreducible(instance: ActionInstance) -> bool:
    """No proper nonzero GF(p)-subspace is invariant under all generators.

    Checked by spinning: the smallest invariant subspace containing each
    nonzero vector must be the whole space.  Since spin(g.v) = g.spin(v),
    one spin per nonzero orbit representative covers every vector, which
    keeps large mostly-transitive instances cheap.  Wreath instances go
    through their block-monomial matrix realization.
    """
    backend = instance.backend
    if not hasattr(backend, "matrix_of"):
        raise UnsupportedBackend(f"irreducibility undefined for {backend!r}")
    p = backend.characteristic
    dim = backend.matrix_dim()
    if dim == 0:
        return False
    mats = [np.array(backend.matrix_of(g), dtype=np.int64).reshape(dim, dim)
            for g in instance.generators]
    if not mats:
        mats = [np.eye(dim, dtype=np.int64)]
    for rep in _orbit_representatives(instance):
        if rep == 0:
            continue  # the zero vector indexes at 0 in every backend
        vec = np.array(backend.point_coordinates(rep), dtype=np.int64)
        if _spin_rank(vec, mats, p, dim) < dim:
            return False
    return True


def _orbit_representatives(instance: ActionInstance) -> list[int]:
    """Minimal index of every orbit, without needing the group order."""
    n_points = instance.point_count
    ident = np.arange(n_points, dtype=np.int64)
    perms = [p for p in (instance.backend.perm_array(g) for g in instance.generators)
             if not np.array_equal(p, ident)]
    if not perms:
        return list(range(n_points))
    visited = np.zeros(n_points, dtype=bool)
    reps = []
    seed = 0
    while seed < n_points:
        if visited[seed]:
            jump = int(np.argmax(~visited[seed:]))
            if visited[seed + jump]:
                break
            seed += jump
        visited[seed] = True
        frontier = np.array([seed], dtype=np.int64)
        while frontier.size:
            images = np.unique(np.concatenate([p[frontier] for p in perms]))
            frontier = images[~visited[images]]
            visited[frontier] = True
        reps.append(seed)
        seed += 1
    return reps


def _spin_rank(seed: np.ndarray, mats, p: int, dim: int) -> int:
    """Dimension of the smallest invariant subspace containing seed."""
    basis = np.zeros((dim, dim), dtype=np.int64)
    pivots: list[int] = []
    queue = [seed]
    while queue:
        vec = _reduce_mod_basis(queue.pop(), basis, pivots, p)
        if not vec.any():
            continue
        lead = int(np.flatnonzero(vec)[0])
        vec = vec * pow(int(vec[lead]), -1, p) % p
        basis[len(pivots)] = vec
        pivots.append(lead)
        if len(pivots) == dim:
            return dim
        queue.extend((m @ vec) % p for m in mats)
    return len(pivots)


def _reduce_mod_basis(vec: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    vec = vec % p
    for row, lead in enumerate(pivots):
        c = int(vec[lead])
        if c:
            vec = (vec - c * basis[row]) % p
    return vec


def matrix_realization(instance: ActionInstance) -> ActionInstance:
    """The same group as explicit matrices over the prime field."""
    backend = instance.backend
    if isinstance(backend, MatrixAction):
        return instance
    if not hasattr(backend, "matrix_of"):
        raise UnsupportedBackend(f"no matrix realization for {backend!r}")
    target = MatrixAction(backend.characteristic, backend.matrix_dim())
    gens = [backend.matrix_of(g) for g in instance.generators]
    return ActionInstance(target, gens, known_order=instance.known_order)


# -- the implication report --

@dataclass
class ImplicationReport:
    """Does p-regularity for every prime force a regular orbit here?

    is_counterexample is True exactly when the action is faithful and
    irreducible, every prime dividing the group order has a p-regular
    orbit, and yet no regular orbit exists.
    """
    group_order: int
    faithful: bool
    irreducible: bool
    primes: tuple[int, ...]
    p_regular: dict[int, bool]
    all_p_regular: bool
    regular_exists: bool
    is_counterexample: bool
    odd_order: bool
    odd_characteristic: bool
    orbit_lengths: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "faithful": self.faithful,
            "irreducible": self.irreducible,
            "primes": list(self.primes),
            "p_regular": {str(p): v for p, v in sorted(self.p_regular.items())},
            "all_p_regular": self.all_p_regular,
            "regular": self.regular_exists,
            "is_counterexample": self.is_counterexample,
            "odd_order": self.odd_order,
            "odd_characteristic": self.odd_characteristic,
            "orbit_lengths": list(self.orbit_lengths),
        }


def orbit_implication_report(instance: ActionInstance, workers: int = 1) -> ImplicationReport:
    report = enumerate_orbits(instance, workers=workers)
    faithful = is_faithful(instance).faithful
    irreducible = is_irreducible(instance)
    primes = tuple(prime_factors(report.group_order))
    all_p = all(report.p_regular[p] for p in primes)
    return ImplicationReport(
        group_order=report.group_order,
        faithful=faithful,
        irreducible=irreducible,
        primes=primes,
        p_regular=dict(report.p_regular),
        all_p_regular=all_p,
        regular_exists=report.regular_exists,
        is_counterexample=faithful and irreducible and all_p and not report.regular_exists,
        odd_order=report.group_order % 2 == 1,
        odd_characteristic=instance.backend.characteristic % 2 == 1,
        orbit_lengths=report.orbit_lengths,
    )


__all__ = [
    "SemilinearAction", "MatrixAction", "WreathAction", "ActionInstance",
    "closure", "OrbitReport", "enumerate_orbits", "has_p_regular_orbit",
    "FaithfulnessReport", "is_faithful", "acts_trivially",
    "is_irreducible", "matrix_realization",
    "ImplicationReport", "orbit_implication_report",
    "mat_identity", "mat_mul", "mat_vec", "mat_det", "mat_inv", "mat_kron",
]
