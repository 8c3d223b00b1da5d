"""Bounded chain complexes of finite-dimensional F_p vector spaces.

Grading is homological: ``d_n`` maps degree ``n`` to degree ``n - 1`` and is
stored as a ``dim(n-1) x dim(n)`` matrix.  Sign conventions, fixed once:

* ``shift(x, k)``: ``(x[k])_n = x_{n-k}`` with differential ``(-1)^k d``.
* ``mapping_cone(f)_n = y_n + x_{n-1}`` with ``d(y, x) = (d y + f x, -d x)``.
* ``mapping_fiber(f)_n = x_n + y_{n+1}`` with ``d(x, y) = (d x, -f x - d y)``,
  i.e. ``shift(mapping_cone(f), -1)`` with the summands swapped.
* Total complexes of bar/cobar constructions use
  ``d_tot = d_int + (-1)^{internal degree} d_ext``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import linalg
from .linalg import matmul, zeros


class ComplexError(ValueError):
    """Raised when a complex or chain map violates its invariants."""


@dataclass(frozen=True, eq=False)
class ChainComplex:
    p: int
    dims: Mapping[int, int]
    d: Mapping[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        dims = {int(n): int(k) for n, k in self.dims.items() if k}
        if any(k < 0 for k in dims.values()):
            raise ComplexError("negative dimension")
        diffs = {}
        for n, m in self.d.items():
            n = int(n)
            m = linalg.reduce(m, self.p)
            shape = (dims.get(n - 1, 0), dims.get(n, 0))
            if m.shape != shape:
                raise ComplexError(f"d_{n} has shape {m.shape}, expected {shape}")
            if m.any():
                diffs[n] = m
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "d", diffs)

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def diff(self, n: int) -> np.ndarray:
        m = self.d.get(n)
        if m is None:
            return zeros(self.dim(n - 1), self.dim(n))
        return m

    @property
    def degrees(self) -> list[int]:
        return sorted(self.dims)

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.dims:
            return None
        return min(self.dims), max(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def check(self) -> None:
        for n in self.d:
            if n - 1 in self.d and matmul(self.d[n - 1], self.d[n], self.p).any():
                raise ComplexError(f"d_{n - 1} d_{n} != 0")

    def equals(self, other: "ChainComplex") -> bool:
        if self.p != other.p or self.dims != other.dims:
            return False
        return all(np.array_equal(self.diff(n), other.diff(n)) for n in set(self.d) | set(other.d))

    def __repr__(self) -> str:
        return f"ChainComplex(p={self.p}, dims={dict(sorted(self.dims.items()))})"


def make_complex(p: int, dims: Mapping[int, int], d: Mapping[int, np.ndarray] | None = None) -> ChainComplex:
    x = ChainComplex(p, dims, d or {})
    x.check()
    return x


def zero_complex(p: int) -> ChainComplex:
    return ChainComplex(p, {})


def concentrated(p: int, degree: int = 0, dim: int = 1) -> ChainComplex:
    """``k^dim`` sitting in a single degree."""
    return ChainComplex(p, {degree: dim})


def homology_dims(x: ChainComplex) -> dict[int, int]:
    """``dim H_n = dim ker d_n - rank d_{n+1}``, nonzero degrees only."""
    ranks = {n: linalg.rank(m, x.p) for n, m in x.d.items()}
    out = {}
    for n, k in x.dims.items():
        h = k - ranks.get(n, 0) - ranks.get(n + 1, 0)
        if h:
            out[n] = h
    return out


def is_acyclic(x: ChainComplex) -> bool:
    return not homology_dims(x)


def shift(x: ChainComplex, k: int) -> ChainComplex:
    sign = -1 if k % 2 else 1
    return ChainComplex(
        x.p,
        {n + k: v for n, v in x.dims.items()},
        {n + k: sign * m for n, m in x.d.items()},
    )


def direct_sum(parts: list[ChainComplex]) -> ChainComplex:
    if not parts:
        raise ValueError("empty direct sum needs a prime; use zero_complex")
    p = parts[0].p
    b = SumBuilder(p, [(i, x.dims) for i, x in enumerate(parts)])
    for i, x in enumerate(parts):
        for n, m in x.d.items():
            b.add(n, i, i, m)
    return b.build()


class SumBuilder:
    """Assembles a complex that is a direct sum of graded summands.

    Summands are identified by hashable keys and ordered as given; the
    differential is filled in block by block.
    """

    def __init__(self, p: int, summands: Iterable[tuple[object, Mapping[int, int]]]):
        self.p = p
        self.keys: list = []
        self.offsets: dict[int, dict[object, int]] = {}
        self.sizes: dict[int, dict[object, int]] = {}
        totals: dict[int, int] = {}
        for key, dims in summands:
            self.keys.append(key)
            for n, k in dims.items():
                if not k:
                    continue
                self.offsets.setdefault(n, {})[key] = totals.get(n, 0)
                self.sizes.setdefault(n, {})[key] = k
                totals[n] = totals.get(n, 0) + k
        self.dims = totals
        self._d: dict[int, np.ndarray] = {}

    def size(self, n: int, key) -> int:
        return self.sizes.get(n, {}).get(key, 0)

    def slot(self, n: int, key) -> slice:
        off = self.offsets.get(n, {}).get(key, 0)
        return slice(off, off + self.size(n, key))

    def add(self, n: int, target_key, source_key, m: np.ndarray, sign: int = 1) -> None:
        """Add ``sign * m`` as the block ``source_key -> target_key`` of ``d_n``."""
        if m.size == 0:
            return
        mat = self._d.get(n)
        if mat is None:
            mat = self._d[n] = zeros(self.dims.get(n - 1, 0), self.dims.get(n, 0))
        mat[self.slot(n - 1, target_key), self.slot(n, source_key)] += sign * m

    def build(self, check: bool = False) -> ChainComplex:
        x = ChainComplex(self.p, self.dims, self._d)
        if check:
            x.check()
        return x


def embed(builder: SumBuilder, key, n: int) -> np.ndarray:
    """Inclusion matrix of summand ``key`` in degree ``n``."""
    m = zeros(builder.dims.get(n, 0), builder.size(n, key))
    m[builder.slot(n, key), :] = linalg.eye(builder.size(n, key))
    return m


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    comps: Mapping[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        p = self.source.p
        if self.target.p != p:
            raise ComplexError("source and target live over different primes")
        comps = {}
        for n, m in self.comps.items():
            m = linalg.reduce(m, p)
            shape = (self.target.dim(n), self.source.dim(n))
            if m.shape != shape:
                raise ComplexError(f"component {n} has shape {m.shape}, expected {shape}")
            if m.any():
                comps[int(n)] = m
        object.__setattr__(self, "comps", comps)

    @property
    def p(self) -> int:
        return self.source.p

    def comp(self, n: int) -> np.ndarray:
        m = self.comps.get(n)
        if m is None:
            return zeros(self.target.dim(n), self.source.dim(n))
        return m

    def check(self) -> None:
        p = self.p
        for n in set(self.source.dims) | set(self.target.dims):
            lhs = matmul(self.target.diff(n), self.comp(n), p)
            rhs = matmul(self.comp(n - 1), self.source.diff(n), p)
            if not np.array_equal(lhs, rhs):
                raise ComplexError(f"chain map does not commute with d in degree {n}")

    def is_chain_map(self) -> bool:
        try:
            self.check()
        except ComplexError:
            return False
        return True

    def equals(self, other: "ChainMap") -> bool:
        if not (self.source.equals(other.source) and self.target.equals(other.target)):
            return False
        return all(np.array_equal(self.comp(n), other.comp(n)) for n in set(self.comps) | set(other.comps))

    def __repr__(self) -> str:
        return f"ChainMap({self.source!r} -> {self.target!r})"


def identity_map(x: ChainComplex) -> ChainMap:
    return ChainMap(x, x, {n: linalg.eye(k) for n, k in x.dims.items()})


def zero_map(x: ChainComplex, y: ChainComplex) -> ChainMap:
    return ChainMap(x, y, {})


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """``g o f``."""
    if f.target.dims != g.source.dims:
        raise ComplexError("maps are not composable")
    p = f.p
    return ChainMap(f.source, g.target, {n: matmul(g.comp(n), f.comp(n), p) for n in f.comps if n in g.comps})


def add_maps(f: ChainMap, g: ChainMap, sign: int = 1) -> ChainMap:
    keys = set(f.comps) | set(g.comps)
    return ChainMap(f.source, f.target, {n: f.comp(n) + sign * g.comp(n) for n in keys})


def mapping_cone(f: ChainMap) -> ChainComplex:
    x, y = f.source, f.target
    b = SumBuilder(f.p, [("y", y.dims), ("x", {n + 1: k for n, k in x.dims.items()})])
    for n, m in y.d.items():
        b.add(n, "y", "y", m)
    for n, m in f.comps.items():
        b.add(n + 1, "y", "x", m)
    for n, m in x.d.items():
        b.add(n + 1, "x", "x", m, sign=-1)
    return b.build()


def mapping_fiber(f: ChainMap) -> ChainComplex:
    x, y = f.source, f.target
    b = SumBuilder(f.p, [("x", x.dims), ("y", {n - 1: k for n, k in y.dims.items()})])
    for n, m in x.d.items():
        b.add(n, "x", "x", m)
    for n, m in f.comps.items():
        b.add(n, "y", "x", m, sign=-1)
    for n, m in y.d.items():
        b.add(n - 1, "y", "y", m, sign=-1)
    return b.build()


def cone_inclusion(f: ChainMap) -> ChainMap:
    """``y -> Cone(f)``."""
    c = mapping_cone(f)
    return ChainMap(f.target, c, {n: np.vstack([linalg.eye(k), zeros(c.dim(n) - k, k)]) for n, k in f.target.dims.items()})


def cone_projection(f: ChainMap) -> ChainMap:
    """``Cone(f) -> x[1]``."""
    c = mapping_cone(f)
    sx = shift(f.source, 1)
    comps = {}
    for n, k in sx.dims.items():
        ky = f.target.dim(n)
        comps[n] = np.hstack([zeros(k, ky), linalg.eye(k)])
    return ChainMap(c, sx, comps)


def fiber_projection(f: ChainMap) -> ChainMap:
    """``Fiber(f) -> x``."""
    fb = mapping_fiber(f)
    comps = {}
    for n, k in f.source.dims.items():
        comps[n] = np.hstack([linalg.eye(k), zeros(k, fb.dim(n) - k)])
    return ChainMap(fb, f.source, comps)


def cone_functor(f: ChainMap, f2: ChainMap, a: ChainMap, b: ChainMap) -> ChainMap:
    """Map ``Cone(f) -> Cone(f2)`` induced by a strictly commuting square
    ``b f = f2 a`` (``a`` on sources, ``b`` on targets)."""
    c1, c2 = mapping_cone(f), mapping_cone(f2)
    comps = {}
    for n in set(c1.dims) | set(c2.dims):
        m = zeros(c2.dim(n), c1.dim(n))
        ya, yb = f.target.dim(n), f2.target.dim(n)
        m[:yb, :ya] = b.comp(n)
        m[yb:, ya:] = a.comp(n - 1)
        comps[n] = m
    return ChainMap(c1, c2, comps)


def fiber_functor(f: ChainMap, f2: ChainMap, a: ChainMap, b: ChainMap) -> ChainMap:
    """Map ``Fiber(f) -> Fiber(f2)`` induced by a strictly commuting square."""
    c1, c2 = mapping_fiber(f), mapping_fiber(f2)
    comps = {}
    for n in set(c1.dims) | set(c2.dims):
        m = zeros(c2.dim(n), c1.dim(n))
        xa, xb = f.source.dim(n), f2.source.dim(n)
        m[:xb, :xa] = a.comp(n)
        m[xb:, xa:] = b.comp(n + 1)
        comps[n] = m
    return ChainMap(c1, c2, comps)


def is_quasi_iso(f: ChainMap) -> bool:
    return is_acyclic(mapping_cone(f))


def induced_homology_ranks(f: ChainMap) -> dict[int, int]:
    """Rank of ``H_n(f)`` per degree, computed from cycles and boundaries.

    Independent of the cone construction; used to cross-check
    :func:`is_quasi_iso`.
    """
    p = f.p
    x, y = f.source, f.target
    out = {}
    for n in set(x.dims) | set(y.dims):
        z = linalg.nullspace(x.diff(n), p) if x.dim(n) else zeros(0, 0)
        if z.shape[1] == 0:
            continue
        fz = matmul(f.comp(n), z, p)
        by = y.diff(n + 1)
        r_b = linalg.rank(by, p)
        r = linalg.rank(np.concatenate([fz, by], axis=1), p) - r_b
        if r:
            out[n] = r
    return out


def is_quasi_iso_via_homology(f: ChainMap) -> bool:
    hx, hy = homology_dims(f.source), homology_dims(f.target)
    return hx == hy and induced_homology_ranks(f) == hx


def random_complex(rng: np.random.Generator, p: int, max_dim: int = 3, lo: int = -1, hi: int = 2) -> ChainComplex:
    """Random bounded complex built from random two-term pieces (so d^2 = 0)."""
    parts = []
    for n in range(lo, hi + 1):
        a, b = int(rng.integers(0, max_dim + 1)), int(rng.integers(0, max_dim + 1))
        d = {n + 1: linalg.random_matrix(rng, a, b, p)} if a and b else {}
        parts.append(ChainComplex(p, {n: a, n + 1: b}, d))
    return direct_sum(parts)


def random_chain_map(rng: np.random.Generator, x: ChainComplex, y: ChainComplex) -> ChainMap:
    """A random chain map ``x -> y`` drawn from the solution space of ``d f = f d``."""
    p = x.p
    degs = sorted(set(x.dims) | set(y.dims))
    # unknowns: all entries of each component, stacked
    blocks = [(n, y.dim(n), x.dim(n)) for n in degs if y.dim(n) and x.dim(n)]
    offs, total = {}, 0
    for n, r, c in blocks:
        offs[n] = total
        total += r * c
    if total == 0:
        return zero_map(x, y)
    rows = []
    for n in degs:
        # d^y_n f_n - f_{n-1} d^x_n = 0; row-major vec(A F B) = (A kron B^T) vec(F)
        r, c = y.dim(n - 1), x.dim(n)
        if not (r and c):
            continue
        eq = zeros(r * c, total)
        if n in offs:
            eq[:, offs[n]: offs[n] + y.dim(n) * c] += np.kron(y.diff(n), linalg.eye(c))
        if n - 1 in offs:
            cc = x.dim(n - 1)
            eq[:, offs[n - 1]: offs[n - 1] + r * cc] -= np.kron(linalg.eye(r), x.diff(n).T)
        rows.append(eq)
    a = linalg.reduce(np.vstack(rows), p) if rows else zeros(0, total)
    basis = linalg.nullspace(a, p)
    coeffs = linalg.random_matrix(rng, basis.shape[1], 1, p)
    v = matmul(basis, coeffs, p)[:, 0]
    comps = {n: v[offs[n]: offs[n] + r * c].reshape(r, c) for n, r, c in blocks}
    return ChainMap(x, y, comps)


def complex_to_json(x: ChainComplex) -> dict:
    sup = x.support
    if sup is None:
        return {"p": x.p, "lo": 0, "hi": -1, "dims": [], "d": {}}
    lo, hi = sup
    return {
        "p": x.p,
        "lo": lo,
        "hi": hi,
        "dims": [x.dim(n) for n in range(lo, hi + 1)],
        "d": {str(n): m.tolist() for n, m in sorted(x.d.items())},
    }


def complex_from_json(obj: Mapping) -> ChainComplex:
    try:
        p, lo = int(obj["p"]), int(obj["lo"])
        dims = {lo + i: int(k) for i, k in enumerate(obj["dims"])}
        d = {}
        for n, rows in obj.get("d", {}).items():
            n = int(n)
            d[n] = np.array(rows, dtype=np.int64).reshape(dims.get(n - 1, 0), dims.get(n, 0))
    except (KeyError, TypeError, ValueError) as e:
        raise ComplexError(f"malformed complex: {e}") from e
    return make_complex(p, dims, d)


def map_to_json(f: ChainMap) -> dict:
    return {str(n): m.tolist() for n, m in sorted(f.comps.items())}


def map_from_json(obj: Mapping, source: ChainComplex, target: ChainComplex) -> ChainMap:
    comps = {}
    for n, rows in obj.items():
        n = int(n)
        comps[n] = np.array(rows, dtype=np.int64).reshape(target.dim(n), source.dim(n))
    f = ChainMap(source, target, comps)
    f.check()
    return f
