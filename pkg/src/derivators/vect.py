"""Diagrams of finite-dimensional F_p vector spaces and their hom spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import linalg
from .fincat import FinCat, Functor, Mor, Obj
from .linalg import matmul, zeros


@dataclass(frozen=True, eq=False)
class VectDiagram:
    """A strict functor from ``shape`` to vector spaces.

    ``maps`` holds a ``dim(b) x dim(a)`` matrix for every nonidentity
    ``f: a -> b``; missing entries are zero.
    """

    shape: FinCat
    p: int
    dims: Mapping[Obj, int]
    maps: Mapping[Mor, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        dims = {a: int(self.dims.get(a, 0)) for a in self.shape.objects}
        maps = {}
        for f in self.shape.nonidentity:
            a, b = self.shape.morphisms[f]
            m = self.maps.get(f)
            m = zeros(dims[b], dims[a]) if m is None else linalg.reduce(m, self.p)
            if m.shape != (dims[b], dims[a]):
                raise ValueError(f"map {f!r} has shape {m.shape}, expected {(dims[b], dims[a])}")
            maps[f] = m
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)

    def dim(self, a: Obj) -> int:
        return self.dims[a]

    def map(self, f: Mor) -> np.ndarray:
        if self.shape.is_identity(f):
            return linalg.eye(self.dims[self.shape.src(f)])
        return self.maps[f]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def functoriality_violation(self) -> tuple[Mor, Mor] | None:
        for (g, f), gf in self.shape.table.items():
            if not np.array_equal(matmul(self.maps[g], self.maps[f], self.p), self.maps[gf]):
                return (g, f)
        return None

    def check(self) -> None:
        bad = self.functoriality_violation()
        if bad is not None:
            raise ValueError(f"not a functor: composite {bad[0]!r} o {bad[1]!r} is not respected")


def zero_vect(shape: FinCat, p: int) -> VectDiagram:
    return VectDiagram(shape, p, {})


def vect_sum(parts: list[VectDiagram]) -> VectDiagram:
    shape, p = parts[0].shape, parts[0].p
    dims = {a: sum(x.dims[a] for x in parts) for a in shape.objects}
    maps = {}
    for f in shape.nonidentity:
        a, b = shape.morphisms[f]
        m = zeros(dims[b], dims[a])
        r = c = 0
        for x in parts:
            m[r: r + x.dims[b], c: c + x.dims[a]] = x.maps[f]
            r += x.dims[b]
            c += x.dims[a]
        maps[f] = m
    return VectDiagram(shape, p, dims, maps)


def vect_restrict(x: VectDiagram, u: Functor) -> VectDiagram:
    if u.target is not x.shape and u.target.objects != x.shape.objects:
        raise ValueError("functor target does not match the diagram shape")
    return VectDiagram(
        u.source, x.p, {a: x.dims[u(a)] for a in u.source.objects},
        {f: x.map(u.on_mor(f)) for f in u.source.nonidentity},
    )


def corepresentable(shape: FinCat, b: Obj, p: int) -> VectDiagram:
    """``k[Hom(b, -)]`` with transition maps given by composition."""
    basis = {c: shape.hom(b, c) for c in shape.objects}
    maps = {}
    for f in shape.nonidentity:
        s, t = shape.morphisms[f]
        m = zeros(len(basis[t]), len(basis[s]))
        for j, g in enumerate(basis[s]):
            m[basis[t].index(shape.compose(f, g)), j] = 1
        maps[f] = m
    return VectDiagram(shape, p, {c: len(basis[c]) for c in shape.objects}, maps)


def simple(shape: FinCat, b: Obj, p: int) -> VectDiagram:
    """``k`` at ``b`` and zero elsewhere."""
    return VectDiagram(shape, p, {b: 1})


def hom_basis(x: VectDiagram, y: VectDiagram) -> list[dict[Obj, np.ndarray]]:
    """Basis of the space of natural transformations ``x -> y``.

    The space is the null space of the stacked naturality constraints
    ``y(f) h_a - h_b x(f) = 0`` over nonidentity ``f: a -> b``.
    """
    shape, p = x.shape, x.p
    offs, total = {}, 0
    for a in shape.objects:
        offs[a] = total
        total += y.dims[a] * x.dims[a]
    if total == 0:
        return []
    rows = []
    for f in shape.nonidentity:
        a, b = shape.morphisms[f]
        r, c = y.dims[b], x.dims[a]
        if not (r and c):
            continue
        eq = zeros(r * c, total)
        if y.dims[a]:
            eq[:, offs[a]: offs[a] + y.dims[a] * c] += np.kron(y.maps[f], linalg.eye(c))
        if x.dims[b]:
            eq[:, offs[b]: offs[b] + r * x.dims[b]] -= np.kron(linalg.eye(r), x.maps[f].T)
        rows.append(eq)
    a_mat = linalg.reduce(np.vstack(rows), p) if rows else zeros(0, total)
    basis = linalg.nullspace(a_mat, p)
    out = []
    for k in range(basis.shape[1]):
        v = basis[:, k]
        out.append({a: v[offs[a]: offs[a] + y.dims[a] * x.dims[a]].reshape(y.dims[a], x.dims[a]) for a in shape.objects})
    return out


def hom_dim(x: VectDiagram, y: VectDiagram) -> int:
    return len(hom_basis(x, y))


def random_hom(rng: np.random.Generator, x: VectDiagram, y: VectDiagram) -> dict[Obj, np.ndarray]:
    """A uniformly random natural transformation ``x -> y``."""
    basis = hom_basis(x, y)
    out = {a: zeros(y.dims[a], x.dims[a]) for a in x.shape.objects}
    for h in basis:
        c = int(rng.integers(0, x.p))
        if c:
            for a in out:
                out[a] = (out[a] + c * h[a]) % x.p
    return out


def is_natural(x: VectDiagram, y: VectDiagram, h: Mapping[Obj, np.ndarray]) -> bool:
    p = x.p
    for f in x.shape.nonidentity:
        a, b = x.shape.morphisms[f]
        if not np.array_equal(matmul(y.maps[f], h[a], p), matmul(h[b], x.maps[f], p)):
            return False
    return True
