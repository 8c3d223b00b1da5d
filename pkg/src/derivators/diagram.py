"""Strict diagrams of chain complexes indexed by finite categories."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import chainalg as ca
from . import fincat as fc
from . import linalg
from .chainalg import ChainComplex, ChainMap
from .fincat import FinCat, Functor, Mor, Obj
from .vect import VectDiagram, corepresentable, random_hom, simple, vect_sum


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Diagram:
    """A strict functor ``shape -> Ch(F_p)``.

    ``maps`` holds a chain map for every nonidentity morphism; identities are
    implicit.
    """

    shape: FinCat
    p: int
    values: Mapping[Obj, ChainComplex]
    maps: Mapping[Mor, ChainMap] = field(default_factory=dict)

    def __post_init__(self):
        vals = {}
        for a in self.shape.objects:
            x = self.values.get(a)
            vals[a] = ca.zero_complex(self.p) if x is None else x
            if vals[a].p != self.p:
                raise DiagramError("all values must share the diagram's prime")
        maps = {}
        for f in self.shape.nonidentity:
            a, b = self.shape.morphisms[f]
            m = self.maps.get(f)
            if m is None:
                m = ca.zero_map(vals[a], vals[b])
            elif m.source.dims != vals[a].dims or m.target.dims != vals[b].dims:
                raise DiagramError(f"map for {f!r} has wrong source or target")
            maps[f] = m
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "maps", maps)

    def __getitem__(self, a: Obj) -> ChainComplex:
        return self.values[a]

    def map(self, f: Mor) -> ChainMap:
        if self.shape.is_identity(f):
            return ca.identity_map(self.values[self.shape.src(f)])
        return self.maps[f]

    def arrow(self, a: Obj, b: Obj) -> ChainMap:
        """The map along the unique morphism ``a -> b`` (posets)."""
        homs = self.shape.hom(a, b)
        if len(homs) != 1:
            raise DiagramError(f"expected a unique morphism {a!r} -> {b!r}")
        return self.map(homs[0])

    @property
    def total_dim(self) -> int:
        return sum(x.total_dim for x in self.values.values())

    def __repr__(self) -> str:
        return f"Diagram({self.shape.name}, dims={ {a: x.total_dim for a, x in self.values.items()} })"


def check_functoriality(x: Diagram) -> tuple[Mor, Mor] | None:
    """First composable pair whose composite is not respected, else ``None``.

    Also validates every value and every map.
    """
    for v in x.values.values():
        v.check()
    for m in x.maps.values():
        m.check()
    for (g, f), gf in x.shape.table.items():
        if not ca.compose(x.maps[g], x.maps[f]).equals(x.maps[gf]):
            return (g, f)
    return None


def is_functorial(x: Diagram) -> bool:
    try:
        return check_functoriality(x) is None
    except ca.ComplexError:
        return False


@dataclass(frozen=True, eq=False)
class DiagramMap:
    source: Diagram
    target: Diagram
    comps: Mapping[Obj, ChainMap]

    def __getitem__(self, a: Obj) -> ChainMap:
        return self.comps[a]

    def naturality_violation(self) -> Mor | None:
        for f in self.source.shape.nonidentity:
            a, b = self.source.shape.morphisms[f]
            lhs = ca.compose(self.target.maps[f], self.comps[a])
            rhs = ca.compose(self.comps[b], self.source.maps[f])
            if not lhs.equals(rhs):
                return f
        return None

    def is_natural(self) -> bool:
        return self.naturality_violation() is None

    def is_pointwise_quasi_iso(self) -> bool:
        return all(ca.is_quasi_iso(m) for m in self.comps.values())


def identity_diagram_map(x: Diagram) -> DiagramMap:
    return DiagramMap(x, x, {a: ca.identity_map(v) for a, v in x.values.items()})


def restrict(x: Diagram, u: Functor) -> Diagram:
    """Precomposition with ``u``."""
    if u.target is not x.shape and u.target.objects != x.shape.objects:
        raise DiagramError("functor target does not match the diagram shape")
    return Diagram(
        u.source, x.p,
        {a: x[u(a)] for a in u.source.objects},
        {f: x.map(u.on_mor(f)) for f in u.source.nonidentity},
    )


def restrict_map(h: DiagramMap, u: Functor) -> DiagramMap:
    return DiagramMap(restrict(h.source, u), restrict(h.target, u), {a: h.comps[u(a)] for a in u.source.objects})


def constant_diagram(shape: FinCat, x: ChainComplex) -> Diagram:
    ident = ca.identity_map(x)
    return Diagram(shape, x.p, {a: x for a in shape.objects}, {f: ident for f in shape.nonidentity})


def single(x: ChainComplex) -> Diagram:
    """``x`` as a diagram over the point."""
    return Diagram(fc.point(), x.p, {0: x})


def arrow_diagram(f: ChainMap) -> Diagram:
    """``f`` as a diagram over ``[1]``."""
    return Diagram(fc.chain(1), f.p, {0: f.source, 1: f.target}, {(0, 1): f})


def square_diagram(values: Mapping[Obj, ChainComplex], maps: Mapping[tuple[Obj, Obj], ChainMap], p: int) -> Diagram:
    """Square from its four edge maps; the diagonal is their composite."""
    sq = fc.square()
    m = dict(maps)
    m[((0, 0), (1, 1))] = ca.compose(m[((1, 0), (1, 1))], m[((0, 0), (1, 0))])
    return Diagram(sq, p, values, m)


def zero_diagram(shape: FinCat, p: int) -> Diagram:
    return Diagram(shape, p, {})


def shift_diagram(x: Diagram, k: int) -> Diagram:
    vals = {a: ca.shift(v, k) for a, v in x.values.items()}
    maps = {f: ChainMap(vals[x.shape.src(f)], vals[x.shape.dst(f)], {n + k: c for n, c in m.comps.items()}) for f, m in x.maps.items()}
    return Diagram(x.shape, x.p, vals, maps)


def from_graded(shape: FinCat, p: int, pieces: Mapping[int, VectDiagram], diffs: Mapping[int, Mapping[Obj, np.ndarray]]) -> Diagram:
    """Assemble a diagram from graded vector-space diagrams.

    ``pieces[q]`` is the degree-``q`` part; ``diffs[q]`` the natural map
    ``pieces[q] -> pieces[q-1]``.
    """
    vals = {}
    for a in shape.objects:
        dims = {q: v.dims[a] for q, v in pieces.items()}
        d = {q: h[a] for q, h in diffs.items() if h[a].size}
        vals[a] = ChainComplex(p, dims, d)
    maps = {}
    for f in shape.nonidentity:
        a, b = shape.morphisms[f]
        maps[f] = ChainMap(vals[a], vals[b], {q: v.maps[f] for q, v in pieces.items()})
    return Diagram(shape, p, vals, maps)


def cell(shape: FinCat, b: Obj, p: int, degree: int = 0, kind: str = "free") -> Diagram:
    """A single cell: ``k[Hom(b,-)]`` (``kind='free'``) or ``k`` at ``b`` only (``'simple'``)."""
    v = corepresentable(shape, b, p) if kind == "free" else simple(shape, b, p)
    return from_graded(shape, p, {degree: v}, {})


def random_diagram(shape: FinCat, seed: int, budget: int = 12, p: int = linalg.DEFAULT_PRIME, degrees: tuple[int, ...] = (-1, 0, 1)) -> Diagram:
    """Seeded random strict diagram over a strictly homotopy finite shape.

    A direct sum of two-term blocks.  Each block puts free or simple cells in
    degrees ``q`` and ``q+1`` and joins them by a random natural map, so
    ``d^2 = 0`` and functoriality hold by construction.  ``budget`` caps the
    total dimension summed over objects and degrees.
    """
    if not fc.is_strictly_homotopy_finite(shape):
        raise fc.ShapeError(f"{shape!r} is not strictly homotopy finite")
    rng = np.random.default_rng(seed)
    if budget <= 0 or not shape.objects:
        return zero_diagram(shape, p)
    target = int(rng.integers(max(1, budget // 2), budget + 1))
    cells: dict[int, list[VectDiagram]] = {}
    used, attempts = 0, 0
    base = {q: [] for q in degrees}
    while used < target and attempts < 40:
        attempts += 1
        b = shape.objects[int(rng.integers(len(shape.objects)))]
        kind = "free" if rng.random() < 0.5 else "simple"
        v = corepresentable(shape, b, p) if kind == "free" else simple(shape, b, p)
        if used + v.total_dim > budget:
            continue
        q = degrees[int(rng.integers(len(degrees)))]
        top = bool(rng.random() < 0.5)
        base[q].append((top, v))
        used += v.total_dim
    pieces: dict[int, VectDiagram] = {}
    diffs: dict[int, dict] = {}
    blocks = []
    for q, cs in base.items():
        lower = [v for top, v in cs if not top]
        upper = [v for top, v in cs if top]
        if not cs:
            continue
        lo = vect_sum(lower) if lower else VectDiagram(shape, p, {})
        hi = vect_sum(upper) if upper else VectDiagram(shape, p, {})
        blocks.append((q, lo, hi, random_hom(rng, hi, lo)))
    # degree q collects the lower part of block q and the upper part of block q-1
    by_deg: dict[int, list] = {}
    for idx, (q, lo, hi, h) in enumerate(blocks):
        by_deg.setdefault(q, []).append((idx, "lo", lo))
        by_deg.setdefault(q + 1, []).append((idx, "hi", hi))
    offsets: dict[int, dict] = {}
    for q, parts in by_deg.items():
        pieces[q] = vect_sum([v for _, _, v in parts])
        offsets[q] = {}
        off = {a: 0 for a in shape.objects}
        for idx, tag, v in parts:
            offsets[q][(idx, tag)] = dict(off)
            for a in shape.objects:
                off[a] += v.dims[a]
    for idx, (q, lo, hi, h) in enumerate(blocks):
        d = diffs.setdefault(q + 1, {a: linalg.zeros(pieces[q].dims[a], pieces[q + 1].dims[a]) for a in shape.objects})
        for a in shape.objects:
            r0 = offsets[q][(idx, "lo")][a]
            c0 = offsets[q + 1][(idx, "hi")][a]
            d[a][r0: r0 + lo.dims[a], c0: c0 + hi.dims[a]] = h[a]
    return from_graded(shape, p, pieces, diffs)


def random_arrow(seed: int, budget: int = 6, p: int = linalg.DEFAULT_PRIME) -> Diagram:
    return random_diagram(fc.chain(1), seed, budget, p)


def random_square(seed: int, budget: int = 10, p: int = linalg.DEFAULT_PRIME) -> Diagram:
    return random_diagram(fc.square(), seed, budget, p)


# ---------------------------------------------------------------- JSON

def _key(a) -> str:
    return json.dumps(a)


def _unkey(s: str):
    return fc._label(json.loads(s))


def diagram_to_json(x: Diagram, category: str | None = None) -> dict:
    return {
        "category": category if category is not None else fc.category_to_json(x.shape),
        "p": x.p,
        "objects": {_key(a): ca.complex_to_json(v) for a, v in x.values.items()},
        "morphisms": {_key(f): ca.map_to_json(m) for f, m in x.maps.items()},
    }


def diagram_from_json(obj: Mapping) -> Diagram:
    try:
        cat = obj["category"]
        shape = fc.standard_shape(cat) if isinstance(cat, str) else fc.category_from_json(cat)
        p = int(obj["p"])
        vals = {_unkey(k): ca.complex_from_json(v) for k, v in obj["objects"].items()}
        unknown = set(vals) - set(shape.objects)
        if unknown:
            raise DiagramError(f"objects not in category: {sorted(map(repr, unknown))}")
        vals = {a: vals.get(a, ca.zero_complex(p)) for a in shape.objects}
        maps = {}
        for k, m in obj.get("morphisms", {}).items():
            f = _unkey(k)
            if f not in shape.morphisms:
                raise DiagramError(f"morphism {k} not in category")
            a, b = shape.morphisms[f]
            maps[f] = ca.map_from_json(m, vals[a], vals[b])
    except (KeyError, TypeError) as e:
        raise DiagramError(f"malformed diagram: {e}") from e
    x = Diagram(shape, p, vals, maps)
    bad = check_functoriality(x)
    if bad is not None:
        raise DiagramError(f"diagram is not functorial at composite {bad[0]!r} o {bad[1]!r}")
    return x
