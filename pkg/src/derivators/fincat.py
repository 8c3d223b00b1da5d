"""Finite categories with explicit composition tables, functors, slices and nerves.

Posets are the common case: their morphisms are the pairs ``(a, b)`` with
``a <= b`` and composition is forced.  General categories carry arbitrary
hashable morphism ids and an explicit table of composites.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

Obj = Hashable
Mor = Hashable
# an n-string: objects a_0..a_n and the n nonidentity morphisms between them
String = tuple[tuple[Obj, ...], tuple[Mor, ...]]


class CategoryError(ValueError):
    """Raised for malformed categories or functors."""


class ShapeError(CategoryError):
    pass


class FinCat:
    """A finite category.

    ``morphisms`` maps every morphism id (identities included) to its
    ``(source, target)``; ``identities`` maps objects to their identity ids;
    ``table`` maps composable pairs ``(g, f)`` of nonidentity morphisms to
    ``g o f``.
    """

    def __init__(
        self,
        objects: Sequence[Obj],
        morphisms: Mapping[Mor, tuple[Obj, Obj]],
        identities: Mapping[Obj, Mor],
        table: Mapping[tuple[Mor, Mor], Mor],
        name: str = "",
        poset: bool = False,
        check: bool = True,
    ):
        self.objects: tuple = tuple(objects)
        self.morphisms: dict = dict(morphisms)
        self.identities: dict = dict(identities)
        self.table: dict = dict(table)
        self.name = name
        self.is_poset = poset
        if len(set(self.objects)) != len(self.objects):
            raise CategoryError("duplicate object labels")
        self._index = {a: i for i, a in enumerate(self.objects)}
        self._id_set = set(self.identities.values())
        self._hom: dict[tuple[Obj, Obj], list[Mor]] = {}
        for f, (s, t) in self.morphisms.items():
            if s not in self._index or t not in self._index:
                raise CategoryError(f"morphism {f!r} has undeclared endpoint")
            self._hom.setdefault((s, t), []).append(f)
        if check:
            self.check()

    def __repr__(self) -> str:
        return f"FinCat({self.name or '?'}, {len(self.objects)} objects, {len(self.nonidentity)} arrows)"

    def __len__(self) -> int:
        return len(self.objects)

    def __contains__(self, a) -> bool:
        return a in self._index

    def index(self, a: Obj) -> int:
        return self._index[a]

    def src(self, f: Mor) -> Obj:
        return self.morphisms[f][0]

    def dst(self, f: Mor) -> Obj:
        return self.morphisms[f][1]

    def identity(self, a: Obj) -> Mor:
        return self.identities[a]

    def is_identity(self, f: Mor) -> bool:
        return f in self._id_set

    def hom(self, a: Obj, b: Obj) -> list[Mor]:
        return self._hom.get((a, b), [])

    @cached_property
    def nonidentity(self) -> list[Mor]:
        return [f for f in self.morphisms if f not in self._id_set]

    @cached_property
    def out_arrows(self) -> dict[Obj, list[Mor]]:
        out: dict[Obj, list[Mor]] = {a: [] for a in self.objects}
        for f in self.nonidentity:
            out[self.src(f)].append(f)
        return out

    def compose(self, g: Mor, f: Mor) -> Mor:
        """``g o f``."""
        if self.dst(f) != self.src(g):
            raise CategoryError(f"{g!r} o {f!r} is not composable")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        return self.table[(g, f)]

    def compose_path(self, fs: Sequence[Mor]) -> Mor:
        """Composite of ``f_1, ..., f_n`` listed in diagrammatic order."""
        h = fs[0]
        for f in fs[1:]:
            h = self.compose(f, h)
        return h

    def check(self) -> None:
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.morphisms.get(i) != (a, a):
                raise CategoryError(f"object {a!r} lacks an identity")
        nonid = self.nonidentity
        for f in nonid:
            for g in self.out_arrows[self.dst(f)]:
                gf = self.table.get((g, f))
                if gf is None:
                    raise CategoryError(f"missing composite {g!r} o {f!r}")
                if self.morphisms[gf] != (self.src(f), self.dst(g)):
                    raise CategoryError(f"composite {g!r} o {f!r} has wrong endpoints")
        for f in nonid:
            for g in self.out_arrows[self.dst(f)]:
                for h in self.out_arrows[self.dst(g)]:
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        raise CategoryError(f"associativity fails on {h!r}, {g!r}, {f!r}")

    @cached_property
    def strings(self) -> list[list[String]]:
        """Nondegenerate simplices of the nerve, grouped by dimension.

        Only defined for strictly homotopy finite categories, where chains of
        nonidentity arrows cannot cycle.
        """
        if not is_strictly_homotopy_finite(self):
            raise ShapeError(f"{self!r} is not strictly homotopy finite")
        levels: list[list[String]] = [[((a,), ()) for a in self.objects]]
        while True:
            nxt = []
            for objs, mors in levels[-1]:
                for g in self.out_arrows[objs[-1]]:
                    nxt.append((objs + (self.dst(g),), mors + (g,)))
            if not nxt:
                break
            levels.append(nxt)
        return levels

    def initial_object(self) -> Obj | None:
        for a in self.objects:
            if all(len(self.hom(a, b)) == 1 for b in self.objects):
                return a
        return None

    def terminal_object(self) -> Obj | None:
        for b in self.objects:
            if all(len(self.hom(a, b)) == 1 for a in self.objects):
                return b
        return None

    def full_subcategory(self, objs: Iterable[Obj], name: str = "") -> "FinCat":
        keep = [a for a in self.objects if a in set(objs)]
        ks = set(keep)
        mors = {f: st for f, st in self.morphisms.items() if st[0] in ks and st[1] in ks}
        table = {k: v for k, v in self.table.items() if k[0] in mors and k[1] in mors}
        return FinCat(keep, mors, {a: self.identities[a] for a in keep}, table, name=name, poset=self.is_poset, check=False)


def poset(elements: Sequence[Obj], leq: Callable[[Obj, Obj], bool] | Iterable[tuple[Obj, Obj]], name: str = "") -> FinCat:
    """Category of a finite poset; ``leq`` is a predicate or generating relations.

    Generating relations are closed reflexively and transitively.
    """
    elements = list(elements)
    if callable(leq):
        rel = {(a, b) for a in elements for b in elements if a == b or leq(a, b)}
    else:
        rel = {(a, a) for a in elements} | {tuple(r) for r in leq}
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise CategoryError(f"relation is not antisymmetric at {a!r}, {b!r}")
    morphisms = {(a, b): (a, b) for a, b in rel}
    identities = {a: (a, a) for a in elements}
    table = {}
    for (a, b) in rel:
        for (c, d) in rel:
            if b == c and a != b and c != d:
                table[((c, d), (a, b))] = (a, d)
    return FinCat(elements, morphisms, identities, table, name=name, poset=True, check=False)


def product(a: FinCat, b: FinCat, name: str = "") -> FinCat:
    objs = [(x, y) for x in a.objects for y in b.objects]
    name = name or f"{a.name}x{b.name}"
    if a.is_poset and b.is_poset:
        return poset(objs, lambda s, t: bool(a.hom(s[0], t[0])) and bool(b.hom(s[1], t[1])), name=name)
    mors = {}
    for f, (s, t) in a.morphisms.items():
        for g, (u, v) in b.morphisms.items():
            mors[(f, g)] = ((s, u), (t, v))
    ids = {(x, y): (a.identity(x), b.identity(y)) for x, y in objs}
    idset = set(ids.values())
    table = {}
    for (f, g) in mors:
        for (f2, g2) in mors:
            if (f, g) in idset or (f2, g2) in idset:
                continue
            if a.dst(f) == a.src(f2) and b.dst(g) == b.src(g2):
                table[((f2, g2), (f, g))] = (a.compose(f2, f), b.compose(g2, g))
    return FinCat(objs, mors, ids, table, name=name, check=False)


class Functor:
    """A functor between finite categories given by object and morphism assignments."""

    def __init__(self, source: FinCat, target: FinCat, obj_map: Mapping, mor_map: Mapping | None = None, name: str = "", check: bool = True):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.name = name
        if mor_map is None:
            if not target.is_poset:
                raise CategoryError("morphism assignment required for non-poset targets")
            mor_map = {f: (self.obj_map[s], self.obj_map[t]) for f, (s, t) in source.morphisms.items()}
        self.mor_map = dict(mor_map)
        if check:
            self.check()

    def __repr__(self) -> str:
        return f"Functor({self.name or '?'}: {self.source.name} -> {self.target.name})"

    def __call__(self, a: Obj) -> Obj:
        return self.obj_map[a]

    def on_mor(self, f: Mor) -> Mor:
        return self.mor_map[f]

    def check(self) -> None:
        s, t = self.source, self.target
        for a in s.objects:
            if self.obj_map.get(a) not in t:
                raise CategoryError(f"object {a!r} is not sent to an object of the target")
            if self.mor_map.get(s.identity(a)) != t.identity(self.obj_map[a]):
                raise CategoryError(f"identity of {a!r} is not preserved")
        for f, (x, y) in s.morphisms.items():
            g = self.mor_map.get(f)
            if g not in t.morphisms or t.morphisms[g] != (self.obj_map[x], self.obj_map[y]):
                raise CategoryError(f"morphism {f!r} is sent to a morphism with wrong endpoints")
        for (g, f), gf in s.table.items():
            if t.compose(self.mor_map[g], self.mor_map[f]) != self.mor_map[gf]:
                raise CategoryError(f"composition {g!r} o {f!r} is not preserved")

    def then(self, other: "Functor") -> "Functor":
        """``other o self``."""
        if other.source is not self.target and other.source.objects != self.target.objects:
            raise CategoryError("functors are not composable")
        return Functor(
            self.source,
            other.target,
            {a: other(self(a)) for a in self.source.objects},
            {f: other.on_mor(self.on_mor(f)) for f in self.source.morphisms},
            name=f"{other.name}.{self.name}",
            check=False,
        )

    def is_injective_on_objects(self) -> bool:
        return len(set(self.obj_map.values())) == len(self.obj_map)

    def is_fully_faithful(self) -> bool:
        s, t = self.source, self.target
        for a in s.objects:
            for b in s.objects:
                img = [self.mor_map[f] for f in s.hom(a, b)]
                if len(set(img)) != len(img) or set(img) != set(t.hom(self(a), self(b))):
                    return False
        return True

    @cached_property
    def image(self) -> set:
        return set(self.obj_map.values())

    def _require_embedding(self) -> None:
        if not (self.is_fully_faithful() and self.is_injective_on_objects()):
            raise CategoryError(f"{self!r} is not a fully faithful embedding")

    def is_cosieve(self) -> bool:
        """Image closed under morphisms leaving it."""
        self._require_embedding()
        return all(self.target.dst(f) in self.image for f in self.target.nonidentity if self.target.src(f) in self.image)

    def is_sieve(self) -> bool:
        """Image closed under morphisms entering it."""
        self._require_embedding()
        return all(self.target.src(f) in self.image for f in self.target.nonidentity if self.target.dst(f) in self.image)


def identity_functor(a: FinCat) -> Functor:
    return Functor(a, a, {x: x for x in a.objects}, {f: f for f in a.morphisms}, name="id", check=False)


def inclusion(sub: FinCat, cat: FinCat, name: str = "") -> Functor:
    """Inclusion of a full subcategory sharing object labels and morphism ids."""
    return Functor(sub, cat, {a: a for a in sub.objects}, {f: f for f in sub.morphisms}, name=name, check=False)


def object_functor(cat: FinCat, b: Obj, name: str = "") -> Functor:
    """The functor ``1 -> cat`` picking out ``b``."""
    pt = point()
    return Functor(pt, cat, {0: b}, {(0, 0): cat.identity(b)}, name=name or f"{b}", check=False)


def terminal_functor(cat: FinCat) -> Functor:
    pt = point()
    return Functor(cat, pt, {a: 0 for a in cat.objects}, {f: (0, 0) for f in cat.morphisms}, name="pi", check=False)


def product_functor(u: Functor, v: Functor, source: FinCat | None = None, target: FinCat | None = None) -> Functor:
    """``u x v`` between the product categories built by :func:`product`."""
    s = source or product(u.source, v.source)
    t = target or product(u.target, v.target)
    obj = {(a, b): (u(a), v(b)) for a, b in s.objects}
    if t.is_poset:
        return Functor(s, t, obj, name=f"{u.name}x{v.name}", check=False)
    mor = {(f, g): (u.on_mor(f), v.on_mor(g)) for f, g in s.morphisms}
    return Functor(s, t, obj, mor, name=f"{u.name}x{v.name}", check=False)


class Slice:
    """The comma category ``(u/b)`` (``over=True``) or ``(b/u)``.

    Objects are pairs ``(a, phi)`` with ``phi: u(a) -> b`` (resp.
    ``b -> u(a)``); morphisms are ``(alpha, src, dst)`` for ``alpha`` in the
    source of ``u`` making the triangle commute.
    """

    def __init__(self, u: Functor, b: Obj, over: bool = True):
        self.u, self.b, self.over = u, b, over
        t, s = u.target, u.source
        objs = []
        for a in s.objects:
            homs = t.hom(u(a), b) if over else t.hom(b, u(a))
            objs.extend((a, phi) for phi in homs)
        mors, ids, by_pair = {}, {}, {}
        for x in objs:
            for y in objs:
                for alpha in s.hom(x[0], y[0]):
                    ua = u.on_mor(alpha)
                    ok = t.compose(y[1], ua) == x[1] if over else t.compose(ua, x[1]) == y[1]
                    if ok:
                        m = (alpha, x, y)
                        mors[m] = (x, y)
                        by_pair.setdefault((x, y), []).append(m)
            ids[x] = (s.identity(x[0]), x, x)
        table = {}
        for m1 in mors:
            for m2 in mors:
                if m1[2] == m2[1] and m1 not in ids.values() and m2 not in ids.values():
                    table[(m2, m1)] = (s.compose(m2[0], m1[0]), m1[1], m2[2])
        side = "/" if over else "\\"
        self.category = FinCat(objs, mors, ids, table, name=f"({u.name}{side}{b})", check=False)
        self.projection = Functor(
            self.category, s, {x: x[0] for x in objs}, {m: m[0] for m in mors}, name="proj", check=False
        )


def slice_over(u: Functor, b: Obj) -> tuple[FinCat, Functor]:
    sl = Slice(u, b, over=True)
    return sl.category, sl.projection


def slice_under(u: Functor, b: Obj) -> tuple[FinCat, Functor]:
    sl = Slice(u, b, over=False)
    return sl.category, sl.projection


def slice_functor(u: Functor, src: FinCat, dst: FinCat, beta: Mor, over: bool = True) -> Functor:
    """Functor between slices induced by ``beta`` (post- or pre-composition)."""
    t = u.target

    def move(x):
        a, phi = x
        return (a, t.compose(beta, phi)) if over else (a, t.compose(phi, beta))

    obj = {x: move(x) for x in src.objects}
    mor = {m: (m[0], move(m[1]), move(m[2])) for m in src.morphisms}
    return Functor(src, dst, obj, mor, check=False)


def nerve(a: FinCat) -> list[list[String]]:
    """Nondegenerate simplices by dimension; raises unless strictly homotopy finite."""
    return a.strings


def nerve_counts(a: FinCat) -> list[int]:
    return [len(level) for level in nerve(a)]


def is_strictly_homotopy_finite(a: FinCat) -> bool:
    """Finite, skeletal, and without nonidentity endomorphisms."""
    for f in a.nonidentity:
        if a.src(f) == a.dst(f):
            return False
    for x, y in itertools.combinations(a.objects, 2):
        if a.hom(x, y) and a.hom(y, x):
            return False
    return True


# ---------------------------------------------------------------- shapes

def empty() -> FinCat:
    return FinCat([], {}, {}, {}, name="empty", poset=True)


def point() -> FinCat:
    return poset([0], [], name="1")


def chain(n: int) -> FinCat:
    return poset(list(range(n + 1)), lambda a, b: a <= b, name=f"[{n}]")


def _grid(sizes: Sequence[int], keep: Callable[[tuple], bool] | None = None, name: str = "") -> FinCat:
    pts = [t for t in itertools.product(*(range(s + 1) for s in sizes)) if keep is None or keep(t)]
    return poset(pts, lambda s, t: all(i <= j for i, j in zip(s, t)), name=name)


def square() -> FinCat:
    return _grid([1, 1], name="sq")


def span() -> FinCat:
    """The punctured square without its terminal vertex ``(1,1)``."""
    return _grid([1, 1], lambda t: t != (1, 1), name="span")


def cospan() -> FinCat:
    """The punctured square without its initial vertex ``(0,0)``."""
    return _grid([1, 1], lambda t: t != (0, 0), name="cospan")


def cocone_square() -> FinCat:
    """The square with a new terminal object ``'inf'`` adjoined."""
    sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
    rel = [(a, b) for a in sq for b in sq if a[0] <= b[0] and a[1] <= b[1]]
    rel += [(a, "inf") for a in sq]
    return poset(sq + ["inf"], rel, name="P")


def grid() -> FinCat:
    """``[2] x [1]``."""
    return _grid([2, 1], name="grid")


def cube(n: int) -> FinCat:
    if n > 3:
        raise ShapeError("cubes of dimension > 3 are not supported")
    if n < 0:
        raise ShapeError("negative cube dimension")
    return _grid([1] * n, name=f"[1]^{n}")


def discrete(n: int) -> FinCat:
    return poset(list(range(n)), [], name=f"disc{n}")


def cocone_on(a: FinCat, apex: Obj = "top") -> FinCat:
    """``a`` with a terminal object adjoined (for posets)."""
    rel = [(s, t) for s in a.objects for t in a.objects if a.hom(s, t)] + [(s, apex) for s in a.objects]
    return poset(list(a.objects) + [apex], rel, name=f"{a.name}>")


def cone_on(a: FinCat, apex: Obj = "bot") -> FinCat:
    """``a`` with an initial object adjoined (for posets)."""
    rel = [(s, t) for s in a.objects for t in a.objects if a.hom(s, t)] + [(apex, s) for s in a.objects]
    return poset([apex] + list(a.objects), rel, name=f"<{a.name}")


# The category B: coordinates (horizontal, depth, vertical) in [1]x[2]x[2].
FIG1_STAGES: dict[str, list[tuple[int, int, int]]] = {}
_sq_img = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 2, 0)]
_adds = [
    ("B1", [(1, 1, 0)]),
    ("B2", [(0, 2, 0)]),
    ("B3", [(0, 0, 1), (0, 1, 1), (0, 2, 1)]),
    ("B4", [(1, 0, 1), (1, 1, 1), (1, 2, 1)]),
    ("B5", [(1, 0, 2), (1, 1, 2)]),
    ("B", [(1, 2, 2)]),
]
_acc = list(_sq_img)
for _name, _new in _adds:
    _acc = _acc + _new
    FIG1_STAGES[_name] = list(_acc)

# The grid [2]x[1] built from its middle vertical arrow.
GRID_STAGES: dict[str, list[tuple[int, int]]] = {
    "A0": [(1, 0), (1, 1)],
    "A1": [(1, 0), (1, 1), (2, 0)],
    "A2": [(1, 0), (1, 1), (2, 0), (2, 1)],
    "A3": [(1, 0), (1, 1), (2, 0), (2, 1), (0, 1)],
    "grid": [(1, 0), (1, 1), (2, 0), (2, 1), (0, 1), (0, 0)],
}


def _sub3(objs, name):
    return poset(objs, lambda s, t: all(i <= j for i, j in zip(s, t)), name=name)


SHAPES = (
    "empty", "point", "chain", "square", "span", "cospan", "cocone", "grid",
    "B", "B1", "B2", "B3", "B4", "B5", "A1", "A2", "A3", "cube", "discrete",
)


def standard_shape(name: str, *params: int) -> FinCat:
    """Catalogued index shapes by name."""
    if name == "empty":
        return empty()
    if name == "point":
        return point()
    if name == "chain":
        (n,) = params or (1,)
        return chain(n)
    if name == "square":
        return square()
    if name == "span":
        return span()
    if name == "cospan":
        return cospan()
    if name in ("cocone", "P"):
        return cocone_square()
    if name == "grid":
        return grid()
    if name in FIG1_STAGES:
        return _sub3(FIG1_STAGES[name], name)
    if name in ("A1", "A2", "A3"):
        return _sub3(GRID_STAGES[name], name)
    if name == "cube":
        (n,) = params or (2,)
        return cube(n)
    if name == "discrete":
        (n,) = params or (2,)
        return discrete(n)
    raise ShapeError(f"unknown shape {name!r}")


# ---------------------------------------------------------------- named functors

def poset_functor(src: FinCat, dst: FinCat, obj_map: Mapping | Callable, name: str = "") -> Functor:
    if callable(obj_map):
        obj_map = {a: obj_map(a) for a in src.objects}
    return Functor(src, dst, obj_map, name=name)


def span_inclusion() -> Functor:
    return inclusion(span(), square(), name="i_span")


def cospan_inclusion() -> Functor:
    return inclusion(cospan(), square(), name="i_cospan")


def source_square() -> Functor:
    """``s``: the square as the source square of ``P``."""
    return poset_functor(square(), cocone_square(), lambda a: a, name="s")


def target_square() -> Functor:
    """``t``: the square with ``(1,1)`` sent to ``inf``."""
    return poset_functor(square(), cocone_square(), lambda a: "inf" if a == (1, 1) else a, name="t")


def point_at(cat: FinCat, b: Obj, name: str = "") -> Functor:
    return poset_functor(point(), cat, {0: b}, name=name or str(b))


def fig1_inclusions() -> list[Functor]:
    """``i_1, ..., i_6`` building B from the square."""
    sq = square()
    img = dict(zip([(0, 0), (1, 0), (0, 1), (1, 1)], _sq_img))
    cats = [standard_shape(n) for n in ("B1", "B2", "B3", "B4", "B5", "B")]
    out = [poset_functor(sq, cats[0], img, name="i1")]
    for k in range(1, 6):
        out.append(poset_functor(cats[k - 1], cats[k], lambda a: a, name=f"i{k + 1}"))
    return out


def fig1_embedding() -> Functor:
    fs = fig1_inclusions()
    u = fs[0]
    for f in fs[1:]:
        u = u.then(f)
    return u


def grid_inclusions() -> list[Functor]:
    """``i_1, ..., i_4`` building ``[2]x[1]`` from its middle vertical arrow."""
    c1 = chain(1)
    cats = [_sub3(GRID_STAGES[n], n) for n in ("A1", "A2", "A3")] + [grid()]
    out = [poset_functor(c1, cats[0], {0: (1, 0), 1: (1, 1)}, name="i1")]
    for k in range(1, 4):
        out.append(poset_functor(cats[k - 1], cats[k], lambda a: a, name=f"i{k + 1}"))
    return out


# ---------------------------------------------------------------- JSON

def _label(x):
    if isinstance(x, list):
        return tuple(_label(y) for y in x)
    return x


def category_from_json(obj: Mapping) -> FinCat:
    """Accepts the explicit format or the poset shorthand."""
    try:
        if "elements" in obj:
            els = [_label(e) for e in obj["elements"]]
            return poset(els, [(_label(a), _label(b)) for a, b in obj.get("leq", [])], name=obj.get("name", ""))
        objs = [_label(o) for o in obj["objects"]]
        mors, ids = {}, {}
        for m in obj["morphisms"]:
            mors[_label(m["id"])] = (_label(m["src"]), _label(m["dst"]))
        for a in objs:
            ident = _label(obj.get("identities", {}).get(str(a), ("id", a)))
            ids[a] = ident
            mors.setdefault(ident, (a, a))
        table = {}
        for g, f, gf in obj.get("compose", []):
            g, f, gf = _label(g), _label(f), _label(gf)
            if g in ids.values() or f in ids.values():
                continue
            table[(g, f)] = gf
    except (KeyError, TypeError, ValueError) as e:
        raise CategoryError(f"malformed category: {e}") from e
    return FinCat(objs, mors, ids, table, name=obj.get("name", ""))


def category_to_json(a: FinCat) -> dict:
    if a.is_poset:
        return {
            "name": a.name,
            "elements": list(a.objects),
            "leq": [[s, t] for (s, t) in (a.morphisms[f] for f in a.nonidentity)],
        }
    return {
        "name": a.name,
        "objects": list(a.objects),
        "morphisms": [{"id": f, "src": s, "dst": t} for f, (s, t) in a.morphisms.items() if not a.is_identity(f)],
        "identities": {str(x): a.identity(x) for x in a.objects},
        "compose": [[g, f, gf] for (g, f), gf in a.table.items()],
    }


def dumps_category(a: FinCat) -> str:
    return json.dumps(category_to_json(a), sort_keys=True)
