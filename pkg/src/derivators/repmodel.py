"""The represented model: diagrams of finite-dimensional F_p vector spaces.

Homotopy (co)limits are ordinary (co)limits, computed as cokernels and
kernels of the standard maps between direct sums.  The model is pointed but
not stable; this module supplies the contrasting computations and the
adjunction checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from . import fincat as fc
from . import linalg
from .fincat import FinCat, Functor, Obj
from .linalg import eye, matmul, zeros
from .vect import (
    VectDiagram,
    corepresentable,
    hom_basis,
    hom_dim,
    random_hom,
    simple,
    vect_restrict,
    vect_sum,
)

VMap = Mapping[Obj, np.ndarray]


# ---------------------------------------------------------------- (co)limits

@dataclass(frozen=True, eq=False)
class Colim:
    """``colim x`` as a quotient of ``sum_a x(a)``; ``quotient`` has full row rank."""

    x: VectDiagram
    quotient: np.ndarray
    offsets: Mapping[Obj, int]

    @property
    def dim(self) -> int:
        return self.quotient.shape[0]

    def leg(self, a: Obj) -> np.ndarray:
        o = self.offsets[a]
        return self.quotient[:, o: o + self.x.dims[a]]


@dataclass(frozen=True, eq=False)
class Lim:
    """``lim x`` as a subspace of ``prod_a x(a)``; ``basis`` has full column rank."""

    x: VectDiagram
    basis: np.ndarray
    offsets: Mapping[Obj, int]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def leg(self, a: Obj) -> np.ndarray:
        o = self.offsets[a]
        return self.basis[o: o + self.x.dims[a], :]


def _offsets(x: VectDiagram) -> tuple[dict, int]:
    offs, total = {}, 0
    for a in x.shape.objects:
        offs[a] = total
        total += x.dims[a]
    return offs, total


def colim_vect(x: VectDiagram) -> Colim:
    """Cokernel of ``v -> i_b x(f) v - i_a v`` over nonidentity ``f: a -> b``."""
    offs, total = _offsets(x)
    cols = []
    for f in x.shape.nonidentity:
        a, b = x.shape.morphisms[f]
        k = x.dims[a]
        if not k:
            continue
        r = zeros(total, k)
        r[offs[b]: offs[b] + x.dims[b], :] += x.maps[f]
        r[offs[a]: offs[a] + k, :] -= eye(k)
        cols.append(r)
    rel = linalg.reduce(np.hstack(cols), x.p) if cols else zeros(total, 0)
    q = linalg.left_nullspace(rel, x.p) if rel.shape[1] else eye(total)
    if q.shape[1] != total:
        q = zeros(0, total)
    return Colim(x, q, offs)


def lim_vect(x: VectDiagram) -> Lim:
    """Kernel of ``(v_a) -> x(f) v_a - v_b`` over nonidentity ``f: a -> b``."""
    offs, total = _offsets(x)
    rows = []
    for f in x.shape.nonidentity:
        a, b = x.shape.morphisms[f]
        k = x.dims[b]
        if not k:
            continue
        r = zeros(k, total)
        r[:, offs[a]: offs[a] + x.dims[a]] += x.maps[f]
        r[:, offs[b]: offs[b] + k] -= eye(k)
        rows.append(r)
    rel = linalg.reduce(np.vstack(rows), x.p) if rows else zeros(0, total)
    k = linalg.nullspace(rel, x.p) if total else zeros(0, 0)
    if k.shape[0] != total:
        k = zeros(total, 0)
    return Lim(x, k, offs)


def colim_induced(cx: Colim, cy: Colim, w: Mapping[Obj, Obj], h: Mapping[Obj, np.ndarray]) -> np.ndarray:
    """``colim x -> colim y`` from the cocone ``a -> leg_y(w(a)) h_a``."""
    p = cx.x.p
    blocks = [matmul(cy.leg(w[a]), h[a], p) for a in cx.x.shape.objects]
    stack = np.hstack(blocks) if blocks else zeros(cy.dim, 0)
    if cx.dim == 0:
        return zeros(cy.dim, 0)
    m = matmul(stack, linalg.right_inverse(cx.quotient, p), p)
    if not np.array_equal(matmul(m, cx.quotient, p), linalg.reduce(stack, p)):
        raise ValueError("the given maps do not form a cocone")
    return m


def lim_induced(lx: Lim, ly: Lim, w: Mapping[Obj, Obj], h: Mapping[Obj, np.ndarray]) -> np.ndarray:
    """``lim x -> lim y`` from the cone ``b -> h_b leg_x(w(b))``."""
    p = lx.x.p
    blocks = [matmul(h[b], lx.leg(w[b]), p) for b in ly.x.shape.objects]
    stack = np.vstack(blocks) if blocks else zeros(0, lx.dim)
    if ly.dim == 0:
        return zeros(0, lx.dim)
    m = matmul(linalg.left_inverse(ly.basis, p), stack, p)
    if not np.array_equal(matmul(ly.basis, m, p), linalg.reduce(stack, p)):
        raise ValueError("the given maps do not form a cone")
    return m


# ---------------------------------------------------------------- Kan extensions

@dataclass(frozen=True, eq=False)
class VectKan:
    diagram: VectDiagram
    u: Functor
    source: VectDiagram
    side: str
    slices: Mapping[Obj, FinCat]
    reps: Mapping[Obj, object]

    def to_value(self, c: Obj) -> np.ndarray:
        """The canonical iso ``x(c) -> u_! x(u c)`` (or ``u_* x(u c)``) for fully faithful ``u``."""
        b = self.u(c)
        o = (c, self.u.target.identity(b))
        if self.side == "left":
            return self.reps[b].leg(o)
        return linalg.left_inverse(self.reps[b].leg(o), self.source.p) if self.reps[b].dim else zeros(0, self.source.dims[c])

    def from_value(self, c: Obj) -> np.ndarray:
        b = self.u(c)
        o = (c, self.u.target.identity(b))
        if self.side == "right":
            return self.reps[b].leg(o)
        leg = self.reps[b].leg(o)
        return linalg.right_inverse(leg, self.source.p) if leg.size else zeros(leg.shape[1], leg.shape[0])


def vect_kan(u: Functor, x: VectDiagram, side: str = "left") -> VectKan:
    """Pointwise ordinary Kan extension along ``u``."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    t = u.target
    over = side == "left"
    slices, reps = {}, {}
    for b in t.objects:
        sl = fc.Slice(u, b, over=over)
        slices[b] = sl.category
        y = vect_restrict(x, sl.projection)
        reps[b] = colim_vect(y) if over else lim_vect(y)
    dims = {b: reps[b].dim for b in t.objects}
    maps = {}
    for beta in t.nonidentity:
        b1, b2 = t.morphisms[beta]
        if over:
            w = fc.slice_functor(u, slices[b1], slices[b2], beta, over=True)
            h = {o: eye(x.dims[o[0]]) for o in slices[b1].objects}
            maps[beta] = colim_induced(reps[b1], reps[b2], w.obj_map, h)
        else:
            w = fc.slice_functor(u, slices[b2], slices[b1], beta, over=False)
            h = {o: eye(x.dims[o[0]]) for o in slices[b2].objects}
            maps[beta] = lim_induced(reps[b1], reps[b2], w.obj_map, h)
    return VectKan(VectDiagram(t, x.p, dims, maps), u, x, side, slices, reps)


def vect_kan_map(rx: VectKan, ry: VectKan, h: VMap) -> dict:
    """The map ``u_! x -> u_! y`` (or ``u_*``) induced by ``h: x -> y``."""
    out = {}
    for b, sl in rx.slices.items():
        ident = {o: o for o in sl.objects}
        hh = {o: h[o[0]] for o in sl.objects}
        if rx.side == "left":
            out[b] = colim_induced(rx.reps[b], ry.reps[b], ident, hh)
        else:
            out[b] = lim_induced(rx.reps[b], ry.reps[b], ident, hh)
    return out


def restrict_map(h: VMap, u: Functor) -> dict:
    return {a: h[u(a)] for a in u.source.objects}


def compose_vmap(g: VMap, f: VMap, p: int) -> dict:
    return {a: matmul(g[a], f[a], p) for a in f}


def vmap_equal(f: VMap, g: VMap, p: int) -> bool:
    return all(np.array_equal(linalg.reduce(f[a], p), linalg.reduce(g[a], p)) for a in f)


def identity_vmap(x: VectDiagram) -> dict:
    return {a: eye(x.dims[a]) for a in x.shape.objects}


# ---------------------------------------------------------------- constructions

def vect_point(dim: int, p: int) -> VectDiagram:
    return VectDiagram(fc.point(), p, {0: dim})


def vect_arrow(m: np.ndarray, p: int) -> VectDiagram:
    """``k^c -> k^r`` for an ``r x c`` matrix as a diagram over ``[1]``."""
    c1 = fc.chain(1)
    return VectDiagram(c1, p, {0: m.shape[1], 1: m.shape[0]}, {(0, 1): m})


def vect_coker(x: VectDiagram, y: VectDiagram, h: VMap) -> VectDiagram:
    """Pointwise cokernel of a natural map."""
    p = x.p
    qs = {}
    for a in x.shape.objects:
        q = linalg.left_nullspace(h[a], p) if h[a].shape[1] else eye(y.dims[a])
        qs[a] = q if q.shape[1] == y.dims[a] else zeros(0, y.dims[a])
    maps = {}
    for f in x.shape.nonidentity:
        a, b = x.shape.morphisms[f]
        r = linalg.right_inverse(qs[a], p) if qs[a].shape[0] else zeros(y.dims[a], 0)
        maps[f] = matmul(matmul(qs[b], y.maps[f], p), r, p)
    return VectDiagram(x.shape, p, {a: qs[a].shape[0] for a in x.shape.objects}, maps)


def random_vect(shape: FinCat, seed: int, budget: int = 8, p: int = linalg.DEFAULT_PRIME) -> VectDiagram:
    """Cokernel of a random map between sums of free and simple cells."""
    rng = np.random.default_rng(seed)

    def cells(n):
        parts, used = [], 0
        for _ in range(4 * n + 4):
            if used >= n:
                break
            b = shape.objects[int(rng.integers(len(shape.objects)))]
            v = corepresentable(shape, b, p) if rng.random() < 0.5 else simple(shape, b, p)
            if used + v.total_dim <= n:
                parts.append(v)
                used += v.total_dim
        return vect_sum(parts) if parts else VectDiagram(shape, p, {})

    if not shape.objects:
        return VectDiagram(shape, p, {})
    top = cells(budget)
    rel = cells(max(0, budget // 3))
    h = random_hom(rng, rel, top)
    return vect_coker(rel, top, h)


def _sieve_into_span() -> Functor:
    return fc.poset_functor(fc.chain(1), fc.span(), {0: (0, 0), 1: (1, 0)})


def _cosieve_into_cospan() -> Functor:
    return fc.poset_functor(fc.chain(1), fc.cospan(), {0: (1, 0), 1: (1, 1)})


@dataclass(frozen=True, eq=False)
class VectSquareRecipe:
    first: VectKan
    second: VectKan

    @property
    def square(self) -> VectDiagram:
        return self.second.diagram


def cof_square_vect(f: VectDiagram) -> VectSquareRecipe:
    r = vect_kan(_sieve_into_span(), f, "right")
    return VectSquareRecipe(r, vect_kan(fc.span_inclusion(), r.diagram, "left"))


def fib_square_vect(f: VectDiagram) -> VectSquareRecipe:
    l = vect_kan(_cosieve_into_cospan(), f, "left")
    return VectSquareRecipe(l, vect_kan(fc.cospan_inclusion(), l.diagram, "right"))


def cone_vect(f: VectDiagram) -> int:
    return cof_square_vect(f).square.dims[(1, 1)]


def fiber_vect(f: VectDiagram) -> int:
    return fib_square_vect(f).square.dims[(0, 0)]


def susp_vect(x: VectDiagram) -> int:
    """``Sigma x``: the cone of ``x -> 0``."""
    return cone_vect(vect_arrow(zeros(0, x.dims[0]), x.p))


def loop_vect(x: VectDiagram) -> int:
    return fiber_vect(vect_arrow(zeros(x.dims[0], 0), x.p))


def cone_map(f: VectDiagram, g: VectDiagram, h: VMap) -> np.ndarray:
    """``Cf -> Cg`` induced by a map of arrows ``h: f -> g``."""
    rf, rg = cof_square_vect(f), cof_square_vect(g)
    m1 = vect_kan_map(rf.first, rg.first, h)
    m2 = vect_kan_map(rf.second, rg.second, m1)
    return m2[(1, 1)]


def fiber_map(f: VectDiagram, g: VectDiagram, h: VMap) -> np.ndarray:
    rf, rg = fib_square_vect(f), fib_square_vect(g)
    m1 = vect_kan_map(rf.first, rg.first, h)
    m2 = vect_kan_map(rf.second, rg.second, m1)
    return m2[(0, 0)]


def _edge(x: VectDiagram, a, b) -> VectDiagram:
    return vect_arrow(x.map((a, b)), x.p)


def partial_cone_vect(x: VectDiagram, direction: int) -> VectDiagram:
    """``C_1(X)`` (horizontal) or ``C_2(X)`` (vertical) as an arrow."""
    if direction == 1:
        f, g, h = _edge(x, (0, 0), (1, 0)), _edge(x, (0, 1), (1, 1)), {0: x.map(((0, 0), (0, 1))), 1: x.map(((1, 0), (1, 1)))}
    else:
        f, g, h = _edge(x, (0, 0), (0, 1)), _edge(x, (1, 0), (1, 1)), {0: x.map(((0, 0), (1, 0))), 1: x.map(((0, 1), (1, 1)))}
    return vect_arrow(cone_map(f, g, h), x.p)


def partial_fiber_vect(x: VectDiagram, direction: int) -> VectDiagram:
    if direction == 1:
        f, g, h = _edge(x, (0, 0), (1, 0)), _edge(x, (0, 1), (1, 1)), {0: x.map(((0, 0), (0, 1))), 1: x.map(((1, 0), (1, 1)))}
    else:
        f, g, h = _edge(x, (0, 0), (0, 1)), _edge(x, (1, 0), (1, 1)), {0: x.map(((0, 0), (1, 0))), 1: x.map(((0, 1), (1, 1)))}
    return vect_arrow(fiber_map(f, g, h), x.p)


def comparison_vect(x: VectDiagram) -> np.ndarray:
    """``colim(X|span) -> X(1,1)``."""
    sp = vect_restrict(x, fc.span_inclusion())
    c = colim_vect(sp)
    tgt = Colim(vect_point(x.dims[(1, 1)], x.p), eye(x.dims[(1, 1)]), {0: 0})
    h = {a: x.map((a, (1, 1))) for a in sp.shape.objects}
    return colim_induced(c, tgt, {a: 0 for a in sp.shape.objects}, h)


def tcof_vect(x: VectDiagram) -> int:
    """Dimension of the total cofiber ``coker(colim(X|span) -> X(1,1))``."""
    return cone_vect(vect_arrow(comparison_vect(x), x.p))


def iterated_cone_vect(x: VectDiagram, order: int) -> int:
    return cone_vect(partial_cone_vect(x, order))


def is_iso(m: np.ndarray, p: int) -> bool:
    return m.shape[0] == m.shape[1] and linalg.rank(m, p) == m.shape[0]


def pushout_square_vect(seed: int, budget: int = 8, p: int = linalg.DEFAULT_PRIME) -> VectDiagram:
    sp = random_vect(fc.span(), seed, budget, p)
    return vect_kan(fc.span_inclusion(), sp, "left").diagram


# ---------------------------------------------------------------- witnesses

def loop_witness_square_vect(dim: int = 1, p: int = linalg.DEFAULT_PRIME) -> VectDiagram:
    """Constant cospan at ``k^dim`` extended by zero to the square."""
    cs = fc.cospan()
    const = VectDiagram(cs, p, {c: dim for c in cs.objects}, {m: eye(dim) for m in cs.nonidentity})
    return vect_kan(fc.cospan_inclusion(), const, "left").diagram


@dataclass(frozen=True)
class StableFailureWitness:
    dim_x: int
    c_of_f2: int
    f_of_c1: int
    susp_x: int

    @property
    def is_witness(self) -> bool:
        return self.c_of_f2 != self.f_of_c1


def stable_failure_witness(dim: int = 1, p: int = linalg.DEFAULT_PRIME) -> StableFailureWitness:
    """``C(F_2 X)`` versus ``F(C_1 X)`` on ``X(x)`` for ``x = k^dim``."""
    x = loop_witness_square_vect(dim, p)
    return StableFailureWitness(
        dim_x=dim,
        c_of_f2=cone_vect(partial_fiber_vect(x, 2)),
        f_of_c1=fiber_vect(partial_cone_vect(x, 1)),
        susp_x=susp_vect(vect_point(dim, p)),
    )


def sigma_f_versus_c(f: VectDiagram) -> tuple[int, int]:
    """``(dim Sigma F f, dim C f)``."""
    ff = fiber_vect(f)
    return susp_vect(vect_point(ff, f.p)), cone_vect(f)


def commute_dims_vect(u: Functor, v: Functor, x: VectDiagram) -> tuple[dict, dict]:
    """Dimensions of ``(u x 1)_! (1 x v)_* x`` and ``(1 x v)_* (u x 1)_! x``."""
    a, b = u.source, v.source
    ab2 = fc.product(a, v.target)
    a2b = fc.product(u.target, b)
    a2b2 = fc.product(u.target, v.target)
    v1 = fc.product_functor(fc.identity_functor(a), v, source=x.shape, target=ab2)
    u1 = fc.product_functor(u, fc.identity_functor(v.target), source=ab2, target=a2b2)
    u2 = fc.product_functor(u, fc.identity_functor(b), source=x.shape, target=a2b)
    v2 = fc.product_functor(fc.identity_functor(u.target), v, source=a2b, target=a2b2)
    lr = vect_kan(u1, vect_kan(v1, x, "right").diagram, "left").diagram
    rl = vect_kan(v2, vect_kan(u2, x, "left").diagram, "right").diagram
    return dict(lr.dims), dict(rl.dims)


def mate_witness_diagram(p: int = linalg.DEFAULT_PRIME) -> VectDiagram:
    """A diagram over ``span x cospan`` where pushout and pullback fail to commute.

    Zero except ``k`` at ``((1,0),(1,0))``, ``((0,0),(1,1))`` and ``((1,0),(1,1))``
    with identities between them, so one composite is ``coker(ker -> ker) = 0``
    and the other ``ker(coker -> coker) = k``.
    """
    shape = fc.product(fc.span(), fc.cospan())
    ones = [((1, 0), (1, 0)), ((0, 0), (1, 1)), ((1, 0), (1, 1))]
    dims = {o: 1 for o in ones}
    maps = {}
    for m in shape.nonidentity:
        s_, t_ = shape.morphisms[m]
        if s_ in dims and t_ in dims:
            maps[m] = eye(1)
    x = VectDiagram(shape, p, dims, maps)
    x.check()
    return x


def mate_failure_witness(p: int = linalg.DEFAULT_PRIME) -> tuple[dict, dict]:
    """Both composites on :func:`mate_witness_diagram`; they differ in this model."""
    return commute_dims_vect(fc.span_inclusion(), fc.cospan_inclusion(), mate_witness_diagram(p))


# ---------------------------------------------------------------- pointedness

def pointedness_catalogue() -> list[tuple[str, Functor, Functor]]:
    """``(name, cosieve u, sieve v)`` pairs whose extensions by zero commute."""
    c1 = fc.chain(1)
    return [
        ("1 into [1] / 0 into [1]", fc.point_at(c1, 1), fc.point_at(c1, 0)),
        ("cospan / span", fc.cospan_inclusion(), fc.span_inclusion()),
        ("[1] into cospan / [1] into span", _cosieve_into_cospan(), _sieve_into_span()),
    ]


def empty_extension_dims(p: int = linalg.DEFAULT_PRIME) -> tuple[int, int]:
    """``(colim, lim)`` of the empty diagram."""
    e = VectDiagram(fc.empty(), p, {})
    return colim_vect(e).dim, lim_vect(e).dim


def finite_sets_empty_contrast() -> tuple[int, int]:
    """Cardinalities of the empty colimit and limit of finite sets: initial vs final."""
    return 0, 1


# ---------------------------------------------------------------- adjunctions

@dataclass(frozen=True, eq=False)
class Adjunction:
    """``L -| R`` on objects and maps.

    ``forward`` transposes ``Hom(L a, b) -> Hom(a, R b)`` by ``R(h) o eta_a``;
    otherwise ``Hom(a, R b) -> Hom(L a, b)`` by ``eps_b o L(k)``.
    """

    name: str
    left_shape: FinCat   # shape of a
    right_shape: FinCat  # shape of b
    left: Callable       # a -> (L a, aux)
    right: Callable      # b -> (R b, aux)
    left_map: Callable   # (a, a', aux, aux', g) -> L g
    right_map: Callable
    forward: bool = True


def _point_inc(b: Obj) -> Functor:
    return fc.point_at(fc.chain(1), b)


def _kan_functor(u: Functor, side: str):
    def obj(x):
        r = vect_kan(u, x, side)
        return r.diagram, r

    def mor(x, y, ax, ay, g):
        return vect_kan_map(ax, ay, g)

    return obj, mor


def _restrict_functor(u: Functor):
    def obj(x):
        return vect_restrict(x, u), None

    def mor(x, y, ax, ay, g):
        return restrict_map(g, u)

    return obj, mor


def _unit_left(r: VectKan) -> dict:
    """``x -> u^* u_! x``: the leg at ``(c, id)``."""
    return {c: r.to_value(c) for c in r.u.source.objects}


def _unit_right(y: VectDiagram, r: VectKan) -> dict:
    """``y -> u_* u^* y`` at ``b``: ``v -> (y(phi) v)`` over ``(b/u)``."""
    out = {}
    for b, sl in r.slices.items():
        rep = r.reps[b]
        blocks = [y.map(o[1]) for o in sl.objects]
        stack = np.vstack(blocks) if blocks else zeros(0, y.dims[b])
        out[b] = matmul(linalg.left_inverse(rep.basis, y.p), stack, y.p) if rep.dim else zeros(0, y.dims[b])
    return out


def _cone_functor():
    def obj(f):
        rec = cof_square_vect(f)
        return vect_point(rec.square.dims[(1, 1)], f.p), rec

    def mor(f, g, af, ag, h):
        m1 = vect_kan_map(af.first, ag.first, h)
        return {0: vect_kan_map(af.second, ag.second, m1)[(1, 1)]}

    return obj, mor


def _fiber_functor():
    def obj(f):
        rec = fib_square_vect(f)
        return vect_point(rec.square.dims[(0, 0)], f.p), rec

    def mor(f, g, af, ag, h):
        m1 = vect_kan_map(af.first, ag.first, h)
        return {0: vect_kan_map(af.second, ag.second, m1)[(0, 0)]}

    return obj, mor


def _y_to_cone(rec: VectSquareRecipe) -> np.ndarray:
    """``f(1) -> Cf`` through the cofiber square."""
    p = rec.square.p
    y_to_r = rec.first.to_value(1)
    r_to_s = rec.second.to_value((1, 0))
    return matmul(rec.square.map(((1, 0), (1, 1))), matmul(r_to_s, y_to_r, p), p)


def _fiber_to_x(rec: VectSquareRecipe) -> np.ndarray:
    """``Ff -> f(0)`` through the fiber square."""
    p = rec.square.p
    t_to_l = rec.second.from_value((1, 0))
    l_to_x = rec.first.from_value(0)
    return matmul(l_to_x, matmul(t_to_l, rec.square.map(((0, 0), (1, 0))), p), p)


def adjunction_catalogue() -> dict[str, Adjunction]:
    pt, c1 = fc.point(), fc.chain(1)
    one, zero = _point_inc(1), _point_inc(0)
    rows = [
        ("1_!-1^*", pt, c1, _kan_functor(one, "left"), _restrict_functor(one), True),
        ("1^*-pi^*", c1, pt, _restrict_functor(one), _kan_functor(one, "right"), True),
        ("pi^*-0^*", pt, c1, _kan_functor(zero, "left"), _restrict_functor(zero), True),
        ("0^*-0_*", c1, pt, _restrict_functor(zero), _kan_functor(zero, "right"), True),
        ("C-1_!", c1, pt, _cone_functor(), _kan_functor(one, "left"), True),
        ("0_*-F", pt, c1, _kan_functor(zero, "right"), _fiber_functor(), False),
    ]
    return {n: Adjunction(n, ls, rs, lf[0], rf[0], lf[1], rf[1], fw) for n, ls, rs, lf, rf, fw in rows}


_RESTRICTION_UNITS = {"1^*-pi^*": 1, "0^*-0_*": 0}


def _transpose(adj: Adjunction, a, b, la, rb, h) -> dict:
    p = a.p
    name = adj.name
    if name in ("1_!-1^*", "pi^*-0^*"):
        # R is restriction along u; eta is the leg at (c, id)
        return compose_vmap(restrict_map(h, la[1].u), _unit_left(la[1]), p)
    if name in _RESTRICTION_UNITS:
        u = rb[1].u
        rl = vect_kan(u, la[0], "right")
        return compose_vmap(vect_kan_map(rl, rb[1], h), _unit_right(a, rl), p)
    if name == "C-1_!":
        rec, rz = la[1], rb[1]
        cone_to_r = matmul(rz.to_value(0), h[0], p)
        return {0: zeros(rz.diagram.dims[0], a.dims[0]), 1: matmul(cone_to_r, _y_to_cone(rec), p)}
    if name == "0_*-F":
        rec, l_a = rb[1], la[1]
        l_fb = vect_kan(l_a.u, rb[0], "right")
        zh = vect_kan_map(l_a, l_fb, h)
        eps0 = matmul(_fiber_to_x(rec), l_fb.from_value(0), p)
        return {0: matmul(eps0, zh[0], p), 1: zeros(b.dims[1], la[0].dims[1])}
    raise KeyError(name)


@dataclass
class AdjunctionReport:
    name: str
    trials: int
    dims_equal: int = 0
    transpose_injective: int = 0
    natural: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.dims_equal == self.transpose_injective == self.natural == self.trials


ADJUNCTION_NAMES = ["1_!-1^*", "1^*-pi^*", "pi^*-0^*", "0^*-0_*", "C-1_!", "0_*-F"]


def adjunction_dims(pair: str, trials: int = 50, seed: int = 0, p: int = linalg.DEFAULT_PRIME, budget: int = 5) -> AdjunctionReport:
    """Dimension equality, bijectivity and naturality of the transposition."""
    cat = adjunction_catalogue()
    if pair not in cat:
        raise KeyError(f"unknown adjunction {pair!r}; expected one of {ADJUNCTION_NAMES}")
    adj = cat[pair]
    rep = AdjunctionReport(pair, trials)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        s = int(rng.integers(2**31))
        a = random_vect(adj.left_shape, s, budget, p)
        a2 = random_vect(adj.left_shape, s + 1, budget, p)
        b = random_vect(adj.right_shape, s + 2, budget, p)
        b2 = random_vect(adj.right_shape, s + 3, budget, p)
        la, la2 = adj.left(a), adj.left(a2)
        rb, rb2 = adj.right(b), adj.right(b2)
        d_left, d_right = hom_dim(la[0], b), hom_dim(a, rb[0])
        if d_left == d_right:
            rep.dims_equal += 1
        else:
            rep.failures.append({"trial": t, "seed": s, "dims": [d_left, d_right]})
        # transposition on a basis of the source hom space
        if adj.forward:
            basis = hom_basis(la[0], b)
            imgs = [_transpose(adj, a, b, la, rb, h) for h in basis]
            tgt = (a, rb[0])
        else:
            basis = hom_basis(a, rb[0])
            imgs = [_transpose(adj, a, b, la, rb, h) for h in basis]
            tgt = (la[0], b)
        if _independent(imgs, tgt[0], tgt[1], p):
            rep.transpose_injective += 1
        else:
            rep.failures.append({"trial": t, "seed": s, "check": "transpose injective"})
        if _natural_on_generators(adj, a, a2, b, b2, la, la2, rb, rb2, rng, p):
            rep.natural += 1
        else:
            rep.failures.append({"trial": t, "seed": s, "check": "naturality"})
    return rep


def _independent(maps: list, x: VectDiagram, y: VectDiagram, p: int) -> bool:
    if not maps:
        return True
    vecs = [np.concatenate([m[a].reshape(-1) for a in x.shape.objects]) for m in maps]
    return linalg.rank(np.array(vecs, dtype=np.int64), p) == len(maps)


def _natural_on_generators(adj, a, a2, b, b2, la, la2, rb, rb2, rng, p) -> bool:
    """Transposition commutes with precomposition in ``a`` and postcomposition in ``b``."""
    g = random_hom(rng, a2, a)      # a2 -> a
    m = random_hom(rng, b, b2)      # b -> b2
    if adj.forward:
        h = random_hom(rng, la[0], b)
        lg = adj.left_map(a2, a, la2[1], la[1], g)
        lhs = _transpose(adj, a2, b, la2, rb, compose_vmap(h, lg, p))
        rhs = compose_vmap(_transpose(adj, a, b, la, rb, h), g, p)
        if not vmap_equal(lhs, rhs, p):
            return False
        rm = adj.right_map(b, b2, rb[1], rb2[1], m)
        lhs = _transpose(adj, a, b2, la, rb2, compose_vmap(m, h, p))
        rhs = compose_vmap(rm, _transpose(adj, a, b, la, rb, h), p)
        return vmap_equal(lhs, rhs, p)
    k = random_hom(rng, a, rb[0])
    lg = adj.left_map(a2, a, la2[1], la[1], g)
    lhs = _transpose(adj, a2, b, la2, rb, compose_vmap(k, g, p))
    rhs = compose_vmap(_transpose(adj, a, b, la, rb, k), lg, p)
    if not vmap_equal(lhs, rhs, p):
        return False
    rm = adj.right_map(b, b2, rb[1], rb2[1], m)
    lhs = _transpose(adj, a, b2, la, rb2, compose_vmap(rm, k, p))
    rhs = compose_vmap(m, _transpose(adj, a, b, la, rb, k), p)
    return vmap_equal(lhs, rhs, p)


def non_extension_witness(p: int = linalg.DEFAULT_PRIME) -> StableFailureWitness:
    """The chain stops: ``C`` does not preserve fibers in this model."""
    w = stable_failure_witness(1, p)
    if not w.is_witness:
        raise AssertionError("represented model failed to produce the non-stability witness")
    return w
