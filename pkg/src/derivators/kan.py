"""Homotopy (co)limits and pointwise homotopy Kan extensions.

``hocolim`` is the normalized bar complex: the degree-``m`` part is the sum
over nondegenerate ``n``-strings ``a_0 -> ... -> a_n`` of ``x(a_0)_{m-n}``.
The external differential is ``sum (-1)^i d_i``: ``d_0`` pushes along the
first arrow, inner faces compose, ``d_n`` drops the last arrow.  ``holim`` is
the dual cobar complex with components ``x(a_n)`` in total degree ``q - n``
and ``(dc)(s) = sum (-1)^i c(d_i s)``, the last face transported along the
last arrow.  Totals use ``d_int + (-1)^q d_ext``.

Kan extensions use the pointwise formulas.  Along a fully faithful embedding,
image objects whose whole up-set (left case) or down-set (right case) lies in
the image keep their original value; this keeps repeated extensions small and
makes extension by zero along (co)sieves produce genuine zero complexes.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from . import chainalg as ca
from . import fincat as fc
from . import linalg
from .chainalg import ChainComplex, ChainMap, SumBuilder
from .diagram import Diagram, DiagramMap, restrict
from .fincat import FinCat, Functor, Mor, Obj

STRICT = "*"

_LIMITS = {"max_total_dim": 200_000}


class ResourceError(RuntimeError):
    """Raised when a construction would exceed the configured size cap."""


@contextlib.contextmanager
def resource_cap(max_total_dim: int | None):
    """Temporarily cap the total dimension of any bar or cobar complex."""
    old = _LIMITS["max_total_dim"]
    _LIMITS["max_total_dim"] = max_total_dim
    try:
        yield
    finally:
        _LIMITS["max_total_dim"] = old


def _guard(builder: SumBuilder, what: str) -> None:
    cap = _LIMITS["max_total_dim"]
    total = sum(builder.dims.values())
    if cap is not None and total > cap:
        raise ResourceError(f"{what} has total dimension {total} > cap {cap}")


def _sign(q: int) -> int:
    return -1 if q % 2 else 1


# ---------------------------------------------------------------- presented complexes

class StrictValue:
    """A complex viewed as a one-summand presentation."""

    kind = "strict"

    def __init__(self, x: ChainComplex):
        self.complex = x
        self.builder = SumBuilder(x.p, [(STRICT, x.dims)])
        self.keys = [STRICT]


class BarComplex:
    """``hocolim`` of a diagram together with its string-indexed basis."""

    kind = "bar"

    def __init__(self, x: Diagram):
        self.diagram = x
        shape = x.shape
        keys = [s for level in shape.strings for s in level if not x[s[0][0]].is_zero]
        self.keys = keys
        keyset = set(keys)
        b = SumBuilder(x.p, [(s, {q + len(s[1]): k for q, k in x[s[0][0]].dims.items()}) for s in keys])
        _guard(b, "bar complex")
        for s in keys:
            objs, mors = s
            n = len(mors)
            v = x[objs[0]]
            for q, m in v.d.items():
                b.add(q + n, s, s, m)
            if n == 0:
                continue
            first = (objs[1:], mors[1:])
            push = x.map(mors[0]) if first in keyset else None
            inner = []
            for i in range(1, n):
                g = shape.compose(mors[i], mors[i - 1])
                if not shape.is_identity(g):
                    inner.append((i, (objs[:i] + objs[i + 1:], mors[: i - 1] + (g,) + mors[i + 1:])))
            last = (objs[:-1], mors[:-1])
            for q, k in v.dims.items():
                e = _sign(q)
                ident = linalg.eye(k)
                if push is not None:
                    b.add(q + n, first, s, push.comp(q), e)
                for i, t in inner:
                    b.add(q + n, t, s, ident, e * _sign(i))
                b.add(q + n, last, s, ident, e * _sign(n))
        self.builder = b
        self.complex = b.build()


class CobarComplex:
    """``holim`` of a diagram together with its string-indexed basis."""

    kind = "cobar"

    def __init__(self, x: Diagram):
        self.diagram = x
        shape = x.shape
        keys = [s for level in shape.strings for s in level if not x[s[0][-1]].is_zero]
        self.keys = keys
        keyset = set(keys)
        b = SumBuilder(x.p, [(s, {q - len(s[1]): k for q, k in x[s[0][-1]].dims.items()}) for s in keys])
        _guard(b, "cobar complex")
        for s in keys:
            objs, mors = s
            m = len(mors)
            v = x[objs[-1]]
            for q, dq in v.d.items():
                b.add(q - m, s, s, dq)
            if m == 0:
                continue
            # s receives contributions from each of its faces
            faces = [(0, (objs[1:], mors[1:]))]
            for i in range(1, m):
                g = shape.compose(mors[i], mors[i - 1])
                if not shape.is_identity(g):
                    faces.append((i, (objs[:i] + objs[i + 1:], mors[: i - 1] + (g,) + mors[i + 1:])))
            for i, t in faces:
                for q, k in v.dims.items():
                    b.add(q - m + 1, s, t, linalg.eye(k), _sign(q) * _sign(i))
            last = (objs[:-1], mors[:-1])
            if last in keyset:
                f = x.map(mors[-1])
                for q in x[objs[-2]].dims:
                    b.add(q - m + 1, s, last, f.comp(q), _sign(q) * _sign(m))
        self.builder = b
        self.complex = b.build()


def _assemble(src, tgt, blocks) -> ChainMap:
    """Chain map from ``(total degree, target key, source key, matrix, sign)`` blocks."""
    comps: dict[int, np.ndarray] = {}
    sb, tb = src.builder, tgt.builder
    for n, tk, sk, m, sign in blocks:
        if m.size == 0:
            continue
        mat = comps.get(n)
        if mat is None:
            mat = comps[n] = linalg.zeros(tb.dims.get(n, 0), sb.dims.get(n, 0))
        mat[tb.slot(n, tk), sb.slot(n, sk)] += sign * m
    return ChainMap(src.complex, tgt.complex, comps)


def _image_string(w: Functor, s) -> tuple | None:
    objs, mors = s
    img = tuple(w.on_mor(f) for f in mors)
    if any(w.target.is_identity(g) for g in img):
        return None
    return (tuple(w(a) for a in objs), img)


def bar_map(src: BarComplex, tgt: BarComplex, w: Functor, alpha: Mapping[Obj, ChainMap] | None = None) -> ChainMap:
    """Map of bar complexes induced by ``w: I -> J`` and ``alpha: x -> y w``.

    Strings whose image contains an identity go to zero.  ``alpha=None``
    means ``x = y w`` on the nose.
    """
    keyset = set(tgt.keys)
    blocks = []
    for s in src.keys:
        t = _image_string(w, s)
        if t is None or t not in keyset:
            continue
        n = len(s[1])
        a0 = s[0][0]
        for q, k in src.diagram[a0].dims.items():
            m = linalg.eye(k) if alpha is None else alpha[a0].comp(q)
            blocks.append((q + n, t, s, m, 1))
    return _assemble(src, tgt, blocks)


def cobar_map(src: CobarComplex, tgt: CobarComplex, w: Functor, alpha: Mapping[Obj, ChainMap] | None = None) -> ChainMap:
    """Map ``holim_J x -> holim_I x'`` induced by ``w: I -> J`` and ``alpha: x w -> x'``."""
    keyset = set(src.keys)
    blocks = []
    for t in tgt.keys:
        s = _image_string(w, t)
        if s is None or s not in keyset:
            continue
        n = len(t[1])
        an = t[0][-1]
        for q, k in src.diagram[w(an)].dims.items():
            m = linalg.eye(k) if alpha is None else alpha[an].comp(q)
            blocks.append((q - n, t, s, m, 1))
    return _assemble(src, tgt, blocks)


def augmentation_map(bar: BarComplex, target, cocone: Mapping[Obj, ChainMap]) -> ChainMap:
    """``hocolim x -> T`` from compatible maps ``x(c) -> T`` (only 0-strings contribute)."""
    if isinstance(target, ChainComplex):
        target = StrictValue(target)
    blocks = []
    for s in bar.keys:
        if s[1]:
            continue
        c = s[0][0]
        for q in bar.diagram[c].dims:
            blocks.append((q, STRICT, s, cocone[c].comp(q), 1))
    return _assemble(bar, target, blocks)


def coaugmentation_map(source, cobar: CobarComplex, cone: Mapping[Obj, ChainMap]) -> ChainMap:
    """``S -> holim x`` from compatible maps ``S -> x(c)``."""
    if isinstance(source, ChainComplex):
        source = StrictValue(source)
    blocks = []
    for s in cobar.keys:
        if s[1]:
            continue
        c = s[0][0]
        for q in source.complex.dims:
            blocks.append((q, s, STRICT, cone[c].comp(q), 1))
    return _assemble(source, cobar, blocks)


def hocolim(x: Diagram) -> ChainComplex:
    return BarComplex(x).complex


def holim(x: Diagram) -> ChainComplex:
    return CobarComplex(x).complex


def to_terminal(x: Diagram) -> ChainMap:
    """Augmentation ``hocolim x -> x(t)`` at the terminal object."""
    t = x.shape.terminal_object()
    if t is None:
        raise fc.ShapeError("shape has no terminal object")
    return augmentation_map(BarComplex(x), x[t], _cocone_to(x, t))


def from_initial(x: Diagram) -> ChainMap:
    """Coaugmentation ``x(i) -> holim x`` at the initial object."""
    i = x.shape.initial_object()
    if i is None:
        raise fc.ShapeError("shape has no initial object")
    cob = CobarComplex(x)
    return coaugmentation_map(x[i], cob, {c: x.map(x.shape.hom(i, c)[0]) for c in x.shape.objects})


def _cocone_to(x: Diagram, t: Obj) -> dict[Obj, ChainMap]:
    return {c: x.map(x.shape.hom(c, t)[0]) for c in x.shape.objects}


# ---------------------------------------------------------------- Kan extensions

@dataclass
class Local:
    """How the value of a Kan extension at one object is presented."""

    kind: str  # "strict", "bar" or "cobar"
    pres: object
    preimage: Obj | None = None
    slice: FinCat | None = None

    @property
    def complex(self) -> ChainComplex:
        return self.pres.complex


@dataclass(frozen=True, eq=False)
class KanResult:
    """An extended diagram with the structural data used to build it.

    ``comparison`` is, for a fully faithful ``u``, the strictly natural
    pointwise quasi-isomorphism ``u^* u_! x -> x`` (left case) or
    ``x -> u^* u_* x`` (right case); ``None`` otherwise.
    """

    diagram: Diagram
    u: Functor
    source: Diagram
    side: str
    locals: Mapping[Obj, Local] = field(default_factory=dict)
    comparison: DiagramMap | None = None
    param: FinCat | None = None

    def local(self, b: Obj) -> Local:
        return self.locals[b]


class _Access:
    """Uniform access to ``x`` or to a diagram over ``A x P`` at a fixed ``p``."""

    def __init__(self, x: Diagram, a: FinCat, param: FinCat | None):
        self.x, self.a, self.param = x, a, param

    def val(self, c: Obj, p) -> ChainComplex:
        return self.x[c] if self.param is None else self.x[(c, p)]

    def map(self, f: Mor, g) -> ChainMap:
        if self.param is None:
            return self.x.map(f)
        return self.x.map(_pmor(self.x.shape, self.a, self.param, f, g))

    def fiber(self, p) -> Diagram:
        """``x(-, p)`` as a diagram over ``A``."""
        if self.param is None:
            return self.x
        a = self.a
        ip = self.param.identity(p)
        return Diagram(a, self.x.p, {c: self.x[(c, p)] for c in a.objects}, {f: self.map(f, ip) for f in a.nonidentity})


def _pmor(prod: FinCat, a: FinCat, b: FinCat, f: Mor, g: Mor) -> Mor:
    if prod.is_poset:
        return ((a.src(f), b.src(g)), (a.dst(f), b.dst(g)))
    return (f, g)


def _split(prod: FinCat, a: FinCat, b: FinCat, m: Mor) -> tuple[Mor, Mor]:
    if prod.is_poset:
        (s1, s2), (t1, t2) = prod.morphisms[m]
        return a.hom(s1, t1)[0], b.hom(s2, t2)[0]
    return m


def _strict_set(u: Functor, side: str) -> set:
    if not (u.is_injective_on_objects() and u.is_fully_faithful()):
        return set()
    t = u.target
    img = u.image
    if side == "left":
        return {b for b in img if all(t.dst(f) in img for f in t.out_arrows[b])}
    return {b for b in img if all(t.src(f) in img for f in t.nonidentity if t.dst(f) == b)}


def _extend(u: Functor, x: Diagram, side: str, param: FinCat | None, strict: bool) -> KanResult:
    a, t = u.source, u.target
    if param is None:
        if x.shape is not a and x.shape.objects != a.objects:
            raise fc.CategoryError("diagram shape is not the source of the functor")
        params = [None]
        shape = t
    else:
        params = list(param.objects)
        shape = fc.product(t, param)
    acc = _Access(x, a, param)
    over = side == "left"
    ff = u.is_injective_on_objects() and u.is_fully_faithful()
    pre_obj = {u(c): c for c in a.objects} if ff else {}
    pre_mor = {u.on_mor(f): f for f in a.morphisms} if ff else {}
    stricts = _strict_set(u, side) if strict else set()

    slices = {}
    for b in t.objects:
        if b not in stricts:
            sl = fc.Slice(u, b, over=over)
            slices[b] = sl
    fibers = {p: acc.fiber(p) for p in params}

    def key(b, p):
        return b if param is None else (b, p)

    locs: dict = {}
    for b in t.objects:
        for p in params:
            if b in stricts:
                c = pre_obj[b]
                locs[key(b, p)] = Local("strict", StrictValue(acc.val(c, p)), preimage=c)
            else:
                sl = slices[b]
                y = restrict(fibers[p], sl.projection)
                pres = BarComplex(y) if over else CobarComplex(y)
                locs[key(b, p)] = Local(pres.kind, pres, preimage=pre_obj.get(b), slice=sl.category)

    def transition(beta: Mor, g: Mor, p1, p2) -> ChainMap:
        b1, b2 = t.src(beta), t.dst(beta)
        l1, l2 = locs[key(b1, p1)], locs[key(b2, p2)]
        if l1.kind == "strict" and l2.kind == "strict":
            return acc.map(pre_mor[beta], g)
        if over:
            if l1.kind == "strict":
                raise AssertionError("strict objects are closed upwards")
            if l2.kind == "strict":
                cocone = {o: acc.map(pre_mor[t.compose(beta, o[1])], g) for o in l1.slice.objects}
                return augmentation_map(l1.pres, l2.pres, cocone)
            w = fc.slice_functor(u, l1.slice, l2.slice, beta, over=True)
            alpha = {o: acc.map(a.identity(o[0]), g) for o in l1.slice.objects}
            return bar_map(l1.pres, l2.pres, w, alpha)
        if l2.kind == "strict":
            raise AssertionError("strict objects are closed downwards")
        if l1.kind == "strict":
            cone = {o: acc.map(pre_mor[t.compose(o[1], beta)], g) for o in l2.slice.objects}
            return coaugmentation_map(l1.pres, l2.pres, cone)
        w = fc.slice_functor(u, l2.slice, l1.slice, beta, over=False)
        alpha = {o: acc.map(a.identity(o[0]), g) for o in l2.slice.objects}
        return cobar_map(l1.pres, l2.pres, w, alpha)

    values = {k: l.complex for k, l in locs.items()}
    maps = {}
    for m in shape.nonidentity:
        if param is None:
            maps[m] = transition(m, None, None, None)
        else:
            beta, g = _split(shape, t, param, m)
            (b1, p1), (b2, p2) = shape.morphisms[m]
            maps[m] = transition(beta, g, p1, p2)
    out = Diagram(shape, x.p, values, maps)

    comparison = None
    if ff:
        comps = {}
        for c in a.objects:
            for p in params:
                l = locs[key(u(c), p)]
                k = c if param is None else (c, p)
                ip = None if param is None else param.identity(p)
                if l.kind == "strict":
                    comps[k] = ca.identity_map(l.complex)
                elif over:
                    cocone = {o: acc.map(pre_mor[o[1]], ip) for o in l.slice.objects}
                    comps[k] = augmentation_map(l.pres, acc.val(c, p), cocone)
                else:
                    cone = {o: acc.map(pre_mor[o[1]], ip) for o in l.slice.objects}
                    comps[k] = coaugmentation_map(acc.val(c, p), l.pres, cone)
        uu = u if param is None else fc.product_functor(u, fc.identity_functor(param), source=x.shape, target=shape)
        back = restrict(out, uu)
        comparison = DiagramMap(back, x, comps) if over else DiagramMap(x, back, comps)
    return KanResult(out, u, x, side, locs, comparison, param)


def ho_lan(u: Functor, x: Diagram, strict: bool = True) -> KanResult:
    """Pointwise homotopy left Kan extension ``u_! x``."""
    return _extend(u, x, "left", None, strict)


def ho_ran(u: Functor, x: Diagram, strict: bool = True) -> KanResult:
    """Pointwise homotopy right Kan extension ``u_* x``."""
    return _extend(u, x, "right", None, strict)


def lan(u: Functor, x: Diagram, strict: bool = True) -> Diagram:
    return ho_lan(u, x, strict).diagram


def ran(u: Functor, x: Diagram, strict: bool = True) -> Diagram:
    return ho_ran(u, x, strict).diagram


def param_lan(u: Functor, x: Diagram, param: FinCat, strict: bool = True) -> KanResult:
    """``(u x id)_!`` on a diagram over ``A x P``, computed slice-wise in ``A``."""
    return _extend(u, x, "left", param, strict)


def param_ran(u: Functor, x: Diagram, param: FinCat, strict: bool = True) -> KanResult:
    return _extend(u, x, "right", param, strict)


# ---------------------------------------------------------------- products

def transpose(x: Diagram) -> Diagram:
    """Swap the factors of a diagram over a product ``A x B``."""
    shape = x.shape
    objs = shape.objects
    a_objs = list(dict.fromkeys(o[0] for o in objs))
    b_objs = list(dict.fromkeys(o[1] for o in objs))
    if not shape.is_poset:
        raise fc.CategoryError("transpose needs a product of posets")
    swapped = fc.poset([(b, a) for b in b_objs for a in a_objs], lambda s, t: bool(shape.hom((s[1], s[0]), (t[1], t[0]))), name=shape.name + "^T")
    vals = {(b, a): x[(a, b)] for a, b in objs}
    maps = {((s[1], s[0]), (t[1], t[0])): x.map(m) for m in shape.nonidentity for s, t in [shape.morphisms[m]]}
    return Diagram(swapped, x.p, vals, maps)


@dataclass(frozen=True, eq=False)
class MateResult:
    """The two composites over ``A' x B'`` and the chain-level mate between them."""

    lr: Diagram
    rl: Diagram
    mate: DiagramMap


def canonical_mate(u: Functor, v: Functor, x: Diagram) -> MateResult:
    """Mate ``(u x 1)_! (1 x v)_* x -> (1 x v)_* (u x 1)_! x``.

    Both sides are computed with slice-wise (parametrized) extensions, so
    they share a basis indexed by a string of ``(u/a')`` (or the strict
    token) and a string of ``(b'/v)``.  The unit and counit of the two
    extensions are identities on this presentation, and the interchange of
    the bar and cobar directions is the sign ``(-1)^(n m)``.
    """
    a, b = u.source, v.source
    # (1 x v)_* then (u x 1)_!
    r1 = param_ran(v, transpose(x), a)          # over B' x A
    lr = param_lan(u, transpose(r1.diagram), v.target)  # over A' x B'
    # (u x 1)_! then (1 x v)_*
    l1 = param_lan(u, x, b)                     # over A' x B
    rl_t = param_ran(v, transpose(l1.diagram), u.target)  # over B' x A'
    rl = transpose(rl_t.diagram)
    comps = {}
    for a2 in u.target.objects:
        for b2 in v.target.objects:
            outer_l = lr.locals[(a2, b2)]
            outer_r = rl_t.locals[(b2, a2)]
            comps[(a2, b2)] = _interchange(outer_l, r1, outer_r, l1, a2, b2)
    return MateResult(lr.diagram, rl, DiagramMap(lr.diagram, rl, comps))


def _strings_of(local: Local):
    if local.kind == "strict":
        return [None]
    return local.pres.keys


def _inner_value(inner: Local, tau) -> ChainComplex:
    if tau is None:
        return inner.complex
    return inner.pres.diagram[tau[0][-1]]


def _nested_slot(outer_b: SumBuilder, tot: int, okey, inner_b: SumBuilder, inner_deg: int, ikey) -> slice:
    o = outer_b.slot(tot, okey)
    i = inner_b.slot(inner_deg, ikey)
    return slice(o.start + i.start, o.start + i.stop)


def _interchange(outer_l: Local, r1: KanResult, outer_r: Local, l1: KanResult, a2, b2) -> ChainMap:
    """Identify the two double presentations at ``(a2, b2)``.

    A basis vector of ``x(sigma_0, tau_m)_q`` sits at ``(sigma, tau)`` on both
    sides, where ``sigma`` (``n`` arrows) is a string of ``(u/a2)`` and ``tau``
    (``m`` arrows) a string of ``(b2/v)``; ``None`` stands for a strict value.
    """
    src_b, tgt_b = outer_l.pres.builder, outer_r.pres.builder
    target = {}
    for tau in _strings_of(outer_r):
        inner = l1.locals[(a2, outer_r.preimage if tau is None else tau[0][-1][0])]
        for sig in _strings_of(inner):
            target[(sig, tau)] = inner
    comps: dict[int, np.ndarray] = {}
    for sig in _strings_of(outer_l):
        inner = r1.locals[(b2, outer_l.preimage if sig is None else sig[0][0][0])]
        n = 0 if sig is None else len(sig[1])
        for tau in _strings_of(inner):
            tinner = target[(sig, tau)]
            m = 0 if tau is None else len(tau[1])
            e = _sign(n * m)
            okey, tkey = sig or STRICT, tau or STRICT
            for q, k in _inner_value(inner, tau).dims.items():
                tot = q - m + n
                mat = comps.get(tot)
                if mat is None:
                    mat = comps[tot] = linalg.zeros(tgt_b.dims.get(tot, 0), src_b.dims.get(tot, 0))
                rs = _nested_slot(tgt_b, tot, tkey, tinner.pres.builder, q + n, okey)
                cs = _nested_slot(src_b, tot, okey, inner.pres.builder, q - m, tkey)
                mat[rs, cs] += e * linalg.eye(k)
    return ChainMap(outer_l.complex, outer_r.complex, comps)


def commute_dims(u: Functor, v: Functor, x: Diagram) -> tuple[dict, dict]:
    """Homology tables of ``(u x 1)_! (1 x v)_* x`` and ``(1 x v)_* (u x 1)_! x``.

    Computed with the full slices of the product functors, independently of
    the slice-wise route used by :func:`canonical_mate`.
    """
    a, b = u.source, v.source
    ab2 = fc.product(a, v.target)
    a2b = fc.product(u.target, b)
    a2b2 = fc.product(u.target, v.target)
    v1 = fc.product_functor(fc.identity_functor(a), v, source=x.shape, target=ab2)
    u1 = fc.product_functor(u, fc.identity_functor(v.target), source=ab2, target=a2b2)
    u2 = fc.product_functor(u, fc.identity_functor(b), source=x.shape, target=a2b)
    v2 = fc.product_functor(fc.identity_functor(u.target), v, source=a2b, target=a2b2)
    lr = lan(u1, ran(v1, x))
    rl = ran(v2, lan(u2, x))
    return (
        {o: ca.homology_dims(lr[o]) for o in a2b2.objects},
        {o: ca.homology_dims(rl[o]) for o in a2b2.objects},
    )


# ---------------------------------------------------------------- squares

def _require_square(x: Diagram) -> None:
    if set(x.shape.objects) != {(0, 0), (1, 0), (0, 1), (1, 1)} or len(x.shape.nonidentity) != 5:
        raise fc.ShapeError("expected a diagram over the square")


def comparison_map(x: Diagram) -> ChainMap:
    """``can(X)``: the augmentation ``hocolim(X|span) -> X(1,1)``."""
    _require_square(x)
    y = restrict(x, fc.span_inclusion())
    return augmentation_map(BarComplex(y), x[(1, 1)], {c: x.arrow(c, (1, 1)) for c in y.shape.objects})


def cocomparison_map(x: Diagram) -> ChainMap:
    """``cocan(X)``: the coaugmentation ``X(0,0) -> holim(X|cospan)``."""
    _require_square(x)
    y = restrict(x, fc.cospan_inclusion())
    return coaugmentation_map(x[(0, 0)], CobarComplex(y), {c: x.arrow((0, 0), c) for c in y.shape.objects})


def is_cocartesian(x: Diagram) -> bool:
    return ca.is_quasi_iso(comparison_map(x))


def is_cartesian(x: Diagram) -> bool:
    return ca.is_quasi_iso(cocomparison_map(x))
