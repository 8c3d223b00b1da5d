"""Seeded verification suites, one per acceptance criterion.

A suite runs a per-trial function for every (prime, trial) pair plus a set of
catalogue checks once per prime.  Every generated morphism is also pushed
through the cone and fiber oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import chainalg as ca
from . import derops as do
from . import fincat as fc
from . import kan
from . import repmodel as rm
from .diagram import Diagram, diagram_to_json, from_graded, random_arrow, random_diagram, random_square


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict | None = None  # {"op": compute op, "input": diagram JSON, ...}
    info: dict | None = None


@dataclass
class Suite:
    name: str
    criterion: str
    trial: Callable[[int, int, int, int], list[Check]]
    once: Callable[[int, int], list[Check]] | None
    trials: int
    budget: int


def _witness(op: str, x: Diagram, **extra) -> dict:
    out = {"op": op, "input": diagram_to_json(x)}
    out.update(extra)
    return out


# ---------------------------------------------------------------- oracles

def oracle_checks(f: Diagram) -> list[Check]:
    """``coneD ~ mappingCone``, ``fiberD ~ mappingFiber``, ``suspD ~ shift``, ``loopD ~ shift``."""
    x = f[0]
    pairs = [
        ("oracle: coneD ~ mapping cone", lambda: do.cone_comparison(f)),
        ("oracle: fiberD ~ mapping fiber", lambda: do.fiber_comparison(f)),
        ("oracle: suspD ~ shift(+1)", lambda: do.susp_comparison(x)),
        ("oracle: loopD ~ shift(-1)", lambda: do.loop_comparison(x)),
    ]
    out = []
    for name, make in pairs:
        m = make()
        ok = m.is_chain_map() and ca.is_quasi_iso(m)
        out.append(Check(name, ok, None if ok else _witness("oracles", f)))
    return out


# ---------------------------------------------------------------- 1. total cofibers

FIG1_TRIALS = 10


def _t_tcof(p: int, seed: int, i: int, budget: int) -> list[Check]:
    x = random_square(seed, budget, p)
    t = ca.homology_dims(do.total_cofiber(x))
    c1 = ca.homology_dims(do.iterated_cone(x, 1))
    c2 = ca.homology_dims(do.iterated_cone(x, 2))
    ok = t == c1 == c2
    out = [Check("tcof = C(C1 X) = C(C2 X) on homology", ok, None if ok else _witness("tcof-equivalence", x))]
    if i < FIG1_TRIALS:
        w = do.figure1_witness(x, strict=False)
        out.append(Check("staged witness audit flags", w.ok, None if w.ok else _witness("figure1", x)))
        maps = w.to_tcof + w.to_iterated
        qis = all(ca.is_quasi_iso(m) for _, m in maps) and w.iterated_dims_match
        out.append(Check("staged witness explicit quasi-isos", qis, None if qis else _witness("figure1", x)))
    out += oracle_checks(do._edge(x, (0, 0), (1, 0)))
    return out


# ---------------------------------------------------------------- 2. cocartesian squares

def _t_cocart(p: int, seed: int, i: int, budget: int) -> list[Check]:
    sp = random_diagram(fc.span(), seed, budget, p)
    x = kan.lan(fc.span_inclusion(), sp)
    an = do.analyze_square(x)
    out = [
        Check("generated square cocartesian", an.cocartesian, None if an.cocartesian else _witness("is-cocartesian", x)),
        Check("cocartesian => tcof acyclic", ca.is_acyclic(an.tcof), None if ca.is_acyclic(an.tcof) else _witness("tcof-acyclic", x)),
    ]
    both = ca.is_quasi_iso(do.arrow_map(an.c1)) and ca.is_quasi_iso(do.arrow_map(an.c2))
    out.append(Check("cocartesian => C1, C2 quasi-isos", both, None if both else _witness("seven-conditions", x)))
    y = random_square(seed + 1, budget, p)
    sc = do.seven_conditions(y)
    agree = len(set(sc.values())) == 1
    out.append(Check("seven conditions coincide", agree, None if agree else _witness("seven-conditions", y, values=sc)))
    out += oracle_checks(do._edge(y, (0, 0), (1, 0)))
    return out


# ---------------------------------------------------------------- 3. Sigma F and C

def _t_sigma(p: int, seed: int, i: int, budget: int) -> list[Check]:
    f = random_arrow(seed, budget, p)
    g = do.sigma_f_grid(f)
    a, b = ca.is_quasi_iso(g.sigma_f_to_c), ca.is_quasi_iso(g.f_to_omega_c)
    return [
        Check("Sigma F -> C quasi-iso", a, None if a else _witness("sigma-f", f)),
        Check("F -> Omega C quasi-iso", b, None if b else _witness("sigma-f", f)),
    ] + oracle_checks(f)


def _o_sigma(p: int, budget: int) -> list[Check]:
    f = rm.vect_arrow(np.ones((1, 0), dtype=np.int64), p)
    sf, c = rm.sigma_f_versus_c(f)
    return [Check("represented: Sigma F = 0 while C != 0 on 0 -> k", sf == 0 and c != 0, info={"sigma_f": sf, "c": c})]


# ---------------------------------------------------------------- 4. mates

def mate_catalogue() -> list[tuple[str, fc.Functor, fc.Functor]]:
    """``(name, u for the left extension, v for the right extension)``."""
    c1, d2 = fc.chain(1), fc.discrete(2)
    return [
        ("pushout/pullback", fc.span_inclusion(), fc.cospan_inclusion()),
        ("cosieve/sieve", fc.point_at(c1, 1), fc.point_at(c1, 0)),
        ("finite fans", fc.inclusion(d2, fc.cocone_on(d2)), fc.inclusion(d2, fc.cone_on(d2))),
    ]


MATE_TRIALS = 25


def _t_mate(p: int, seed: int, i: int, budget: int) -> list[Check]:
    out = []
    cat = mate_catalogue()
    name, u, v = cat[i % len(cat)]
    x = random_diagram(fc.product(u.source, v.source), seed, budget, p)
    lr, rl = kan.commute_dims(u, v, x)
    out.append(Check("commuteDims tables equal", lr == rl, None if lr == rl else _witness("commute-dims", x, pair=name)))
    if i < MATE_TRIALS * len(cat):
        m = kan.canonical_mate(u, v, x)
        ok = m.mate.is_natural() and m.mate.is_pointwise_quasi_iso()
        out.append(Check(f"canonical mate natural quasi-iso ({name})", ok, None if ok else _witness("mate", x, pair=name)))
    return out


def _o_mate(p: int, budget: int) -> list[Check]:
    w = rm.mate_witness_diagram(p)
    lr, rl = rm.commute_dims_vect(fc.span_inclusion(), fc.cospan_inclusion(), w)
    diff = {str(k): [lr[k], rl[k]] for k in lr if lr[k] != rl[k]}
    x = from_graded(w.shape, p, {0: w}, {})
    m = kan.canonical_mate(fc.span_inclusion(), fc.cospan_inclusion(), x)
    ok = m.mate.is_natural() and m.mate.is_pointwise_quasi_iso()
    return [
        Check("represented: pushout and pullback fail to commute on witness", bool(diff), info={"differences": diff}),
        Check("stable: mate on the same witness is a quasi-iso", ok),
    ]


# ---------------------------------------------------------------- 5. pointedness

def _o_point(p: int, budget: int) -> list[Check]:
    e = fc.empty()
    u = fc.Functor(e, fc.point(), {}, {}, check=False)
    z = Diagram(e, p, {})
    lan0, ran0 = kan.lan(u, z)[0], kan.ran(u, z)[0]
    cv, lv = rm.empty_extension_dims(p)
    sets = rm.finite_sets_empty_contrast()
    return [
        Check("stable: empty colimit = empty limit = 0", lan0.is_zero and ran0.is_zero),
        Check("represented: empty colimit = empty limit = 0", cv == lv == 0, info={"colim": cv, "lim": lv}),
        Check("finite sets contrast: initial != final", sets[0] != sets[1], info={"initial": sets[0], "final": sets[1]}),
    ]


def _t_point(p: int, seed: int, i: int, budget: int) -> list[Check]:
    out = []
    for name, u, v in rm.pointedness_catalogue():
        shape = fc.product(u.source, v.source)
        x = random_diagram(shape, seed, budget, p)
        lr, rl = kan.commute_dims(u, v, x)
        out.append(Check("stable: cosieve Lan and sieve Ran commute", lr == rl, None if lr == rl else _witness("commute-dims", x, pair=name)))
        zl, zr = kan.lan(u, random_diagram(u.source, seed, budget, p)), kan.ran(v, random_diagram(v.source, seed, budget, p))
        genuine = all(zl[b].is_zero for b in u.target.objects if b not in u.image) and all(
            zr[b].is_zero for b in v.target.objects if b not in v.image
        )
        out.append(Check("stable: extension by zero is genuinely zero", genuine))
        xv = rm.random_vect(shape, seed, max(2, budget // 2), p)
        a, b = rm.commute_dims_vect(u, v, xv)
        out.append(Check("represented: cosieve Lan and sieve Ran commute", a == b))
        zv = rm.vect_kan(u, rm.random_vect(u.source, seed, 4, p), "left").diagram
        out.append(Check("represented: extension by zero is zero", all(zv.dims[b] == 0 for b in u.target.objects if b not in u.image)))
    return out


# ---------------------------------------------------------------- 6. non-stability witness

def _o_nonstable(p: int, budget: int) -> list[Check]:
    w = rm.stable_failure_witness(1, p)
    w0 = rm.stable_failure_witness(0, p)
    k = ca.concentrated(p, 0, 1)
    sq = do.loop_witness_square(k)
    cf, fc1 = ca.homology_dims(do.c_of_f2(sq)), ca.homology_dims(do.f_of_c1(sq))
    return [
        Check("represented: dim C(F2 X) = 0 != 1 = dim F(C1 X)", w.c_of_f2 == 0 and w.f_of_c1 == 1,
              info={"C(F2 X)": w.c_of_f2, "F(C1 X)": w.f_of_c1}),
        Check("represented: x = 0 degenerate case vanishes", w0.c_of_f2 == w0.f_of_c1 == 0),
        Check("stable: Sigma Omega k ~ k on the same square", cf == fc1 == ca.homology_dims(k)),
    ]


def _t_nonstable(p: int, seed: int, i: int, budget: int) -> list[Check]:
    rng = np.random.default_rng(seed)
    d = int(rng.integers(0, 6))
    s = rm.susp_vect(rm.vect_point(d, p))
    out = [Check("represented: Sigma = 0", s == 0, info={"dim": d})]
    xv = rm.random_vect(fc.square(), seed, max(2, budget // 2), p)
    t, i1, i2 = rm.tcof_vect(xv), rm.iterated_cone_vect(xv, 1), rm.iterated_cone_vect(xv, 2)
    out.append(Check("represented: tcof = iterated cones", t == i1 == i2))
    x = random_square(seed, budget, p)
    ok = ca.homology_dims(do.c_of_f2(x)) == ca.homology_dims(do.f_of_c1(x))
    out.append(Check("stable: C(F2 X) ~ F(C1 X)", ok, None if ok else _witness("c-of-f2", x)))
    return out


# ---------------------------------------------------------------- 7. stability detectors

CUBE_TRIALS = 25


def _t_detect(p: int, seed: int, i: int, budget: int) -> list[Check]:
    if i % 2:
        x = do.cof_square(random_arrow(seed, budget // 2, p))
    else:
        x = random_square(seed, budget, p)
    a, b = kan.is_cocartesian(x), kan.is_cartesian(x)
    out = [Check("cocartesian <=> cartesian", a == b, None if a == b else _witness("detect", x))]
    out += oracle_checks(do._edge(x, (0, 0), (1, 0)))
    if i < CUBE_TRIALS:
        for n in (2, 3):
            c = do.make_strongly_cocartesian_cube(seed, n, budget, p)
            sc, sk = do.strongly_cocartesian_check(c), do.strongly_cartesian_check(c)
            out.append(Check(f"generated {n}-cube strongly cocartesian", sc))
            out.append(Check(f"generated {n}-cube strongly cartesian", sk))
    return out


# ---------------------------------------------------------------- 8. adjoint chains

BP_TRIALS = 25


def _t_adjoint(p: int, seed: int, i: int, budget: int) -> list[Check]:
    out = []
    for name in rm.ADJUNCTION_NAMES:
        r = rm.adjunction_dims(name, trials=1, seed=seed, p=p, budget=max(2, budget // 2))
        out.append(Check(f"adjunction {name}: dims, bijection, naturality", r.ok, info=None if r.ok else {"failures": r.failures}))
    if i < BP_TRIALS:
        f = random_arrow(seed, max(2, budget // 2), p)
        bp = do.barratt_puppe(f, 3)
        for label, ok in (("bicartesian", bp.bicartesian()), ("boundary acyclic", bp.boundary_acyclic()), ("entry(n+3) ~ Sigma entry(n)", bp.periodic())):
            out.append(Check(f"Barratt-Puppe {label}", ok, None if ok else _witness("barratt-puppe", f)))
        out += oracle_checks(f)
    return out


def _o_adjoint(p: int, budget: int) -> list[Check]:
    w = rm.non_extension_witness(p)
    return [Check("non-extension witness: C does not preserve F", w.is_witness, info={"C(F2 X)": w.c_of_f2, "F(C1 X)": w.f_of_c1})]


# ---------------------------------------------------------------- 9. oracle equivalence

def _t_oracle(p: int, seed: int, i: int, budget: int) -> list[Check]:
    f = random_arrow(seed, budget, p)
    out = oracle_checks(f)
    x = f[1]
    sl = ca.homology_dims(do.susp_d(do.loop_d(x)))
    ls = ca.homology_dims(do.loop_d(do.susp_d(x)))
    h = ca.homology_dims(x)
    out.append(Check("suspD loopD ~ id and loopD suspD ~ id on homology", sl == ls == h))
    return out


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("tcof-equivalence", "1", _t_tcof, None, 100, 10),
        Suite("cocartesian-vanishing", "2", _t_cocart, None, 100, 10),
        Suite("sigma-f", "3", _t_sigma, _o_sigma, 100, 6),
        Suite("mate", "4", _t_mate, _o_mate, 100, 8),
        Suite("pointedness", "5", _t_point, _o_point, 10, 6),
        Suite("nonstable-witness", "6", _t_nonstable, _o_nonstable, 20, 8),
        Suite("stability-detectors", "7", _t_detect, None, 200, 10),
        Suite("adjoint-chains", "8", _t_adjoint, _o_adjoint, 50, 8),
        Suite("oracle-equivalence", "9", _t_oracle, None, 100, 8),
    ]
}


def trial_seed(seed: int, p: int, i: int) -> int:
    return int(np.random.SeedSequence([seed, p, i]).generate_state(1)[0])


def run_trial(suite: str, p: int, seed: int, i: int, budget: int) -> list[Check]:
    return SUITES[suite].trial(p, trial_seed(seed, p, i), i, budget)


def run_once(suite: str, p: int, budget: int) -> list[Check]:
    s = SUITES[suite]
    return s.once(p, budget) if s.once else []
