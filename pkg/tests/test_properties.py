"""Property tests over seeded random inputs; hypothesis drives seed, prime and size."""
import json

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from derivators import chainalg as ca
from derivators import cli
from derivators import derops as do
from derivators import fincat as fc
from derivators import kan
from derivators import linalg
from derivators import repmodel as rm
from derivators.diagram import constant_diagram, is_functorial, random_arrow, random_diagram, random_square, restrict

seeds = st.integers(0, 2**31 - 1)
primes = st.sampled_from([2, 3, 7])
budgets = st.integers(2, 8)
H = ca.homology_dims
FAST = settings(max_examples=25, deadline=None)
SLOW = settings(max_examples=10, deadline=None)


@FAST
@given(seeds, primes, st.sampled_from(["square", "span", "cospan", "grid"]))
def test_random_diagrams_are_functorial(seed, p, name):
    x = random_diagram(fc.standard_shape(name), seed, 6, p)
    assert is_functorial(x)
    for a in x.shape.objects:
        c = x[a]
        for n in c.dims:
            assert not linalg.matmul(c.diff(n), c.diff(n + 1), p).any()


@FAST
@given(seeds, primes)
def test_restriction_composes(seed, p):
    incs = fc.fig1_inclusions()
    x = random_diagram(incs[5].target, seed, 5, p)
    y = restrict(restrict(x, incs[5]), incs[4])
    z = restrict(x, incs[4].then(incs[5]))
    assert all(y[a].equals(z[a]) for a in y.shape.objects)
    assert all(y.map(m).equals(z.map(m)) for m in y.shape.nonidentity)


@FAST
@given(seeds, primes)
def test_constant_restricts_to_constant(seed, p):
    rng = np.random.default_rng(seed)
    k = ca.random_complex(rng, p)
    y = restrict(constant_diagram(fc.square(), k), fc.span_inclusion())
    assert all(y[a].equals(k) for a in y.shape.objects)
    assert all(y.map(m).equals(ca.identity_map(k)) for m in y.shape.nonidentity)


@FAST
@given(seeds, primes)
def test_quasi_iso_detectors_agree(seed, p):
    rng = np.random.default_rng(seed)
    x, y = ca.random_complex(rng, p), ca.random_complex(rng, p)
    f = ca.random_chain_map(rng, x, y)
    assert ca.is_quasi_iso(f) == ca.is_quasi_iso_via_homology(f)


@SLOW
@given(seeds, primes, budgets)
def test_tcof_equals_iterated_cones(seed, p, b):
    x = random_square(seed, b, p)
    assert H(do.total_cofiber(x)) == H(do.iterated_cone(x, 1)) == H(do.iterated_cone(x, 2))


@SLOW
@given(seeds, primes, budgets)
def test_seven_conditions_and_detection(seed, p, b):
    x = random_square(seed, b, p)
    sc = do.seven_conditions(x)
    assert len(set(sc.values())) == 1
    assert kan.is_cocartesian(x) == kan.is_cartesian(x)


@SLOW
@given(seeds, primes, budgets)
def test_extended_squares_are_bicartesian(seed, p, b):
    y = random_diagram(fc.span(), seed, b, p)
    x = kan.lan(fc.span_inclusion(), y)
    assert kan.is_cocartesian(x)
    assert ca.is_acyclic(do.total_cofiber(x)) and ca.is_acyclic(do.total_fiber(x))
    z = random_diagram(fc.cospan(), seed, b, p)
    assert kan.is_cartesian(kan.ran(fc.cospan_inclusion(), z))


@FAST
@given(seeds, primes, budgets)
def test_oracle_equivalence(seed, p, b):
    f = random_arrow(seed, b, p)
    assert ca.is_quasi_iso(do.cone_comparison(f)) and ca.is_quasi_iso(do.fiber_comparison(f))


@FAST
@given(seeds, primes)
def test_suspension_loop_inverse(seed, p):
    x = ca.random_complex(np.random.default_rng(seed), p)
    assert H(do.susp_d(do.loop_d(x))) == H(x) == H(do.loop_d(do.susp_d(x)))


@SLOW
@given(seeds, primes, budgets)
def test_cone_preserves_fiber(seed, p, b):
    x = random_square(seed, b, p)
    assert H(do.c_of_f2(x)) == H(do.f_of_c1(x))


@FAST
@given(seeds, primes, budgets)
def test_represented_tcof_equals_iterated(seed, p, b):
    x = rm.random_vect(fc.square(), seed, b, p)
    assert rm.tcof_vect(x) == rm.iterated_cone_vect(x, 1) == rm.iterated_cone_vect(x, 2)


@FAST
@given(seeds, primes, budgets)
def test_represented_pushouts_have_iso_cokernels(seed, p, b):
    x = rm.pushout_square_vect(seed, b, p)
    assert all(rm.is_iso(rm.partial_cone_vect(x, d).maps[(0, 1)], p) for d in (1, 2))


@FAST
@given(seeds, primes, budgets)
def test_represented_suspension_vanishes(seed, p, b):
    f = rm.random_vect(fc.chain(1), seed, b, p)
    sf, c = rm.sigma_f_versus_c(f)
    assert sf == 0 and (c == 0) == (sf == c)


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 1000), primes)
def test_reports_are_reproducible(seed, p):
    a = cli.run("oracle-equivalence", seed=seed, trials=2, primes=(p,))
    b = cli.run("oracle-equivalence", seed=seed, trials=2, primes=(p,))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
