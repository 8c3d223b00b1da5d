import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivators import chainalg as ca
from derivators import linalg


def euler(dims):
    return sum((-1) ** n * k for n, k in dims.items())


def rand_map(seed, p):
    rng = np.random.default_rng(seed)
    x = ca.random_complex(rng, p)
    y = ca.random_complex(rng, p)
    return ca.random_chain_map(rng, x, y)


seeds = st.integers(0, 2**31)
primes = st.sampled_from([2, 3, 7])


def test_d_squared_enforced():
    with pytest.raises(ca.ComplexError):
        ca.make_complex(2, {0: 1, 1: 1, 2: 1}, {1: np.array([[1]]), 2: np.array([[1]])}).check()


def test_concentrated_homology(p):
    assert ca.homology_dims(ca.concentrated(p, 3, 2)) == {3: 2}
    assert ca.is_acyclic(ca.zero_complex(p))


def test_shift_moves_homology_and_negates_differential(p):
    x = ca.random_complex(np.random.default_rng(5), p)
    s = ca.shift(x, 1)
    assert ca.homology_dims(s) == {n + 1: k for n, k in ca.homology_dims(x).items()}
    for n, d in x.d.items():
        assert np.array_equal(s.diff(n + 1), linalg.reduce(-d, p))


@given(seeds, primes)
def test_cone_long_exact_sequence_euler(seed, p):
    f = rand_map(seed, p)
    c = ca.mapping_cone(f)
    c.check()
    h = ca.homology_dims
    assert euler(h(c)) == euler(h(f.target)) - euler(h(f.source))


@given(seeds, primes)
def test_cone_of_identity_is_acyclic(seed, p):
    x = ca.random_complex(np.random.default_rng(seed), p)
    assert ca.is_acyclic(ca.mapping_cone(ca.identity_map(x)))
    assert ca.is_acyclic(ca.mapping_fiber(ca.identity_map(x)))


@given(seeds, primes)
def test_fiber_is_shifted_cone(seed, p):
    f = rand_map(seed, p)
    a = ca.homology_dims(ca.mapping_fiber(f))
    b = ca.homology_dims(ca.shift(ca.mapping_cone(f), -1))
    assert a == b


@given(seeds, primes)
def test_quasi_iso_detectors_agree(seed, p):
    f = rand_map(seed, p)
    assert ca.is_quasi_iso(f) == ca.is_quasi_iso_via_homology(f)


@given(seeds, primes)
def test_cone_inclusion_and_projection_are_chain_maps(seed, p):
    f = rand_map(seed, p)
    i, q = ca.cone_inclusion(f), ca.cone_projection(f)
    assert i.is_chain_map() and q.is_chain_map()
    assert ca.compose(q, i).equals(ca.zero_map(f.target, q.target))


def test_cone_functor_is_a_chain_map(p):
    rng = np.random.default_rng(3)
    x = ca.random_complex(rng, p)
    y = ca.random_complex(rng, p)
    f = ca.random_chain_map(rng, x, y)
    a = ca.identity_map(x)
    b = ca.identity_map(y)
    m = ca.cone_functor(f, f, a, b)
    assert m.is_chain_map() and ca.is_quasi_iso(m)


def test_direct_sum_and_json(p):
    rng = np.random.default_rng(9)
    x, y = ca.random_complex(rng, p), ca.random_complex(rng, p)
    s = ca.direct_sum([x, y])
    hx, hy, hs = ca.homology_dims(x), ca.homology_dims(y), ca.homology_dims(s)
    for n in set(hx) | set(hy):
        assert hs.get(n, 0) == hx.get(n, 0) + hy.get(n, 0)
    back = ca.complex_from_json(ca.complex_to_json(s))
    assert back.equals(s)
    f = ca.identity_map(s)
    assert ca.map_from_json(ca.map_to_json(f), s, s).equals(f)
