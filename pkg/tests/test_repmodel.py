import numpy as np
import pytest

from derivators import fincat as fc
from derivators import linalg
from derivators import repmodel as rm
from derivators.vect import VectDiagram, hom_dim, random_hom


def test_colim_and_lim_examples(p):
    assert rm.colim_vect(rm.vect_point(3, p)).dim == 3
    assert rm.colim_vect(VectDiagram(fc.span(), p, {(0, 0): 1})).dim == 0
    assert rm.lim_vect(VectDiagram(fc.cospan(), p, {(1, 1): 1})).dim == 0
    assert rm.colim_vect(VectDiagram(fc.discrete(2), p, {0: 1, 1: 2})).dim == 3


def test_colim_universal_property_on_generators(p):
    rng = np.random.default_rng(0)
    x = rm.random_vect(fc.span(), 3, 8, p)
    c = rm.colim_vect(x)
    z = rm.vect_point(2, p)
    # a cocone through the colimit factors uniquely
    m = linalg.random_matrix(rng, 2, c.dim, p)
    legs = {a: linalg.matmul(m, c.leg(a), p) for a in x.shape.objects}
    zc = rm.Colim(z, linalg.eye(2), {0: 0})
    back = rm.colim_induced(c, zc, {a: 0 for a in x.shape.objects}, legs)
    assert np.array_equal(back, m)


def test_kan_along_one_and_zero(p):
    k = rm.vect_point(1, p)
    c1 = fc.chain(1)
    l = rm.vect_kan(fc.point_at(c1, 1), k, "left").diagram
    assert (l.dims[0], l.dims[1]) == (0, 1)
    r = rm.vect_kan(fc.point_at(c1, 0), k, "right").diagram
    assert (r.dims[0], r.dims[1]) == (1, 0)


def test_kan_results_are_functorial(p):
    for u in fc.fig1_inclusions()[:3]:
        x = rm.random_vect(u.source, 2, 8, p)
        for side in ("left", "right"):
            rm.vect_kan(u, x, side).diagram.check()


def test_stable_failure_witness(p):
    w = rm.stable_failure_witness(1, p)
    assert (w.c_of_f2, w.f_of_c1, w.susp_x) == (0, 1, 0)
    assert w.is_witness
    w0 = rm.stable_failure_witness(0, p)
    assert (w0.c_of_f2, w0.f_of_c1) == (0, 0)


def test_suspension_vanishes(p):
    for d in range(5):
        assert rm.susp_vect(rm.vect_point(d, p)) == 0
        assert rm.loop_vect(rm.vect_point(d, p)) == 0


def test_sigma_f_versus_c(p):
    sf, c = rm.sigma_f_versus_c(rm.vect_arrow(np.ones((1, 0), dtype=np.int64), p))
    assert (sf, c) == (0, 1)


def test_cone_and_fiber_are_cokernel_and_kernel(p):
    rng = np.random.default_rng(4)
    for _ in range(10):
        m = linalg.random_matrix(rng, int(rng.integers(0, 4)), int(rng.integers(0, 4)), p)
        f = rm.vect_arrow(m, p)
        r = linalg.rank(m, p)
        assert rm.cone_vect(f) == m.shape[0] - r
        assert rm.fiber_vect(f) == m.shape[1] - r


def test_total_cofiber_equals_iterated_cones(p):
    for s in range(15):
        x = rm.random_vect(fc.square(), s, 8, p)
        x.check()
        assert rm.tcof_vect(x) == rm.iterated_cone_vect(x, 1) == rm.iterated_cone_vect(x, 2)


def test_pushout_squares_have_iso_cokernel_maps(p):
    for s in range(10):
        x = rm.pushout_square_vect(s, 8, p)
        for d in (1, 2):
            assert rm.is_iso(rm.partial_cone_vect(x, d).maps[(0, 1)], p)


def test_mate_witness(p):
    lr, rl = rm.mate_failure_witness(p)
    assert lr[((1, 1), (0, 0))] == 0 and rl[((1, 1), (0, 0))] == 1


def test_pointedness(p):
    assert rm.empty_extension_dims(p) == (0, 0)
    assert rm.finite_sets_empty_contrast() == (0, 1)
    for _, u, v in rm.pointedness_catalogue():
        x = rm.random_vect(fc.product(u.source, v.source), 1, 6, p)
        a, b = rm.commute_dims_vect(u, v, x)
        assert a == b


@pytest.mark.parametrize("pair", rm.ADJUNCTION_NAMES)
def test_adjunctions(pair, p):
    r = rm.adjunction_dims(pair, trials=5, seed=2, p=p)
    assert r.ok, r.failures


def test_cone_adjunction_by_hand(p):
    # Hom(Cf, z) = Hom(f, 1_! z) for f = (k -> k^2)
    f = rm.vect_arrow(np.array([[1], [0]]), p)
    z = rm.vect_point(2, p)
    cf = rm.vect_point(rm.cone_vect(f), p)
    one_z = rm.vect_kan(fc.point_at(fc.chain(1), 1), z, "left").diagram
    assert hom_dim(cf, z) == hom_dim(f, one_z) == 2


def test_unknown_adjunction():
    with pytest.raises(KeyError):
        rm.adjunction_dims("nope")


def test_non_extension_witness(p):
    assert rm.non_extension_witness(p).is_witness
