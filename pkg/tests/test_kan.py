import pytest

from derivators import chainalg as ca
from derivators import fincat as fc
from derivators import kan
from derivators.diagram import Diagram, constant_diagram, is_functorial, random_diagram

H = ca.homology_dims


def corner(p, at=(0, 0)):
    return Diagram(fc.square(), p, {at: ca.concentrated(p)})


def test_pushout_of_zeros_is_suspension(p):
    span = Diagram(fc.span(), p, {(0, 0): ca.concentrated(p)})
    assert H(kan.hocolim(span)) == {1: 1}
    cospan = Diagram(fc.cospan(), p, {(1, 1): ca.concentrated(p)})
    assert H(kan.holim(cospan)) == {-1: 1}


def test_bar_differential_squares_to_zero(p):
    for name in ["square", "grid", "B3"]:
        x = random_diagram(fc.standard_shape(name), 3, 10, p)
        kan.BarComplex(x).complex.check()
        kan.CobarComplex(x).complex.check()


@pytest.mark.parametrize("name", ["square", "grid", "cube"])
def test_finality_terminal_object(name, p):
    shape = fc.standard_shape(name, 3) if name == "cube" else fc.standard_shape(name)
    x = random_diagram(shape, 11, 10, p)
    assert ca.is_quasi_iso(kan.to_terminal(x))
    assert ca.is_quasi_iso(kan.from_initial(x))


def test_left_extension_along_one_is_zero_then_x(p):
    x = Diagram(fc.point(), p, {0: ca.concentrated(p, 0, 2)})
    y = kan.lan(fc.point_at(fc.chain(1), 1), x)
    assert y[0].is_zero
    assert H(y[1]) == {0: 2}


def test_right_extension_along_sieve_is_extension_by_zero(p):
    x = random_diagram(fc.span(), 5, 10, p)
    y = kan.ran(fc.span_inclusion(), x)
    assert y[(1, 1)].is_zero
    c = random_diagram(fc.cospan(), 5, 10, p)
    z = kan.lan(fc.cospan_inclusion(), c)
    assert z[(0, 0)].is_zero


@pytest.mark.parametrize("k", range(6))
def test_fully_faithful_unit_is_natural_quasi_iso(k, p):
    u = fc.fig1_inclusions()[k]
    x = random_diagram(u.source, k, 10, p)
    for res in (kan.ho_lan(u, x), kan.ho_ran(u, x)):
        assert is_functorial(res.diagram)
        assert res.comparison.is_natural()
        assert res.comparison.is_pointwise_quasi_iso()


def test_pasting_along_composable_inclusions(p):
    i1, i2 = fc.fig1_inclusions()[:2]
    x = random_diagram(i1.source, 7, 10, p)
    one = kan.lan(i1.then(i2), x)
    two = kan.lan(i2, kan.lan(i1, x))
    assert all(H(one[b]) == H(two[b]) for b in i2.target.objects)


def test_lax_mode_matches_strict_mode_on_homology(p):
    u = fc.span_inclusion()
    x = random_diagram(fc.span(), 8, 10, p)
    a, b = kan.lan(u, x), kan.lan(u, x, strict=False)
    assert all(H(a[o]) == H(b[o]) for o in fc.square().objects)
    assert is_functorial(b)


def test_detection_consistency(p):
    for s in range(5):
        assert kan.is_cocartesian(kan.lan(fc.span_inclusion(), random_diagram(fc.span(), s, 10, p)))
        assert kan.is_cartesian(kan.ran(fc.cospan_inclusion(), random_diagram(fc.cospan(), s, 10, p)))


def test_constant_and_corner_squares(p):
    c = constant_diagram(fc.square(), ca.concentrated(p, 0, 2))
    assert kan.is_cocartesian(c) and kan.is_cartesian(c)
    x = corner(p)
    assert not kan.is_cocartesian(x) and not kan.is_cartesian(x)


def test_wrong_shape_rejected(p):
    with pytest.raises(fc.ShapeError):
        kan.is_cocartesian(random_diagram(fc.span(), 0, 4, p))


def test_empty_extension_is_zero(p):
    u = fc.Functor(fc.empty(), fc.point(), {}, {}, check=False)
    z = Diagram(fc.empty(), p, {})
    assert kan.lan(u, z)[0].is_zero and kan.ran(u, z)[0].is_zero


def test_transpose_is_involutive(p):
    x = random_diagram(fc.product(fc.chain(1), fc.span()), 2, 10, p)
    y = kan.transpose(kan.transpose(x))
    assert all(y[o].equals(x[o]) for o in x.shape.objects)


def test_mate_for_identities_is_identity(p):
    a, b = fc.chain(1), fc.chain(1)
    x = random_diagram(fc.product(a, b), 4, 8, p)
    m = kan.canonical_mate(fc.identity_functor(a), fc.identity_functor(b), x)
    for o in x.shape.objects:
        assert m.mate[o].equals(ca.identity_map(x[o]))


@pytest.mark.parametrize("pair", ["pushout/pullback", "cosieve/sieve", "fans"])
def test_mate_is_natural_quasi_iso(pair, p):
    d2 = fc.discrete(2)
    u, v = {
        "pushout/pullback": (fc.span_inclusion(), fc.cospan_inclusion()),
        "cosieve/sieve": (fc.point_at(fc.chain(1), 1), fc.point_at(fc.chain(1), 0)),
        "fans": (fc.inclusion(d2, fc.cocone_on(d2)), fc.inclusion(d2, fc.cone_on(d2))),
    }[pair]
    for s in range(2):
        x = random_diagram(fc.product(u.source, v.source), s, 8, p)
        m = kan.canonical_mate(u, v, x)
        assert m.mate.is_natural() and m.mate.is_pointwise_quasi_iso()
        lr, rl = kan.commute_dims(u, v, x)
        assert lr == rl
        assert {o: H(m.lr[o]) for o in m.lr.shape.objects} == lr


def test_resource_cap(p):
    x = random_diagram(fc.standard_shape("B"), 1, 12, p)
    with kan.resource_cap(5), pytest.raises(kan.ResourceError):
        kan.hocolim(x)
