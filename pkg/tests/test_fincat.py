import itertools

import pytest

from derivators import fincat as fc


def test_shape_sizes():
    assert len(fc.square().objects) == 4
    assert len(fc.span().objects) == 3
    assert len(fc.grid().objects) == 6
    assert len(fc.cube(3).objects) == 8
    assert len(fc.standard_shape("B").objects) == 15


def test_nerve_counts():
    assert fc.nerve_counts(fc.chain(1)) == [2, 1]
    assert fc.nerve_counts(fc.square()) == [4, 5, 2]
    assert fc.nerve_counts(fc.span()) == [3, 2]


def test_composition_is_associative_on_all_shapes():
    for cat in [fc.square(), fc.grid(), fc.cube(3), fc.standard_shape("B")]:
        for f, g, h in itertools.product(cat.nonidentity, repeat=3):
            if cat.dst(f) == cat.src(g) and cat.dst(g) == cat.src(h):
                assert cat.compose(h, cat.compose(g, f)) == cat.compose(cat.compose(h, g), f)


def test_sieves_and_cosieves():
    assert fc.span_inclusion().is_sieve()
    assert not fc.span_inclusion().is_cosieve()
    assert fc.cospan_inclusion().is_cosieve()
    c1 = fc.chain(1)
    assert fc.point_at(c1, 0).is_sieve() and fc.point_at(c1, 1).is_cosieve()


def test_fig1_chain_is_fully_faithful_and_composes_to_embedding():
    incs = fc.fig1_inclusions()
    assert all(u.is_fully_faithful() for u in incs)
    for a, b in zip(incs, incs[1:]):
        assert a.target.objects == b.source.objects
    e = fc.fig1_embedding()
    assert e((1, 1)) == (1, 2, 0)


def test_slices_over_and_under():
    u = fc.span_inclusion()
    over = fc.Slice(u, (1, 1), over=True)
    assert len(over.category.objects) == 3
    assert fc.nerve_counts(over.category) == [3, 2]
    under = fc.Slice(u, (1, 1), over=False)
    assert len(under.category.objects) == 0
    top = fc.Slice(u, (1, 0), over=True)
    assert fc.nerve_counts(top.category) == [2, 1]


def test_slice_functor_is_a_functor():
    u = fc.span_inclusion()
    s1 = fc.Slice(u, (1, 0)).category
    s2 = fc.Slice(u, (1, 1)).category
    beta = fc.square().hom((1, 0), (1, 1))[0]
    w = fc.slice_functor(u, s1, s2, beta)
    for (g, f), gf in s1.table.items():
        assert s2.compose(w.on_mor(g), w.on_mor(f)) == w.on_mor(gf)


def test_product_and_functors():
    p = fc.product(fc.chain(1), fc.span())
    assert len(p.objects) == 6
    uu = fc.product_functor(fc.span_inclusion(), fc.identity_functor(fc.chain(1)))
    assert uu.is_fully_faithful()


def test_homotopy_finiteness():
    assert fc.is_strictly_homotopy_finite(fc.cube(3))
    loop = fc.FinCat([0], {"id": (0, 0), "e": (0, 0)}, {0: "id"}, {("e", "e"): "e"}, check=False)
    assert not fc.is_strictly_homotopy_finite(loop)


def test_cube_dimension_cap():
    with pytest.raises(fc.ShapeError):
        fc.cube(4)


def test_json_roundtrip():
    for cat in [fc.square(), fc.standard_shape("B3")]:
        back = fc.category_from_json(fc.category_to_json(cat))
        assert set(back.objects) == set(cat.objects)
        assert len(back.nonidentity) == len(cat.nonidentity)
    with pytest.raises(fc.CategoryError):
        fc.category_from_json({"objects": [0]})
    with pytest.raises(fc.ShapeError):
        fc.standard_shape("no-such-shape")
