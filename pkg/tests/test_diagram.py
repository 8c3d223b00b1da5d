import json

import pytest

from derivators import chainalg as ca
from derivators import fincat as fc
from derivators.diagram import (
    Diagram,
    DiagramError,
    cell,
    diagram_from_json,
    diagram_to_json,
    is_functorial,
    random_diagram,
    restrict,
)


@pytest.mark.parametrize("name", ["square", "span", "grid", "B"])
def test_random_diagrams_are_functorial(name, p):
    shape = fc.standard_shape(name)
    for s in range(5):
        x = random_diagram(shape, s, 12, p)
        assert is_functorial(x)
        assert x.total_dim <= 12


def test_random_diagram_is_seeded(p):
    a = random_diagram(fc.square(), 4, 10, p)
    b = random_diagram(fc.square(), 4, 10, p)
    assert json.dumps(diagram_to_json(a), sort_keys=True) == json.dumps(diagram_to_json(b), sort_keys=True)


def test_restriction_commutes_with_composition(p):
    x = random_diagram(fc.standard_shape("B"), 2, 12, p)
    incs = fc.fig1_inclusions()
    u = incs[4].then(incs[5])
    y = restrict(restrict(x, incs[5]), incs[4])
    z = restrict(x, u)
    assert all(y[a].equals(z[a]) for a in u.source.objects)
    assert all(y.map(m).equals(z.map(m)) for m in u.source.nonidentity)


def test_free_cell_has_hom_dimensions():
    x = cell(fc.square(), (0, 0), 7, degree=1)
    assert all(x[a].dims == {1: 1} for a in fc.square().objects)
    s = cell(fc.square(), (1, 0), 7, kind="simple")
    assert s[(1, 1)].is_zero and s[(1, 0)].dims == {0: 1}


def test_json_roundtrip_and_errors(p):
    x = random_diagram(fc.square(), 1, 10, p)
    y = diagram_from_json(json.loads(json.dumps(diagram_to_json(x, "square"))))
    for a in x.shape.objects:
        assert y[a].equals(x[a])
    bad = diagram_to_json(x, "square")
    bad["objects"]['[5, 5]'] = ca.complex_to_json(ca.concentrated(p))
    with pytest.raises(DiagramError):
        diagram_from_json(bad)


def test_non_functorial_input_rejected():
    k = ca.concentrated(7)
    one = ca.identity_map(k)
    sq = fc.square()
    vals = {a: k for a in sq.objects}
    maps = {m: one for m in sq.nonidentity}
    maps[((0, 0), (1, 1))] = ca.zero_map(k, k)
    obj = diagram_to_json(Diagram(sq, 7, vals, maps), "square")
    with pytest.raises(DiagramError):
        diagram_from_json(obj)
