import json

import pytest

from derivators import chainalg as ca
from derivators import cli
from derivators import fincat as fc
from derivators import suites as S
from derivators.diagram import Diagram, diagram_to_json, random_arrow, random_diagram, random_square


def write(tmp_path, obj, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


def corner_json(p=7):
    return diagram_to_json(Diagram(fc.square(), p, {(0, 0): ca.concentrated(p)}), "square")


def test_compute_examples():
    assert cli.compute("tcof", corner_json())["homology"] == {"2": 1}
    assert cli.compute("tfib", corner_json())["homology"] == {"0": 1}
    assert cli.compute("nerve", "chain")["counts"][:2] == [2, 1]
    r = cli.compute("detect", corner_json())
    assert r == {"cocartesian": False, "cartesian": False, "ok": True}
    k = ca.concentrated(7)
    span = diagram_to_json(Diagram(fc.span(), 7, {(0, 0): k}), "span")
    assert cli.compute("hocolim", span)["homology"] == {"1": 1}


@pytest.mark.parametrize("op", ["oracles", "sigma-f", "barratt-puppe"])
def test_compute_arrow_checks(op):
    x = diagram_to_json(random_arrow(3, 6, 3))
    assert cli.compute(op, x)["ok"]


@pytest.mark.parametrize("op", ["seven-conditions", "tcof-equivalence", "c-of-f2", "figure1"])
def test_compute_square_checks(op):
    x = diagram_to_json(random_square(3, 6, 3), "square")
    assert cli.compute(op, x)["ok"]


@pytest.mark.parametrize("op", ["mate", "commute-dims"])
def test_compute_mate_checks(op):
    name, u, v = S.mate_catalogue()[1]
    x = diagram_to_json(random_diagram(fc.product(u.source, v.source), 1, 6, 3))
    x["pair"] = name
    assert cli.compute(op, x)["ok"]
    x["pair"] = "nope"
    with pytest.raises(KeyError):
        cli.compute(op, x)


def test_main_compute_writes_output(tmp_path, capsys):
    out = tmp_path / "out.json"
    assert cli.main(["compute", "tcof", str(write(tmp_path, corner_json())), "-o", str(out)]) == cli.EXIT_OK
    assert json.loads(out.read_text())["homology"] == {"2": 1}


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["compute", "tcof", str(bad)]) == cli.EXIT_INPUT
    assert cli.main(["compute", "tcof", str(tmp_path / "missing.json")]) == cli.EXIT_INPUT
    assert cli.main(["compute", "tcof-acyclic", str(write(tmp_path, corner_json()))]) == cli.EXIT_FAIL
    big = diagram_to_json(random_square(0, 8, 7), "square")
    assert cli.main(["compute", "tcof", str(write(tmp_path, big)), "--max-total-dim", "1"]) == cli.EXIT_RESOURCE
    assert cli.main(["run", "--suite", "pointedness", "--prime", "4"]) == cli.EXIT_INPUT
    assert cli.main(["run", "--suite", "tcof-equivalence", "--trials", "1", "--prime", "2",
                     "--max-total-dim", "1"]) == cli.EXIT_RESOURCE
    capsys.readouterr()


def test_list(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert all(name in out for name in S.SUITES)


def test_run_is_deterministic(capsys):
    argv = ["run", "--suite", "oracle-equivalence", "--trials", "3", "--seed", "5"]
    assert cli.main(argv) == 0
    first = capsys.readouterr().out
    assert cli.main(argv) == 0
    assert capsys.readouterr().out == first
    rep = json.loads(first)
    assert rep["schema"] == cli.SCHEMA and rep["ok"] and rep["primes"] == [2, 3, 7]


def test_seed_changes_inputs():
    a = S.trial_seed(0, 7, 0)
    assert a != S.trial_seed(1, 7, 0) and a != S.trial_seed(0, 3, 0) and a != S.trial_seed(0, 7, 1)


def test_jobs_match_sequential():
    a = cli.run("sigma-f", seed=2, trials=4, primes=(3,))
    b = cli.run("sigma-f", seed=2, trials=4, primes=(3,), jobs=2)
    assert a == b


def test_markdown_output(capsys):
    assert cli.main(["run", "--suite", "pointedness", "--trials", "1", "--prime", "2", "--out", "markdown"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# Suite `pointedness`") and "**PASS**" in out


def test_failure_witness_round_trip(tmp_path, monkeypatch, capsys):
    corner = corner_json(2)

    def failing(p, seed, i, budget):
        return [S.Check("forced", False, {"op": "tcof-acyclic", "input": corner})]

    monkeypatch.setitem(S.SUITES, "forced", S.Suite("forced", 0, failing, None, 2, 4))
    wdir = tmp_path / "w"
    assert cli.main(["run", "--suite", "forced", "--prime", "2", "--witness-dir", str(wdir)]) == cli.EXIT_FAIL
    rep = json.loads(capsys.readouterr().out)
    assert rep["checks"][0]["failures"][0]["trial_seed"] == S.trial_seed(0, 2, 0)
    files = sorted(wdir.iterdir())
    assert len(files) == 2
    w = json.loads(files[0].read_text())
    inp = write(tmp_path, w["input"])
    assert cli.main(["compute", w["op"], str(inp)]) == cli.EXIT_FAIL


def test_unknown_suite():
    with pytest.raises(KeyError):
        cli.run("nope")


def test_run_examples():
    assert cli.run("tcof-equivalence", seed=1, trials=100, primes=(7,))["ok"]
    assert cli.run("pointedness", primes=(2,))["ok"]
    rep = cli.run("nonstable-witness", primes=(7,))
    dims = [(w["C(F2 X)"], w["F(C1 X)"]) for w in rep["witnesses"] if "C(F2 X)" in w]
    assert rep["ok"] and dims == [(0, 1)]
