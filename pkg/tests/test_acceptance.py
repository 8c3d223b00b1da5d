"""Acceptance criteria at their stated trial counts over p in {2, 3, 7}.

Each test prints one PASS/FAIL line. The suites run once per module and are shared.
"""
import time

import pytest

from derivators import cli
from derivators import suites as S

PRIMES = (2, 3, 7)
BUDGET_LIMIT = 60
TIME_LIMIT = 300.0

CRITERIA = {
    1: ("tcof-equivalence", "total-cofiber equivalence"),
    2: ("cocartesian-vanishing", "vanishing on cocartesian squares"),
    3: ("sigma-f", "Sigma F = C and F = Omega C"),
    4: ("mate", "commuting homotopy finite (co)limits"),
    5: ("pointedness", "pointedness"),
    6: ("nonstable-witness", "non-stability witness"),
    7: ("stability-detectors", "stability detectors"),
    8: ("adjoint-chains", "adjoint chains"),
}
# minimum counts per check name prefix, per prime
MINIMUMS = {
    1: {"tcof = C(C1 X)": 100, "staged witness": 10},
    2: {"cocartesian =>": 100, "seven conditions": 100},
    3: {"Sigma F -> C": 100, "F -> Omega C": 100},
    4: {"canonical mate": 25, "commuteDims": 100},
    6: {"represented: Sigma = 0": 20},
    7: {"cocartesian <=> cartesian": 200, "generated 3-cube": 25},
    8: {"adjunction": 50, "Barratt-Puppe": 25},
}


@pytest.fixture(scope="module")
def reports():
    out = {}
    for name in S.SUITES:
        t0 = time.perf_counter()
        rep = cli.run(name, seed=0, primes=PRIMES)
        out[name] = (rep, time.perf_counter() - t0)
    return out


def _verdict(capsys, n, label, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {n} [PRIMARY] {label}: {'PASS' if ok else 'FAIL'} ({detail})")


def _counts_ok(rep, n):
    """Every listed check family reaches its minimum trial count at every prime."""
    for prefix, need in MINIMUMS.get(n, {}).items():
        for p in PRIMES:
            rows = [r for r in rep["checks"] if r["prime"] == p and r["name"].startswith(prefix)]
            if not rows or min(r["total"] for r in rows) < need:
                return False, f"{prefix!r} at p={p} below {need}"
    return True, ""


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, reports, capsys):
    suite, label = CRITERIA[n]
    rep, secs = reports[suite]
    counts, why = _counts_ok(rep, n)
    failed = [f"{r['name']} p={r['prime']}" for r in rep["checks"] if not r["ok"]]
    ok = rep["ok"] and counts and rep["budget"] <= BUDGET_LIMIT and secs < TIME_LIMIT
    detail = f"{sum(r['total'] for r in rep['checks'])} checks, {secs:.1f}s"
    if failed:
        detail += "; failing: " + ", ".join(failed[:3])
    if not counts:
        detail += "; " + why
    _verdict(capsys, n, label, ok, detail)
    assert str(rep["criterion"]) == str(n)
    assert ok, detail


def test_criterion_9_oracles_in_every_run(reports, capsys):
    rows = [r for rep, _ in reports.values() for r in rep["checks"] if r["name"].startswith("oracle:")]
    suites = {name for name, (rep, _) in reports.items() if any(r["name"].startswith("oracle:") for r in rep["checks"])}
    total = sum(r["total"] for r in rows)
    dedicated = reports["oracle-equivalence"][0]
    ok = bool(rows) and all(r["ok"] for r in rows) and dedicated["ok"]
    kinds = {r["name"] for r in rows}
    ok = ok and {"oracle: coneD ~ mapping cone", "oracle: fiberD ~ mapping fiber", "oracle: suspD ~ shift(+1)"} <= kinds
    _verdict(capsys, 9, "oracle equivalence", ok, f"{total} comparisons across {len(suites)} suites")
    assert ok
